#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lplab/mazur.hpp"

namespace lplab {

enum class MapKind {
  NcMazur,          // S_1 sphere -> S_2, matrix square-root map
  NcMazurInverse,   // S_2 sphere -> S_1
  ClassicalTwoOne,  // l_2 ball -> l_1, coordinatewise square map
  ClassicalOneTwo,  // l_1 ball -> l_2
};

std::string map_kind_name(MapKind k);

/// Empirical modulus of continuity: for each grid value t, the largest output
/// distance observed among sampled pairs at input distance <= t. The envelope
/// is monotone nondecreasing by construction.
struct ModulusOfContinuity {
  MapKind kind = MapKind::NcMazur;
  std::vector<double> grid;      // input distances, increasing
  std::vector<double> envelope;  // sup observed output distance per bin

  /// Envelope at the smallest grid point >= t; nullopt when t exceeds the grid.
  std::optional<double> query(double t) const;
};

struct ModulusConfig {
  std::size_t samples = 2000;
  Eigen::Index dim = 8;
  std::size_t grid_size = 48;
  double t_min = 1e-6;
  double t_max = 2.2;
};

ModulusOfContinuity estimate_modulus(MapKind kind, const ModulusConfig& cfg, Rng& rng);

}  // namespace lplab
