#pragma once

#include <string>

#include "lplab/concentration.hpp"
#include "lplab/inequalities.hpp"
#include "lplab/json_io.hpp"

namespace lplab {

inline constexpr const char* kToolVersion = "1.0.0";

/// Shared knobs for every experiment; the seed is embedded in each report and
/// fully determines the output bytes.
struct RunConfig {
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> primes{2, 3};
  double p = 2.0;
  std::uint64_t trials = 1000;
  Eigen::Index dim = 8;
  std::size_t group_cap = 1'000'000;
  std::uint32_t plane_cap = 13;
};

struct ExperimentResult {
  std::string json;  // deterministic report, byte-identical per (config, seed)
  std::string csv;   // tabular companion; empty when not applicable
  bool ok = false;   // every assertion inside the experiment passed
};

ExperimentResult experiment_plane(std::uint32_t l, const RunConfig& cfg);
ExperimentResult experiment_group(std::uint32_t l, const RunConfig& cfg);
ExperimentResult experiment_spectral(std::uint32_t l, const RunConfig& cfg);
ExperimentResult experiment_spectral_graph(const Graph& g, const std::string& name,
                                           const RunConfig& cfg);
ExperimentResult experiment_mazur(const RunConfig& cfg);
ExperimentResult experiment_lemma21(const RunConfig& cfg);
ExperimentResult experiment_remark22(const RunConfig& cfg, Eigen::Index rows,
                                     Eigen::Index cols);
ExperimentResult experiment_coarea(const RunConfig& cfg);
/// mode: "l1" | "median" | "banach"; cloud: "auto" | "constant" | "random" |
/// "orbit" | "oversized" (the last violates the unit ball and is rejected by
/// the banach mode).
ExperimentResult experiment_concentration(const RunConfig& cfg, const std::string& mode,
                                          const std::string& cloud = "auto");
/// rep_kind: "perm" | "pair"
ExperimentResult experiment_invariant(const RunConfig& cfg, const std::string& rep_kind);
ExperimentResult experiment_pipeline(const TensorDecomposition& t, const std::string& name,
                                     const RunConfig& cfg);

/// "exact" | "rank1" | "truncated:<keep>" | "perturbed:<eta>" on the block
/// space of cfg.primes.
TensorDecomposition builtin_candidate(const std::string& name, const RunConfig& cfg);

}  // namespace lplab
