#pragma once

#include <cstdint>
#include <vector>

#include "lplab/mat3.hpp"
#include "lplab/plane.hpp"

namespace lplab {

/// |SL(3,F_l)| = (l^3-1)(l^3-l)(l^3-l^2)/(l-1).
std::uint64_t sl3_order(std::uint32_t l);

struct ClosureResult {
  std::vector<Mat3> elements;
  bool complete = false;        // false if the cap was hit
  bool matches_order = false;   // |elements| == sl3_order(l)
  std::uint64_t partial_count = 0;
};

/// BFS closure of the reduced generators under multiplication. Stops at
/// `cap` elements and reports the partial count instead of overrunning.
ClosureResult enumerate_quotient(std::uint32_t l, const GeneratorSet& gens,
                                 std::uint64_t cap = 1'000'000);

struct PairOrbits {
  std::vector<std::size_t> orbit_sizes;       // sorted ascending
  std::vector<std::uint16_t> orbit_of_pair;   // n*n labels, row-major (s,t)
};

/// Orbits of the product action on Lambda_l x Lambda_l. 2-transitivity means
/// exactly two orbits: the diagonal (size n) and the off-diagonal (n(n-1)).
PairOrbits orbit_count_product_action(const ProjectivePlane& plane,
                                      const GeneratorSet& gens);

}  // namespace lplab
