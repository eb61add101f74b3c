#include "lplab/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace lplab {

std::uint64_t sl3_order(std::uint32_t l) {
  const std::uint64_t q = l;
  const std::uint64_t q3 = q * q * q;
  return (q3 - 1) * (q3 - q) * (q3 - q * q) / (q - 1);
}

ClosureResult enumerate_quotient(std::uint32_t l, const GeneratorSet& gens,
                                 std::uint64_t cap) {
  ClosureResult res;
  const std::vector<Mat3> g = gens.reduce(l);
  std::unordered_set<std::uint64_t> seen;
  std::deque<Mat3> frontier;

  const Mat3 id = Mat3::identity(l);
  seen.insert(id.key());
  res.elements.push_back(id);
  frontier.push_back(id);

  while (!frontier.empty()) {
    const Mat3 cur = frontier.front();
    frontier.pop_front();
    for (const Mat3& s : g) {
      const Mat3 next = cur * s;
      if (seen.insert(next.key()).second) {
        if (res.elements.size() >= cap) {
          res.partial_count = res.elements.size();
          return res;  // refused: closure exceeds the cap
        }
        res.elements.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  res.complete = true;
  res.partial_count = res.elements.size();
  res.matches_order = (res.elements.size() == sl3_order(l));
  return res;
}

PairOrbits orbit_count_product_action(const ProjectivePlane& plane,
                                      const GeneratorSet& gens) {
  const std::size_t n = plane.size();
  const std::vector<Mat3> g = gens.reduce(plane.l());
  std::vector<std::vector<std::size_t>> perms;
  perms.reserve(g.size());
  for (const Mat3& m : g) perms.push_back(plane.permutation(m));

  PairOrbits out;
  out.orbit_of_pair.assign(n * n, 0xFFFF);
  std::uint16_t label = 0;
  for (std::size_t seed = 0; seed < n * n; ++seed) {
    if (out.orbit_of_pair[seed] != 0xFFFF) continue;
    std::size_t size = 0;
    std::deque<std::size_t> frontier{seed};
    out.orbit_of_pair[seed] = label;
    while (!frontier.empty()) {
      const std::size_t pair = frontier.front();
      frontier.pop_front();
      ++size;
      const std::size_t s = pair / n, t = pair % n;
      for (const auto& perm : perms) {
        const std::size_t img = perm[s] * n + perm[t];
        if (out.orbit_of_pair[img] == 0xFFFF) {
          out.orbit_of_pair[img] = label;
          frontier.push_back(img);
        }
      }
    }
    out.orbit_sizes.push_back(size);
    ++label;
  }
  std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
  return out;
}

}  // namespace lplab
