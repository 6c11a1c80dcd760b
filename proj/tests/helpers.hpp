#pragma once

#include <random>
#include <set>
#include <vector>

#include "ghcm/root_system.hpp"

namespace ghcm::testing {

/// Full Weyl orbit of a weight by closure under simple reflections.
/// Brute-force oracle, independent of dominant_representative.
inline std::set<Weight, VecLess> brute_orbit(const RootSystem& rs, const Weight& v) {
  std::set<Weight, VecLess> orbit{v};
  std::vector<Weight> frontier{v};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (const auto& a : rs.simple_roots()) {
        Weight img = rs.reflect(w, a);
        if (orbit.insert(img).second) next.push_back(img);
      }
    frontier = std::move(next);
  }
  return orbit;
}

inline bool brute_same_orbit(const RootSystem& rs, const Weight& a, const Weight& b) {
  return brute_orbit(rs, a).count(b) != 0;
}

/// Random Weyl element applied to v: a word of `len` simple reflections.
inline Weight random_weyl_image(const RootSystem& rs, const Weight& v, std::mt19937& rng,
                                int len = 12) {
  Weight w = v;
  std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
  for (int i = 0; i < len; ++i) w = rs.reflect(w, rs.simple_roots()[pick(rng)]);
  return w;
}

inline Weight random_weight(const RootSystem& rs, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  Weight v(rs.ambient_dim());
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

}  // namespace ghcm::testing
