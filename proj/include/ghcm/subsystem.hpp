#pragma once

#include <string>
#include <vector>

#include "ghcm/root_system.hpp"

namespace ghcm {

/// A closed symmetric set of ambient roots, i.e. the root system of a
/// reductive root subalgebra. Keeps a lexicographic positive system and the
/// simple basis extracted from it.
class Subsystem {
 public:
  Subsystem(const RootSystem& rs, std::vector<int> root_indices);

  static Subsystem closure(const RootSystem& rs, const std::vector<int>& seed);

  const RootSystem& ambient() const { return *rs_; }
  const std::vector<int>& roots() const { return idx_; }
  const std::vector<int>& positive() const { return positive_; }
  const std::vector<int>& simple() const { return simple_; }
  bool contains(int root_idx) const;

  int rank() const { return rank_; }
  long long ss_dim() const { return static_cast<long long>(idx_.size()) + rank_; }

  std::vector<Weight> positive_weights() const;

  /// Half sum of the lexicographic positive roots.
  Weight rho() const;

  /// Isomorphism type from the Cartan matrix of the simple basis,
  /// e.g. "B4" or "A1+A3". Components sorted by (series, rank).
  std::string type_label() const;

  /// Dominant representative under the subsystem's Weyl group.
  Weight dominant(const Weight& v) const;

  bool is_integral(const Weight& zeta) const;
  bool is_dominant(const Weight& v) const;

  long long weyl_dim(const Weight& lambda) const;

  friend bool operator==(const Subsystem& a, const Subsystem& b) { return a.idx_ == b.idx_; }

 private:
  const RootSystem* rs_;
  std::vector<int> idx_;       // sorted
  std::vector<int> positive_;  // lex-positive members
  std::vector<int> simple_;    // positive roots that are not sums of two positives
  int rank_ = 0;
};

}  // namespace ghcm
