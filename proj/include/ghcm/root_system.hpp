#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghcm/linalg.hpp"

namespace ghcm {

class spec_error : public std::runtime_error {
 public:
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition of an operation is violated (reported distinctly from a
/// negative answer).
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// A data file failed its self-validation.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
  Series series;
  int rank;

  static TypeLabel parse(std::string_view s);
  std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// dim of the simple Lie algebra of the given type.
int lie_dimension(TypeLabel t);

using Weight = Vec;

/// Finite multiset of weights, multiplicities >= 1.
using WeightMultiset = std::map<Weight, long long, VecLess>;

/// rho_f = 1/2 * sum of multiplicity-weighted entries.
Weight rho_of_multiset(const WeightMultiset& f, size_t ambient_dim);
Rational rho_of_multiset(const std::map<long long, long long>& scalar_form);

std::string multiset_str(const WeightMultiset& f);
std::string multiset_str(const std::map<long long, long long>& f);

/// Immutable root datum of a simple type. Roots are exact rational vectors in
/// the standard epsilon-basis realization; the invariant form is the unique
/// Weyl-invariant one with <a,a> = 2 on long roots, derived from the Cartan
/// matrix rather than fixed per type.
class RootSystem {
 public:
  static RootSystem build(TypeLabel type);
  static RootSystem build(std::string_view label) { return build(TypeLabel::parse(label)); }

  TypeLabel type() const { return type_; }
  int rank() const { return type_.rank; }
  size_t ambient_dim() const { return ambient_; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& all_roots() const { return roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Vec>& form_matrix() const { return form_matrix_; }

  Rational form(const Weight& v, const Weight& w) const;
  Rational norm2(const Weight& v) const { return form(v, v); }

  /// Image of the coroot a^vee in h* under the form: 2a/<a,a>.
  Weight coroot_dual(const Weight& alpha) const;
  /// <v, a^vee> as an exact rational.
  Rational pair_coroot(const Weight& v, const Weight& alpha) const;

  Weight reflect(const Weight& v, const Weight& alpha) const;

  bool is_root(const Weight& v) const { return root_index_.count(v) != 0; }
  int root_index(const Weight& v) const;
  const Weight& root(int idx) const { return roots_[idx]; }
  int negative_of(int idx) const { return neg_index_[idx]; }

  bool is_long(const Weight& alpha) const { return norm2(alpha) == Rational(2); }
  const Weight& highest_root() const { return highest_root_; }
  /// Highest short root; for simply-laced types equals the highest root.
  const Weight& highest_short_root() const { return highest_short_; }
  bool has_short_roots() const { return has_short_; }

  const Weight& rho() const { return rho_; }
  Weight fundamental_weight(int i) const;

  bool is_dominant(const Weight& v) const;
  /// Unique dominant element of the Weyl orbit (descent by simple
  /// reflections, smallest failing index first).
  Weight dominant_representative(const Weight& v) const;
  /// w_0 . v for the longest Weyl group element w_0.
  Weight longest_element_image(const Weight& v) const;

  bool weights_equal_orbit(const Weight& a, const Weight& b) const {
    return dominant_representative(a) == dominant_representative(b);
  }

 private:
  RootSystem() = default;

  TypeLabel type_{Series::A, 1};
  size_t ambient_ = 0;
  std::vector<Weight> simple_;
  std::vector<Weight> roots_;     // sorted lexicographically
  std::vector<Weight> positive_;  // nonnegative simple coordinates, sorted
  std::vector<int> neg_index_;
  std::map<Weight, int, VecLess> root_index_;
  std::vector<Vec> form_matrix_;  // s * I with the derived scale s
  Rational form_scale_;
  Weight rho_;
  Weight highest_root_;
  Weight highest_short_;
  bool has_short_ = false;
  std::vector<int> w0_word_;  // apply back-to-front
};

/// Weyl dimension formula over an arbitrary positive system inside rs.
/// lambda must pair integrally and nonnegatively with every listed coroot.
long long weyl_dim(const RootSystem& rs, const std::vector<Weight>& positive, const Weight& lambda);
/// Full root datum version.
long long weyl_dim(const RootSystem& rs, const Weight& lambda);

}  // namespace ghcm
