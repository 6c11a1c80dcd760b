#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ghcm/subalgebra.hpp"

namespace ghcm {

/// What the parabolic layer needs from a subalgebra: the torus, the b_k
/// positive system of S (r-subalgebra case) or the dual of h (sl(2) case).
class KContext {
 public:
  explicit KContext(const RSubalgebra& spec);
  explicit KContext(const Sl2Spec& spec);

  const RootSystem& ambient() const { return *rs_; }
  const TorusContext& torus() const { return torus_; }
  bool is_sl2() const { return sl2_u_.has_value(); }
  const Vec& sl2_u() const { return *sl2_u_; }
  const std::vector<int>& s_roots() const { return s_roots_; }
  const std::vector<int>& s_positive() const { return s_positive_; }

  /// rho = rho_{ch_t n_k}, embedded in h*.
  const Weight& rho_k() const { return rho_k_; }

  /// Embed a scalar t-weight (rank-1 identification t* ~ C, value on h).
  Weight embed_scalar(const Rational& value) const;

  bool is_k_integral(const Weight& mu) const;
  bool is_bk_dominant(const Weight& mu) const;

 private:
  const RootSystem* rs_;
  TorusContext torus_;
  std::optional<Vec> sl2_u_;
  std::vector<int> s_roots_, s_positive_;
  Weight rho_k_;
};

/// The triple (m_eta, n_eta, Delta_eta) for the t-compatible parabolic
/// p_eta, with its rho-vectors and the dimensions s = dim n cap k and
/// r = dim n cap k-perp.
struct ParabolicDecomposition {
  KContext k;
  Weight eta;                    // embedded in h*, vanishing on t-perp
  std::vector<int> m_roots;      // <eta, a> = 0
  std::vector<int> n_roots;      // <eta, a> > 0
  std::vector<int> delta_roots;  // m union n
  Weight rho_tilde_n;            // rho_{ch_h n}
  Weight rho_n;                  // rho_{ch_t n} = rho_tilde_n restricted to t
  Weight rho;                    // rho_{ch_t n_k} (from b_k, independent of eta)
  Weight rho_n_perp;             // rho_n - rho
  long long s = 0;
  long long r = 0;

  /// ch_t n as a multiset of embedded t-weights.
  WeightMultiset ch_t_n() const;
};

ParabolicDecomposition compatible_parabolic(const KContext& k, const Weight& eta_embedded);
ParabolicDecomposition compatible_parabolic(const RSubalgebra& spec, const Weight& eta_embedded);
ParabolicDecomposition compatible_parabolic(const Sl2Spec& spec, const Rational& eta_scalar);

/// Minimal iff m equals C(t), i.e. eta pairs nonzero with every root that
/// has nonzero t-restriction.
bool is_minimal(const ParabolicDecomposition& p);

ParabolicDecomposition opposite(const ParabolicDecomposition& p);

enum class GenericityStatus { Generic, NotGeneric, Undecided };

struct GenericityResult {
  GenericityStatus status = GenericityStatus::Generic;
  /// Violating t-weight for condition (1), if that is what failed.
  std::optional<Weight> witness_weight;
  /// Violating submultiset of ch_t n for condition (2), if that failed.
  std::optional<WeightMultiset> witness_submultiset;
  bool generic() const { return status == GenericityStatus::Generic; }
  std::string describe() const;
};

/// Genericity of the k-type V(mu): condition (1) over supp_t n_k and the
/// strict condition (2) over every nonempty submultiset of ch_t n, for
/// p = p_{mu+2rho}. Preconditions (mu b_k-dominant and k-integral, mu+2rho
/// (g,k)-regular) throw precondition_error; Undecided is returned when the
/// rank >= 2 instance exceeds the documented enumeration capacity.
GenericityResult is_generic(const KContext& k, const Weight& mu_embedded);
GenericityResult is_generic(const RSubalgebra& spec, const Weight& mu_embedded);
GenericityResult is_generic(const Sl2Spec& spec, const Rational& mu_scalar);

/// Enumeration cap for the rank >= 2 submultiset engine.
inline constexpr long long kGenericityEnumerationCap = 24;

}  // namespace ghcm
