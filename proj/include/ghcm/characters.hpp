#pragma once

#include <string>
#include <vector>

#include "ghcm/subalgebra.hpp"

namespace ghcm {

/// A Z_{U(g)}-character carried by its already-shifted parameter (nu + rho~)
/// together with the dominant Weyl-orbit representative; two characters are
/// equal iff the canonical representatives coincide.
struct CharacterParam {
  Weight shifted;
  Weight canonical;

  friend bool operator==(const CharacterParam& a, const CharacterParam& b) {
    return a.canonical == b.canonical;
  }
};

CharacterParam character_of(const RootSystem& rs, const Weight& nu, const Weight& rho_tilde);

/// Integrality of zeta against every coroot of the given closed subsystem.
bool is_integral(const RootSystem& rs, const Weight& zeta, const std::vector<int>& subsystem_roots);

/// All closed root subsystems strictly between Delta(k~) and Delta, for
/// full-rank k~ (then every intermediate reductive subalgebra is of this
/// form). Computed by iterated closure extensions to a fixpoint.
std::vector<Subsystem> intermediate_subalgebras(const RSubalgebra& tilde_k);

struct TestedIntermediate {
  Subsystem subsystem;
  std::string type_label;
  bool integral = false;
};

enum class FkConclusion { Maximal, Inconclusive };

struct FkVerdict {
  std::vector<TestedIntermediate> tested;
  FkConclusion verdict = FkConclusion::Inconclusive;
  std::string report() const;
};

/// Maximality verdict for k~ inside the Fernando-Kac subalgebra of any
/// nonzero subquotient of the fundamental series attached to nu: "maximal"
/// iff nu is non-integral on every proper intermediate subsystem.
/// Non-integrality is sufficient only, so the negative answer is
/// "inconclusive", never "not maximal".
FkVerdict fk_maximality(const Weight& nu, const RSubalgebra& tilde_k);

/// Superset bound on the Z_{U(l)}-spectrum: the characters theta^l_{eta+rho_l}
/// for eta in the given finite support, canonicalized under the subsystem's
/// Weyl group (l is the full-rank reductive root subalgebra h + sum g^a).
std::vector<Weight> central_character_candidates(const std::vector<Weight>& supp,
                                                 const Subsystem& ell);

}  // namespace ghcm
