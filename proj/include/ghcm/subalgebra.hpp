#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghcm/subsystem.hpp"

namespace ghcm {

/// The Cartan subalgebra t of a reductive subalgebra, carried as a reduced
/// basis of its image in h* under the invariant form. Restriction of a
/// weight to t is realized as orthogonal projection onto this span.
class TorusContext {
 public:
  TorusContext(const RootSystem& rs, const std::vector<Vec>& spanning);

  const RootSystem& ambient() const { return *rs_; }
  const std::vector<Vec>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }

  bool vanishes(const Weight& w) const;
  Weight project(const Weight& w) const;

 private:
  const RootSystem* rs_;
  std::vector<Vec> basis_;
  std::vector<Vec> gram_;  // Gram matrix of the basis under the form
};

/// Reductive r-subalgebra: a closed symmetric set S of ambient roots plus a
/// torus t with span{a^vee : a in S} <= t <= h and no S-root vanishing on t.
class RSubalgebra {
 public:
  RSubalgebra(const RootSystem& rs, std::vector<int> roots_S, std::vector<Vec> torus_spanning);

  static RSubalgebra from_root_weights(const RootSystem& rs, const std::vector<Weight>& roots,
                                       const std::vector<Vec>& torus_spanning);

  const RootSystem& ambient() const { return *rs_; }
  const Subsystem& subsystem() const { return sub_; }
  const std::vector<int>& roots() const { return sub_.roots(); }
  const std::vector<int>& positive_roots() const { return sub_.positive(); }  // b_k (lex)
  const TorusContext& torus() const { return torus_; }
  bool full_rank_torus() const { return torus_.rank() == rs_->rank(); }

  /// rho = rho_{ch_t n_k}: projection to t of the half sum of b_k-positives.
  Weight rho_k() const;

  std::string serialize() const;

 private:
  const RootSystem* rs_;
  Subsystem sub_;
  TorusContext torus_;
};

/// sl(2) subalgebra given by its characteristic: the values of h on the
/// simple roots, each in {0,1,2}. Internally h is carried by its form-dual
/// vector u in h*.
class Sl2Spec {
 public:
  Sl2Spec(const RootSystem& rs, std::vector<long long> labels);

  const RootSystem& ambient() const { return *rs_; }
  const std::vector<long long>& characteristic() const { return labels_; }
  const Vec& h_dual() const { return u_; }
  Rational h_norm2() const { return rs_->form(u_, u_); }

  /// Eigenvalue of ad h on the root space g^a.
  long long eigenvalue(const Weight& alpha) const;

  TorusContext torus() const { return TorusContext(*rs_, {u_}); }

  std::string serialize() const;

 private:
  const RootSystem* rs_;
  std::vector<long long> labels_;
  Vec u_;
};

struct CentralizerReport {
  std::vector<int> c_t_roots;      // roots of C(t)
  std::vector<int> c_k_roots;      // roots of C(k) (strong orthogonality)
  long long c_t_ss_dim = 0;
  long long c_k_ss_dim = 0;
  std::vector<int> tilde_k_roots;  // roots of k + C(k)
};

CentralizerReport centralizers(const RSubalgebra& spec);

/// Dimension criterion: dim C(k)_ss == dim C(t)_ss.
bool is_eligible(const RSubalgebra& spec);

/// k' + (Cartan of C(k')): torus enlarged by the orthogonal complement of
/// span S inside the root span; always eligible afterwards.
RSubalgebra eligible_extension(const RSubalgebra& spec);

/// Unique weight with kappa = rho on h cap k_ss and 0 on h cap C(k);
/// equals the half sum of the b_k-positive roots of S. Requires eligibility.
Weight canonical_kappa(const RSubalgebra& spec);

bool is_regular_pair(const RSubalgebra& spec);
bool is_regular_pair(const Sl2Spec& spec);

/// True iff the characteristic is Weyl-conjugate to a coroot.
bool is_r_subalgebra(const Sl2Spec& spec);

/// Root sl(2)s convert to an RSubalgebra on the dominant root of the
/// matching length class (eligibility is conjugation-invariant).
std::optional<RSubalgebra> sl2_as_r_subalgebra(const Sl2Spec& spec);

/// nullopt means "not decidable by this engine" (non-root sl(2)).
std::optional<bool> is_eligible(const Sl2Spec& spec);

/// Line formats:
///   rsub <type> <rank> roots=<tuple;tuple;...> torus=<tuple;tuple;...>
///   sl2 <type> <rank> char=<c1,...,cn>
struct ParsedSpec {
  std::optional<RSubalgebra> rsub;
  std::optional<Sl2Spec> sl2;
};
ParsedSpec parse_spec_line(const RootSystem& rs, const std::string& line);
TypeLabel spec_line_type(const std::string& line);

/// First non-comment line of a spec file, together with the owning root
/// system it refers to.
struct LoadedSpec {
  std::shared_ptr<RootSystem> rs;
  ParsedSpec spec;
};
LoadedSpec load_spec_file(const std::string& path);

}  // namespace ghcm
