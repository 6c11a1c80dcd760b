#include "ghcm/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ghcm {

Weight mu_from_omega(const ParabolicDecomposition& p, const Weight& omega) {
  return vec_add(omega, vec_scale(Rational(2), p.rho_n_perp));
}

Weight omega_from_mu(const ParabolicDecomposition& p, const Weight& mu) {
  return vec_sub(mu, vec_scale(Rational(2), p.rho_n_perp));
}

AllowablePairReport allowable_pair_check(const KContext& k, const ParabolicDecomposition& p,
                                         const Weight& omega) {
  if (!is_minimal(p)) throw precondition_error("parabolic is not minimal");
  AllowablePairReport rep;
  rep.omega = omega;
  rep.mu = mu_from_omega(p, omega);
  rep.mu_dominant_integral = k.is_k_integral(rep.mu) && k.is_bk_dominant(rep.mu);

  Weight w = vec_add(rep.mu, vec_scale(Rational(2), k.rho_k()));
  ParabolicDecomposition q = compatible_parabolic(k, w);
  rep.parabolic_matches = q.n_roots == p.n_roots && q.m_roots == p.m_roots;

  if (rep.mu_dominant_integral && rep.parabolic_matches) {
    try {
      rep.generic = is_generic(k, rep.mu).generic();
    } catch (const precondition_error&) {
      rep.generic = false;
    }
  }
  rep.allowable = rep.mu_dominant_integral && rep.parabolic_matches && rep.generic;
  return rep;
}

std::string DiscreteSeriesParams::report() const {
  std::ostringstream os;
  os << "lambda        = (" << vec_str(lambda) << ")\n"
     << "kappa         = (" << vec_str(kappa) << ")\n"
     << "gamma         = (" << vec_str(gamma) << ")\n"
     << "mu            = (" << vec_str(mu) << ")\n"
     << "s             = " << s << "\n"
     << "r             = " << r << "\n"
     << "z-character   = (" << vec_str(z_character.canonical) << ")\n"
     << "min k-type dim = " << min_ktype_dim << "\n"
     << "multiplicity  = " << multiplicity << "\n"
     << "isotypic dim  = " << isotypic_dim << "\n";
  return os.str();
}

std::string DiscreteSeriesParams::json() const {
  std::ostringstream os;
  auto vec = [](const Weight& w) {
    std::ostringstream v;
    v << "[";
    for (size_t i = 0; i < w.size(); ++i) v << (i ? "," : "") << "\"" << w[i].str() << "\"";
    v << "]";
    return v.str();
  };
  os << "{\"lambda\":" << vec(lambda) << ",\"kappa\":" << vec(kappa) << ",\"gamma\":" << vec(gamma)
     << ",\"mu\":" << vec(mu) << ",\"s\":" << s << ",\"r\":" << r
     << ",\"z_character\":" << vec(z_character.canonical) << ",\"min_ktype_dim\":" << min_ktype_dim
     << ",\"multiplicity\":" << multiplicity << ",\"isotypic_dim\":" << isotypic_dim << "}";
  return os.str();
}

DiscreteSeriesParams discrete_series_params(const RSubalgebra& spec, const Weight& lambda) {
  const RootSystem& rs = spec.ambient();
  if (lambda.size() != rs.ambient_dim()) throw precondition_error("lambda has wrong dimension");
  if (!is_eligible(spec)) throw precondition_error("subalgebra is not eligible");

  KContext k(spec);
  DiscreteSeriesParams out;
  out.lambda = lambda;
  out.gamma = k.torus().project(lambda);

  // m_gamma must equal C(t): every root with nonzero t-restriction must pair
  // nontrivially with gamma.
  for (const auto& a : rs.all_roots())
    if (!k.torus().vanishes(a) && rs.form(out.gamma, a).is_zero())
      throw precondition_error("gamma = lambda|_t is not (g,k)-regular (m_gamma != C(t))");

  ParabolicDecomposition p = compatible_parabolic(k, out.gamma);
  out.s = p.s;
  out.r = p.r;

  // lambda must be integral for m = C(t).
  for (int i : p.m_roots)
    if (!rs.pair_coroot(lambda, rs.root(i)).is_integer())
      throw precondition_error("lambda is not m-integral");

  out.kappa = canonical_kappa(spec);
  Weight shifted = vec_sub(lambda, vec_scale(Rational(2), out.kappa));

  // k~ = k_ss + C(k); lambda - 2 kappa must be integral and dominant for it
  // (b_k on S, lexicographic positives on C(k)).
  CentralizerReport cent = centralizers(spec);
  Subsystem tilde(rs, cent.tilde_k_roots);
  if (!tilde.is_integral(shifted))
    throw precondition_error("lambda - 2 kappa is not k~-integral");
  if (!tilde.is_dominant(shifted))
    throw precondition_error("lambda - 2 kappa is not k~-dominant");

  out.mu = k.torus().project(shifted);
  Weight check = vec_sub(out.gamma, vec_scale(Rational(2), p.rho));
  if (out.mu != check) throw spec_error("internal: mu != gamma - 2 rho");

  // Z-character: the inducing module is E_lambda tensor top(n*), so the
  // b-highest weight is nu = lambda - 2 rho~_n, with rho~ = rho_m+ + rho~_n
  // for the Borel with b cap k = b_k and lexicographic positives on m.
  Weight m_pos_sum(rs.ambient_dim(), Rational(0));
  for (int i : p.m_roots)
    if (lex_positive(rs.root(i))) m_pos_sum = vec_add(m_pos_sum, rs.root(i));
  Weight rho_tilde = vec_add(vec_scale(Rational(1, 2), m_pos_sum), p.rho_tilde_n);
  Weight nu = vec_sub(lambda, vec_scale(Rational(2), p.rho_tilde_n));
  out.z_character = character_of(rs, nu, rho_tilde);

  // Dimensions: V(mu) over k, E_lambda over m = C(t), V_{k~}(lambda-2kappa).
  std::vector<Weight> s_pos;
  for (int i : spec.positive_roots()) s_pos.push_back(rs.root(i));
  out.min_ktype_dim = weyl_dim(rs, s_pos, shifted);

  std::vector<int> m_idx = p.m_roots;
  Subsystem m_sub(rs, m_idx);
  out.multiplicity = m_sub.weyl_dim(m_sub.dominant(lambda));

  out.isotypic_dim = tilde.weyl_dim(shifted);
  return out;
}

int min_ktype_order(const KContext& k, const Weight& mu1, const Weight& mu2) {
  const RootSystem& rs = k.ambient();
  for (const Weight* mu : {&mu1, &mu2}) {
    if (!k.is_k_integral(*mu)) throw precondition_error("k-type weight is not k-integral");
    if (!k.is_bk_dominant(*mu)) throw precondition_error("k-type weight is not b_k-dominant");
  }
  auto norm = [&](const Weight& mu) {
    Weight v = vec_add(mu, vec_scale(Rational(2), k.rho_k()));
    return rs.form(v, v);
  };
  Rational n1 = norm(mu1), n2 = norm(mu2);
  return n1 < n2 ? -1 : (n1 > n2 ? 1 : 0);
}

}  // namespace ghcm
