#pragma once

#include <string>

#include "ghcm/characters.hpp"
#include "ghcm/parabolic.hpp"

namespace ghcm {

/// mu = omega + 2 rho_n-perp and its inverse; omega is the t-weight through
/// which t acts on the inducing module.
Weight mu_from_omega(const ParabolicDecomposition& p, const Weight& omega);
Weight omega_from_mu(const ParabolicDecomposition& p, const Weight& mu);

struct AllowablePairReport {
  Weight omega;
  Weight mu;  // omega + 2 rho_n-perp
  bool mu_dominant_integral = false;
  bool parabolic_matches = false;  // p_{mu+2rho} == p
  bool generic = false;
  bool allowable = false;  // conjunction of the three
};

/// Allowability checks for the pair (p, E) with t acting on E by omega. p must be
/// minimal.
AllowablePairReport allowable_pair_check(const KContext& k, const ParabolicDecomposition& p,
                                         const Weight& omega);

/// Numeric parameters of the generalized discrete series module attached to
/// an eligible subalgebra and a weight lambda.
struct DiscreteSeriesParams {
  Weight lambda;
  Weight kappa;
  Weight gamma;  // lambda restricted to t
  Weight mu;     // (lambda - 2 kappa) restricted to t; equals gamma - 2 rho
  long long s = 0;
  long long r = 0;
  CharacterParam z_character;
  long long min_ktype_dim = 0;   // dim V(mu) over k
  long long isotypic_dim = 0;    // dim V_{k~}(lambda - 2 kappa)
  long long multiplicity = 0;    // dim E_lambda = dim Hom_k(V(mu), .)

  std::string report() const;
  std::string json() const;
};

DiscreteSeriesParams discrete_series_params(const RSubalgebra& spec, const Weight& lambda);

/// Order two k-types by ||mu + 2 rho||^2 (exact); negative, zero, positive.
int min_ktype_order(const KContext& k, const Weight& mu1, const Weight& mu2);

}  // namespace ghcm
