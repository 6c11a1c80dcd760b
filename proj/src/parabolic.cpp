#include "ghcm/parabolic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ghcm {

KContext::KContext(const RSubalgebra& spec)
    : rs_(&spec.ambient()),
      torus_(spec.torus()),
      s_roots_(spec.roots()),
      s_positive_(spec.positive_roots()),
      rho_k_(spec.rho_k()) {}

KContext::KContext(const Sl2Spec& spec) : rs_(&spec.ambient()), torus_(spec.torus()), sl2_u_(spec.h_dual()) {
  // n_k = span(e) with t-weight 2, so rho = the scalar 1.
  rho_k_ = embed_scalar(Rational(1));
}

Weight KContext::embed_scalar(const Rational& value) const {
  if (!is_sl2()) throw precondition_error("scalar t-weights only apply to sl(2) specs");
  return vec_scale(value / rs_->form(*sl2_u_, *sl2_u_), *sl2_u_);
}

bool KContext::is_k_integral(const Weight& mu) const {
  if (is_sl2()) return rs_->form(mu, *sl2_u_).is_integer();
  for (int i : s_roots_)
    if (!rs_->pair_coroot(mu, rs_->root(i)).is_integer()) return false;
  return true;
}

bool KContext::is_bk_dominant(const Weight& mu) const {
  if (is_sl2()) return rs_->form(mu, *sl2_u_).sign() >= 0;
  for (int i : s_positive_)
    if (rs_->pair_coroot(mu, rs_->root(i)).sign() < 0) return false;
  return true;
}

WeightMultiset ParabolicDecomposition::ch_t_n() const {
  WeightMultiset f;
  for (int i : n_roots) ++f[k.torus().project(k.ambient().root(i))];
  return f;
}

ParabolicDecomposition compatible_parabolic(const KContext& k, const Weight& eta_embedded) {
  const RootSystem& rs = k.ambient();
  ParabolicDecomposition p{k, eta_embedded, {}, {}, {}, {}, {}, {}, {}, 0, 0};
  Weight nsum(rs.ambient_dim(), Rational(0));
  for (size_t i = 0; i < rs.all_roots().size(); ++i) {
    int idx = static_cast<int>(i);
    int sgn = rs.form(eta_embedded, rs.root(idx)).sign();
    if (sgn > 0) {
      p.n_roots.push_back(idx);
      nsum = vec_add(nsum, rs.root(idx));
    } else if (sgn == 0) {
      p.m_roots.push_back(idx);
    }
  }
  p.delta_roots = p.m_roots;
  p.delta_roots.insert(p.delta_roots.end(), p.n_roots.begin(), p.n_roots.end());
  std::sort(p.delta_roots.begin(), p.delta_roots.end());
  p.rho_tilde_n = vec_scale(Rational(1, 2), nsum);
  p.rho_n = k.torus().project(p.rho_tilde_n);
  p.rho = k.rho_k();
  p.rho_n_perp = vec_sub(p.rho_n, p.rho);
  if (k.is_sl2()) {
    p.s = rs.form(eta_embedded, k.sl2_u()).sign() > 0 ? 1 : 0;
  } else {
    for (int i : k.s_roots())
      if (rs.form(eta_embedded, rs.root(i)).sign() > 0) ++p.s;
  }
  p.r = static_cast<long long>(p.n_roots.size()) - p.s;
  return p;
}

ParabolicDecomposition compatible_parabolic(const RSubalgebra& spec, const Weight& eta_embedded) {
  return compatible_parabolic(KContext(spec), eta_embedded);
}

ParabolicDecomposition compatible_parabolic(const Sl2Spec& spec, const Rational& eta_scalar) {
  KContext k(spec);
  return compatible_parabolic(k, k.embed_scalar(eta_scalar));
}

bool is_minimal(const ParabolicDecomposition& p) {
  for (int i : p.m_roots)
    if (!p.k.torus().vanishes(p.k.ambient().root(i))) return false;
  return true;
}

ParabolicDecomposition opposite(const ParabolicDecomposition& p) {
  return compatible_parabolic(p.k, vec_neg(p.eta));
}

std::string GenericityResult::describe() const {
  switch (status) {
    case GenericityStatus::Generic: return "generic";
    case GenericityStatus::Undecided: return "undecided - instance too large";
    case GenericityStatus::NotGeneric: {
      std::ostringstream os;
      os << "not generic";
      if (witness_weight) os << "; condition (1) fails at t-weight (" << vec_str(*witness_weight) << ")";
      if (witness_submultiset) os << "; condition (2) fails at S = " << multiset_str(*witness_submultiset);
      return os.str();
    }
  }
  return "";
}

namespace {

/// Condition (2) engine, rank(t) = 1: the t-weights of n are positive
/// integers, so the achievable submultiset sums come from a counting-vector
/// dynamic program and each achievable total T is tested via
/// T * (2V - T) > 0.
GenericityResult condition2_rank1(const KContext& k, const Rational& v_value,
                                  const std::map<long long, long long>& scalar_mult) {
  long long total = 0;
  for (const auto& [val, mult] : scalar_mult) total += val * mult;
  std::vector<char> reachable(static_cast<size_t>(total) + 1, 0);
  reachable[0] = 1;
  for (const auto& [val, mult] : scalar_mult) {
    // bounded-count subset sums
    for (long long c = 0; c < mult; ++c) {
      for (long long t = total - val; t >= 0; --t)
        if (reachable[static_cast<size_t>(t)]) reachable[static_cast<size_t>(t + val)] = 1;
    }
  }
  for (long long t = total; t >= 1; --t) {
    if (!reachable[static_cast<size_t>(t)]) continue;
    // <W - rho_S, rho_S> > 0  <=>  (T/2)(V - T/2) > 0  <=>  T(2V - T) > 0
    Rational lhs = Rational(t) * (Rational(2) * v_value - Rational(t));
    if (lhs.sign() > 0) continue;
    // Reconstruct a witness submultiset achieving t greedily.
    GenericityResult res;
    res.status = GenericityStatus::NotGeneric;
    WeightMultiset wit;
    long long remaining = t;
    std::vector<std::pair<long long, long long>> vals(scalar_mult.begin(), scalar_mult.end());
    std::vector<long long> take(vals.size(), 0);
    std::function<bool(size_t, long long)> pick = [&](size_t i, long long rem) -> bool {
      if (rem == 0) return true;
      if (i == vals.size()) return false;
      long long maxc = std::min(vals[i].second, rem / vals[i].first);
      for (long long c = maxc; c >= 0; --c) {
        take[i] = c;
        if (pick(i + 1, rem - c * vals[i].first)) return true;
      }
      take[i] = 0;
      return false;
    };
    pick(0, remaining);
    for (size_t i = 0; i < vals.size(); ++i)
      if (take[i] > 0) wit[k.embed_scalar(Rational(vals[i].first))] = take[i];
    res.witness_submultiset = wit;
    return res;
  }
  return {};
}

/// Condition (2) engine, rank(t) >= 2: exhaustive walk over the count
/// vectors of the distinct t-weights, in integerized coordinates, stopping
/// at the first violation.
GenericityResult condition2_general(const Weight& w_weight, const WeightMultiset& ch) {
  long long size = 0;
  for (const auto& [wt, mult] : ch) size += mult;
  if (size > kGenericityEnumerationCap) return {GenericityStatus::Undecided, {}, {}};

  // Integerize: common denominator over 2W and all weights.
  long long denom = 1;
  auto fold = [&denom](const Weight& v) {
    for (const auto& x : v) denom = std::lcm(denom, x.den());
  };
  fold(w_weight);
  for (const auto& [wt, mult] : ch) fold(wt);
  const size_t dim = w_weight.size();
  auto to_int = [&](const Weight& v) {
    std::vector<long long> out(dim);
    for (size_t i = 0; i < dim; ++i) out[i] = (Rational(denom) * v[i]).as_integer();
    return out;
  };
  std::vector<std::pair<std::vector<long long>, long long>> items;
  for (const auto& [wt, mult] : ch) items.emplace_back(to_int(wt), mult);
  std::vector<long long> w2 = to_int(w_weight);
  for (auto& x : w2) x *= 2;

  // Condition: dot(2W - P, P) > 0 where P = sum of chosen weights (twice
  // rho_S); the positive form scale drops out of the sign.
  std::vector<long long> p(dim, 0);
  std::vector<long long> counts(items.size(), 0);
  GenericityResult res;
  std::function<bool(size_t)> walk = [&](size_t level) -> bool {
    if (level == items.size()) {
      bool empty = std::all_of(counts.begin(), counts.end(), [](long long c) { return c == 0; });
      if (empty) return true;
      long long acc = 0;
      for (size_t i = 0; i < dim; ++i) acc += (w2[i] - p[i]) * p[i];
      return acc > 0;
    }
    for (long long c = 0; c <= items[level].second; ++c) {
      if (c > 0)
        for (size_t i = 0; i < dim; ++i) p[i] += items[level].first[i];
      counts[level] = c;
      if (!walk(level + 1)) {
        // leave p as the witness configuration
        return false;
      }
    }
    for (size_t i = 0; i < dim; ++i) p[i] -= items[level].second * items[level].first[i];
    counts[level] = 0;
    return true;
  };
  if (!walk(0)) {
    res.status = GenericityStatus::NotGeneric;
    WeightMultiset wit;
    size_t pos = 0;
    for (const auto& [wt, mult] : ch) {
      (void)mult;
      if (counts[pos] > 0) wit[wt] = counts[pos];
      ++pos;
    }
    res.witness_submultiset = wit;
  }
  return res;
}

}  // namespace

GenericityResult is_generic(const KContext& k, const Weight& mu_embedded) {
  const RootSystem& rs = k.ambient();
  if (!k.is_k_integral(mu_embedded)) throw precondition_error("mu is not k-integral");
  if (!k.is_bk_dominant(mu_embedded)) throw precondition_error("mu is not b_k-dominant");
  Weight w = vec_add(mu_embedded, vec_scale(Rational(2), k.rho_k()));
  // (g,k)-regularity of mu + 2 rho.
  for (const auto& a : rs.all_roots())
    if (!k.torus().vanishes(a) && rs.form(w, a).is_zero())
      throw precondition_error("mu + 2rho is not (g,k)-regular");

  ParabolicDecomposition p = compatible_parabolic(k, w);

  // Condition (1): <mu + 2rho - rho_n, a> >= 0 on supp_t n_k.
  std::vector<Weight> supp;
  if (k.is_sl2()) {
    if (rs.form(w, k.sl2_u()).sign() > 0) supp.push_back(k.embed_scalar(Rational(2)));
  } else {
    WeightMultiset seen;
    for (int i : k.s_roots())
      if (rs.form(w, rs.root(i)).sign() > 0) ++seen[k.torus().project(rs.root(i))];
    for (const auto& [wt, mult] : seen) {
      (void)mult;
      supp.push_back(wt);
    }
  }
  Weight lhs1 = vec_sub(w, p.rho_n);
  for (const auto& wt : supp) {
    if (rs.form(lhs1, wt).sign() < 0) {
      GenericityResult res;
      res.status = GenericityStatus::NotGeneric;
      res.witness_weight = wt;
      return res;
    }
  }

  // Condition (2) over nonempty submultisets of ch_t n.
  if (k.torus().rank() == 1) {
    // In rank 1 every t-weight is read as its pairing with a fixed base
    // functional; condition (2) becomes T(2V - T) > 0 over the achievable
    // submultiset sums T, independent of the positive base normalization.
    // Pairing against w itself orients the values positively on n.
    const Weight& base = w;
    std::vector<Rational> raw;
    long long denom = 1;
    for (int i : p.n_roots) {
      Rational value = rs.form(rs.root(i), base);
      if (value.sign() <= 0) throw spec_error("n-root with nonpositive t-value");
      denom = std::lcm(denom, value.den());
      raw.push_back(value);
    }
    Rational v_value = rs.form(w, base) * Rational(denom);
    std::map<long long, long long> scal;
    for (const auto& value : raw) ++scal[(value * Rational(denom)).as_integer()];
    return condition2_rank1(k, v_value, scal);
  }
  return condition2_general(w, p.ch_t_n());
}

GenericityResult is_generic(const RSubalgebra& spec, const Weight& mu_embedded) {
  return is_generic(KContext(spec), mu_embedded);
}

GenericityResult is_generic(const Sl2Spec& spec, const Rational& mu_scalar) {
  KContext k(spec);
  return is_generic(k, k.embed_scalar(mu_scalar));
}

}  // namespace ghcm
