#include "ghcm/characters.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ghcm {

CharacterParam character_of(const RootSystem& rs, const Weight& nu, const Weight& rho_tilde) {
  Weight shifted = vec_add(nu, rho_tilde);
  return CharacterParam{shifted, rs.dominant_representative(shifted)};
}

bool is_integral(const RootSystem& rs, const Weight& zeta,
                 const std::vector<int>& subsystem_roots) {
  for (int i : subsystem_roots)
    if (!rs.pair_coroot(zeta, rs.root(i)).is_integer()) return false;
  return true;
}

std::vector<Subsystem> intermediate_subalgebras(const RSubalgebra& tilde_k) {
  if (!tilde_k.full_rank_torus())
    throw precondition_error(
        "intermediate enumeration requires a full-rank torus; smaller rank admits "
        "non-root intermediates this engine cannot enumerate");
  const RootSystem& rs = tilde_k.ambient();
  const size_t nroots = rs.all_roots().size();
  std::vector<int> base = tilde_k.roots();
  if (base.size() == nroots) return {};

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier{base};
  seen.insert(base);
  std::set<std::vector<int>> found;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& cur : frontier) {
      std::set<int> cur_set(cur.begin(), cur.end());
      for (size_t g = 0; g < nroots; ++g) {
        if (cur_set.count(static_cast<int>(g))) continue;
        std::vector<int> seed = cur;
        seed.push_back(static_cast<int>(g));
        Subsystem cl = Subsystem::closure(rs, seed);
        const auto& key = cl.roots();
        if (key.size() == nroots) continue;  // reached all of Delta
        if (seen.insert(key).second) {
          found.insert(key);
          next.push_back(key);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subsystem> out;
  for (const auto& key : found) out.emplace_back(rs, key);
  return out;
}

std::string FkVerdict::report() const {
  std::ostringstream os;
  os << "intermediate subalgebras tested: " << tested.size() << "\n";
  for (const auto& t : tested)
    os << "  type " << t.type_label << " (" << t.subsystem.roots().size() << " roots): "
       << (t.integral ? "integral" : "non-integral") << "\n";
  os << "verdict: " << (verdict == FkConclusion::Maximal ? "maximal" : "inconclusive") << "\n";
  return os.str();
}

FkVerdict fk_maximality(const Weight& nu, const RSubalgebra& tilde_k) {
  const RootSystem& rs = tilde_k.ambient();
  FkVerdict v;
  bool all_nonintegral = true;
  for (auto& ell : intermediate_subalgebras(tilde_k)) {
    bool integral = is_integral(rs, nu, ell.roots());
    all_nonintegral = all_nonintegral && !integral;
    v.tested.push_back({ell, ell.type_label(), integral});
  }
  v.verdict = all_nonintegral ? FkConclusion::Maximal : FkConclusion::Inconclusive;
  return v;
}

std::vector<Weight> central_character_candidates(const std::vector<Weight>& supp,
                                                 const Subsystem& ell) {
  Weight rho_ell = ell.rho();
  std::set<Weight, VecLess> out;
  for (const auto& eta : supp) out.insert(ell.dominant(vec_add(eta, rho_ell)));
  return std::vector<Weight>(out.begin(), out.end());
}

}  // namespace ghcm
