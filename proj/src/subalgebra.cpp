#include "ghcm/subalgebra.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

namespace ghcm {

TorusContext::TorusContext(const RootSystem& rs, const std::vector<Vec>& spanning) : rs_(&rs) {
  for (const auto& v : spanning)
    if (v.size() != rs.ambient_dim()) throw spec_error("torus vector has wrong dimension");
  basis_ = reduced_basis(spanning);
  const size_t m = basis_.size();
  gram_.assign(m, Vec(m, Rational(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) gram_[i][j] = rs.form(basis_[i], basis_[j]);
}

bool TorusContext::vanishes(const Weight& w) const {
  for (const auto& u : basis_)
    if (!rs_->form(w, u).is_zero()) return false;
  return true;
}

Weight TorusContext::project(const Weight& w) const {
  if (basis_.empty()) return Weight(rs_->ambient_dim(), Rational(0));
  Vec rhs(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) rhs[i] = rs_->form(basis_[i], w);
  Vec x = solve_linear(gram_, rhs);
  Weight out(rs_->ambient_dim(), Rational(0));
  for (size_t i = 0; i < basis_.size(); ++i) out = vec_add(out, vec_scale(x[i], basis_[i]));
  return out;
}

RSubalgebra::RSubalgebra(const RootSystem& rs, std::vector<int> roots_S,
                         std::vector<Vec> torus_spanning)
    : rs_(&rs), sub_(rs, std::move(roots_S)), torus_(rs, torus_spanning) {
  for (int i : sub_.roots()) {
    if (!in_span(torus_.basis(), rs.coroot_dual(rs.root(i))))
      throw spec_error("torus does not contain the coroot of " + vec_str(rs.root(i)));
    if (torus_.vanishes(rs.root(i)))
      throw spec_error("root " + vec_str(rs.root(i)) + " vanishes on the torus");
  }
}

RSubalgebra RSubalgebra::from_root_weights(const RootSystem& rs, const std::vector<Weight>& roots,
                                           const std::vector<Vec>& torus_spanning) {
  std::vector<int> idx;
  for (const auto& w : roots) {
    int i = rs.root_index(w);
    if (i < 0) throw spec_error("not a root of " + rs.type().str() + ": " + vec_str(w));
    idx.push_back(i);
  }
  return RSubalgebra(rs, idx, torus_spanning);
}

Weight RSubalgebra::rho_k() const {
  Weight sum(rs_->ambient_dim(), Rational(0));
  for (int i : sub_.positive()) sum = vec_add(sum, rs_->root(i));
  return torus_.project(vec_scale(Rational(1, 2), sum));
}

std::string RSubalgebra::serialize() const {
  std::ostringstream os;
  os << "rsub " << rs_->type().str()[0] << " " << rs_->rank() << " roots=";
  bool first = true;
  for (int i : sub_.roots()) {
    if (!first) os << ";";
    first = false;
    os << vec_str(rs_->root(i));
  }
  os << " torus=";
  first = true;
  for (const auto& v : torus_.basis()) {
    if (!first) os << ";";
    first = false;
    os << vec_str(v);
  }
  return os.str();
}

Sl2Spec::Sl2Spec(const RootSystem& rs, std::vector<long long> labels)
    : rs_(&rs), labels_(std::move(labels)) {
  const int n = rs.rank();
  if (static_cast<int>(labels_.size()) != n)
    throw spec_error("characteristic needs one label per simple root");
  for (long long c : labels_)
    if (c < 0 || c > 2) throw spec_error("characteristic labels must lie in {0,1,2}");
  // u = form-dual of h: <a_i, u> = c_i, solved on the root span.
  std::vector<Vec> gram(n, Vec(n, Rational(0)));
  Vec rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = Rational(labels_[i]);
    for (int j = 0; j < n; ++j) gram[i][j] = rs.form(rs.simple_roots()[i], rs.simple_roots()[j]);
  }
  Vec x = solve_linear(gram, rhs);
  u_ = Weight(rs.ambient_dim(), Rational(0));
  for (int j = 0; j < n; ++j) u_ = vec_add(u_, vec_scale(x[j], rs.simple_roots()[j]));

  bool has_two = false;
  for (const auto& a : rs.all_roots()) {
    Rational ev = rs.form(a, u_);
    if (!ev.is_integer())
      throw spec_error("characteristic gives non-integer eigenvalue on root " + vec_str(a));
    if (ev == Rational(2)) has_two = true;
  }
  if (!has_two) throw spec_error("characteristic has empty eigenvalue-2 space (no triple element)");
}

long long Sl2Spec::eigenvalue(const Weight& alpha) const {
  return rs_->form(alpha, u_).as_integer();
}

std::string Sl2Spec::serialize() const {
  std::ostringstream os;
  os << "sl2 " << rs_->type().str()[0] << " " << rs_->rank() << " char=";
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (i) os << ",";
    os << labels_[i];
  }
  return os.str();
}

namespace {

long long ss_dim_of(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<Vec> span;
  for (int i : roots) span.push_back(rs.root(i));
  return static_cast<long long>(roots.size()) + span_rank(span);
}

}  // namespace

CentralizerReport centralizers(const RSubalgebra& spec) {
  const RootSystem& rs = spec.ambient();
  CentralizerReport rep;
  std::set<int> s_set(spec.roots().begin(), spec.roots().end());
  for (size_t i = 0; i < rs.all_roots().size(); ++i) {
    int idx = static_cast<int>(i);
    if (!spec.torus().vanishes(rs.root(idx))) continue;
    rep.c_t_roots.push_back(idx);
    // g^a centralizes k iff a + b is never a root for b in S (a already
    // vanishes on t, hence on the coroots of S, so a != -b).
    bool strongly_orthogonal = true;
    for (int b : spec.roots()) {
      if (rs.root_index(vec_add(rs.root(idx), rs.root(b))) >= 0) {
        strongly_orthogonal = false;
        break;
      }
    }
    if (strongly_orthogonal) rep.c_k_roots.push_back(idx);
  }
  rep.c_t_ss_dim = ss_dim_of(rs, rep.c_t_roots);
  rep.c_k_ss_dim = ss_dim_of(rs, rep.c_k_roots);
  std::set<int> tilde(s_set);
  tilde.insert(rep.c_k_roots.begin(), rep.c_k_roots.end());
  rep.tilde_k_roots.assign(tilde.begin(), tilde.end());
  return rep;
}

bool is_eligible(const RSubalgebra& spec) {
  auto rep = centralizers(spec);
  return rep.c_k_ss_dim == rep.c_t_ss_dim;
}

RSubalgebra eligible_extension(const RSubalgebra& spec) {
  const RootSystem& rs = spec.ambient();
  // Orthogonal complement of span S inside the root span: the image of a
  // Cartan subalgebra of C(k') in h*.
  std::vector<Vec> s_span;
  for (int i : spec.roots()) s_span.push_back(rs.root(i));
  std::vector<Vec> root_span_basis = reduced_basis(
      std::vector<Vec>(rs.all_roots().begin(), rs.all_roots().end()));
  std::vector<Vec> torus = spec.torus().basis();
  for (const auto& v : root_span_basis) {
    // Project v onto the complement of span S step by step: keep candidates
    // whose addition preserves orthogonality to S.
    Vec w = v;
    if (!s_span.empty()) {
      // subtract the S-span component: solve Gram system on s basis
      std::vector<Vec> sb = reduced_basis(s_span);
      std::vector<Vec> gram(sb.size(), Vec(sb.size()));
      Vec rhs(sb.size());
      for (size_t i = 0; i < sb.size(); ++i) {
        rhs[i] = rs.form(sb[i], v);
        for (size_t j = 0; j < sb.size(); ++j) gram[i][j] = rs.form(sb[i], sb[j]);
      }
      Vec x = solve_linear(gram, rhs);
      for (size_t i = 0; i < sb.size(); ++i) w = vec_sub(w, vec_scale(x[i], sb[i]));
    }
    if (!vec_is_zero(w)) torus.push_back(w);
  }
  return RSubalgebra(rs, spec.roots(), torus);
}

Weight canonical_kappa(const RSubalgebra& spec) {
  if (!is_eligible(spec)) throw precondition_error("subalgebra is not eligible");
  const RootSystem& rs = spec.ambient();
  Weight sum(rs.ambient_dim(), Rational(0));
  for (int i : spec.positive_roots()) sum = vec_add(sum, rs.root(i));
  return vec_scale(Rational(1, 2), sum);
}

bool is_regular_pair(const RSubalgebra& spec) {
  for (const auto& a : spec.ambient().all_roots())
    if (spec.torus().vanishes(a)) return false;
  return true;
}

bool is_regular_pair(const Sl2Spec& spec) {
  for (const auto& a : spec.ambient().all_roots())
    if (spec.eigenvalue(a) == 0) return false;
  return true;
}

bool is_r_subalgebra(const Sl2Spec& spec) {
  const RootSystem& rs = spec.ambient();
  Weight dom = rs.dominant_representative(spec.h_dual());
  std::set<Weight, VecLess> candidates;
  candidates.insert(rs.coroot_dual(rs.highest_root()));
  candidates.insert(rs.dominant_representative(rs.coroot_dual(rs.highest_short_root())));
  return candidates.count(dom) != 0;
}

std::optional<RSubalgebra> sl2_as_r_subalgebra(const Sl2Spec& spec) {
  if (!is_r_subalgebra(spec)) return std::nullopt;
  const RootSystem& rs = spec.ambient();
  Weight dom = rs.dominant_representative(spec.h_dual());
  Weight beta =
      rs.coroot_dual(rs.highest_root()) == dom ? rs.highest_root() : rs.highest_short_root();
  std::vector<int> roots{rs.root_index(beta), rs.root_index(vec_neg(beta))};
  return RSubalgebra(rs, roots, {rs.coroot_dual(beta)});
}

std::optional<bool> is_eligible(const Sl2Spec& spec) {
  auto r = sl2_as_r_subalgebra(spec);
  if (!r) return std::nullopt;
  return is_eligible(*r);
}

namespace {

std::vector<Vec> parse_tuple_list(std::string_view s) {
  std::vector<Vec> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t semi = s.find(';', start);
    if (semi == std::string_view::npos) semi = s.size();
    out.push_back(vec_parse(s.substr(start, semi - start)));
    start = semi + 1;
    if (semi == s.size()) break;
  }
  return out;
}

}  // namespace

TypeLabel spec_line_type(const std::string& line) {
  std::istringstream is(line);
  std::string kind, series, rank;
  if (!(is >> kind >> series >> rank)) throw spec_error("malformed spec line: " + line);
  return TypeLabel::parse(series + rank);
}

ParsedSpec parse_spec_line(const RootSystem& rs, const std::string& line) {
  std::istringstream is(line);
  std::string kind, series, rank;
  if (!(is >> kind >> series >> rank)) throw spec_error("malformed spec line: " + line);
  if (TypeLabel::parse(series + rank) != rs.type())
    throw spec_error("spec line type does not match the root system");
  ParsedSpec out;
  if (kind == "rsub") {
    std::string field;
    std::vector<Vec> roots, torus;
    while (is >> field) {
      if (field.rfind("roots=", 0) == 0)
        roots = parse_tuple_list(std::string_view(field).substr(6));
      else if (field.rfind("torus=", 0) == 0)
        torus = parse_tuple_list(std::string_view(field).substr(6));
      else
        throw spec_error("unknown field '" + field + "' in rsub line");
    }
    if (roots.empty() || torus.empty()) throw spec_error("rsub line needs roots= and torus=");
    out.rsub = RSubalgebra::from_root_weights(rs, roots, torus);
  } else if (kind == "sl2") {
    std::string field;
    if (!(is >> field) || field.rfind("char=", 0) != 0)
      throw spec_error("sl2 line needs char=");
    Vec labels = vec_parse(std::string_view(field).substr(5));
    std::vector<long long> c;
    for (const auto& x : labels) c.push_back(x.as_integer());
    out.sl2 = Sl2Spec(rs, c);
  } else {
    throw spec_error("unknown spec kind '" + kind + "'");
  }
  return out;
}

LoadedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("cannot open spec file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    LoadedSpec out;
    out.rs = std::make_shared<RootSystem>(RootSystem::build(spec_line_type(line)));
    out.spec = parse_spec_line(*out.rs, line);
    return out;
  }
  throw spec_error("spec file contains no spec line: " + path);
}

}  // namespace ghcm
