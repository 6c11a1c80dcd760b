#include "ghcm/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ghcm {

TypeLabel TypeLabel::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != '_') t.push_back(c);
  if (t.size() < 2) throw spec_error("bad type label '" + std::string(s) + "'");
  char ser = static_cast<char>(std::toupper(t[0]));
  int rank = 0;
  try {
    rank = std::stoi(t.substr(1));
  } catch (...) {
    throw spec_error("bad type label '" + std::string(s) + "'");
  }
  auto in = [&](char lo, char hi) { return ser >= lo && ser <= hi; };
  if (!in('A', 'G')) throw spec_error("unknown series '" + std::string(1, ser) + "'");
  TypeLabel tl{static_cast<Series>(ser), rank};
  bool ok = false;
  switch (tl.series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 3; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok) throw spec_error("rank " + std::to_string(rank) + " out of range for series " +
                            std::string(1, ser));
  return tl;
}

int lie_dimension(TypeLabel t) {
  int n = t.rank;
  switch (t.series) {
    case Series::A: return n * n + 2 * n;
    case Series::B:
    case Series::C: return 2 * n * n + n;
    case Series::D: return 2 * n * n - n;
    case Series::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
    case Series::F: return 52;
    case Series::G: return 14;
  }
  return 0;
}

Weight rho_of_multiset(const WeightMultiset& f, size_t ambient_dim) {
  Weight sum(ambient_dim, Rational(0));
  for (const auto& [w, m] : f) sum = vec_add(sum, vec_scale(Rational(m), w));
  return vec_scale(Rational(1, 2), sum);
}

Rational rho_of_multiset(const std::map<long long, long long>& f) {
  Rational sum;
  for (const auto& [v, m] : f) sum += Rational(v * m);
  return sum * Rational(1, 2);
}

std::string multiset_str(const WeightMultiset& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [w, m] : f) {
    if (!first) os << "; ";
    first = false;
    os << "(" << vec_str(w) << "):" << m;
  }
  os << "}";
  return os.str();
}

std::string multiset_str(const std::map<long long, long long>& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, m] : f) {
    if (!first) os << "; ";
    first = false;
    os << v << ":" << m;
  }
  os << "}";
  return os.str();
}

namespace {

std::vector<Weight> simple_root_table(TypeLabel t, size_t& ambient) {
  const int n = t.rank;
  auto unit = [](size_t dim, size_t i, long long c = 1) {
    Vec v(dim, Rational(0));
    v[i] = Rational(c);
    return v;
  };
  std::vector<Weight> s;
  switch (t.series) {
    case Series::A: {
      ambient = n + 1;
      for (int i = 0; i < n; ++i) {
        Vec v(ambient, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Series::B:
    case Series::C:
    case Series::D: {
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) {
        Vec v(ambient, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      if (t.series == Series::B) s.push_back(unit(ambient, n - 1));
      if (t.series == Series::C) s.push_back(unit(ambient, n - 1, 2));
      if (t.series == Series::D) {
        Vec v(ambient, Rational(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        s.push_back(v);
      }
      break;
    }
    case Series::E: {
      ambient = 8;
      Vec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.push_back(a1);
      Vec a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 0; i < 6; ++i) {
        Vec v(8, Rational(0));
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(v);
      }
      s.resize(n);
      break;
    }
    case Series::F: {
      ambient = 4;
      s.push_back(Vec{0, 1, -1, 0});
      s.push_back(Vec{0, 0, 1, -1});
      s.push_back(Vec{0, 0, 0, 1});
      s.push_back(Vec{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      break;
    }
    case Series::G: {
      ambient = 3;
      s.push_back(Vec{1, -1, 0});
      s.push_back(Vec{-2, 1, 1});
      break;
    }
  }
  return s;
}

}  // namespace

RootSystem RootSystem::build(TypeLabel type) {
  RootSystem rs;
  rs.type_ = type;
  rs.simple_ = simple_root_table(type, rs.ambient_);
  const int n = type.rank;

  // Cartan integers from the realization (scale-invariant in the form).
  std::vector<std::vector<long long>> cartan(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a = Rational(2) * dot_plain(rs.simple_[i], rs.simple_[j]) /
                   dot_plain(rs.simple_[j], rs.simple_[j]);
      cartan[i][j] = a.as_integer();
    }

  // Symmetrizer d_i = <a_i,a_i>/2 from d_i A_ij = d_j A_ji, longest root
  // class normalized to d = 1.
  std::vector<Rational> d(n, Rational(0));
  d[0] = Rational(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        if (!d[j].is_zero() && d[i].is_zero()) {
          d[i] = d[j] * Rational(cartan[i][j]) / Rational(cartan[j][i]);
          changed = true;
        }
      }
  }
  Rational dmax = d[0];
  for (const auto& x : d) dmax = std::max(dmax, x);
  for (auto& x : d) x /= dmax;

  // Ambient form is a multiple of the dot product in every realization used
  // here; the scale is pinned by the symmetrized Cartan data and then
  // cross-checked on all pairs of simple roots.
  Rational scale = Rational(2) * d[0] / dot_plain(rs.simple_[0], rs.simple_[0]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational expect = d[j] * Rational(cartan[i][j]);
      if (scale * dot_plain(rs.simple_[i], rs.simple_[j]) != expect)
        throw spec_error("form derivation inconsistent for " + type.str());
    }
  rs.form_scale_ = scale;
  rs.form_matrix_.assign(rs.ambient_, Vec(rs.ambient_, Rational(0)));
  for (size_t i = 0; i < rs.ambient_; ++i) rs.form_matrix_[i][i] = scale;

  // Close the simple roots under simple reflections; keep the expansion in
  // the simple basis to read off positivity.
  std::map<Weight, std::vector<long long>, VecLess> tbl;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> c(n, 0);
    c[i] = 1;
    tbl[rs.simple_[i]] = c;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<Weight, std::vector<long long>>> batch(tbl.begin(), tbl.end());
    for (const auto& [beta, coords] : batch) {
      for (int i = 0; i < n; ++i) {
        Rational c = rs.pair_coroot(beta, rs.simple_[i]);
        Weight img = vec_sub(beta, vec_scale(c, rs.simple_[i]));
        if (vec_is_zero(img) || tbl.count(img)) continue;
        auto cc = coords;
        cc[i] -= c.as_integer();
        tbl[img] = cc;
        grew = true;
      }
    }
  }
  for (const auto& [beta, coords] : tbl) {
    Weight neg = vec_neg(beta);
    if (!tbl.count(neg)) throw spec_error("root closure is not symmetric for " + type.str());
    rs.roots_.push_back(beta);
    bool pos = std::all_of(coords.begin(), coords.end(), [](long long c) { return c >= 0; });
    if (pos) rs.positive_.push_back(beta);
  }
  if (static_cast<int>(rs.roots_.size()) != lie_dimension(type) - n)
    throw spec_error("root count mismatch for " + type.str());

  for (size_t i = 0; i < rs.roots_.size(); ++i) rs.root_index_[rs.roots_[i]] = static_cast<int>(i);
  rs.neg_index_.resize(rs.roots_.size());
  for (size_t i = 0; i < rs.roots_.size(); ++i)
    rs.neg_index_[i] = rs.root_index_.at(vec_neg(rs.roots_[i]));

  Weight sum(rs.ambient_, Rational(0));
  for (const auto& a : rs.positive_) sum = vec_add(sum, a);
  rs.rho_ = vec_scale(Rational(1, 2), sum);

  // Highest root of each length class = the one of maximal height.
  Rational best_h(-1), best_s(-1);
  for (const auto& a : rs.positive_) {
    Rational h(std::accumulate(tbl.at(a).begin(), tbl.at(a).end(), 0LL));
    if (rs.is_long(a)) {
      if (h > best_h) {
        best_h = h;
        rs.highest_root_ = a;
      }
    } else {
      rs.has_short_ = true;
      if (h > best_s) {
        best_s = h;
        rs.highest_short_ = a;
      }
    }
  }
  if (!rs.has_short_) rs.highest_short_ = rs.highest_root_;

  // Longest-element word: the reflection sequence that makes -rho dominant.
  Weight v = vec_neg(rs.rho_);
  while (true) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (rs.pair_coroot(v, rs.simple_[k]).sign() < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    v = rs.reflect(v, rs.simple_[i]);
    rs.w0_word_.push_back(i);
  }
  return rs;
}

Rational RootSystem::form(const Weight& v, const Weight& w) const {
  if (v.size() != ambient_ || w.size() != ambient_)
    throw spec_error("dimension mismatch in form evaluation");
  return form_scale_ * dot_plain(v, w);
}

Weight RootSystem::coroot_dual(const Weight& alpha) const {
  return vec_scale(Rational(2) / norm2(alpha), alpha);
}

Rational RootSystem::pair_coroot(const Weight& v, const Weight& alpha) const {
  return Rational(2) * form(v, alpha) / norm2(alpha);
}

Weight RootSystem::reflect(const Weight& v, const Weight& alpha) const {
  return vec_sub(v, vec_scale(pair_coroot(v, alpha), alpha));
}

int RootSystem::root_index(const Weight& v) const {
  auto it = root_index_.find(v);
  return it == root_index_.end() ? -1 : it->second;
}

Weight RootSystem::fundamental_weight(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw spec_error("fundamental weight index out of range");
  // omega_i = sum_k y_k a_k with <omega_i, a_j^vee> = delta_ij.
  std::vector<Vec> m(n, Vec(n, Rational(0)));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m[j][k] = pair_coroot(simple_[k], simple_[j]);
  Vec rhs(n, Rational(0));
  rhs[i] = Rational(1);
  Vec y = solve_linear(m, rhs);
  Weight w(ambient_, Rational(0));
  for (int k = 0; k < n; ++k) w = vec_add(w, vec_scale(y[k], simple_[k]));
  return w;
}

bool RootSystem::is_dominant(const Weight& v) const {
  for (const auto& a : simple_)
    if (pair_coroot(v, a).sign() < 0) return false;
  return true;
}

Weight RootSystem::dominant_representative(const Weight& v) const {
  Weight w = v;
  while (true) {
    int i = -1;
    for (int k = 0; k < rank(); ++k)
      if (pair_coroot(w, simple_[k]).sign() < 0) {
        i = k;
        break;
      }
    if (i < 0) return w;
    w = reflect(w, simple_[i]);
  }
}

Weight RootSystem::longest_element_image(const Weight& v) const {
  Weight w = v;
  for (auto it = w0_word_.rbegin(); it != w0_word_.rend(); ++it) w = reflect(w, simple_[*it]);
  return w;
}

long long weyl_dim(const RootSystem& rs, const std::vector<Weight>& positive, const Weight& lambda) {
  Weight sum(rs.ambient_dim(), Rational(0));
  for (const auto& a : positive) sum = vec_add(sum, a);
  Weight rho_dat = vec_scale(Rational(1, 2), sum);

  // Gather the factors <lambda+rho, a^vee> / <rho, a^vee> as small integers
  // and cancel across the lists before multiplying, so no big-integer type
  // is needed.
  std::vector<long long> nums, dens;
  for (const auto& a : positive) {
    Rational p = rs.pair_coroot(lambda, a);
    if (!p.is_integer() || p.sign() < 0)
      throw precondition_error("weight is not dominant integral for the datum (pairing " +
                               p.str() + ")");
    Rational top = rs.pair_coroot(vec_add(lambda, rho_dat), a);
    Rational bot = rs.pair_coroot(rho_dat, a);
    Rational q = top / bot;
    nums.push_back(q.num());
    dens.push_back(q.den());
  }
  for (auto& dv : dens) {
    for (auto& nv : nums) {
      if (dv == 1) break;
      long long g = std::gcd(nv, dv);
      nv /= g;
      dv /= g;
    }
    if (dv != 1) throw arithmetic_error("weyl dimension did not reduce to an integer");
  }
  unsigned __int128 prod = 1;
  for (long long nv : nums) {
    prod *= static_cast<unsigned long long>(nv);
    if (prod > static_cast<unsigned __int128>(INT64_MAX))
      throw arithmetic_error("weyl dimension overflow");
  }
  return static_cast<long long>(prod);
}

long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
  return weyl_dim(rs, rs.positive_roots(), lambda);
}

}  // namespace ghcm
