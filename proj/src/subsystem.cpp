#include "ghcm/subsystem.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ghcm {

Subsystem::Subsystem(const RootSystem& rs, std::vector<int> root_indices) : rs_(&rs) {
  std::set<int> s(root_indices.begin(), root_indices.end());
  for (int i : s) {
    if (i < 0 || i >= static_cast<int>(rs.all_roots().size()))
      throw spec_error("subsystem root index out of range");
    if (!s.count(rs.negative_of(i))) throw spec_error("subsystem is not symmetric");
  }
  // Closedness: a + b in Delta implies a + b in S.
  for (int i : s)
    for (int j : s) {
      Weight sum = vec_add(rs.root(i), rs.root(j));
      int k = rs.root_index(sum);
      if (k >= 0 && !s.count(k)) throw spec_error("subsystem is not closed");
    }
  idx_.assign(s.begin(), s.end());
  std::vector<Vec> span;
  for (int i : idx_) {
    if (lex_positive(rs.root(i))) positive_.push_back(i);
    span.push_back(rs.root(i));
  }
  rank_ = span_rank(span);

  std::set<int> pos(positive_.begin(), positive_.end());
  for (int i : positive_) {
    bool decomposable = false;
    for (int j : positive_) {
      if (j == i) continue;
      Weight diff = vec_sub(rs.root(i), rs.root(j));
      int k = rs.root_index(diff);
      if (k >= 0 && pos.count(k)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple_.push_back(i);
  }
}

Subsystem Subsystem::closure(const RootSystem& rs, const std::vector<int>& seed) {
  std::set<int> s;
  for (int i : seed) {
    s.insert(i);
    s.insert(rs.negative_of(i));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int i : cur)
      for (int j : cur) {
        int k = rs.root_index(vec_add(rs.root(i), rs.root(j)));
        if (k >= 0 && !s.count(k)) {
          s.insert(k);
          grew = true;
        }
      }
  }
  return Subsystem(rs, std::vector<int>(s.begin(), s.end()));
}

bool Subsystem::contains(int root_idx) const {
  return std::binary_search(idx_.begin(), idx_.end(), root_idx);
}

std::vector<Weight> Subsystem::positive_weights() const {
  std::vector<Weight> out;
  out.reserve(positive_.size());
  for (int i : positive_) out.push_back(rs_->root(i));
  return out;
}

Weight Subsystem::rho() const {
  Weight sum(rs_->ambient_dim(), Rational(0));
  for (int i : positive_) sum = vec_add(sum, rs_->root(i));
  return vec_scale(Rational(1, 2), sum);
}

std::string Subsystem::type_label() const {
  if (simple_.empty()) return "0";
  const size_t m = simple_.size();
  std::vector<Weight> sr;
  for (int i : simple_) sr.push_back(rs_->root(i));

  // Connected components of the Dynkin diagram.
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (size_t i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (size_t u = 0; u < m; ++u)
        if (comp[u] < 0 && !rs_->form(sr[v], sr[u]).is_zero()) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }

  std::vector<std::pair<char, int>> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<size_t> nodes;
    for (size_t i = 0; i < m; ++i)
      if (comp[i] == c) nodes.push_back(i);
    const int r = static_cast<int>(nodes.size());

    int max_bond = 0;
    std::vector<int> degree(r, 0);
    Rational dmax(0);
    for (int a = 0; a < r; ++a) dmax = std::max(dmax, rs_->norm2(sr[nodes[a]]));
    int shorts = 0;
    for (int a = 0; a < r; ++a)
      if (rs_->norm2(sr[nodes[a]]) < dmax) ++shorts;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) {
        Rational pab = rs_->pair_coroot(sr[nodes[a]], sr[nodes[b]]);
        Rational pba = rs_->pair_coroot(sr[nodes[b]], sr[nodes[a]]);
        int bond = (pab * pba).as_integer();
        if (bond > 0) {
          ++degree[a];
          ++degree[b];
        }
        max_bond = std::max(max_bond, bond);
      }

    char series = 'A';
    if (max_bond == 3) {
      series = 'G';
    } else if (max_bond == 2) {
      if (r == 2)
        series = 'B';  // B2 = C2, canonical label B2
      else if (r == 4 && shorts == 2)
        series = 'F';
      else if (shorts == 1)
        series = 'B';
      else
        series = 'C';
    } else {
      int maxdeg = 0;
      for (int a = 0; a < r; ++a) maxdeg = std::max(maxdeg, degree[a]);
      if (maxdeg <= 2) {
        series = 'A';
      } else {
        // Branch lengths around the unique trivalent node.
        int center = 0;
        for (int a = 0; a < r; ++a)
          if (degree[a] == 3) center = a;
        std::vector<int> branch;
        std::vector<bool> seen(r, false);
        seen[center] = true;
        for (int a = 0; a < r; ++a) {
          if (seen[a]) continue;
          if (rs_->form(sr[nodes[a]], sr[nodes[center]]).is_zero()) continue;
          int len = 0, cur = a, prev = center;
          while (cur >= 0) {
            seen[cur] = true;
            ++len;
            int next = -1;
            for (int b = 0; b < r; ++b)
              if (b != cur && b != prev && !seen[b] &&
                  !rs_->form(sr[nodes[b]], sr[nodes[cur]]).is_zero())
                next = b;
            prev = cur;
            cur = next;
          }
          branch.push_back(len);
        }
        std::sort(branch.begin(), branch.end());
        if (branch.size() == 3 && branch[0] == 1 && branch[1] == 1)
          series = 'D';
        else if (branch == std::vector<int>{1, 2, 2})
          series = 'E';  // E6
        else if (branch == std::vector<int>{1, 2, 3})
          series = 'E';  // E7
        else if (branch == std::vector<int>{1, 2, 4})
          series = 'E';  // E8
        else
          throw spec_error("unrecognized simply-laced diagram");
      }
    }
    labels.emplace_back(series, r);
  }
  std::sort(labels.begin(), labels.end());
  std::ostringstream os;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << "+";
    os << labels[i].first << labels[i].second;
  }
  return os.str();
}

Weight Subsystem::dominant(const Weight& v) const {
  Weight w = v;
  while (true) {
    int found = -1;
    for (int i : simple_)
      if (rs_->pair_coroot(w, rs_->root(i)).sign() < 0) {
        found = i;
        break;
      }
    if (found < 0) return w;
    w = rs_->reflect(w, rs_->root(found));
  }
}

bool Subsystem::is_integral(const Weight& zeta) const {
  for (int i : positive_)
    if (!rs_->pair_coroot(zeta, rs_->root(i)).is_integer()) return false;
  return true;
}

bool Subsystem::is_dominant(const Weight& v) const {
  for (int i : positive_)
    if (rs_->pair_coroot(v, rs_->root(i)).sign() < 0) return false;
  return true;
}

long long Subsystem::weyl_dim(const Weight& lambda) const {
  return ghcm::weyl_dim(*rs_, positive_weights(), lambda);
}

}  // namespace ghcm
