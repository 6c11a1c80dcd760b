#include "ghcm/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace ghcm {

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot_plain(const Vec& a, const Vec& b) {
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_positive(const Vec& a) {
  for (const auto& x : a) {
    if (x.sign() > 0) return true;
    if (x.sign() < 0) return false;
  }
  return false;
}

bool lex_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

Vec vec_parse(std::string_view s) {
  Vec out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    out.push_back(Rational::parse(s.substr(start, comma - start)));
    start = comma + 1;
    if (comma == s.size()) break;
  }
  return out;
}

Vec solve_linear(std::vector<Vec> a, Vec b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = Rational(1) / a[col][col];
    for (size_t j = 0; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<Vec> reduced_basis(const std::vector<Vec>& rows) {
  std::vector<Vec> m;
  for (const auto& r : rows)
    if (!vec_is_zero(r)) m.push_back(r);
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < m.size(); ++col) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = Rational(1) / m[rank][col];
    for (size_t j = 0; j < cols; ++j) m[rank][j] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

int span_rank(const std::vector<Vec>& rows) { return static_cast<int>(reduced_basis(rows).size()); }

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  std::vector<Vec> rows = basis;
  int r0 = span_rank(rows);
  rows.push_back(v);
  return span_rank(rows) == r0;
}

}  // namespace ghcm
