#pragma once

#include <string>
#include <vector>

#include "ghcm/rational.hpp"

namespace ghcm {

/// Exact coordinate vector in the ambient epsilon space. Weights, roots and
/// torus vectors are all carried in this form.
using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Rational dot_plain(const Vec& a, const Vec& b);

/// First nonzero coordinate is positive. Total order used to pick positive
/// systems deterministically.
bool lex_positive(const Vec& a);
bool lex_less(const Vec& a, const Vec& b);

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

std::string vec_str(const Vec& v);
Vec vec_parse(std::string_view s);  // comma-separated rationals

/// Solve A x = b for square exact A (Gauss-Jordan). Throws if singular.
Vec solve_linear(std::vector<Vec> a, Vec b);

/// Row-reduce the given spanning list to an echelon basis of its span.
std::vector<Vec> reduced_basis(const std::vector<Vec>& rows);

int span_rank(const std::vector<Vec>& rows);
bool in_span(const std::vector<Vec>& basis, const Vec& v);

}  // namespace ghcm
