#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ghcm/root_system.hpp"
#include "helpers.hpp"

using namespace ghcm;
using ghcm::testing::brute_orbit;
using ghcm::testing::brute_same_orbit;
using ghcm::testing::random_weight;
using ghcm::testing::random_weyl_image;

namespace {
const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
                           "D4", "D5", "E6", "E7", "E8", "F4", "G2"};
}

TEST_CASE("build: root counts match dim g - rank for every type") {
  for (const char* lbl : kAllTypes) {
    RootSystem rs = RootSystem::build(lbl);
    CAPTURE(lbl);
    CHECK(rs.all_roots().size() == size_t(lie_dimension(rs.type()) - rs.rank()));
    CHECK(rs.positive_roots().size() * 2 == rs.all_roots().size());
  }
}

TEST_CASE("build: roots are symmetric and closed under simple reflections") {
  for (const char* lbl : {"A3", "C3", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(lbl);
    for (const auto& a : rs.all_roots()) {
      CHECK(rs.is_root(vec_neg(a)));
      for (const auto& s : rs.simple_roots()) CHECK(rs.is_root(rs.reflect(a, s)));
    }
  }
}

TEST_CASE("build: A2 has 6 roots, all long") {
  RootSystem rs = RootSystem::build("A2");
  CHECK(rs.all_roots().size() == 6);
  for (const auto& a : rs.all_roots()) CHECK(rs.norm2(a) == Rational(2));
}

TEST_CASE("build: F4 has 48 roots, 24 long and 24 short") {
  RootSystem rs = RootSystem::build("F4");
  int longs = 0, shorts = 0;
  for (const auto& a : rs.all_roots()) {
    if (rs.norm2(a) == Rational(2))
      ++longs;
    else if (rs.norm2(a) == Rational(1))
      ++shorts;
  }
  CHECK(longs == 24);
  CHECK(shorts == 24);
}

TEST_CASE("build: G2 short roots have squared length 2/3") {
  RootSystem rs = RootSystem::build("G2");
  CHECK(rs.norm2(rs.highest_short_root()) == Rational(2, 3));
  int shorts = 0;
  for (const auto& a : rs.all_roots())
    if (rs.norm2(a) == Rational(2, 3)) ++shorts;
  CHECK(shorts == 6);
}

TEST_CASE("build: errors on unknown or out-of-range labels") {
  CHECK_THROWS_AS(RootSystem::build("H3"), spec_error);
  CHECK_THROWS_AS(RootSystem::build("C2"), spec_error);
  CHECK_THROWS_AS(RootSystem::build("D3"), spec_error);
  CHECK_THROWS_AS(RootSystem::build("E9"), spec_error);
  CHECK_THROWS_AS(RootSystem::build("F5"), spec_error);
  CHECK_THROWS_AS(RootSystem::build("A0"), spec_error);
}

TEST_CASE("form: highest root has norm 2 in simply-laced types") {
  for (const char* lbl : {"A3", "D4", "E6", "E7", "E8"}) {
    RootSystem rs = RootSystem::build(lbl);
    CHECK(rs.norm2(rs.highest_root()) == Rational(2));
  }
}

TEST_CASE("form: bilinearity against zero, B3 epsilon values") {
  RootSystem rs = RootSystem::build("B3");
  Weight zero(3, Rational(0));
  Weight e1{1, 0, 0}, e2{0, 1, 0};
  CHECK(rs.form(e1, zero) == Rational(0));
  CHECK(rs.form(e1, e2) == Rational(0));
  CHECK(rs.form(e1, e1) == Rational(1));
  CHECK_THROWS_AS(rs.form(e1, Weight{1, 0}), spec_error);
}

TEST_CASE("form: reflection invariance over all root pairs") {
  for (const char* lbl : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(lbl);
    for (const auto& a : rs.all_roots())
      for (const auto& b : rs.all_roots()) {
        Weight rb = rs.reflect(b, a);
        REQUIRE(rs.norm2(rb) == rs.norm2(b));
      }
  }
}

TEST_CASE("rho pairs to 1 with every simple coroot") {
  for (const char* lbl : kAllTypes) {
    RootSystem rs = RootSystem::build(lbl);
    for (const auto& a : rs.simple_roots()) CHECK(rs.pair_coroot(rs.rho(), a) == Rational(1));
  }
}

TEST_CASE("rho_of_multiset") {
  WeightMultiset empty;
  CHECK(rho_of_multiset(empty, 2) == Weight{0, 0});

  std::map<long long, long long> scalar{{2, 1}};
  CHECK(rho_of_multiset(scalar) == Rational(1));
  std::map<long long, long long> scalar2{{1, 2}, {3, 1}};
  CHECK(rho_of_multiset(scalar2) == Rational(5, 2));

  WeightMultiset f;
  f[Weight{1, 0}] = 2;
  f[Weight{0, 1}] = 1;
  CHECK(rho_of_multiset(f, 2) == Weight{1, Rational(1, 2)});
}

TEST_CASE("weyl_dim: trivial, adjoint, errors") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(weyl_dim(a2, Weight(3, Rational(0))) == 1);
  CHECK(weyl_dim(a2, a2.highest_root()) == 8);
  RootSystem f4 = RootSystem::build("F4");
  CHECK(weyl_dim(f4, f4.highest_root()) == 52);
  // non-dominant and non-integral weights are rejected
  CHECK_THROWS_AS(weyl_dim(a2, vec_neg(a2.highest_root())), precondition_error);
  CHECK_THROWS_AS(weyl_dim(a2, vec_scale(Rational(1, 2), a2.highest_root())), precondition_error);
}

TEST_CASE("weyl_dim: contragredient duality over rank <= 3 sweep") {
  for (const char* lbl : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    RootSystem rs = RootSystem::build(lbl);
    const int n = rs.rank();
    std::vector<Weight> fw;
    for (int i = 0; i < n; ++i) fw.push_back(rs.fundamental_weight(i));
    std::vector<int> c(n, 0);
    while (true) {
      Weight lam(rs.ambient_dim(), Rational(0));
      for (int i = 0; i < n; ++i) lam = vec_add(lam, vec_scale(Rational(c[i]), fw[i]));
      Weight dual = vec_neg(rs.longest_element_image(lam));
      CHECK(weyl_dim(rs, lam) == weyl_dim(rs, dual));
      int i = 0;
      while (i < n && c[i] == 3) c[i++] = 0;
      if (i == n) break;
      ++c[i];
    }
  }
}

TEST_CASE("longest_element_image") {
  RootSystem a1 = RootSystem::build("A1");
  Weight mu{Rational(3), Rational(-3)};
  CHECK(a1.longest_element_image(mu) == vec_neg(mu));

  // B2: w0 = -id, cross-checked against the full orbit
  RootSystem b2 = RootSystem::build("B2");
  Weight v{Rational(2), Rational(1)};
  CHECK(b2.longest_element_image(v) == vec_neg(v));
  CHECK(brute_orbit(b2, v).count(vec_neg(v)) == 1);

  // A2: w0(omega_1) = -omega_2
  RootSystem a2 = RootSystem::build("A2");
  Weight w1 = a2.fundamental_weight(0), w2 = a2.fundamental_weight(1);
  CHECK(a2.longest_element_image(w1) == vec_neg(w2));
  CHECK(brute_same_orbit(a2, w1, vec_neg(w2)));
}

TEST_CASE("dominant_representative: examples") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(a2.dominant_representative(a2.rho()) == a2.rho());  // idempotent on dominants
  Weight s1rho = a2.reflect(a2.rho(), a2.simple_roots()[0]);
  CHECK(a2.dominant_representative(s1rho) == a2.rho());

  RootSystem b2 = RootSystem::build("B2");
  Weight z{Rational(-1), Rational(-2)};
  Weight dom = b2.dominant_representative(z);
  CHECK(dom == Weight{Rational(2), Rational(1)});
  // brute force: the unique dominant point of the orbit
  int dominant_count = 0;
  for (const auto& w : brute_orbit(b2, z)) {
    if (b2.is_dominant(w)) {
      ++dominant_count;
      CHECK(w == dom);
    }
  }
  CHECK(dominant_count == 1);
}

TEST_CASE("dominant_representative: W-invariance on random pairs, rank <= 4") {
  std::mt19937 rng(20240811);
  for (const char* lbl : {"A2", "A4", "B3", "B4", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(lbl);
    for (int trial = 0; trial < 100; ++trial) {
      Weight z = random_weight(rs, rng);
      Weight wz = random_weyl_image(rs, z, rng);
      REQUIRE(rs.dominant_representative(wz) == rs.dominant_representative(z));
      REQUIRE(rs.dominant_representative(rs.dominant_representative(z)) ==
              rs.dominant_representative(z));
    }
  }
}

TEST_CASE("weight printing uses exact rationals") {
  Weight v{Rational(1, 2), Rational(-3), Rational(2, 3)};
  CHECK(vec_str(v) == "1/2,-3,2/3");
  CHECK(vec_parse("1/2,-3,2/3") == v);
}
