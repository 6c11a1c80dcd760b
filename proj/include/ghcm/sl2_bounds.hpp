#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ghcm/subalgebra.hpp"

namespace ghcm {

/// The genericity bounds attached to an sl(2)-subalgebra: Gamma from the
/// full eigenvalue multiset on n, Lambda from the top two weights of
/// n cap k-perp, plus the Dynkin index <h,h>/2.
struct BoundsReport {
  std::map<long long, long long> eigen_multiset_n;  // value -> multiplicity, values > 0
  long long lambda1 = 0;
  long long lambda2 = 0;
  Rational Lambda;
  Rational Gamma;
  long long dynkin_index = 0;
};

long long dynkin_index(const Sl2Spec& spec);
std::map<long long, long long> eigen_multiset(const Sl2Spec& spec);
BoundsReport bounds(const Sl2Spec& spec);

enum class Sl2Kind { LongRoot, ShortRoot, Principal };
std::string kind_name(Sl2Kind k);

/// The three distinguished classes. ShortRoot exists only for B, C, F4, G2.
Sl2Spec standard_sl2(const RootSystem& rs, Sl2Kind kind);

struct Sl2CatalogEntry {
  TypeLabel type;
  std::string orbit_label;
  std::vector<long long> labels;
  long long expected_index = 0;
};

/// Characteristics data file, one entry per line:
///   <type> <orbit-label> <comma-separated labels> <expected-index>
/// Every entry is validated on load by recomputing its Dynkin index.
class Sl2Catalog {
 public:
  static Sl2Catalog load(const std::string& path);
  static Sl2Catalog parse(std::istream& in, const std::string& origin);

  const std::vector<Sl2CatalogEntry>& entries() const { return entries_; }
  std::vector<Sl2CatalogEntry> entries_for(TypeLabel t) const;

 private:
  std::vector<Sl2CatalogEntry> entries_;
};

struct TableARow {
  TypeLabel type;
  Sl2Kind kind;
  bool applicable = true;
  Rational gamma;
  Rational lambda;
};

/// Ranks covered by the shipped table: A2..A8, B2..B6, C3..C6, D4..D7,
/// E6..E8, F4, G2.
std::vector<TypeLabel> table_a_types();

/// All rows computed from the root systems (never from stored constants).
std::vector<TableARow> table_a();

struct TableBRow {
  long long index = 0;
  std::string orbit_label;
  std::vector<long long> labels;
  Rational gamma;
  Rational lambda;
};

/// The F4 rows of the catalog, sorted by index, with recomputed bounds.
std::vector<TableBRow> table_b(const Sl2Catalog& catalog);

}  // namespace ghcm
