#include "ghcm/sl2_bounds.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace ghcm {

long long dynkin_index(const Sl2Spec& spec) {
  Rational idx = spec.h_norm2() * Rational(1, 2);
  if (!idx.is_integer() || idx.sign() <= 0)
    throw spec_error("characteristic has non-integral Dynkin index " + idx.str());
  return idx.as_integer();
}

std::map<long long, long long> eigen_multiset(const Sl2Spec& spec) {
  std::map<long long, long long> f;
  for (const auto& a : spec.ambient().all_roots()) {
    long long ev = spec.eigenvalue(a);
    if (ev > 0) ++f[ev];
  }
  return f;
}

BoundsReport bounds(const Sl2Spec& spec) {
  BoundsReport rep;
  rep.eigen_multiset_n = eigen_multiset(spec);
  if (rep.eigen_multiset_n.count(2) == 0)
    throw spec_error("eigenvalue-2 multiplicity is zero (no triple element e)");
  long long total = 0;
  for (const auto& [v, m] : rep.eigen_multiset_n) total += v * m;
  rep.Gamma = Rational(total, 2) - Rational(1);
  rep.dynkin_index = dynkin_index(spec);

  // ch_t(n cap k-perp) = the eigenvalue multiset minus one copy of 2, the
  // weight of e spanning n cap k.
  auto reduced = rep.eigen_multiset_n;
  if (--reduced[2] == 0) reduced.erase(2);
  if (reduced.empty()) {
    rep.lambda1 = rep.lambda2 = 0;  // n cap k-perp = 0; only rank-1 ambient
  } else {
    auto top = std::prev(reduced.end());
    rep.lambda1 = top->first;
    long long count = 0;
    for (const auto& [v, m] : reduced) count += m;
    if (top->second >= 2)
      rep.lambda2 = rep.lambda1;
    else if (count == 1)
      rep.lambda2 = 0;
    else
      rep.lambda2 = std::prev(top)->first;  // submaximum weight
  }
  rep.Lambda = Rational(rep.lambda1 + rep.lambda2, 2);
  return rep;
}

std::string kind_name(Sl2Kind k) {
  switch (k) {
    case Sl2Kind::LongRoot: return "long-root";
    case Sl2Kind::ShortRoot: return "short-root";
    case Sl2Kind::Principal: return "principal";
  }
  return "";
}

Sl2Spec standard_sl2(const RootSystem& rs, Sl2Kind kind) {
  if (kind == Sl2Kind::Principal) {
    std::vector<long long> labels(rs.rank(), 2);
    return Sl2Spec(rs, labels);
  }
  if (kind == Sl2Kind::ShortRoot && !rs.has_short_roots())
    throw spec_error("short-root sl(2) not applicable for " + rs.type().str());
  const Weight& beta = kind == Sl2Kind::LongRoot ? rs.highest_root() : rs.highest_short_root();
  Weight u = rs.dominant_representative(rs.coroot_dual(beta));
  std::vector<long long> labels;
  for (const auto& a : rs.simple_roots()) labels.push_back(rs.form(a, u).as_integer());
  return Sl2Spec(rs, labels);
}

Sl2Catalog Sl2Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open characteristics data file: " + path);
  return parse(in, path);
}

Sl2Catalog Sl2Catalog::parse(std::istream& in, const std::string& origin) {
  Sl2Catalog cat;
  std::string line;
  int lineno = 0;
  std::map<std::string, const RootSystem*> systems;
  std::vector<std::unique_ptr<RootSystem>> owned;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::string type, orbit, labels_s;
    long long idx;
    if (!(is >> type)) continue;  // blank
    if (!(is >> orbit >> labels_s >> idx))
      throw validation_error(origin + ":" + std::to_string(lineno) + ": malformed entry");
    Sl2CatalogEntry e;
    e.type = TypeLabel::parse(type);
    e.orbit_label = orbit;
    for (const auto& x : vec_parse(labels_s)) e.labels.push_back(x.as_integer());
    e.expected_index = idx;

    auto it = systems.find(e.type.str());
    if (it == systems.end()) {
      owned.push_back(std::make_unique<RootSystem>(RootSystem::build(e.type)));
      it = systems.emplace(e.type.str(), owned.back().get()).first;
    }
    long long computed = 0;
    try {
      computed = dynkin_index(Sl2Spec(*it->second, e.labels));
    } catch (const std::exception& ex) {
      throw validation_error(origin + ":" + std::to_string(lineno) + " (" + e.type.str() + " " +
                             e.orbit_label + "): " + ex.what());
    }
    if (computed != e.expected_index)
      throw validation_error(origin + ":" + std::to_string(lineno) + " (" + e.type.str() + " " +
                             e.orbit_label + "): computed index " + std::to_string(computed) +
                             " != labeled index " + std::to_string(e.expected_index));
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

std::vector<Sl2CatalogEntry> Sl2Catalog::entries_for(TypeLabel t) const {
  std::vector<Sl2CatalogEntry> out;
  for (const auto& e : entries_)
    if (e.type == t) out.push_back(e);
  return out;
}

std::vector<TypeLabel> table_a_types() {
  std::vector<TypeLabel> types;
  for (int n = 2; n <= 8; ++n) types.push_back({Series::A, n});
  for (int n = 2; n <= 6; ++n) types.push_back({Series::B, n});
  for (int n = 3; n <= 6; ++n) types.push_back({Series::C, n});
  for (int n = 4; n <= 7; ++n) types.push_back({Series::D, n});
  for (int n = 6; n <= 8; ++n) types.push_back({Series::E, n});
  types.push_back({Series::F, 4});
  types.push_back({Series::G, 2});
  return types;
}

std::vector<TableARow> table_a() {
  std::vector<TableARow> rows;
  for (TypeLabel t : table_a_types()) {
    RootSystem rs = RootSystem::build(t);
    for (Sl2Kind kind : {Sl2Kind::LongRoot, Sl2Kind::ShortRoot, Sl2Kind::Principal}) {
      TableARow row{t, kind, true, {}, {}};
      if (kind == Sl2Kind::ShortRoot && !rs.has_short_roots()) {
        row.applicable = false;
      } else {
        BoundsReport b = bounds(standard_sl2(rs, kind));
        row.gamma = b.Gamma;
        row.lambda = b.Lambda;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<TableBRow> table_b(const Sl2Catalog& catalog) {
  RootSystem f4 = RootSystem::build(TypeLabel{Series::F, 4});
  std::vector<TableBRow> rows;
  for (const auto& e : catalog.entries_for(TypeLabel{Series::F, 4})) {
    BoundsReport b = bounds(Sl2Spec(f4, e.labels));
    rows.push_back({b.dynkin_index, e.orbit_label, e.labels, b.Gamma, b.Lambda});
  }
  std::sort(rows.begin(), rows.end(),
            [](const TableBRow& a, const TableBRow& b) { return a.index < b.index; });
  return rows;
}

}  // namespace ghcm
