// ghcm command-line front end: bounds tables, genericity queries, eligibility
// and Fernando-Kac reports, discrete-series parameters.
//
// Exit codes: 0 success; 1 check mismatch or computation/precondition
// failure; 2 usage error; 3 data-file validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghcm/characters.hpp"
#include "ghcm/parabolic.hpp"
#include "ghcm/reference_values.hpp"
#include "ghcm/series.hpp"
#include "ghcm/sl2_bounds.hpp"

using namespace ghcm;
using nlohmann::json;

namespace {

std::string data_dir_default() {
  if (const char* env = std::getenv("GHCM_DATA_DIR")) return env;
#ifdef GHCM_DEFAULT_DATA_DIR
  return GHCM_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

struct Options {
  std::string format = "text";
  std::string data_dir = data_dir_default();
};

Sl2Spec select_sl2(const RootSystem& rs, const std::string& selector, const Options& opt) {
  if (selector == "long-root") return standard_sl2(rs, Sl2Kind::LongRoot);
  if (selector == "short-root") return standard_sl2(rs, Sl2Kind::ShortRoot);
  if (selector == "principal") return standard_sl2(rs, Sl2Kind::Principal);
  if (selector.rfind("char=", 0) == 0) {
    std::vector<long long> labels;
    for (const auto& x : vec_parse(selector.substr(5))) labels.push_back(x.as_integer());
    return Sl2Spec(rs, labels);
  }
  if (selector.rfind("index=", 0) == 0) {
    long long want = std::stoll(selector.substr(6));
    Sl2Catalog cat = Sl2Catalog::load(opt.data_dir + "/sl2_catalog.dat");
    for (const auto& e : cat.entries_for(rs.type()))
      if (e.expected_index == want) return Sl2Spec(rs, e.labels);
    throw spec_error("no catalog entry of index " + std::to_string(want) + " for " +
                     rs.type().str());
  }
  throw CLI::ValidationError("selector", "unknown sl(2) selector '" + selector + "'");
}

std::string rational_cell(const Rational& r) { return r.str(); }

/// Spec-file problems are data errors (exit 3), not usage errors.
LoadedSpec load_spec_checked(const std::string& path) {
  try {
    return load_spec_file(path);
  } catch (const spec_error& e) {
    throw validation_error(e.what());
  }
}

int cmd_table_a(const Options& opt, bool check) {
  auto rows = table_a();
  int mismatches = 0;
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json cell{{"type", r.type.str()}, {"kind", kind_name(r.kind)}};
      if (r.applicable) {
        cell["gamma"] = rational_cell(r.gamma);
        cell["lambda"] = rational_cell(r.lambda);
      } else {
        cell["applicable"] = false;
      }
      j.push_back(cell);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    const char* sep = opt.format == "tsv" ? "\t" : "  ";
    std::cout << "type" << sep << "kind" << sep << "Gamma" << sep << "Lambda\n";
    for (const auto& r : rows) {
      std::cout << r.type.str() << sep << kind_name(r.kind) << sep;
      if (r.applicable)
        std::cout << rational_cell(r.gamma) << sep << rational_cell(r.lambda) << "\n";
      else
        std::cout << "n/a" << sep << "n/a\n";
    }
  }
  if (check) {
    for (const auto& r : rows) {
      auto expected = reference::table_a_expected(r.type, r.kind);
      if (!r.applicable) {
        if (expected) ++mismatches;
        continue;
      }
      if (!expected || r.gamma != expected->first || r.lambda != expected->second) {
        ++mismatches;
        std::cerr << "mismatch: " << r.type.str() << " " << kind_name(r.kind) << " computed ("
                  << r.gamma.str() << "," << r.lambda.str() << ")\n";
      }
    }
    if (mismatches) return 1;
    std::cerr << "table-a check: all cells match\n";
  }
  return 0;
}

int cmd_table_b(const Options& opt, bool check) {
  Sl2Catalog cat = Sl2Catalog::load(opt.data_dir + "/sl2_catalog.dat");
  auto rows = table_b(cat);
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"index", r.index},
                   {"orbit", r.orbit_label},
                   {"gamma", rational_cell(r.gamma)},
                   {"lambda", rational_cell(r.lambda)}});
    std::cout << j.dump(2) << "\n";
  } else {
    const char* sep = opt.format == "tsv" ? "\t" : "  ";
    std::cout << "index" << sep << "orbit" << sep << "Gamma" << sep << "Lambda\n";
    for (const auto& r : rows)
      std::cout << r.index << sep << r.orbit_label << sep << rational_cell(r.gamma) << sep
                << rational_cell(r.lambda) << "\n";
  }
  if (check) {
    auto expected = reference::table_b_expected();
    int mismatches = 0;
    if (rows.size() != expected.size()) ++mismatches;
    for (size_t i = 0; i < rows.size() && i < expected.size(); ++i)
      if (rows[i].index != expected[i].index || rows[i].gamma != expected[i].gamma ||
          rows[i].lambda != expected[i].lambda) {
        ++mismatches;
        std::cerr << "mismatch at index " << rows[i].index << "\n";
      }
    if (mismatches) return 1;
    std::cerr << "table-b check: all 15 rows match\n";
  }
  return 0;
}

int cmd_bounds(const Options& opt, const std::string& type, const std::string& selector) {
  RootSystem rs = RootSystem::build(type);
  Sl2Spec spec = select_sl2(rs, selector, opt);
  BoundsReport b = bounds(spec);
  if (opt.format == "json") {
    json j{{"type", rs.type().str()},
           {"characteristic", spec.characteristic()},
           {"dynkin_index", b.dynkin_index},
           {"gamma", b.Gamma.str()},
           {"lambda", b.Lambda.str()},
           {"lambda1", b.lambda1},
           {"lambda2", b.lambda2}};
    json mult = json::array();
    for (const auto& [v, m] : b.eigen_multiset_n) mult.push_back({{"value", v}, {"mult", m}});
    j["eigen_multiset_n"] = mult;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "type           = " << rs.type().str() << "\n";
    std::cout << "characteristic = ";
    for (size_t i = 0; i < spec.characteristic().size(); ++i)
      std::cout << (i ? "," : "") << spec.characteristic()[i];
    std::cout << "\n";
    std::cout << "eigenvalues(n) = " << multiset_str(b.eigen_multiset_n) << "\n";
    std::cout << "dynkin index   = " << b.dynkin_index << "\n";
    std::cout << "Gamma          = " << b.Gamma << "\n";
    std::cout << "lambda1/2      = " << b.lambda1 << ", " << b.lambda2 << "\n";
    std::cout << "Lambda         = " << b.Lambda << "\n";
  }
  return 0;
}

int cmd_generic(const Options& opt, const std::string& type, const std::string& selector,
                const std::string& mu_str) {
  RootSystem rs = RootSystem::build(type);
  Sl2Spec spec = select_sl2(rs, selector, opt);
  Rational mu = Rational::parse(mu_str);
  GenericityResult r = is_generic(spec, mu);
  if (opt.format == "json") {
    json j{{"type", rs.type().str()}, {"mu", mu.str()}, {"result", r.describe()},
           {"generic", r.generic()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "V(" << mu << ") is " << r.describe() << "\n";
  }
  return 0;
}

int cmd_eligible(const Options& opt, const std::string& file) {
  LoadedSpec ls = load_spec_checked(file);
  if (ls.spec.sl2) {
    auto res = is_eligible(*ls.spec.sl2);
    if (!res) {
      std::cout << "eligibility not decidable by this engine (non-root sl(2))\n";
      return 0;
    }
    std::cout << "eligible: " << (*res ? "yes" : "no") << "\n";
    return 0;
  }
  const RSubalgebra& k = *ls.spec.rsub;
  CentralizerReport rep = centralizers(k);
  bool elig = rep.c_k_ss_dim == rep.c_t_ss_dim;
  const RootSystem& rs = k.ambient();
  auto label_of = [&](const std::vector<int>& roots) {
    return roots.empty() ? std::string("0") : Subsystem(rs, roots).type_label();
  };
  if (opt.format == "json") {
    json j{{"eligible", elig},
           {"c_t_ss_dim", rep.c_t_ss_dim},
           {"c_k_ss_dim", rep.c_k_ss_dim},
           {"c_t_type", label_of(rep.c_t_roots)},
           {"c_k_type", label_of(rep.c_k_roots)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "eligible     = " << (elig ? "yes" : "no") << "\n"
              << "C(t)_ss      = type " << label_of(rep.c_t_roots) << ", dim " << rep.c_t_ss_dim
              << "\n"
              << "C(k)_ss      = type " << label_of(rep.c_k_roots) << ", dim " << rep.c_k_ss_dim
              << "\n"
              << "k~ root count = " << rep.tilde_k_roots.size() << "\n";
  }
  return 0;
}

int cmd_fk(const Options& opt, const std::string& file, const std::string& nu_str) {
  LoadedSpec ls = load_spec_checked(file);
  if (!ls.spec.rsub) throw spec_error("fk requires an rsub spec file");
  Weight nu = vec_parse(nu_str);
  FkVerdict v = fk_maximality(nu, *ls.spec.rsub);
  if (opt.format == "json") {
    json j;
    j["verdict"] = v.verdict == FkConclusion::Maximal ? "maximal" : "inconclusive";
    json tested = json::array();
    for (const auto& t : v.tested)
      tested.push_back({{"type", t.type_label},
                        {"roots", t.subsystem.roots().size()},
                        {"integral", t.integral}});
    j["tested"] = tested;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v.report();
  }
  return 0;
}

int cmd_dsparams(const Options& opt, const std::string& file, const std::string& lambda_str) {
  LoadedSpec ls = load_spec_checked(file);
  if (!ls.spec.rsub) throw spec_error("dsparams requires an rsub spec file");
  Weight lambda = vec_parse(lambda_str);
  DiscreteSeriesParams ds = discrete_series_params(*ls.spec.rsub, lambda);
  if (opt.format == "json")
    std::cout << ds.json() << "\n";
  else
    std::cout << ds.report();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for root systems, sl(2) genericity bounds, "
               "eligible subalgebras, and generalized Harish-Chandra parameters"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format: text, tsv, json")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->capture_default_str();
  app.add_option("--data-dir", opt.data_dir,
                 "directory with the characteristics data files (default: "
                 "$GHCM_DATA_DIR or the bundled data/)")
      ->capture_default_str();

  bool check_a = false, check_b = false;
  auto* ta = app.add_subcommand("table-a", "genericity bounds for the standard sl(2) classes");
  ta->add_flag("--check", check_a, "compare against the stored reference values");
  auto* tb = app.add_subcommand("table-b", "genericity bounds for all F4 sl(2) classes");
  tb->add_flag("--check", check_b, "compare against the stored reference values");

  std::string type, selector, mu_str, file, nu_str, lambda_str;
  auto* bd = app.add_subcommand("bounds", "bounds report for one sl(2) subalgebra");
  bd->add_option("type", type, "simple type, e.g. E8")->required();
  bd->add_option("selector", selector,
                 "long-root | short-root | principal | index=<k> | char=<labels>")
      ->required();

  auto* gn = app.add_subcommand("generic", "genericity of the k-type V(mu) for an sl(2)");
  gn->add_option("type", type, "simple type")->required();
  gn->add_option("selector", selector, "sl(2) selector")->required();
  gn->add_option("mu", mu_str, "highest weight (integer or rational)")->required();

  auto* el = app.add_subcommand("eligible", "eligibility and centralizer report");
  el->add_option("spec-file", file, "subalgebra spec file (.rsub or sl2 line)")->required();

  auto* fk = app.add_subcommand("fk", "Fernando-Kac maximality verdict");
  fk->add_option("spec-file", file, "rsub spec file for k~")->required();
  fk->add_option("nu", nu_str, "highest weight of E, comma-separated rationals")->required();

  auto* ds = app.add_subcommand("dsparams", "generalized discrete series parameters");
  ds->add_option("spec-file", file, "rsub spec file for an eligible k")->required();
  ds->add_option("lambda", lambda_str, "weight lambda, comma-separated rationals")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ta->parsed()) return cmd_table_a(opt, check_a);
    if (tb->parsed()) return cmd_table_b(opt, check_b);
    if (bd->parsed()) return cmd_bounds(opt, type, selector);
    if (gn->parsed()) return cmd_generic(opt, type, selector, mu_str);
    if (el->parsed()) return cmd_eligible(opt, file);
    if (fk->parsed()) return cmd_fk(opt, file, nu_str);
    if (ds->parsed()) return cmd_dsparams(opt, file, lambda_str);
  } catch (const validation_error& e) {
    std::cerr << "data validation error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // malformed request (bad type, selector, weight, or spec line)
  } catch (const arithmetic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // unparsable rational in an argument
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
