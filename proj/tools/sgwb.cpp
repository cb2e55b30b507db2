// Command-line surface of the semigroup workbench.
//
// Exit codes: 0 = success / all checks pass / derivation found,
//             1 = a check failed, a counterexample exists, or the
//                 derivation search exhausted its budget,
//             2 = usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgw/catalog.hpp"
#include "sgw/classifier.hpp"
#include "sgw/derivation.hpp"
#include "sgw/enumeration.hpp"
#include "sgw/json_io.hpp"
#include "sgw/models.hpp"
#include "sgw/oracle.hpp"
#include "sgw/suites.hpp"

namespace {

using nlohmann::json;

// An identity argument is a file of identity lines, "preset:NAME", or
// inline text.
std::vector<sgw::Identity> identities_from_arg(const std::string& arg) {
  if (arg.rfind("preset:", 0) == 0)
    return sgw::preset_identities(arg.substr(7)).identities;
  if (std::filesystem::exists(arg)) return sgw::load_identity_file(arg);
  return {sgw::parse_identity(arg)};
}

std::vector<sgw::Identity> identities_from_args(
    const std::vector<std::string>& args) {
  std::vector<sgw::Identity> out;
  for (const auto& a : args) {
    auto part = identities_from_arg(a);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void print_table_text(const sgw::CayleyTable& S, std::ostream& out) {
  out << S.name << " (order " << S.order;
  if (S.zero) out << ", zero=" << S.labels[*S.zero];
  if (S.identity) out << ", identity=" << S.labels[*S.identity];
  out << ")\n";
  std::size_t width = 0;
  for (const auto& l : S.labels) width = std::max(width, l.size());
  auto pad = [&](const std::string& s) {
    out << s << std::string(width - s.size() + 1, ' ');
  };
  pad("");
  for (int j = 0; j < S.order; ++j) pad(S.labels[j]);
  out << '\n';
  for (int i = 0; i < S.order; ++i) {
    pad(S.labels[i]);
    for (int j = 0; j < S.order; ++j) pad(S.labels[S.at(i, j)]);
    out << '\n';
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact workbench for finite semigroups and omega-term identities"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  // check
  auto* check = app.add_subcommand(
      "check", "test identities against a semigroup table");
  std::string check_table;
  std::vector<std::string> check_ids;
  check->add_option("table", check_table,
                    "semigroup JSON file, or a model like T(2)")
      ->required();
  check->add_option("identity", check_ids,
                    "identity text, file, or preset:NAME")
      ->required();

  // classify
  auto* classify_cmd = app.add_subcommand(
      "classify", "classify a product identity and print what it implies");
  std::string classify_text;
  classify_cmd->add_option("identity", classify_text, "identity text")
      ->required();

  // build
  auto* build = app.add_subcommand("build", "construct a model table");
  std::string build_what;
  std::string build_out;
  build->add_option("model", build_what, "T(k), O(k), W(k), V(k,n), C(r), N1, K(p)")
      ->required();
  build->add_option("--out", build_out, "write the table JSON to a file");

  // enumerate
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "enumerate semigroups of a fixed order");
  int enum_order = 2;
  std::string enum_mode = "iso";
  std::vector<std::string> enum_sat, enum_fail;
  int enum_workers = 1;
  bool enum_tables = false;
  enum_cmd->add_option("--order", enum_order, "order, 1 to 5")->required();
  enum_cmd->add_option("--mode", enum_mode, "iso | anti | raw")
      ->check(CLI::IsMember({"iso", "anti", "raw"}));
  enum_cmd->add_option("--satisfies", enum_sat, "keep tables satisfying this");
  enum_cmd->add_option("--fails", enum_fail, "keep tables failing this");
  enum_cmd->add_option("--workers", enum_workers, "worker threads");
  enum_cmd->add_flag("--tables", enum_tables, "print every table");

  // quotient
  auto* quot = app.add_subcommand(
      "quotient", "largest quotient satisfying the given identities");
  std::string quot_table;
  std::vector<std::string> quot_by;
  std::string quot_out;
  quot->add_option("table", quot_table, "semigroup JSON file or model")
      ->required();
  quot->add_option("--by", quot_by, "identities to impose")->required();
  quot->add_option("--out", quot_out, "write the quotient JSON to a file");

  // suite
  auto* suite = app.add_subcommand("suite", "run a verification suite");
  std::string suite_name;
  std::string suite_json;
  std::string suite_catalog;
  int suite_workers = 1;
  suite->add_option("name", suite_name,
                    "classification | obstructions-2 | obstructions-3 | "
                    "independence | permutative | all")
      ->required();
  suite->add_option("--json-out", suite_json, "write the report JSON here");
  suite->add_option("--catalog", suite_catalog,
                    "extend the built-in catalog from a file");
  suite->add_option("--workers", suite_workers, "worker threads");

  // derive
  auto* derive = app.add_subcommand(
      "derive", "search for an equational derivation of a goal");
  std::string derive_basis, derive_goal;
  int derive_len = 8;
  std::uint64_t derive_exp = 200000;
  derive->add_option("basis", derive_basis,
                     "identity file, preset:NAME, or inline text")
      ->required();
  derive->add_option("goal", derive_goal, "identity to derive")->required();
  derive->add_option("--max-len", derive_len, "longest intermediate word");
  derive->add_option("--max-expansions", derive_exp, "search budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto load_table = [](const std::string& arg) -> sgw::CayleyTable {
    if (std::filesystem::exists(arg)) return sgw::load_table_file(arg);
    return sgw::build_model(arg).table;
  };

  if (*check) {
    sgw::CayleyTable S = load_table(check_table);
    std::vector<sgw::Identity> ids = identities_from_args(check_ids);
    bool all = true;
    json results = json::array();
    for (const auto& e : ids) {
      sgw::CheckResult res = sgw::satisfies(S, e);
      all = all && res.holds;
      if (as_json) {
        json r{{"identity", sgw::print_identity(e)}, {"holds", res.holds}};
        if (!res.holds) r["witness"] = res.witness;
        results.push_back(std::move(r));
      } else {
        std::cout << sgw::print_identity(e) << ": "
                  << (res.holds ? "holds" : "fails");
        if (!res.holds) {
          std::cout << " at";
          for (const auto& [v, s] : res.witness)
            std::cout << ' ' << v << '=' << S.labels[s];
        }
        std::cout << '\n';
      }
    }
    if (as_json)
      std::cout << json{{"semigroup", S.name}, {"results", results},
                        {"all_hold", all}}
                       .dump(2)
                << '\n';
    return all ? 0 : 1;
  }

  if (*classify_cmd) {
    sgw::ProductIdentity p =
        sgw::as_product_identity(sgw::parse_identity(classify_text));
    sgw::Classification c = sgw::classify(p);
    if (as_json)
      std::cout << sgw::classification_to_json(c).dump(2) << '\n';
    else
      std::cout << c.verdict_text() << ": " << sgw::print_identity(c.implied)
                << '\n';
    return 0;
  }

  if (*build) {
    sgw::LabeledModel m = sgw::build_model(build_what);
    if (!build_out.empty()) {
      std::ofstream out(build_out);
      out << sgw::model_to_json(m).dump(2) << '\n';
    }
    if (as_json)
      std::cout << sgw::model_to_json(m).dump(2) << '\n';
    else
      print_table_text(m.table, std::cout);
    return 0;
  }

  if (*enum_cmd) {
    sgw::EnumerationSpec spec;
    spec.order = enum_order;
    spec.mode = enum_mode == "iso"   ? sgw::EnumMode::UpToIso
                : enum_mode == "anti" ? sgw::EnumMode::UpToIsoAnti
                                      : sgw::EnumMode::RawTables;
    spec.must_satisfy = identities_from_args(enum_sat);
    spec.must_fail = identities_from_args(enum_fail);
    auto reps = sgw::enumerate_semigroups(spec, enum_workers);
    if (as_json) {
      json tables = json::array();
      if (enum_tables)
        for (const auto& S : reps) tables.push_back(sgw::table_to_json(S));
      json out{{"order", enum_order},
               {"mode", enum_mode},
               {"count", reps.size()}};
      if (enum_tables) out["tables"] = std::move(tables);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << reps.size() << " semigroup(s) of order " << enum_order
                << " (" << enum_mode << ")\n";
      if (enum_tables)
        for (const auto& S : reps) print_table_text(S, std::cout);
    }
    return 0;
  }

  if (*quot) {
    sgw::CayleyTable S = load_table(quot_table);
    sgw::LabeledModel Q = sgw::free_quotient(S, identities_from_args(quot_by));
    if (!quot_out.empty()) {
      std::ofstream out(quot_out);
      out << sgw::model_to_json(Q).dump(2) << '\n';
    }
    if (as_json)
      std::cout << sgw::model_to_json(Q).dump(2) << '\n';
    else
      print_table_text(Q.table, std::cout);
    return 0;
  }

  if (*suite) {
    std::vector<sgw::CatalogEntry> catalog = sgw::builtin_catalog();
    if (!suite_catalog.empty()) {
      auto extra = sgw::load_catalog_file(suite_catalog);
      catalog.insert(catalog.end(), extra.begin(), extra.end());
    }
    std::vector<sgw::SuiteReport> reports;
    if (suite_name == "all") {
      reports = sgw::run_all_suites(catalog, suite_workers);
    } else if (suite_name == "classification") {
      reports.push_back(sgw::suite_classification(catalog, suite_workers));
    } else if (suite_name == "obstructions-2") {
      reports.push_back(sgw::suite_obstructions(2, catalog, suite_workers));
    } else if (suite_name == "obstructions-3") {
      reports.push_back(sgw::suite_obstructions(3, catalog, suite_workers));
    } else if (suite_name == "independence") {
      reports.push_back(sgw::suite_independence(suite_workers));
    } else if (suite_name == "permutative") {
      reports.push_back(sgw::suite_permutative(catalog, suite_workers));
    } else {
      throw sgw::UnknownPresetError("unknown suite: " + suite_name);
    }
    bool all = true;
    for (const auto& rep : reports) {
      all = all && rep.passed;
      if (!as_json) {
        std::cout << "== " << rep.suite << " ==\n";
        for (const auto& c : rep.checks) {
          std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.claim << '\n';
          if (!c.passed && !c.counterexample.empty())
            std::cout << "       " << c.counterexample << '\n';
        }
        std::cout << rep.suite << ": "
                  << (rep.passed ? "all checks passed" : "FAILED") << " ("
                  << rep.checks.size() << " checks, " << rep.wall_ms
                  << " ms)\n";
      }
    }
    json jreports = json::array();
    for (const auto& rep : reports) jreports.push_back(sgw::report_to_json(rep));
    if (as_json) std::cout << jreports.dump(2) << '\n';
    if (!suite_json.empty()) {
      std::ofstream out(suite_json);
      out << jreports.dump(2) << '\n';
    }
    return all ? 0 : 1;
  }

  if (*derive) {
    std::vector<sgw::Identity> basis = identities_from_arg(derive_basis);
    sgw::Identity goal = sgw::parse_identity(derive_goal);
    sgw::DeriveBudget budget;
    budget.max_word_length = derive_len;
    budget.max_expansions = derive_exp;
    sgw::DeriveResult res = sgw::derive_search(basis, goal, budget);
    if (as_json) {
      json steps = json::array();
      for (const auto& s : res.trace)
        steps.push_back({{"from", s.from}, {"to", s.to}, {"rule", s.rule}});
      std::cout << json{{"derived", res.derived()},
                        {"expansions", res.expansions},
                        {"trace", std::move(steps)}}
                       .dump(2)
                << '\n';
    } else if (res.derived()) {
      std::cout << "derived " << sgw::print_identity(goal) << " in "
                << res.trace.size() << " step(s)\n";
      for (const auto& s : res.trace)
        std::cout << "  " << s.from << " -> " << s.to << "  [" << s.rule
                  << "]\n";
    } else {
      std::cout << "not derivable within budget (" << res.expansions
                << " expansions)\n";
    }
    return res.derived() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sgw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
