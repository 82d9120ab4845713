// granular: command-line front end for covering granulation.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "granular/granular.hpp"

namespace {

using Json = granular::io::Json;

enum Exit { kOk = 0, kSuiteFailure = 1, kUsage = 2, kSemantic = 3, kAxiom = 4 };

Json load(const std::string& path) { return granular::io::parse_text(granular::io::read_file(path)); }

int cmd_show(const std::string& path, bool json) {
  const auto beta = granular::io::covering_from_json(load(path));
  if (json) {
    std::cout << granular::report::show_json(beta).dump(2) << '\n';
  } else {
    std::cout << granular::report::show_text(beta);
  }
  return kOk;
}

int cmd_approx(const std::string& path, const std::string& set, const std::string& op, bool json) {
  using granular::OperatorKind;
  const auto doc = load(path);
  const auto universe = granular::io::universe_from_json(doc);
  const auto x = granular::io::parse_subset_list(*universe, set);
  granular::Subset result = x;
  if (op == "rel-upper" || op == "rel-lower") {
    // A relation file is used as is; a covering file contributes its induced tolerance.
    const auto r = doc.contains("pairs") ? granular::io::relation_from_json(doc)
                                         : granular::induced_tolerance(granular::io::covering_from_json(doc)).relation();
    result = op == "rel-upper" ? granular::rel_upper(r, result) : granular::rel_lower(r, result);
  } else {
    static const std::map<char, OperatorKind> kinds = {
        {'f', OperatorKind::first}, {'s', OperatorKind::second}, {'t', OperatorKind::third}, {'x', OperatorKind::fourth}};
    const granular::Approximator ap(granular::io::covering_from_json(doc));
    const auto kind = kinds.at(op[0]);
    result = op[1] == 'h' ? ap.upper(kind, x) : ap.lower(kind, x);
  }
  if (json) {
    std::cout << Json{{"op", op}, {"set", granular::io::to_json(*universe, x)}, {"result", granular::io::to_json(*universe, result)}}.dump()
              << '\n';
  } else {
    std::cout << granular::format_subset(*universe, result) << '\n';
  }
  return kOk;
}

int cmd_axioms(const std::string& path, const std::string& reconstruct, bool json) {
  const auto table = granular::io::table_from_json(load(path));
  const auto& universe = *table.universe();
  const auto rep = granular::check_axioms(table);
  if (reconstruct.empty()) {
    if (json) {
      std::cout << Json{{"axioms", granular::report::axioms_json(universe, rep)}}.dump(2) << '\n';
    } else {
      std::cout << granular::report::axioms_text(universe, rep);
    }
    return kOk;
  }
  const auto kind = *granular::parse_operator_kind(reconstruct);
  try {
    const auto beta = granular::reconstruct(kind, table);
    const bool round_trip = granular::Approximator(beta).upper_table(kind) == table;
    if (json) {
      std::cout << Json{{"axioms", granular::report::axioms_json(universe, rep)},
                        {"kind", reconstruct},
                        {"covering", granular::io::to_json(beta)["blocks"]},
                        {"round_trip", round_trip}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << granular::report::axioms_text(universe, rep);
      std::cout << "reconstructed " << reconstruct << " covering: " << granular::format_family(beta) << '\n';
      std::cout << "round-trip: " << (round_trip ? "OK" : "FAILED") << '\n';
    }
    return round_trip ? kOk : kSuiteFailure;
  } catch (const granular::ReconstructionError& e) {
    if (json) {
      std::cout << Json{{"axioms", granular::report::axioms_json(universe, rep)}, {"kind", reconstruct}, {"error", e.what()}}.dump(2)
                << '\n';
    } else {
      std::cout << granular::report::axioms_text(universe, rep);
    }
    std::cerr << "error: " << e.what() << '\n';
    return kAxiom;
  }
}

int cmd_verify(std::size_t n, const std::vector<std::string>& claims, std::size_t threads, bool json) {
  namespace v = granular::verify;
  const auto results = v::run_suite(n, {claims, threads});
  if (json) {
    std::cout << v::report_json(n, results).dump(2) << '\n';
  } else {
    std::cout << v::report_text(n, results);
  }
  return v::all_passed(results) ? kOk : kSuiteFailure;
}

int cmd_enumerate(std::size_t n, const std::string& kind, bool count_only) {
  std::size_t count = 0;
  if (kind == "coverings") {
    granular::for_each_covering(n, [&](const granular::Covering& c) {
      ++count;
      if (!count_only) std::cout << granular::format_family(c) << '\n';
    });
  } else {
    granular::for_each_tolerance(n, [&](const granular::ToleranceRelation& t) {
      ++count;
      if (!count_only) std::cout << granular::format_successors(t.relation()) << '\n';
    });
  }
  if (count_only) std::cout << count << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering granulation: granular worlds, approximation operators, axioms and exhaustive checks"};
  app.require_subcommand(1);

  bool json = false;
  std::string path;

  auto* show = app.add_subcommand("show", "Print the granular structures of a covering");
  show->add_option("file", path, "Covering file")->required();
  show->add_flag("--json", json, "Emit JSON");

  std::string set;
  std::string op;
  auto* approx = app.add_subcommand("approx", "Apply an approximation operator to a subset");
  approx->add_option("file", path, "Covering file (or relation file for rel-upper/rel-lower)")->required();
  approx->add_option("--set", set, "Comma-separated element names; empty means the empty set")->required();
  approx->add_option("--op", op, "Operator")
      ->required()
      ->check(CLI::IsMember({"fh", "fl", "sh", "sl", "th", "tl", "xh", "xl", "rel-upper", "rel-lower"}));
  approx->add_flag("--json", json, "Emit JSON");

  std::string reconstruct;
  auto* axioms = app.add_subcommand("axioms", "Check the axioms of an operator table");
  axioms->add_option("file", path, "Table file")->required();
  axioms->add_option("--reconstruct", reconstruct, "Reconstruct a covering of this kind")
      ->check(CLI::IsMember({"first", "second", "third", "fourth"}));
  axioms->add_flag("--json", json, "Emit JSON");

  std::size_t n = 0;
  std::vector<std::string> claims;
  std::size_t threads = 0;
  auto* verify = app.add_subcommand("verify", "Check every registered claim on all structures of size n");
  verify->add_option("--n", n, "Universe size")->required();
  verify->add_option("--claims", claims, "Claim ids to run (default: all)")->delimiter(',');
  verify->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  verify->add_flag("--json", json, "Emit JSON");

  std::string kind = "coverings";
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List or count coverings or tolerances of size n");
  enumerate->add_option("kind", kind, "coverings or tolerances")->check(CLI::IsMember({"coverings", "tolerances"}));
  enumerate->add_option("--n", n, "Universe size")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*show) return cmd_show(path, json);
    if (*approx) return cmd_approx(path, set, op, json);
    if (*axioms) return cmd_axioms(path, reconstruct, json);
    if (*verify) return cmd_verify(n, claims, threads, json);
    if (*enumerate) return cmd_enumerate(n, kind, count_only);
  } catch (const granular::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const granular::SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSemantic;
  } catch (const granular::AxiomPreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAxiom;
  }
  return kUsage;
}
