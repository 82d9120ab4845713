// Acceptance checks: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "granular/granular.hpp"

namespace {

using namespace granular;
namespace v = granular::verify;

struct Check {
  bool ok = true;
  std::string notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes += "\n    failed: " + what;
    }
  }
};

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t covering_count_oracle(int n) {
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::int64_t term = binomial(n, k) * (std::int64_t{1} << ((1 << (n - k)) - 1));
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

// Runs the named claims for each n and requires a pass on a non-vacuous domain.
void expect_claims(Check& c, const std::vector<std::string>& ids, std::size_t n_min, std::size_t n_max,
                   std::size_t expected_instances_at_max = 0) {
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (const auto& r : v::run_suite(n, {ids, 0})) {
      const std::string tag = r.id + " n=" + std::to_string(n);
      c.expect(r.passed(), tag + " (" + std::to_string(r.failure_count) + " failures)" +
                               (r.failures.empty() ? "" : ": " + r.failures.front().dump()));
      c.expect(r.applicable > 0, tag + " never applicable");
      if (n == n_max && expected_instances_at_max != 0) {
        c.expect(r.instances == expected_instances_at_max,
                 tag + " visited " + std::to_string(r.instances) + " instances");
      }
    }
  }
}

Check enumeration_sanity() {
  Check c;
  const std::array<std::int64_t, 4> expected = {1, 5, 109, 32297};
  for (int n = 1; n <= 4; ++n) {
    const auto oracle = covering_count_oracle(n);
    c.expect(oracle == expected[n - 1], "oracle count n=" + std::to_string(n));
    c.expect(static_cast<std::int64_t>(v::count_coverings(n)) == oracle, "covering stream n=" + std::to_string(n));
    c.expect(v::count_tolerances(n) == (std::size_t{1} << (n * (n - 1) / 2)), "tolerance stream n=" + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (std::size_t n = 1; n <= 4; ++n) all = v::all_passed(v::run_suite(n)) && all;
  const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(all, "full suite n<=4 passes");
  c.expect(seconds < 300.0, "full suite n<=4 under 5 minutes");
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << seconds;
  c.notes = " (full suite n<=4 in " + t.str() + " s)" + c.notes;
  return c;
}

Check structural_theorems() {
  Check c;
  const std::vector<std::string> ids = {"refinement-chain",          "point-closure-idempotent",   "point-closure-structure",
                                        "complement-dual-preorder",  "core-up-set",                "relational-characterization",
                                        "star-point-closure-kernels", "star-point-closure-blocks", "star-point-closure-fixpoint"};
  for (const auto& r : v::run_suite(3, {ids, 0})) c.expect(r.passed() && r.instances == 109, r.id + " n=3");
  for (const auto& r : v::run_suite(4, {ids, 0})) c.expect(r.passed() && r.instances == 32297, r.id + " n=4");
  return c;
}

Check tolerance_theorems() {
  Check c;
  expect_claims(c,
                {"block-class-reconstruction", "blocks-maximal-cliques", "classes-star-blocks", "kernel-classes-blocks",
                 "kernel-condition-forward", "kernel-condition-backward"},
                1, 4, 64);
  return c;
}

Check negative_claims() {
  Check c;
  c.expect(!v::find_counterexample("kernel-union-strictness", 3).has_value(), "no strict-inclusion witness at n=3");
  c.expect(v::find_counterexample("kernel-union-strictness", 4).has_value(), "strict-inclusion witness at n=4");

  // The 4-cycle at x = 1: kernels are singletons, so the union is {1} inside T(1) = {1,2,4}.
  const auto u4 = Universe::numbered(4);
  const auto cyc = induced_tolerance(Covering(u4, {Subset::of(4, {0, 1}), Subset::of(4, {1, 2}), Subset::of(4, {2, 3}),
                                                   Subset::of(4, {3, 0})}));
  auto around = Subset::empty(4);
  for (std::size_t y = 0; y < 4; ++y) {
    if (kernel(cyc, y).contains(0)) around |= kernel(cyc, y);
  }
  c.expect(around == Subset::of(4, {0}), "4-cycle union of kernels containing 1 is {1}");
  c.expect(cyc.tclass(0) == Subset::of(4, {0, 1, 3}), "4-cycle T(1) = {1,2,4}");

  // beta0 = {{1,3},{2,3},{3}}: down(x) = kernel(x) everywhere, yet beta0 is not the block family.
  const auto u3 = Universe::numbered(3);
  const Covering beta0(u3, {Subset::of(3, {0, 2}), Subset::of(3, {1, 2}), Subset::of(3, {2})});
  const auto t = induced_tolerance(beta0);
  for (std::size_t x = 0; x < 3; ++x) c.expect(point_closure(beta0, x) == kernel(t, x), "beta0 down(x) = kernel(x)");
  c.expect(blocks(t) != beta0, "beta0 differs from its tolerance blocks");
  c.expect(blocks(t) == Covering(u3, {Subset::of(3, {0, 2}), Subset::of(3, {1, 2})}), "blocks of T_beta0 = {{1,3},{2,3}}");
  c.expect(v::find_counterexample("kernel-equality-converse", 3).has_value(), "converse witness found at n=3");
  c.expect(!v::find_counterexample("kernel-equality-converse", 2).has_value(), "no converse witness at n=2");
  return c;
}

Check operator_equivalences() {
  Check c;
  expect_claims(c, {"approx-first", "approx-second", "approx-third", "approx-fourth", "approx-duality", "approx-second-special-case"},
                1, 3, 109);
  return c;
}

Check axiomatization() {
  Check c;
  expect_claims(c, {"first-soundness", "second-soundness", "third-soundness", "fourth-soundness", "fh-5h-kernel-condition"}, 1,
                3, 109);
  expect_claims(c, {"first-completeness", "second-completeness", "third-completeness", "fourth-completeness"}, 1, 3, 512);
  return c;
}

Check closure_correspondence() {
  Check c;
  expect_claims(c, {"closure-relation-soundness", "symmetric-minimal-neighbourhood", "preorder-alexandroff"}, 1, 3, 512);
  expect_claims(c, {"closure-relation-completeness"}, 1, 3, 512);
  // Preorders yield C5.
  std::size_t preorders = 0;
  for_each_relation(3, [&](const Relation& r) {
    if (!r.is_preorder()) return;
    ++preorders;
    c.expect(check_closure_axioms(closure_table(r)).c5, "preorder closure satisfies C5");
  });
  c.expect(preorders == 29, "29 preorders on 3 elements");
  return c;
}

std::string run(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check cli_golden() {
  Check c;
  const std::string cli = GRANULAR_CLI;
  const std::string root = GRANULAR_SOURCE_DIR;
  const std::vector<std::pair<std::string, std::size_t>> inputs = {{"beta0", 3}, {"partition", 3}, {"cycle", 4}};
  const std::vector<std::string> ops = {"fh", "fl", "sh", "sl", "th", "tl", "xh", "xl", "rel-upper", "rel-lower"};
  for (const auto& [name, n] : inputs) {
    const std::string data = root + "/data/" + name + ".json";
    int status = 0;
    const auto shown = run("'" + cli + "' show '" + data + "'", status);
    c.expect(status == 0, "show " + name + " exit status");
    const auto golden_show = root + "/tests/golden/show_" + name + ".txt";
    c.expect(shown == read_file(golden_show), "show " + name + " matches " + golden_show);

    // Every operator on every subset, one "op set result" line each.
    const auto universe = Universe::numbered(n);
    std::string approx;
    for (const auto& op : ops) {
      for_each_subset(n, [&](const Subset& x) {
        std::string list;
        for (auto e : x) list += (list.empty() ? "" : ",") + universe->name(e);
        int st = 0;
        const auto out = run("'" + cli + "' approx '" + data + "' --op " + op + " --set '" + list + "'", st);
        c.expect(st == 0, "approx " + name + " " + op + " {" + list + "} exit status");
        approx += op + " {" + list + "} " + out;
      });
    }
    const auto golden_approx = root + "/tests/golden/approx_" + name + ".txt";
    c.expect(approx == read_file(golden_approx), "approx " + name + " matches " + golden_approx);
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Check (*run)();
  };
  const std::array<Criterion, 8> criteria = {{{"1 enumeration sanity", enumeration_sanity},
                                              {"2 structural theorems", structural_theorems},
                                              {"3 tolerance theorems", tolerance_theorems},
                                              {"4 negative claims", negative_claims},
                                              {"5 operator equivalences", operator_equivalences},
                                              {"6 axiomatization round-trips", axiomatization},
                                              {"7 closure-operator correspondence", closure_correspondence},
                                              {"8 CLI golden outputs", cli_golden}}};
  bool all = true;
  for (const auto& crit : criteria) {
    Check c;
    try {
      c = crit.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes = std::string("\n    exception: ") + e.what();
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << crit.name << c.notes << '\n' << std::flush;
    all = all && c.ok;
  }
  return all ? 0 : 1;
}
