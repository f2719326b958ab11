#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "qhlin/configuration.hpp"
#include "qhlin/errors.hpp"
#include "qhlin/report.hpp"
#include "qhlin/sweep.hpp"

namespace {

constexpr int kMaxVerifyN = 9;

int cmd_trees(int n, bool count_only) {
  if (n < 1) throw qhlin::InputError("--n must be at least 1");
  if (count_only) {
    std::cout << qhlin::catalan(n) << "\n";
    return 0;
  }
  for (const auto& t : qhlin::enumerate_trees(n)) std::cout << t.str() << "\n";
  return 0;
}

int cmd_structure(const std::string& orientation, const std::string& trees) {
  const auto c = qhlin::Configuration::parse(orientation, trees);
  std::cout << qhlin::to_json(qhlin::build_report(c)).dump(2) << "\n";
  return 0;
}

int cmd_verify(int max_n, const std::string& orientation, bool inject_fault, bool serial) {
  if (max_n < 1 || max_n > kMaxVerifyN)
    throw qhlin::InputError("--max-n must lie in 1.." + std::to_string(kMaxVerifyN));
  qhlin::SweepOptions o;
  o.max_n = max_n;
  o.inject_fault = inject_fault;
  o.parallel = !serial;
  if (!orientation.empty()) o.orientation = qhlin::LinearQuiver::parse(orientation);
  bool ok = true;
  for (auto suite : {qhlin::oracle_equivalence, qhlin::presentation_dimensions, qhlin::glued_dimensions,
                     qhlin::composition_fidelity, qhlin::formality_suite, qhlin::borel_consistency}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = suite(o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << secs << " s)\n";
    for (const auto& f : r.failures) std::cout << "  witness: " << f << "\n";
    ok = ok && r.passed();
  }
  std::cout << (ok ? "all suites passed" : "verification failed") << "\n";
  return ok ? 0 : 1;
}

int cmd_dot(const std::string& what, const std::string& orientation, const std::string& trees,
            const std::string& out) {
  if (what != "ext" && what != "ringel" && what != "borel")
    throw qhlin::InputError("--what must be one of ext, ringel, borel");
  const auto r = qhlin::build_report(qhlin::Configuration::parse(orientation, trees));
  const std::string text = what == "ext"      ? qhlin::presentation_dot(r.ext, "ext")
                           : what == "ringel" ? qhlin::ringel_dot(r)
                                              : qhlin::borel_dot(r);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw qhlin::InputError("cannot write " + out);
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-hereditary structure of linear quiver path algebras"};
  app.require_subcommand(1);

  int n = 0;
  bool count_only = false;
  auto* trees = app.add_subcommand("trees", "list binary trees with n nodes");
  trees->add_option("--n", n, "number of nodes")->required();
  trees->add_flag("--count-only", count_only, "print only the count");

  std::string orientation, tree_list;
  auto* structure = app.add_subcommand("structure", "JSON structure report");
  structure->add_option("--orientation", orientation, "edge directions over {R,L}; empty for one vertex")->required();
  structure->add_option("--trees", tree_list, "one tree per segment, separated by ';'")->required();

  int max_n = 7;
  bool inject = false, serial = false;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--max-n", max_n, "largest quiver size swept");
  verify->add_option("--orientation", orientation, "restrict to one orientation");
  verify->add_flag("--inject-fault", inject, "flip one relation to exercise failure reporting");
  verify->add_flag("--serial", serial, "disable OpenMP fan-out");

  std::string what, out;
  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("--what", what, "ext, ringel or borel")->required();
  dot->add_option("--orientation", orientation)->required();
  dot->add_option("--trees", tree_list)->required();
  dot->add_option("--out", out, "output file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*trees) return cmd_trees(n, count_only);
    if (*structure) return cmd_structure(orientation, tree_list);
    if (*verify) return cmd_verify(max_n, orientation, inject, serial);
    if (*dot) return cmd_dot(what, orientation, tree_list, out);
  } catch (const qhlin::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
