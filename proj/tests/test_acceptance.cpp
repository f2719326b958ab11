#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qhlin/borel.hpp"
#include "qhlin/configuration.hpp"
#include "qhlin/presentations.hpp"
#include "qhlin/sweep.hpp"

using namespace qhlin;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
  void suite(const SuiteResult& s) {
    std::ostringstream m;
    m << s.name << ": " << s.checks << " checks";
    if (!s.passed()) m << ", first failure: " << s.failures.front();
    expect(s.passed(), m.str());
    if (s.passed()) why << " " << s.name << "=" << s.checks;
  }
};

template <class T>
std::set<T> as_set(const std::vector<T>& v) { return {v.begin(), v.end()}; }

std::set<std::string> names(const MonomialPresentation& p) {
  std::set<std::string> s;
  for (const auto& a : p.arrows()) s.insert(a.name());
  return s;
}

ExistenceReport decide(const Configuration& c) { return decide_regular_borel(c.quiver, c.decon, c.tables, c.order); }

Verdict catalan_counts() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> c{1};
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t s = 0;
    for (int k = 0; k < n; ++k) s += c[k] * c[n - 1 - k];
    c.push_back(s);
  }
  for (int n = 0; n <= 8; ++n) {
    const auto t = enumerate_trees(n);
    v.expect(t.size() == c[n], "n=" + std::to_string(n) + " gives " + std::to_string(t.size()));
    std::set<std::string> distinct;
    for (const auto& x : t) distinct.insert(x.str());
    v.expect(distinct.size() == t.size(), "duplicate trees at n=" + std::to_string(n));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.expect(secs < 5.0, "took " + std::to_string(secs) + " s");
  v.why << " 1,1,2,5,14,42,132,429,1430 in " << secs << " s";
  return v;
}

Verdict root4() {
  Verdict v;
  auto c = Configuration::parse("RRRRR", "(((..)(..))(.(..)))");
  const auto& t = c.tables[0];
  v.expect(t.standard(2) == Interval{2, 3}, "Δ(2)");
  v.expect(t.costandard(4) == Interval{1, 4}, "∇(4)");
  auto ext = ext_algebra(t);
  v.expect(names(ext) == std::set<std::string>{"ε_1^2", "ε_2^4", "f_3^2", "f_5^4", "f_6^5"}, "Ext arrows");
  v.expect(ext.relation_names() == std::vector<std::string>{"ε_2^4∘ε_1^2"}, "Ext relations");
  v.expect(as_set(ringel_dual(t).relation_names()) == std::set<std::string>{"f_4^2∘g_5^4", "f_2^1∘g_3^2"},
           "Ringel relations");
  v.expect(as_set(borel_generators(t, c.quiver).generators()) ==
               std::set<std::string>{"e_1", "e_2", "e_3", "e_4", "e_5", "e_6", "α_1", "α_3", "α_3α_2"},
           "Borel generators");
  return v;
}

Verdict oracle(const SweepOptions& o) {
  Verdict v;
  v.suite(oracle_equivalence(o));
  return v;
}

Verdict dimensions(const SweepOptions& o) {
  Verdict v;
  v.suite(presentation_dimensions(o));
  v.suite(glued_dimensions(o));
  auto c = Configuration::parse("LLRR", "(((..).).);(((..).).)");
  auto g = glue(ext_algebra(c.tables[0]), ext_algebra(c.tables[1]), 3);
  v.expect(basis(g).total() == 10, "LLRR dimension " + std::to_string(basis(g).total()));
  v.expect(as_set(g.relation_names()) == std::set<std::string>{"ε_4^5∘ε_3^4", "ε_3^4∘f_2^3"}, "LLRR relations");
  return v;
}

Verdict composition(const SweepOptions& o) {
  Verdict v;
  v.suite(composition_fidelity(o));
  return v;
}

Verdict formality(const SweepOptions& o) {
  Verdict v;
  v.suite(formality_suite(o));
  return v;
}

Verdict borel(const SweepOptions& o) {
  Verdict v;
  v.suite(borel_consistency(o));
  auto yes = decide(Configuration::parse("RRLLRR", "(((..).).);(.((..).));((.(..)).)"));
  v.expect(yes.verdict && yes.radical_verdict, "seven-vertex verdict");
  v.expect(yes.sinks.size() == 1 && yes.sinks[0].vertex == 3 && yes.sinks[0].maximal, "sink 3 maximal");
  auto no = decide(Configuration::parse("RRLLRR", "(.(.(..)));(.((..).));(((..).).)"));
  v.expect(!no.verdict && !no.radical_verdict, "counter-configuration verdict");
  v.expect(no.sinks.size() == 1 && !no.sinks[0].minimal && !no.sinks[0].maximal, "counter sink neither");
  return v;
}

std::pair<int, std::string> run(const std::string& args) {
  const std::string cmd = std::string(QHLIN_CLI) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Verdict determinism() {
  Verdict v;
  const std::string args = "structure --orientation RRLLRR --trees '(((..).).);(.((..).));((.(..)).)'";
  const auto first = run(args);
  v.expect(first.first == 0, "exit code " + std::to_string(first.first));
  for (int k = 0; k < 2; ++k) v.expect(run(args).second == first.second, "run " + std::to_string(k + 2) + " differs");
  v.why << " " << first.second.size() << " bytes x3";
  return v;
}

}  // namespace

int main() {
  SweepOptions o;
  o.max_n = 7;
  const std::vector<std::function<Verdict()>> criteria{
      catalan_counts, root4, [&] { return oracle(o); }, [&] { return dimensions(o); },
      [&] { return composition(o); }, [&] { return formality(o); }, [&] { return borel(o); }, determinism};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k]();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << ": " << (v.ok ? "PASS" : "FAIL") << v.why.str() << "\n";
    failed += v.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
