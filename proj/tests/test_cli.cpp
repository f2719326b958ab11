#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QHLIN_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++c;
  return c;
}

const char* kRoot4 = "--orientation RRRRR --trees '(((..)(..))(.(..)))'";

}  // namespace

TEST_CASE("trees subcommand") {
  CHECK(run("trees --n 4 --count-only").out == "14\n");
  CHECK(run("trees --n 1").out == "(..)\n");
  CHECK(count(run("trees --n 3").out, "\n") == 5);
  CHECK(run("trees --n 0").code == 2);
  CHECK(run("trees").code == 2);
}

TEST_CASE("structure subcommand") {
  auto r = run(std::string("structure ") + kRoot4);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(j.contains("ext_algebra"));
  CHECK(j["ext_algebra"]["relations"] == nlohmann::json::array({"ε_2^4∘ε_1^2"}));
  CHECK(j["borel"]["generators"] ==
        nlohmann::json::array({"e_1", "e_2", "e_3", "e_4", "e_5", "e_6", "α_1", "α_3α_2", "α_3"}));
  for (const char* k : {"quiver", "segments", "trees", "order", "essential_order", "standard", "costandard",
                        "tilting", "ext_algebra", "ringel_dual", "borel", "formality"})
    CHECK(j.contains(k));

  auto g = nlohmann::json::parse(run("structure --orientation LLRR --trees '(((..).).);(((..).).)'").out);
  CHECK(g["ext_algebra"]["dimension"] == 10);
  CHECK(g["ext_algebra"]["relations"].size() == 2);

  auto one = run("structure --orientation '' --trees '(..)'");
  CHECK(one.code == 0);
  CHECK(nlohmann::json::parse(one.out)["ext_algebra"]["dimension"] == 1);

  CHECK(run("structure --orientation RR --trees '(..)'").code == 2);
  CHECK(run("structure --orientation RX --trees '(..)'").code == 2);
  CHECK(run("structure --orientation RR --trees '((..)'").code == 2);
}

TEST_CASE("structure output is byte-stable") {
  const std::string args = "structure --orientation RRLLRR --trees '(((..).).);(.((..).));((.(..)).)'";
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("dot subcommand") {
  auto ext = run(std::string("dot --what ext ") + kRoot4).out;
  CHECK(count(ext, "->") == 5);
  CHECK(count(ext, "// forbidden") == 1);
  CHECK(count(ext, "style=dashed") == 3);
  CHECK(count(ext, "style=solid") == 2);
  auto ringel = run(std::string("dot --what ringel ") + kRoot4).out;
  CHECK(count(ringel, "->") == 5);
  auto borel = run("dot --what borel --orientation RR --trees '(.(.(..)))'").out;
  CHECK(count(borel, "->") == 0);
  CHECK(run(std::string("dot --what nope ") + kRoot4).code == 2);
}

TEST_CASE("verify subcommand") {
  auto ok = run("verify --max-n 2");
  CHECK(ok.code == 0);
  CHECK(count(ok.out, "PASS") == 6);
  auto bad = run("verify --max-n 3 --inject-fault");
  CHECK(bad.code == 1);
  CHECK(count(bad.out, "witness:") > 0);
  CHECK(run("verify --max-n 0").code == 2);
  CHECK(run("verify --max-n 4 --orientation RRL").code == 0);
}

TEST_CASE("unknown subcommand is an input error") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}
