#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result torus(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fbc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string fib = fixtures::data_path("phi/fib.json");
const std::string psi = fixtures::data_path("phi/psi.json");

}  // namespace

TEST_CASE("check") {
  auto r = torus({"check", "--phi", fib, "--word", "t t^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "t^0 · 1\n");
  CHECK(torus({"check", "--phi", fib, "--word", "t^-1 a t b^-1 a^-1"}).out ==
        "t^0 · 1\n");
  CHECK(torus({"check", "--phi", fib, "--word", "a"}).out == "t^0 · a\n");

  auto j = torus({"check", "--phi", fib, "--word", "t a", "--emit", "json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["results"][0]["t_exponent"] == 1);
  CHECK(doc["results"][0]["tail"] == "a");
  CHECK(doc["results"][0]["identity"] == false);
}

TEST_CASE("check with a words file") {
  auto path = std::filesystem::temp_directory_path() / "fbc_cli_words.txt";
  {
    std::ofstream f(path);
    f << "# comment\n\nt t^-1\na\n";
  }
  auto r = torus({"check", "--phi", fib, "--words-file", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "t^0 · 1\nt^0 · a\n");
  std::filesystem::remove(path);
}

TEST_CASE("bracket") {
  auto r = torus({"bracket", "--phi", fib, "--word", "t^-1 a t b^-1 a^-1", "--oracle"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["ratio"] == "2/5");
  CHECK(doc["brackets"][0]["open"] == 0);
  CHECK(doc["brackets"][0]["close"] == 2);
  CHECK(doc["brackets"][0]["content"] == "a b");
  CHECK(doc["oracle"]["ratio"] == "2/5");

  auto bad = torus({"bracket", "--phi", fib, "--word", "a"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("stack") {
  auto r = torus({"stack", "--phi", fib, "--path", "a | b", "--steps", "2"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["corridor_lengths"] == nlohmann::json::array({2, 3, 5}));
  CHECK(doc["rows"][2]["bottom_label"] == "a b a a b");

  auto dot = torus({"stack", "--phi", psi, "--path", "a | b^-1", "--steps", "1",
                    "--emit", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.starts_with("digraph stack {"));
  CHECK(dot.out.find("color=red") != std::string::npos);

  auto tsv = torus({"stack", "--phi", psi, "--path", "a | b^-1", "--steps", "1",
                    "--emit", "tsv"});
  CHECK(tsv.out == "row\tbottom_len\ttop_len\tcancelled_pairs\tcolours\n"
                   "0\t2\t1\t1\t2\n1\t1\t2\t0\t1\n");

  auto graph = torus({"stack", "--graph", fixtures::data_path("graph/theta.json"),
                      "--path", "x | y^-1", "--steps", "2"});
  CHECK(graph.code == 0);
  CHECK(torus({"stack", "--phi", fib, "--path", "a | a^-1"}).code == 1);
  CHECK(torus({"stack", "--phi", fib}).code == 2);
}

TEST_CASE("growth") {
  auto r = torus({"growth", "--phi", fib, "--word", "a", "--horizon", "5",
                  "--mode", "based"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "i\tbased_len\tcyclic_len\n0\t1\t1\n1\t2\t2\n2\t3\t3\n"
                 "3\t5\t5\n4\t8\t8\n5\t13\t13\n");
  auto j = torus({"growth", "--phi", fib, "--word", "a", "--horizon", "5",
                  "--mode", "based", "--emit", "json"});
  CHECK(nlohmann::json::parse(j.out)["k_emp"] == "13/14");

  CHECK(torus({"growth", "--phi", fib, "--oracle", "--max-len", "6",
               "--horizon", "8"}).out == "55/56\n");

  auto b = torus({"growth", "--phi", fib, "--brinkmann", "--K", "55/28",
                  "--seed", "1", "--count", "200"});
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["violations"] == 0);
  CHECK(torus({"growth", "--phi", fib, "--brinkmann", "--K", "1"}).code == 2);
  CHECK(torus({"growth", "--phi", fib, "--word", "a", "--oracle"}).code == 2);
  CHECK(torus({"growth", "--phi", fib, "--word", "a", "--mode", "x"}).code == 2);
}

TEST_CASE("work cap from the environment") {
  ::setenv("TORUS_WORK_CAP", "100", 1);
  auto r = torus({"growth", "--phi", fib, "--oracle", "--max-len", "6"});
  ::unsetenv("TORUS_WORK_CAP");
  CHECK(r.code == 1);
  CHECK(r.err.find("work cap") != std::string::npos);
}

TEST_CASE("power") {
  auto r = torus({"power", "--phi", fib, "--p", "2", "--word", "t a t a t^-1 a t^-1"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["tilde"] == "t t a b a t^-1 t^-1 b");
  CHECK(doc["result"] == "tau a b a tau^-1 b");
  CHECK(doc["lengths"]["result"] == 6);
  CHECK(doc["corridor_bound"] == 6);
  CHECK(doc["verified"]["equal_in_group"] == true);
  CHECK(torus({"power", "--phi", fib, "--p", "2", "--word", "t"}).code == 1);
  CHECK(torus({"power", "--phi", fib, "--p", "0", "--word", "t"}).code == 2);
}

TEST_CASE("bcc") {
  auto r = torus({"bcc", "--phi", psi, "--depth", "1"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == 2);
  CHECK(torus({"bcc", "--phi", psi, "--depth", "1", "--emit", "text"}).out == "2\n");
}

TEST_CASE("corpus") {
  auto a = torus({"corpus", "--phi", fib, "--seed", "5", "--count", "20"});
  auto b = torus({"corpus", "--phi", fib, "--seed", "5", "--count", "20"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(torus({"check", "--phi", fib, "--word", line.empty() ? "1" : line}).out ==
          "t^0 · 1\n");
  }
  CHECK(n == 20);
  CHECK(torus({"corpus", "--phi", fib}).code == 2);
}

TEST_CASE("usage and domain errors") {
  CHECK(torus({}).code == 2);
  CHECK(torus({"frobnicate"}).code == 2);
  CHECK(torus({"check", "--phi", fib}).code == 2);
  CHECK(torus({"check", "--phi", fib, "--word", "a", "--emit", "dot"}).code == 2);
  CHECK(torus({"check", "--phi", "/nonexistent.json", "--word", "a"}).code == 1);
  CHECK(torus({"check", "--phi", fib, "--word", "q"}).code == 1);
  CHECK(torus({"--help"}).code == 0);
}

TEST_CASE("output file is written whole") {
  auto path = std::filesystem::temp_directory_path() / "fbc_cli_out.json";
  std::filesystem::remove(path);
  auto r = torus({"bcc", "--phi", psi, "--depth", "2", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(nlohmann::json::parse(buf.str())["depth"] == 2);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}
