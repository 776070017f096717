#include <doctest.h>

#include <string>

#include "fbc/spec_io.hpp"
#include "fixtures.hpp"

using namespace fbc;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_automorphism(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("bundled specs") {
  auto fib = fixtures::phi("fib");
  CHECK(fib.lipschitz() == 2);
  CHECK(fib.alphabet().names() == std::vector<std::string>{"a", "b"});
  for (const auto& name : fixtures::bundled()) CHECK_NOTHROW(fixtures::phi(name));
  CHECK_NOTHROW(load_graph_map(fixtures::data_path("graph/theta.json")));
}

TEST_CASE("automorphism spec errors") {
  auto wrong_inverse = error_of(
      R"({"rank": 2, "generators": ["a","b"], "images": {"a": "a b", "b": "a"},
          "inverse_images": {"a": "b", "b": "a"}})");
  CHECK(wrong_inverse.find("'") != std::string::npos);
  CHECK_FALSE(wrong_inverse.empty());

  CHECK_FALSE(error_of(R"({"rank": 0, "generators": [], "images": {},
                           "inverse_images": {}})").empty());
  CHECK_FALSE(error_of("{not json").empty());
  CHECK_FALSE(error_of(R"({"rank": 1, "generators": ["t"], "images": {"t": "t"},
                           "inverse_images": {"t": "t"}})").empty());
  CHECK_FALSE(error_of(R"({"rank": 1, "generators": ["a"], "images": {"a": "a a^-1 a"},
                           "inverse_images": {"a": "a"}})").empty());
  CHECK_FALSE(error_of(R"({"rank": 1, "generators": ["a"], "images": {"a": "a", "b": "a"},
                           "inverse_images": {"a": "a"}})").empty());
  CHECK_FALSE(error_of(R"({"rank": 2, "generators": ["a"], "images": {"a": "a"},
                           "inverse_images": {"a": "a"}})").empty());
  CHECK_THROWS_AS(load_phi(fixtures::data_path("phi/missing.json")), SpecError);
}

TEST_CASE("graph map spec") {
  auto f = parse_graph_map(R"({"vertices": ["v"], "edges": [{"name": "x", "from": "v", "to": "v"}],
                               "vertex_image": {"v": "v"}, "edge_image": {"x": "x^-1"}})");
  CHECK(f.graph().edge_count() == 1);
  CHECK(f.lipschitz() == 1);
  CHECK_THROWS_AS(parse_graph_map(R"({"vertices": ["v"], "edges": [{"name": "x", "from": "v", "to": "u"}],
                                      "vertex_image": {"v": "v"}, "edge_image": {"x": "x"}})"),
                  SpecError);
  CHECK_THROWS_AS(parse_graph_map(R"({"vertices": ["v"], "edges": [{"name": "x", "from": "v", "to": "v"}],
                                      "vertex_image": {"v": "v"}, "edge_image": {"x": "1"}})"),
                  SpecError);
}
