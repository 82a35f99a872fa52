#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "pathinv/fp.hpp"
#include "pathinv/instance.hpp"
#include "pathinv/rational.hpp"

using pathinv::build_action;
using pathinv::build_quiver;
using pathinv::Fp;
using pathinv::InstanceData;
using pathinv::parse_instance;
using pathinv::ParseError;
using pathinv::Rational;

namespace {

const std::string kGood = R"({
  "vertices": ["1", "2"],
  "arrow_spaces": [
    {"source": "1", "target": "2", "dim": 2},
    {"source": "2", "target": "1", "dim": 1}
  ],
  "generators": [
    {"name": "g1", "blocks": [
      {"source": "1", "target": "2", "matrix": [["0", "1"], ["1", "0"]]},
      {"source": "2", "target": "1", "matrix": [["-1/2"]]}
    ]}
  ],
  "max_degree": 4,
  "options": {"field": "rational", "closure_cap": 64, "stabilization_window": 3}
})";

std::string with(const std::string& needle, const std::string& replacement) {
  std::string s = kGood;
  auto pos = s.find(needle);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, needle.size(), replacement);
  return s;
}

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_instance(text);
    FAIL("expected a ParseError containing \"" << fragment << "\"");
  } catch (const ParseError& e) {
    INFO(e.what());
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    CHECK(e.line >= 1);
    CHECK(e.column >= 1);
  }
}

}  // namespace

TEST_CASE("a complete instance parses") {
  InstanceData d = parse_instance(kGood);
  REQUIRE(d.vertices == std::vector<std::string>{"1", "2"});
  REQUIRE(d.arrow_spaces.size() == 2);
  CHECK(d.arrow_spaces[0].dim == 2);
  REQUIRE(d.generators.size() == 1);
  CHECK(d.generators[0].name == "g1");
  REQUIRE(d.generators[0].blocks.size() == 2);
  CHECK(d.generators[0].blocks[1].matrix[0][0] == "-1/2");
  CHECK(d.max_degree == 4);
  CHECK(d.options.field.rational);
  CHECK(d.options.closure_cap == 64);
  CHECK(d.options.stabilization_window == 3);
}

TEST_CASE("defaults when options are absent") {
  std::string s = with(R"(,
  "options": {"field": "rational", "closure_cap": 64, "stabilization_window": 3})",
                       "");
  InstanceData d = parse_instance(s);
  CHECK(d.options.field.rational);
  CHECK(d.options.closure_cap == 1024);
  CHECK(d.options.stabilization_window == 2);
}

TEST_CASE("field options") {
  {
    InstanceData d = parse_instance(with("\"rational\"", "\"prime 5\""));
    CHECK_FALSE(d.options.field.rational);
    CHECK(d.options.field.prime == 5);
  }
  expect_parse_error(with("\"rational\"", "\"prime 4\""), "4 is not prime");
  expect_parse_error(with("\"rational\"", "\"prime 1\""), "prime out of range");
  expect_parse_error(with("\"rational\"", "\"complex\""),
                     "field must be \"rational\" or \"prime p\"");
}

TEST_CASE("structural rejections") {
  expect_parse_error("[1, 2]", "instance file must be a JSON object");
  expect_parse_error("{\"vertices\": [\"v\"]}", "missing required key \"arrow_spaces\"");
  expect_parse_error(with("\"max_degree\"", "\"extra\": 7, \"max_degree\""),
                     "unknown key \"extra\"");
  expect_parse_error(with("[\"1\", \"2\"]", "[\"1\", \"1\"]"), "duplicate vertex id \"1\"");
  expect_parse_error(with("[\"1\", \"2\"]", "[]"), "vertices must be a non-empty array");
  expect_parse_error(with("{\"source\": \"2\", \"target\": \"1\", \"dim\": 1}",
                          "{\"source\": \"1\", \"target\": \"2\", \"dim\": 1}"),
                     "duplicate arrow space (1,2)");
  expect_parse_error(with("\"target\": \"2\", \"dim\": 2", "\"target\": \"3\", \"dim\": 2"),
                     "unknown vertex \"3\"");
  expect_parse_error(with("\"max_degree\": 4", "\"max_degree\": 0"),
                     "expected a positive integer");
  expect_parse_error(with("\"max_degree\": 4", "\"max_degree\": \"4\""),
                     "expected a positive integer");
  expect_parse_error(with("[[\"0\", \"1\"], [\"1\", \"0\"]]", "[[\"0\", \"1\"], [\"1\"]]"),
                     "matrix rows must all have the same length");
  expect_parse_error(with("\"-1/2\"", "\"1/0\""), "malformed rational \"1/0\"");
  expect_parse_error(with("\"-1/2\"", "\"x\""), "malformed rational \"x\"");
}

TEST_CASE("JSON syntax errors carry a position") {
  try {
    parse_instance("{\"vertices\": [\"v\",]}");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("invalid JSON") != std::string::npos);
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
}

TEST_CASE("malformed entries are located in the source text") {
  std::string s = with("\"-1/2\"", "\"1/0\"");
  std::size_t offset = s.find("\"1/0\"");
  REQUIRE(offset != std::string::npos);
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  try {
    parse_instance(s);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == line);
    CHECK(e.column == col);
  }
}

TEST_CASE("build_quiver installs the declared dimensions") {
  InstanceData d = parse_instance(kGood);
  auto q = build_quiver(d);
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow_dim(0, 1) == 2);
  CHECK(q.arrow_dim(1, 0) == 1);
}

TEST_CASE("build_action over the rationals") {
  InstanceData d = parse_instance(kGood);
  auto a = build_action<Rational>(d, kGood);
  REQUIRE(a.generators.size() == 1);
  const auto& b = a.generators[0].blocks.at(std::make_pair(1, 0));
  CHECK(b(0, 0) == Rational(-1, 2));
}

TEST_CASE("build_action over a prime field") {
  std::string s = with("\"rational\"", "\"prime 7\"");
  InstanceData d = parse_instance(s);
  auto a = build_action<Fp>(d, s);
  const auto& b = a.generators[0].blocks.at(std::make_pair(1, 0));
  CHECK(b(0, 0) == Fp::residue(-1, 7) / Fp::residue(2, 7));  // -1/2 reduced mod 7 = 3
  CHECK(b(0, 0).str() == "3");
}

TEST_CASE("modular denominator divisible by p is a positioned error") {
  std::string s = with("\"rational\"", "\"prime 7\"");
  auto pos = s.find("\"-1/2\"");
  REQUIRE(pos != std::string::npos);
  s.replace(pos, 6, "\"1/7\"");
  InstanceData d = parse_instance(s);
  try {
    build_action<Fp>(d, s);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    INFO(e.what());
    CHECK(std::string(e.what()).find("divisible by the modulus 7") != std::string::npos);
    CHECK(e.line > 1);
  }
}

TEST_CASE("ParseError::what carries line and column") {
  ParseError e("boom", 3, 14);
  CHECK(std::string(e.what()) == "boom at line 3, column 14");
  CHECK(e.message == "boom");
}
