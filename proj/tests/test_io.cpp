#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "codimlab/io.hpp"
#include "codimlab/polynomial.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace codimlab;

namespace {

std::filesystem::path fixtures_dir() {
  if (const char* env = std::getenv("CODIMLAB_FIXTURES")) return env;
  return std::filesystem::path(CODIMLAB_SOURCE_DIR) / "fixtures";
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("every bundled algebra file re-serializes byte-identically") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures_dir())) {
    if (entry.path().extension() != ".json") continue;
    if (entry.path().filename().string().rfind("poly_", 0) == 0) continue;
    std::string text = slurp(entry.path());
    AlgebraFile file = parse_algebra_file(text);
    CHECK(emit_algebra_file(file) == text);
    ++count;
  }
  CHECK(count == 12);
}

TEST_CASE("bundled fixtures parse to validated structures") {
  auto sl2 = load_algebra_file(fixtures_dir() / "sl2.json");
  CHECK(sl2.algebra.dim() == 3);
  CHECK(sl2.algebra.validate().empty());
  CHECK_FALSE(sl2.grading.has_value());

  auto graded = load_algebra_file(fixtures_dir() / "gl2_z2graded.json");
  REQUIRE(graded.grading.has_value());
  auto action = resolve_action(graded);
  CHECK(action.origin == ActionOrigin::DualGroupAlgebra);
  CHECK(action.h_dim == 2);

  auto psi = load_algebra_file(fixtures_dir() / "gl2_psi_action.json");
  REQUIRE(psi.group_action.has_value());
  CHECK(resolve_action(psi).origin == ActionOrigin::GroupAlgebra);

  auto hopf = load_algebra_file(fixtures_dir() / "gl2_e0e1_action.json");
  REQUIRE(hopf.hopf.has_value());
  auto hopf_action = resolve_action(hopf);
  CHECK(hopf_action.h_dim == 2);
  REQUIRE(hopf_action.comultiplication.has_value());
  CHECK(verify_module_algebra(hopf.algebra, hopf_action).empty());

  auto plain = load_algebra_file(fixtures_dir() / "abelian2.json");
  CHECK(resolve_action(plain).origin == ActionOrigin::Trivial);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_algebra_file("{ not json"), ParseError);
  try {
    parse_algebra_file("{\n  \"name\": \"x\",\n  BROKEN\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("semantic violations are rejected") {
  // Jacobi-violating constants.
  std::string bad = R"({
  "name": "bad",
  "dim": 3,
  "basis": ["e", "h", "f"],
  "brackets": [[0, 2, 1, "1"], [0, 2, 0, "1"], [1, 0, 0, "2"], [1, 2, 2, "-2"]]
})";
  CHECK_THROWS_AS(parse_algebra_file(bad), ParseError);
  // Non-homogeneous grading.
  std::string badgrading = R"({
  "name": "bad",
  "dim": 3,
  "basis": ["e", "h", "f"],
  "brackets": [[0, 2, 1, "1"], [1, 0, 0, "2"], [1, 2, 2, "-2"]],
  "grading": {
    "group": {"kind": "abelian", "invariants": [2]},
    "degrees": [[1], [0], [0]]
  }
})";
  CHECK_THROWS(parse_algebra_file(badgrading));
  // Out-of-range bracket index.
  std::string badindex = R"({
  "name": "bad",
  "dim": 2,
  "basis": ["x", "y"],
  "brackets": [[0, 1, 5, "1"]]
})";
  CHECK_THROWS_AS(parse_algebra_file(badindex), ParseError);
}

TEST_CASE("polynomial files parse and resolve against actions") {
  auto graded = load_algebra_file(fixtures_dir() / "gl2_z2graded.json");
  auto action = resolve_action(graded);
  auto poly_file = load_polynomial_file(fixtures_dir() / "poly_graded_even_pair.json");
  auto poly = resolve_polynomial(poly_file, action);
  CHECK(poly.degree == 2);
  REQUIRE(poly.terms.size() == 1);
  CHECK(is_identity(graded.algebra, action, poly).holds);

  auto psi = load_algebra_file(fixtures_dir() / "gl2_psi_action.json");
  auto psi_action = resolve_action(psi);
  auto psi_poly = resolve_polynomial(
      load_polynomial_file(fixtures_dir() / "poly_psi_symmetrized.json"), psi_action);
  CHECK(psi_poly.terms.size() == 4);
  CHECK(is_identity(psi.algebra, psi_action, psi_poly).holds);

  // Numeric labels resolve positionally.
  PolynomialFile numeric;
  numeric.n = 2;
  numeric.terms.push_back({Rational(1), {1, 2}, {"0", "0"}});
  auto resolved = resolve_polynomial(numeric, action);
  CHECK(resolved.terms[0].labels == std::vector<std::size_t>{0, 0});

  // Bad permutation.
  std::string bad = R"({"n": 2, "terms": [{"coeff": "1", "perm": [1, 1], "labels": ["0", "0"]}]})";
  CHECK_THROWS_AS(parse_polynomial_file(bad), ParseError);
}
