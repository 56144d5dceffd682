#pragma once

#include "codimlab/action.hpp"
#include "codimlab/polynomial.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace codimlab {

// Input error with a byte-accurate source location.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct AlgebraFile {
  std::string name;
  LieAlgebra algebra = LieAlgebra::zero();
  std::optional<Grading> grading;

  struct GroupActionBlock {
    GroupSpec group;
    std::vector<std::pair<std::string, Matrix>> generators;  // in file order
  };
  struct HopfBlock {
    std::vector<std::string> names;
    std::vector<Matrix> operators;
    std::optional<std::vector<Matrix>> comultiplication;
    std::optional<std::vector<Rational>> counit;
  };
  std::optional<GroupActionBlock> group_action;
  std::optional<HopfBlock> hopf;
};

AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::filesystem::path& path);
// Canonical bytes: fixed key order, sorted bracket triples, canonical
// rational text.  Bundled fixtures round-trip byte-identically.
std::string emit_algebra_file(const AlgebraFile& file);

// Action in priority order: explicit action block, else the grading's dual
// action, else the trivial action.
ActionSpec resolve_action(const AlgebraFile& file);
// Strictly the grading's dual action; throws without a grading block.
ActionSpec grading_action(const AlgebraFile& file);

struct PolynomialFile {
  std::size_t n = 0;
  struct Term {
    Rational coeff;
    std::vector<std::size_t> perm;    // 1-based in the file
    std::vector<std::string> labels;  // operator names or decimal indices
  };
  std::vector<Term> terms;
};

PolynomialFile parse_polynomial_file(const std::string& text);
PolynomialFile load_polynomial_file(const std::filesystem::path& path);
MultilinearHPolynomial resolve_polynomial(const PolynomialFile& file, const ActionSpec& action);

}  // namespace codimlab
