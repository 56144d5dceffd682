#pragma once

#include "codimlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace codimlab {

// Group element: index into a multiplication table, or an integer vector for
// finitely generated abelian groups (torsion coordinates reduced modulo the
// invariant, 0 encodes an infinite cyclic factor).
using GroupElem = std::variant<std::size_t, std::vector<long long>>;

struct GroupSpec {
  enum class Kind { Table, Abelian };
  Kind kind = Kind::Table;

  // Table presentation.
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i g_j
  std::vector<bool> in_g0;                      // distinguished subgroup flags

  // Abelian presentation: invariants d_1, ..., d_s (0 = infinite cyclic).
  std::vector<long long> invariants;

  static GroupSpec trivial();
  static GroupSpec abelian(std::vector<long long> invariants);
  static GroupSpec from_table(std::vector<std::string> names,
                              std::vector<std::vector<std::size_t>> table,
                              std::vector<bool> in_g0 = {});
  static GroupSpec symmetric3();  // S3 with the standard element names
  static GroupSpec cyclic(long long order);

  std::size_t order() const;  // throws for infinite groups
  bool is_finite() const;
  // Checks the table axioms (associativity, identity, inverses), G0 a normal
  // subgroup of index <= 2; abelian specs are valid by construction.
  std::vector<std::string> validate() const;

  GroupElem identity() const;
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const;
  GroupElem inverse(const GroupElem& a) const;
  bool equal(const GroupElem& a, const GroupElem& b) const;
  bool is_identity(const GroupElem& a) const { return equal(a, identity()); }
  bool commute(const GroupElem& a, const GroupElem& b) const;
  bool in_distinguished_subgroup(const GroupElem& a) const;

  std::string format(const GroupElem& a) const;
  std::optional<GroupElem> parse(const std::string& text) const;

  // Normalizes an abelian vector (reduces torsion coordinates).
  GroupElem normalize(GroupElem e) const;

  // All elements of a finite group.
  std::vector<GroupElem> elements() const;
  // Subgroup generated by the given elements, as a sorted element list;
  // requires a finite group.
  std::vector<GroupElem> generated_subgroup(const std::vector<GroupElem>& gens) const;
  bool subgroup_abelian(const std::vector<GroupElem>& subgroup) const;
};

bool group_elem_less(const GroupElem& a, const GroupElem& b);

}  // namespace codimlab
