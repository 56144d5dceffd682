#include "codimlab/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace codimlab {

namespace {
long long positive_mod(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}
}  // namespace

GroupSpec GroupSpec::trivial() {
  return from_table({"e"}, {{0}});
}

GroupSpec GroupSpec::abelian(std::vector<long long> invariants) {
  GroupSpec g;
  g.kind = Kind::Abelian;
  g.invariants = std::move(invariants);
  for (long long d : g.invariants)
    if (d < 0) throw std::invalid_argument("abelian invariant must be >= 0");
  return g;
}

GroupSpec GroupSpec::from_table(std::vector<std::string> names,
                                std::vector<std::vector<std::size_t>> table,
                                std::vector<bool> in_g0) {
  GroupSpec g;
  g.kind = Kind::Table;
  g.names = std::move(names);
  g.table = std::move(table);
  g.in_g0 = in_g0.empty() ? std::vector<bool>(g.names.size(), true) : std::move(in_g0);
  auto issues = g.validate();
  if (!issues.empty()) throw std::invalid_argument("invalid group table: " + issues.front());
  return g;
}

GroupSpec GroupSpec::symmetric3() {
  // Elements: e, (12), (13), (23), (123), (132); composition left-to-right as
  // function composition (a*b means apply b then a).
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return i;
    throw std::logic_error("symmetric3: bad permutation");
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> prod(3);
      for (int i = 0; i < 3; ++i) prod[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(prod);
    }
  return from_table({"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, std::move(table));
}

GroupSpec GroupSpec::cyclic(long long order) {
  return abelian({order});
}

std::size_t GroupSpec::order() const {
  if (!is_finite()) throw std::domain_error("group is infinite");
  if (kind == Kind::Table) return names.size();
  std::size_t n = 1;
  for (long long d : invariants) n *= static_cast<std::size_t>(d);
  return n;
}

bool GroupSpec::is_finite() const {
  if (kind == Kind::Table) return true;
  for (long long d : invariants)
    if (d == 0) return false;
  return true;
}

std::vector<std::string> GroupSpec::validate() const {
  std::vector<std::string> issues;
  if (kind == Kind::Abelian) return issues;
  const std::size_t n = names.size();
  if (table.size() != n) {
    issues.push_back("table row count mismatch");
    return issues;
  }
  for (const auto& row : table) {
    if (row.size() != n) {
      issues.push_back("table column count mismatch");
      return issues;
    }
    for (std::size_t v : row)
      if (v >= n) {
        issues.push_back("table entry out of range");
        return issues;
      }
  }
  if (in_g0.size() != n) issues.push_back("G0 flag count mismatch");
  // Identity.
  std::size_t id = n;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a)
      if (table[e][a] != a || table[a][e] != a) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == n) {
    issues.push_back("no identity element");
    return issues;
  }
  if (id != 0) issues.push_back("identity must be the first element");
  // Inverses.
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == id && table[b][a] == id) has_inverse = true;
    if (!has_inverse) issues.push_back("element " + names[a] + " has no inverse");
  }
  // Associativity.
  for (std::size_t a = 0; a < n && issues.empty(); ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          issues.push_back("associativity fails");
          a = b = c = n;
          break;
        }
  if (!issues.empty()) return issues;
  // G0: subgroup of index <= 2 (normality follows from the index).
  if (in_g0.size() == n) {
    std::size_t outside = 0;
    for (bool f : in_g0)
      if (!f) ++outside;
    if (!in_g0[id]) issues.push_back("G0 must contain the identity");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        bool product_in = in_g0[table[a][b]];
        bool expected = (in_g0[a] == in_g0[b]);
        if (product_in != expected) {
          issues.push_back("G0 flags are not a subgroup of index <= 2");
          a = b = n;
          break;
        }
      }
    if (outside != 0 && outside * 2 != n &&
        std::find(issues.begin(), issues.end(), "G0 flags are not a subgroup of index <= 2") ==
            issues.end())
      issues.push_back("G0 has index > 2");
  }
  return issues;
}

GroupElem GroupSpec::identity() const {
  if (kind == Kind::Table) return std::size_t{0};
  return std::vector<long long>(invariants.size(), 0);
}

GroupElem GroupSpec::normalize(GroupElem e) const {
  if (kind == Kind::Table) return e;
  auto& v = std::get<std::vector<long long>>(e);
  if (v.size() != invariants.size())
    throw std::invalid_argument("abelian element has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (invariants[i] > 0) v[i] = positive_mod(v[i], invariants[i]);
  return e;
}

GroupElem GroupSpec::multiply(const GroupElem& a, const GroupElem& b) const {
  if (kind == Kind::Table)
    return table[std::get<std::size_t>(a)][std::get<std::size_t>(b)];
  const auto& va = std::get<std::vector<long long>>(a);
  const auto& vb = std::get<std::vector<long long>>(b);
  std::vector<long long> out(va.size());
  for (std::size_t i = 0; i < va.size(); ++i) out[i] = va[i] + vb[i];
  return normalize(out);
}

GroupElem GroupSpec::inverse(const GroupElem& a) const {
  if (kind == Kind::Table) {
    std::size_t ia = std::get<std::size_t>(a);
    for (std::size_t b = 0; b < names.size(); ++b)
      if (table[ia][b] == 0) return b;
    throw std::logic_error("no inverse in validated table");
  }
  const auto& va = std::get<std::vector<long long>>(a);
  std::vector<long long> out(va.size());
  for (std::size_t i = 0; i < va.size(); ++i) out[i] = -va[i];
  return normalize(out);
}

bool GroupSpec::equal(const GroupElem& a, const GroupElem& b) const {
  if (kind == Kind::Table) return std::get<std::size_t>(a) == std::get<std::size_t>(b);
  return std::get<std::vector<long long>>(normalize(a)) ==
         std::get<std::vector<long long>>(normalize(b));
}

bool GroupSpec::commute(const GroupElem& a, const GroupElem& b) const {
  return equal(multiply(a, b), multiply(b, a));
}

bool GroupSpec::in_distinguished_subgroup(const GroupElem& a) const {
  if (kind == Kind::Table) return in_g0[std::get<std::size_t>(a)];
  return true;  // abelian specs carry no anti-automorphism part
}

std::string GroupSpec::format(const GroupElem& a) const {
  if (kind == Kind::Table) return names[std::get<std::size_t>(a)];
  const auto& v = std::get<std::vector<long long>>(a);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::optional<GroupElem> GroupSpec::parse(const std::string& text) const {
  if (kind == Kind::Table) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == text) return GroupElem{i};
    return std::nullopt;
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return std::nullopt;
  std::vector<long long> v;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream is(body);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      v.push_back(std::stoll(piece));
    } catch (...) {
      return std::nullopt;
    }
  }
  if (v.empty() && !body.empty()) return std::nullopt;
  if (v.size() != invariants.size()) return std::nullopt;
  return normalize(v);
}

std::vector<GroupElem> GroupSpec::elements() const {
  if (!is_finite()) throw std::domain_error("cannot enumerate an infinite group");
  std::vector<GroupElem> out;
  if (kind == Kind::Table) {
    for (std::size_t i = 0; i < names.size(); ++i) out.push_back(i);
    return out;
  }
  std::vector<long long> current(invariants.size(), 0);
  while (true) {
    out.push_back(current);
    std::size_t pos = 0;
    while (pos < current.size()) {
      if (++current[pos] < invariants[pos]) break;
      current[pos] = 0;
      ++pos;
    }
    if (pos == current.size()) break;
    if (current.empty()) break;
  }
  if (invariants.empty()) out = {std::vector<long long>{}};
  return out;
}

std::vector<GroupElem> GroupSpec::generated_subgroup(const std::vector<GroupElem>& gens) const {
  if (!is_finite()) throw std::domain_error("subgroup closure needs a finite group");
  auto less = group_elem_less;
  std::set<GroupElem, decltype(less)> closed(less);
  closed.insert(identity());
  std::vector<GroupElem> frontier{identity()};
  for (const auto& g : gens)
    if (closed.insert(normalize(g)).second) frontier.push_back(normalize(g));
  while (!frontier.empty()) {
    std::vector<GroupElem> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        for (const auto& prod : {multiply(a, g), multiply(a, inverse(g))})
          if (closed.insert(prod).second) next.push_back(prod);
      }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

bool GroupSpec::subgroup_abelian(const std::vector<GroupElem>& subgroup) const {
  for (std::size_t i = 0; i < subgroup.size(); ++i)
    for (std::size_t j = i + 1; j < subgroup.size(); ++j)
      if (!commute(subgroup[i], subgroup[j])) return false;
  return true;
}

bool group_elem_less(const GroupElem& a, const GroupElem& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<std::size_t>(a))
    return std::get<std::size_t>(a) < std::get<std::size_t>(b);
  return std::get<std::vector<long long>>(a) < std::get<std::vector<long long>>(b);
}

}  // namespace codimlab
