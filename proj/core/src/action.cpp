#include "codimlab/action.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace codimlab {

std::vector<GroupElem> Grading::support() const {
  std::vector<GroupElem> out;
  for (const auto& d : degrees) {
    bool seen = false;
    for (const auto& s : out)
      if (group.equal(s, d)) seen = true;
    if (!seen) out.push_back(group.normalize(d));
  }
  return out;
}

std::vector<std::size_t> Grading::component(const GroupElem& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (group.equal(degrees[i], g)) out.push_back(i);
  return out;
}

Grading Grading::restricted(const std::vector<std::size_t>& indices) const {
  Grading out;
  out.group = group;
  for (std::size_t i : indices) out.degrees.push_back(degrees[i]);
  return out;
}

std::size_t ActionSpec::module_dim() const {
  return operators.empty() ? 0 : operators.front().rows();
}

void ActionSpec::compute_effective_basis() {
  effective.clear();
  const std::size_t d = module_dim();
  RankAccumulator acc(d * d);
  for (std::size_t t = 0; t < operators.size(); ++t) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t i = 0; i < d; ++i)
      operators[t].row(i).for_each([&](std::size_t j, const Rational& v) {
        entries.emplace_back(i * d + j, v);
      });
    if (acc.insert(RowVec::from_entries(d * d, std::move(entries)))) effective.push_back(t);
  }
}

std::optional<std::size_t> ActionSpec::operator_index(const std::string& name) const {
  for (std::size_t i = 0; i < operator_names.size(); ++i)
    if (operator_names[i] == name) return i;
  return std::nullopt;
}

ActionSpec trivial_action(std::size_t dim) {
  ActionSpec a;
  a.h_dim = 1;
  a.operators = {Matrix::identity(dim)};
  a.operator_names = {"1"};
  a.comultiplication = std::vector<Matrix>{Matrix::from_literal({{1}})};
  a.counit = std::vector<Rational>{Rational(1)};
  a.origin = ActionOrigin::Trivial;
  a.compute_effective_basis();
  return a;
}

void check_homogeneous(const LieAlgebra& l, const Grading& g) {
  if (g.degrees.size() != l.dim())
    throw NonHomogeneous("grading must assign a degree to every basis vector");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      GroupElem target = g.group.multiply(g.degrees[i], g.degrees[j]);
      bool bad = false;
      l.bracket_basis(i, j).for_each([&](std::size_t k, const Rational&) {
        if (!g.group.equal(g.degrees[k], target)) bad = true;
      });
      if (bad) {
        std::ostringstream os;
        os << "bracket [" << l.basis_names()[i] << ", " << l.basis_names()[j]
           << "] leaves the component of degree " << g.group.format(target);
        throw NonHomogeneous(os.str());
      }
    }
}

ActionSpec from_grading(const LieAlgebra& l, const Grading& g) {
  check_homogeneous(l, g);
  auto supp = g.support();
  const std::size_t m = supp.size();
  ActionSpec a;
  a.h_dim = m;
  a.origin = ActionOrigin::DualGroupAlgebra;
  for (const auto& elem : supp) {
    Matrix proj(l.dim(), l.dim());
    for (std::size_t i : g.component(elem)) proj.set(i, i, Rational(1));
    a.operators.push_back(std::move(proj));
    a.operator_names.push_back(g.group.format(elem));
  }
  // Δ(h_g) = Σ_{g1 g2 = g, both in support} h_{g1} ⊗ h_{g2}
  std::vector<Matrix> comul;
  for (std::size_t i = 0; i < m; ++i) {
    Matrix mu(m, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (g.group.equal(g.group.multiply(supp[j], supp[k]), supp[i]))
          mu.set(j, k, Rational(1));
    comul.push_back(std::move(mu));
  }
  a.comultiplication = std::move(comul);
  std::vector<Rational> counit(m);
  for (std::size_t i = 0; i < m; ++i)
    counit[i] = g.group.is_identity(supp[i]) ? Rational(1) : Rational(0);
  a.counit = std::move(counit);
  a.compute_effective_basis();
  return a;
}

namespace {

bool is_automorphism(const LieAlgebra& l, const Matrix& m, std::size_t* bad_i,
                     std::size_t* bad_j) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      RowVec lhs = m.apply(l.bracket_basis(i, j));
      RowVec rhs = l.bracket(m.apply(RowVec::unit(l.dim(), i)), m.apply(RowVec::unit(l.dim(), j)));
      rhs.negate();
      lhs.add_scaled(rhs, Rational(1));
      if (!lhs.is_zero()) {
        if (bad_i) *bad_i = i;
        if (bad_j) *bad_j = j;
        return false;
      }
    }
  return true;
}

}  // namespace

ActionSpec from_group_action(const LieAlgebra& l, const GroupSpec& g,
                             const std::map<std::string, Matrix>& generator_matrices) {
  if (g.kind != GroupSpec::Kind::Table)
    throw std::invalid_argument("group actions require a table group");
  auto issues = g.validate();
  if (!issues.empty()) throw RelationViolated("group table invalid: " + issues.front());
  const std::size_t n = g.names.size();
  // Twist: elements outside G0 act by anti-automorphisms; a^{g~} = -a^g makes
  // every operator an automorphism.
  std::vector<std::optional<Matrix>> twisted(n);
  twisted[0] = Matrix::identity(l.dim());
  std::vector<std::size_t> gen_indices;
  for (const auto& [name, matrix] : generator_matrices) {
    auto elem = g.parse(name);
    if (!elem) throw RelationViolated("unknown group element: " + name);
    std::size_t idx = std::get<std::size_t>(*elem);
    Matrix m = matrix;
    if (!g.in_g0[idx]) m = m.scaled(Rational(-1));
    std::size_t bi = 0, bj = 0;
    if (!is_automorphism(l, m, &bi, &bj)) {
      std::ostringstream os;
      os << "operator for " << name << " is not a"
         << (g.in_g0[idx] ? "n automorphism" : "n anti-automorphism (after sign twist)")
         << "; witness basis pair (" << l.basis_names()[bi] << ", " << l.basis_names()[bj] << ")";
      throw NotAutomorphism(os.str());
    }
    if (idx == 0 && m != *twisted[0])
      throw RelationViolated("identity element must act as the identity matrix");
    twisted[idx] = std::move(m);
    gen_indices.push_back(idx);
  }
  // Closure: fill matrices for all elements as products of generator matrices.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!twisted[a]) continue;
      for (std::size_t t : gen_indices) {
        std::size_t prod = g.table[a][t];
        Matrix pm = twisted[a]->multiply(*twisted[t]);
        if (!twisted[prod]) {
          twisted[prod] = std::move(pm);
          progress = true;
        } else if (*twisted[prod] != pm) {
          throw RelationViolated("group relations violated at " + g.names[a] + "*" +
                                 g.names[t]);
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!twisted[a])
      throw RelationViolated("generators do not generate the group (missing " + g.names[a] +
                             ")");
  // Full consistency: the assignment is a homomorphism.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (twisted[g.table[a][b]].value() != twisted[a]->multiply(*twisted[b]))
        throw RelationViolated("group relations violated at " + g.names[a] + "*" + g.names[b]);
  ActionSpec spec;
  spec.h_dim = n;
  spec.origin = ActionOrigin::GroupAlgebra;
  for (std::size_t a = 0; a < n; ++a) {
    spec.operators.push_back(std::move(*twisted[a]));
    spec.operator_names.push_back(g.names[a]);
  }
  std::vector<Matrix> comul;
  for (std::size_t a = 0; a < n; ++a) {
    Matrix mu(n, n);
    mu.set(a, a, Rational(1));  // Δ(g) = g ⊗ g
    comul.push_back(std::move(mu));
  }
  spec.comultiplication = std::move(comul);
  spec.counit = std::vector<Rational>(n, Rational(1));
  spec.compute_effective_basis();
  return spec;
}

std::vector<std::string> verify_module_algebra(const LieAlgebra& l, const ActionSpec& a) {
  if (!a.comultiplication)
    throw MissingComultiplication("verify_module_algebra needs a comultiplication tensor");
  std::vector<std::string> violations;
  const std::size_t d = l.dim();
  for (std::size_t h = 0; h < a.h_dim; ++h) {
    const Matrix& mu = (*a.comultiplication)[h];
    // All ordered pairs, diagonal included: for non-cocommutative Δ the
    // constraint 0 = [h_(1)a, h_(2)a] is not implied by the off-diagonal ones.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        RowVec lhs = a.operators[h].apply(l.bracket_basis(i, j));
        RowVec rhs(d);
        for (std::size_t p = 0; p < a.h_dim; ++p)
          for (std::size_t q = 0; q < a.h_dim; ++q) {
            const Rational& c = mu.at(p, q);
            if (c == 0) continue;
            rhs.add_scaled(l.bracket(a.operators[p].apply(RowVec::unit(d, i)),
                                     a.operators[q].apply(RowVec::unit(d, j))),
                           c);
          }
        rhs.negate();
        lhs.add_scaled(rhs, Rational(1));
        if (!lhs.is_zero()) {
          std::ostringstream os;
          os << "module-algebra axiom fails for " << a.operator_names[h] << " on ["
             << l.basis_names()[i] << ", " << l.basis_names()[j] << "]";
          violations.push_back(os.str());
        }
      }
  }
  return violations;
}

bool invariant(const ActionSpec& a, const Subspace& u) {
  for (const auto& op : a.operators)
    for (const auto& row : u.basis())
      if (!u.contains(op.apply(row))) return false;
  return true;
}

ActionSpec direct_sum_action(const ActionSpec& a, const ActionSpec& b) {
  if (a.h_dim != b.h_dim)
    throw std::invalid_argument("direct_sum_action: H-dimension mismatch");
  if (a.comultiplication.has_value() != b.comultiplication.has_value())
    throw std::invalid_argument("direct_sum_action: comultiplication mismatch");
  if (a.comultiplication && *a.comultiplication != *b.comultiplication)
    throw std::invalid_argument("direct_sum_action: comultiplication tensors differ");
  const std::size_t da = a.module_dim();
  const std::size_t db = b.module_dim();
  ActionSpec out;
  out.h_dim = a.h_dim;
  out.origin = a.origin == b.origin ? a.origin : ActionOrigin::Custom;
  out.operator_names = a.operator_names;
  for (std::size_t t = 0; t < a.h_dim; ++t) {
    Matrix block(da + db, da + db);
    for (std::size_t i = 0; i < da; ++i)
      a.operators[t].row(i).for_each(
          [&](std::size_t j, const Rational& v) { block.set(i, j, v); });
    for (std::size_t i = 0; i < db; ++i)
      b.operators[t].row(i).for_each(
          [&](std::size_t j, const Rational& v) { block.set(da + i, da + j, v); });
    out.operators.push_back(std::move(block));
  }
  out.comultiplication = a.comultiplication;
  out.counit = a.counit;
  out.compute_effective_basis();
  return out;
}

}  // namespace codimlab
