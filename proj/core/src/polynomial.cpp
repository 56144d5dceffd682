#include "codimlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace codimlab {

MultilinearHPolynomial MultilinearHPolynomial::monomial(std::vector<std::size_t> perm,
                                                        std::vector<std::size_t> labels,
                                                        Rational coeff) {
  MultilinearHPolynomial f;
  f.degree = perm.size();
  f.terms.push_back({std::move(coeff), std::move(perm), std::move(labels)});
  return f;
}

std::size_t EvaluationVector::flat_size(std::size_t dim_l, std::size_t degree) {
  std::size_t size = 1;
  for (std::size_t i = 0; i <= degree; ++i) {
    if (dim_l != 0 && size > SIZE_MAX / dim_l)
      throw std::overflow_error("evaluation tensor too large");
    size *= dim_l;
  }
  return size;
}

std::size_t EvaluationVector::flat_index(std::size_t dim_l,
                                         const std::vector<std::size_t>& tuple,
                                         std::size_t out) {
  std::size_t idx = 0;
  for (std::size_t t : tuple) idx = idx * dim_l + t;
  return idx * dim_l + out;
}

std::pair<std::vector<std::size_t>, std::size_t> EvaluationVector::decode(std::size_t dim_l,
                                                                          std::size_t degree,
                                                                          std::size_t index) {
  std::size_t out = index % dim_l;
  index /= dim_l;
  std::vector<std::size_t> tuple(degree);
  for (std::size_t t = degree; t-- > 0;) {
    tuple[t] = index % dim_l;
    index /= dim_l;
  }
  return {tuple, out};
}

namespace {

struct MonomialEvaluator {
  const LieAlgebra& l;
  const std::vector<std::size_t>& perm;
  const std::vector<const Matrix*> ops;  // operator per bracket slot
  std::size_t d, n;
  std::vector<std::size_t> assignment;  // basis index per variable
  std::vector<std::pair<std::size_t, Rational>> entries;

  MonomialEvaluator(const LieAlgebra& lie, const ActionSpec& a,
                    const std::vector<std::size_t>& p, const std::vector<std::size_t>& labels)
      : l(lie), perm(p), ops([&] {
          std::vector<const Matrix*> v;
          for (std::size_t t = 0; t < labels.size(); ++t) {
            if (labels[t] >= a.operators.size())
              throw std::out_of_range("monomial label out of range");
            v.push_back(&a.operators[labels[t]]);
          }
          return v;
        }()),
        d(lie.dim()), n(p.size()), assignment(n, 0) {}

  // Depth-first over bracket slots; zero partial brackets prune the subtree.
  void walk(std::size_t slot, const RowVec& value) {
    if (slot == n) {
      std::size_t base = 0;
      for (std::size_t v : assignment) base = base * d + v;
      base *= d;
      value.for_each([&](std::size_t out, const Rational& c) {
        entries.emplace_back(base + out, c);
      });
      return;
    }
    for (std::size_t j = 0; j < d; ++j) {
      RowVec arg = ops[slot]->apply(RowVec::unit(d, j));
      if (arg.is_zero()) continue;
      RowVec next = slot == 0 ? arg : l.bracket(value, arg);
      if (slot > 0 && next.is_zero()) continue;
      assignment[perm[slot]] = j;
      walk(slot + 1, next);
    }
  }
};

}  // namespace

EvaluationVector eval_monomial(const LieAlgebra& l, const ActionSpec& a,
                               const std::vector<std::size_t>& perm,
                               const std::vector<std::size_t>& labels) {
  if (perm.size() != labels.size())
    throw std::invalid_argument("eval_monomial: perm/label length mismatch");
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("eval_monomial: not a permutation");
    seen[v] = true;
  }
  EvaluationVector result;
  result.dim_l = l.dim();
  result.degree = n;
  std::size_t size = EvaluationVector::flat_size(l.dim(), n);
  if (l.dim() == 0 || n == 0) {
    result.data = RowVec(size);
    return result;
  }
  MonomialEvaluator walker(l, a, perm, labels);
  walker.walk(0, RowVec(l.dim()));
  result.data = RowVec::from_entries(size, std::move(walker.entries));
  return result;
}

EvaluationVector eval_polynomial(const LieAlgebra& l, const ActionSpec& a,
                                 const MultilinearHPolynomial& f) {
  EvaluationVector acc;
  acc.dim_l = l.dim();
  acc.degree = f.degree;
  acc.data = RowVec(EvaluationVector::flat_size(l.dim(), f.degree));
  for (const auto& term : f.terms) {
    if (term.perm.size() != f.degree)
      throw std::invalid_argument("eval_polynomial: term degree mismatch");
    EvaluationVector mono = eval_monomial(l, a, term.perm, term.labels);
    acc.data.add_scaled(mono.data, term.coeff);
  }
  return acc;
}

IdentityCheck is_identity(const LieAlgebra& l, const ActionSpec& a,
                          const MultilinearHPolynomial& f) {
  EvaluationVector value = eval_polynomial(l, a, f);
  IdentityCheck result;
  result.holds = value.data.is_zero();
  if (!result.holds) {
    auto lead = value.data.leading();
    auto [tuple, out] = EvaluationVector::decode(l.dim(), f.degree, *lead);
    result.witness = tuple;
    // Record the full value of f on the witness tuple.
    RowVec val(l.dim());
    for (std::size_t o = 0; o < l.dim(); ++o) {
      const Rational& c = value.data.at(EvaluationVector::flat_index(l.dim(), tuple, o));
      if (c != 0) val.set(o, c);
    }
    result.witness_value = std::move(val);
    (void)out;
  }
  return result;
}

namespace {

// Enumerates permutations of {0..n-1} with their signs.
void for_each_permutation(std::size_t n,
                          const std::function<void(const std::vector<std::size_t>&, int)>& fn) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  // Generate in lexicographic order, tracking sign by inversion counting.
  while (true) {
    fn(perm, sign);
    // next_permutation with sign tracking: recompute parity of the swap chain.
    std::size_t i = n;
    for (std::size_t k = n; k-- > 1;)
      if (perm[k - 1] < perm[k]) {
        i = k - 1;
        break;
      }
    if (i == n) break;
    std::size_t j = n - 1;
    while (perm[j] <= perm[i]) --j;
    std::swap(perm[i], perm[j]);
    sign = -sign;
    std::size_t lo = i + 1, hi = n - 1;
    while (lo < hi) {
      std::swap(perm[lo], perm[hi]);
      sign = -sign;
      ++lo;
      --hi;
    }
  }
}

}  // namespace

AssocPolynomial regev_polynomial(std::size_t q) {
  if (q < 1) throw std::invalid_argument("regev_polynomial: q must be >= 1");
  const std::size_t qq = q * q;
  AssocPolynomial poly;
  poly.num_vars = 2 * qq;
  // Interleaved block shape: the j-th block (1-based) covers argument
  // positions (j-1)^2 .. j^2 - 1 and has size 2j - 1; x-block then y-block.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t j = 1; j <= q; ++j) blocks.emplace_back((j - 1) * (j - 1), j * j);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<int> signs;
  for_each_permutation(qq, [&](const std::vector<std::size_t>& sigma, int sign) {
    perms.push_back(sigma);
    signs.push_back(sign);
  });
  for (std::size_t si = 0; si < perms.size(); ++si)
    for (std::size_t ti = 0; ti < perms.size(); ++ti) {
      std::vector<std::size_t> word;
      word.reserve(2 * qq);
      for (const auto& [lo, hi] : blocks) {
        for (std::size_t p = lo; p < hi; ++p) word.push_back(perms[si][p]);
        for (std::size_t p = lo; p < hi; ++p) word.push_back(qq + perms[ti][p]);
      }
      poly.terms.emplace_back(signs[si] * signs[ti], std::move(word));
    }
  return poly;
}

}  // namespace codimlab
