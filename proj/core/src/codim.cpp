#include "codimlab/codim.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <thread>

namespace codimlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Unranks the k-th permutation of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank_permutation(std::size_t n, std::size_t rank) {
  std::vector<std::size_t> available;
  for (std::size_t i = 0; i < n; ++i) available.push_back(i);
  std::vector<std::size_t> perm;
  std::size_t f = factorial(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    f /= (n - pos);
    std::size_t idx = rank / f;
    rank %= f;
    perm.push_back(available[idx]);
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return perm;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void check_guards(const LieAlgebra& l, std::size_t n, std::size_t total_monomials,
                  const CodimOptions& opts) {
  if (n == 0) throw std::invalid_argument("codimensions are defined for n >= 1");
  if (l.dim() > 0) {
    std::size_t coords = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      coords *= l.dim();
      if (coords > opts.max_coordinates)
        throw ResourceCeiling("evaluation vector length exceeds the ceiling",
                              opts.max_coordinates, coords);
    }
  }
  if (total_monomials > opts.max_monomials)
    throw ResourceCeiling("monomial stream exceeds the ceiling", opts.max_monomials,
                          total_monomials);
}

// Streams the monomials with flat indices [begin, end) into the accumulator.
// Flat index = perm_rank * m^n + label_rank, labels little-endian base m over
// the label alphabet.
void stream_range(const LieAlgebra& l, const ActionSpec& a,
                  const std::vector<std::size_t>& label_alphabet, std::size_t n,
                  std::size_t begin, std::size_t end, RankAccumulator& acc) {
  const std::size_t m = label_alphabet.size();
  std::size_t label_space = 1;
  for (std::size_t i = 0; i < n; ++i) label_space *= m;
  std::vector<std::size_t> labels(n);
  for (std::size_t idx = begin; idx < end; ++idx) {
    std::size_t perm_rank = idx / label_space;
    std::size_t label_rank = idx % label_space;
    auto perm = unrank_permutation(n, perm_rank);
    for (std::size_t t = 0; t < n; ++t) {
      labels[t] = label_alphabet[label_rank % m];
      label_rank /= m;
    }
    acc.insert(eval_monomial(l, a, perm, labels).data);
  }
}

RankAccumulator accumulate_parallel(const LieAlgebra& l, const ActionSpec& a,
                                    const std::vector<std::size_t>& label_alphabet,
                                    std::size_t n, std::size_t total,
                                    const CodimOptions& opts) {
  const std::size_t size = EvaluationVector::flat_size(l.dim(), n);
  RankAccumulator acc(size);
  std::size_t workers = std::max<std::size_t>(1, opts.threads);
  workers = std::min(workers, total == 0 ? 1 : total);
  if (workers <= 1) {
    stream_range(l, a, label_alphabet, n, 0, total, acc);
    return acc;
  }
  std::vector<RankAccumulator> parts(workers, RankAccumulator(size));
  std::vector<std::thread> threads;
  std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, w, begin, end] {
      stream_range(l, a, label_alphabet, n, begin, end, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  for (auto& part : parts) acc.merge(std::move(part));
  return acc;
}

}  // namespace

const char* codim_mode_name(CodimMode mode) {
  switch (mode) {
    case CodimMode::Ordinary: return "ord";
    case CodimMode::Graded: return "gr";
    case CodimMode::GAction: return "g";
    case CodimMode::Hopf: return "hopf";
  }
  return "?";
}

Subspace hopf_image(const LieAlgebra& l, const ActionSpec& a, std::size_t n,
                    const CodimOptions& opts, std::size_t* monomials_out) {
  const std::size_t m = a.effective.size();
  std::size_t label_space = 1;
  for (std::size_t i = 0; i < n; ++i) label_space *= m;
  std::size_t total = factorial(n) * label_space;
  if (l.dim() == 0) total = 0;
  check_guards(l, n, total, opts);
  if (monomials_out) *monomials_out = total;
  if (l.dim() == 0) return Subspace::zero(0);
  auto acc = accumulate_parallel(l, a, a.effective, n, total, opts);
  return acc.to_subspace();
}

CodimReport codim_hopf(const LieAlgebra& l, const ActionSpec& a, std::size_t n,
                       const CodimOptions& opts) {
  auto start = Clock::now();
  CodimReport report;
  report.mode = CodimMode::Hopf;
  report.n = n;
  Subspace image = hopf_image(l, a, n, opts, &report.monomials);
  report.value = image.dim();
  report.millis = elapsed_ms(start);
  return report;
}

CodimReport codim_ordinary(const LieAlgebra& l, std::size_t n, const CodimOptions& opts) {
  CodimReport report = codim_hopf(l, trivial_action(l.dim()), n, opts);
  report.mode = CodimMode::Ordinary;
  return report;
}

namespace {

void compositions(std::size_t n, std::size_t parts,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> current(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == parts) {
      current[pos] = left;
      fn(current);
      return;
    }
    for (std::size_t take = 0; take <= left; ++take) {
      current[pos] = take;
      rec(pos + 1, left - take);
    }
  };
  if (parts == 0) {
    if (n == 0) fn(current);
    return;
  }
  rec(0, n);
}

std::size_t multinomial(std::size_t n, const std::vector<std::size_t>& parts) {
  // Product of binomials, overflow-safe at desk scale.
  std::size_t result = 1;
  std::size_t remaining = n;
  for (std::size_t p : parts) {
    // result *= C(remaining, p)
    std::size_t c = 1;
    for (std::size_t i = 1; i <= p; ++i) c = c * (remaining - p + i) / i;
    result *= c;
    remaining -= p;
  }
  return result;
}

}  // namespace

CodimReport codim_graded(const LieAlgebra& l, const Grading& g, std::size_t n,
                         const CodimOptions& opts) {
  auto start = Clock::now();
  check_homogeneous(l, g);
  ActionSpec a = from_grading(l, g);
  const std::size_t m = a.h_dim;
  CodimReport report;
  report.mode = CodimMode::Graded;
  report.n = n;
  if (l.dim() == 0) {
    check_guards(l, n, 0, opts);
    report.millis = elapsed_ms(start);
    return report;
  }
  // Count compositions to apply the monomial ceiling up front.
  std::size_t comp_count = binomial(n + m - 1, m - 1);
  check_guards(l, n, factorial(n) * std::max<std::size_t>(1, comp_count), opts);
  const std::size_t size = EvaluationVector::flat_size(l.dim(), n);
  std::size_t total_value = 0;
  compositions(n, m, [&](const std::vector<std::size_t>& comp) {
    // Representative label per variable: n_1 copies of label 0, then n_2 of
    // label 1, ...  The label travels with the variable under σ.
    std::vector<std::size_t> label_of_var(n);
    std::size_t v = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t cnt = 0; cnt < comp[i]; ++cnt) label_of_var[v++] = i;
    RankAccumulator acc(size);
    std::size_t perms = factorial(n);
    std::vector<std::size_t> labels(n);
    for (std::size_t rank = 0; rank < perms; ++rank) {
      auto perm = unrank_permutation(n, rank);
      for (std::size_t t = 0; t < n; ++t) labels[t] = label_of_var[perm[t]];
      acc.insert(eval_monomial(l, a, perm, labels).data);
      ++report.monomials;
    }
    total_value += multinomial(n, comp) * acc.rank();
  });
  report.value = total_value;
  report.millis = elapsed_ms(start);
  return report;
}

CodimReport codim_gaction(const LieAlgebra& l, const GroupSpec& g,
                          const std::map<std::string, Matrix>& generator_matrices,
                          std::size_t n, const CodimOptions& opts) {
  ActionSpec a = from_group_action(l, g, generator_matrices);
  CodimReport report = codim_hopf(l, a, n, opts);
  report.mode = CodimMode::GAction;
  return report;
}

namespace {

using ElemList = std::vector<GroupElem>;

ElemList sorted_elems(const GroupSpec& group, ElemList v) {
  for (auto& e : v) e = group.normalize(e);
  std::sort(v.begin(), v.end(), group_elem_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [&](const GroupElem& a, const GroupElem& b) { return group.equal(a, b); }),
          v.end());
  return v;
}

ElemList intersect_elems(const GroupSpec& group, const ElemList& a, const ElemList& b) {
  ElemList out;
  for (const auto& x : a)
    for (const auto& y : b)
      if (group.equal(x, y)) {
        out.push_back(x);
        break;
      }
  return sorted_elems(group, out);
}

}  // namespace

std::size_t inclusion_exclusion_graded(const LieAlgebra& l, const Grading& g, std::size_t n,
                                       const CodimOptions& opts) {
  if (!g.group.is_finite())
    throw std::invalid_argument("inclusion_exclusion_graded requires a finite group");
  check_homogeneous(l, g);
  auto support = g.support();
  // All distinct abelian subgroups generated by subsets of the support.
  std::vector<ElemList> subgroups;
  const std::size_t subsets = std::size_t(1) << support.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    ElemList gens;
    for (std::size_t i = 0; i < support.size(); ++i)
      if (mask & (std::size_t(1) << i)) gens.push_back(support[i]);
    ElemList subgroup = sorted_elems(g.group, g.group.generated_subgroup(gens));
    if (!g.group.subgroup_abelian(subgroup)) continue;
    if (std::find(subgroups.begin(), subgroups.end(), subgroup) == subgroups.end())
      subgroups.push_back(subgroup);
  }
  // c_n^gr of L_{G0}, memoized on the subgroup.
  std::map<ElemList, long long> memo;
  auto restricted_codim = [&](const ElemList& subgroup) -> long long {
    auto it = memo.find(subgroup);
    if (it != memo.end()) return it->second;
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (const auto& e : subgroup)
        if (g.group.equal(g.degrees[i], e)) {
          indices.push_back(i);
          break;
        }
    long long value = 0;
    if (!indices.empty()) {
      LieAlgebra sub = l.subalgebra_on_basis(indices);
      Grading sub_grading = g.restricted(indices);
      value = static_cast<long long>(codim_graded(sub, sub_grading, n, opts).value);
    }
    memo[subgroup] = value;
    return value;
  };
  const std::size_t r = subgroups.size();
  long long total = 0;
  for (std::size_t mask = 1; mask < (std::size_t(1) << r); ++mask) {
    ElemList inter;
    bool first = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask & (std::size_t(1) << i))) continue;
      inter = first ? subgroups[i] : intersect_elems(g.group, inter, subgroups[i]);
      first = false;
    }
    int sign = (std::popcount(mask) % 2 == 1) ? 1 : -1;
    total += sign * restricted_codim(inter);
  }
  if (total < 0) throw std::logic_error("inclusion-exclusion produced a negative value");
  return static_cast<std::size_t>(total);
}

std::vector<std::string> bounds_audit(const std::vector<CodimReport>& reports,
                                      std::size_t dim_l, std::size_t effective_m) {
  std::vector<std::string> violations;
  auto dim_power = [&](std::size_t n) {
    unsigned long long p = 1;
    for (std::size_t i = 0; i <= n; ++i) p *= dim_l;
    return p;
  };
  std::map<std::size_t, std::size_t> ordinary;
  for (const auto& rep : reports)
    if (rep.mode == CodimMode::Ordinary) ordinary[rep.n] = rep.value;
  for (const auto& rep : reports) {
    if (dim_l > 0 && rep.value > dim_power(rep.n))
      violations.push_back(std::string(codim_mode_name(rep.mode)) + " codimension at n=" +
                           std::to_string(rep.n) + " exceeds (dim L)^{n+1}");
    if (rep.mode == CodimMode::Ordinary) continue;
    auto it = ordinary.find(rep.n);
    if (it == ordinary.end()) continue;
    unsigned long long upper = it->second;
    for (std::size_t i = 0; i < rep.n; ++i) upper *= effective_m;
    if (rep.value < it->second)
      violations.push_back(std::string(codim_mode_name(rep.mode)) + " codimension at n=" +
                           std::to_string(rep.n) + " is below the ordinary codimension");
    if (rep.value > upper)
      violations.push_back(std::string(codim_mode_name(rep.mode)) + " codimension at n=" +
                           std::to_string(rep.n) + " exceeds m^n times the ordinary codimension");
  }
  return violations;
}

}  // namespace codimlab
