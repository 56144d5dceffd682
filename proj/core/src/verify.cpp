#include "codimlab/verify.hpp"

#include "codimlab/exponent.hpp"
#include "codimlab/io.hpp"
#include "codimlab/symrep.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace codimlab {

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteContext {
  std::filesystem::path dir;
  CodimOptions codim;

  AlgebraFile load(const std::string& stem) const {
    auto path = dir / (stem + ".json");
    if (!std::filesystem::exists(path))
      throw std::runtime_error("missing fixture: " + path.string());
    return load_algebra_file(path);
  }
};

struct Failure {
  std::string message;
};

void expect(bool condition, const std::string& message, std::vector<std::string>& problems) {
  if (!condition) problems.push_back(message);
}

// ---- criterion 1: identity membership --------------------------------------

void criterion_identity(const SuiteContext& ctx, std::vector<std::string>& problems) {
  {
    auto file = ctx.load("gl2_z2graded");
    auto action = resolve_action(file);
    auto even = *action.operator_index("[0]");
    auto f = MultilinearHPolynomial::monomial({0, 1}, {even, even});
    expect(is_identity(file.algebra, action, f).holds,
           "[x^(0), y^(0)] is not an identity of Z2-graded gl2", problems);
  }
  {
    auto file = ctx.load("gl4sub_s3graded");
    auto action = resolve_action(file);
    auto e = *action.operator_index("e");
    auto t12 = *action.operator_index("(12)");
    auto t23 = *action.operator_index("(23)");
    expect(is_identity(file.algebra, action,
                       MultilinearHPolynomial::monomial({0, 1}, {t12, t23}))
               .holds,
           "[x^((12)), y^((23))] is not an identity of the S3-graded subalgebra", problems);
    expect(is_identity(file.algebra, action,
                       MultilinearHPolynomial::monomial({0, 1}, {e, e}))
               .holds,
           "[x^(e), y^(e)] is not an identity of the S3-graded subalgebra", problems);
  }
  {
    auto file = ctx.load("gl2_psi_action");
    auto action = resolve_action(file);
    auto one = *action.operator_index("e");
    auto psi = *action.operator_index("psi");
    MultilinearHPolynomial f;
    f.degree = 2;
    for (auto la : {one, psi})
      for (auto lb : {one, psi}) f.terms.push_back({Rational(1), {0, 1}, {la, lb}});
    expect(is_identity(file.algebra, action, f).holds,
           "[x + x^psi, y + y^psi] is not an identity of gl2", problems);
  }
  {
    auto file = ctx.load("gl2_e0e1_action");
    auto action = resolve_action(file);
    auto e0 = *action.operator_index("e0");
    auto e1 = *action.operator_index("e1");
    expect(is_identity(file.algebra, action,
                       MultilinearHPolynomial::monomial({0, 1}, {e0, e0}))
               .holds,
           "[x^{e0}, y^{e0}] is not an identity under the e0/e1 action", problems);
    auto check = is_identity(file.algebra, action,
                             MultilinearHPolynomial::monomial({0, 1}, {e1, e1}));
    expect(!check.holds, "[x^{e1}, y^{e1}] unexpectedly is an identity", problems);
    if (!check.holds) {
      // The witness must really produce a nonzero value.
      RowVec u = action.operators[e1].apply(RowVec::unit(4, check.witness[0]));
      RowVec v = action.operators[e1].apply(RowVec::unit(4, check.witness[1]));
      expect(file.algebra.bracket(u, v) == check.witness_value && !check.witness_value.is_zero(),
             "the witness for [x^{e1}, y^{e1}] does not evaluate to its reported value",
             problems);
    }
  }
}

// ---- criterion 2: graded/Hopf duality ---------------------------------------

void criterion_duality(const SuiteContext& ctx, std::vector<std::string>& problems) {
  for (const std::string stem : {"gl2_z2graded", "gl4sub_s3graded"}) {
    auto file = ctx.load(stem);
    auto action = grading_action(file);
    for (std::size_t n = 1; n <= 5; ++n) {
      auto graded = codim_graded(file.algebra, *file.grading, n, ctx.codim);
      auto hopf = codim_hopf(file.algebra, action, n, ctx.codim);
      expect(graded.value == hopf.value,
             stem + ": c_" + std::to_string(n) + "^gr = " + std::to_string(graded.value) +
                 " but c^H = " + std::to_string(hopf.value),
             problems);
    }
  }
}

// ---- criterion 3: inclusion-exclusion ---------------------------------------

void criterion_inclusion_exclusion(const SuiteContext& ctx,
                                   std::vector<std::string>& problems) {
  for (const std::string stem : {"gl4sub_s3graded", "2gl2_s3graded"}) {
    auto file = ctx.load(stem);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto direct = codim_graded(file.algebra, *file.grading, n, ctx.codim).value;
      auto alternating = inclusion_exclusion_graded(file.algebra, *file.grading, n, ctx.codim);
      expect(direct == alternating,
             stem + ": inclusion-exclusion gives " + std::to_string(alternating) +
                 " but the direct graded codimension is " + std::to_string(direct) + " at n=" +
                 std::to_string(n),
             problems);
    }
  }
}

// ---- criterion 4: sandwich bounds -------------------------------------------

void criterion_sandwich(const SuiteContext& ctx, std::vector<std::string>& problems) {
  struct Case {
    std::string stem;
    std::size_t max_n;
  };
  for (const Case& c : {Case{"gl2_z2graded", 5}, Case{"gl4sub_s3graded", 5},
                        Case{"2gl2_s3graded", 4}, Case{"gl2_psi_action", 4},
                        Case{"gl2_e0e1_action", 4}, Case{"sl2sl2_swap", 4}}) {
    auto file = ctx.load(c.stem);
    auto action = resolve_action(file);
    std::vector<CodimReport> reports;
    for (std::size_t n = 1; n <= c.max_n; ++n) {
      reports.push_back(codim_ordinary(file.algebra, n, ctx.codim));
      reports.push_back(codim_hopf(file.algebra, action, n, ctx.codim));
    }
    auto violations = bounds_audit(reports, file.algebra.dim(), action.effective.size());
    for (const auto& v : violations) problems.push_back(c.stem + ": " + v);
  }
}

// ---- criterion 5: exponent values -------------------------------------------

void criterion_exponents(const SuiteContext& ctx, std::vector<std::string>& problems) {
  auto expect_d = [&](const std::string& stem, const ActionSpec& action,
                      const LieAlgebra& algebra, std::size_t expected, bool must_be_exact) {
    auto report = pi_exponent(algebra, action);
    expect(report.d == expected,
           stem + ": d = " + std::to_string(report.d) + ", expected " +
               std::to_string(expected),
           problems);
    if (must_be_exact)
      expect(report.exactness == Exactness::Exact, stem + ": exactness flag is not exact",
             problems);
  };
  {
    auto file = ctx.load("sl2");
    expect_d("sl2", trivial_action(3), file.algebra, 3, true);
  }
  {
    auto file = ctx.load("sl2sl2_swap");
    expect_d("sl2+sl2 (trivial)", trivial_action(6), file.algebra, 3, true);
    expect_d("sl2+sl2 (swap)", resolve_action(file), file.algebra, 6, true);
  }
  {
    auto file = ctx.load("2gl2_s3graded");
    expect_d("2gl2_s3graded", resolve_action(file), file.algebra, 3, false);
  }
  {
    auto file = ctx.load("gl2");
    expect_d("gl2", trivial_action(4), file.algebra, 3, true);
  }
  {
    auto file = ctx.load("heisenberg_h3");
    auto report = pi_exponent(file.algebra, trivial_action(3));
    expect(report.d == 0 && report.exactness == Exactness::Exact,
           "heisenberg: d must be 0 exact", problems);
    auto [nil, p] = file.algebra.nilradical();
    expect(nil.dim() == 3 && p == 3, "heisenberg: nilradical must be everything with index 3",
           problems);
    for (std::size_t n = p; n <= p + 2; ++n)
      expect(codim_ordinary(file.algebra, n, ctx.codim).value == 0,
             "heisenberg: c_" + std::to_string(n) + " must vanish", problems);
  }
}

// ---- criterion 6: simplicity criterion --------------------------------------

void criterion_simplicity(const SuiteContext& ctx, std::vector<std::string>& problems) {
  const std::vector<std::string> stems = {
      "sl2",           "gl2",           "heisenberg_h3",     "abelian2",
      "solvable2",     "gl2_z2graded",  "gl4sub_s3graded",   "gl2_psi_action",
      "gl2_e0e1_action", "sl2sl2_swap", "2gl2_s3graded",     "sl2_semidirect_q2"};
  for (const auto& stem : stems) {
    auto file = ctx.load(stem);
    auto action = resolve_action(file);
    try {
      auto verdict = simplicity_criterion(file.algebra, action);
      expect(verdict.d_equals_dim == (verdict.semisimple && verdict.h_simple),
             stem + ": biconditional sides disagree", problems);
    } catch (const std::exception& e) {
      problems.push_back(stem + ": simplicity criterion failed: " + e.what());
    }
  }
}

// ---- criterion 7: cocharacter consistency -----------------------------------

void criterion_cocharacters(const SuiteContext& ctx, std::vector<std::string>& problems) {
  {
    auto file = ctx.load("sl2");
    auto action = trivial_action(3);
    for (std::size_t n = 1; n <= 5; ++n) {
      auto report = cocharacter(file.algebra, action, n, ctx.codim);
      unsigned long long weighted = 0;
      for (const auto& [lambda, m] : report.multiplicities) weighted += m * hook_dim(lambda);
      expect(weighted == report.codim,
             "sl2: dimension identity fails at n=" + std::to_string(n), problems);
      auto audit = multiplicity_bound_audit(report);
      for (const auto& v : audit) problems.push_back("sl2 cocharacter audit: " + v);
    }
  }
  {
    auto file = ctx.load("gl2_z2graded");
    auto action = grading_action(file);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto report = cocharacter(file.algebra, action, n, ctx.codim);
      unsigned long long weighted = 0;
      for (const auto& [lambda, m] : report.multiplicities) weighted += m * hook_dim(lambda);
      expect(weighted == report.codim,
             "gl2/Z2: dimension identity fails at n=" + std::to_string(n), problems);
      expect(report.d_exact && report.d_used == 3,
             "gl2/Z2: the exponent entering the audit must be the exact d = 3", problems);
      auto audit = multiplicity_bound_audit(report);
      for (const auto& v : audit) problems.push_back("gl2/Z2 cocharacter audit: " + v);
    }
  }
}

// ---- criterion 8: nilpotency vanishing --------------------------------------

void criterion_nilpotent_vanishing(const SuiteContext& ctx,
                                   std::vector<std::string>& problems) {
  for (const std::string stem : {"heisenberg_h3", "abelian2"}) {
    auto file = ctx.load(stem);
    auto [nil, p] = file.algebra.nilradical();
    expect(nil.dim() == file.algebra.dim(), stem + ": fixture must be nilpotent", problems);
    Grading trivial_grading;
    trivial_grading.group = GroupSpec::trivial();
    trivial_grading.degrees.assign(file.algebra.dim(), trivial_grading.group.identity());
    for (std::size_t n = p; n <= p + 2; ++n) {
      expect(codim_ordinary(file.algebra, n, ctx.codim).value == 0,
             stem + ": ordinary codimension nonzero at n=" + std::to_string(n), problems);
      expect(codim_hopf(file.algebra, trivial_action(file.algebra.dim()), n, ctx.codim).value ==
                 0,
             stem + ": Hopf codimension nonzero at n=" + std::to_string(n), problems);
      expect(codim_graded(file.algebra, trivial_grading, n, ctx.codim).value == 0,
             stem + ": graded codimension nonzero at n=" + std::to_string(n), problems);
    }
  }
}

// ---- criterion 9: Regev centrality ------------------------------------------

void criterion_regev(const SuiteContext&, std::vector<std::string>& problems) {
  auto poly = regev_polynomial(2);
  expect(poly.terms.size() == 576, "Regev polynomial for q=2 must have (4!)^2 terms", problems);
  bool saw_nonzero = false;
  long long args_row[8], args_col[8];
  for (std::size_t xa = 0; xa < 256; ++xa)
    for (std::size_t ya = 0; ya < 256; ++ya) {
      std::size_t xs = xa, ys = ya;
      for (int t = 0; t < 4; ++t) {
        args_row[t] = (xs % 4) / 2;
        args_col[t] = (xs % 4) % 2;
        xs /= 4;
        args_row[4 + t] = (ys % 4) / 2;
        args_col[4 + t] = (ys % 4) % 2;
        ys /= 4;
      }
      long long value[2][2] = {{0, 0}, {0, 0}};
      for (const auto& [sign, word] : poly.terms) {
        long long row = args_row[word[0]], col = args_col[word[0]];
        bool alive = true;
        for (std::size_t t = 1; t < word.size(); ++t) {
          if (col != args_row[word[t]]) {
            alive = false;
            break;
          }
          col = args_col[word[t]];
        }
        if (alive) value[row][col] += sign;
      }
      bool scalar = value[0][1] == 0 && value[1][0] == 0 && value[0][0] == value[1][1];
      if (!scalar) {
        problems.push_back("Regev value is not central on a matrix-unit substitution");
        return;
      }
      if (value[0][0] != 0) saw_nonzero = true;
    }
  expect(saw_nonzero, "Regev polynomial vanished on every matrix-unit substitution", problems);
}

// ---- criterion 10: oracle equivalence ---------------------------------------

// Dense brute force: full evaluation matrix, fraction-free (Bareiss) rank.
std::size_t dense_oracle_codim(const LieAlgebra& l, const ActionSpec& a, std::size_t n) {
  const std::size_t d = l.dim();
  if (d == 0) return 0;
  std::size_t cols = 1;
  for (std::size_t i = 0; i <= n; ++i) cols *= d;
  std::vector<std::vector<Integer>> mat;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    std::size_t label_count = 1;
    for (std::size_t i = 0; i < n; ++i) label_count *= a.effective.size();
    for (std::size_t lr = 0; lr < label_count; ++lr) {
      std::vector<std::size_t> labels(n);
      std::size_t rest = lr;
      for (std::size_t t = 0; t < n; ++t) {
        labels[t] = a.effective[rest % a.effective.size()];
        rest /= a.effective.size();
      }
      std::vector<Rational> row(cols);
      std::vector<std::size_t> tuple(n, 0);
      while (true) {
        RowVec value(d);
        for (std::size_t t = 0; t < n; ++t) {
          RowVec arg = a.operators[labels[t]].apply(RowVec::unit(d, tuple[perm[t]]));
          value = t == 0 ? arg : l.bracket(value, arg);
        }
        std::size_t base = 0;
        for (std::size_t v : tuple) base = base * d + v;
        for (std::size_t o = 0; o < d; ++o) row[base * d + o] = value.at(o);
        std::size_t pos = n;
        while (pos > 0) {
          if (++tuple[pos - 1] < d) break;
          tuple[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
      Integer lcm_den = 1;
      for (const auto& v : row) lcm_den = lcm(lcm_den, Integer(denominator(v)));
      std::vector<Integer> irow;
      irow.reserve(cols);
      for (const auto& v : row)
        irow.push_back(Integer(numerator(v)) * (lcm_den / Integer(denominator(v))));
      mat.push_back(std::move(irow));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const std::size_t rows = mat.size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (mat[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(mat[rank], mat[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        mat[r][c] = (mat[rank][col] * mat[r][c] - mat[r][col] * mat[rank][c]) / prev;
      mat[r][col] = 0;
    }
    prev = mat[rank][col];
    ++rank;
  }
  return rank;
}

void criterion_oracle(const SuiteContext& ctx, std::vector<std::string>& problems) {
  for (const std::string stem : {"sl2", "heisenberg_h3", "abelian2", "solvable2"}) {
    auto file = ctx.load(stem);
    if (file.algebra.dim() > 3) continue;
    auto action = trivial_action(file.algebra.dim());
    for (std::size_t n = 1; n <= 4; ++n) {
      auto engine = codim_ordinary(file.algebra, n, ctx.codim).value;
      auto oracle = dense_oracle_codim(file.algebra, action, n);
      expect(engine == oracle,
             stem + ": engine says " + std::to_string(engine) + " but the oracle says " +
                 std::to_string(oracle) + " at n=" + std::to_string(n),
             problems);
    }
  }
}

// ---- criterion 11: determinism ----------------------------------------------

std::string suite_output_bundle(const SuiteContext& ctx, std::size_t threads) {
  CodimOptions opts = ctx.codim;
  opts.threads = threads;
  std::ostringstream os;
  {
    auto file = ctx.load("sl2");
    for (std::size_t n = 1; n <= 4; ++n) {
      auto rep = codim_ordinary(file.algebra, n, opts);
      os << "ord,sl2," << rep.n << ',' << rep.value << ',' << rep.monomials << '\n';
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      auto report = cocharacter(file.algebra, trivial_action(3), n, opts);
      for (const auto& [lambda, m] : report.multiplicities)
        os << "cochar,sl2," << n << ',' << lambda.dashed() << ',' << m << '\n';
    }
  }
  for (const std::string stem : {"gl2_z2graded", "gl4sub_s3graded"}) {
    auto file = ctx.load(stem);
    auto action = grading_action(file);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto gr = codim_graded(file.algebra, *file.grading, n, opts);
      auto hp = codim_hopf(file.algebra, action, n, opts);
      os << "gr," << stem << ',' << n << ',' << gr.value << ',' << gr.monomials << '\n';
      os << "hopf," << stem << ',' << n << ',' << hp.value << ',' << hp.monomials << '\n';
    }
    auto report = pi_exponent(file.algebra, action);
    os << "exponent," << stem << ',' << report.d << ','
       << (report.exactness == Exactness::Exact ? "exact" : "lower_bound") << '\n';
  }
  return os.str();
}

void criterion_determinism(const SuiteContext& ctx, std::vector<std::string>& problems) {
  std::string once = suite_output_bundle(ctx, 1);
  std::string again = suite_output_bundle(ctx, 1);
  expect(once == again, "suite outputs differ between two single-threaded runs", problems);
  std::string threaded = suite_output_bundle(ctx, 4);
  expect(once == threaded, "suite outputs differ between 1 and 4 threads", problems);
}

}  // namespace

std::vector<CriterionResult> run_builtin_suite(const std::filesystem::path& fixtures_dir,
                                               const VerifyOptions& opts) {
  SuiteContext ctx{fixtures_dir, opts.codim};
  ctx.codim.threads = opts.threads;
  struct Entry {
    int id;
    const char* name;
    std::function<void(const SuiteContext&, std::vector<std::string>&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "identity-membership", criterion_identity},
      {2, "graded-hopf-duality", criterion_duality},
      {3, "inclusion-exclusion", criterion_inclusion_exclusion},
      {4, "sandwich-bounds", criterion_sandwich},
      {5, "exponent-values", criterion_exponents},
      {6, "simplicity-criterion", criterion_simplicity},
      {7, "cocharacter-consistency", criterion_cocharacters},
      {8, "nilpotency-vanishing", criterion_nilpotent_vanishing},
      {9, "regev-centrality", criterion_regev},
      {10, "oracle-equivalence", criterion_oracle},
      {11, "determinism", criterion_determinism},
  };
  std::vector<CriterionResult> results;
  for (const auto& entry : entries) {
    if (!opts.filter.empty() &&
        std::string(entry.name).find(opts.filter) == std::string::npos)
      continue;
    CriterionResult result;
    result.id = entry.id;
    result.name = entry.name;
    auto start = Clock::now();
    std::vector<std::string> problems;
    try {
      entry.run(ctx, problems);
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    result.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    result.pass = problems.empty();
    if (!problems.empty()) {
      std::ostringstream os;
      for (std::size_t i = 0; i < problems.size(); ++i) {
        if (i) os << "; ";
        os << problems[i];
      }
      result.detail = os.str();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace codimlab
