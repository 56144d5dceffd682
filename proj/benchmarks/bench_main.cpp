#include "codimlab/codim.hpp"
#include "codimlab/subspace.hpp"
#include "codimlab/symrep.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace codimlab;

LieAlgebra bench_sl2() {
  std::vector<std::vector<RowVec>> c(3, std::vector<RowVec>(3, RowVec(3)));
  auto set = [&](int i, int j, int k, long long v) {
    c[i][j].set(k, Rational(v));
    c[j][i].set(k, Rational(-v));
  };
  set(0, 2, 1, 1);
  set(1, 0, 0, 2);
  set(1, 2, 2, -2);
  return LieAlgebra({"e", "h", "f"}, std::move(c));
}

LieAlgebra bench_gl2() {
  std::vector<std::vector<RowVec>> c(4, std::vector<RowVec>(4, RowVec(4)));
  auto set = [&](int i, int j, int k, long long v) {
    c[i][j].set(k, c[i][j].at(k) + Rational(v));
    c[j][i].set(k, c[j][i].at(k) - Rational(v));
  };
  set(0, 1, 1, 1);
  set(0, 2, 2, -1);
  set(1, 2, 0, 1);
  set(1, 2, 3, -1);
  set(1, 3, 1, 1);
  set(2, 3, 2, -1);
  return LieAlgebra({"E11", "E12", "E21", "E22"}, std::move(c));
}

Grading gl2_z2() {
  Grading g;
  g.group = GroupSpec::abelian({2});
  g.degrees = {std::vector<long long>{0}, std::vector<long long>{1},
               std::vector<long long>{1}, std::vector<long long>{0}};
  return g;
}

void BM_rank_accumulator(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<RowVec> stream;
  for (std::size_t i = 0; i < 4 * dim; ++i) {
    RowVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      int x = coeff(gen);
      if (x != 0 && j % 3 != 1) v.set(j, Rational(x));
    }
    stream.push_back(std::move(v));
  }
  for (auto _ : state) {
    RankAccumulator acc(dim);
    for (const auto& v : stream) acc.insert(v);
    benchmark::DoNotOptimize(acc.rank());
  }
}
BENCHMARK(BM_rank_accumulator)->Arg(32)->Arg(64);

void BM_codim_ordinary_sl2(benchmark::State& state) {
  auto l = bench_sl2();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto report = codim_ordinary(l, n);
    benchmark::DoNotOptimize(report.value);
  }
}
BENCHMARK(BM_codim_ordinary_sl2)->Arg(3)->Arg(4)->Arg(5);

void BM_codim_graded_gl2(benchmark::State& state) {
  auto l = bench_gl2();
  auto g = gl2_z2();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto report = codim_graded(l, g, n);
    benchmark::DoNotOptimize(report.value);
  }
}
BENCHMARK(BM_codim_graded_gl2)->Arg(3)->Arg(4);

void BM_codim_hopf_gl2_graded(benchmark::State& state) {
  auto l = bench_gl2();
  auto a = from_grading(l, gl2_z2());
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto report = codim_hopf(l, a, n);
    benchmark::DoNotOptimize(report.value);
  }
}
BENCHMARK(BM_codim_hopf_gl2_graded)->Arg(3)->Arg(4);

void BM_cocharacter_sl2(benchmark::State& state) {
  auto l = bench_sl2();
  auto a = trivial_action(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto report = cocharacter(l, a, n);
    benchmark::DoNotOptimize(report.codim);
  }
}
BENCHMARK(BM_cocharacter_sl2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
