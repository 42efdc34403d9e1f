#include <benchmark/benchmark.h>

#include "moment_forge/functionals.hpp"
#include "moment_forge/harness.hpp"
#include "moment_forge/io.hpp"

using namespace moment_forge;

namespace {

const MPoly& quartic() {
  static const MPoly p = parse_mpoly("x^2 + y^2 + x*y + 1", {"x", "y"});
  return p;
}

void BM_QuarticPower(benchmark::State& state) {
  const auto m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quartic().pow(m));
}
BENCHMARK(BM_QuarticPower)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_GaussianOfQuarticPower(benchmark::State& state) {
  const auto m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_expectation(quartic().pow(m)));
}
BENCHMARK(BM_GaussianOfQuarticPower)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

// Dense three-variable product with rational Gaussian coefficients.
void BM_DenseProduct(benchmark::State& state) {
  const std::vector<std::string> vars = {"x", "y", "z"};
  const MPoly a = parse_mpoly("(1/2*x + i*y - 3*z + 2)", vars).pow(static_cast<unsigned long>(state.range(0)));
  const MPoly b = parse_mpoly("(x - 2/3*y + (1+i)*z - 1)", vars).pow(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
}
BENCHMARK(BM_DenseProduct)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

// Sparse operands whose exponents are too spread for the dense accumulator.
void BM_SparseProduct(benchmark::State& state) {
  const std::vector<std::string> vars = {"x", "y"};
  const MPoly a = parse_mpoly("x^900*y + 3*y^850 - x^400 + 7", vars).pow(4);
  const MPoly b = parse_mpoly("y^999 - i*x^300*y^2 + 5*x", vars).pow(4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SparseProduct)->Unit(benchmark::kMillisecond);

void BM_HalfDiskScan(benchmark::State& state) {
  const MPoly p = parse_mpoly("(x + i*y)^2", {"x", "y"});
  const MPoly q = parse_mpoly("x + i*y", {"x", "y"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(mz_probe(p, q, FunctionalKind::halfdisk, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_HalfDiskScan)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_FrobeniusCertificate(benchmark::State& state) {
  const MPoly f = parse_mpoly("1 - x^2 + 3*x*y^2 - 2*y^3*z + z^4", {"x", "y", "z"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius_certificate(f, static_cast<unsigned long>(state.range(0))));
  }
}
BENCHMARK(BM_FrobeniusCertificate)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
