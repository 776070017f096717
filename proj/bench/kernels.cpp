// Serial reference vs OpenMP kernels on the bundled automorphisms.

#include <benchmark/benchmark.h>

#include "fbc/growth.hpp"
#include "fbc/spec_io.hpp"
#include "fbc/stack.hpp"

namespace {

fbc::Automorphism phi(const char* name) {
  return fbc::load_phi(std::string(FBC_DATA_DIR) + "/phi/" + name + ".json");
}

void BM_k_exhaustive_serial(benchmark::State& st) {
  auto f = phi("rank3");
  for (auto _ : st)
    benchmark::DoNotOptimize(fbc::k_exhaustive_serial(
        f, static_cast<std::size_t>(st.range(0)), 8, fbc::GrowthMode::cyclic));
}

void BM_k_exhaustive_omp(benchmark::State& st) {
  auto f = phi("rank3");
  for (auto _ : st)
    benchmark::DoNotOptimize(fbc::k_exhaustive(
        f, static_cast<std::size_t>(st.range(0)), 8, fbc::GrowthMode::cyclic));
}

void BM_brinkmann_serial(benchmark::State& st) {
  auto f = phi("fib");
  fbc::CorpusSpec spec{1, static_cast<std::size_t>(st.range(0)), 30, 12};
  for (auto _ : st)
    benchmark::DoNotOptimize(
        fbc::check_brinkmann_serial(f, fbc::Rational(55, 28), spec));
}

void BM_brinkmann_omp(benchmark::State& st) {
  auto f = phi("fib");
  fbc::CorpusSpec spec{1, static_cast<std::size_t>(st.range(0)), 30, 12};
  for (auto _ : st)
    benchmark::DoNotOptimize(fbc::check_brinkmann(f, fbc::Rational(55, 28), spec));
}

void BM_bcc_serial(benchmark::State& st) {
  auto f = fbc::rose_of(phi("rank3"));
  for (auto _ : st)
    benchmark::DoNotOptimize(
        fbc::estimate_bcc_serial(f, static_cast<std::size_t>(st.range(0))));
}

void BM_bcc_omp(benchmark::State& st) {
  auto f = fbc::rose_of(phi("rank3"));
  for (auto _ : st)
    benchmark::DoNotOptimize(
        fbc::estimate_bcc(f, static_cast<std::size_t>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_k_exhaustive_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_k_exhaustive_omp)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_brinkmann_serial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_brinkmann_omp)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_bcc_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bcc_omp)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
