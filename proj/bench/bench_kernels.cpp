// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "qcover/congruence.hpp"
#include "qcover/invariants.hpp"
#include "qcover/linkform.hpp"
#include "qcover/skein.hpp"

using namespace qcover;

namespace {

HopfSatellite omega_satellite(long p) { return {static_cast<int>(p), omega(p), omega(p)}; }

void BM_SatelliteSerial(benchmark::State& st) {
  const auto s = omega_satellite(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(bracket_satellite_serial(s));
}

void BM_SatelliteParallel(benchmark::State& st) {
  const auto s = omega_satellite(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(bracket_satellite(s));
}

OrbitInstance orbit_instance(long p) {
  std::mt19937_64 rng(7);
  return random_orbit_instance(ring_modulus(p), p, 3, rng);
}

void BM_OrbitSerial(benchmark::State& st) {
  const auto inst = orbit_instance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(orbit_congruence_check_serial(inst));
}

void BM_OrbitParallel(benchmark::State& st) {
  const auto inst = orbit_instance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(orbit_congruence_check(inst));
}

struct CurveCase {
  Homology1 h;
  Character chi;
};

CurveCase curve_case() {
  Homology1 h{0, WallForm::parse("A25+A25+A5")};
  return {h, Character::parse("tors:1/25,2/25,1/5", 25)};
}

void BM_GoodCurvesSerial(benchmark::State& st) {
  const auto c = curve_case();
  for (auto _ : st) benchmark::DoNotOptimize(good_single_curves_serial(c.h, c.chi));
}

void BM_GoodCurvesParallel(benchmark::State& st) {
  const auto c = curve_case();
  for (auto _ : st) benchmark::DoNotOptimize(good_single_curves(c.h, c.chi));
}

}  // namespace

BENCHMARK(BM_SatelliteSerial)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SatelliteParallel)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GoodCurvesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GoodCurvesParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
