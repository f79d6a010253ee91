#include <benchmark/benchmark.h>

#include "plcommute/commutators.hpp"
#include "plcommute/conjugacy.hpp"
#include "plcommute/families.hpp"
#include "plcommute/lattice.hpp"

using namespace plc;

namespace {

FamilyInstance bench_instance() { return family_fig11(Rational(3, 7), Rational(5, 8)); }

void BM_ComposePower(benchmark::State& state) {
  const PLMap f = tent();
  for (auto _ : state) {
    PLMap cur = f;
    for (int i = 1; i < state.range(0); ++i) cur = compose(f, cur);
    benchmark::DoNotOptimize(cur.piece_count());
  }
}
BENCHMARK(BM_ComposePower)->Arg(4)->Arg(8)->Arg(10);

void BM_EvalComposite(benchmark::State& state) {
  const PLMap m = compose(bench_instance().g, bench_instance().psi);
  for (auto _ : state) {
    Rational acc(0);
    for (long k = 1; k < 200; ++k) acc += m(Rational(k, 200));
    benchmark::DoNotOptimize(acc.sign());
  }
}
BENCHMARK(BM_EvalComposite);

void BM_CommuteVerdict(benchmark::State& state) {
  const FamilyInstance inst = bench_instance();
  for (auto _ : state) benchmark::DoNotOptimize(commutes(inst.g, inst.psi).commutes);
}
BENCHMARK(BM_CommuteVerdict);

void BM_DeterminatingLattice(benchmark::State& state) {
  const FamilyInstance inst = bench_instance();
  for (auto _ : state) benchmark::DoNotOptimize(determinating_lattice(inst.g, inst.psi).x_lines.size());
}
BENCHMARK(BM_DeterminatingLattice);

void BM_FindTentConjugacy(benchmark::State& state) {
  const PLMap g = family_fig18(Rational(3, 10), Rational(2, 5)).g;
  for (auto _ : state) benchmark::DoNotOptimize(find_tent_conjugacy(g).has_value());
}
BENCHMARK(BM_FindTentConjugacy);

void BM_CompleteFromLeft(benchmark::State& state) {
  const std::vector<Point> leg = parse_points("0,0; 3/10,3/5; 2/5,1");
  for (auto _ : state) benchmark::DoNotOptimize(complete_from_left(leg).piece_count());
}
BENCHMARK(BM_CompleteFromLeft);

}  // namespace

BENCHMARK_MAIN();
