#include <benchmark/benchmark.h>

#include "mckay/chen_ruan.hpp"
#include "mckay/isocheck.hpp"
#include "mckay/parse.hpp"
#include "mckay/quantum.hpp"
#include "mckay/toric_ring.hpp"

using namespace mckay;

namespace {

const std::string kSqrt2 = "(zeta(8,1)+zeta(8,7))";

GeneratorMap p1344_map() {
  const std::vector<std::vector<std::string>> rows{{"1", "0", "0", "0", "0"},
                                                   {"0", "-" + kSqrt2, "-(2*i)", kSqrt2, "0"},
                                                   {"0", "-(i*" + kSqrt2 + ")", "(2*i)", "-(i*" + kSqrt2 + ")", "0"},
                                                   {"0", kSqrt2, "-(2*i)", "-" + kSqrt2, "0"},
                                                   {"0", "0", "0", "0", "3*zeta(3,1)"}};
  std::vector<std::vector<CycloNumber>> m;
  for (const auto& row : rows) {
    std::vector<CycloNumber> r;
    for (const auto& x : row) r.push_back(parse_scalar(x));
    m.push_back(std::move(r));
  }
  return {{"h", "e1", "e2", "e3", "e4"}, {"H", "E1", "E2", "E3", "E4"}, ExactMatrix::from_rows(m)};
}

void toric_cohomology(benchmark::State& state, Weights w) {
  for (auto _ : state) benchmark::DoNotOptimize(ToricCohomology::builtin(w));
}
BENCHMARK_CAPTURE(toric_cohomology, p1122, Weights{1, 1, 2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(toric_cohomology, p1344, Weights{1, 3, 4, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(toric_cohomology, p11116, Weights::ones_then(6))->Unit(benchmark::kMillisecond);

void chen_ruan_ring(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cr_algebra(Weights{1, 3, 4, 4}));
}
BENCHMARK(chen_ruan_ring)->Unit(benchmark::kMillisecond);

void quantum_evaluation(benchmark::State& state) {
  const QuantumCohomology qc(ToricCohomology::builtin(Weights{1, 3, 4, 4}));
  const auto q = QEvaluation::parse("i,i,i,0");
  for (auto _ : state) benchmark::DoNotOptimize(qc.evaluate(q));
}
BENCHMARK(quantum_evaluation)->Unit(benchmark::kMillisecond);

void isomorphism_check(benchmark::State& state) {
  const QuantumCohomology qc(ToricCohomology::builtin(Weights{1, 3, 4, 4}));
  const auto z = qc.evaluate(QEvaluation::parse("i,i,i,0"));
  const auto cr = cr_algebra(Weights{1, 3, 4, 4});
  const auto g = p1344_map();
  for (auto _ : state) {
    const auto m = extend_map(z, cr.algebra, g);
    benchmark::DoNotOptimize(verify_iso(z, cr.algebra, m));
  }
}
BENCHMARK(isomorphism_check)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
