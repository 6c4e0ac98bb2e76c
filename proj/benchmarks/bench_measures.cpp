#include <benchmark/benchmark.h>

#include "imkit/gates.hpp"
#include "imkit/measures.hpp"

namespace {

void BM_SchattenTraceNorm4x4(benchmark::State& state) {
    imkit::KrausOperation op = imkit::random_channel(4, 4, 3, 17);
    const imkit::Matrix& j = op.choi().mat();
    for (auto _ : state)
        benchmark::DoNotOptimize(imkit::schatten_norm(j, 1.0));
}
BENCHMARK(BM_SchattenTraceNorm4x4);

void BM_ChoiFromKraus(benchmark::State& state) {
    int dim = int(state.range(0));
    imkit::KrausOperation op = imkit::random_channel(dim, dim, dim, 3);
    std::vector<imkit::Matrix> kraus = op.kraus();
    for (auto _ : state) {
        imkit::KrausOperation rebuilt(dim, dim, kraus);
        benchmark::DoNotOptimize(rebuilt.choi().mat().sum());
    }
}
BENCHMARK(BM_ChoiFromKraus)->Arg(2)->Arg(3)->Arg(4);

void BM_MdcQubitUnitary(benchmark::State& state) {
    imkit::KrausOperation op = imkit::conjugation(imkit::gates::s_gate());
    imkit::OptimizerConfig cfg;
    cfg.restarts = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(imkit::m_dc(op, 1.0, cfg).value);
}
BENCHMARK(BM_MdcQubitUnitary)->Arg(4)->Arg(24);

void BM_WeightMixture(benchmark::State& state) {
    imkit::KrausOperation op =
        imkit::mix({imkit::conjugation(imkit::gates::identity2()),
                    imkit::conjugation(imkit::gates::s_gate())},
                   {0.7, 0.3});
    for (auto _ : state)
        benchmark::DoNotOptimize(imkit::weight_of_imaginarity(op).first);
}
BENCHMARK(BM_WeightMixture);

}  // namespace

BENCHMARK_MAIN();
