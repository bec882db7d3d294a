// Serial reference against the OpenMP sweeps on the main verification kernels.

#include "altkron/constructions.hpp"
#include "altkron/coordinatizer.hpp"
#include "altkron/fixtures.hpp"
#include "altkron/identities.hpp"
#include "altkron/plucker.hpp"
#include "altkron/specgen.hpp"

#include <benchmark/benchmark.h>

using namespace altkron;

namespace {

const Field Q = Field::rational();

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

const AlgebraTable& dual_octonions() {
    static const AlgebraTable a = octonion(CoeffRing(truncated_poly(Q, 2))).table;
    return a;
}

const BuiltAlgebra& built_fixture() {
    static const BuiltAlgebra b = [] {
        Rng rng = Rng::derive(42, 3);
        return build_algebra(random_spec(Q, rng, SpecShape{3, 3}));
    }();
    return b;
}

void BM_check_alternative(benchmark::State& state) {
    const AlgebraTable& a = dual_octonions();
    for (auto _ : state) benchmark::DoNotOptimize(check_alternative(a, exec_of(state)).pass);
}

void BM_identity_sweep(benchmark::State& state) {
    const AlgebraTable o = octonion(CoeffRing(ground_algebra(Q))).table;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            check_identity(o, Identity::commutator_associator, IdentityMode::basis(), exec_of(state)).pass);
}

void BM_build_algebra(benchmark::State& state) {
    Rng rng = Rng::derive(42, 3);
    const KronSpec spec = random_spec(Q, rng, SpecShape{3, 3});
    for (auto _ : state) benchmark::DoNotOptimize(build_algebra(spec, false, exec_of(state)).table.dim());
}

void BM_coordinatize(benchmark::State& state) {
    const BuiltAlgebra& b = built_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(coordinatize(b.table, b.units, exec_of(state)).pass());
}

void BM_plucker(benchmark::State& state) {
    const PolyFamily fam = grassmann_alphas(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_plucker(fam, PluckerConvention::determinant, exec_of(state)).pass);
}

}  // namespace

// Argument 0 runs the serial reference, 1 the parallel kernel.
BENCHMARK(BM_check_alternative)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identity_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_algebra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coordinatize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_plucker)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
