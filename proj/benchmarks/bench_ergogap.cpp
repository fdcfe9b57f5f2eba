#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "ergogap/bounds.hpp"
#include "ergogap/ergotropy.hpp"
#include "ergogap/gallery.hpp"
#include "ergogap/ladder.hpp"
#include "ergogap/matrix.hpp"
#include "ergogap/rng.hpp"
#include "ergogap/state.hpp"

namespace {

using ergogap::ComplexMatrix;
using ergogap::LadderSpec;

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    ergogap::SplitMix64 rng(seed);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rng.next_gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto v = rng.next_complex_gaussian();
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

void bm_eigenvalues(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_hermitian(n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(ergogap::hermitian_eigenvalues(m));
}
BENCHMARK(bm_eigenvalues)->Arg(8)->Arg(27)->Arg(64);

void bm_partial_trace(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto m = random_hermitian(d * d * d, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ergogap::partial_trace(m, {d, d, d}, ergogap::Subsystem::B));
}
BENCHMARK(bm_partial_trace)->Arg(2)->Arg(3)->Arg(4);

void bm_ergotropic_gap(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = ergogap::random_mixed(d, 4, 13);
    const LadderSpec spec(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(ergogap::ergotropic_gap(rho, spec));
}
BENCHMARK(bm_ergotropic_gap)->Arg(2)->Arg(3)->Arg(4);

void bm_witness(benchmark::State& state) {
    const auto rho = ergogap::ghz_white_noise(0.5);
    const LadderSpec spec(2);
    for (auto _ : state) benchmark::DoNotOptimize(ergogap::witness(rho, spec));
}
BENCHMARK(bm_witness);

void bm_slot_table(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ergogap::SlotTable(d));
}
BENCHMARK(bm_slot_table)->Arg(2)->Arg(4)->Arg(8);

void bm_bound_Z(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = ergogap::random_mixed(d, 4, 17);
    const auto& x = rho.global_spectrum();
    for (auto _ : state) benchmark::DoNotOptimize(ergogap::bound_Z(x, d));
}
BENCHMARK(bm_bound_Z)->Arg(2)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
