#include <benchmark/benchmark.h>

#include <random>

#include "qdsd/dsd.hpp"
#include "qdsd/dynamics.hpp"
#include "qdsd/linalg.hpp"
#include "qdsd/measures.hpp"
#include "qdsd/states.hpp"

namespace {

qdsd::ComplexMatrix make_hermitian(unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    qdsd::ComplexMatrix g(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) g(i, j) = qdsd::Complex(gauss(rng), gauss(rng));
    qdsd::ComplexMatrix h(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

void BM_HermitianEigenvalues9(benchmark::State& state) {
    const qdsd::ComplexMatrix h = make_hermitian(42);
    for (auto _ : state) benchmark::DoNotOptimize(qdsd::hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues9);

void BM_PropagateClosedForm(benchmark::State& state) {
    const auto rho0 = qdsd::horodecki_state(4.2);
    const auto params = qdsd::DecayParams::from_ratio(0.5);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(qdsd::propagate_closed_form(rho0, t, params));
    }
}
BENCHMARK(BM_PropagateClosedForm);

void BM_CriteriaSample(benchmark::State& state) {
    const auto rho = qdsd::horodecki_state(4.2);
    for (auto _ : state) benchmark::DoNotOptimize(qdsd::criteria_sample(rho));
}
BENCHMARK(BM_CriteriaSample);

void BM_IntegrateMasterEquation(benchmark::State& state) {
    const auto rho0 = qdsd::horodecki_state(4.2);
    const auto spec = qdsd::two_atom_amplitude_damping_dissipator(qdsd::DecayParams::from_ratio(0.5));
    for (auto _ : state)
        benchmark::DoNotOptimize(qdsd::integrate_master_equation(rho0, spec, 0.05, 1e-4));
}
BENCHMARK(BM_IntegrateMasterEquation);

void BM_ClassifyTrajectory(benchmark::State& state) {
    const auto rho0 = qdsd::horodecki_state(4.2);
    const auto params = qdsd::DecayParams::from_ratio(0.5);
    qdsd::ScanOptions options;
    options.scan_points = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(qdsd::classify_trajectory(rho0, params, 20.0, options));
}
BENCHMARK(BM_ClassifyTrajectory)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
