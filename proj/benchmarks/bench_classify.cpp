#include <random>

#include <benchmark/benchmark.h>

#include "spaceforms/spaceforms.hpp"

namespace {

using namespace spaceforms;

// A fixed generic element: normal form of the last class, conjugated by a
// random orthogonal matrix in the spatial block.
Matrix sample(Space space, int n) {
    const auto syms = enumerate_symbols(space, n);
    Matrix m = representative(syms.back()).matrix();
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    const int k = space == Space::Spherical ? n + 1 : n;
    const int off = space == Space::Hyperbolic ? 1 : 0;
    Matrix a(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a(i, j) = g(rng);
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = Matrix::Identity(n + 1, n + 1);
    q.block(off, off, k, k) = qr.householderQ();
    return q * m * q.transpose();
}

void BM_Classify(benchmark::State& state, Space space) {
    const int n = static_cast<int>(state.range(0));
    const Matrix m = sample(space, n);
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(m, space));
}
BENCHMARK_CAPTURE(BM_Classify, spherical, Space::Spherical)->DenseRange(2, 8, 2);
BENCHMARK_CAPTURE(BM_Classify, euclidean, Space::Euclidean)->DenseRange(2, 8, 2);
BENCHMARK_CAPTURE(BM_Classify, hyperbolic, Space::Hyperbolic)->DenseRange(2, 8, 2);

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_symbols(Space::Hyperbolic, n));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 12, 4);

void BM_Tables(benchmark::State& state) {
    for (auto _ : state) {
        for (Space s : {Space::Spherical, Space::Euclidean, Space::Hyperbolic})
            for (int n = 1; n <= 3; ++n)
                for (const auto& sym : enumerate_symbols(s, n))
                    for (int k = 0; k < n; ++k) benchmark::DoNotOptimize(invariant_variety(sym, k));
    }
}
BENCHMARK(BM_Tables);

} // namespace

BENCHMARK_MAIN();
