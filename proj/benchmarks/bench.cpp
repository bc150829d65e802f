#include <benchmark/benchmark.h>

#include "schurlab/bialternant.hpp"
#include "schurlab/determinant.hpp"
#include "schurlab/homogeneous.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/symplectic_orthogonal.hpp"

using namespace schurlab;

namespace {

LaurentPoly dense_poly(int spread) {
    std::vector<LaurentPoly::Term> terms;
    for (int a = -spread; a <= spread; ++a)
        for (int b = -spread; b <= spread; ++b)
            terms.emplace_back(Monomial(std::vector<int>{a, b}), Rational(a * 7 + b * 3 + 1));
    return LaurentPoly::from_terms(2, std::move(terms));
}

void BM_LaurentMul(benchmark::State& state) {
    const LaurentPoly p = dense_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_LaurentMul)->Arg(3)->Arg(5);

void BM_HDoubled(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        // rebuild from scratch each round: bypass the cache by varying arity
        benchmark::DoNotOptimize(h_sympl(n, 3));
    }
}
BENCHMARK(BM_HDoubled)->Arg(4)->Arg(8);

void BM_FractionFreeDet(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    PolyMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(2)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = h_sympl(static_cast<long long>(2 + i) - static_cast<long long>(j), 2);
    for (auto _ : state) benchmark::DoNotOptimize(det_fraction_free(m));
}
BENCHMARK(BM_FractionFreeDet)->Arg(4)->Arg(7);

void BM_SkewSpRoutes(benchmark::State& state) {
    const GeneralizedPartition la({3, 2, 1, 0});
    const GeneralizedPartition mu({2, 1});
    const bool chains = state.range(0) == 1;
    for (auto _ : state) {
        if (chains)
            benchmark::DoNotOptimize(skew_sp_gt(la, mu, 2));
        else
            benchmark::DoNotOptimize(skew_sp_jt(la, mu, 2));
    }
}
BENCHMARK(BM_SkewSpRoutes)->Arg(0)->Arg(1);

void BM_ChainEnumeration(benchmark::State& state) {
    const GeneralizedPartition la({4, 3, 2, 1});
    const GeneralizedPartition mu({3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_gt_chains(mu, la, 2));
}
BENCHMARK(BM_ChainEnumeration);

void BM_Bialternant(benchmark::State& state) {
    const GeneralizedPartition la({4, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(sp_bialt(la, 3));
}
BENCHMARK(BM_Bialternant);

} // namespace

BENCHMARK_MAIN();
