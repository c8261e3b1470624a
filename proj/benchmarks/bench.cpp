#include "tbw/io.hpp"

#include <benchmark/benchmark.h>

using namespace tbw;

namespace {

Polytope simplex3() {
    return Polytope::from_lattice_points(
        3, {{Int(0), Int(0), Int(0)}, {Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}});
}

MdpInput flop_input() {
    MdpInput m;
    m.p_minus = Polytope::from_lattice_points(3, {{Int(0), Int(-1), Int(-1)},
                                                  {Int(0), Int(1), Int(-1)},
                                                  {Int(2), Int(3), Int(1)},
                                                  {Int(-2), Int(3), Int(1)},
                                                  {Int(2), Int(-3), Int(1)},
                                                  {Int(-2), Int(-3), Int(1)}});
    auto ray = [](long a, long b, long c) { return IVec{Int(a), Int(b), Int(c)}; };
    m.plus_coeffs = {{ray(0, 0, -1), Int(1)},
                     {ray(1, 0, 1), Int(2)},
                     {ray(0, 1, 1), Int(1)},
                     {ray(-1, 0, 1), Int(2)},
                     {ray(0, -1, 1), Int(1)}};
    return m;
}

void BM_hull_canonicalize(benchmark::State& state) {
    auto pts = lattice_points(simplex3().dilate(Rat(state.range(0))));
    std::vector<QVec> qpts;
    for (const auto& p : pts) qpts.push_back(to_qvec(p));
    for (auto _ : state) {
        auto poly = Polytope::from_points(3, qpts);
        benchmark::DoNotOptimize(poly);
    }
}
BENCHMARK(BM_hull_canonicalize)->Arg(2)->Arg(4)->Arg(8);

void BM_lattice_points(benchmark::State& state) {
    Polytope p = simplex3().dilate(Rat(state.range(0)));
    for (auto _ : state) {
        auto pts = lattice_points(p);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_lattice_points)->Arg(4)->Arg(8)->Arg(16);

void BM_hilbert_basis(benchmark::State& state) {
    Cone c = cone_over(Polytope::from_points(1, {{Rat(1, 2)}, {Rat(3, 2)}}));
    for (auto _ : state) {
        auto basis = hilbert_basis(c);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_hilbert_basis);

void BM_quotient_model(benchmark::State& state) {
    IVec v{Int(0), Int(1), Int(1)};
    auto an = analyze_action(simplex3(), v);
    for (auto _ : state) {
        auto model = quotient_model(an, 0);
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_quotient_model);

void BM_prune_and_verify(benchmark::State& state) {
    IVec v{Int(0), Int(1), Int(1)};
    for (auto _ : state) {
        auto pr = prune(simplex3(), v, Rat(1, 4), Rat(3, 4));
        auto rep = verify_pruning_theorem(simplex3(), v, pr);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_prune_and_verify);

void BM_realize_flop(benchmark::State& state) {
    MdpInput input = flop_input();
    for (auto _ : state) {
        auto rb = realize(input, 1, 1);
        benchmark::DoNotOptimize(rb);
    }
}
BENCHMARK(BM_realize_flop);

void BM_flop_chain(benchmark::State& state) {
    auto rb = realize(flop_input(), 1, 1);
    auto an = analyze_action(rb.q, rb.v);
    for (auto _ : state) {
        auto chain = quotient_chain(an);
        benchmark::DoNotOptimize(chain);
    }
}
BENCHMARK(BM_flop_chain);

} // namespace

BENCHMARK_MAIN();
