// Serial reference vs OpenMP kernels on desk-scale inputs.
#include "fixtures.hpp"
#include "hopforbit/cbf.hpp"

#include <benchmark/benchmark.h>

using namespace hopforbit;

namespace {

Matrix dense(const FieldDescriptor& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = Scalar(f, static_cast<long>((i * 7 + j * j * 3 + 1) % 11) - 5);
    return m;
}

void BM_rref(benchmark::State& st) {
    set_parallel_kernels(st.range(1) != 0);
    auto m = dense(make_field(0, 1), static_cast<size_t>(st.range(0)));
    for (auto _ : st) {
        Matrix c = m;
        benchmark::DoNotOptimize(rref(c));
    }
    set_parallel_kernels(false);
}
BENCHMARK(BM_rref)->Args({24, 0})->Args({24, 1})->Args({48, 0})->Args({48, 1});

void BM_hopf_axioms(benchmark::State& st) {
    set_parallel_kernels(st.range(0) != 0);
    auto k = make_field(0, 4);
    auto h = taft_fd(4, Scalar::zeta(k));
    for (auto _ : st) benchmark::DoNotOptimize(verify_hopf_axioms(h).pass);
    set_parallel_kernels(false);
}
BENCHMARK(BM_hopf_axioms)->Arg(0)->Arg(1);

void BM_groebner_cyclic3(benchmark::State& st) {
    PolyRing R(make_field(0, 1), {"a", "b", "c"});
    std::vector<Poly> g{parse_poly(R, "a+b+c"), parse_poly(R, "a*b+b*c+c*a"), parse_poly(R, "a*b*c-1")};
    for (auto _ : st) benchmark::DoNotOptimize(groebner_basis(R, g));
}
BENCHMARK(BM_groebner_cyclic3);

void BM_orbits(benchmark::State& st) {
    set_parallel_kernels(st.range(0) != 0);
    auto spec = fixtures::permutation_action(make_field(0, 1));
    const PolyRing& R = spec.ring();
    std::vector<Point> pts{fixtures::point(R, {1, 2, 3}), fixtures::point(R, {0, 0, 1}), fixtures::point(R, {2, 2, 2}),
                           fixtures::point(R, {-1, 1, 0})};
    for (auto _ : st) benchmark::DoNotOptimize(orbits(spec, pts));
    set_parallel_kernels(false);
}
BENCHMARK(BM_orbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_dihedral_simples(benchmark::State& st) {
    auto p = CleftPresentation::build(dihedral_data());
    auto m = fixtures::point(p.ring(), {5});
    for (auto _ : st) benchmark::DoNotOptimize(simple_dims_at(p, m));
}
BENCHMARK(BM_dihedral_simples)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
