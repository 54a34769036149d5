#include <benchmark/benchmark.h>

#include "zigzag/classify.hpp"
#include "zigzag/dual.hpp"
#include "zigzag/generators.hpp"
#include "zigzag/isomorphism.hpp"
#include "zigzag/surgery.hpp"
#include "zigzag/tables.hpp"

using namespace zigzag;

namespace {

void BM_enumerate_bipyramid(benchmark::State& state) {
    const auto g = bipyramid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_zigzags(g));
}
BENCHMARK(BM_enumerate_bipyramid)->Arg(7)->Arg(15)->Arg(31);

void BM_validate(benchmark::State& state) {
    const auto g = twisted_bipyramid_sum(3, 5);
    for (auto _ : state) benchmark::DoNotOptimize(validate_embedding(g));
}
BENCHMARK(BM_validate);

void BM_dual(benchmark::State& state) {
    const auto g = bipyramid(15);
    for (auto _ : state) benchmark::DoNotOptimize(dual_graph(g));
}
BENCHMARK(BM_dual);

void BM_classify_faces(benchmark::State& state) {
    const auto g = twisted_bipyramid_sum(3, 3);
    const auto zs = enumerate_zigzags(g);
    for (auto _ : state) {
        for (int f = 0; f < g.face_count(); ++f)
            benchmark::DoNotOptimize(classify_face(g, zs, f));
    }
}
BENCHMARK(BM_classify_faces);

void BM_connected_sum(benchmark::State& state) {
    const auto l = bipyramid(7);
    const auto r = bipyramid(9);
    const int lf = l.find_face({"a", "1", "2"});
    const int rf = r.find_face({"a", "1", "2"});
    const auto g = enumerate_identifications(l, lf, r, rf).front();
    for (auto _ : state) benchmark::DoNotOptimize(connected_sum(l, lf, r, rf, g));
}
BENCHMARK(BM_connected_sum);

void BM_audit_pair(benchmark::State& state) {
    const auto l = bipyramid(5);
    const auto r = bipyramid(7);
    const int lf = l.find_face({"a", "1", "2"});
    const int rf = r.find_face({"a", "1", "2"});
    for (auto _ : state) benchmark::DoNotOptimize(theorem1_audit(l, lf, r, rf));
}
BENCHMARK(BM_audit_pair);

void BM_isomorphism(benchmark::State& state) {
    const auto a = dual_graph(cube()).dual;
    const auto b = bipyramid(4);
    for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_isomorphism);

void BM_tables_replay(benchmark::State& state) {
    const auto corpus = build_corpus();
    for (auto _ : state) benchmark::DoNotOptimize(reproduce_tables(corpus));
}
BENCHMARK(BM_tables_replay);

}  // namespace

BENCHMARK_MAIN();
