#include "dihedral/morphisms.hpp"
#include "dihedral/presentations.hpp"

#include <benchmark/benchmark.h>

using namespace dihedral;

namespace {

GenSet reflection_pair(int n) {
    const Group g = Group::dihedral(n);
    return GenSet::validate(g, {Element{0, true}, Element{1, true}});
}

GenSet reflection_triple(int n) {
    const Group g = Group::dihedral(n);
    return GenSet::validate(g, {Element{0, true}, Element{1, true}, Element{3 % n, true}});
}

void BM_ComputeLengths(benchmark::State& state) {
    const GenSet s = reflection_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        LengthTable t = compute_lengths(s);
        benchmark::DoNotOptimize(t.max_length());
    }
    state.SetItemsProcessed(state.iterations() * s.group().order());
}
BENCHMARK(BM_ComputeLengths)->RangeMultiplier(4)->Range(8, 2048);

void BM_LambdaReport(benchmark::State& state) {
    const GenSet s = reflection_triple(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        LambdaReport r = lambda_report(s);
        benchmark::DoNotOptimize(r.lambda1);
    }
    state.SetItemsProcessed(state.iterations() * s.group().order());
}
BENCHMARK(BM_LambdaReport)->RangeMultiplier(4)->Range(8, 512);

void BM_Classify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Group g = Group::dihedral(n);
    const GenSet s = GenSet::validate(
        g, {Element{0, true}, Element{3 % n, true}, Element{5 % n, true}});
    for (auto _ : state) {
        PresentationClass cls = classify(s);
        benchmark::DoNotOptimize(cls.family);
    }
}
BENCHMARK(BM_Classify)->Arg(30)->Arg(120)->Arg(510);

void BM_VerifyCard2(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto records = verify_family({3, n_max, FamilyFilter::Card2, 1});
        benchmark::DoNotOptimize(records.size());
    }
}
BENCHMARK(BM_VerifyCard2)->Arg(16)->Arg(32)->Arg(64);

void BM_Conjecture1Sweep(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SweepReport report = sweep_conjecture1(n_max, 1);
        benchmark::DoNotOptimize(report.total_checked);
    }
}
BENCHMARK(BM_Conjecture1Sweep)->Arg(12)->Arg(24)->Arg(48);

void BM_FindAutomorphism(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Group g = Group::dihedral(n);
    const GenSet s1 = GenSet::validate(g, {Element{0, true}, Element{1, true}});
    const GenSet s2 = GenSet::validate(g, {Element{0, true}, Element{n - 1, true}});
    for (auto _ : state) {
        auto table = find_relation_preserving_map(s1, s2);
        benchmark::DoNotOptimize(table.has_value());
    }
}
BENCHMARK(BM_FindAutomorphism)->RangeMultiplier(4)->Range(8, 512);

} // namespace

BENCHMARK_MAIN();
