// Frontier expansion: serial reference against the OpenMP kernel.

#include <benchmark/benchmark.h>

#include <limits>
#include <map>

#include "wpl/frontier.hpp"
#include "wpl/tilting.hpp"

using namespace wpl;

namespace {

const WeightType& weight_type(int id) {
    static const std::vector<WeightType> ws = {WeightType({2, 3}), WeightType({2, 3, 5}), WeightType({2, 2, 2, 2})};
    return ws.at(static_cast<std::size_t>(id));
}

struct Fixture {
    EulerLattice lat;
    std::vector<ExcSeq> frontier;
    std::vector<int> letters;
};

/// `target` orbit sequences of kappa, taken from the first BFS levels.
const Fixture& fixture(int id, std::size_t target) {
    static std::map<std::pair<int, std::size_t>, Fixture> cache;
    auto it = cache.find({id, target});
    if (it != cache.end()) return it->second;
    EulerLattice lat(weight_type(id));
    const ExcSeq root = canonical_sequence(lat);
    OrbitBfs bfs(lat, root, generator_letters(root.size()));
    // levels stop growing on some weight types, so pool several of them
    std::vector<ExcSeq> f = bfs.frontier();
    while (f.size() < target && !bfs.exhausted()) {
        bfs.step(std::numeric_limits<std::size_t>::max());
        f.insert(f.end(), bfs.frontier().begin(), bfs.frontier().end());
    }
    if (f.size() > target) f.resize(target);
    Fixture fx{std::move(lat), std::move(f), generator_letters(root.size())};
    return cache.emplace(std::make_pair(id, target), std::move(fx)).first->second;
}

KeyFunction exact_key() {
    return [](const ExcSeq& s) { return seq_fingerprint(s); };
}

void BM_ExpandSerial(benchmark::State& state) {
    const Fixture& fx = fixture(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const KeyFunction key = exact_key();
    for (auto _ : state) benchmark::DoNotOptimize(expand_frontier_serial(fx.lat, fx.frontier, fx.letters, key));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.frontier.size() * fx.letters.size()));
}

void BM_ExpandParallel(benchmark::State& state) {
    const Fixture& fx = fixture(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const KeyFunction key = exact_key();
    const int threads = static_cast<int>(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(expand_frontier_parallel(fx.lat, fx.frontier, fx.letters, key, threads));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.frontier.size() * fx.letters.size()));
}

// the twist-quotient key of the sgd search costs sum (p_i) fingerprints per node
void BM_ExpandTwistKey(benchmark::State& state) {
    const Fixture& fx = fixture(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const EulerLattice& lat = fx.lat;
    const KeyFunction key = [&lat](const ExcSeq& s) { return twist_canonical_key(lat, s); };
    const int threads = static_cast<int>(state.range(2));
    for (auto _ : state) {
        if (threads == 1)
            benchmark::DoNotOptimize(expand_frontier_serial(lat, fx.frontier, fx.letters, key));
        else
            benchmark::DoNotOptimize(expand_frontier_parallel(lat, fx.frontier, fx.letters, key, threads));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.frontier.size() * fx.letters.size()));
}

void BM_OrbitBfs(benchmark::State& state) {
    const EulerLattice lat(weight_type(static_cast<int>(state.range(0))));
    const ExcSeq root = canonical_sequence(lat);
    const int threads = static_cast<int>(state.range(1));
    const std::size_t limit = 20000;
    for (auto _ : state) {
        OrbitBfs bfs(lat, root, generator_letters(root.size()), {},
                     threads == 1 ? ExpandMode::Serial : ExpandMode::Parallel, threads);
        while (bfs.size() < limit && !bfs.exhausted()) bfs.step(limit);
        benchmark::DoNotOptimize(bfs.size());
    }
}

} // namespace

BENCHMARK(BM_ExpandSerial)->ArgsProduct({{0, 1, 2}, {1000, 8000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandParallel)->ArgsProduct({{0, 1, 2}, {1000, 8000}, {2, 4}})->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_ExpandTwistKey)->ArgsProduct({{0, 1}, {200}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OrbitBfs)->ArgsProduct({{0, 1}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
