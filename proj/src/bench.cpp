#include "arrayprop/bench.hpp"

#include "arrayprop/solver.hpp"

#include <algorithm>
#include <chrono>

namespace arrayprop {

double median(std::vector<double> values)
{
    if (values.empty())
        return 0;
    std::sort(values.begin(), values.end());
    auto mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

namespace {

std::pair<PropagationStats, std::size_t> execute(const Model& model, EngineKind engine, Workload workload)
{
    if (workload == Workload::propagate) {
        EngineOptions opts;
        opts.kind = engine;
        auto r = propagate(model, opts);
        return {r.stats, r.failed ? 0 : 1};
    }
    SearchOptions opts;
    opts.engine = engine;
    opts.solution_limit = workload == Workload::solve_first ? 1 : 0;
    auto r = solve(model, opts);
    return {r.stats, r.solutions.size()};
}

} // namespace

std::vector<BenchResult> run_benchmark(const Model& model, std::size_t repeats, Workload workload,
                                       const std::vector<EngineKind>& engines)
{
    std::vector<BenchResult> results;
    for (auto engine : engines) {
        BenchResult r;
        r.engine = engine;
        std::tie(r.stats, r.solutions) = execute(model, engine, workload);
        results.push_back(std::move(r));
    }
    using clock = std::chrono::steady_clock;
    for (std::size_t i = 0; i < repeats; ++i) {
        for (auto& r : results) {
            auto start = clock::now();
            execute(model, r.engine, workload);
            auto stop = clock::now();
            r.times_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
    }
    for (auto& r : results)
        r.median_ms = median(r.times_ms);
    return results;
}

} // namespace arrayprop
