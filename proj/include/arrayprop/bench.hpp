#ifndef ARRAYPROP_BENCH_HPP
#define ARRAYPROP_BENCH_HPP

#include "arrayprop/engine.hpp"

#include <vector>

namespace arrayprop {

enum class Workload { propagate, solve_first, solve_all };

struct BenchResult {
    EngineKind engine;
    std::vector<double> times_ms;
    double median_ms = 0;
    // Counters of one repetition; they are identical across repetitions.
    PropagationStats stats;
    std::size_t solutions = 0;
};

/// Runs the workload `repeats` times per engine, alternating engines
/// between repetitions, after one untimed warm-up each.
std::vector<BenchResult> run_benchmark(const Model& model, std::size_t repeats, Workload workload,
                                       const std::vector<EngineKind>& engines = {EngineKind::naive,
                                                                                 EngineKind::arrac});

double median(std::vector<double> values);

} // namespace arrayprop

#endif
