#pragma once

#include "sec/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sec::repro {

enum class Status { Pass, Fail, Skipped };

struct CriterionResult {
    int id = 0;
    std::string title;
    Status status = Status::Fail;
    std::string detail;
    double seconds = 0;
};

/// Independent decision procedure for "g has a 2-SE coloring with
/// `colors` colors", used to cross-check the solver.
using TwoSeOracle = std::function<bool(const Graph & g, int colors)>;

struct Options {
    /// without an oracle the solver cross-check is reported as skipped
    TwoSeOracle oracle;
};

inline constexpr int criterion_count = 11;

/// Wall-clock ceilings, in seconds.
inline constexpr double limit_decide_small = 10;
inline constexpr double limit_k5 = 120;
inline constexpr double limit_petersen = 600;
inline constexpr double limit_spectrum = 300;
inline constexpr double limit_non_three = 300;

/// Seed and size of the random realization sample.
inline constexpr unsigned realization_seed = 20240517;
inline constexpr int realization_samples = 100;

CriterionResult run_criterion(int id, const Options & options);
std::vector<CriterionResult> run_all(const Options & options);

/// "[PASS] 3  title  (0.12 s)  detail"
std::string format(const CriterionResult & r);

} // namespace sec::repro
