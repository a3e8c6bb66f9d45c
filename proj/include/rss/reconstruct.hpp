#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "rss/interval_set.hpp"

namespace rss {

// Explicit witness subset: sum over `indices` (1-based, ascending) of the
// stored samples lands within `error` of the queried target.
struct SubsetSolution {
    std::vector<int> indices;
    double achieved_sum = 0.0;
    double error = 0.0;
};

// Per-step subtraction slack allowed during the backward walk.
inline double reconstruction_slack(std::size_t n) { return 1e-9 * static_cast<double>(n); }

struct NotApproximableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Residual at the end of the walk exceeded epsilon + slack; signals a
// float-consistency bug between snapshots and samples.
struct ReconstructionDriftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Backward walk over snapshots A_0..A_n: at each t = n..1, the target stays
// put if A_{t-1} already contains it (index t excluded), otherwise index t is
// included and the target shifts by -samples[t-1]. Exclusion is preferred, so
// the returned witness is deterministic.
// Requires snapshots.size() == samples.size() + 1 and contains(A_n, z).
SubsetSolution reconstruct(const std::vector<IntervalSet>& snapshots,
                           std::span<const double> samples, double z,
                           double epsilon);

// Exhaustive 2^n search for the subset minimizing |z - sum|; ties broken by
// lexicographically smallest index set. Throws if n > 25.
SubsetSolution brute_force_best(std::span<const double> samples, double z);

struct GridDpParams {
    double resolution;  // grid cell width, must be <= epsilon/4
    double range;       // tracked sums span [-range, range], range >= n
};

// Baseline grid dynamic program: dense boolean array over cells of width
// `resolution`, center-of-cell semantics. A_0 marks the cell containing 0;
// each sample shifts the marked set by round(x/resolution) cells and ORs.
// Returns true iff some marked cell center lies within epsilon of z.
// Cell rounding drifts by at most n*resolution/2, so agreement with the
// exact interval tracking is only guaranteed for z at least
// n*resolution/2 + resolution away from every epsilon-ball boundary.
bool grid_dp_approximable(std::span<const double> samples, double z,
                          double epsilon, const GridDpParams& params);

}  // namespace rss
