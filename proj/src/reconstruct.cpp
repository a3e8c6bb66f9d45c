#include "rss/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace rss {

SubsetSolution reconstruct(const std::vector<IntervalSet>& snapshots,
                           std::span<const double> samples, double z,
                           double epsilon) {
    const std::size_t n = samples.size();
    if (snapshots.size() != n + 1) {
        throw std::invalid_argument("need snapshots A_0..A_n for n samples");
    }
    if (!snapshots[n].contains(z)) {
        throw NotApproximableError("not approximable: z outside A_n");
    }
    SubsetSolution solution;
    double residual = z;
    for (std::size_t t = n; t >= 1; --t) {
        if (!snapshots[t - 1].contains(residual)) {
            solution.indices.push_back(static_cast<int>(t));
            residual -= samples[t - 1];
        }
    }
    if (std::abs(residual) >= epsilon + reconstruction_slack(n)) {
        throw ReconstructionDriftError(
            "reconstruction drift: residual " + std::to_string(residual) +
            " exceeds epsilon + slack");
    }
    std::reverse(solution.indices.begin(), solution.indices.end());
    double sum = 0.0;
    for (int index : solution.indices) {
        sum += samples[index - 1];
    }
    solution.achieved_sum = sum;
    solution.error = std::abs(z - sum);
    return solution;
}

namespace {

struct BruteSearch {
    std::span<const double> samples;
    double target;
    std::vector<int> current;
    std::vector<int> best;
    double best_sum = 0.0;
    double best_error;

    explicit BruteSearch(std::span<const double> xs, double z)
        : samples(xs), target(z), best_error(std::abs(z)) {}

    // Visits index sets in lexicographic order (prefix-first DFS); strict
    // improvement therefore keeps the lexicographically smallest tie.
    void visit(std::size_t next, double sum) {
        for (std::size_t i = next; i < samples.size(); ++i) {
            current.push_back(static_cast<int>(i + 1));
            double with = sum + samples[i];
            double err = std::abs(target - with);
            if (err < best_error) {
                best_error = err;
                best_sum = with;
                best = current;
            }
            visit(i + 1, with);
            current.pop_back();
        }
    }
};

}  // namespace

SubsetSolution brute_force_best(std::span<const double> samples, double z) {
    if (samples.size() > 25) {
        throw std::invalid_argument("brute force limited to n <= 25");
    }
    BruteSearch search(samples, z);
    search.visit(0, 0.0);
    return SubsetSolution{std::move(search.best), search.best_sum,
                          search.best_error};
}

bool grid_dp_approximable(std::span<const double> samples, double z,
                          double epsilon, const GridDpParams& params) {
    if (!(params.resolution > 0.0) || !(params.resolution <= epsilon / 4.0)) {
        throw std::invalid_argument("resolution must lie in (0, epsilon/4]");
    }
    if (!(params.range >= static_cast<double>(samples.size()))) {
        throw std::invalid_argument("range must cover all achievable sums");
    }
    const double res = params.resolution;
    const double range = params.range;
    const auto cells =
        static_cast<std::int64_t>(std::ceil(2.0 * range / res));
    auto cell_of = [&](double value) {
        return static_cast<std::int64_t>(std::floor((value + range) / res));
    };
    auto center_of = [&](std::int64_t j) {
        return -range + (static_cast<double>(j) + 0.5) * res;
    };

    std::vector<char> marked(static_cast<std::size_t>(cells), 0);
    marked[static_cast<std::size_t>(cell_of(0.0))] = 1;

    std::vector<char> next(marked.size());
    for (double x : samples) {
        // Center-of-cell semantics make the shift uniform across cells.
        const auto delta = static_cast<std::int64_t>(std::floor(x / res + 0.5));
        next = marked;
        for (std::int64_t j = 0; j < cells; ++j) {
            if (!marked[static_cast<std::size_t>(j)]) continue;
            std::int64_t k = j + delta;
            if (k >= 0 && k < cells) {
                next[static_cast<std::size_t>(k)] = 1;
            }
        }
        marked.swap(next);
    }

    std::int64_t first = std::max<std::int64_t>(0, cell_of(z - epsilon) - 1);
    std::int64_t last = std::min(cells - 1, cell_of(z + epsilon) + 1);
    for (std::int64_t j = first; j <= last; ++j) {
        if (marked[static_cast<std::size_t>(j)] &&
            std::abs(center_of(j) - z) <= epsilon) {
            return true;
        }
    }
    return false;
}

}  // namespace rss
