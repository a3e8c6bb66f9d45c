#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rss/interval_set.hpp"

namespace rss {

struct ProcessParams {
    double epsilon = 0.1;  // approximation error, in (0, 1/3)
    int horizon = 0;       // number of variables to reveal
    // Snapshots A_0..A_t are retained by default and enable subset
    // reconstruction; dropping them is the low-memory mode.
    bool keep_snapshots = true;
};

// State of the approximation process: at time t, approx_set() is the set of
// values within epsilon of some subset sum of the samples revealed so far.
// A_0 = (-eps, eps); each revealed sample x replaces A with A ∪ (A + x).
// Single-owner mutable during a run; copyable for harvesting fixed states.
class ProcessState {
public:
    // Throws std::invalid_argument unless epsilon ∈ (0, 1/3) and horizon >= 0.
    explicit ProcessState(const ProcessParams& params);

    // Reveal one sample. Throws on non-finite x. x = ±1 is allowed.
    void step(double x);

    // Fraction of [-1, 1] currently approximable: measure(A ∩ (-1,1)) / 2.
    double volume() const;

    // One-step-ahead volume counting only translated mass whose
    // pre-translation value lies in (-1, 1):
    //   measure(clip(A ∪ translate(clip(A,-1,1), x), -1, 1)) / 2.
    // Satisfies clipped_next_volume(x) <= volume-after-step(x) and <= 2*volume().
    double clipped_next_volume(double x) const;

    // [-1, 1] fully approximable within epsilon.
    bool eps_covered() const;

    // [-1, 1] fully approximable within 2*epsilon, i.e. the epsilon-dilation
    // of A covers (-1, 1). Implied by volume() >= 1 - epsilon/2.
    bool two_eps_covered() const;

    int time() const { return t_; }
    double epsilon() const { return epsilon_; }
    const IntervalSet& approx_set() const { return approx_; }
    const std::vector<double>& samples() const { return samples_; }
    bool keeps_snapshots() const { return keep_snapshots_; }

    // A_0..A_t; empty when snapshots are disabled.
    const std::vector<IntervalSet>& snapshots() const { return snapshots_; }

private:
    double epsilon_;
    bool keep_snapshots_;
    int t_ = 0;
    IntervalSet approx_;
    std::vector<double> samples_;
    std::vector<IntervalSet> snapshots_;
};

struct VolumeTrace {
    std::vector<double> values;  // v_0..v_t, non-decreasing, each in [0, 1]
};

// tau1: first t with v_t > 1/2 (strict).
// tau2: first s >= 0 with 1 - v_{tau1+s} <= eps/2 (non-strict).
// tau = tau1 + tau2. Each is empty if its defining event did not occur
// within the horizon; censored is true iff tau is empty.
struct StoppingTimes {
    std::optional<int> tau1;
    std::optional<int> tau2;
    std::optional<int> tau;
    bool censored = true;
};

StoppingTimes stopping_times_from_trace(const VolumeTrace& trace, double epsilon);

struct RunResult {
    VolumeTrace trace;
    StoppingTimes times;
    ProcessState state;
    std::size_t max_interval_count = 0;  // over all A_0..A_n
};

// Applies horizon steps drawing from `draw`, recording v_0..v_n.
RunResult run(const ProcessParams& params, const std::function<double()>& draw);

// Same with a fixed sample list; throws if fewer than horizon samples.
RunResult run(const ProcessParams& params, std::span<const double> samples);

}  // namespace rss
