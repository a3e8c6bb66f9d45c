#include "rss/process.hpp"

#include <cmath>
#include <stdexcept>

namespace rss {

ProcessState::ProcessState(const ProcessParams& params)
    : epsilon_(params.epsilon), keep_snapshots_(params.keep_snapshots) {
    if (!(params.epsilon > 0.0) || !(params.epsilon < 1.0 / 3.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1/3)");
    }
    if (params.horizon < 0) {
        throw std::invalid_argument("horizon must be >= 0");
    }
    approx_ = normalize({{-epsilon_, epsilon_}});
    if (keep_snapshots_) {
        snapshots_.push_back(approx_);
    }
}

void ProcessState::step(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("sample must be finite");
    }
    approx_ = unite_translated(approx_, x);
    samples_.push_back(x);
    ++t_;
    if (keep_snapshots_) {
        snapshots_.push_back(approx_);
    }
}

double ProcessState::volume() const {
    return measure_within(approx_, -1.0, 1.0) / 2.0;
}

double ProcessState::clipped_next_volume(double x) const {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("sample must be finite");
    }
    IntervalSet inside = clip(approx_, -1.0, 1.0);
    IntervalSet next = unite(approx_, translate(inside, x));
    return measure_within(next, -1.0, 1.0) / 2.0;
}

bool ProcessState::eps_covered() const { return covers(approx_, -1.0, 1.0); }

bool ProcessState::two_eps_covered() const {
    return covers(dilate(approx_, epsilon_), -1.0, 1.0);
}

StoppingTimes stopping_times_from_trace(const VolumeTrace& trace, double epsilon) {
    StoppingTimes times;
    const auto& v = trace.values;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] > 0.5) {
            times.tau1 = static_cast<int>(t);
            break;
        }
    }
    if (times.tau1) {
        for (std::size_t t = static_cast<std::size_t>(*times.tau1); t < v.size(); ++t) {
            if (1.0 - v[t] <= epsilon / 2.0) {
                times.tau2 = static_cast<int>(t) - *times.tau1;
                break;
            }
        }
    }
    if (times.tau1 && times.tau2) {
        times.tau = *times.tau1 + *times.tau2;
    }
    times.censored = !times.tau.has_value();
    return times;
}

RunResult run(const ProcessParams& params, const std::function<double()>& draw) {
    ProcessState state(params);
    VolumeTrace trace;
    trace.values.reserve(static_cast<std::size_t>(params.horizon) + 1);
    trace.values.push_back(state.volume());
    std::size_t max_count = state.approx_set().size();
    for (int t = 0; t < params.horizon; ++t) {
        state.step(draw());
        trace.values.push_back(state.volume());
        max_count = std::max(max_count, state.approx_set().size());
    }
    StoppingTimes times = stopping_times_from_trace(trace, params.epsilon);
    return RunResult{std::move(trace), times, std::move(state), max_count};
}

RunResult run(const ProcessParams& params, std::span<const double> samples) {
    if (samples.size() < static_cast<std::size_t>(params.horizon)) {
        throw std::invalid_argument("sample list shorter than horizon");
    }
    std::size_t next = 0;
    return run(params, std::function<double()>([&samples, &next]() {
                   return samples[next++];
               }));
}

}  // namespace rss
