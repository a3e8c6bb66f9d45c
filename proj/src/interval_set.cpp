#include "rss/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rss {

namespace {

void check_interval(const Interval& iv) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
        throw std::invalid_argument("interval endpoint is not finite");
    }
    if (!(iv.lo < iv.hi)) {
        throw std::invalid_argument("interval requires lo < hi");
    }
}

// Appends iv to a canonical list under the merge rule prev.hi >= next.lo.
// Caller must append in sorted-by-lo order.
void push_merged(std::vector<Interval>& out, Interval iv) {
    if (!out.empty() && out.back().hi >= iv.lo) {
        out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
        out.push_back(iv);
    }
}

}  // namespace

IntervalSet IntervalSet::normalized(std::vector<Interval> raw) {
    for (const auto& iv : raw) {
        check_interval(iv);
    }
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet result;
    result.intervals_.reserve(raw.size());
    for (const auto& iv : raw) {
        push_merged(result.intervals_, iv);
    }
    return result;
}

IntervalSet normalize(std::vector<Interval> raw) {
    return IntervalSet::normalized(std::move(raw));
}

double IntervalSet::measure() const {
    double total = 0.0;
    for (const auto& iv : intervals_) {
        total += iv.hi - iv.lo;
    }
    return total;
}

bool IntervalSet::contains(double z) const {
    auto it = std::upper_bound(
        intervals_.begin(), intervals_.end(), z,
        [](double value, const Interval& iv) { return value < iv.hi; });
    return it != intervals_.end() && it->lo < z && z < it->hi;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    IntervalSet result;
    result.intervals_.reserve(a.size() + b.size());
    auto ia = a.intervals_.begin();
    auto ib = b.intervals_.begin();
    while (ia != a.intervals_.end() && ib != b.intervals_.end()) {
        if (ia->lo <= ib->lo) {
            push_merged(result.intervals_, *ia++);
        } else {
            push_merged(result.intervals_, *ib++);
        }
    }
    for (; ia != a.intervals_.end(); ++ia) push_merged(result.intervals_, *ia);
    for (; ib != b.intervals_.end(); ++ib) push_merged(result.intervals_, *ib);
    return result;
}

IntervalSet unite_translated(const IntervalSet& a, double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("translation offset is not finite");
    }
    IntervalSet result;
    result.intervals_.reserve(2 * a.size());
    auto ia = a.intervals_.begin();
    auto ib = a.intervals_.begin();
    const auto end = a.intervals_.end();
    while (ia != end && ib != end) {
        Interval shifted{ib->lo + x, ib->hi + x};
        if (ia->lo <= shifted.lo) {
            push_merged(result.intervals_, *ia++);
        } else if (shifted.lo < shifted.hi) {
            push_merged(result.intervals_, shifted);
            ++ib;
        } else {
            ++ib;  // interval collapsed by rounding
        }
    }
    for (; ia != end; ++ia) push_merged(result.intervals_, *ia);
    for (; ib != end; ++ib) {
        Interval shifted{ib->lo + x, ib->hi + x};
        if (shifted.lo < shifted.hi) push_merged(result.intervals_, shifted);
    }
    return result;
}

IntervalSet translate(const IntervalSet& a, double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("translation offset is not finite");
    }
    IntervalSet result;
    result.intervals_.reserve(a.size());
    for (const auto& iv : a) {
        Interval shifted{iv.lo + x, iv.hi + x};
        // Rounding can collapse an interval or close a gap; re-merge.
        if (shifted.lo < shifted.hi) {
            push_merged(result.intervals_, shifted);
        }
    }
    return result;
}

IntervalSet clip(const IntervalSet& a, double lo, double hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("clip window requires lo < hi");
    }
    IntervalSet result;
    for (const auto& iv : a) {
        if (iv.hi <= lo) continue;
        if (iv.lo >= hi) break;
        double cut_lo = std::max(iv.lo, lo);
        double cut_hi = std::min(iv.hi, hi);
        if (cut_lo < cut_hi) {
            result.intervals_.push_back({cut_lo, cut_hi});
        }
    }
    return result;
}

IntervalSet dilate(const IntervalSet& a, double r) {
    if (r < 0.0 || !std::isfinite(r)) {
        throw std::invalid_argument("dilation radius must be >= 0");
    }
    if (r == 0.0) return a;
    std::vector<Interval> grown;
    grown.reserve(a.size());
    for (const auto& iv : a) {
        grown.push_back({iv.lo - r, iv.hi + r});
    }
    return IntervalSet::normalized(std::move(grown));
}

double measure(const IntervalSet& a) { return a.measure(); }

double measure_within(const IntervalSet& a, double lo, double hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("window requires lo < hi");
    }
    double total = 0.0;
    for (const auto& iv : a) {
        if (iv.hi <= lo) continue;
        if (iv.lo >= hi) break;
        total += std::min(iv.hi, hi) - std::max(iv.lo, lo);
    }
    return total;
}

bool contains(const IntervalSet& a, double z) { return a.contains(z); }

bool covers(const IntervalSet& a, double lo, double hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("covers window requires lo < hi");
    }
    IntervalSet clipped = clip(a, lo, hi);
    return clipped.size() == 1 &&
           clipped.measure() >= (hi - lo) - kCoverSlack;
}

}  // namespace rss
