#pragma once

#include <cstddef>
#include <vector>

namespace rss {

// Bounded open interval (lo, hi) of the real line. Stored intervals always
// satisfy lo < hi strictly with finite endpoints; empty and point intervals
// are never stored.
struct Interval {
    double lo;
    double hi;

    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

// Canonical finite union of disjoint bounded open intervals, kept strictly
// sorted: consecutive entries satisfy prev.hi < next.lo. Touching intervals
// are merged on construction, so the representation is unique for a given
// point set up to measure-zero endpoint conventions.
//
// Values are immutable after construction; all operations allocate fresh
// results, so sets can be shared freely across threads.
class IntervalSet {
public:
    IntervalSet() = default;

    // Canonicalizes an arbitrary collection of valid intervals.
    // Throws std::invalid_argument if any interval has lo >= hi or a
    // non-finite endpoint.
    static IntervalSet normalized(std::vector<Interval> raw);

    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }
    const std::vector<Interval>& intervals() const { return intervals_; }

    // Total length, additive over the disjoint representation.
    double measure() const;

    // Strict interior membership: endpoints are outside.
    bool contains(double z) const;

    auto begin() const { return intervals_.begin(); }
    auto end() const { return intervals_.end(); }

    bool operator==(const IntervalSet&) const = default;

private:
    friend IntervalSet unite(const IntervalSet&, const IntervalSet&);
    friend IntervalSet unite_translated(const IntervalSet&, double);
    friend IntervalSet translate(const IntervalSet&, double);
    friend IntervalSet clip(const IntervalSet&, double, double);

    std::vector<Interval> intervals_;
};

// Canonical form of the union of the inputs. See IntervalSet::normalized.
IntervalSet normalize(std::vector<Interval> raw);

// Set union of two canonical sets (linear merge-sweep).
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

// unite(a, translate(a, x)) fused into one sweep; used on hot paths.
IntervalSet unite_translated(const IntervalSet& a, double x);

// Every endpoint shifted by +x. Throws on non-finite x.
IntervalSet translate(const IntervalSet& a, double x);

// a ∩ (lo, hi). Throws if lo >= hi.
IntervalSet clip(const IntervalSet& a, double lo, double hi);

// Each (lo, hi) grows to (lo - r, hi + r), then re-canonicalized.
// Throws if r < 0. dilate(a, 0) == a.
IntervalSet dilate(const IntervalSet& a, double r);

double measure(const IntervalSet& a);

// measure(clip(a, lo, hi)) without building the clipped set.
double measure_within(const IntervalSet& a, double lo, double hi);

bool contains(const IntervalSet& a, double z);

// True iff (lo, hi) is covered up to rounding slack: after clipping to
// (lo, hi) a single interval remains and its length matches hi - lo
// within kCoverSlack. Throws if lo >= hi.
bool covers(const IntervalSet& a, double lo, double hi);

inline constexpr double kCoverSlack = 1e-9;

}  // namespace rss
