#pragma once

#include <span>
#include <string>
#include <vector>

#include "abcframe/exactnum.hpp"

namespace abcframe {

struct Interval {
    ExactReal lo;
    ExactReal hi;
    ExactReal length() const { return hi - lo; }
};

// Finite union of half-open intervals inside [0, period), standing for that
// union + period*Z. Storage is sorted, disjoint and merged where touching;
// nothing is merged across the seam at 0 == period.
class PeriodicSet {
public:
    explicit PeriodicSet(ExactReal period);

    static PeriodicSet full(const ExactReal& period);
    // Each [lo, hi) may lie anywhere on the line; it is reduced mod the period.
    // Intervals longer than the period cover everything.
    static PeriodicSet from_intervals(const ExactReal& period, const std::vector<Interval>& raw);
    static PeriodicSet single(const ExactReal& period, const ExactReal& lo, const ExactReal& hi);

    const ExactReal& period() const noexcept { return period_; }
    std::span<const Interval> intervals() const noexcept { return intervals_; }
    bool empty() const noexcept { return intervals_.empty(); }

    ExactReal measure() const;
    bool contains(const ExactReal& t) const;
    // Components with the seam pieces [x, a) and [0, y) joined into [x, a + y).
    std::vector<Interval> circular_components() const;

    PeriodicSet unite(const PeriodicSet& other) const;
    PeriodicSet intersect(const PeriodicSet& other) const;
    PeriodicSet difference(const PeriodicSet& other) const;
    PeriodicSet complement() const;
    PeriodicSet shift(const ExactReal& t) const;
    // Intersection with [lo, hi) + period*Z.
    PeriodicSet restrict(const ExactReal& lo, const ExactReal& hi) const;
    bool subset_of(const PeriodicSet& other) const;

    std::string to_string() const;

    friend bool operator==(const PeriodicSet& x, const PeriodicSet& y);

private:
    void check_period(const PeriodicSet& other) const;
    static std::vector<Interval> canonical(std::vector<Interval> pieces);

    ExactReal period_;
    std::vector<Interval> intervals_;
};

bool operator==(const PeriodicSet& x, const PeriodicSet& y);
inline bool operator!=(const PeriodicSet& x, const PeriodicSet& y) { return !(x == y); }

}  // namespace abcframe
