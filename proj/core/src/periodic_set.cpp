#include "abcframe/periodic_set.hpp"

#include <algorithm>

#include "abcframe/errors.hpp"

namespace abcframe {

PeriodicSet::PeriodicSet(ExactReal period) : period_(std::move(period)) {
    if (sign(period_) <= 0) throw NonPositiveModulus("period must be positive");
}

PeriodicSet PeriodicSet::full(const ExactReal& period) {
    PeriodicSet s(period);
    s.intervals_.push_back({period.with(0), period});
    return s;
}

PeriodicSet PeriodicSet::single(const ExactReal& period, const ExactReal& lo, const ExactReal& hi) {
    return from_intervals(period, {{lo, hi}});
}

PeriodicSet PeriodicSet::from_intervals(const ExactReal& period, const std::vector<Interval>& raw) {
    PeriodicSet s(period);
    std::vector<Interval> pieces;
    pieces.reserve(raw.size() + 2);
    for (const auto& iv : raw) {
        ExactReal len = iv.hi - iv.lo;
        int ls = sign(len);
        if (ls <= 0) continue;
        if (len >= period) return full(period);
        ExactReal lo = mod(iv.lo, period);
        ExactReal hi = lo + len;
        if (hi <= period) {
            pieces.push_back({lo, hi});
        } else {
            pieces.push_back({lo, period});
            pieces.push_back({period.with(0), hi - period});
        }
    }
    s.intervals_ = canonical(std::move(pieces));
    return s;
}

std::vector<Interval> PeriodicSet::canonical(std::vector<Interval> pieces) {
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> out;
    for (auto& iv : pieces) {
        if (iv.hi <= iv.lo) continue;
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (out.back().hi < iv.hi) out.back().hi = iv.hi;
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

void PeriodicSet::check_period(const PeriodicSet& other) const {
    if (period_ != other.period_) {
        throw PeriodMismatch("periods " + period_.to_string() + " and " + other.period_.to_string());
    }
}

ExactReal PeriodicSet::measure() const {
    ExactReal m = period_.with(0);
    for (const auto& iv : intervals_) m += iv.length();
    return m;
}

bool PeriodicSet::contains(const ExactReal& t) const {
    ExactReal r = mod(t, period_);
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), r,
                               [](const ExactReal& v, const Interval& iv) { return v < iv.lo; });
    if (it == intervals_.begin()) return false;
    --it;
    return r < it->hi;
}

std::vector<Interval> PeriodicSet::circular_components() const {
    std::vector<Interval> out(intervals_.begin(), intervals_.end());
    if (out.size() >= 2 && sign(out.front().lo) == 0 && out.back().hi == period_) {
        out.back().hi = period_ + out.front().hi;
        out.erase(out.begin());
    }
    return out;
}

PeriodicSet PeriodicSet::unite(const PeriodicSet& other) const {
    check_period(other);
    std::vector<Interval> pieces(intervals_.begin(), intervals_.end());
    pieces.insert(pieces.end(), other.intervals_.begin(), other.intervals_.end());
    PeriodicSet s(period_);
    s.intervals_ = canonical(std::move(pieces));
    return s;
}

PeriodicSet PeriodicSet::intersect(const PeriodicSet& other) const {
    check_period(other);
    PeriodicSet s(period_);
    std::size_t i = 0, j = 0;
    const auto& x = intervals_;
    const auto& y = other.intervals_;
    while (i < x.size() && j < y.size()) {
        const ExactReal& lo = max(x[i].lo, y[j].lo);
        const ExactReal& hi = min(x[i].hi, y[j].hi);
        if (lo < hi) s.intervals_.push_back({lo, hi});
        if (x[i].hi < y[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    s.intervals_ = canonical(std::move(s.intervals_));
    return s;
}

PeriodicSet PeriodicSet::complement() const {
    PeriodicSet s(period_);
    ExactReal cursor = period_.with(0);
    for (const auto& iv : intervals_) {
        if (cursor < iv.lo) s.intervals_.push_back({cursor, iv.lo});
        cursor = iv.hi;
    }
    if (cursor < period_) s.intervals_.push_back({cursor, period_});
    return s;
}

PeriodicSet PeriodicSet::difference(const PeriodicSet& other) const {
    return intersect(other.complement());
}

PeriodicSet PeriodicSet::shift(const ExactReal& t) const {
    std::vector<Interval> moved;
    moved.reserve(intervals_.size());
    for (const auto& iv : intervals_) moved.push_back({iv.lo + t, iv.hi + t});
    return from_intervals(period_, moved);
}

PeriodicSet PeriodicSet::restrict(const ExactReal& lo, const ExactReal& hi) const {
    return intersect(single(period_, lo, hi));
}

bool PeriodicSet::subset_of(const PeriodicSet& other) const {
    return difference(other).empty();
}

std::string PeriodicSet::to_string() const {
    if (intervals_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) out += " U ";
        out += "[" + intervals_[i].lo.to_string() + ", " + intervals_[i].hi.to_string() + ")";
    }
    return out;
}

bool operator==(const PeriodicSet& x, const PeriodicSet& y) {
    if (x.period_ != y.period_ || x.intervals_.size() != y.intervals_.size()) return false;
    for (std::size_t i = 0; i < x.intervals_.size(); ++i) {
        if (x.intervals_[i].lo != y.intervals_[i].lo || x.intervals_[i].hi != y.intervals_[i].hi) {
            return false;
        }
    }
    return true;
}

}  // namespace abcframe
