#include "abcframe/grid_oracle.hpp"

#include <algorithm>

#include "abcframe/errors.hpp"

namespace abcframe {

namespace {

std::int64_t wrap(std::int64_t x, std::int64_t p) {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

bool orbit_avoids(std::int64_t start, std::int64_t p, auto&& step, auto&& fixed) {
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    for (std::int64_t j = start; !seen[static_cast<std::size_t>(j)]; j = step(j)) {
        seen[static_cast<std::size_t>(j)] = 1;
        if (fixed(j)) return false;
    }
    return true;
}

}  // namespace

GridModel::GridModel(const NormalizedTriple& nt) : nt_(nt) {
    if (!nt.ratio || !nt.c_on_grid) throw RegionUnsupported("grid model needs rational a/b and c on the grid");
    if (!nt.maps_defined()) throw RegionUnsupported("grid model needs a < b < c and b-a < c0 < a");
    p_ = nt.ratio->p;
    q_ = nt.ratio->q;
    c_units_ = to_int64(lattice_index(nt.c, nt.grid_step()).value());
    const std::int64_t f = nt.floor_cb;
    c0_units_ = c_units_ - f * q_;
    forward_.resize(static_cast<std::size_t>(p_));
    backward_.resize(static_cast<std::size_t>(p_));
    for (std::int64_t k = 0; k < p_; ++k) {
        std::int64_t fw;
        if (k < c0_units_ + p_ - q_) {
            fw = k + (f + 1) * q_;
        } else if (k < c0_units_) {
            fw = k;
        } else {
            fw = k + f * q_;
        }
        forward_[static_cast<std::size_t>(k)] = wrap(fw, p_);

        std::int64_t r = wrap(k - (c_units_ - p_), p_);
        std::int64_t bw;
        if (r < p_ - c0_units_) {
            bw = k - f * q_;
        } else if (r < q_ - c0_units_) {
            bw = k;
        } else {
            bw = k - f * q_ - q_;
        }
        backward_[static_cast<std::size_t>(k)] = wrap(bw, p_);
    }
}

ExactReal GridModel::point(std::int64_t k) const { return nt_.grid_step() * k; }

bool GridModel::forward_fixed(std::int64_t k) const {
    return c0_units_ + p_ - q_ <= k && k < c0_units_;
}

bool GridModel::backward_fixed(std::int64_t k) const {
    return wrap(k - nt_.floor_cb * q_, p_) < q_ - p_;
}

std::int64_t GridModel::shift_index(std::int64_t k, std::int64_t units) const { return wrap(k + units, p_); }

PeriodicSet GridModel::lift(const std::vector<std::int64_t>& indices) const {
    ExactReal unit = nt_.grid_step();
    std::vector<Interval> pieces;
    pieces.reserve(indices.size());
    for (auto k : indices) pieces.push_back({unit * k, unit * (k + 1)});
    return PeriodicSet::from_intervals(nt_.a, pieces);
}

std::vector<std::int64_t> grid_S(const GridModel& gm) {
    std::vector<std::int64_t> out;
    const std::int64_t p = gm.size();
    auto fw = [&](std::int64_t j) { return gm.forward(j); };
    auto bw = [&](std::int64_t j) { return gm.backward(j); };
    auto fw_fixed = [&](std::int64_t j) { return gm.forward_fixed(j); };
    auto bw_fixed = [&](std::int64_t j) { return gm.backward_fixed(j); };
    for (std::int64_t k = 0; k < p; ++k) {
        if (orbit_avoids(k, p, fw, fw_fixed) && orbit_avoids(k, p, bw, bw_fixed)) out.push_back(k);
    }
    return out;
}

std::vector<std::int64_t> grid_D(const GridModel& gm, const std::vector<std::int64_t>& s) {
    const std::int64_t p = gm.size();
    const std::int64_t q = gm.triple().ratio->q;
    const std::int64_t f = gm.triple().floor_cb;
    std::vector<char> in_s(static_cast<std::size_t>(p), 0);
    for (auto k : s) in_s[static_cast<std::size_t>(k)] = 1;
    auto member = [&](std::int64_t k) { return in_s[static_cast<std::size_t>(k)] != 0; };

    std::vector<std::int64_t> out;
    for (auto k : s) {
        bool low = k < gm.forward_fixed_begin();
        bool hit = low && member(gm.shift_index(k, f * q));
        for (std::int64_t j = 1; j < f && !hit; ++j) hit = member(gm.shift_index(k, j * q));
        if (hit) out.push_back(k);
    }
    return out;
}

Verdict grid_frame_decision(const GridModel& gm) {
    std::vector<std::int64_t> s = grid_S(gm);
    std::vector<std::int64_t> d = grid_D(gm, s);
    const std::int64_t p = gm.size();
    const std::int64_t c_units = to_int64(lattice_index(gm.triple().c, gm.triple().grid_step()).value());
    std::vector<char> reduced(static_cast<std::size_t>(p), 0);
    for (std::int64_t k = 0; k < p; ++k) {
        reduced[static_cast<std::size_t>(k)] = 1;
        reduced[static_cast<std::size_t>(gm.shift_index(c_units - k, 0))] = 1;
    }
    bool reduced_hit = std::any_of(d.begin(), d.end(),
                                   [&](std::int64_t k) { return reduced[static_cast<std::size_t>(k)] != 0; });
    if (reduced_hit != !d.empty()) {
        throw OracleInconsistency("reduced grid D disagrees with the full grid D");
    }
    return d.empty() ? Verdict::Frame : Verdict::NotFrame;
}

Verdict oracle_frame_decision(const NormalizedTriple& nt) {
    if (nt.rational() && nt.c_on_grid && nt.maps_defined()) return grid_frame_decision(GridModel(nt));
    return classify(nt).verdict;
}

}  // namespace abcframe
