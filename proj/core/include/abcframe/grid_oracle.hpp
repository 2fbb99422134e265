#pragma once

#include <cstdint>
#include <vector>

#include "abcframe/classifier.hpp"
#include "abcframe/periodic_set.hpp"
#include "abcframe/triple.hpp"

namespace abcframe {

// The p grid points k*b/q (k = 0..p-1) of one period when a/b = p/q and c is
// on the grid. Both maps act on indices through integer arithmetic alone.
class GridModel {
public:
    explicit GridModel(const NormalizedTriple& nt);

    const NormalizedTriple& triple() const noexcept { return nt_; }
    std::int64_t size() const noexcept { return p_; }
    ExactReal point(std::int64_t k) const;

    std::int64_t forward(std::int64_t k) const { return forward_[static_cast<std::size_t>(k)]; }
    std::int64_t backward(std::int64_t k) const { return backward_[static_cast<std::size_t>(k)]; }
    bool forward_fixed(std::int64_t k) const;
    // first index of the forward fixed block, i.e. (c0+a-b)/(b/q)
    std::int64_t forward_fixed_begin() const noexcept { return c0_units_ + p_ - q_; }
    bool backward_fixed(std::int64_t k) const;
    std::int64_t shift_index(std::int64_t k, std::int64_t units) const;

    // [k*b/q, (k+1)*b/q) for every listed k
    PeriodicSet lift(const std::vector<std::int64_t>& indices) const;

private:
    NormalizedTriple nt_;
    std::int64_t p_, q_, c_units_, c0_units_;
    std::vector<std::int64_t> forward_, backward_;
};

std::vector<std::int64_t> grid_S(const GridModel& gm);
std::vector<std::int64_t> grid_D(const GridModel& gm, const std::vector<std::int64_t>& s);
// Verdict from grid D; throws OracleInconsistency if the reduction to the
// residues {0, ..., (p-1)b/q} and c minus them disagrees with the full D.
Verdict grid_frame_decision(const GridModel& gm);
// grid_frame_decision where the grid applies, the closed forms elsewhere.
Verdict oracle_frame_decision(const NormalizedTriple& nt);

}  // namespace abcframe
