#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abcframe/periodic_set.hpp"
#include "abcframe/triple.hpp"

namespace abcframe {

// Forward map: translation by floor(c/b)*b + b, 0 or floor(c/b)*b depending on
// where t sits mod a. Both maps need nt.maps_defined().
ExactReal apply_R(const ExactReal& t, const NormalizedTriple& nt);
// Backward map, the inverse of apply_R away from its fixed interval.
ExactReal apply_Rt(const ExactReal& t, const NormalizedTriple& nt);

PeriodicSet image_R(const PeriodicSet& e, const NormalizedTriple& nt);
PeriodicSet image_Rt(const PeriodicSet& e, const NormalizedTriple& nt);

// Residues mod a of t, R(t), R(R(t)), ... (steps + 1 values).
std::vector<ExactReal> forward_orbit(const NormalizedTriple& nt, const ExactReal& t, std::int64_t steps);

enum class HoleStatus { Propagating, AbsorbedIntoBlackHole, Frozen, Sentinel };

const char* to_string(HoleStatus s);

struct HoleChainStep {
    int index;
    PeriodicSet hole;  // newly uncovered points at this step
    HoleStatus status;
};

struct MarkSet {
    // rational: marks form generator*Z mod Ya with `order` elements
    std::optional<ExactReal> generator;
    std::optional<std::int64_t> order;
    // irrational: n*theta mod Ya for n = 1..M
    std::vector<ExactReal> rotation_marks;
    // Y of every hole's left endpoint, mod Ya, sorted
    std::vector<ExactReal> hole_marks;
};

struct RationalExtras {
    std::int64_t n1;
    std::int64_t n2;
    ExactReal delta;
    ExactReal delta_prime;
    ExactReal h;
};

struct InvariantSetReport {
    PeriodicSet S;
    std::vector<HoleChainStep> chain;
    std::optional<ExactReal> ya;
    std::optional<ExactReal> theta;
    MarkSet marks;
    std::optional<RationalExtras> rational_extras;
};

// Hole propagation from the backward map's fixed interval. Runs for any
// triple with the maps defined; compute_S adds the region short-circuits.
InvariantSetReport propagate_holes(const NormalizedTriple& nt);
InvariantSetReport compute_S(const NormalizedTriple& nt);

PeriodicSet compute_D(const NormalizedTriple& nt, const PeriodicSet& s);

// (floor(c/b)+1)|S cap [0,c0+a-b)| + floor(c/b)|S cap [c0,a)|
ExactReal measure_identity_lhs(const NormalizedTriple& nt, const PeriodicSet& s);
bool measure_identity(const NormalizedTriple& nt, const PeriodicSet& s);

// Y(t) = |S cap [0, t)| extended by Y(t + a) = Y(t) + Y(a).
ExactReal surgery_map(const PeriodicSet& s, const ExactReal& t);
InvariantSetReport surgery_report(const NormalizedTriple& nt, const PeriodicSet& s,
                                  std::vector<HoleChainStep> chain = {});

ExactReal default_epsilon(const NormalizedTriple& nt);
// Bump that is 1 on the forward map's fixed interval (minus an eps margin at
// the right end) with linear ramps of width eps, zero at c0.
double bump(const NormalizedTriple& nt, const ExactReal& eps, const ExactReal& t);
double birkhoff_average(const NormalizedTriple& nt, const ExactReal& t, std::int64_t n,
                        const std::optional<ExactReal>& eps = std::nullopt);

}  // namespace abcframe
