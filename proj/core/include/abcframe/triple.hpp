#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "abcframe/exactnum.hpp"

namespace abcframe {

enum class RegionTag { I = 1, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII, XIII, XIV };

std::string_view to_string(RegionTag tag);
std::optional<RegionTag> region_from_string(std::string_view name);

struct LatticeRatio {
    std::int64_t p;  // a/b = p/q, coprime
    std::int64_t q;
};

// A triple (a, b, c) with every derived quantity the classification uses.
struct NormalizedTriple {
    ExactReal a, b, c;
    std::int64_t floor_cb = 0;  // floor(c/b)
    ExactReal c0;               // c - floor(c/b)*b
    ExactReal c1;               // floor(c/b)*b reduced mod a
    std::optional<LatticeRatio> ratio;
    bool c_on_grid = false;  // c in (b/q)Z; only meaningful when ratio is set

    bool rational() const noexcept { return ratio.has_value(); }
    // b/q; requires a rational ratio
    ExactReal grid_step() const;
    // true when a < b < c and b-a < c0 < a, where both maps are defined
    bool maps_defined() const;
    // [c0+a-b, c0): fixed points of the forward map
    ExactReal forward_hole_lo() const { return c0 + a - b; }
    ExactReal forward_hole_hi() const { return c0; }
    // [c1, c1+b-a): fixed points of the backward map, taken mod a
    ExactReal backward_hole_lo() const { return c1; }
    ExactReal backward_hole_hi() const { return c1 + b - a; }
};

NormalizedTriple normalize(const ExactReal& a, const ExactReal& b, const ExactReal& c);
RegionTag region_tag(const NormalizedTriple& nt);

}  // namespace abcframe
