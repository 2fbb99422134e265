#pragma once

#include <optional>

#include "abcframe/classifier.hpp"

namespace abcframe {

enum class SamplingRoute { DegenerateInteger, ViaGaborEquivalence };

const char* to_string(SamplingRoute r);

struct SamplingDecision {
    bool stable;
    SamplingRoute route;
    std::optional<FrameDecision> underlying;
};

// Stable recovery of V2(chi_[d, d+c), bZ) from samples on t0 + aZ, uniformly in t0.
SamplingDecision sampling_stable(const ExactReal& a, const ExactReal& b, const ExactReal& c);

}  // namespace abcframe
