#include "abcframe/sampling.hpp"

#include "abcframe/errors.hpp"

namespace abcframe {

const char* to_string(SamplingRoute r) {
    return r == SamplingRoute::DegenerateInteger ? "degenerate-integer" : "gabor-equivalence";
}

SamplingDecision sampling_stable(const ExactReal& a, const ExactReal& b, const ExactReal& c) {
    NormalizedTriple nt = normalize(a, b, c);
    if (sign(nt.c0) == 0 && nt.floor_cb >= 2) {
        return {a <= b, SamplingRoute::DegenerateInteger, std::nullopt};
    }
    FrameDecision fd = classify(nt);
    return {fd.verdict == Verdict::Frame, SamplingRoute::ViaGaborEquivalence, fd};
}

}  // namespace abcframe
