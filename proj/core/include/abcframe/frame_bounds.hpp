#pragma once

#include <cstdint>

#include "abcframe/triple.hpp"

namespace abcframe {

struct FrameBoundEstimate {
    double lower;  // smallest singular value seen over the sampled t
    double upper;  // largest singular value seen over the sampled t
};

struct SingularRange {
    double smallest;
    double largest;
};

// Extreme singular values of the truncated 0/1 matrix at offset t: rows
// mu = i*a with |i| <= half_width, columns lambda = j*b whose whole support
// lies inside those rows.
SingularRange truncated_singular_values(const NormalizedTriple& nt, const ExactReal& t, std::int64_t half_width);

// Floating-point diagnostic over t = k*a/t_samples, k = 0..t_samples-1.
FrameBoundEstimate numeric_frame_bounds(const NormalizedTriple& nt, std::int64_t t_samples,
                                        std::int64_t half_width);

}  // namespace abcframe
