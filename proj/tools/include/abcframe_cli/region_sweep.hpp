#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "abcframe/classifier.hpp"

namespace abcframe::cli {

// b = 1 throughout. Rows are the reduced fractions a = p/q with q <= q_max
// in (a_min, a_max], largest a first; columns are c = c_min + k*step_c for
// k >= 1 while c < c_max.
struct SweepSpec {
    Rational a_min{0};
    Rational a_max{2};
    Rational c_min{0};
    Rational c_max{6};
    Rational step_c{1, 20};
    std::int64_t q_max = 10;
    unsigned threads = 0;  // 0: hardware count
};

struct SweepCell {
    Rational a;
    Rational c;
    RegionTag region = RegionTag::I;
    Verdict verdict = Verdict::Frame;
};

struct SweepGrid {
    std::vector<Rational> a_values;  // row order
    std::vector<Rational> c_values;  // column order
    std::vector<SweepCell> cells;    // row-major
};

// Throws UnsupportedRange on empty or oversized ranges.
SweepGrid region_sweep(const SweepSpec& spec);

void write_csv(std::ostream& os, const SweepGrid& grid);
// Binary P6, one pixel per cell.
void write_ppm(std::ostream& os, const SweepGrid& grid);

using Rgb = std::array<std::uint8_t, 3>;
Rgb palette(RegionTag region, Verdict verdict);

}  // namespace abcframe::cli
