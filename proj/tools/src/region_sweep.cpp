#include "abcframe_cli/region_sweep.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "abcframe/errors.hpp"
#include "abcframe_cli/parallel.hpp"

namespace abcframe::cli {

namespace {

constexpr std::size_t kMaxCells = 4'000'000;

// Frame cells in cool tones, NotFrame cells in warm tones; index = region - 1.
constexpr std::array<Rgb, 14> kFrameColors{{
    {0x0b, 0x3d, 0x91}, {0x1f, 0x77, 0xb4}, {0x17, 0xbe, 0xcf}, {0x2c, 0xa0, 0x2c}, {0x98, 0xdf, 0x8a},
    {0x00, 0x80, 0x80}, {0x6b, 0xae, 0xd6}, {0x41, 0xab, 0x5d}, {0x9e, 0xda, 0xe5}, {0x31, 0x82, 0xbd},
    {0x74, 0xc4, 0x76}, {0x3f, 0x00, 0x7d}, {0x80, 0x7d, 0xba}, {0x00, 0x44, 0x1b},
}};
constexpr std::array<Rgb, 14> kNotFrameColors{{
    {0xd6, 0x27, 0x28}, {0xff, 0x7f, 0x0e}, {0xe3, 0x77, 0xc2}, {0x8c, 0x56, 0x4b}, {0xff, 0xbb, 0x78},
    {0xbc, 0xbd, 0x22}, {0xff, 0x98, 0x96}, {0xa5, 0x00, 0x26}, {0xfd, 0xae, 0x61}, {0xf4, 0x6d, 0x43},
    {0xfe, 0xe0, 0x8b}, {0xb1, 0x59, 0x28}, {0xe7, 0x29, 0x8a}, {0x67, 0x00, 0x0d},
}};

void require(bool ok, const std::string& what) {
    if (!ok) throw UnsupportedRange(what);
}

}  // namespace

Rgb palette(RegionTag region, Verdict verdict) {
    auto i = static_cast<std::size_t>(region) - 1;
    return verdict == Verdict::Frame ? kFrameColors.at(i) : kNotFrameColors.at(i);
}

SweepGrid region_sweep(const SweepSpec& spec) {
    require(spec.q_max >= 1, "q_max must be at least 1");
    require(sgn(spec.a_min) >= 0 && spec.a_min < spec.a_max, "need 0 <= a_min < a_max");
    require(sgn(spec.c_min) >= 0 && spec.c_min < spec.c_max, "need 0 <= c_min < c_max");
    require(sgn(spec.step_c) > 0, "step_c must be positive");

    SweepGrid grid;
    for (std::int64_t q = 1; q <= spec.q_max; ++q) {
        Rational lo = spec.a_min * q;
        Rational hi = spec.a_max * q;
        mpz_class first = lo.get_num() / lo.get_den() + 1;
        mpz_class last = hi.get_num() / hi.get_den();
        require(last - first < Integer(static_cast<long>(kMaxCells)), "a range too large");
        for (mpz_class p = first; p <= last; ++p) {
            if (mpz_class(gcd(p, mpz_class(static_cast<long>(q)))) != 1) continue;
            Rational a(p, mpz_class(static_cast<long>(q)));
            a.canonicalize();
            grid.a_values.push_back(a);
        }
    }
    std::sort(grid.a_values.begin(), grid.a_values.end(), [](const Rational& x, const Rational& y) { return x > y; });
    require(!grid.a_values.empty(), "no fraction with q <= q_max in the a range");

    Rational span = (spec.c_max - spec.c_min) / spec.step_c;
    require(span < Rational(static_cast<long>(kMaxCells)), "c range too fine");
    for (Rational c = spec.c_min + spec.step_c; c < spec.c_max; c += spec.step_c) grid.c_values.push_back(c);
    require(!grid.c_values.empty(), "c range holds no sample");
    require(grid.a_values.size() * grid.c_values.size() <= kMaxCells, "too many cells");

    auto ctx = NumberContext::rational();
    ExactReal one(Rational(1), ctx);
    const std::size_t cols = grid.c_values.size();
    grid.cells = parallel_map<SweepCell>(grid.a_values.size() * cols, spec.threads, [&](std::size_t i) {
        const Rational& a = grid.a_values[i / cols];
        const Rational& c = grid.c_values[i % cols];
        FrameDecision d = classify(ExactReal(a, ctx), one, ExactReal(c, ctx));
        return SweepCell{a, c, d.region, d.verdict};
    });
    return grid;
}

void write_csv(std::ostream& os, const SweepGrid& grid) {
    os << "a,c,region,verdict\n";
    for (const auto& cell : grid.cells) {
        os << cell.a.get_str() << ',' << cell.c.get_str() << ',' << to_string(cell.region) << ','
           << to_string(cell.verdict) << '\n';
    }
}

void write_ppm(std::ostream& os, const SweepGrid& grid) {
    os << "P6\n" << grid.c_values.size() << ' ' << grid.a_values.size() << "\n255\n";
    for (const auto& cell : grid.cells) {
        Rgb px = palette(cell.region, cell.verdict);
        os.write(reinterpret_cast<const char*>(px.data()), 3);
    }
}

}  // namespace abcframe::cli
