#include "abcframe/triple.hpp"

#include <array>

#include "abcframe/errors.hpp"

namespace abcframe {

namespace {
constexpr std::array<std::string_view, 14> kRegionNames = {
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII", "XIII", "XIV"};
}

std::string_view to_string(RegionTag tag) {
    return kRegionNames[static_cast<int>(tag) - 1];
}

std::optional<RegionTag> region_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kRegionNames.size(); ++i) {
        if (kRegionNames[i] == name) return static_cast<RegionTag>(i + 1);
    }
    return std::nullopt;
}

ExactReal NormalizedTriple::grid_step() const {
    if (!ratio) throw RegionUnsupported("grid step needs a rational a/b");
    return b / Rational(ratio->q);
}

bool NormalizedTriple::maps_defined() const {
    return a < b && b < c && b - a < c0 && c0 < a;
}

NormalizedTriple normalize(const ExactReal& a, const ExactReal& b, const ExactReal& c) {
    require_same_context(a, b);
    require_same_context(a, c);
    if (sign(a) <= 0 || sign(b) <= 0 || sign(c) <= 0) {
        throw NonPositiveInput("a, b, c must be positive, got (" + a.to_string() + ", " +
                               b.to_string() + ", " + c.to_string() + ")");
    }
    NormalizedTriple nt;
    nt.a = a;
    nt.b = b;
    nt.c = c;
    nt.floor_cb = floor_div(c, b);
    ExactReal whole = b * nt.floor_cb;
    nt.c0 = c - whole;
    nt.c1 = mod(whole, a);
    if (auto r = rational_ratio(a, b)) {
        nt.ratio = LatticeRatio{to_int64(r->get_num()), to_int64(r->get_den())};
        nt.c_on_grid = in_lattice(c, nt.grid_step());
    }
    return nt;
}

RegionTag region_tag(const NormalizedTriple& nt) {
    const ExactReal& a = nt.a;
    const ExactReal& b = nt.b;
    const ExactReal& c = nt.c;
    int ac = compare(a, c);
    if (ac > 0) return RegionTag::I;
    if (ac == 0) return RegionTag::II;
    if (b <= a) return RegionTag::III;
    if (b >= c) return RegionTag::IV;
    ExactReal gap = b - a;
    if (nt.c0 >= a) return nt.c0 <= gap ? RegionTag::V : RegionTag::VI;
    if (nt.c0 <= gap) return RegionTag::VII;
    if (nt.floor_cb == 1) return RegionTag::VIII;
    int c1_vs = compare(nt.c1, a - gap);
    if (c1_vs > 0) return RegionTag::IX;
    if (c1_vs == 0) return RegionTag::X;
    if (sign(nt.c1) == 0) return RegionTag::XI;
    if (!nt.rational()) return RegionTag::XII;
    return nt.c_on_grid ? RegionTag::XIII : RegionTag::XIV;
}

}  // namespace abcframe
