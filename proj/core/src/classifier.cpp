#include "abcframe/classifier.hpp"

#include <cstdlib>
#include <numeric>

#include "abcframe/errors.hpp"

namespace abcframe {

namespace {

FrameDecision plain(bool frame, RegionTag region) {
    return {frame ? Verdict::Frame : Verdict::NotFrame, region, std::monostate{}};
}

void require_region(const NormalizedTriple& nt, RegionTag want) {
    RegionTag got = region_tag(nt);
    if (got != want) {
        throw RegionUnsupported("expected region " + std::string(to_string(want)) + ", got " +
                                std::string(to_string(got)));
    }
}

std::int64_t wrap_mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t x, std::int64_t y) {
    while (y) {
        std::int64_t t = x % y;
        x = y;
        y = t;
    }
    return x < 0 ? -x : x;
}

FrameDecision decide_vi(const NormalizedTriple& nt) {
    if (!nt.ratio) return plain(true, RegionTag::VI);
    const std::int64_t f1 = nt.floor_cb + 1;
    const std::int64_t g = gcd64(f1, nt.ratio->p);
    ExactReal unit = nt.grid_step();
    ExactReal bound = nt.b - unit * g;
    if (g != f1 && nt.c0 > bound) {
        return {Verdict::NotFrame, RegionTag::VI,
                GcdCondition{1, "c0 > b - gcd(floor(c/b)+1, p)*b/q, gcd != floor(c/b)+1",
                             {{"gcd", nt.a.with(g)}, {"c0", nt.c0}, {"bound", bound}}}};
    }
    if (g == f1 && nt.c0 > bound + unit) {
        return {Verdict::NotFrame, RegionTag::VI,
                GcdCondition{2, "c0 > b - gcd(floor(c/b)+1, p)*b/q + b/q, gcd = floor(c/b)+1",
                             {{"gcd", nt.a.with(g)}, {"c0", nt.c0}, {"bound", bound + unit}}}};
    }
    return plain(true, RegionTag::VI);
}

FrameDecision decide_vii(const NormalizedTriple& nt) {
    if (sign(nt.c0) == 0) {
        return {Verdict::NotFrame, RegionTag::VII, GcdCondition{3, "c0 = 0", {{"c0", nt.c0}}}};
    }
    if (!nt.ratio) return plain(true, RegionTag::VII);
    const std::int64_t f = nt.floor_cb;
    const std::int64_t g = gcd64(f, nt.ratio->p);
    ExactReal unit = nt.grid_step();
    ExactReal bound = unit * g;
    if (g != f && nt.c0 < bound) {
        return {Verdict::NotFrame, RegionTag::VII,
                GcdCondition{4, "0 < c0 < gcd(floor(c/b), p)*b/q, gcd != floor(c/b)",
                             {{"gcd", nt.a.with(g)}, {"c0", nt.c0}, {"bound", bound}}}};
    }
    if (g == f && nt.c0 < bound - unit) {
        return {Verdict::NotFrame, RegionTag::VII,
                GcdCondition{5, "0 < c0 < gcd(floor(c/b), p)*b/q - b/q, gcd = floor(c/b)",
                             {{"gcd", nt.a.with(g)}, {"c0", nt.c0}, {"bound", bound - unit}}}};
    }
    return plain(true, RegionTag::VII);
}

FrameDecision decide_x(const NormalizedTriple& nt) {
    // c1 = 2a - b forces a/b rational
    ExactReal unit = nt.grid_step();
    bool small_c0 = nt.c0 <= nt.b - nt.a + unit;
    bool count = nt.floor_cb + 1 == nt.ratio->p;
    if (small_c0 && count) return plain(true, RegionTag::X);
    return {Verdict::NotFrame, RegionTag::X,
            GcdCondition{10, "needs c0 <= b - a + b/q and floor(c/b) + 1 = p",
                         {{"c0", nt.c0}, {"bound", nt.b - nt.a + unit},
                          {"floor(c/b)+1", nt.a.with(nt.floor_cb + 1)}, {"p", nt.a.with(nt.ratio->p)}}}};
}

FrameDecision decide_xi(const NormalizedTriple& nt) {
    ExactReal unit = nt.grid_step();
    bool big_c0 = nt.c0 >= nt.a - unit;
    bool count = nt.floor_cb == nt.ratio->p;
    if (big_c0 && count) return plain(true, RegionTag::XI);
    return {Verdict::NotFrame, RegionTag::XI,
            GcdCondition{11, "needs c0 >= a - b/q and floor(c/b) = p",
                         {{"c0", nt.c0}, {"bound", nt.a - unit},
                          {"floor(c/b)", nt.a.with(nt.floor_cb)}, {"p", nt.a.with(nt.ratio->p)}}}};
}

// Yields every (d1, d2) with (d1 + d2 + 1)(b - a) < a.
template <class Fn>
void for_each_hole_split(const NormalizedTriple& nt, Fn&& fn) {
    ExactReal gap = nt.b - nt.a;
    for (std::int64_t s = 1; gap * s < nt.a; ++s) {
        for (std::int64_t d1 = 0; d1 < s; ++d1) {
            if (!fn(d1, s - 1 - d1)) return;
        }
    }
}

template <class Fn>
void for_each_rational_candidate(const NormalizedTriple& nt, Fn&& fn) {
    const std::int64_t p = nt.ratio->p;
    bool go = true;
    for_each_hole_split(nt, [&](std::int64_t d1, std::int64_t d2) {
        const std::int64_t s = d1 + d2 + 1;
        const std::int64_t block = p - (nt.ratio->q - p) * s;
        for (std::int64_t n = s + 1; n <= p && go; ++n) {
            if (block % n != 0) continue;  // clause (a) fails for every d3
            for (std::int64_t d3 = 0; d3 <= n - s - 1 && go; ++d3) {
                go = fn(evaluate_rational_candidate(nt, d1, d2, d3, n - s - 1 - d3));
            }
        }
        return go;
    });
}

struct GcdCase {
    bool first_clause;
    bool second_clause;
    ExactReal g;
};

GcdCase case6(const NormalizedTriple& nt) {
    ExactReal g = lattice_gcd(nt.a, nt.c1, nt.grid_step());
    bool first = nt.c0 < g;
    bool second = (g - nt.c0) * nt.floor_cb != g;
    return {first, second, g};
}

GcdCase case7(const NormalizedTriple& nt) {
    ExactReal g = lattice_gcd(nt.a, nt.c1 + nt.b, nt.grid_step());
    bool first = nt.b - nt.c0 < g;
    bool second = (g + nt.c0 - nt.b) * (nt.floor_cb + 1) != g;
    return {first, second, g};
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::Frame ? "Frame" : "NotFrame"; }

IrrationalCandidate evaluate_irrational_candidate(const NormalizedTriple& nt, std::int64_t d1, std::int64_t d2) {
    const std::int64_t f = nt.floor_cb;
    const std::int64_t s = d1 + d2 + 1;
    ExactReal gap = nt.b - nt.a;
    IrrationalCandidate cand{d1, d2, nt.c - gap * ((d1 + 1) * (f + 1)) - gap * ((d2 + 1) * f)};
    cand.in_a_lattice = in_lattice(cand.expr, nt.a);
    cand.differs_from_a = cand.expr != nt.a;
    ExactReal base = nt.b * f;
    cand.sandwich = base + gap * (d1 + 1) < nt.c && nt.c < base + nt.b - gap * (d2 + 1);
    auto m = lattice_index(nt.c1 * s - nt.c0 + gap * (d1 + 1), nt.a);
    if (!m) return cand;
    cand.m = to_int64(*m);
    ExactReal rot = nt.c1 - gap * *cand.m;
    ExactReal period = nt.a - gap * s;
    ExactReal window = nt.c0 - gap * (d1 + 1);
    if (sign(period) > 0) {
        for (std::int64_t n = 1; n <= s; ++n) {
            if (mod(rot * n, period) < window) ++cand.e_count;
        }
    }
    cand.e_matches = cand.e_count == d1;
    return cand;
}

std::optional<IrrationalParams> cond_XII(const NormalizedTriple& nt) {
    require_region(nt, RegionTag::XII);
    // several splits can share one lattice value; any split passing every clause decides
    std::optional<IrrationalParams> out;
    for_each_hole_split(nt, [&](std::int64_t d1, std::int64_t d2) {
        IrrationalCandidate cand = evaluate_irrational_candidate(nt, d1, d2);
        if (!cand.not_frame_conditions()) return true;
        out = IrrationalParams{cand.d1, cand.d2, *cand.m, cand.e_count};
        return false;
    });
    return out;
}

RationalCandidate evaluate_rational_candidate(const NormalizedTriple& nt, std::int64_t d1, std::int64_t d2,
                                              std::int64_t d3, std::int64_t d4) {
    if (!nt.ratio || !nt.c_on_grid) throw RegionUnsupported("rational parameter search needs c on the b/q grid");
    // everything below is in integer units of b/q
    const std::int64_t p = nt.ratio->p;
    const std::int64_t gap = nt.ratio->q - p;
    const ExactReal unit = nt.grid_step();
    const std::int64_t c0 = to_int64(lattice_index(nt.c0, unit).value());
    const std::int64_t c1 = to_int64(lattice_index(nt.c1, unit).value());
    const std::int64_t s = d1 + d2 + 1;
    const std::int64_t n = d1 + d2 + d3 + d4 + 2;
    const std::int64_t k = d1 + d3 + 1;
    RationalCandidate cand{d1, d2, d3, d4, n};
    const std::int64_t block = p - gap * s;
    if (block <= 0) return cand;
    const std::int64_t na = n * p;

    cand.block_on_grid = block % n == 0;
    const std::int64_t x = n * c1 + gap * k;
    cand.x_in_a_lattice = x % p == 0;
    cand.congruence = wrap_mod(x * s - p * k, na) == 0;
    cand.gcd_is_a = std::gcd(x, na) == p;
    for (std::int64_t j = 1; j <= s; ++j) {
        std::int64_t v = wrap_mod(x * j, na);
        if (v > 0 && v < p * k) ++cand.e_count;
    }
    cand.e_matches = cand.e_count == d1;
    if (!cand.block_on_grid) return cand;

    const std::int64_t share = block / n;
    const std::int64_t delta = c0 - gap * (d1 + 1) - share * k;
    cand.delta = unit * delta;
    const std::int64_t lo = -std::min(p - c0, share);
    const std::int64_t hi = std::min(c0 - gap, share);
    cand.delta_in_range = lo < delta && delta < hi;
    // |delta| + a/(N floor(c/b) + k) != share
    cand.not_degenerate = (share - std::abs(delta)) * (n * nt.floor_cb + k) != p;
    return cand;
}

std::optional<RationalParams> cond_XIII(const NormalizedTriple& nt) {
    require_region(nt, RegionTag::XIII);
    GcdCase six = case6(nt);
    if (six.first_clause && six.second_clause) {
        return RationalParams{6, 0, 0, 0, 0, 0, std::nullopt, 0, {{"gcd(a,c1)", six.g}, {"c0", nt.c0}}};
    }
    GcdCase seven = case7(nt);
    if (seven.first_clause && seven.second_clause) {
        return RationalParams{7, 0, 0, 0, 0, 0, std::nullopt, 0, {{"gcd(a,c1+b)", seven.g}, {"c0", nt.c0}}};
    }
    std::optional<RationalParams> out;
    for_each_rational_candidate(nt, [&](const RationalCandidate& cand) {
        if (!cand.not_frame_conditions()) return true;
        out = RationalParams{8, cand.d1, cand.d2, cand.d3, cand.d4, cand.n, cand.delta, cand.e_count, {}};
        return false;
    });
    return out;
}

FrameDecision classify_off_grid(const NormalizedTriple& nt) {
    require_region(nt, RegionTag::XIV);
    ExactReal unit = nt.grid_step();
    ExactReal lower = unit * floor_div(nt.c, unit);
    ExactReal upper = lower + unit;
    auto lo = std::make_shared<FrameDecision>(classify(normalize(nt.a, nt.b, lower)));
    auto hi = std::make_shared<FrameDecision>(classify(normalize(nt.a, nt.b, upper)));
    if (lo->region == RegionTag::XIV || hi->region == RegionTag::XIV) {
        throw InvariantViolation("off-grid recursion produced an off-grid triple");
    }
    bool frame = lo->verdict == Verdict::Frame && hi->verdict == Verdict::Frame;
    return {frame ? Verdict::Frame : Verdict::NotFrame, RegionTag::XIV,
            RecursionPair{lower, upper, lo, hi}};
}

bool characterize_S_nonempty(const NormalizedTriple& nt) {
    RegionTag tag = region_tag(nt);
    if (tag == RegionTag::XII) {
        bool any = false;
        for_each_hole_split(nt, [&](std::int64_t d1, std::int64_t d2) {
            any = evaluate_irrational_candidate(nt, d1, d2).nonempty_conditions();
            return !any;
        });
        return any;
    }
    if (tag == RegionTag::XIII) {
        if (case6(nt).first_clause || case7(nt).first_clause) return true;
        bool any = false;
        for_each_rational_candidate(nt, [&](const RationalCandidate& cand) {
            any = cand.nonempty_conditions();
            return !any;
        });
        return any;
    }
    throw RegionUnsupported("closed-form invariant set test covers regions XII and XIII, got " +
                            std::string(to_string(tag)));
}

FrameDecision classify(const ExactReal& a, const ExactReal& b, const ExactReal& c) {
    return classify(normalize(a, b, c));
}

FrameDecision classify(const NormalizedTriple& nt) {
    RegionTag tag = region_tag(nt);
    switch (tag) {
        case RegionTag::I:
        case RegionTag::III:
            return plain(false, tag);
        case RegionTag::II:
            return plain(nt.a <= nt.b, tag);
        case RegionTag::IV:
        case RegionTag::V:
        case RegionTag::VIII:
        case RegionTag::IX:
            return plain(true, tag);
        case RegionTag::VI:
            return decide_vi(nt);
        case RegionTag::VII:
            return decide_vii(nt);
        case RegionTag::X:
            return decide_x(nt);
        case RegionTag::XI:
            return decide_xi(nt);
        case RegionTag::XII:
            if (auto w = cond_XII(nt)) return {Verdict::NotFrame, tag, *w};
            return plain(true, tag);
        case RegionTag::XIII:
            if (auto w = cond_XIII(nt)) return {Verdict::NotFrame, tag, *w};
            return plain(true, tag);
        case RegionTag::XIV:
            return classify_off_grid(nt);
    }
    throw InvariantViolation("unreachable region");
}

}  // namespace abcframe
