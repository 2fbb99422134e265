#pragma once

// Shared helpers for the test binaries. Nothing here is used by the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "abcframe/dynamics.hpp"
#include "abcframe/exactnum.hpp"
#include "abcframe/periodic_set.hpp"
#include "abcframe/triple.hpp"

namespace fixtures {

using abcframe::ExactReal;
using abcframe::Interval;
using abcframe::NormalizedTriple;
using abcframe::PeriodicSet;
using abcframe::Rational;

inline Rational frac(long n, long d = 1) {
    Rational r{abcframe::Integer(n), abcframe::Integer(d)};
    r.canonicalize();
    return r;
}

inline ExactReal rat(long n, long d = 1) {
    return ExactReal(frac(n, d), abcframe::NumberContext::rational());
}

// x0 + x1*pi with x0 = n0/d0, x1 = n1/d1
inline ExactReal pi_form(long n0, long d0, long n1, long d1) {
    return ExactReal(frac(n0, d0), frac(n1, d1), abcframe::NumberContext::pi());
}

inline ExactReal surd_form(long d, long n0, long d0, long n1, long d1) {
    return ExactReal(frac(n0, d0), frac(n1, d1), abcframe::NumberContext::surd(d));
}

inline ExactReal seventeenths(long n) { return rat(n, 17); }

inline PeriodicSet rational_set(long a_num, long a_den, std::vector<std::pair<long, long>> numerators, long den) {
    ExactReal a = rat(a_num, a_den);
    std::vector<Interval> ivs;
    for (auto [lo, hi] : numerators) ivs.push_back({rat(lo, den), rat(hi, den)});
    return PeriodicSet::from_intervals(a, ivs);
}

// |S| by counting the points k/n of one period that fall in S. Exact when
// every endpoint is a multiple of 1/n.
inline Rational counted_measure(const PeriodicSet& s, long n) {
    Rational a = s.period().rational_part();
    Rational steps = a * n;
    long count = 0;
    long total = steps.get_num().get_si() / steps.get_den().get_si();
    for (long k = 0; k < total; ++k) {
        if (s.contains(rat(k, n))) ++count;
    }
    return frac(count, n);
}

// |U cap [0, t)| for a plain list of disjoint intervals in [0, a).
inline ExactReal clipped_length(const std::vector<Interval>& pieces, const ExactReal& t) {
    ExactReal total = t.with(0);
    for (const auto& iv : pieces) {
        const ExactReal& hi = abcframe::min(iv.hi, t);
        if (iv.lo < hi) total += hi - iv.lo;
    }
    return total;
}

// All reduced p/q < 1 with q <= q_max, b = 1, on-grid c in (1, c_max).
struct SweepTriple {
    std::int64_t p, q, k;  // a = p/q, c = k/q
    NormalizedTriple nt;
};

inline std::vector<SweepTriple> rational_sweep(std::int64_t q_max, std::int64_t c_max,
                                               std::vector<abcframe::RegionTag> keep) {
    std::vector<SweepTriple> out;
    ExactReal one = rat(1);
    for (std::int64_t q = 1; q <= q_max; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t k = q + 1; k < c_max * q; ++k) {
                NormalizedTriple nt = abcframe::normalize(rat(p, q), one, rat(k, q));
                auto tag = abcframe::region_tag(nt);
                for (auto want : keep) {
                    if (tag == want) {
                        out.push_back({p, q, k, nt});
                        break;
                    }
                }
            }
        }
    }
    return out;
}

// Region XII triples with b = 1 and c = m + n*tau/4 in (2, 9), for a few
// fixed irrational a. Triples with a non-empty S come first, the rest fill
// up to `count` in enumeration order.
inline std::vector<NormalizedTriple> irrational_xii(const abcframe::ContextPtr& ctx, std::size_t count) {
    using abcframe::ContextKind;
    ExactReal one(Rational(1), ctx);
    std::vector<ExactReal> as;
    if (ctx->kind() == ContextKind::Pi) {
        as = {ExactReal(0, frac(1, 4), ctx), ExactReal(0, frac(2, 7), ctx), ExactReal(0, frac(3, 10), ctx),
              ExactReal(-2, 1, ctx)};
    } else {
        as = {ExactReal(0, frac(1, 2), ctx), ExactReal(-1, 1, ctx), ExactReal(2, -1, ctx),
              ExactReal(0, frac(2, 3), ctx)};
    }
    std::vector<NormalizedTriple> full, empty;
    for (const auto& a : as) {
        if (abcframe::sign(a) <= 0 || !(a < one)) continue;
        for (long m = -40; m <= 40; ++m) {
            for (long n = -60; n <= 60; ++n) {
                ExactReal c(Rational(m), frac(n, 4), ctx);
                if (!(one * 2 < c) || !(c < one * 9)) continue;
                NormalizedTriple nt = abcframe::normalize(a, one, c);
                if (abcframe::region_tag(nt) != abcframe::RegionTag::XII) continue;
                (abcframe::compute_S(nt).S.empty() ? empty : full).push_back(nt);
            }
        }
    }
    std::vector<NormalizedTriple> out(full.begin(), full.begin() + std::min(full.size(), count));
    for (std::size_t i = 0; out.size() < count && i < empty.size(); ++i) out.push_back(empty[i]);
    return out;
}

// Second, table-driven construction of the invariant set: single holes
// pushed forward case by case, with "[0, a)" meaning the set is empty.
// `literal_guard` uses c0+b-a in the fourth rational case instead of c0+a-b.
inline std::optional<PeriodicSet> table_invariant_set(const NormalizedTriple& nt, bool literal_guard = false) {
    using abcframe::apply_R;
    using abcframe::mod;
    const ExactReal& a = nt.a;
    ExactReal zero = a.with(0);
    ExactReal low_end = nt.c0 + nt.a - nt.b;
    ExactReal gap = nt.b - nt.a;
    ExactReal g = nt.c1;
    ExactReal d = nt.c1 + gap;
    std::vector<Interval> holes{{g, d}};
    const long cap = static_cast<long>(abcframe::floor_div(a, gap)) + 4 + (nt.ratio ? nt.ratio->q : 0);

    if (!nt.rational()) {
        for (long k = 0; k < cap; ++k) {
            bool inside_low = zero <= g && d <= low_end;
            bool inside_high = nt.c0 <= g && d <= a;
            if (inside_low || inside_high) {
                ExactReal r = mod(apply_R(g, nt), a);
                g = r;
                d = r + gap;
                holes.push_back({g, d});
            } else if (g == low_end && d == nt.c0) {
                return PeriodicSet::from_intervals(a, holes).complement();
            } else {
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    ExactReal guard = literal_guard ? nt.c0 + nt.b - nt.a : low_end;
    for (long k = 0; k < cap; ++k) {
        ExactReal ng, nd;
        if (zero <= g && g < d && d <= low_end) {
            ng = mod(apply_R(g, nt), a);
            nd = ng + (d - g);
        } else if (zero <= g && g < low_end && low_end < d && d <= nt.c0) {
            ng = mod(apply_R(g, nt), a);
            nd = ng + (low_end - g);
        } else if (low_end <= g && g < d && d <= nt.c0) {
            break;
        } else if (guard <= g && g < nt.c0 && nt.c0 < d && d <= a) {
            ng = mod(nt.c, a);
            nd = ng + (d - nt.c0);
        } else if (nt.c0 <= g && g < d && d <= a) {
            ng = mod(apply_R(g, nt), a);
            nd = ng + (d - g);
        } else {
            return PeriodicSet(a);
        }
        if (ng == g && nd == d) break;
        g = ng;
        d = nd;
        holes.push_back({g, d});
    }
    return PeriodicSet::from_intervals(a, holes).complement();
}

}  // namespace fixtures
