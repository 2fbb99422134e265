#include "abcframe/dynamics.hpp"

#include <algorithm>

#include "abcframe/errors.hpp"

namespace abcframe {

namespace {

void require_maps(const NormalizedTriple& nt) {
    if (!nt.maps_defined()) {
        throw RegionUnsupported("maps need a < b < c and b-a < c0 < a; region " +
                                std::string(to_string(region_tag(nt))));
    }
}

ExactReal forward_shift(const NormalizedTriple& nt) { return nt.b * nt.floor_cb; }

std::int64_t step_cap(const NormalizedTriple& nt) {
    ExactReal gap = nt.b - nt.a;
    std::int64_t cap = floor_div(nt.a, gap) + 1 + 2;
    if (nt.ratio) cap += nt.ratio->q;
    return cap;
}

ExactReal rational_gcd(const ExactReal& x, const ExactReal& y) {
    const Rational& rx = x.rational_part();
    const Rational& ry = y.rational_part();
    Integer l;
    mpz_lcm(l.get_mpz_t(), rx.get_den_mpz_t(), ry.get_den_mpz_t());
    return lattice_gcd(x, y, x.with(Rational(1) / Rational(l)));
}

PeriodicSet accept_or_empty(const NormalizedTriple& nt, const PeriodicSet& holes) {
    PeriodicSet e = holes.complement();
    PeriodicSet fixed = PeriodicSet::single(nt.a, nt.forward_hole_lo(), nt.forward_hole_hi());
    if (!e.intersect(fixed).empty()) return PeriodicSet(nt.a);
    if (image_R(e, nt) != e || image_Rt(e, nt) != e) return PeriodicSet(nt.a);
    return e;
}

InvariantSetReport empty_report(const NormalizedTriple& nt) {
    InvariantSetReport rep{PeriodicSet(nt.a), {}, std::nullopt, std::nullopt, {}, std::nullopt};
    rep.chain.push_back({0, PeriodicSet(nt.a), HoleStatus::Sentinel});
    return rep;
}

}  // namespace

const char* to_string(HoleStatus s) {
    switch (s) {
        case HoleStatus::Propagating: return "propagating";
        case HoleStatus::AbsorbedIntoBlackHole: return "absorbed";
        case HoleStatus::Frozen: return "frozen";
        case HoleStatus::Sentinel: return "sentinel";
    }
    return "";
}

ExactReal apply_R(const ExactReal& t, const NormalizedTriple& nt) {
    require_maps(nt);
    ExactReal r = mod(t, nt.a);
    if (r < nt.forward_hole_lo()) return t + forward_shift(nt) + nt.b;
    if (r < nt.forward_hole_hi()) return t;
    return t + forward_shift(nt);
}

ExactReal apply_Rt(const ExactReal& t, const NormalizedTriple& nt) {
    require_maps(nt);
    ExactReal r = mod(t - (nt.c - nt.a), nt.a);
    if (r < nt.a - nt.c0) return t - forward_shift(nt);
    if (r < nt.b - nt.c0) return t;
    return t - forward_shift(nt) - nt.b;
}

PeriodicSet image_R(const PeriodicSet& e, const NormalizedTriple& nt) {
    require_maps(nt);
    const ExactReal& a = nt.a;
    ExactReal zero = a.with(0);
    PeriodicSet low = e.restrict(zero, nt.forward_hole_lo()).shift(forward_shift(nt) + nt.b);
    PeriodicSet fixed = e.restrict(nt.forward_hole_lo(), nt.forward_hole_hi());
    PeriodicSet high = e.restrict(nt.forward_hole_hi(), a).shift(forward_shift(nt));
    return low.unite(fixed).unite(high);
}

PeriodicSet image_Rt(const PeriodicSet& e, const NormalizedTriple& nt) {
    require_maps(nt);
    ExactReal start = nt.c - nt.a;
    ExactReal mid_lo = nt.c - nt.c0;
    ExactReal mid_hi = nt.c + nt.b - nt.c0 - nt.a;
    PeriodicSet first = e.restrict(start, mid_lo).shift(-forward_shift(nt));
    PeriodicSet fixed = e.restrict(mid_lo, mid_hi);
    PeriodicSet last = e.restrict(mid_hi, nt.c).shift(-forward_shift(nt) - nt.b);
    return first.unite(fixed).unite(last);
}

std::vector<ExactReal> forward_orbit(const NormalizedTriple& nt, const ExactReal& t, std::int64_t steps) {
    require_maps(nt);
    std::vector<ExactReal> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    ExactReal r = mod(t, nt.a);
    out.push_back(r);
    for (std::int64_t k = 0; k < steps; ++k) {
        r = mod(apply_R(r, nt), nt.a);
        out.push_back(r);
    }
    return out;
}

InvariantSetReport propagate_holes(const NormalizedTriple& nt) {
    require_maps(nt);
    const ExactReal& a = nt.a;
    const bool irrational = !nt.rational();
    PeriodicSet fixed = PeriodicSet::single(a, nt.forward_hole_lo(), nt.forward_hole_hi());
    PeriodicSet current = PeriodicSet::single(a, nt.backward_hole_lo(), nt.backward_hole_hi());
    PeriodicSet holes(a);
    InvariantSetReport rep{PeriodicSet(a), {}, std::nullopt, std::nullopt, {}, std::nullopt};
    const std::int64_t cap = step_cap(nt);

    for (int n = 0; !current.empty(); ++n) {
        if (n >= cap) throw IterationCapExceeded("hole propagation exceeded " + std::to_string(cap) + " steps");
        if (irrational) {
            // a single arc that neither wraps the seam nor meets earlier holes
            bool broken = current.intervals().size() != 1 || !current.intersect(holes).empty();
            if (broken) {
                rep.chain.push_back({n, current, HoleStatus::Sentinel});
                return rep;
            }
        }
        PeriodicSet inside = current.intersect(fixed);
        holes = holes.unite(current);
        HoleStatus status = HoleStatus::Propagating;
        if (!inside.empty()) {
            bool whole = inside == current;
            if (irrational) {
                status = current == fixed ? HoleStatus::AbsorbedIntoBlackHole : HoleStatus::Sentinel;
            } else {
                status = whole ? HoleStatus::AbsorbedIntoBlackHole : HoleStatus::Frozen;
            }
        }
        rep.chain.push_back({n, current, status});
        if (status == HoleStatus::Sentinel) return rep;
        current = image_R(current.difference(fixed), nt).difference(holes);
    }

    rep.S = accept_or_empty(nt, holes);
    if (rep.S.empty()) {
        rep.chain.push_back({static_cast<int>(rep.chain.size()), PeriodicSet(a), HoleStatus::Sentinel});
        return rep;
    }
    return surgery_report(nt, rep.S, std::move(rep.chain));
}

InvariantSetReport compute_S(const NormalizedTriple& nt) {
    RegionTag tag = region_tag(nt);
    switch (tag) {
        case RegionTag::V:
        case RegionTag::IX:
            return empty_report(nt);
        case RegionTag::X: {
            InvariantSetReport rep{PeriodicSet::single(nt.a, nt.a.with(0), nt.forward_hole_lo()),
                                   {}, std::nullopt, std::nullopt, {}, std::nullopt};
            return rep;
        }
        case RegionTag::XI: {
            InvariantSetReport rep{PeriodicSet::single(nt.a, nt.c0, nt.a),
                                   {}, std::nullopt, std::nullopt, {}, std::nullopt};
            return rep;
        }
        case RegionTag::XII:
        case RegionTag::XIII:
            return propagate_holes(nt);
        default:
            throw RegionUnsupported("invariant set is not computed for region " + std::string(to_string(tag)));
    }
}

PeriodicSet compute_D(const NormalizedTriple& nt, const PeriodicSet& s) {
    require_maps(nt);
    PeriodicSet d = s.restrict(nt.a.with(0), nt.forward_hole_lo()).intersect(s.shift(-forward_shift(nt)));
    for (std::int64_t j = 1; j < nt.floor_cb; ++j) {
        d = d.unite(s.intersect(s.shift(-(nt.b * j))));
    }
    return d;
}

ExactReal measure_identity_lhs(const NormalizedTriple& nt, const PeriodicSet& s) {
    ExactReal zero = nt.a.with(0);
    ExactReal low = s.restrict(zero, nt.forward_hole_lo()).measure();
    ExactReal high = s.restrict(nt.forward_hole_hi(), nt.a).measure();
    return low * (nt.floor_cb + 1) + high * nt.floor_cb;
}

bool measure_identity(const NormalizedTriple& nt, const PeriodicSet& s) {
    if (s.empty()) throw EmptySet("measure identity needs a non-empty invariant set");
    return measure_identity_lhs(nt, s) == nt.a;
}

ExactReal surgery_map(const PeriodicSet& s, const ExactReal& t) {
    const ExactReal& a = s.period();
    std::int64_t k = floor_div(t, a);
    ExactReal r = t - a * k;
    return s.measure() * k + s.restrict(a.with(0), r).measure();
}

namespace {

std::optional<RationalExtras> rational_extras(const NormalizedTriple& nt, const PeriodicSet& s,
                                              const ExactReal& ya) {
    const ExactReal& a = nt.a;
    ExactReal left = nt.forward_hole_lo();
    std::optional<Interval> gap;
    for (const auto& comp : s.complement().circular_components()) {
        if (comp.lo <= left && left < comp.hi) {
            gap = comp;
        } else if (comp.lo <= left + a && left + a < comp.hi) {
            gap = Interval{comp.lo - a, comp.hi - a};
        }
        if (gap) break;
    }
    if (!gap) throw InvariantViolation("forward fixed interval is not inside a hole");
    ExactReal delta = left - gap->lo;
    ExactReal delta_prime = nt.c0 - gap->hi;
    if (sign(delta) != 0 && sign(delta_prime) != 0) {
        throw InvariantViolation("delta and delta' are both nonzero");
    }
    const std::int64_t cap = step_cap(nt) + nt.ratio->p;

    auto first_hit = [&](ExactReal x, const ExactReal& target) -> std::int64_t {
        ExactReal goal = mod(target, a);
        x = mod(x, a);
        for (std::int64_t n = 0; n <= cap; ++n) {
            if (x == goal) return n;
            x = mod(apply_R(x, nt), a);
        }
        throw InvariantViolation("orbit never reaches " + goal.to_string());
    };

    std::int64_t n1 = first_hit(nt.c1 + delta_prime, left - delta);
    ExactReal start = sign(delta) > 0 ? left - delta : nt.c0;
    std::int64_t n2 = first_hit(start, delta_prime);
    ExactReal h = ya / Rational(n1 + n2 + 1);
    return RationalExtras{n1, n2, delta, delta_prime, h};
}

}  // namespace

InvariantSetReport surgery_report(const NormalizedTriple& nt, const PeriodicSet& s,
                                  std::vector<HoleChainStep> chain) {
    if (s.empty()) throw EmptySet("surgery needs a non-empty invariant set");
    InvariantSetReport rep{s, std::move(chain), std::nullopt, std::nullopt, {}, std::nullopt};
    ExactReal ya = s.measure();
    ExactReal theta = surgery_map(s, nt.c1 + nt.b - nt.a);
    rep.ya = ya;
    rep.theta = theta;

    for (const auto& comp : s.complement().circular_components()) {
        rep.marks.hole_marks.push_back(mod(surgery_map(s, comp.lo), ya));
    }
    std::sort(rep.marks.hole_marks.begin(), rep.marks.hole_marks.end());
    rep.marks.hole_marks.erase(std::unique(rep.marks.hole_marks.begin(), rep.marks.hole_marks.end()),
                               rep.marks.hole_marks.end());

    ExactReal step = mod(theta, ya);
    if (nt.rational()) {
        ExactReal g = sign(step) == 0 ? ya : rational_gcd(step, ya);
        rep.marks.generator = g;
        rep.marks.order = to_int64(lattice_index(ya, g).value());
        if (nt.maps_defined()) rep.rational_extras = rational_extras(nt, s, ya);
    } else {
        ExactReal anchor = surgery_map(s, nt.c0);
        const std::int64_t cap = step_cap(nt);
        for (std::int64_t n = 1; n <= cap; ++n) {
            ExactReal mark = mod(step * n, ya);
            rep.marks.rotation_marks.push_back(mark);
            if (mod(step * n - anchor, ya).is_zero()) return rep;
        }
        throw InvariantViolation("rotation marks never reach the fixed interval's mark");
    }
    return rep;
}

ExactReal default_epsilon(const NormalizedTriple& nt) { return (nt.b - nt.a) / Rational(8); }

double bump(const NormalizedTriple& nt, const ExactReal& eps, const ExactReal& t) {
    ExactReal start = nt.forward_hole_lo() - eps;
    ExactReal width = nt.b - nt.a;
    ExactReal u = mod(t - start, nt.a);
    ExactReal len = width + eps;
    if (u >= len) return 0.0;
    if (u < eps) return (u / eps).approx();
    if (u <= width) return 1.0;
    return ((len - u) / eps).approx();
}

double birkhoff_average(const NormalizedTriple& nt, const ExactReal& t, std::int64_t n,
                        const std::optional<ExactReal>& eps_in) {
    require_maps(nt);
    if (n < 1) throw NonPositiveInput("birkhoff_average needs n >= 1");
    ExactReal eps = eps_in ? *eps_in : default_epsilon(nt);
    if (sign(eps) <= 0) throw NonPositiveInput("epsilon must be positive");
    const ExactReal& a = nt.a;
    ExactReal r = mod(t, a);
    const ExactReal first = r;
    double sum = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        if (nt.forward_hole_lo() <= r && r < nt.forward_hole_hi()) {
            double f = bump(nt, eps, r);
            if (k == 0) return f;
            sum += f * static_cast<double>(n - k);
            break;
        }
        if (k > 0 && r == first) {
            // periodic orbit of length k: fold whole periods
            std::int64_t periods = n / k;
            std::int64_t rest = n % k;
            double period_sum = sum;
            double tail = 0.0;
            ExactReal x = first;
            for (std::int64_t j = 0; j < rest; ++j) {
                tail += bump(nt, eps, x);
                x = mod(apply_R(x, nt), a);
            }
            sum = period_sum * static_cast<double>(periods) + tail;
            break;
        }
        sum += bump(nt, eps, r);
        r = mod(apply_R(r, nt), a);
    }
    return sum / static_cast<double>(n);
}

}  // namespace abcframe
