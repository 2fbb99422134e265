// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

#include "abcframe/classifier.hpp"
#include "abcframe/dynamics.hpp"
#include "abcframe/frame_bounds.hpp"
#include "abcframe_cli/number_expr.hpp"
#include "abcframe_cli/pipelines.hpp"
#include "abcframe_cli/region_sweep.hpp"

using namespace abcframe;
using fixtures::frac;
using fixtures::pi_form;
using fixtures::rat;
using fixtures::rational_set;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

NormalizedTriple r17(long k) { return normalize(rat(13, 17), rat(1), rat(k, 17)); }

NormalizedTriple pi_example() {
    return normalize(pi_form(0, 1, 1, 4), pi_form(1, 1, 0, 1), pi_form(23, 1, -11, 2));
}

Outcome named_verdicts() {
    Outcome o;
    struct Row {
        NormalizedTriple nt;
        Verdict want;
        const char* name;
    };
    std::vector<Row> rows{
        {r17(77), Verdict::Frame, "77/17"},
        {r17(73), Verdict::Frame, "73/17"},
        {normalize(rat(6, 7), rat(1), rat(23, 7)), Verdict::Frame, "6/7 23/7"},
        {pi_example(), Verdict::Frame, "pi/4"},
        {r17(75), Verdict::NotFrame, "75/17"},
        {normalize(rat(3, 4), rat(1), rat(3)), Verdict::NotFrame, "3/4 3"},
    };
    for (const auto& r : rows) o.expect(classify(r.nt).verdict == r.want, r.name);
    return o;
}

Outcome invariant_sets() {
    Outcome o;
    auto pn = pi_example();
    PeriodicSet pi_set = PeriodicSet::from_intervals(
        pn.a, {{pi_form(18, 1, -23, 4), pi_form(11, 1, -7, 2)},
               {pi_form(12, 1, -15, 4), pi_form(5, 1, -3, 2)},
               {pi_form(6, 1, -7, 4), pi_form(17, 1, -21, 4)}});
    o.expect(compute_S(pn).S == pi_set, "pi example");
    o.expect(compute_S(r17(77)).S == rational_set(13, 17, {{2, 3}, {9, 10}, {12, 13}}, 17), "77/17");
    o.expect(compute_S(normalize(rat(6, 7), rat(1), rat(23, 7))).S == rational_set(6, 7, {{2, 3}, {5, 6}}, 7),
             "6/7");
    o.expect(compute_S(r17(73)).S == rational_set(13, 17, {{0, 1}, {7, 8}, {10, 11}}, 17), "73/17");
    o.expect(compute_S(r17(75)).S == rational_set(13, 17, {{0, 3}, {7, 13}}, 17), "75/17");
    return o;
}

Outcome measure_identities() {
    Outcome o;
    struct Row {
        NormalizedTriple nt;
        ExactReal lhs;
        const char* name;
    };
    std::vector<Row> rows{{r17(77), rat(13, 17), "77/17"},
                          {r17(75), rat(39, 17), "75/17"},
                          {normalize(rat(6, 7), rat(1), rat(23, 7)), rat(6, 7), "6/7"}};
    for (const auto& r : rows) {
        PeriodicSet s = compute_S(r.nt).S;
        o.expect(measure_identity_lhs(r.nt, s) == r.lhs, std::string(r.name) + " value");
        bool frame = classify(r.nt).verdict == Verdict::Frame;
        o.expect(measure_identity(r.nt, s) == frame, std::string(r.name) + " verdict");
    }
    return o;
}

Outcome surgery_values() {
    Outcome o;
    auto rep = compute_S(r17(77));
    o.expect(rep.ya && *rep.ya == rat(3, 17), "Ya");
    o.expect(rep.theta && *rep.theta == rat(1, 17), "theta");
    o.expect(rep.marks.order && *rep.marks.order == 3, "mark order");
    o.expect(rep.rational_extras && rep.rational_extras->delta == rat(2, 17), "delta");
    o.expect(rep.rational_extras && rep.rational_extras->delta_prime == rat(0), "delta'");
    return o;
}

Outcome agreement_sweep() {
    Outcome o;
    auto triples = cli::agreement_triples(12, 8);
    auto checks = cli::run_agreement(triples, 1);
    std::size_t bad = 0;
    for (const auto& ck : checks) bad += ck.agree() ? 0 : 1;
    o.expect(bad == 0, std::to_string(bad) + " disagreements");
    o.detail = std::to_string(checks.size()) + " triples, single worker" + (o.ok ? "" : "; " + o.detail);
    return o;
}

Outcome irrational_spots() {
    Outcome o;
    std::size_t total = 0;
    for (auto ctx : {NumberContext::pi(), NumberContext::surd(2), NumberContext::surd(3)}) {
        auto triples = fixtures::irrational_xii(ctx, 50);
        o.expect(triples.size() == 50, "fewer than 50 triples for " + ctx->describe());
        for (const auto& nt : triples) {
            Verdict closed = cond_XII(nt) ? Verdict::NotFrame : Verdict::Frame;
            PeriodicSet s = compute_S(nt).S;
            Verdict dyn = s.empty() || measure_identity(nt, s) ? Verdict::Frame : Verdict::NotFrame;
            o.expect(closed == dyn, "disagreement at c = " + nt.c.to_string());
            o.expect(classify(nt).verdict == closed, "classify differs at c = " + nt.c.to_string());
            ++total;
        }
    }
    if (o.ok) o.detail = std::to_string(total) + " triples";
    return o;
}

// Compact re-run of the randomized invariant suite, 1000 cases per property.
Outcome invariant_suite() {
    Outcome o;
    constexpr int kCases = 1000;
    std::mt19937 gen(7);
    std::vector<NormalizedTriple> maps;
    for (const auto& st : fixtures::rational_sweep(12, 8, {RegionTag::IX, RegionTag::XIII})) maps.push_back(st.nt);
    for (auto ctx : {NumberContext::pi(), NumberContext::surd(2), NumberContext::surd(3)}) {
        for (auto& nt : fixtures::irrational_xii(ctx, 30)) maps.push_back(nt);
    }
    struct WithSet {
        NormalizedTriple nt;
        InvariantSetReport rep;
    };
    std::vector<WithSet> full;
    for (const auto& nt : maps) {
        auto rep = compute_S(nt);
        if (!rep.S.empty()) full.push_back({nt, rep});
    }
    auto pick = [&](auto& v) -> auto& { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(gen)]; };
    std::uniform_int_distribution<long> k60(-600, 600), k100(0, 99);
    auto between = [&](const ExactReal& lo, const ExactReal& hi) { return lo + (hi - lo) * frac(k100(gen), 100); };

    for (int i = 0; i < kCases;) {
        const auto& nt = pick(maps);
        ExactReal t = ExactReal(frac(k60(gen), 60), nt.a.is_rational() ? Rational(0) : frac(k60(gen), 60),
                                nt.a.context()) + nt.a.with(0);
        if (PeriodicSet::single(nt.a, nt.forward_hole_lo(), nt.forward_hole_hi()).contains(t)) continue;
        o.expect(apply_Rt(apply_R(t, nt), nt) == t, "inverse law");
        ++i;
    }
    for (int i = 0; i < kCases; ++i) {
        const auto& w = pick(full);
        std::vector<Interval> pieces;
        for (const auto& comp : w.rep.S.circular_components()) {
            ExactReal x = between(comp.lo, comp.hi), y = between(comp.lo, comp.hi);
            if (y < x) std::swap(x, y);
            if (x == y) y = comp.hi;
            if (k100(gen) < 60) pieces.push_back({x, y});
        }
        PeriodicSet e = PeriodicSet::from_intervals(w.nt.a, pieces);
        o.expect(image_R(e, w.nt).measure() == e.measure(), "measure preservation");
        o.expect(image_R(e, w.nt).subset_of(w.rep.S), "S invariance");
        o.expect(compute_D(w.nt, e).subset_of(e), "D inside its set");
        auto comps = w.rep.S.circular_components();
        const Interval& comp = pick(comps);
        ExactReal t = between(comp.lo, comp.hi);
        ExactReal lhs = surgery_map(w.rep.S, mod(apply_R(t, w.nt), w.nt.a));
        o.expect(mod(lhs - surgery_map(w.rep.S, t) - *w.rep.theta, *w.rep.ya).is_zero(), "conjugacy");
    }
    for (const auto& w : full) {
        o.expect(image_R(w.rep.S, w.nt) == w.rep.S, "S invariance");
        const auto& nt = w.nt;
        PeriodicSet cover = w.rep.S.restrict(nt.a.with(0), nt.forward_hole_lo()).shift(nt.b * nt.floor_cb);
        for (std::int64_t k = 0; k < nt.floor_cb; ++k) cover = cover.unite(w.rep.S.shift(nt.b * k));
        o.expect(cover == PeriodicSet::full(nt.a), "covering");
    }
    std::uniform_int_distribution<long> n(1, 50), d(1, 20);
    for (int i = 0; i < kCases; ++i) {
        ExactReal a = rat(n(gen), d(gen)), b = rat(n(gen), d(gen)), c = rat(n(gen), d(gen));
        Rational s = frac(n(gen), d(gen));
        auto x = classify(a, b, c), y = classify(a * s, b * s, c * s);
        o.expect(x.verdict == y.verdict && x.region == y.region, "dilation");
    }
    if (o.ok) o.detail = std::to_string(full.size()) + " non-empty sets, 1000 cases per property";
    return o;
}

Outcome numeric_trends() {
    Outcome o;
    auto ratio = [](const NormalizedTriple& nt, double& small, double& large) {
        small = numeric_frame_bounds(nt, 8, 32).lower;
        large = numeric_frame_bounds(nt, 8, 8).lower;
        return small / large;
    };
    double a32, a8;
    double good = ratio(r17(77), a32, a8);
    std::ostringstream msg;
    msg << "77/17: A(32)/A(8) = " << a32 << "/" << a8 << " = " << good;
    o.expect(good >= 0.5, "");
    double bad = ratio(r17(75), a32, a8);
    msg << "; 75/17: " << a32 << "/" << a8 << " = " << bad;
    o.expect(bad <= 0.5, "");
    o.detail = msg.str();
    return o;
}

Outcome ergodic() {
    Outcome o;
    auto nine = normalize(rat(7, 9), rat(1), rat(7, 2));
    double avg = birkhoff_average(nine, rat(0), 100000, (nine.b - nine.a) / Rational(8));
    o.expect(avg >= 0.95 && avg <= 1.0, "7/9 average " + std::to_string(avg));
    double zero = birkhoff_average(r17(77), rat(2, 17), 100000, (rat(1) - rat(13, 17)) / Rational(8));
    o.expect(zero == 0.0, "77/17 average " + std::to_string(zero));
    if (o.ok) o.detail = "7/9 average " + std::to_string(avg);
    return o;
}

Outcome region_plot() {
    Outcome o;
    cli::SweepSpec spec;
    spec.q_max = 10;
    spec.c_min = 0;
    spec.c_max = 6;
    auto render = [&] {
        auto grid = cli::region_sweep(spec);
        std::ostringstream csv, ppm;
        cli::write_csv(csv, grid);
        cli::write_ppm(ppm, grid);
        return std::make_tuple(grid, csv.str(), ppm.str());
    };
    auto [grid, csv1, ppm1] = render();
    auto [again, csv2, ppm2] = render();
    o.expect(csv1 == csv2 && ppm1 == ppm2, "outputs differ between runs");
    for (const auto& cell : grid.cells) {
        if (cell.a > cell.c) o.expect(cell.verdict == Verdict::NotFrame, "a > c cell not NotFrame");
        if (cell.a < cell.c && cell.c <= 1) o.expect(cell.verdict == Verdict::Frame, "a < c <= b cell not Frame");
    }
    if (o.ok) o.detail = std::to_string(grid.cells.size()) + " cells, identical bytes";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "named-triple verdicts", 1, named_verdicts},
        {2, "invariant-set fixtures", 60, invariant_sets},
        {3, "measure identity", 60, measure_identities},
        {4, "surgery values", 60, surgery_values},
        {5, "three-pipeline agreement sweep", 300, agreement_sweep},
        {6, "irrational spot agreement", 60, irrational_spots},
        {7, "algebraic invariant suite", 600, invariant_suite},
        {8, "numeric diagnostic trends", 30, numeric_trends},
        {9, "ergodic diagnostic", 10, ergodic},
        {10, "region plot sanity", 120, region_plot},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) {
            o.ok = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
        }
        failed += o.ok ? 0 : 1;
        std::printf("%s %2d %s [%.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.empty() ? "" : ": ",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
