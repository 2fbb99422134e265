#include <random>

#include "doctest.h"
#include "fixtures.hpp"

#include "abcframe/errors.hpp"
#include "abcframe/periodic_set.hpp"

using namespace abcframe;
using fixtures::rat;
using fixtures::rational_set;

TEST_CASE("measure of the 77/17 invariant set") {
    PeriodicSet s = rational_set(13, 17, {{2, 3}, {9, 10}, {12, 13}}, 17);
    CHECK(s.measure() == rat(3, 17));
    CHECK(fixtures::counted_measure(s, 17) == fixtures::frac(3, 17));
}

TEST_CASE("complement of the empty set is one period") {
    PeriodicSet e(rat(13, 17));
    PeriodicSet c = e.complement();
    REQUIRE(c.intervals().size() == 1);
    CHECK(c.intervals()[0].lo == rat(0));
    CHECK(c.intervals()[0].hi == rat(13, 17));
}

TEST_CASE("intersection with a window") {
    PeriodicSet s = rational_set(13, 17, {{2, 3}, {9, 10}, {12, 13}}, 17);
    PeriodicSet w = s.restrict(rat(0), rat(5, 17));
    CHECK(w == rational_set(13, 17, {{2, 3}}, 17));
}

TEST_CASE("shift wraps across the seam and re-splits") {
    PeriodicSet s = rational_set(13, 17, {{10, 12}}, 17);
    PeriodicSet t = s.shift(rat(2, 17));
    CHECK(t == rational_set(13, 17, {{0, 1}, {12, 13}}, 17));
    REQUIRE(t.intervals().size() == 2);
    auto comps = t.circular_components();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].lo == rat(12, 17));
    CHECK(comps[0].hi == rat(14, 17));
}

TEST_CASE("touching intervals merge in storage") {
    PeriodicSet s = rational_set(13, 17, {{0, 3}, {7, 10}, {10, 13}}, 17);
    REQUIRE(s.intervals().size() == 2);
    CHECK(s.intervals()[1].lo == rat(7, 17));
    CHECK(s.intervals()[1].hi == rat(13, 17));
}

TEST_CASE("long intervals cover the period") {
    PeriodicSet s = PeriodicSet::single(rat(1), rat(-3, 2), rat(1, 2));
    CHECK(s == PeriodicSet::full(rat(1)));
}

TEST_CASE("contains reduces mod the period") {
    PeriodicSet s = rational_set(13, 17, {{2, 3}}, 17);
    CHECK(s.contains(rat(2, 17)));
    CHECK(s.contains(rat(2, 17) + rat(13, 17) * 5));
    CHECK_FALSE(s.contains(rat(3, 17)));
    CHECK(s.contains(rat(-11, 17)));
    CHECK_FALSE(s.contains(rat(-10, 17)));
}

TEST_CASE("periods must agree") {
    PeriodicSet x(rat(1));
    PeriodicSet y(rat(2));
    CHECK_THROWS_AS(x.unite(y), PeriodMismatch);
    CHECK_THROWS_AS(x.intersect(y), PeriodMismatch);
}

TEST_CASE("irrational endpoints") {
    ExactReal a = fixtures::pi_form(0, 1, 1, 4);
    PeriodicSet s = PeriodicSet::single(a, fixtures::pi_form(18, 1, -23, 4), fixtures::pi_form(11, 1, -7, 2));
    // 18 - 23pi/4 < 0: the arc wraps the seam
    REQUIRE(s.intervals().size() == 2);
    CHECK(s.intervals()[0].lo == a.with(0));
    CHECK(s.intervals()[1].hi == a);
    CHECK(s.measure() == fixtures::pi_form(-7, 1, 9, 4));
}

namespace {

PeriodicSet random_set(std::mt19937& gen, const ExactReal& a, long den) {
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<long> pos(-2 * den, 3 * den);
    std::uniform_int_distribution<long> len(1, den);
    std::vector<Interval> ivs;
    int n = count(gen);
    for (int i = 0; i < n; ++i) {
        ExactReal lo = a * fixtures::frac(pos(gen), den);
        ivs.push_back({lo, lo + a * fixtures::frac(len(gen), 2 * den)});
    }
    return PeriodicSet::from_intervals(a, ivs);
}

}  // namespace

TEST_CASE("set algebra laws on random sets") {
    std::mt19937 gen(3);
    for (ExactReal a : {rat(13, 17), fixtures::pi_form(0, 1, 1, 4)}) {
        for (int i = 0; i < 1000; ++i) {
            PeriodicSet x = random_set(gen, a, 12);
            PeriodicSet y = random_set(gen, a, 12);
            CHECK(x.unite(y).measure() + x.intersect(y).measure() == x.measure() + y.measure());
            CHECK(x.complement().complement() == x);
            CHECK(x.measure() + x.complement().measure() == a);
            ExactReal t = a * fixtures::frac(static_cast<long>(gen() % 97) - 48, 7);
            CHECK(x.shift(t).shift(-t) == x);
            CHECK(x.shift(a) == x);
            CHECK(x.intersect(y).subset_of(x));
            CHECK(x.difference(y).intersect(y).empty());
        }
    }
}
