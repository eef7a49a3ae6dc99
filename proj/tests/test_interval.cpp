#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "volcert/interval.hpp"

using volcert::Interval;
using oracle::Mp;

namespace {

// Uniform double in [lo, hi].
double rnd(std::mt19937_64& g, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(g);
}

Interval rnd_interval(std::mt19937_64& g, double lo, double hi) {
    double a = rnd(g, lo, hi), b = rnd(g, lo, hi);
    if (a > b) std::swap(a, b);
    return Interval::make(a, b);
}

}  // namespace

TEST_CASE("construction validates endpoints") {
    CHECK_THROWS_AS(Interval::make(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval::make(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval::make(0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    Interval p = Interval::point(3.5);
    CHECK(p.is_point());
    CHECK(p.lo() == 3.5);
}

TEST_CASE("next_up and next_down step one representable value") {
    double x = 1.0;
    CHECK(volcert::next_up(x) > x);
    CHECK(volcert::next_down(x) < x);
    CHECK(volcert::next_up(volcert::next_down(x)) == x);
}

TEST_CASE("basic arithmetic encloses exact values") {
    Interval a = Interval::point(0.1);
    Interval b = Interval::point(0.2);
    Interval s = a + b;
    CHECK(s.contains(0.1 + 0.2));
    CHECK(s.lo() < 0.30000000000000005);
    CHECK(s.hi() > 0.29999999999999993);

    Interval q = Interval::point(1.0) / Interval::point(3.0);
    CHECK(q.contains(1.0 / 3.0));
    CHECK(q.width() > 0.0);
    CHECK(q.width() < 1e-15);
}

TEST_CASE("division by an interval containing zero throws") {
    CHECK_THROWS_AS(Interval::point(1.0) / Interval::make(-1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(Interval::point(1.0) / Interval::point(0.0), std::domain_error);
}

TEST_CASE("enclosure property versus multiprecision oracle") {
    std::mt19937_64 g(20240817);
    const int kSamples = 100000;
    int bad = 0;
    for (int i = 0; i < kSamples; ++i) {
        double x = rnd(g, -1e3, 1e3);
        double y = rnd(g, -1e3, 1e3);
        Interval ix = Interval::point(x), iy = Interval::point(y);
        Mp mx(x), my(y);
        if (!oracle::enclosed(ix + iy, mx + my)) ++bad;
        if (!oracle::enclosed(ix - iy, mx - my)) ++bad;
        if (!oracle::enclosed(ix * iy, mx * my)) ++bad;
        if (y != 0.0 && !oracle::enclosed(ix / iy, mx / my)) ++bad;
        if (x > 0.0 && !oracle::enclosed(volcert::sqrt(ix), mx.sqrt())) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("inclusion monotonicity on nested operands") {
    std::mt19937_64 g(7);
    const int kPairs = 10000;
    for (int i = 0; i < kPairs; ++i) {
        Interval outer = rnd_interval(g, 0.5, 50.0);
        // inner interval strictly inside outer
        double m = outer.mid();
        double r = (outer.hi() - outer.lo()) / 4.0;
        Interval inner = Interval::make(m - r, m + r);
        Interval other = rnd_interval(g, 0.5, 50.0);

        CHECK((outer + other).contains(inner + other));
        CHECK((outer * other).contains(inner * other));
        CHECK((outer - other).contains(inner - other));
        CHECK((outer / other).contains(inner / other));
        CHECK(volcert::sqrt(outer).contains(volcert::sqrt(inner)));
    }
}

TEST_CASE("width stays controlled through an arithmetic chain") {
    Interval x = Interval::point(1.3);
    Interval acc = x;
    for (int i = 0; i < 1000; ++i) {
        acc = acc * x + Interval::point(0.5);
        acc = acc / Interval::point(1.3);
        acc = acc - Interval::point(0.5 / 1.3);
    }
    // 4 outward-rounded ops per iteration; relative width grows ~ linearly.
    CHECK(acc.width() / std::abs(acc.mid()) < 1e-11);
}

TEST_CASE("sqrt clamps tiny negative dips and rejects real ones") {
    Interval r = volcert::sqrt(Interval::make(-1e-18, 4.0));
    CHECK(r.lo() == 0.0);
    CHECK(r.contains(2.0));
    CHECK_THROWS_AS(volcert::sqrt(Interval::make(-1.0, -0.5)), std::domain_error);
    CHECK_THROWS_AS(volcert::sqrt(Interval::make(-1e-3, 1.0)), std::domain_error);
}

TEST_CASE("from_decimal is exact when representable, tight otherwise") {
    CHECK(Interval::from_decimal("1.5").is_point());
    CHECK(Interval::from_decimal("2").is_point());
    CHECK(Interval::from_decimal("-0.25").is_point());
    CHECK(Interval::from_decimal("6.89").contains(6.89));
    CHECK_FALSE(Interval::from_decimal("6.89").is_point());

    Interval t = Interval::from_decimal("0.1");
    Mp tenth("0.1");
    CHECK(oracle::enclosed(t, tenth));
    // tightest: nearest double plus one step each way at most (width itself
    // reports one conservative step more)
    CHECK(t.width() <= 3 * (volcert::next_up(0.1) - 0.1));

    Interval rng = Interval::from_decimal("1.215", "1.220");
    CHECK(rng.lo() <= 1.215);
    CHECK(rng.hi() >= 1.220);

    CHECK_THROWS_AS(Interval::from_decimal("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Interval::from_decimal(""), std::invalid_argument);
}

TEST_CASE("decimal enclosure versus oracle on random literals") {
    std::mt19937_64 g(99);
    for (int i = 0; i < 2000; ++i) {
        char buf[64];
        double v = rnd(g, -100.0, 100.0);
        snprintf(buf, sizeof(buf), "%.6f", v);
        Interval iv = Interval::from_decimal(buf);
        Mp mv(buf);
        CHECK(oracle::enclosed(iv, mv));
    }
}

TEST_CASE("bisect halves cover the original") {
    Interval a = Interval::make(1.0, 4.0);
    auto [l, r] = a.bisect();
    CHECK(l.lo() == a.lo());
    CHECK(r.hi() == a.hi());
    CHECK(l.hi() == r.lo());
    CHECK(a.contains(l));
    CHECK(a.contains(r));
}

TEST_CASE("hull and intersect") {
    Interval a = Interval::make(0.0, 2.0), b = Interval::make(1.0, 3.0);
    Interval h = volcert::hull(a, b);
    CHECK(h.lo() == 0.0);
    CHECK(h.hi() == 3.0);
    auto x = volcert::intersect(a, b);
    REQUIRE(x.has_value());
    CHECK(x->lo() == 1.0);
    CHECK(x->hi() == 2.0);
    CHECK_FALSE(volcert::intersect(a, Interval::make(5.0, 6.0)).has_value());
}

TEST_CASE("json round trip is lossless") {
    std::mt19937_64 g(4242);
    for (int i = 0; i < 200; ++i) {
        Interval a = rnd_interval(g, -1e6, 1e6);
        Interval back = Interval::from_json(a.to_json());
        CHECK(back.lo() == a.lo());
        CHECK(back.hi() == a.hi());
    }
    Interval tiny = Interval::make(volcert::next_down(1.0), volcert::next_up(1.0));
    Interval back = Interval::from_json(tiny.to_json());
    CHECK(back.lo() == tiny.lo());
    CHECK(back.hi() == tiny.hi());
}
