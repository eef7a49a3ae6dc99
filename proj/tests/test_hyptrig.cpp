#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "volcert/hyptrig.hpp"

using volcert::Interval;
using oracle::Mp;

namespace {

double rnd(std::mt19937_64& g, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(g);
}

}  // namespace

TEST_CASE("transcendental enclosures versus multiprecision oracle") {
    std::mt19937_64 g(31337);
    const int kSamples = 100000;
    int bad = 0;
    for (int i = 0; i < kSamples; ++i) {
        double x = rnd(g, -20.0, 20.0);
        Interval ix = Interval::point(x);
        Mp mx(x);
        if (!oracle::enclosed(volcert::exp_i(ix), mx.exp())) ++bad;
        if (!oracle::enclosed(volcert::cosh_i(ix), mx.cosh())) ++bad;
        if (!oracle::enclosed(volcert::sinh_i(ix), mx.sinh())) ++bad;
        if (!oracle::enclosed(volcert::tanh_i(ix), mx.tanh())) ++bad;

        double p = rnd(g, 1e-6, 1e6);
        if (!oracle::enclosed(volcert::log_i(Interval::point(p)), Mp(p).log())) ++bad;

        double c = rnd(g, 1.0, 1e3);
        if (!oracle::enclosed(volcert::arccosh_i(Interval::point(c)), Mp(c).acosh())) ++bad;

        double t = rnd(g, 0.0, 3.14159);
        if (!oracle::enclosed(volcert::cos_on_0_pi(Interval::point(t)), Mp(t).cos())) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("enclosures stay tight at moderate arguments") {
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        Interval c = volcert::cosh_i(Interval::point(x));
        CHECK(c.width() / c.lo() < 1e-13);
        Interval a = volcert::arccosh_i(Interval::point(1.0 + x));
        CHECK(a.width() / a.lo() < 1e-13);
    }
}

TEST_CASE("cosh_i covers the interior minimum when the argument straddles zero") {
    Interval c = volcert::cosh_i(Interval::make(-0.5, 1.0));
    CHECK(c.lo() == 1.0);
    CHECK(c.contains(std::cosh(1.0)));
    CHECK(c.contains(std::cosh(-0.5)));
}

TEST_CASE("arccosh clamps a barely-low endpoint and rejects a real one") {
    Interval a = volcert::arccosh_i(Interval::make(1.0 - 1e-15, 2.0));
    CHECK(a.lo() == 0.0);
    CHECK_THROWS_AS(volcert::arccosh_i(Interval::make(0.5, 2.0)), std::domain_error);
}

TEST_CASE("cosh_half inverts cosh_double on [1, 1e3]") {
    std::mt19937_64 g(11);
    for (int i = 0; i < 1000; ++i) {
        double c = rnd(g, 1.0, 1e3);
        Interval ic = Interval::point(c);
        Interval back = volcert::cosh_half(volcert::cosh_double(ic));
        CHECK(back.contains(c));
        CHECK(back.width() / c < 1e-12);
    }
}

TEST_CASE("cosh_double lower endpoint never dips below 1") {
    Interval d = volcert::cosh_double(Interval::point(1.0));
    CHECK(d.lo() >= 1.0);
    CHECK(d.contains(1.0));
}

TEST_CASE("hexagon rule on the equilateral configuration: cosh d = c/(c-1)") {
    std::mt19937_64 g(2718);
    for (int i = 0; i < 1000; ++i) {
        double c = rnd(g, 1.05, 50.0);
        Interval ic = Interval::point(c);
        volcert::HexSides s{ic, ic, ic};
        Interval d = volcert::hexagon_rule(s);
        Mp mc(c), one(1.0);
        CHECK(oracle::enclosed(d, mc / (mc - one)));
    }
}

TEST_CASE("hexagon rule at the two-disk extremal configuration") {
    // alternating sides all of cosh 3+2*sqrt(3): the abutting side has
    // cosh d = c/(c-1) with c = 6.4641..., i.e. about 1.18301.
    Interval c = Interval::point(3.0) + Interval::point(2.0) * volcert::sqrt(Interval::point(3.0));
    volcert::HexSides s{c, c, c};
    Interval d = volcert::hexagon_rule(s);
    Mp mc = Mp(3.0) + Mp(2.0) * Mp(3.0).sqrt();
    CHECK(oracle::enclosed(d, mc / (mc - Mp(1.0))));
    CHECK(d.contains(1.1830127018922193));
}

TEST_CASE("equilateral vertex angle cosine") {
    // cosh 2R = 3+2*sqrt(3) gives cos(alpha) = sqrt(3)/2.
    Interval c2r = Interval::point(3.0) + Interval::point(2.0) * volcert::sqrt(Interval::point(3.0));
    Interval ca = volcert::equilateral_vertex_angle_cos(c2r);
    CHECK(oracle::enclosed(ca, Mp(3.0).sqrt() / Mp(2.0)));
    // result is always in [1/2, 1) for cosh 2R >= 1
    Interval lo_case = volcert::equilateral_vertex_angle_cos(Interval::point(1.0));
    CHECK(lo_case.contains(0.5));
    CHECK(lo_case.hi() < 0.5 + 1e-15);
}

TEST_CASE("pi enclosure") {
    CHECK(oracle::enclosed(volcert::pi_i(), Mp::pi()));
    CHECK(volcert::pi_i().width() < 1e-15);
}

TEST_CASE("cos_on_0_pi rejects arguments outside [0, pi]") {
    CHECK_THROWS_AS(volcert::cos_on_0_pi(Interval::make(-0.1, 1.0)), std::domain_error);
    CHECK_THROWS_AS(volcert::cos_on_0_pi(Interval::make(3.0, 3.2)), std::domain_error);
}
