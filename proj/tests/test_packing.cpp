#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "volcert/hyptrig.hpp"
#include "volcert/packing.hpp"

using volcert::Interval;
using oracle::Mp;

TEST_CASE("two disks give the pi/6 angle") {
    Interval a = volcert::boroczky_min_angle(2);
    CHECK(oracle::enclosed(a, Mp::pi() / Mp(6.0)));
    CHECK(a.width() < 1e-14);
}

TEST_CASE("four disks give the 2pi/9 angle") {
    Interval a = volcert::boroczky_min_angle(4);
    CHECK(oracle::enclosed(a, Mp(2.0) * Mp::pi() / Mp(9.0)));
    CHECK(a.width() < 1e-14);
}

TEST_CASE("angle bound tends to pi/3 as n grows") {
    Interval a = volcert::boroczky_min_angle(1000000);
    double third = std::acos(-1.0) / 3.0;
    CHECK(a.hi() < third);
    CHECK(third - a.lo() < 1e-5);
}

TEST_CASE("angle bound is increasing in n, radius bound decreasing") {
    double prev_angle = 0.0, prev_cosh = 1e9;
    for (int n = 2; n <= 12; ++n) {
        volcert::PackingBound b = volcert::max_packing_radius(n);
        CHECK(b.n == n);
        CHECK(b.alpha_min.lo() > prev_angle);
        CHECK(b.cosh_R_max.hi() < prev_cosh);
        prev_angle = b.alpha_min.lo();
        prev_cosh = b.cosh_R_max.lo();
    }
}

TEST_CASE("two-disk radius bound is (1+sqrt(3))/sqrt(2)") {
    volcert::PackingBound b = volcert::max_packing_radius(2);
    Mp ref = (Mp(1.0) + Mp(3.0).sqrt()) / Mp(2.0).sqrt();
    CHECK(oracle::enclosed(b.cosh_R_max, ref));
    CHECK(b.cosh_R_max.width() < 1e-13);
}

TEST_CASE("four-disk radius bound is 1/sqrt(2(1-cos(2pi/9)))") {
    volcert::PackingBound b = volcert::max_packing_radius(4);
    Mp one(1.0), two(2.0);
    Mp ref = one / (two * (one - (two * Mp::pi() / Mp(9.0)).cos())).sqrt();
    CHECK(oracle::enclosed(b.cosh_R_max, ref));
    CHECK(b.cosh_R_max.contains(1.4619022000815436));
}

TEST_CASE("radius bound round-trips through the vertex-angle relation") {
    for (int n : {2, 3, 4, 6}) {
        volcert::PackingBound b = volcert::max_packing_radius(n);
        Interval c2r = volcert::cosh_double(b.cosh_R_max);
        Interval cos_back = volcert::equilateral_vertex_angle_cos(c2r);
        Interval cos_ref = volcert::cos_on_0_pi(b.alpha_min);
        CHECK(volcert::intersect(cos_back, cos_ref).has_value());
    }
}

TEST_CASE("borbounds constants") {
    auto [cosh_d11_max, cosh_l1_min] = volcert::borbounds_constants();
    Mp d_ref = Mp(3.0) + Mp(2.0) * Mp(3.0).sqrt();
    Mp l_ref = (Mp(3.0) + Mp(3.0).sqrt()) / Mp(4.0);
    CHECK(oracle::enclosed(cosh_d11_max, d_ref));
    CHECK(oracle::enclosed(cosh_l1_min, l_ref));
    CHECK(cosh_d11_max.width() < 1e-12);
    CHECK(cosh_l1_min.width() < 1e-13);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(volcert::max_packing_radius(1), std::range_error);
    CHECK_THROWS_AS(volcert::boroczky_min_angle(0), std::range_error);
    CHECK_THROWS_AS(volcert::boroczky_min_angle(2, -1.0), std::domain_error);
}
