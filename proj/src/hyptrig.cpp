#include "volcert/hyptrig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace volcert {

namespace {

// libm exp/log/cos are assumed faithful to within 2 representable steps of
// the correctly-rounded result; endpoints step out by that budget.
constexpr int kLibmSlack = 2;

double steps_down(double x, int n) {
    for (int i = 0; i < n; ++i) x = next_down(x);
    return x;
}

double steps_up(double x, int n) {
    for (int i = 0; i < n; ++i) x = next_up(x);
    return x;
}

Interval monotone_inc(double flo, double fhi) {
    return IntervalInternal::raw(steps_down(flo, kLibmSlack), steps_up(fhi, kLibmSlack));
}

}  // namespace

Interval exp_i(const Interval& x) {
    double lo = steps_down(std::exp(x.lo()), kLibmSlack);
    if (lo < 0.0) lo = 0.0;  // exp > 0
    return IntervalInternal::raw(lo, steps_up(std::exp(x.hi()), kLibmSlack));
}

Interval log_i(const Interval& x) {
    if (x.lo() <= 0.0) {
        throw std::domain_error("log of an interval reaching 0");
    }
    return monotone_inc(std::log(x.lo()), std::log(x.hi()));
}

Interval cosh_i(const Interval& x) {
    Interval e = exp_i(x);
    Interval em = exp_i(-x);
    Interval r = (e + em) / Interval::make(2.0, 2.0);
    double lo = r.lo() < 1.0 ? 1.0 : r.lo();  // cosh >= 1, attained at 0
    if (x.contains(0.0)) lo = 1.0;
    return IntervalInternal::raw(lo, r.hi());
}

Interval sinh_i(const Interval& x) {
    Interval e = exp_i(x);
    Interval em = exp_i(-x);
    Interval r = (e - em) / Interval::make(2.0, 2.0);
    // sinh is odd and increasing; keep the sign information exact.
    double lo = r.lo(), hi = r.hi();
    if (x.lo() >= 0.0 && lo < 0.0) lo = 0.0;
    if (x.hi() <= 0.0 && hi > 0.0) hi = 0.0;
    return IntervalInternal::raw(lo, hi);
}

Interval tanh_i(const Interval& x) {
    Interval r = sinh_i(x) / cosh_i(x);
    auto clipped = intersect(r, Interval::make(-1.0, 1.0));
    return clipped ? *clipped : r;
}

Interval arccosh_i(const Interval& x, double clamp_tol) {
    if (x.hi() < 1.0) {
        throw std::domain_error("arccosh of an interval below 1");
    }
    double lo = x.lo();
    if (lo < 1.0) {
        if (lo < 1.0 - clamp_tol * std::max(1.0, std::abs(x.hi()))) {
            throw std::domain_error("arccosh lower endpoint below clamp tolerance");
        }
        lo = 1.0;
    }
    Interval xc = Interval::make(lo, x.hi());
    Interval root = sqrt(xc * xc - Interval::point(1.0), clamp_tol);
    Interval r = log_i(xc + root);
    double rlo = r.lo() < 0.0 ? 0.0 : r.lo();  // arccosh >= 0 on [1, inf)
    return IntervalInternal::raw(rlo, r.hi());
}

namespace {

// Clamp-tolerance check shared by the cosh-coordinate helpers: the input is
// a hyperbolic cosine, so values below 1 beyond tolerance are hard errors.
Interval clamp_cosh_domain(const Interval& cosh_x, double clamp_tol, const char* what) {
    if (cosh_x.hi() < 1.0) {
        throw std::domain_error(std::string(what) + " input below 1");
    }
    double lo = cosh_x.lo();
    if (lo < 1.0) {
        if (lo < 1.0 - clamp_tol * std::max(1.0, std::abs(cosh_x.hi()))) {
            throw std::domain_error(std::string(what) + " lower endpoint below clamp tolerance");
        }
        lo = 1.0;
    }
    return Interval::make(lo, cosh_x.hi());
}

}  // namespace

Interval cosh_half(const Interval& cosh_x, double clamp_tol) {
    Interval xc = clamp_cosh_domain(cosh_x, clamp_tol, "cosh_half");
    Interval r = sqrt((xc + Interval::point(1.0)) / Interval::point(2.0), clamp_tol);
    return IntervalInternal::raw(std::max(r.lo(), 1.0), r.hi());
}

Interval cosh_double(const Interval& cosh_x_in, double clamp_tol) {
    Interval cosh_x = clamp_cosh_domain(cosh_x_in, clamp_tol, "cosh_double");
    Interval r = Interval::point(2.0) * cosh_x * cosh_x - Interval::point(1.0);
    return IntervalInternal::raw(std::max(r.lo(), 1.0), r.hi());
}

namespace {

Interval sinh_from_cosh(const Interval& cosh_x) {
    return sqrt(cosh_x * cosh_x - Interval::point(1.0));
}

}  // namespace

Interval hexagon_rule(const HexSides& s) {
    if (s.cosh_l.lo() <= 1.0 || s.cosh_lp.lo() <= 1.0 || s.cosh_lpp.lo() <= 1.0) {
        throw std::domain_error("hexagon_rule requires cosh values strictly above 1");
    }
    Interval num = s.cosh_l * s.cosh_lp + s.cosh_lpp;
    Interval den = sinh_from_cosh(s.cosh_l) * sinh_from_cosh(s.cosh_lp);
    return num / den;
}

Interval equilateral_vertex_angle_cos(const Interval& cosh_2R) {
    if (cosh_2R.hi() < 1.0) {
        throw std::domain_error("equilateral_vertex_angle_cos input below 1");
    }
    Interval r = cosh_2R / (cosh_2R + Interval::point(1.0));
    // cosh 2R / (cosh 2R + 1) lies in [1/2, 1) for cosh 2R >= 1.
    auto clipped = intersect(r, Interval::make(0.5, 1.0));
    return clipped ? *clipped : r;
}

Interval cos_on_0_pi(const Interval& x) {
    if (x.lo() < -1e-15 || x.hi() > std::numbers::pi + 1e-15) {
        throw std::domain_error("cos_on_0_pi input outside [0, pi]");
    }
    double lo = steps_down(std::cos(x.hi()), kLibmSlack);
    double hi = steps_up(std::cos(x.lo()), kLibmSlack);
    if (lo < -1.0) lo = -1.0;
    if (hi > 1.0) hi = 1.0;
    return IntervalInternal::raw(lo, hi);
}

Interval pi_i() {
    double p = std::numbers::pi;
    return IntervalInternal::raw(next_down(p), next_up(p));
}

}  // namespace volcert
