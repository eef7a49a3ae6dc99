#include "volcert/packing.hpp"

#include <stdexcept>

#include "volcert/hyptrig.hpp"

namespace volcert {

Interval boroczky_min_angle(int n, double area_over_pi) {
    if (n < 1) {
        throw std::range_error("boroczky_min_angle requires n >= 1");
    }
    if (!(area_over_pi > 0.0)) {
        throw std::domain_error("surface area must be positive");
    }
    Interval nn = Interval::point(static_cast<double>(n));
    Interval a = Interval::point(area_over_pi);
    Interval two = Interval::point(2.0);
    Interval three = Interval::point(3.0);
    Interval six = Interval::point(6.0);
    return two * nn * pi_i() / (six * nn + three * a);
}

PackingBound max_packing_radius(int n, double area_over_pi) {
    if (n < 2) {
        throw std::range_error("max_packing_radius requires n >= 2");
    }
    Interval alpha = boroczky_min_angle(n, area_over_pi);
    Interval cos_a = cos_on_0_pi(alpha);
    Interval one = Interval::point(1.0);
    Interval den = one - cos_a;
    if (den.lo() <= 0.0) {
        throw std::domain_error("degenerate packing angle");
    }
    Interval cosh_2R = cos_a / den;
    Interval cosh_R = cosh_half(cosh_2R);
    return PackingBound{n, alpha, cosh_R};
}

std::pair<Interval, Interval> borbounds_constants() {
    Interval cosh_R = max_packing_radius(2).cosh_R_max;
    Interval cosh_d11 = cosh_double(cosh_R);
    // Invert cosh R = sqrt(1 + 1/(2 cosh l1 - 2)):
    //   cosh l1 = 1 + 1/(2 (cosh^2 R - 1)).
    Interval one = Interval::point(1.0);
    Interval two = Interval::point(2.0);
    Interval cosh_l1 = one + one / (two * (cosh_R * cosh_R - one));
    return {cosh_d11, cosh_l1};
}

}  // namespace volcert
