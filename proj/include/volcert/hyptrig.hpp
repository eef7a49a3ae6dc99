#ifndef VOLCERT_HYPTRIG_HPP
#define VOLCERT_HYPTRIG_HPP

#include "volcert/interval.hpp"

namespace volcert {

// Hyperbolic cosines of three pairwise non-adjacent sides of a
// right-angled hexagon.  Each value must lie strictly above 1.
struct HexSides {
    Interval cosh_l;
    Interval cosh_lp;
    Interval cosh_lpp;
};

// Interval enclosures of the elementary transcendentals.  These are built
// from exp/log with a stated 2-step slack budget beyond correct rounding,
// rather than assuming a correctly-rounded libm, then outward-rounded.
Interval exp_i(const Interval& x);
Interval log_i(const Interval& x);
Interval cosh_i(const Interval& x);
Interval sinh_i(const Interval& x);
Interval tanh_i(const Interval& x);

// Enclosure of log(x + sqrt(x^2 - 1)) on x ∩ [1, ∞); lower endpoints
// slightly below 1 are clamped per the usual tolerance rule.
Interval arccosh_i(const Interval& x, double clamp_tol = kDefaultClampTol);

// cosh(x/2) from cosh x, via sqrt((cosh x + 1)/2).
Interval cosh_half(const Interval& cosh_x, double clamp_tol = kDefaultClampTol);

// cosh 2x from cosh x, via 2 cosh^2 x - 1.
Interval cosh_double(const Interval& cosh_x, double clamp_tol = kDefaultClampTol);

// cosh d for the hexagon side abutting those of lengths l and l':
//   cosh d = (cosh l cosh l' + cosh l'') / (sinh l sinh l')
// with sinh recovered as sqrt(cosh^2 - 1).
Interval hexagon_rule(const HexSides& s);

// cos of the vertex angle of an equilateral hyperbolic triangle with side
// 2R, as a function of cosh 2R:  cos α = cosh 2R / (cosh 2R + 1).
Interval equilateral_vertex_angle_cos(const Interval& cosh_2R);

// Enclosure of cos on an interval contained in [0, π], where cos is
// monotone decreasing.
Interval cos_on_0_pi(const Interval& x);

// Enclosure of π.
Interval pi_i();

}  // namespace volcert

#endif
