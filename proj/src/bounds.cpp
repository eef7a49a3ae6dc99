#include "volcert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace volcert {

namespace {

// Frozen constants, stored as the nearest double and widened one step each
// way.  Containment of the exact values is re-checked against the
// multiprecision oracle in the test suite.
constexpr double kCos2Pi9 = 0.7660444431189780;       // cos(2*pi/9)
constexpr double kCosh2Rpp = 3.2743160852065152;      // cos(2pi/9)/(1-cos(2pi/9))
constexpr double kCoshRpp = 1.4619022000815436;       // 1/sqrt(2(1-cos(2pi/9)))
constexpr double kLmThreshold = 1.4396926207859084;   // cos(2pi/9)/(2cos(2pi/9)-1)

Interval tight_const(double nearest) {
    return IntervalInternal::raw(next_down(nearest), next_up(nearest));
}

Interval imin(const Interval& a, const Interval& b) {
    return IntervalInternal::raw(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval imax(const Interval& a, const Interval& b) {
    return IntervalInternal::raw(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval sinh_from_cosh(const Interval& cosh_x) {
    return sqrt(cosh_x * cosh_x - Interval::point(1.0));
}

const Interval kOne = Interval::point(1.0);
const Interval kTwo = Interval::point(2.0);
const Interval kThree = Interval::point(3.0);

// tanh^2 l1 = (c^2 - 1) / c^2.
Interval tanh_sq(const Interval& c) {
    return (c * c - kOne) / (c * c);
}

Interval cosh_R_plus_Rprime(const Interval& cr) {
    Interval crp = kThree - cr;
    return cr * crp + sinh_from_cosh(cr) * sinh_from_cosh(crp);
}

}  // namespace

std::string quantity_name(QuantityId id) {
    switch (id) {
        case QuantityId::R: return "R";
        case QuantityId::Rp: return "R'";
        case QuantityId::Rpp: return "R''";
        case QuantityId::A: return "A";
        case QuantityId::E: return "E";
        case QuantityId::F: return "F";
        case QuantityId::L: return "L";
        case QuantityId::M: return "M";
        case QuantityId::Ell1Half: return "l1/2";
        case QuantityId::MufVol: return "muffin";
        case QuantityId::Area: return "area";
        case QuantityId::Q: return "Q";
    }
    return "?";
}

CoshL1 CoshL1::checked(const Interval& c) {
    if (c.lo() < genus2_floor().lo()) {
        throw std::domain_error("cosh l1 below the genus-2 floor (3+sqrt(3))/4");
    }
    return CoshL1{c};
}

Interval genus2_floor() {
    return (kThree + sqrt(Interval::point(3.0))) / Interval::point(4.0);
}

Interval lm_threshold() {
    return tight_const(kLmThreshold);
}

Interval cosh_R(const CoshL1& c1) {
    Interval den = kTwo * c1.c - kTwo;
    if (den.lo() <= 0.0) {
        throw std::domain_error("cosh_R requires cosh l1 strictly above 1");
    }
    return sqrt(kOne + kOne / den);
}

Interval cosh_Rprime(const Interval& cosh_R_val) {
    return kThree - cosh_R_val;
}

Interval cosh_Rpp() {
    return tight_const(kCoshRpp);
}

Interval cosh_A(const CoshL1& c1) {
    return sqrt(Interval::point(2.0) / kThree * (c1.c + kOne));
}

Interval cosh_E(const CoshL1& c1) {
    Interval crr = cosh_R_plus_Rprime(cosh_R(c1));
    Interval den = crr * crr * tanh_sq(c1.c) - kOne;
    if (den.lo() <= 0.0) {
        throw std::domain_error("cosh_E denominator not positive (bound vacuous here)");
    }
    return kTwo / den + kOne;
}

Interval cosh_F(const CoshL1& c1) {
    Interval c2rp = cosh_double(cosh_Rprime(cosh_R(c1)));
    Interval den = c2rp - kOne;
    if (den.lo() <= 0.0) {
        throw std::domain_error("cosh_F denominator not positive");
    }
    return sqrt((c1.c + kOne) / den + kOne);
}

namespace {

void require_lm_range(const CoshL1& c1) {
    if (c1.c.hi() > lm_threshold().lo()) {
        throw std::range_error("cosh l1 exceeds the four-disk range for L/M");
    }
}

}  // namespace

Interval cosh_L(const CoshL1& c1) {
    require_lm_range(c1);
    Interval c2rpp = tight_const(kCosh2Rpp);
    Interval den = c2rpp * c2rpp * tanh_sq(c1.c) - kOne;
    if (den.lo() <= 0.0) {
        throw std::domain_error("cosh_L denominator not positive");
    }
    return kTwo / den + kOne;
}

Interval cosh_M(const CoshL1& c1) {
    require_lm_range(c1);
    Interval c2rpp = tight_const(kCosh2Rpp);
    return sqrt((c1.c + kOne) / (c2rpp - kOne) + kOne);
}

Interval ell2_lower(const CoshL1& c1) {
    Interval best = c1.c;  // l2 >= l1 by definition
    best = imax(best, imin(cosh_E(c1), cosh_F(c1)));
    if (c1.c.hi() <= lm_threshold().lo()) {
        best = imax(best, imin(cosh_L(c1), cosh_M(c1)));
    }
    return best;
}

Interval muffin_volume(const CoshL1& c1) {
    Interval cr = cosh_R(c1);
    Interval acp = arccosh_i((Interval::point(4.0) * c1.c + kOne) / kThree);
    Interval l1 = arccosh_i(c1.c);
    return pi_i() * (cr * acp - l1);
}

Interval boundary_area_outside_disks(const CoshL1& c1) {
    return Interval::point(4.0) * pi_i() * (kTwo - cosh_R(c1));
}

Interval collar_volume(const Interval& area, const Interval& h) {
    if (area.lo() < 0.0 || h.lo() < 0.0) {
        throw std::domain_error("collar_volume requires nonnegative area and height");
    }
    Interval two_h = kTwo * h;
    return area * (two_h + sinh_i(two_h)) / Interval::point(4.0);
}

HProfile h_profile(const CoshL1& c1, double tie_tol) {
    Interval a_len = arccosh_i(cosh_A(c1));

    Interval cE = cosh_E(c1);
    Interval cF = cosh_F(c1);
    Interval ef = imin(cE, cF);

    bool lm_ok = c1.c.hi() <= lm_threshold().lo();
    Interval cL, cM, lm;
    if (lm_ok) {
        cL = cosh_L(c1);
        cM = cosh_M(c1);
        lm = imin(cL, cM);
    }

    Interval ell2 = imax(c1.c, ef);
    if (lm_ok) ell2 = imax(ell2, lm);
    Interval l2_half = arccosh_i(ell2) / kTwo;

    Interval h = imin(a_len, l2_half);

    std::vector<QuantityId> active;
    double hlo = h.lo();
    if (a_len.lo() <= hlo + tie_tol) active.push_back(QuantityId::A);
    if (l2_half.lo() <= hlo + tie_tol) {
        // which candidate drove the lower bound on l2
        double e2lo = ell2.lo();
        if (c1.c.lo() >= e2lo - tie_tol) active.push_back(QuantityId::Ell1Half);
        if (ef.lo() >= e2lo - tie_tol) {
            if (cE.lo() <= ef.lo() + tie_tol) active.push_back(QuantityId::E);
            if (cF.lo() <= ef.lo() + tie_tol) active.push_back(QuantityId::F);
        }
        if (lm_ok && lm.lo() >= e2lo - tie_tol) {
            if (cL.lo() <= lm.lo() + tie_tol) active.push_back(QuantityId::L);
            if (cM.lo() <= lm.lo() + tie_tol) active.push_back(QuantityId::M);
        }
    }
    if (active.empty()) active.push_back(QuantityId::A);
    return HProfile{h, std::move(active)};
}

VolumeBound km_volume_lower(const CoshL1& c1, double tie_tol) {
    Interval muf = muffin_volume(c1);
    Interval area = boundary_area_outside_disks(c1);
    HProfile hp = h_profile(c1, tie_tol);
    Interval vol = muf + collar_volume(area, hp.h);
    return VolumeBound{vol, muf, area, std::move(hp)};
}

Interval Q_quantity(const CoshL1& c1) {
    Interval acp = arccosh_i((Interval::point(4.0) * c1.c + kOne) / kThree);
    Interval l1 = arccosh_i(c1.c);
    Interval sh = sinh_from_cosh(c1.c);
    return acp - l1 - sh;
}

Interval V_combined(const CoshL1& c1) {
    Interval l1 = arccosh_i(c1.c);
    Interval sh = sinh_from_cosh(c1.c);
    return pi_i() * (l1 + kTwo * sh + cosh_R(c1) * Q_quantity(c1));
}

Interval dQ(const CoshL1& c1) {
    return kOne / cosh_R(c1) - kOne - c1.c;
}

Interval d_coshR(const CoshL1& c1) {
    Interval den = kTwo * c1.c - kTwo;
    Interval sh = sinh_from_cosh(c1.c);
    return -(sh / (den * den * cosh_R(c1)));
}

Interval e_inner_slope(const CoshL1& c1) {
    const Interval& c = c1.c;
    Interval cr = cosh_R(c1);
    Interval crp = kThree - cr;
    Interval shr = sinh_from_cosh(cr);
    Interval shrp = sinh_from_cosh(crp);
    Interval crr = cr * crp + shr * shrp;
    Interval shrr = sinh_from_cosh(crr);

    Interval sh_l1 = sinh_from_cosh(c);
    Interval tanh_l1 = sh_l1 / c;
    Interval tanh2 = tanh_l1 * tanh_l1;
    Interval sech2 = kOne / (c * c);

    // d(R+R')/dl1 = (1 - sinh R / sinh R') * dR/dl1,  dR/dl1 = d(cosh R)/dl1 / sinh R
    Interval dRR = (kOne - shr / shrp) * (d_coshR(c1) / shr);

    Interval term1 = kTwo * crr * shrr * dRR * tanh2;
    Interval term2 = crr * crr * kTwo * tanh_l1 * sech2;
    return term1 + term2;
}

}  // namespace volcert
