#ifndef VOLCERT_BOUNDS_HPP
#define VOLCERT_BOUNDS_HPP

#include <string>
#include <vector>

#include "volcert/hyptrig.hpp"
#include "volcert/interval.hpp"

namespace volcert {

// Named quantities entering the volume bound, all functions of cosh l1.
enum class QuantityId {
    R,
    Rp,
    Rpp,
    A,
    E,
    F,
    L,
    M,
    Ell1Half,
    MufVol,
    Area,
    Q,
};

std::string quantity_name(QuantityId id);

// Value(s) of cosh l1.  Checked construction enforces the genus-2 floor
// cosh l1 >= (3+sqrt(3))/4; anything below requires the unchecked path.
struct CoshL1 {
    Interval c;

    static CoshL1 checked(const Interval& c);
    static CoshL1 unchecked(const Interval& c) { return CoshL1{c}; }
};

// Lower bound for the collar height H, with the set of candidate
// quantities that achieved the minimum within tie tolerance.
struct HProfile {
    Interval h;
    std::vector<QuantityId> active;
};

// Genus-2 floor (3+sqrt(3))/4 for cosh l1.
Interval genus2_floor();

// Largest cosh l1 for which the four-disk radius bound applies:
// cos(2pi/9) / (2 cos(2pi/9) - 1) = 1.4396...
Interval lm_threshold();

// cosh R = sqrt(1 + 1/(2 cosh l1 - 2)); strictly decreasing in cosh l1.
Interval cosh_R(const CoshL1& c1);

// cosh R' = 3 - cosh R.
Interval cosh_Rprime(const Interval& cosh_R_val);

// cosh R'' = 1/sqrt(2 (1 - cos(2pi/9))) = 1.4619...
Interval cosh_Rpp();

// cosh A = sqrt((2/3)(cosh l1 + 1)); increasing in cosh l1.
Interval cosh_A(const CoshL1& c1);

// cosh E = 2 / (cosh^2(R+R') tanh^2 l1 - 1) + 1, with
// cosh(R+R') = cosh R cosh R' + sinh R sinh R' and sinh = sqrt(cosh^2-1).
Interval cosh_E(const CoshL1& c1);

// cosh F = sqrt((cosh l1 + 1)/(cosh 2R' - 1) + 1).
Interval cosh_F(const CoshL1& c1);

// cosh L = 2 / (cosh^2(2R'') tanh^2 l1 - 1) + 1.  Requires the whole
// argument range to sit below lm_threshold().
Interval cosh_L(const CoshL1& c1);

// cosh M = sqrt((cosh l1 + 1)/(cosh 2R'' - 1) + 1).  Same range condition.
Interval cosh_M(const CoshL1& c1);

// Lower bound for cosh l2: max of cosh l1, min{cosh E, cosh F}, and
// min{cosh L, cosh M} when the range condition holds.
Interval ell2_lower(const CoshL1& c1);

// Muffin volume pi [cosh R arccosh((4 cosh l1 + 1)/3) - l1]; decreasing.
Interval muffin_volume(const CoshL1& c1);

// 4 pi (2 - cosh R): area of the boundary outside the two radius-R disks.
Interval boundary_area_outside_disks(const CoshL1& c1);

// Collar volume: area * (2H + sinh 2H) / 4.
Interval collar_volume(const Interval& area, const Interval& h);

// Collar-height lower bound and active labels for a given cosh l1 range.
HProfile h_profile(const CoshL1& c1, double tie_tol = 1e-6);

struct VolumeBound {
    Interval vol;
    Interval muffin;
    Interval area;
    HProfile h;
};

// vol(N) >= muffin + pi (2 - cosh R)(2H + sinh 2H), H from h_profile.
VolumeBound km_volume_lower(const CoshL1& c1, double tie_tol = 1e-6);

// Volume of the muffin plus a collar of height l1/2:
// V = pi [l1 + 2 sinh l1 + cosh R (arccosh((4 cosh l1 + 1)/3) - l1 - sinh l1)].
Interval V_combined(const CoshL1& c1);

// Q = arccosh((4 cosh l1 + 1)/3) - l1 - sinh l1.
Interval Q_quantity(const CoshL1& c1);

// dQ/dl1 = 1/cosh R - 1 - cosh l1; strictly negative.
Interval dQ(const CoshL1& c1);

// d(cosh R)/dl1 = -sinh l1 / ((2 cosh l1 - 2)^2 cosh R); strictly negative.
Interval d_coshR(const CoshL1& c1);

// d/dl1 of cosh^2(R+R') tanh^2 l1, the inner quantity of cosh E.  Positive
// sign over a range certifies that cosh E is decreasing there.
Interval e_inner_slope(const CoshL1& c1);

}  // namespace volcert

#endif
