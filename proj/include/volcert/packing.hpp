#ifndef VOLCERT_PACKING_HPP
#define VOLCERT_PACKING_HPP

#include <utility>

#include "volcert/interval.hpp"

namespace volcert {

// Radius bound for n equal disks packed on a genus-2 boundary, derived
// from the Böröczky local-density bound (the equilateral-triangle case).
struct PackingBound {
    int n;
    Interval alpha_min;    // minimal vertex angle of the side-2R equilateral triangle
    Interval cosh_R_max;   // maximal packing radius, cosh form
};

// Minimal vertex angle: the density inequality 2n/a <= 3α/(π - 3α) on a
// surface of area a·π solves to α >= 2nπ/(6n + 3a).  Area defaults to 4π
// (genus 2 by Gauss-Bonnet); only a = 4 is exercised by the certificates.
Interval boroczky_min_angle(int n, double area_over_pi = 4.0);

// Inverts cos α = cosh 2R/(cosh 2R + 1) at the minimal angle, then takes
// the half-angle form.  Requires n >= 2.
PackingBound max_packing_radius(int n, double area_over_pi = 4.0);

// (max cosh d11, min cosh l1): cosh_double of the two-disk radius bound,
// and the cosh l1 at which cosh R reaches that bound.
std::pair<Interval, Interval> borbounds_constants();

}  // namespace volcert

#endif
