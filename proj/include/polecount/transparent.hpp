#pragma once

#include "polecount/records.hpp"
#include "polecount/specfun.hpp"

#include <vector>

namespace polecount {

struct Rect {
    double lo_re = 0.0, hi_re = 0.0, lo_im = 0.0, hi_im = 0.0;
    double width() const { return hi_re - lo_re; }
    double height() const { return hi_im - lo_im; }
};

struct SearchBox {
    Rect box;
    int winding = 0;
    int depth = 0;
};

// Transmission determinant (67) for the unit interface:
//   c h_l^{(2)'}(lambda) j_l(lambda/c) - h_l^{(2)}(lambda) j_l'(lambda/c),
// j_l(t) = t^{1-n/2} J_{l+n/2-1}(t), h_l^{(2)}(t) = t^{1-n/2} H^{(2)}_{l+n/2-1}(t).
// The power prefactors cancel out of the zero set; the root finder works on
// the cylinder form c H' J - H J' which shares the zeros.
cplx transmission_det(int l, int n, double c, cplx lambda);

// Log-derivative form (68): lambda h'(lambda)/h(lambda) - (lambda/c) j'(lambda/c)/j(lambda/c).
cplx transmission_logderiv_gap(int l, int n, double c, cplx lambda);

// Zero count inside the rectangle by adaptive phase continuation of the
// boundary argument.  Throws if the phase cannot be continued (zero too
// close to the contour) or the total does not snap to an integer.
int winding_number(int l, int n, double c, const Rect& box);

// All zeros of the determinant inside the region, each refined by Newton to
// relative residual <= 1e-10.  The region must not contain lambda = 0 (the
// cylinder form has a simple pole there) and its boundary must be clear of
// zeros; a failed contour is retried with a slightly enlarged region.
std::vector<cplx> zeros_in_region(int l, int n, double c, Rect region);

// Every record with |lambda| < r_max over all angular momenta.  Stores the
// upper-half-plane zeros of (67); the physical resonances are their
// conjugates.  Family tags: boundary (near nu * eye boundary) or interior
// (near the real axis).
std::vector<ResonanceRecord> transparent_table(int n, double c, double R0, double r_max);

} // namespace polecount
