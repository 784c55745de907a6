#pragma once

#include <map>
#include <string>
#include <utility>

namespace polecount {

// Weyl constant tau_n = (2 pi)^{-n} vol^2(B(0,1)).
double tau(int n);

// Sharp sphere counting constant by the area route: the integral of
// [-Re rho]_+ / |z|^{n+2} over the upper half-plane, radial variable outer,
// angular inner, minus 2 tau_n.
double a_area(int n, double rel_tol = 1e-6);

// Same constant as a line integral over the upper eye boundary,
// (2/pi) (1/(n (n-2)!)) int |1-z^2|^{1/2} / |z|^{n+1} |dz|.
double a_boundary(int n, double rel_tol = 1e-8);

// int_1^inf sqrt(t^2-1) t^{-(n+1)} dt: quadrature (lhs) against the Gamma
// closed form sqrt(pi) Gamma((n-1)/2) / (2 n Gamma(n/2)) (rhs).
std::pair<double, double> radial_identity(int n);

// |(2/(pi n (n-2)!)) * radial_rhs - tau_n| / tau_n; an exact identity via
// the Legendre duplication formula, so the residual is rounding noise.
double duplication_residual(int n);

// (n / 2 pi) int_0^pi h_n(theta) dtheta - 2 tau_n: the same area integral
// with the opposite integration order; used as a consistency route.
double a_area_h_route(int n, double rel_tol = 1e-6);

struct ConstantReport {
    int n = 3;
    double tau_n = 0.0;
    double a_area = 0.0;
    double a_boundary = 0.0;
    double radial_integral = 0.0;
    std::map<std::string, double> identity_residuals;
};

ConstantReport constant_report(int n, double rel_tol = 1e-6);

} // namespace polecount
