#pragma once

#include "bgeom/hyp/constants.hpp"

namespace bgeom::hyp {

/// Largest local bilipschitz constant of the affine stretch
/// [0,r]x[0,c] -> [0,r']x[0,c'] between band metrics dx^2 + cosh^2(x) dy^2,
/// sampled on `samples` points across the band width.
double band_stretch_bilipschitz(double r, double c, double r_prime, double c_prime, int samples = 4001);

/// Equality case of the displacement bound for a point at distance r from
/// the axis of a translation of length ell: 2 asinh(sinh(ell/2) cosh r).
double curve_shorten_displacement(double ell, double r);

/// Displacement along the t-equidistant of the axis for complex translation
/// length ell + i theta.
double equidistant_displacement(double ell, double theta, double t);

/// max(0, log(eps0/eps)/2 - c). Requires 0 < eps <= eps0.
double tube_radius_lower(double eps, const ConstantsProfile& profile);

struct TruncationBudget {
  double L = 0.0;
  double L2 = 0.0;
};

/// L = 3 pi |chi| / eps and L2 = 2 (L + eps).
TruncationBudget truncation_budget(int chi, double eps);

/// Diameter of N_b(A) cap N_b(B) for half-planes A, B at distance r0,
/// by sampling the boundary of the intersection. Zero when it is empty.
double half_space_juncture_diam(double b, double r0, int samples = 801);

/// 2 log(2/sqrt 3).
double tripod_lower_const();

}  // namespace bgeom::hyp
