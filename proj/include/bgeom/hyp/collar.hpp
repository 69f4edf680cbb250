#pragma once

#include <utility>

namespace bgeom::hyp {

/// Standard collar data for a closed geodesic of length ell.
///
/// w0 is the full embedded collar width, sinh(w0) sinh(ell/2) = 1, and w is
/// the reduced width max(w0/2, w0 - 1) that leaves room in the complement.
/// Boundary lengths are ell cosh(w0) and ell cosh(w).
struct CollarProfile {
  double ell;
  double w0;
  double w;
  double boundary_len_full;
  double boundary_len_reduced;
};

/// Throws DomainError for ell <= 0 or non-finite ell.
CollarProfile collar_profile(double ell);

/// Full collar width w0(ell) = asinh(1 / sinh(ell/2)).
double collar_width_full(double ell);

/// Reduced collar width max(w0/2, w0 - 1).
double collar_width_reduced(double ell);

struct CuspCollarLengths {
  double full;     // horocycle bounding the full cusp collar, exactly 2
  double reduced;  // horocycle one unit deeper, 2/e
};

CuspCollarLengths cusp_collar_lengths();

/// Orthogonal projection length p onto a geodesic of an arc tangent to the
/// w-equidistant and running to infinity: sinh(w) sinh(p) = 1.
double collar_crossing_projection(double w);

struct TwistRatioMax {
  double ratio_max;   // sup over ell of p(w(ell)) / ell
  double w0_argmax;   // full collar width at the maximizer
  double ell_argmax;
};

/// Maximizes p/ell over ell in (0, inf), parametrized by w0. The function has
/// a kink at w0 = 2 where the reduced width switches branch; the search
/// brackets on a grid and refines by golden section.
TwistRatioMax max_twist_ratio();

/// p(w(ell)) / ell for a given full width w0.
double twist_ratio_at_w0(double w0);

struct BoundaryInfimum {
  double value;  // inf over ell of ell cosh(w(ell))
  double ell_at;  // where the sampled minimum was found
};

/// Numerical infimum b0 of the reduced collar boundary length.
BoundaryInfimum reduced_boundary_infimum();

}  // namespace bgeom::hyp
