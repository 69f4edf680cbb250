#include "bgeom/hyp/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bgeom/errors.hpp"
#include "bgeom/hyp/lorentz.hpp"

namespace bgeom::hyp {

double band_stretch_bilipschitz(double r, double c, double r_prime, double c_prime, int samples) {
  for (double v : {r, c, r_prime, c_prime})
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("band_stretch: inputs must be positive");
  if (samples < 2) throw DomainError("band_stretch: need at least two samples");
  // The differential is diagonal in the orthonormal frames (dx, cosh x dy).
  const double sx = r_prime / r;
  double k = std::max(sx, 1.0 / sx);
  for (int n = 0; n < samples; ++n) {
    const double x = r * n / (samples - 1);
    const double sy = (c_prime / c) * std::cosh(x * sx) / std::cosh(x);
    k = std::max({k, sy, 1.0 / sy});
  }
  return k;
}

double curve_shorten_displacement(double ell, double r) {
  if (!(ell >= 0.0) || !(r >= 0.0)) throw DomainError("curve_shorten: ell and r must be nonnegative");
  return 2.0 * std::asinh(std::sinh(0.5 * ell) * std::cosh(r));
}

double equidistant_displacement(double ell, double theta, double t) {
  if (!(ell >= 0.0) || !(t >= 0.0)) throw DomainError("equidistant: ell and t must be nonnegative");
  return std::hypot(ell * std::cosh(t), theta * std::sinh(t));
}

double tube_radius_lower(double eps, const ConstantsProfile& profile) {
  if (!(eps > 0.0) || eps > profile.eps0()) throw DomainError("tube_radius: need 0 < eps <= eps0");
  return std::max(0.0, 0.5 * std::log(profile.eps0() / eps) - profile.tube_radius_c());
}

TruncationBudget truncation_budget(int chi, double eps) {
  if (chi >= 0) throw DomainError("truncation: chi must be negative");
  if (!(eps > 0.0)) throw DomainError("truncation: eps must be positive");
  TruncationBudget out;
  out.L = 3.0 * std::numbers::pi * std::abs(chi) / eps;
  out.L2 = 2.0 * (out.L + eps);
  return out;
}

double half_space_juncture_diam(double b, double r0, int samples) {
  if (!(b > 0.0) || !(r0 > 0.0)) throw DomainError("juncture: b and r0 must be positive");
  if (samples < 3) throw DomainError("juncture: need at least three samples");
  // A = {x <= 0} with normal nA; B the mirror half-plane at distance r0.
  const double C = std::cosh(r0), S = std::sinh(r0);
  const double reach = std::tanh(b) * (1.0 + C) / S;  // cosh of the half-length of each boundary arc
  if (reach < 1.0) return 0.0;
  const double smax = std::acosh(reach);

  const Vec3 nA{1.0, 0.0, 0.0};
  const Vec3 nB{-C, 0.0, -S};
  const Vec3 o{0.0, 0.0, 1.0};
  const Vec3 tau{0.0, 1.0, 0.0};
  const Vec3 gA = o;
  const Vec3 gB = normalize_point(o - nB * minkowski(o, nB));
  const double cb = std::cosh(b), sb = std::sinh(b);

  std::vector<Vec3> pts;
  pts.reserve(2 * samples);
  for (int n = 0; n < samples; ++n) {
    const double s = -smax + 2.0 * smax * n / (samples - 1);
    pts.push_back((gA * std::cosh(s) + tau * std::sinh(s)) * cb + nA * sb);
    pts.push_back((gB * std::cosh(s) + tau * std::sinh(s)) * cb + nB * sb);
  }
  // <p,q> = -cosh d, so the farthest pair has the most negative product.
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, minkowski(pts[i], pts[j]));
  return std::acosh(-best);
}

double tripod_lower_const() { return 2.0 * std::log(2.0 / std::sqrt(3.0)); }

}  // namespace bgeom::hyp
