#include "bgeom/hyp/collar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bgeom/errors.hpp"

namespace bgeom::hyp {

namespace {

void require_length(double ell) {
  if (!std::isfinite(ell) || !(ell > 0.0)) throw DomainError("collar: length must be positive and finite");
}

// Golden-section search for a maximum of a unimodal f on [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double collar_width_full(double ell) {
  require_length(ell);
  return std::asinh(1.0 / std::sinh(0.5 * ell));
}

double collar_width_reduced(double ell) {
  const double w0 = collar_width_full(ell);
  return std::max(0.5 * w0, w0 - 1.0);
}

CollarProfile collar_profile(double ell) {
  require_length(ell);
  CollarProfile c{};
  c.ell = ell;
  c.w0 = collar_width_full(ell);
  c.w = std::max(0.5 * c.w0, c.w0 - 1.0);
  // cosh(asinh(x)) = sqrt(1 + x^2), so ell cosh(w0) = ell coth(ell/2); the
  // coth form stays accurate as ell -> 0.
  c.boundary_len_full = ell / std::tanh(0.5 * ell);
  c.boundary_len_reduced = ell * std::cosh(c.w);
  return c;
}

CuspCollarLengths cusp_collar_lengths() { return {2.0, 2.0 / std::numbers::e}; }

double collar_crossing_projection(double w) {
  if (!std::isfinite(w) || !(w > 0.0)) throw DomainError("collar crossing: width must be positive");
  return std::asinh(1.0 / std::sinh(w));
}

double twist_ratio_at_w0(double w0) {
  if (!(w0 > 0.0) || !std::isfinite(w0)) throw DomainError("twist ratio: w0 must be positive");
  const double ell = 2.0 * std::asinh(1.0 / std::sinh(w0));
  const double w = std::max(0.5 * w0, w0 - 1.0);
  return collar_crossing_projection(w) / ell;
}

TwistRatioMax max_twist_ratio() {
  // Coarse scan over w0 in (0, 30]; beyond that the ratio is flat at e/2.
  constexpr int kSamples = 3000;
  constexpr double kHi = 30.0;
  int best = 1;
  double best_val = twist_ratio_at_w0(kHi / kSamples);
  for (int i = 2; i <= kSamples; ++i) {
    const double v = twist_ratio_at_w0(kHi * i / kSamples);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = kHi * std::max(best - 1, 1) / kSamples;
  const double hi = kHi * std::min(best + 1, kSamples) / kSamples;
  const double w0 = golden_max(twist_ratio_at_w0, lo, hi, 1e-12);
  return {twist_ratio_at_w0(w0), w0, 2.0 * std::asinh(1.0 / std::sinh(w0))};
}

BoundaryInfimum reduced_boundary_infimum() {
  // Log-spaced scan over ell in [1e-12, 1e3].
  constexpr int kSamples = 20000;
  BoundaryInfimum best{collar_profile(1e-12).boundary_len_reduced, 1e-12};
  for (int i = 1; i <= kSamples; ++i) {
    const double ell = std::pow(10.0, -12.0 + 15.0 * i / kSamples);
    const double b = collar_profile(ell).boundary_len_reduced;
    if (b < best.value) best = {b, ell};
  }
  return best;
}

}  // namespace bgeom::hyp
