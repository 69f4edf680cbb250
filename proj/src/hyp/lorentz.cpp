#include "bgeom/hyp/lorentz.hpp"

#include <cmath>

#include "bgeom/errors.hpp"

namespace bgeom::hyp {

double minkowski(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y - u.t * v.t; }

Vec3 lorentz_cross(const Vec3& u, const Vec3& v) {
  // J (u x v) with J = diag(1, 1, -1).
  return {u.y * v.t - u.t * v.y, u.t * v.x - u.x * v.t, -(u.x * v.y - u.y * v.x)};
}

Vec3 normalize_point(const Vec3& v) {
  const double n2 = -minkowski(v, v);
  if (!(n2 > 0.0)) throw DomainError("normalize_point: vector is not timelike");
  Vec3 r = v * (1.0 / std::sqrt(n2));
  return r.t < 0.0 ? -r : r;
}

Vec3 normalize_normal(const Vec3& v) {
  const double n2 = minkowski(v, v);
  if (!(n2 > 0.0)) throw DomainError("normalize_normal: vector is not spacelike");
  return v * (1.0 / std::sqrt(n2));
}

Vec3 normalize_ideal(const Vec3& v) {
  if (v.t == 0.0) throw DomainError("normalize_ideal: zero time component");
  return v * (1.0 / v.t);
}

bool is_ideal(const Vec3& v, double tol) {
  const double scale = v.x * v.x + v.y * v.y + v.t * v.t;
  return std::abs(minkowski(v, v)) <= tol * scale;
}

double distance(const Vec3& p, const Vec3& q) {
  const double c = -minkowski(p, q);
  return c <= 1.0 ? 0.0 : std::acosh(c);
}

Vec3 direction(const Vec3& p, const Vec3& q) {
  // Component of q orthogonal to p (p is unit timelike: <p,p> = -1).
  const Vec3 d = q + p * minkowski(p, q);
  return normalize_normal(d);
}

Vec3 along(const Vec3& p, const Vec3& tau, double s) {
  return p * std::cosh(s) + tau * std::sinh(s);
}

Vec3 Lorentz::operator()(const Vec3& v) const {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.t, m[3] * v.x + m[4] * v.y + m[5] * v.t,
          m[6] * v.x + m[7] * v.y + m[8] * v.t};
}

Lorentz Lorentz::operator*(const Lorentz& o) const {
  Lorentz r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
      r.m[3 * i + j] = s;
    }
  return r;
}

Lorentz Lorentz::rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Lorentz r;
  r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
  return r;
}

Lorentz Lorentz::recenter(const Vec3& c) {
  const Vec3 o{0.0, 0.0, 1.0};
  const Vec3 d = c - o;
  const double dd = minkowski(d, d);
  Lorentz r;
  if (dd < 1e-300) return r;
  // x -> x - 2 <x,d>/<d,d> d, written as a matrix: column j is the image of e_j.
  const Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int j = 0; j < 3; ++j) {
    const Vec3 img = e[j] - d * (2.0 * minkowski(e[j], d) / dd);
    r.m[0 * 3 + j] = img.x;
    r.m[1 * 3 + j] = img.y;
    r.m[2 * 3 + j] = img.t;
  }
  return r;
}

std::complex<double> to_disk(const Vec3& v) { return {v.x / (1.0 + v.t), v.y / (1.0 + v.t)}; }

std::complex<double> disk_to_uhp(std::complex<double> w) {
  const std::complex<double> i(0.0, 1.0);
  return i * (1.0 + w) / (1.0 - w);
}

std::complex<double> to_uhp(const Vec3& v) {
  // Composite of the disk map and i(1+w)/(1-w), simplified on the
  // hyperboloid: z = (i - y)/(t - x). Avoids the cancellation in 1 - |w|^2.
  const double den = v.t - v.x;
  // Null vectors are scaled to t = 1; points satisfy <v,v> = -1 exactly.
  if (std::abs(minkowski(v, v)) < 0.5) return {-v.y / den, 0.0};
  return std::complex<double>(-v.y, 1.0) / den;
}

std::complex<double> tangent_to_uhp(const Vec3& v, const Vec3& dv) {
  const double den = v.t - v.x;
  const std::complex<double> num(-v.y, 1.0);
  return std::complex<double>(-dv.y, 0.0) / den - num * ((dv.t - dv.x) / (den * den));
}

double uhp_distance(std::complex<double> a, std::complex<double> b) {
  const double num = std::norm(a - b);
  return std::acosh(1.0 + num / (2.0 * a.imag() * b.imag()));
}

}  // namespace bgeom::hyp
