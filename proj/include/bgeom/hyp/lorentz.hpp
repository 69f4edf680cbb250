#pragma once

#include <array>
#include <complex>

namespace bgeom::hyp {

/// A vector in R^{2,1} with form <u,v> = u.x v.x + u.y v.y - u.t v.t.
/// Points of H^2 are the future unit timelike vectors; geodesics are
/// represented by unit spacelike normals n, with <x,n> the sinh of the
/// signed distance from x to the geodesic.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, t + o.t}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, t - o.t}; }
  Vec3 operator*(double s) const { return {x * s, y * s, t * s}; }
  Vec3 operator-() const { return {-x, -y, -t}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

double minkowski(const Vec3& u, const Vec3& v);

/// Lorentz cross product: orthogonal (in the form) to both arguments.
/// For two geodesic normals it is a point (crossing), an ideal point
/// (asymptotic) or the normal of the common perpendicular (ultraparallel).
Vec3 lorentz_cross(const Vec3& u, const Vec3& v);

/// Scales a timelike vector onto the future sheet of the hyperboloid.
Vec3 normalize_point(const Vec3& v);
/// Scales a spacelike vector to unit length.
Vec3 normalize_normal(const Vec3& v);
/// Scales a null vector to t = 1 (future).
Vec3 normalize_ideal(const Vec3& v);

bool is_ideal(const Vec3& v, double tol = 1e-9);

/// Hyperbolic distance between two points of the hyperboloid.
double distance(const Vec3& p, const Vec3& q);

/// Unit tangent at p pointing toward q (finite or ideal).
Vec3 direction(const Vec3& p, const Vec3& q);

/// Point at arclength s from p along the unit tangent tau.
Vec3 along(const Vec3& p, const Vec3& tau, double s);

/// Linear isometry of R^{2,1} stored row-major.
struct Lorentz {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
  Vec3 operator()(const Vec3& v) const;
  Lorentz operator*(const Lorentz& o) const;
  static Lorentz rotation(double angle);
  /// Reflection exchanging the point c with the origin (0,0,1).
  static Lorentz recenter(const Vec3& c);
};

/// Hyperboloid -> Poincare disk.
std::complex<double> to_disk(const Vec3& v);
/// Poincare disk -> upper half-plane, w -> i (1 + w) / (1 - w).
std::complex<double> disk_to_uhp(std::complex<double> w);
/// Hyperboloid -> upper half-plane (ideal points land on the real axis).
std::complex<double> to_uhp(const Vec3& v);
/// Pushes a tangent vector dv at v forward to the upper half-plane.
std::complex<double> tangent_to_uhp(const Vec3& v, const Vec3& dv);

/// Upper half-plane distance.
double uhp_distance(std::complex<double> a, std::complex<double> b);

}  // namespace bgeom::hyp
