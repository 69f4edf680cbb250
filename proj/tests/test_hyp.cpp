#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bgeom/errors.hpp"
#include "bgeom/hyp/collar.hpp"
#include "bgeom/hyp/constants.hpp"
#include "bgeom/hyp/estimates.hpp"
#include "bgeom/hyp/hexagon.hpp"
#include "bgeom/hyp/lorentz.hpp"
#include "oracles/hyperboloid.hpp"
#include "oracles/uhp.hpp"

using namespace bgeom;
using namespace bgeom::hyp;
using doctest::Approx;

namespace {

double acosh_formula_c(double ai, double aj, double ak) {
  // Side opposite a_k, between A_i and A_j.
  return std::acosh((std::cosh(ak) + std::cosh(ai) * std::cosh(aj)) / (std::sinh(ai) * std::sinh(aj)));
}

}  // namespace

TEST_CASE("collar profile identities") {
  for (double ell : {1e-6, 0.01, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    const auto c = collar_profile(ell);
    CHECK(std::sinh(c.w0) * std::sinh(ell / 2) == Approx(1.0).epsilon(1e-12));
    CHECK(c.w == Approx(std::max(c.w0 / 2, c.w0 - 1)));
    CHECK(c.boundary_len_full == Approx(ell * std::cosh(c.w0)));
    CHECK(c.boundary_len_full >= 2.0);
    CHECK(c.boundary_len_full <= ell + 2.0);
    CHECK(c.boundary_len_reduced <= c.boundary_len_full);
  }
}

TEST_CASE("collar symmetric point and small-length limit") {
  const double ell = 2 * std::asinh(1.0);
  CHECK(collar_profile(ell).w0 == Approx(std::asinh(1.0)).epsilon(1e-14));
  CHECK(collar_profile(1e-8).boundary_len_full == Approx(2.0).epsilon(1e-7));
  // Frozen by direct evaluation.
  const auto one = collar_profile(1.0);
  CHECK(one.w0 == Approx(1.4068291137).epsilon(1e-10));
  CHECK(one.boundary_len_full == Approx(2.1639534137).epsilon(1e-10));
}

TEST_CASE("collar rejects bad lengths") {
  CHECK_THROWS_AS(collar_profile(0.0), DomainError);
  CHECK_THROWS_AS(collar_profile(-1.0), DomainError);
  CHECK_THROWS_AS(collar_profile(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("cusp collar lengths") {
  const auto c = cusp_collar_lengths();
  CHECK(c.full == 2.0);
  CHECK(c.reduced == Approx(2.0 / std::exp(1.0)).epsilon(1e-15));
  CHECK(c.reduced < c.full);
}

TEST_CASE("collar crossing projection") {
  CHECK(collar_crossing_projection(std::asinh(1.0)) == Approx(std::asinh(1.0)).epsilon(1e-14));
  CHECK(collar_crossing_projection(2.0) == Approx(0.2723414689).epsilon(1e-10));
  double prev = collar_crossing_projection(0.5);
  for (double w = 1.0; w < 30.0; w += 0.5) {
    const double p = collar_crossing_projection(w);
    CHECK(p < prev);
    prev = p;
  }
  CHECK(prev < 1e-12);
}

TEST_CASE("crossing projection matches a half-plane construction") {
  // Axis: the imaginary axis. P sits on the unit circle (the perpendicular at
  // i) at distance w from the axis; the geodesic through P orthogonal to the
  // unit circle is tangent there to the w-equidistant. Project its far ideal
  // endpoint e to the axis: the projection runs from i to i|e|.
  for (double w : {0.3, 1.0, 2.0, 4.0}) {
    const double phi = std::atan(1.0 / std::sinh(w));  // cot(phi) = sinh(w)
    const oracle::C P = std::polar(1.0, phi);
    REQUIRE(std::asinh(P.real() / P.imag()) == Approx(w).epsilon(1e-12));
    const double center = 1.0 / std::cos(phi), radius = std::tan(phi);
    REQUIRE(std::abs(std::abs(P - center) - radius) < 1e-12);
    const double e = center + radius;
    CHECK(std::log(e) == Approx(collar_crossing_projection(w)).epsilon(1e-12));
  }
}

TEST_CASE("twist ratio maximum") {
  const auto m = max_twist_ratio();
  CHECK(m.ratio_max < 1.5);
  CHECK(m.w0_argmax == Approx(2.0).epsilon(1e-3));
  CHECK(m.ratio_max == Approx(twist_ratio_at_w0(2.0)).epsilon(1e-9));
  for (double w0 : {0.5, 1.0, 1.9, 2.1, 3.0, 6.0}) CHECK(twist_ratio_at_w0(w0) <= m.ratio_max + 1e-12);
  // Long geodesics: w0 -> 0 and the ratio decreases toward 1/2.
  CHECK(twist_ratio_at_w0(1e-3) > twist_ratio_at_w0(1e-8));
  CHECK(std::abs(twist_ratio_at_w0(1e-8) - 0.5) < 0.03);
}

TEST_CASE("reduced boundary infimum") {
  const auto b = reduced_boundary_infimum();
  CHECK(b.value == Approx(2.0 / std::exp(1.0)).epsilon(1e-6));
}

TEST_CASE("hexagon (1,1,1)") {
  const auto h = hexagon_solve(1, 1, 1);
  CHECK(h.kind == HexCase::Case1);
  for (double c : h.c) CHECK(c == Approx(acosh_formula_c(1, 1, 1)).epsilon(1e-12));
  CHECK(h.c[0] == Approx(1.7049128324).epsilon(1e-10));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(h.r(i, j) == Approx(0.5));

  const auto e = hexagon_embed(h);
  REQUIRE(e.sides.size() == 6);
  for (const auto& s : e.sides) {
    const double want = s.label[0] == 'A' ? 1.0 : h.c[0];
    CHECK(s.measured_length == Approx(want).epsilon(1e-9));
  }
  for (double a : e.angles) CHECK(std::abs(a - M_PI / 2) < 1e-9);
  CHECK(std::abs(e.area - M_PI) < 1e-6);

  const auto m = band_measurements(e);
  CHECK(m.max_residual < 1e-6);
  CHECK(m.bounds_hold);
  for (const auto& t : m.triangles)
    for (const auto& ed : t.edges)
      if (ed.label[0] == 'E') {
        CHECK(ed.length >= tripod_lower_const() - 1e-12);
        CHECK(ed.length <= ed.upper + 1e-12);
      }
}

TEST_CASE("hexagon ideal limit (0,0,0)") {
  const auto h = hexagon_solve(0, 0, 0);
  CHECK(h.kind == HexCase::Case1);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(h.r(i, j) == 0.0);
  for (double c : h.c) CHECK(std::isinf(c));
  const auto e = hexagon_embed(h);
  int ideal = 0;
  for (const auto& v : e.vertices) ideal += v.ideal;
  CHECK(ideal >= 3);
}

TEST_CASE("hexagon long side (5,1,1)") {
  const auto h = hexagon_solve(5, 1, 1);
  CHECK(h.kind == HexCase::Case2);
  CHECK(h.long_side == 0);
  CHECK(h.r(0, 0) == Approx(3.0).epsilon(1e-12));
  const auto m = band_measurements(h);
  CHECK(m.max_residual < 1e-6);
  CHECK(m.bounds_hold);
}

TEST_CASE("hexagon solver against the cosine rule, random sides") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.05, 5.0);
  for (int n = 0; n < 200; ++n) {
    const double a[3] = {U(rng), U(rng), U(rng)};
    const auto h = hexagon_solve(a[0], a[1], a[2]);
    CHECK(h.c[pair_index(0, 1)] == Approx(acosh_formula_c(a[0], a[1], a[2])).epsilon(1e-10));
    CHECK(h.c[pair_index(1, 2)] == Approx(acosh_formula_c(a[1], a[2], a[0])).epsilon(1e-10));
    CHECK(h.c[pair_index(0, 2)] == Approx(acosh_formula_c(a[0], a[2], a[1])).epsilon(1e-10));
    const bool tri = a[0] <= a[1] + a[2] && a[1] <= a[0] + a[2] && a[2] <= a[0] + a[1];
    CHECK((h.kind == HexCase::Case1) == tri);
    if (tri) {
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        CHECK(h.r(i, j) == Approx((a[i] + a[j] - a[k]) / 2).epsilon(1e-12));
        CHECK(h.r(i, j) + h.r(i, k) == Approx(a[i]).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(hexagon_solve(-1, 1, 1), DomainError);
  CHECK_THROWS_AS(hexagon_solve(std::nan(""), 1, 1), DomainError);
}

TEST_CASE("band stretch") {
  CHECK(band_stretch_bilipschitz(1, 2, 1, 2) == Approx(1.0).epsilon(1e-12));
  CHECK(band_stretch_bilipschitz(1, 1, 1, 2) == Approx(2.0).epsilon(1e-12));
  const double k = band_stretch_bilipschitz(1, 1, 2, 1);
  CHECK(k >= 2.0);
  CHECK(k >= std::cosh(2.0) / std::cosh(1.0) - 1e-12);
  CHECK(k == Approx(2.4381069960).epsilon(1e-9));
}

TEST_CASE("curve shortening matches an explicit isometry") {
  for (double ell : {0.0, 0.3, 2.0}) CHECK(curve_shorten_displacement(ell, 0.0) == Approx(ell).epsilon(1e-14));
  CHECK(curve_shorten_displacement(0.1, 2.0) == Approx(0.3741894740).epsilon(1e-10));
  double prev = 0;
  for (double r = 0; r < 5; r += 0.25) {
    const double s = curve_shorten_displacement(0.7, r);
    CHECK(s >= prev);
    prev = s;
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> L(0.0, 3.0), R(0.0, 4.0);
  for (int n = 0; n < 50; ++n) {
    const double ell = L(rng), r = R(rng);
    CHECK(std::abs(curve_shorten_displacement(ell, r) - oracle::translation_displacement(ell, r)) < 1e-9);
  }
}

TEST_CASE("equidistant displacement matches an orbit arc") {
  CHECK(equidistant_displacement(0.8, 1.0, 0.0) == Approx(0.8).epsilon(1e-14));
  CHECK(equidistant_displacement(0.0, -1.3, 0.7) == Approx(1.3 * std::sinh(0.7)).epsilon(1e-14));
  CHECK(equidistant_displacement(0.05, M_PI / 2, 1.0) == Approx(1.8476133493).epsilon(1e-10));
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> L(0.0, 2.0), T(-3.0, 3.0), D(0.0, 2.0);
  for (int n = 0; n < 20; ++n) {
    const double ell = L(rng), th = T(rng), t = D(rng);
    CHECK(std::abs(equidistant_displacement(ell, th, t) - oracle::orbit_arc_length(ell, th, t)) < 1e-9);
  }
}

TEST_CASE("tube radius") {
  const auto prof = ConstantsProfile::defaults();
  CHECK(tube_radius_lower(prof.eps0(), prof) == 0.0);
  CHECK(tube_radius_lower(prof.eps0() / std::exp(2.0), prof) == Approx(1.0).epsilon(1e-14));
  const double e = prof.eps0() / 50;
  CHECK(tube_radius_lower(e / 2, prof) - tube_radius_lower(e, prof) == Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(tube_radius_lower(0.0, prof), DomainError);
  CHECK_THROWS_AS(tube_radius_lower(2 * prof.eps0(), prof), DomainError);
}

TEST_CASE("truncation budget") {
  const auto b = truncation_budget(-1, M_PI);
  CHECK(b.L == Approx(3.0).epsilon(1e-15));
  CHECK(b.L2 == Approx(2 * (3 + M_PI)).epsilon(1e-15));
  for (int chi : {-1, -2, -5})
    for (double eps : {0.01, 0.3, 2.0}) {
      const auto x = truncation_budget(chi, eps), y = truncation_budget(2 * chi, eps);
      CHECK(x.L2 > 2 * x.L);
      CHECK(y.L == Approx(2 * x.L).epsilon(1e-15));
    }
  CHECK_THROWS_AS(truncation_budget(0, 1.0), DomainError);
  CHECK_THROWS_AS(truncation_budget(-1, 0.0), DomainError);
}

TEST_CASE("convex juncture diameter") {
  CHECK(half_space_juncture_diam(0.4, 1.0) == 0.0);
  const double d = half_space_juncture_diam(1.0, 1.0);
  CHECK(d == Approx(2.9063528388).epsilon(1e-8));
  CHECK(std::abs(d - oracle::juncture_diameter(1.0, 1.0)) < 1e-8);
  CHECK(std::abs(half_space_juncture_diam(1.5, 2.0) - oracle::juncture_diameter(1.5, 2.0)) < 1e-8);
  double prev = 0;
  for (double b = 0.5; b <= 3.0; b += 0.25) {
    const double v = half_space_juncture_diam(b, 1.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("tripod constant from three tangent horoballs") {
  const double c = tripod_lower_const();
  CHECK(c == Approx(2 * std::log(2 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(c == Approx(0.28768207245178).epsilon(1e-12));
  CHECK(2 * oracle::horoball_gap() == Approx(c).epsilon(1e-8));
}

TEST_CASE("constants profile") {
  const auto d = ConstantsProfile::defaults();
  CHECK(d.is_default());
  CHECK(d.eps1() < d.eps0() / d.K0());
  CHECK_THROWS_AS(ConstantsProfile(0.1, 0.2, 6, 2, 0), DomainError);
  CHECK_THROWS_AS(ConstantsProfile(0.1, 0.06, 6, 2, 0), DomainError);
  const auto j = ConstantsProfile::from_json(R"({"eps0": 0.2, "c": 0.5})", d);
  CHECK(j.eps0() == 0.2);
  CHECK(j.tube_radius_c() == 0.5);
  CHECK(j.eps1() == d.eps1());
  CHECK_FALSE(j.is_default());
  CHECK_THROWS_AS(ConstantsProfile::from_json("{", d), ParseError);
}
