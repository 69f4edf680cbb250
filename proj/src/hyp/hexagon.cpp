#include "bgeom/hyp/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bgeom/errors.hpp"

namespace bgeom::hyp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

const double kTripodEdge = 2.0 * std::log(2.0 / std::sqrt(3.0));

std::string pair_label(int i, int j) {
  if (i > j) std::swap(i, j);
  return std::to_string(i + 1) + std::to_string(j + 1);
}

int third(int i, int j) { return 3 - i - j; }

double sum_e_kappa(const TriangleRecord& t) {
  double s = 0.0;
  for (const auto& e : t.edges)
    if (e.curvature != 0.0) s += e.length * e.curvature;
  return s;
}

TriangleEdge bounded_edge(std::string label, double length, double r) {
  TriangleEdge e;
  e.label = std::move(label);
  e.length = length;
  e.curvature = std::tanh(r);
  e.lower = r > 0.0 ? kTripodEdge : 0.0;
  e.upper = r > 0.0 ? kPi / std::tanh(r) : kInf;
  return e;
}

// Middle-band edge of a half triangle; signed_u > 0 when it bends away from
// the half triangle.
TriangleEdge middle_edge(std::string label, double length, double signed_u) {
  TriangleEdge e;
  e.label = std::move(label);
  e.length = length;
  e.curvature = std::tanh(signed_u);
  const double au = std::abs(signed_u);
  e.lower = 0.5 * kTripodEdge;
  e.upper = au > 0.0 ? kPi / (2.0 * std::tanh(au)) : kInf;
  return e;
}

TriangleEdge plain_edge(std::string label, double length) {
  TriangleEdge e;
  e.label = std::move(label);
  e.length = length;
  e.upper = kInf;
  return e;
}

// ---- curve integration in the upper half-plane ---------------------------

// A parametrized curve on the hyperboloid with its derivative.
struct Path {
  std::function<void(double, Vec3&, Vec3&)> eval;
  double s0 = 0.0;
  double s1 = 0.0;  // may be +inf for rays to an ideal point
};

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr double kQuadTol = 1e-11;
constexpr unsigned kQuadDepth = 12;

// Adaptive quadrature over unit-length chunks: long arcs sweep through
// very different scales of the half-plane.
template <class F>
double chunked(F f, double a, double b) {
  const int pieces = std::max(1, static_cast<int>(std::ceil(b - a)));
  double sum = 0.0;
  for (int n = 0; n < pieces; ++n)
    sum += GK::integrate(f, a + (b - a) * n / pieces, a + (b - a) * (n + 1) / pieces, kQuadDepth, kQuadTol);
  return sum;
}

// Integral of dx/y along the image of the path in the upper half-plane.
double green(const Path& p) {
  auto f = [&](double s) {
    Vec3 x, dx;
    p.eval(s, x, dx);
    const auto z = to_uhp(x);
    const auto dz = tangent_to_uhp(x, dx);
    return dz.real() / z.imag();
  };
  return chunked(f, p.s0, p.s1);
}

// Hyperbolic arclength |dz|/y of the image in the upper half-plane.
double arclength(const Path& p) {
  if (std::isinf(p.s1)) return kInf;
  auto f = [&](double s) {
    Vec3 x, dx;
    p.eval(s, x, dx);
    const auto z = to_uhp(x);
    const auto dz = tangent_to_uhp(x, dx);
    return std::abs(dz) / z.imag();
  };
  return chunked(f, p.s0, p.s1);
}

Path geodesic_ray(const Vec3& p, const Vec3& toward, double len) {
  const Vec3 tau = direction(p, toward);
  Path path;
  path.eval = [p, tau](double s, Vec3& x, Vec3& dx) {
    x = along(p, tau, s);
    dx = p * std::sinh(s) + tau * std::cosh(s);
  };
  path.s0 = 0.0;
  path.s1 = len;
  return path;
}

// Geodesic from p to q, either endpoint possibly ideal. Returns the dx/y
// integral and the length.
struct SegmentMeasure {
  double green = 0.0;
  double length = 0.0;
};

SegmentMeasure measure_segment(const Vec3& p, bool p_ideal, const Vec3& q, bool q_ideal) {
  SegmentMeasure m;
  if (!p_ideal && !q_ideal) {
    const double d = distance(p, q);
    if (d == 0.0) return m;
    const Path path = geodesic_ray(p, q, d);
    m.green = green(path);
    m.length = uhp_distance(to_uhp(p), to_uhp(q));
    return m;
  }
  // A ray into an ideal point: dx/y cancels badly near the real axis, so use
  // the semicircle parametrization x = c + R cos(phi), y = R sin(phi), on
  // which dx/y = -dphi.
  m.length = kInf;
  const auto zp = to_uhp(p), zq = to_uhp(q);
  const double dx = zq.real() - zp.real();
  if (std::abs(dx) > 1e-14 * std::max(1.0, std::abs(zp) + std::abs(zq))) {
    const double c = (std::norm(zq) - std::norm(zp)) / (2.0 * dx);
    m.green = std::arg(zp - c) - std::arg(zq - c);
  }
  return m;
}

// Equidistant curve at distance r on the positive side of the geodesic with
// unit normal n, over the foot segment from g0 toward g1.
Path equidistant(const Vec3& g0, const Vec3& g1, const Vec3& n, double r) {
  const Vec3 tau = direction(g0, g1);
  const double len = distance(g0, g1);
  const double cr = std::cosh(r), sr = std::sinh(r);
  Path path;
  path.eval = [=](double s, Vec3& x, Vec3& dx) {
    x = (g0 * std::cosh(s) + tau * std::sinh(s)) * cr + n * sr;
    dx = (g0 * std::sinh(s) + tau * std::cosh(s)) * cr;
  };
  path.s0 = 0.0;
  path.s1 = len;
  return path;
}

Vec3 end_point(const Path& p) {
  Vec3 x, dx;
  p.eval(p.s1, x, dx);
  return x;
}

}  // namespace

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return 0;
  if (i == 1 && j == 2) return 1;
  if (i == 0 && j == 2) return 2;
  throw std::out_of_range("pair_index: need distinct indices in {0,1,2}");
}

double TriangleRecord::residual() const {
  const double total = sum_e_kappa(*this) + area;
  if (target == kPi) return std::abs(total - kPi);
  return std::abs(2.0 * total - kPi);
}

double HexagonGeometry::r(int i, int j) const {
  for (const auto& b : bands)
    if ((b.i == i && b.j == j) || (b.i == j && b.j == i)) return b.r;
  return 0.0;
}

HexagonGeometry hexagon_solve(double a1, double a2, double a3) {
  const std::array<double, 3> a{a1, a2, a3};
  for (double v : a)
    if (!std::isfinite(v) || v < 0.0) throw DomainError("hexagon: side lengths must be finite and nonnegative");

  HexagonGeometry hex;
  hex.a = a;
  std::array<double, 3> ch{}, sh{};
  for (int i = 0; i < 3; ++i) {
    ch[i] = std::cosh(a[i]);
    sh[i] = std::sinh(a[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const int k = third(i, j);
      // An ideal end pushes the perpendicular off to infinity.
      hex.c[pair_index(i, j)] = (a[i] == 0.0 || a[j] == 0.0)
                                    ? kInf
                                    : std::acosh((ch[k] + ch[i] * ch[j]) / (sh[i] * sh[j]));
    }

  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    if (a[i] > a[j] + a[k]) {
      hex.kind = HexCase::Case2;
      hex.long_side = i;
    }
  }

  if (hex.kind == HexCase::Case1) {
    TriangleRecord t;
    t.label = "T";
    t.target = kPi;
    double band_area = 0.0;
    const int pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    for (const auto& pr : pairs) {
      const int i = pr[0], j = pr[1], k = third(i, j);
      const double r = 0.5 * (a[i] + a[j] - a[k]);
      const double c = hex.c[pair_index(i, j)];
      hex.bands.push_back({i, j, r, c, std::tanh(r)});
      // The inner band edge is the r-equidistant of C_ij: length c cosh r.
      t.edges.push_back(bounded_edge("E" + pair_label(i, j), r > 0.0 ? c * std::cosh(r) : c, r));
      if (r > 0.0) band_area += c * std::sinh(r);
    }
    t.area = kPi - band_area;
    hex.triangles.push_back(std::move(t));
    return hex;
  }

  const int i = hex.long_side;
  const int j = std::min((i + 1) % 3, (i + 2) % 3);
  const int k = std::max((i + 1) % 3, (i + 2) % 3);
  const double c_ij = hex.c[pair_index(i, j)];
  const double c_ik = hex.c[pair_index(i, k)];
  const double r_mid = a[i] - a[j] - a[k];

  // Right-angled pentagons cut off by the perpendicular H from A_i to C_jk:
  // cosh h = sinh a_j sinh c_ij, cosh a_j = sinh x_j sinh h,
  // cosh y_j = sinh c_ij sinh x_j.
  double h;
  if (a[j] > 0.0)
    h = std::acosh(sh[j] * std::sinh(c_ij));
  else if (a[k] > 0.0)
    h = std::acosh(sh[k] * std::sinh(c_ik));
  else
    h = std::asinh(1.0 / std::sinh(0.5 * a[i]));
  const double x_j = std::asinh(ch[j] / std::sinh(h));
  const double x_k = a[i] - x_j;
  const double y_j = a[j] > 0.0 ? std::acosh(std::sinh(c_ij) * std::sinh(x_j)) : kInf;
  const double y_k = a[k] > 0.0 ? std::acosh(std::sinh(c_ik) * std::sinh(x_k)) : kInf;

  hex.h = h;
  hex.u_lo = a[j] - x_j;
  hex.u_hi = a[i] - a[k] - x_j;
  hex.bands.push_back({i, j, a[j], c_ij, std::tanh(a[j])});
  hex.bands.push_back({i, k, a[k], c_ik, std::tanh(a[k])});
  hex.bands.push_back({i, i, r_mid, h, std::tanh(r_mid)});

  const std::string mid = "E" + std::to_string(i + 1) + std::to_string(i + 1) + ",";
  auto half = [&](int m, double a_m, double c_im, double signed_u, double u, double c_piece) {
    TriangleRecord t;
    t.label = "T" + std::to_string(m + 1);
    t.target = kPi / 2.0;
    t.edges.push_back(bounded_edge("E" + pair_label(i, m), a_m > 0.0 ? c_im * std::cosh(a_m) : c_im, a_m));
    t.edges.push_back(middle_edge(mid + std::to_string(m + 1), h * std::cosh(u), signed_u));
    t.edges.push_back(plain_edge("C" + pair_label(j, k), c_piece));
    t.area = kPi / 2.0 - sum_e_kappa(t);
    return t;
  };
  hex.triangles.push_back(half(j, a[j], c_ij, -hex.u_lo, hex.u_lo, y_j + hex.u_lo));
  hex.triangles.push_back(half(k, a[k], c_ik, hex.u_hi, hex.u_hi, y_k - hex.u_hi));
  return hex;
}

// ---- embedding -----------------------------------------------------------

namespace {

// Vertex order around the hexagon: (A side, C pair) for each corner.
constexpr int kCorner[6][2] = {{0, 2}, {0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}};

}  // namespace

const Vec3& HexagonEmbedding::vertex(int side_a, int pair) const {
  for (int v = 0; v < 6; ++v)
    if (kCorner[v][0] == side_a && kCorner[v][1] == pair) return vertices[v].point;
  throw std::out_of_range("hexagon vertex: A side is not adjacent to that C side");
}

namespace {

// Extended-precision scratch vector for the construction: before recentering
// some vertices sit at t ~ cosh(c) and double loses too many digits.
struct LVec {
  long double x = 0, y = 0, t = 0;
  LVec operator+(const LVec& o) const { return {x + o.x, y + o.y, t + o.t}; }
  LVec operator-(const LVec& o) const { return {x - o.x, y - o.y, t - o.t}; }
  LVec operator*(long double s) const { return {x * s, y * s, t * s}; }
};

long double ldot(const LVec& u, const LVec& v) { return u.x * v.x + u.y * v.y - u.t * v.t; }

LVec lcross(const LVec& u, const LVec& v) {
  return {u.y * v.t - u.t * v.y, u.t * v.x - u.x * v.t, -(u.x * v.y - u.y * v.x)};
}

LVec lpoint(const LVec& v) {
  LVec r = v * (1.0L / std::sqrt(-ldot(v, v)));
  return r.t < 0 ? r * -1.0L : r;
}

LVec lnormal(const LVec& v) { return v * (1.0L / std::sqrt(ldot(v, v))); }

// Reflection in the bisector of c and the origin.
LVec lreflect(const LVec& x, const LVec& c) {
  const LVec u = c - LVec{0, 0, 1};
  return x - u * (2.0L * ldot(x, u) / ldot(u, u));
}

LVec lrotate(const LVec& v, long double ang) {
  const long double cs = std::cos(ang), sn = std::sin(ang);
  return {cs * v.x - sn * v.y, sn * v.x + cs * v.y, v.t};
}

Vec3 to_vec(const LVec& v) {
  return {static_cast<double>(v.x), static_cast<double>(v.y), static_cast<double>(v.t)};
}

}  // namespace

HexagonEmbedding hexagon_embed(const HexagonGeometry& hex) {
  const auto& a = hex.a;
  std::array<long double, 3> ch{}, sh{};
  for (int i = 0; i < 3; ++i) {
    ch[i] = std::cosh(static_cast<long double>(a[i]));
    sh[i] = std::sinh(static_cast<long double>(a[i]));
  }

  // Three pairwise ultraparallel (or asymptotic) lines carrying C12, C13, C23,
  // with inward normals satisfying <n, m> = -cosh(distance).
  const long double K = ch[0] * ch[1] + ch[2];
  const long double z = -(K * K + sh[1] * sh[1]) / (ch[0] * K + std::sqrt(K * K - sh[0] * sh[0] * sh[1] * sh[1]));
  std::array<LVec, 3> lc;
  lc[pair_index(0, 1)] = {1, 0, 0};
  lc[pair_index(1, 2)] = {-ch[1], -K - ch[0] * z, z};
  lc[pair_index(0, 2)] = {-ch[0], 1, -ch[0]};

  std::array<LVec, 3> la{};
  std::array<LVec, 6> pts;
  std::array<bool, 6> ideal{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const LVec cross = lcross(lc[pair_index(i, j)], lc[pair_index(i, k)]);
    if (a[i] == 0.0) {
      const LVec v = cross * (1.0L / cross.t);
      for (int c = 0; c < 6; ++c)
        if (kCorner[c][0] == i) {
          pts[c] = v;
          ideal[c] = true;
        }
    } else {
      la[i] = lnormal(cross);
      for (int c = 0; c < 6; ++c)
        if (kCorner[c][0] == i) pts[c] = lpoint(lcross(la[i], lc[kCorner[c][1]]));
    }
  }

  // Recenter on the vertex barycenter, then rotate so the disk point 1 (sent
  // to infinity in the half-plane) sits in the widest gap between vertices.
  LVec sum{};
  for (const auto& p : pts) sum = sum + p;
  const LVec center0 = lpoint(sum);
  for (auto& p : pts) p = lreflect(p, center0);
  for (auto& n : lc) n = lreflect(n, center0);
  for (auto& n : la) n = lreflect(n, center0);

  std::vector<double> angles;
  for (const auto& p : pts) {
    const auto w = to_disk(to_vec(p));
    if (std::abs(w) > 1e-12) angles.push_back(std::arg(w));
  }
  double rot = 0.0;
  if (!angles.empty()) {
    std::sort(angles.begin(), angles.end());
    double best_gap = -1.0, mid = 0.0;
    for (std::size_t v = 0; v < angles.size(); ++v) {
      const double lo = angles[v];
      const double hi = v + 1 < angles.size() ? angles[v + 1] : angles[0] + 2.0 * kPi;
      if (hi - lo > best_gap) {
        best_gap = hi - lo;
        mid = 0.5 * (lo + hi);
      }
    }
    rot = -mid;
  }
  for (auto& p : pts) p = lrotate(p, rot);
  for (auto& n : lc) n = lrotate(n, rot);
  for (auto& n : la) n = lrotate(n, rot);

  HexagonEmbedding emb;
  emb.hex = hex;
  for (int q = 0; q < 3; ++q) {
    emb.line_C[q] = normalize_normal(to_vec(lc[q]));
    emb.line_A[q] = a[q] > 0.0 ? normalize_normal(to_vec(la[q])) : Vec3{};
  }

  // Orient the A normals inward.
  LVec lcenter{};
  for (const auto& p : pts) lcenter = lcenter + p;
  const Vec3 center = to_vec(lpoint(lcenter));
  for (int i = 0; i < 3; ++i)
    if (a[i] > 0.0 && minkowski(center, emb.line_A[i]) < 0.0) emb.line_A[i] = -emb.line_A[i];
  for (const auto& n : emb.line_C)
    if (minkowski(center, n) <= 0.0) throw std::logic_error("hexagon_embed: C normal not inward");

  for (int v = 0; v < 6; ++v) {
    EmbeddedVertex ev;
    ev.label = "A" + std::to_string(kCorner[v][0] + 1) + "^C" +
               (kCorner[v][1] == 0 ? "12" : kCorner[v][1] == 1 ? "23" : "13");
    ev.point = ideal[v] ? to_vec(pts[v] * (1.0L / pts[v].t)) : to_vec(lpoint(pts[v]));
    ev.ideal = ideal[v];
    ev.uhp = to_uhp(ev.point);
    emb.vertices.push_back(ev);
  }

  const char* side_names[6] = {"A1", "C12", "A2", "C23", "A3", "C13"};
  double area = 0.0;
  for (int s = 0; s < 6; ++s) {
    EmbeddedSide side;
    side.label = side_names[s];
    side.from = s;
    side.to = (s + 1) % 6;
    side.normal = (s % 2 == 0) ? emb.line_A[s / 2] : emb.line_C[kCorner[side.to][1]];
    const auto& p = emb.vertices[side.from];
    const auto& q = emb.vertices[side.to];
    if (s % 2 == 0 && a[s / 2] == 0.0) {
      side.measured_length = 0.0;
    } else {
      const auto m = measure_segment(p.point, p.ideal, q.point, q.ideal);
      side.measured_length = m.length;
      area += m.green;
    }
    emb.sides.push_back(side);
  }
  emb.area = std::abs(area);

  for (int v = 0; v < 6; ++v) {
    const auto& here = emb.vertices[v];
    if (here.ideal) {
      emb.angles.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const auto& prev = emb.vertices[(v + 5) % 6];
    const auto& next = emb.vertices[(v + 1) % 6];
    const auto t1 = tangent_to_uhp(here.point, direction(here.point, prev.point));
    const auto t2 = tangent_to_uhp(here.point, direction(here.point, next.point));
    emb.angles.push_back(std::abs(std::arg(t2 / t1)));
  }
  return emb;
}

// ---- band measurements ---------------------------------------------------

namespace {

struct EdgeMeasure {
  double green = 0.0;
  double length = 0.0;
  double offset = 0.0;  // measured distance of the edge from its core geodesic
};

bool within(const TriangleEdge& e) {
  if (std::isinf(e.length)) return std::isinf(e.upper);
  const double tol = 1e-9 * std::max(1.0, e.length);
  return e.length >= e.lower - tol && e.length <= e.upper + tol;
}

}  // namespace

BandMeasurements band_measurements(const HexagonGeometry& hex) {
  return band_measurements(hexagon_embed(hex));
}

BandMeasurements band_measurements(const HexagonEmbedding& emb) {
  const auto& hex = emb.hex;
  const auto& a = hex.a;
  BandMeasurements out;

  auto vtx = [&](int side, int i, int j) -> const EmbeddedVertex& {
    const int pr = pair_index(i, j);
    for (int v = 0; v < 6; ++v)
      if (kCorner[v][0] == side && kCorner[v][1] == pr) return emb.vertices[v];
    throw std::logic_error("band_measurements: bad corner");
  };

  // Inner boundary of the band around C_ij, run from the A_i end to the A_j end.
  auto band_edge = [&](int i, int j, double r) {
    EdgeMeasure m;
    const auto& p = vtx(i, i, j);
    const auto& q = vtx(j, i, j);
    if (r > 0.0) {
      const Vec3& n = emb.line_C[pair_index(i, j)];
      const Path path = equidistant(p.point, q.point, n, r);
      Vec3 x0, dx0;
      path.eval(0.0, x0, dx0);
      m.green = green(path);
      m.length = arclength(path);
      m.offset = std::asinh(minkowski(x0, n));
    } else {
      const auto s = measure_segment(p.point, p.ideal, q.point, q.ideal);
      m.green = s.green;
      m.length = s.length;
    }
    return m;
  };

  if (hex.kind == HexCase::Case1) {
    TriangleRecord t;
    t.label = "T";
    t.target = kPi;
    const int pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    double g = 0.0;
    for (const auto& pr : pairs) {
      const int i = pr[0], j = pr[1];
      const auto m = band_edge(i, j, hex.r(i, j));
      // Boundary cycle E12, E23, then E13 backwards.
      g += (i == 0 && j == 2) ? -m.green : m.green;
      t.edges.push_back(bounded_edge("E" + pair_label(i, j), m.length, m.offset));
    }
    t.area = std::abs(g);
    out.triangles.push_back(std::move(t));
  } else {
    const int i = hex.long_side;
    const int j = std::min((i + 1) % 3, (i + 2) % 3);
    const int k = std::max((i + 1) % 3, (i + 2) % 3);
    const Vec3& n_jk = emb.line_C[pair_index(j, k)];
    const Vec3& m_i = emb.line_A[i];
    Vec3 hn = normalize_normal(lorentz_cross(m_i, n_jk));
    // Orient H's normal toward the C_ik end of A_i.
    if (minkowski(vtx(i, i, k).point, hn) < 0.0) hn = -hn;
    const Vec3 foot_a = normalize_point(lorentz_cross(hn, m_i));
    const Vec3 foot_c = normalize_point(lorentz_cross(hn, n_jk));
    const double h = distance(foot_a, foot_c);

    const std::string mid = "E" + std::to_string(i + 1) + std::to_string(i + 1) + ",";
    auto half = [&](int m, bool low) {
      TriangleRecord t;
      t.label = "T" + std::to_string(m + 1);
      t.target = kPi / 2.0;
      const auto e = band_edge(i, m, a[m]);
      // Where the outer band meets A_i, measured as signed distance to H.
      const Vec3 start = normalize_point(vtx(i, i, m).point * std::cosh(a[m]) +
                                         emb.line_C[pair_index(i, m)] * std::sinh(a[m]));
      const double u = std::asinh(minkowski(start, hn));
      const Path leaf = equidistant(foot_a, foot_c, u >= 0.0 ? hn : -hn, std::abs(u));
      const Vec3 leaf_end = end_point(leaf);
      const auto& corner = vtx(m, j, k);
      const auto piece = measure_segment(corner.point, corner.ideal, leaf_end, false);
      const double g = e.green + piece.green - green(leaf);
      t.edges.push_back(bounded_edge("E" + pair_label(i, m), e.length, e.offset));
      t.edges.push_back(middle_edge(mid + std::to_string(m + 1), arclength(leaf), low ? -u : u));
      t.edges.push_back(plain_edge("C" + pair_label(j, k), piece.length));
      t.area = std::abs(g);
      return t;
    };
    (void)h;
    out.triangles.push_back(half(j, true));
    out.triangles.push_back(half(k, false));
  }

  for (const auto& t : out.triangles) {
    const double res = t.residual();
    if (!(res <= out.max_residual)) out.max_residual = res;  // keeps NaN visible
    for (const auto& e : t.edges) out.bounds_hold = out.bounds_hold && within(e);
  }
  return out;
}

}  // namespace bgeom::hyp
