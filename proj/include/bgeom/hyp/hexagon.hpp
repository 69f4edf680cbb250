#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "bgeom/hyp/lorentz.hpp"

namespace bgeom::hyp {

/// Index of the perpendicular side joining A_i and A_j (0-based i, j):
/// {0,1} -> 0 (C12), {1,2} -> 1 (C23), {0,2} -> 2 (C13).
int pair_index(int i, int j);

enum class HexCase {
  Case1,  // all three triangle inequalities a_i <= a_j + a_k hold
  Case2,  // a_long > sum of the other two
};

/// A band: the r-neighborhood of a perpendicular side C_ij (i != j), or in
/// Case 2 the middle band foliated by equidistants of H (i == j == long side).
struct Band {
  int i = 0;
  int j = 0;
  double r = 0.0;          // band width (r_ij) or, for the middle band, r_ii
  double length = 0.0;     // c_ij, or the height h of the middle band
  double curvature = 0.0;  // tanh(r) of the inner boundary
};

/// A boundary edge of a complementary triangle.
struct TriangleEdge {
  std::string label;      // "E12", "E11,2", "C23" ...
  double length = 0.0;
  double curvature = 0.0;  // geodesic curvature, positive when it bends away from the triangle
  double lower = 0.0;      // length bound from below (0 if none applies)
  double upper = 0.0;      // length bound from above (+inf if none applies)
};

/// A complementary curvilinear triangle T (Case 1) or a half triangle T_m
/// (Case 2). target is pi for T and pi/2 for T_m: sum(e kappa) + area = target.
struct TriangleRecord {
  std::string label;
  std::vector<TriangleEdge> edges;
  double area = 0.0;
  double target = 0.0;
  /// |sum(e kappa) + area - target| for T; the doubled-triangle residual
  /// |2 (sum(e kappa) + area) - pi| for T_m.
  double residual() const;
};

/// Right-angled hexagon with alternating sides A1, A2, A3 of lengths a
/// (0 encodes an ideal vertex) and perpendicular sides C12, C23, C13.
struct HexagonGeometry {
  std::array<double, 3> a{};
  std::array<double, 3> c{};  // indexed by pair_index; +inf next to an ideal vertex
  HexCase kind = HexCase::Case1;
  int long_side = -1;         // Case 2 only
  std::vector<Band> bands;
  // Case 2 data: position of the band edges on A_long measured from the foot
  // of the common perpendicular H to the opposite side, oriented from the
  // C_{long,j} end to the C_{long,k} end (j < k), and the length of H.
  double u_lo = 0.0;
  double u_hi = 0.0;
  double h = 0.0;
  /// Closed-form triangle data (edge lengths via equidistant scaling,
  /// areas via band areas). band_measurements recomputes these in the model.
  std::vector<TriangleRecord> triangles;

  double r(int i, int j) const;
};

/// Throws DomainError for negative or non-finite input.
HexagonGeometry hexagon_solve(double a1, double a2, double a3);

struct EmbeddedVertex {
  std::string label;          // e.g. "A1^C12"
  Vec3 point;                 // hyperboloid (null vector for ideal)
  std::complex<double> uhp;   // upper half-plane (real for ideal)
  bool ideal = false;
};

struct EmbeddedSide {
  std::string label;          // "A1", "C12", ...
  int from = 0;               // vertex indices
  int to = 0;
  Vec3 normal;                // unit normal of the supporting geodesic
  double measured_length = 0.0;
};

/// Explicit placement of the hexagon in H^2, reported in upper half-plane
/// coordinates. Vertices run cyclically A1^C13, A1^C12, A2^C12, A2^C23,
/// A3^C23, A3^C13; an ideal side A_i collapses its two vertices to one point.
struct HexagonEmbedding {
  HexagonGeometry hex;
  std::vector<EmbeddedVertex> vertices;
  std::vector<EmbeddedSide> sides;  // A1, C12, A2, C23, A3, C13
  std::vector<double> angles;       // interior angle at each finite vertex (NaN if ideal)
  double area = 0.0;                // by boundary integration of dx/y

  std::array<Vec3, 3> line_C;       // normals of the C lines, by pair_index (inward)
  std::array<Vec3, 3> line_A;       // normals of the A lines (undefined when a_i = 0)

  const Vec3& vertex(int side_a, int pair) const;
};

HexagonEmbedding hexagon_embed(const HexagonGeometry& hex);

struct BandMeasurements {
  /// Triangle records measured in the embedded model: edge lengths by
  /// arclength integration, areas by boundary integration.
  std::vector<TriangleRecord> triangles;
  double max_residual = 0.0;
  bool bounds_hold = true;
};

BandMeasurements band_measurements(const HexagonEmbedding& emb);
BandMeasurements band_measurements(const HexagonGeometry& hex);

}  // namespace bgeom::hyp
