#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgeom/farey/slope.hpp"
#include "bgeom/moves/pants.hpp"
#include "bgeom/moves/sequence.hpp"

namespace bgeom::moves {

/// Elementary-move sequence along a Farey geodesic beta_0 = P, ..., beta_m = Q
/// on S1,1 or S0,4: P_j = {beta_j}, one move per edge. The index of the move
/// out of beta_j is twist(beta_j, beta_{j+1}) - twist(beta_j, Q), which is 0
/// or 1: the next vertex is the floor or the ceiling of Q in the chart where
/// beta_j is infinity. The geodesic is computed in a fixed
/// orientation of the pair, so swapping P and Q reverses the vertex list.
/// Throws UnsupportedSurface on other surfaces and DegeneratePair if P = Q.
MoveSequence generate_resolution_xi1(const SurfaceSig& sig, const farey::Slope& P, const farey::Slope& Q);

struct VertexRow {
  farey::Slope beta;
  int first = 0, last = 0;  // J_beta = [first, last]
  std::optional<farey::Slope> pred, succ;
  bool pred_meets = true, succ_meets = true;
  /// d_beta(pred, succ), d_beta(P, Q) and their difference; interior only.
  std::optional<farey::BigInt> local, global;
  farey::BigInt deviation = 0;
};

struct ResolutionReport {
  farey::Slope P, Q;
  int distance = 0;  // d_S(P, Q) = m
  int moves = 0;
  bool endpoints_ok = false;
  /// Every P_j lies on some geodesic: d(P, beta) + d(beta, Q) = d(P, Q).
  bool every_step_on_geodesic = false;
  std::vector<std::string> non_interval;
  bool pred_succ_meet = true;
  std::vector<VertexRow> vertices;  // distinct curves in order of appearance

  farey::BigInt delta = 0;  // max deviation over interior vertices
  /// sup over Y of d_Y(P, Q): max of d_S and the annular coefficients.
  farey::BigInt sup_dY = 0;
  /// max over s < t of |J_[s,t]| / ((t - s) sup_dY), with exponent a = 1.
  double K = 0;
  int a = 1;
  /// Sum over interior vertices of d_beta(pred, succ), and the sum of the
  /// coefficient spectrum of (Q, P).
  farey::BigInt twist_length = 0;
  farey::BigInt spectrum_sum = 0;

  bool ok() const { return endpoints_ok && every_step_on_geodesic && non_interval.empty() && pred_succ_meet; }
};

/// Measures the controlled-resolution properties of a complexity-one
/// sequence running from P to Q. Never throws on property failure; failures
/// are reported. Throws UnsupportedSurface for other surfaces.
ResolutionReport check_resolution_properties(const MoveSequence& seq, const farey::Slope& P, const farey::Slope& Q);

struct ResolutionSweep {
  std::int64_t height = 0;
  std::size_t slopes = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;  // pairs whose report is not ok()
  farey::BigInt delta = 0;
  double K = 0;
  /// max |twist_length - spectrum_sum| and the largest geodesic length seen.
  farey::BigInt twist_gap = 0;
  int max_distance = 0;
};

/// Generates and checks the resolution for every ordered pair of distinct
/// slopes p/q with |p|, |q| <= height.
ResolutionSweep sweep_resolutions_xi1(const SurfaceSig& sig, std::int64_t height);

/// Shortest move sequence from P to Q by breadth-first search over moves with
/// twist index in [-window, window], up to `radius` moves. Neighbors are
/// expanded in curve-id then index order, so the result is deterministic.
std::optional<MoveSequence> bfs_resolution(const PantsDecomposition& P, const PantsDecomposition& Q, int radius,
                                           int window);

}  // namespace bgeom::moves
