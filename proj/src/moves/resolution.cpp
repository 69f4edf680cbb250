#include "bgeom/moves/resolution.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "bgeom/errors.hpp"
#include "bgeom/farey/end_invariant.hpp"
#include "bgeom/farey/farey.hpp"
#include "bgeom/farey/spectrum.hpp"

namespace bgeom::moves {

using farey::BigInt;
using farey::Slope;

MoveSequence generate_resolution_xi1(const SurfaceSig& sig, const Slope& P, const Slope& Q) {
  if (!sig.is_xi1()) throw UnsupportedSurface("resolution generation needs S1,1 or S0,4, got " + sig.str());
  if (P == Q) throw DegeneratePair("resolution endpoints coincide: " + P.str());

  std::vector<Slope> beta;
  if (Q < P) {
    beta = farey::farey_geodesic(Q, P);
    std::reverse(beta.begin(), beta.end());
  } else {
    beta = farey::farey_geodesic(P, Q);
  }

  const auto start = PantsDecomposition::seed(sig, P);
  const MoveType type = start.support_type(P.str());
  std::vector<ElementaryMove> moves;
  for (std::size_t i = 0; i + 1 < beta.size(); ++i) {
    ElementaryMove m;
    m.removed = beta[i].str();
    m.inserted = beta[i + 1].str();
    m.type = type;
    m.twist_index = farey::twist_coordinate(beta[i], beta[i + 1]) - farey::twist_coordinate(beta[i], Q);
    moves.push_back(std::move(m));
  }
  MoveSequence seq(start, std::move(moves));
  seq.from = P;
  seq.to = Q;
  return seq;
}

ResolutionReport check_resolution_properties(const MoveSequence& seq, const Slope& P, const Slope& Q) {
  const SurfaceSig& sig = seq.surface();
  if (!sig.is_xi1()) throw UnsupportedSurface("resolution properties are measured on S1,1 or S0,4 only");
  const farey::Surface fs = sig.farey_surface();

  ResolutionReport r;
  r.P = P;
  r.Q = Q;
  r.distance = farey::farey_distance(P, Q);
  r.moves = seq.length();
  const auto& D = seq.decompositions();
  r.endpoints_ok = D.front().contains(P.str()) && D.back().contains(Q.str());

  r.every_step_on_geodesic = true;
  std::vector<Slope> order;
  for (const auto& d : D) {
    const Slope b = Slope::parse(d.curves().front());
    if (farey::farey_distance(P, b) + farey::farey_distance(b, Q) != r.distance) r.every_step_on_geodesic = false;
    if (std::find(order.begin(), order.end(), b) == order.end()) order.push_back(b);
  }

  r.non_interval = occupancy_intervals(seq).flagged;
  r.sup_dY = r.distance;
  for (const auto& b : order) {
    VertexRow row;
    row.beta = b;
    const auto& occ = seq.occupancy().at(b.str());
    row.first = occ.front();
    row.last = occ.back();
    if (std::find(r.non_interval.begin(), r.non_interval.end(), b.str()) == r.non_interval.end()) {
      const auto [pred, succ] = predecessor_successor(seq, b.str());
      if (pred) row.pred = Slope::parse(*pred);
      if (succ) row.succ = Slope::parse(*succ);
    }
    if (row.pred) row.pred_meets = farey::intersection_number(b, *row.pred, fs) > 0;
    if (row.succ) row.succ_meets = farey::intersection_number(b, *row.succ, fs) > 0;
    r.pred_succ_meet = r.pred_succ_meet && row.pred_meets && row.succ_meets;
    if (row.pred && row.succ && b != P && b != Q) {
      row.local = farey::annular_coeff(b, *row.pred, *row.succ);
      row.global = farey::annular_coeff(b, P, Q);
      row.deviation = boost::multiprecision::abs(*row.local - *row.global);
      r.delta = std::max(r.delta, row.deviation);
      r.twist_length += *row.local;
      r.sup_dY = std::max(r.sup_dY, *row.global);
    }
    r.vertices.push_back(std::move(row));
  }

  // |J_[s,t]| counts decomposition indices holding one of beta_s..beta_t.
  const int m = static_cast<int>(r.vertices.size()) - 1;
  const double sup = r.sup_dY.convert_to<double>();
  for (int s = 0; s < m; ++s) {
    int lo = r.vertices[s].first, hi = r.vertices[s].last;
    for (int t = s + 1; t <= m; ++t) {
      lo = std::min(lo, r.vertices[t].first);
      hi = std::max(hi, r.vertices[t].last);
      if (sup > 0) r.K = std::max(r.K, (hi - lo + 1) / ((t - s) * sup));
    }
  }

  if (r.distance >= 2) {
    const auto spectrum = farey::coefficient_spectrum(farey::EndInvariant::rational(Q), farey::EndInvariant::rational(P),
                                                      static_cast<std::size_t>(r.distance) + 1);
    for (const auto& c : spectrum.coeffs) r.spectrum_sum += c;
  }
  return r;
}

ResolutionSweep sweep_resolutions_xi1(const SurfaceSig& sig, std::int64_t height) {
  std::vector<Slope> slopes{Slope::infinity()};
  for (std::int64_t q = 1; q <= height; ++q)
    for (std::int64_t p = -height; p <= height; ++p)
      if (std::gcd(p, q) == 1) slopes.emplace_back(p, q);
  ResolutionSweep w;
  w.height = height;
  w.slopes = slopes.size();
  for (const auto& P : slopes)
    for (const auto& Q : slopes) {
      if (P == Q) continue;
      const auto r = check_resolution_properties(generate_resolution_xi1(sig, P, Q), P, Q);
      ++w.pairs;
      if (!r.ok()) ++w.failures;
      w.delta = std::max(w.delta, r.delta);
      w.K = std::max(w.K, r.K);
      w.twist_gap = std::max(w.twist_gap, BigInt(boost::multiprecision::abs(r.twist_length - r.spectrum_sum)));
      w.max_distance = std::max(w.max_distance, r.distance);
    }
  return w;
}

std::optional<MoveSequence> bfs_resolution(const PantsDecomposition& P, const PantsDecomposition& Q, int radius,
                                           int window) {
  if (!(P.surface() == Q.surface())) throw UnsupportedSurface("endpoints live on different surfaces");
  if (radius < 0 || window < 0) throw DomainError("radius and window must be nonnegative");
  struct Node {
    PantsDecomposition d;
    int parent;
    ElementaryMove move;
    int depth;
  };
  std::vector<Node> nodes{{P, -1, {}, 0}};
  std::map<std::string, int> seen{{P.str(), 0}};
  std::deque<int> frontier{0};
  int hit = P == Q ? 0 : -1;
  while (hit < 0 && !frontier.empty()) {
    const int v = frontier.front();
    frontier.pop_front();
    if (nodes[v].depth >= radius) continue;
    for (auto& [m, d] : neighbor_moves(nodes[v].d, window)) {
      const std::string key = d.str();
      if (seen.count(key)) continue;
      const int w = static_cast<int>(nodes.size());
      seen.emplace(key, w);
      const bool done = d == Q;
      nodes.push_back({std::move(d), v, std::move(m), nodes[v].depth + 1});
      if (done) {
        hit = w;
        break;
      }
      frontier.push_back(w);
    }
  }
  if (hit < 0) return std::nullopt;
  std::vector<ElementaryMove> moves;
  for (int v = hit; nodes[v].parent >= 0; v = nodes[v].parent) moves.push_back(nodes[v].move);
  std::reverse(moves.begin(), moves.end());
  return MoveSequence(P, std::move(moves));
}

}  // namespace bgeom::moves
