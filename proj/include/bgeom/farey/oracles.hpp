#pragma once

#include <cstdint>
#include <vector>

#include "bgeom/farey/slope.hpp"

namespace bgeom::farey {

/// The Farey graph on slopes p/q with |p|, |q| <= H (canonical q >= 0),
/// edges |p s - q r| = 1. Breadth-first search gives a reference distance.
class FareyBox {
 public:
  explicit FareyBox(std::int64_t H);

  std::int64_t height() const { return H_; }
  std::size_t size() const { return p_.size(); }
  /// Vertex index of p/q, or -1 when outside the box.
  int index(std::int64_t p, std::int64_t q) const;
  int index(const Slope& s) const;
  Slope slope(int v) const { return Slope(p_[v], q_[v]); }
  std::int64_t p(int v) const { return p_[v]; }
  std::int64_t q(int v) const { return q_[v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  /// Distances from `source` to every vertex (-1 if unreachable).
  std::vector<int> bfs(int source) const;

 private:
  std::int64_t H_;
  std::vector<std::int64_t> p_, q_;
  std::vector<int> slot_;  // (p + H) * (H + 1) + q -> vertex, or -1
  std::vector<std::vector<int>> adj_;
};

/// Number of Farey neighbors n of alpha for which the edge alpha-n separates
/// beta from gamma on the circle of slopes (cyclic interleaving, decided by
/// the sign of a cross ratio). Neighbors equal to beta or gamma do not count.
/// Enumerates neighbors n = n0 + t alpha for |t| <= t_max.
std::int64_t separating_neighbors(const Slope& alpha, const Slope& beta, const Slope& gamma, std::int64_t t_max);

}  // namespace bgeom::farey
