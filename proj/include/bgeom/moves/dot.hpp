#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgeom/farey/slope.hpp"
#include "bgeom/moves/pants.hpp"

namespace bgeom::moves {

/// Undirected graph: one node per pants, one box node per puncture, one edge
/// per curve (a loop for a curve bounding the same pants twice).
std::string pants_graph_dot(const PantsDecomposition& P);

/// The Farey graph restricted to slopes of height at most `height` within
/// `radius` of `center`. Vertices and edges of `path` are drawn in red.
/// Throws DomainError if the center lies outside the height box.
std::string farey_ball_dot(const farey::Slope& center, int radius, std::int64_t height,
                           const std::vector<farey::Slope>& path = {});

}  // namespace bgeom::moves
