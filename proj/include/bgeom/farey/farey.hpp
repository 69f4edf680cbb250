#pragma once

#include <optional>
#include <vector>

#include "bgeom/farey/end_invariant.hpp"
#include "bgeom/farey/slope.hpp"

namespace bgeom::farey {

/// Distance in the Farey graph, from the continued fraction of b after
/// sending a to infinity.
int farey_distance(const Slope& a, const Slope& b);

/// A Farey geodesic from a to b, endpoints included. Every vertex is a
/// convergent of b in the frame where a is infinity; a convergent is skipped
/// only when the next coefficient is 1.
std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b);

/// Indices k of the convergents c_k (c_{-1} = infinity) on the geodesic from
/// infinity to the last convergent of `terms`, in order. Ties go to the
/// route through the previous convergent.
std::vector<int> ladder_path(const std::vector<BigInt>& terms);

/// floor(M beta) where M is the normalizing matrix of alpha.
/// Throws UndefinedProjection if beta = alpha.
BigInt twist_coordinate(const Slope& alpha, const Slope& beta);

/// Same for an end invariant; nullopt when a known prefix does not decide it.
std::optional<BigInt> twist_coordinate(const Slope& alpha, const EndInvariant& nu);

/// |twist(alpha, beta) - twist(alpha, gamma)|.
BigInt annular_coeff(const Slope& alpha, const Slope& beta, const Slope& gamma);

}  // namespace bgeom::farey
