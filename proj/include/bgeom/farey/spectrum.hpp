#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bgeom/farey/end_invariant.hpp"
#include "bgeom/farey/slope.hpp"

namespace bgeom::farey {

/// Annular coefficients d_alpha(nu+, nu-) at the pivots alpha of the Farey
/// geodesic between two end invariants.
///
/// Pivot order: from nu- to nu+ when nu- is rational; from the rational end
/// outward when only nu+ is rational. When both ends are irrational the
/// geodesic is replaced by the broken geodesic through their last common
/// convergent rho: the ray toward nu- (reversed), rho, the ray toward nu+.
struct CoefficientSpectrum {
  std::vector<Slope> pivots;
  std::vector<BigInt> coeffs;
  /// For a pivot that is the convergent c_k in the frame of its ray's base
  /// point, the next continued-fraction coefficient a_{k+1} of that frame.
  std::vector<std::optional<BigInt>> aligned;
  BigInt sup = 0;
  /// The whole geodesic was enumerated (both ends rational, within depth).
  bool complete = false;
  /// Enumeration stopped early because an open prefix ran out.
  bool limited = false;
  /// Rays were developed to this many continued-fraction terms.
  std::size_t depth = 0;
};

/// Throws DegeneratePair when the invariants coincide.
CoefficientSpectrum coefficient_spectrum(const EndInvariant& nu_plus, const EndInvariant& nu_minus,
                                         std::size_t depth);

enum class Decision { Bounded, Unbounded, IndeterminateAtDepth };

std::string to_string(Decision d);

struct DecisionReport {
  Decision decision = Decision::IndeterminateAtDepth;
  CoefficientSpectrum spectrum;
  std::string reason;
};

/// Unbounded as soon as some coefficient reaches K. Bounded when both ends
/// are rational or periodic and every coefficient is below K, with periodic
/// rays developed through at least four certified periods of the
/// transformed continued fraction. Otherwise IndeterminateAtDepth.
DecisionReport decide_bounded_geometry(const EndInvariant& nu_plus, const EndInvariant& nu_minus, const BigInt& K,
                                       std::size_t depth);

}  // namespace bgeom::farey
