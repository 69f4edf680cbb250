#pragma once

// Empirical constants. Each is regenerated by tools/calibrate, which writes
// the measurement log under calibration/.

namespace bgeom::calibration {

// Bound on |annular_coeff - separating neighbor count| (measured max: 1).
inline constexpr int kAnnularFuzz = 2;

// Bound on |spectrum coefficient - aligned continued-fraction term|
// (measured max: 1).
inline constexpr int kSpectrumAlignment = 2;

// Complexity-one resolutions, all slope pairs with |p|, |q| <= 34:
// max |d_beta(pred, succ) - d_beta(P, Q)| and the occupancy constant K with
// exponent a = 1.
inline constexpr int kResolutionDelta = 1;
inline constexpr double kResolutionK = 2.0;
inline constexpr int kResolutionExponent = 1;

}  // namespace bgeom::calibration
