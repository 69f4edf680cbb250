#pragma once

#include <optional>
#include <string>

namespace bgeom::hyp {

/// Global constants shared by the estimates: a Margulis constant eps0, the
/// thin-part threshold eps1, the Bers constant L1, the Sullivan bilipschitz
/// constant K0 and the additive constant c of the tube-radius bound.
///
/// None of these is pinned by theory at desk scale. The defaults
/// (eps0 = 0.1, eps1 = 0.01, K0 = 2, L1 = 6|chi|, c = 0) are conventions and
/// every emitter flags them as such.
class ConstantsProfile {
 public:
  /// Throws DomainError unless 0 < eps1 < eps0, K0 >= 1, eps1 < eps0/K0,
  /// L1 > 0 and tube_radius_c >= 0.
  ConstantsProfile(double eps0, double eps1, double L1, double K0, double tube_radius_c);

  /// Default profile for a surface of Euler characteristic chi (< 0).
  static ConstantsProfile defaults(int chi = -1);

  double eps0() const { return eps0_; }
  double eps1() const { return eps1_; }
  double L1() const { return L1_; }
  double K0() const { return K0_; }
  double tube_radius_c() const { return tube_radius_c_; }

  bool is_default() const { return is_default_; }

  /// One-line description used in CSV/JSON metadata.
  std::string describe() const;

  /// Parses a JSON object {"eps0":..,"eps1":..,"L1":..,"K0":..,"c":..};
  /// missing keys fall back to `base`.
  static ConstantsProfile from_json(const std::string& text, const ConstantsProfile& base);

 private:
  double eps0_;
  double eps1_;
  double L1_;
  double K0_;
  double tube_radius_c_;
  bool is_default_ = false;
};

}  // namespace bgeom::hyp
