#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgeom/farey/slope.hpp"

namespace bgeom::farey {

/// An end invariant on the punctured torus, given as a point of the extended
/// real line: a rational slope, an eventually periodic continued fraction
/// (an irrational quadratic surd), or a finite list of leading coefficients
/// of an irrational whose tail is unknown.
class EndInvariant {
 public:
  enum class Kind { Rational, Periodic, Prefix };

  static EndInvariant rational(const Slope& s);
  /// Coefficients a0, a1, ... = pre followed by period repeated forever.
  static EndInvariant periodic(std::vector<BigInt> pre, std::vector<BigInt> period);
  /// Known leading coefficients of an irrational (at least a0).
  static EndInvariant prefix(std::vector<BigInt> known);

  /// Accepts a slope ("p/q", "inf", decimal), a finite continued fraction
  /// "[a0;a1,...,an]", a periodic one "[a0;a1,...](period:k)" whose last k
  /// listed terms repeat, or an open prefix "[a0;a1,...,an,...]".
  static EndInvariant parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  /// Rational or periodic: the full coefficient sequence is known.
  bool is_closed() const { return kind_ != Kind::Prefix; }

  const Slope& slope() const { return slope_; }
  const std::vector<BigInt>& preperiod() const { return pre_; }
  const std::vector<BigInt>& period() const { return period_; }

  /// Coefficient a_k, or nullopt past the end (rational) or past the known
  /// prefix.
  std::optional<BigInt> coeff(std::size_t k) const;

  std::string str() const;

  friend bool operator==(const EndInvariant& a, const EndInvariant& b);

 private:
  Kind kind_ = Kind::Rational;
  Slope slope_;
  std::vector<BigInt> pre_;
  std::vector<BigInt> period_;
};

/// Continued fraction of M x for a unimodular M, developed exactly from the
/// coefficients of x.
struct TransformedCF {
  std::vector<BigInt> terms;
  /// The expansion ended (M x rational) or is the infinite image of x.
  bool finite = false;
  /// Development stopped because the known prefix of x ran out.
  bool limited = false;
  /// For periodic x: terms[periodic_start + i] repeats with period_length,
  /// certified by a repeated internal state.
  std::optional<std::size_t> periodic_start;
  std::size_t period_length = 0;
};

TransformedCF transform_cf(const Mat2& M, const EndInvariant& x, std::size_t max_terms);

/// floor(M x), exact. nullopt when the known prefix of x does not decide it.
/// Throws UndefinedProjection if M x is infinity.
std::optional<BigInt> floor_mobius(const Mat2& M, const EndInvariant& x);

}  // namespace bgeom::farey
