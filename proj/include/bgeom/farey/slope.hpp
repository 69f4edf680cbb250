#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bgeom::farey {

using BigInt = boost::multiprecision::cpp_int;

enum class Surface { Torus1, Sphere4 };

/// Floor of a/b for b != 0 (cpp_int division truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b);

/// An extended rational p/q, the slope of a simple closed curve. Canonical
/// form: gcd(|p|, q) = 1, q >= 0, and infinity is 1/0.
class Slope {
 public:
  Slope() : p_(1), q_(0) {}
  /// Reduces to canonical form. Throws DomainError for 0/0.
  Slope(BigInt p, BigInt q);
  explicit Slope(long long n) : p_(n), q_(1) {}

  static Slope infinity() { return Slope(); }
  /// Accepts "p/q", an integer, "inf" or "1/0". Throws ParseError.
  static Slope parse(std::string_view text);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }

  /// "p/q", or "inf" for 1/0.
  std::string str() const;

  friend bool operator==(const Slope& a, const Slope& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  /// Lexicographic on (q, p); only used for ordered containers.
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.q_ != b.q_ ? a.q_ < b.q_ : a.p_ < b.p_;
  }

 private:
  BigInt p_;
  BigInt q_;
};

/// |p s - q r|, doubled on the four-holed sphere.
BigInt intersection_number(const Slope& a, const Slope& b, Surface surface = Surface::Torus1);

/// Integer 2x2 matrix acting on slopes by (p, q) -> (a p + b q, c p + d q).
struct Mat2 {
  BigInt a{1}, b{0}, c{0}, d{1};

  Slope operator()(const Slope& s) const;
  Mat2 operator*(const Mat2& o) const;
  BigInt det() const { return a * d - b * c; }
  /// Inverse of a unimodular matrix. Throws DomainError otherwise.
  Mat2 inverse() const;
};

/// The determinant-one matrix [[v, -u], [-q, p]] with p v - q u = 1 and
/// 0 <= v < q (v = 1, u = 0 at infinity). It sends alpha to infinity.
Mat2 normalizing_matrix(const Slope& alpha);

}  // namespace bgeom::farey
