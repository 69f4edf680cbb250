#include "bgeom/farey/slope.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>

#include "bgeom/errors.hpp"

namespace bgeom::farey {

namespace {

// Magnitudes below 2^62 take machine-integer paths.
bool small(const BigInt& x) {
  return x.backend().size() == 1 && x.backend().limbs()[0] < (std::uint64_t(1) << 62);
}

std::string int_str(const BigInt& x) {
  return small(x) ? std::to_string(x.convert_to<std::int64_t>()) : x.str();
}

}  // namespace

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (small(a) && small(b)) {
    const auto x = a.convert_to<std::int64_t>(), y = b.convert_to<std::int64_t>();
    std::int64_t q = x / y;
    if (x % y != 0 && ((x < 0) != (y < 0))) --q;
    return q;
  }
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Slope::Slope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw DomainError("slope 0/0 is undefined");
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  if (q_ == 0) {
    p_ = 1;
    return;
  }
  if (small(p_) && small(q_)) {
    const auto x = p_.convert_to<std::int64_t>(), y = q_.convert_to<std::int64_t>();
    const std::int64_t g = std::gcd(x, y);
    if (g != 1) {
      p_ = x / g;
      q_ = y / g;
    }
    return;
  }
  const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(p_), q_);
  p_ /= g;
  q_ /= g;
}

namespace {

BigInt parse_int(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw ParseError("bad slope: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("bad slope: '" + std::string(whole) + "'");
  if (s.size() - i <= 18) {
    std::int64_t v = 0;
    std::from_chars(s.data() + i, s.data() + s.size(), v);
    return s[0] == '-' ? -v : v;
  }
  BigInt v(std::string(s.substr(i)));
  return s[0] == '-' ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "inf" || t == "infinity" || t == "oo") return infinity();
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(t, text), 1);
  const BigInt p = parse_int(trim(t.substr(0, slash)), text);
  const BigInt q = parse_int(trim(t.substr(slash + 1)), text);
  if (p == 0 && q == 0) throw ParseError("bad slope: 0/0");
  return Slope(p, q);
}

std::string Slope::str() const {
  if (is_infinity()) return "inf";
  return int_str(p_) + "/" + int_str(q_);
}

BigInt intersection_number(const Slope& a, const Slope& b, Surface surface) {
  BigInt i = boost::multiprecision::abs(a.p() * b.q() - a.q() * b.p());
  return surface == Surface::Sphere4 ? BigInt(2 * i) : i;
}

Slope Mat2::operator()(const Slope& s) const { return Slope(a * s.p() + b * s.q(), c * s.p() + d * s.q()); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
  const BigInt D = det();
  if (D == 1) return {d, -b, -c, a};
  if (D == -1) return {-d, b, c, -a};
  throw DomainError("matrix is not unimodular");
}

Mat2 normalizing_matrix(const Slope& alpha) {
  const BigInt& p = alpha.p();
  const BigInt& q = alpha.q();
  if (q == 0) return {};
  if (q == 1) return {0, 1, -1, p};
  if (small(p) && small(q) && p.backend().limbs()[0] < (1u << 31) && q.backend().limbs()[0] < (1u << 31)) {
    const auto pp = p.convert_to<std::int64_t>(), qq = q.convert_to<std::int64_t>();
    std::int64_t r0 = ((pp % qq) + qq) % qq, r1 = qq, s0 = 1, s1 = 0;
    while (r1 != 0) {
      const std::int64_t k = r0 / r1;
      std::int64_t t = r0 - k * r1;
      r0 = r1;
      r1 = t;
      t = s0 - k * s1;
      s0 = s1;
      s1 = t;
    }
    const std::int64_t v = ((s0 % qq) + qq) % qq;
    const std::int64_t u = (pp * v - 1) / qq;
    return {v, -u, -qq, pp};
  }
  // Extended Euclid for v = p^{-1} mod q.
  BigInt r0 = ((p % q) + q) % q, r1 = q, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const BigInt k = r0 / r1;
    BigInt t = r0 - k * r1;
    r0 = r1;
    r1 = t;
    t = s0 - k * s1;
    s0 = s1;
    s1 = t;
  }
  // r0 = 1 = s0 * (p mod q) + (...) q
  BigInt v = ((s0 % q) + q) % q;
  if (q == 1) v = 0;
  const BigInt u = (p * v - 1) / q;
  return {v, -u, -q, p};
}

}  // namespace bgeom::farey
