#include "bgeom/farey/cf.hpp"

#include <cctype>
#include <string>

#include "bgeom/errors.hpp"

namespace bgeom::farey {

std::vector<BigInt> cf_expand(const Slope& x) {
  std::vector<BigInt> out;
  if (x.is_infinity()) return out;
  BigInt p = x.p(), q = x.q();
  while (q != 0) {
    const BigInt a = floor_div(p, q);
    out.push_back(a);
    BigInt r = p - a * q;
    p = q;
    q = r;
  }
  return out;
}

Slope cf_value(const std::vector<BigInt>& terms) {
  BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // (p_{-1}, q_{-1}) and (p_{-2}, q_{-2})
  for (const auto& a : terms) {
    BigInt p = a * p0 + p1, q = a * q0 + q1;
    p1 = p0;
    q1 = q0;
    p0 = p;
    q0 = q;
  }
  return Slope(p0, q0);
}

std::vector<Slope> convergents(const std::vector<BigInt>& terms) {
  std::vector<Slope> out;
  BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  for (const auto& a : terms) {
    BigInt p = a * p0 + p1, q = a * q0 + q1;
    p1 = p0;
    q1 = q0;
    p0 = p;
    q0 = q;
    out.emplace_back(p0, q0);
  }
  return out;
}

Slope parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  const auto dot = s.find('.');
  if (dot == std::string::npos || s.find('/') != std::string::npos) return Slope::parse(s);
  const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad decimal: '" + std::string(text) + "'");
  const bool neg = !whole.empty() && whole[0] == '-';
  const std::string digits = (neg || (!whole.empty() && whole[0] == '+')) ? whole.substr(1) : whole;
  if (digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad decimal: '" + std::string(text) + "'");
  BigInt num(digits.empty() ? std::string("0") : digits);
  BigInt den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Slope(neg ? BigInt(-num) : num, den);
}

}  // namespace bgeom::farey
