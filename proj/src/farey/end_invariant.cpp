#include "bgeom/farey/end_invariant.hpp"

#include <cctype>
#include <map>
#include <tuple>

#include "bgeom/errors.hpp"
#include "bgeom/farey/cf.hpp"

namespace bgeom::farey {

namespace {

void check_tail(const std::vector<BigInt>& terms, std::size_t from) {
  for (std::size_t k = from; k < terms.size(); ++k)
    if (terms[k] < 1) throw DomainError("continued fraction terms after the first must be positive");
}

std::string join(const std::vector<BigInt>& v, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t k = from; k < to; ++k) {
    if (k > from) out += ",";
    out += v[k].str();
  }
  return out;
}

}  // namespace

EndInvariant EndInvariant::rational(const Slope& s) {
  EndInvariant e;
  e.kind_ = Kind::Rational;
  e.slope_ = s;
  return e;
}

EndInvariant EndInvariant::periodic(std::vector<BigInt> pre, std::vector<BigInt> period) {
  if (period.empty()) throw DomainError("periodic continued fraction needs a nonempty period");
  check_tail(pre, 1);
  check_tail(period, 0);
  // Smallest repeating unit.
  for (std::size_t len = 1; len < period.size(); ++len) {
    if (period.size() % len != 0) continue;
    bool ok = true;
    for (std::size_t k = len; k < period.size() && ok; ++k) ok = period[k] == period[k - len];
    if (ok) {
      period.resize(len);
      break;
    }
  }
  // Shortest preperiod.
  while (!pre.empty() && pre.back() == period.back()) {
    period.insert(period.begin(), period.back());
    period.pop_back();
    pre.pop_back();
  }
  EndInvariant e;
  e.kind_ = Kind::Periodic;
  e.pre_ = std::move(pre);
  e.period_ = std::move(period);
  return e;
}

EndInvariant EndInvariant::prefix(std::vector<BigInt> known) {
  if (known.empty()) throw DomainError("prefix needs at least one coefficient");
  check_tail(known, 1);
  EndInvariant e;
  e.kind_ = Kind::Prefix;
  e.pre_ = std::move(known);
  return e;
}

EndInvariant EndInvariant::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  // Accept the unicode ellipsis as well.
  for (std::size_t pos; (pos = s.find("\xE2\x80\xA6")) != std::string::npos;) s.replace(pos, 3, "...");
  if (s.empty()) throw ParseError("empty end invariant");
  if (s[0] != '[') return rational(parse_rational(s));

  const auto close = s.find(']');
  if (close == std::string::npos) throw ParseError("missing ']' in '" + std::string(text) + "'");
  const std::string body = s.substr(1, close - 1);
  const std::string rest = s.substr(close + 1);

  std::vector<BigInt> terms;
  bool open = false;
  std::size_t start = 0;
  auto take = [&](const std::string& tok) {
    if (open) throw ParseError("'...' must be the last term");
    if (tok == "...") {
      open = true;
      return;
    }
    const std::size_t sign = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (tok.size() == sign || tok.find_first_not_of("0123456789", sign) != std::string::npos)
      throw ParseError("bad continued fraction term '" + tok + "'");
    BigInt v(tok.substr(sign));
    terms.push_back(tok[0] == '-' ? BigInt(-v) : v);
  };
  for (std::size_t k = 0; k <= body.size(); ++k) {
    if (k == body.size() || body[k] == ';' || body[k] == ',') {
      if (k == body.size() && k == start && !terms.empty()) break;
      take(body.substr(start, k - start));
      start = k + 1;
    }
  }
  if (terms.empty()) throw ParseError("continued fraction needs at least one term");

  std::size_t period = 0;
  if (!rest.empty()) {
    const std::string tag = "(period:";
    if (rest.compare(0, tag.size(), tag) != 0 || rest.back() != ')')
      throw ParseError("expected '(period:k)' after ']', got '" + rest + "'");
    const std::string num = rest.substr(tag.size(), rest.size() - tag.size() - 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad period length '" + num + "'");
    period = std::stoul(num);
    if (period == 0 || period > terms.size()) throw ParseError("period length out of range");
    if (open) throw ParseError("a periodic stream cannot also end in '...'");
  }

  try {
    if (period > 0) {
      std::vector<BigInt> pre(terms.begin(), terms.end() - static_cast<std::ptrdiff_t>(period));
      std::vector<BigInt> per(terms.end() - static_cast<std::ptrdiff_t>(period), terms.end());
      return periodic(std::move(pre), std::move(per));
    }
    check_tail(terms, 1);
    if (open) return prefix(std::move(terms));
    return rational(cf_value(terms));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::optional<BigInt> EndInvariant::coeff(std::size_t k) const {
  switch (kind_) {
    case Kind::Rational: {
      const auto terms = cf_expand(slope_);
      if (k < terms.size()) return terms[k];
      return std::nullopt;
    }
    case Kind::Periodic:
      if (k < pre_.size()) return pre_[k];
      return period_[(k - pre_.size()) % period_.size()];
    case Kind::Prefix:
      if (k < pre_.size()) return pre_[k];
      return std::nullopt;
  }
  return std::nullopt;
}

std::string EndInvariant::str() const {
  switch (kind_) {
    case Kind::Rational:
      return slope_.str();
    case Kind::Periodic: {
      std::vector<BigInt> all = pre_;
      all.insert(all.end(), period_.begin(), period_.end());
      std::string out = "[" + all[0].str();
      if (all.size() > 1) out += ";" + join(all, 1, all.size());
      return out + "](period:" + std::to_string(period_.size()) + ")";
    }
    case Kind::Prefix: {
      std::string out = "[" + pre_[0].str() + ";";
      if (pre_.size() > 1) out += join(pre_, 1, pre_.size()) + ",";
      return out + "...]";
    }
  }
  return {};
}

bool operator==(const EndInvariant& a, const EndInvariant& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == EndInvariant::Kind::Rational) return a.slope_ == b.slope_;
  return a.pre_ == b.pre_ && a.period_ == b.period_;
}

namespace {

// floor((a x + b)/(c x + d)) for x in the open interval (lo, lo + 1), lo an
// integer, provided the image interval has no pole and lies in one unit cell.
std::optional<BigInt> floor_on_cell(const Mat2& S, const BigInt& lo) {
  // Endpoints x = lo and x = lo + 1 in projective form (x, 1).
  const BigInt n0 = S.a * lo + S.b, d0 = S.c * lo + S.d;
  const BigInt n1 = n0 + S.a, d1 = d0 + S.c;
  if (d0 == 0 || d1 == 0 || (d0 > 0) != (d1 > 0)) return std::nullopt;
  BigInt f0 = floor_div(n0, d0), f1 = floor_div(n1, d1);
  // Image interval is open: an endpoint equal to an integer m bounds y < m
  // from above, so its floor counts as m - 1 on that side.
  const bool exact0 = n0 % d0 == 0, exact1 = n1 % d1 == 0;
  // d0 and d1 share a sign, so cross-multiplying keeps the order.
  const bool first_low = n0 * d1 <= n1 * d0;
  BigInt lo_f = first_low ? f0 : f1;
  BigInt hi_f = first_low ? f1 : f0;
  const bool hi_exact = first_low ? exact1 : exact0;
  if (hi_exact) hi_f -= 1;
  if (lo_f == hi_f) return lo_f;
  return std::nullopt;
}

Mat2 emit(const BigInt& b) { return {0, 1, 1, -b}; }
Mat2 ingest(const BigInt& a) { return {a, 1, 1, 0}; }

constexpr std::size_t kIngestCap = 200000;

}  // namespace

TransformedCF transform_cf(const Mat2& M, const EndInvariant& x, std::size_t max_terms) {
  TransformedCF out;
  if (x.is_rational()) {
    out.terms = cf_expand(M(x.slope()));
    if (out.terms.size() > max_terms) out.terms.resize(max_terms);
    else out.finite = true;
    return out;
  }
  // State: M x = S x_j with x_j the j-th complete quotient of x, which lies
  // in (a_j, a_j + 1) because the tail is irrational.
  Mat2 S = M;
  std::size_t j = 0;
  std::map<std::tuple<BigInt, BigInt, BigInt, BigInt, std::size_t>, std::size_t> seen;
  const bool periodic = x.kind() == EndInvariant::Kind::Periodic;
  std::size_t ingested = 0;
  while (out.terms.size() < max_terms) {
    const auto aj = x.coeff(j);
    if (!aj) {
      out.limited = true;
      return out;
    }
    if (auto f = floor_on_cell(S, *aj)) {
      if (periodic && j >= x.preperiod().size()) {
        const std::size_t phase = (j - x.preperiod().size()) % x.period().size();
        const auto key = std::make_tuple(S.a, S.b, S.c, S.d, phase);
        auto it = seen.find(key);
        if (it != seen.end()) {
          out.periodic_start = it->second;
          out.period_length = out.terms.size() - it->second;
          // Keep emitting from the recorded pattern.
          while (out.terms.size() < max_terms)
            out.terms.push_back(out.terms[out.terms.size() - out.period_length]);
          return out;
        }
        seen.emplace(key, out.terms.size());
      }
      out.terms.push_back(*f);
      S = emit(*f) * S;
      continue;
    }
    if (++ingested > kIngestCap) throw std::logic_error("transform_cf: no progress");
    S = S * ingest(*aj);
    ++j;
  }
  return out;
}

std::optional<BigInt> floor_mobius(const Mat2& M, const EndInvariant& x) {
  if (x.is_rational()) {
    const Slope y = M(x.slope());
    if (y.is_infinity()) throw UndefinedProjection("projection undefined: curve equals the core curve");
    return floor_div(y.p(), y.q());
  }
  const auto t = transform_cf(M, x, 1);
  if (t.terms.empty()) return std::nullopt;
  return t.terms[0];
}

}  // namespace bgeom::farey
