#include "bgeom/farey/spectrum.hpp"

#include <algorithm>

#include "bgeom/errors.hpp"
#include "bgeom/farey/cf.hpp"
#include "bgeom/farey/farey.hpp"

namespace bgeom::farey {

namespace {

struct Ray {
  std::vector<Slope> pivots;
  std::vector<std::optional<BigInt>> aligned;
  bool limited = false;
  bool finite = false;
  std::optional<std::size_t> periodic_start;
  std::size_t period_length = 0;
};

// Geodesic from the slope `base` toward `target`, excluding base (and the
// target itself when rational). Irrational targets are developed to `depth`
// terms of their continued fraction in the frame where base is infinity.
Ray ray_from(const Slope& base, const EndInvariant& target, std::size_t depth) {
  Ray ray;
  const Mat2 M = normalizing_matrix(base);
  const Mat2 Minv = M.inverse();
  const auto t = transform_cf(M, target, target.is_rational() ? static_cast<std::size_t>(-1) : depth + 1);
  ray.limited = t.limited;
  ray.finite = t.finite;
  ray.periodic_start = t.periodic_start;
  ray.period_length = t.period_length;
  if (t.terms.empty()) return ray;
  const auto conv = convergents(t.terms);
  const int last = static_cast<int>(t.terms.size()) - 1;
  for (int k : ladder_path(t.terms)) {
    if (k < 0 || k >= last) continue;  // base; the target or the development front
    ray.pivots.push_back(Minv(conv[k]));
    ray.aligned.push_back(t.terms[k + 1]);
  }
  return ray;
}

// Appends pivots with their coefficients, stopping at the first pivot whose
// twist against an open prefix is undetermined.
bool append(CoefficientSpectrum& s, const std::vector<Slope>& pivots,
            const std::vector<std::optional<BigInt>>& aligned, const EndInvariant& a, const EndInvariant& b) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const auto ta = twist_coordinate(pivots[i], a);
    const auto tb = twist_coordinate(pivots[i], b);
    if (!ta || !tb) return false;
    s.pivots.push_back(pivots[i]);
    s.coeffs.push_back(boost::multiprecision::abs(*ta - *tb));
    s.aligned.push_back(aligned[i]);
  }
  return true;
}

void finish(CoefficientSpectrum& s) {
  s.sup = 0;
  for (const auto& c : s.coeffs) s.sup = std::max(s.sup, c);
}

}  // namespace

CoefficientSpectrum coefficient_spectrum(const EndInvariant& nu_plus, const EndInvariant& nu_minus,
                                         std::size_t depth) {
  if (depth == 0) throw DomainError("spectrum depth must be positive");
  if (nu_plus == nu_minus) throw DegeneratePair("end invariants coincide: " + nu_plus.str());
  CoefficientSpectrum s;
  s.depth = depth;

  if (nu_plus.is_rational() && nu_minus.is_rational()) {
    const auto path = farey_geodesic(nu_minus.slope(), nu_plus.slope());
    const auto terms = cf_expand(normalizing_matrix(nu_minus.slope())(nu_plus.slope()));
    const auto idx = ladder_path(terms);
    std::vector<Slope> pivots;
    std::vector<std::optional<BigInt>> aligned;
    for (std::size_t i = 1; i + 1 < path.size() && pivots.size() < depth; ++i) {
      pivots.push_back(path[i]);
      aligned.push_back(terms[idx[i] + 1]);
    }
    append(s, pivots, aligned, nu_plus, nu_minus);
    s.complete = path.size() < depth + 2;
    finish(s);
    return s;
  }

  if (nu_minus.is_rational() || nu_plus.is_rational()) {
    const bool minus_base = nu_minus.is_rational();
    const Slope& base = minus_base ? nu_minus.slope() : nu_plus.slope();
    const EndInvariant& far = minus_base ? nu_plus : nu_minus;
    const Ray ray = ray_from(base, far, depth);
    const bool ok = append(s, ray.pivots, ray.aligned, nu_plus, nu_minus);
    s.limited = ray.limited || !ok;
    finish(s);
    return s;
  }

  // Both irrational: find the last common convergent.
  std::size_t k = 0;
  while (true) {
    const auto a = nu_plus.coeff(k), b = nu_minus.coeff(k);
    if (!a || !b) {
      s.limited = true;  // the known prefixes never diverge
      finish(s);
      return s;
    }
    if (*a != *b) break;
    ++k;
  }
  std::vector<BigInt> common;
  for (std::size_t i = 0; i < k; ++i) common.push_back(*nu_plus.coeff(i));
  const Slope rho = common.empty() ? Slope::infinity() : cf_value(common);

  // The two rays from rho may share an initial segment; the geodesic
  // between the ends branches at its last vertex.
  const Ray minus = ray_from(rho, nu_minus, depth);
  const Ray plus = ray_from(rho, nu_plus, depth);
  std::size_t shared = 0;
  while (shared < minus.pivots.size() && shared < plus.pivots.size() &&
         minus.pivots[shared] == plus.pivots[shared])
    ++shared;
  const Slope branch = shared == 0 ? rho : minus.pivots[shared - 1];
  auto tail = [shared](const auto& v) { return std::vector(v.begin() + static_cast<std::ptrdiff_t>(shared), v.end()); };

  CoefficientSpectrum head;
  const bool ok_minus = append(head, tail(minus.pivots), tail(minus.aligned), nu_plus, nu_minus);
  s.pivots.assign(head.pivots.rbegin(), head.pivots.rend());
  s.coeffs.assign(head.coeffs.rbegin(), head.coeffs.rend());
  s.aligned.assign(head.aligned.rbegin(), head.aligned.rend());
  const bool ok_rho = append(s, {branch}, {std::nullopt}, nu_plus, nu_minus);
  const bool ok_plus = ok_rho && append(s, tail(plus.pivots), tail(plus.aligned), nu_plus, nu_minus);
  s.limited = minus.limited || plus.limited || !ok_minus || !ok_plus;
  finish(s);
  return s;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Bounded:
      return "Bounded";
    case Decision::Unbounded:
      return "Unbounded";
    case Decision::IndeterminateAtDepth:
      return "IndeterminateAtDepth";
  }
  return "?";
}

namespace {

// Depth at which a periodic ray shows at least four certified periods of
// its transformed continued fraction.
std::size_t certified_depth(const Slope& base, const EndInvariant& target, std::size_t depth) {
  if (target.kind() != EndInvariant::Kind::Periodic) return depth;
  std::size_t want = depth;
  for (int round = 0; round < 8; ++round) {
    const auto t = transform_cf(normalizing_matrix(base), target, want);
    if (t.periodic_start) return std::max(depth, *t.periodic_start + 4 * t.period_length + 4);
    want *= 2;
  }
  throw std::logic_error("periodic continued fraction did not certify");
}

}  // namespace

DecisionReport decide_bounded_geometry(const EndInvariant& nu_plus, const EndInvariant& nu_minus, const BigInt& K,
                                       std::size_t depth) {
  if (K < 1) throw DomainError("threshold K must be at least 1");
  if (depth == 0) throw DomainError("depth must be positive");
  if (nu_plus == nu_minus) throw DegeneratePair("end invariants coincide: " + nu_plus.str());

  std::size_t d = depth;
  if (nu_minus.is_rational() && nu_plus.is_rational()) {
    d = std::max(d, static_cast<std::size_t>(farey_distance(nu_minus.slope(), nu_plus.slope())) + 1);
  } else if (nu_minus.is_rational()) {
    d = certified_depth(nu_minus.slope(), nu_plus, d);
  } else if (nu_plus.is_rational()) {
    d = certified_depth(nu_plus.slope(), nu_minus, d);
  } else if (nu_plus.is_closed() && nu_minus.is_closed()) {
    std::size_t k = 0;
    while (*nu_plus.coeff(k) == *nu_minus.coeff(k)) ++k;
    std::vector<BigInt> common;
    for (std::size_t i = 0; i < k; ++i) common.push_back(*nu_plus.coeff(i));
    const Slope rho = common.empty() ? Slope::infinity() : cf_value(common);
    d = std::max(certified_depth(rho, nu_plus, d), certified_depth(rho, nu_minus, d));
  }

  DecisionReport r;
  r.spectrum = coefficient_spectrum(nu_plus, nu_minus, d);
  const auto& s = r.spectrum;
  if (s.sup >= K) {
    r.decision = Decision::Unbounded;
    r.reason = "coefficient " + s.sup.str() + " >= K";
  } else if (nu_plus.is_closed() && nu_minus.is_closed() && !s.limited) {
    r.decision = Decision::Bounded;
    r.reason = "sup " + s.sup.str() + " < K over the full pattern";
  } else {
    r.decision = Decision::IndeterminateAtDepth;
    r.reason = "sup " + s.sup.str() + " < K so far; the known prefix does not certify the tail";
  }
  return r;
}

}  // namespace bgeom::farey
