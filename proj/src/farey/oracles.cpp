#include "bgeom/farey/oracles.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>

#include "bgeom/errors.hpp"

namespace bgeom::farey {

FareyBox::FareyBox(std::int64_t H) : H_(H) {
  if (H < 1) throw DomainError("FareyBox: height must be positive");
  slot_.assign(static_cast<std::size_t>((2 * H + 1) * (H + 1)), -1);
  for (std::int64_t q = 0; q <= H; ++q)
    for (std::int64_t p = -H; p <= H; ++p) {
      if (q == 0 && p != 1) continue;
      if (std::gcd(std::llabs(p), q) != 1) continue;
      slot_[(p + H) * (H + 1) + q] = static_cast<int>(p_.size());
      p_.push_back(p);
      q_.push_back(q);
    }
  adj_.resize(p_.size());
  for (std::size_t v = 0; v < p_.size(); ++v) {
    const std::int64_t p = p_[v], q = q_[v];
    // One solution of p s - q r = 1, then all of them: (r, s) + t (p, q).
    std::int64_t r0, s0;
    if (q == 0) {
      r0 = 0;
      s0 = 1;
    } else {
      // Extended Euclid on (p, q).
      std::int64_t old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        const std::int64_t k = old_r / r;
        std::int64_t tmp = old_r - k * r;
        old_r = r;
        r = tmp;
        tmp = old_s - k * s;
        old_s = s;
        s = tmp;
        tmp = old_t - k * t;
        old_t = t;
        t = tmp;
      }
      // old_s p + old_t q = old_r = +-1; want p s - q r = 1.
      s0 = old_s * old_r;
      r0 = -old_t * old_r;
    }
    const std::int64_t span = 2 * H + 2;
    for (std::int64_t t = -span; t <= span; ++t) {
      std::int64_t r = r0 + t * p, s = s0 + t * q;
      if (s < 0 || (s == 0 && r < 0)) {
        r = -r;
        s = -s;
      }
      const int w = index(r, s);
      if (w >= 0 && w != static_cast<int>(v)) adj_[v].push_back(w);
    }
  }
}

int FareyBox::index(std::int64_t p, std::int64_t q) const {
  if (q < 0 || q > H_ || p < -H_ || p > H_) return -1;
  return slot_[(p + H_) * (H_ + 1) + q];
}

int FareyBox::index(const Slope& s) const {
  using boost::multiprecision::abs;
  if (abs(s.p()) > H_ || s.q() > H_) return -1;
  return index(static_cast<std::int64_t>(s.p()), static_cast<std::int64_t>(s.q()));
}

std::vector<int> FareyBox::bfs(int source) const {
  std::vector<int> dist(p_.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

namespace {

BigInt det(const BigInt& p, const BigInt& q, const BigInt& r, const BigInt& s) { return p * s - q * r; }

}  // namespace

std::int64_t separating_neighbors(const Slope& alpha, const Slope& beta, const Slope& gamma, std::int64_t t_max) {
  if (beta == alpha || gamma == alpha) throw UndefinedProjection("separating_neighbors: curve equals alpha");
  // A neighbor n0 of alpha: p s - q r = 1.
  BigInt r0, s0;
  {
    BigInt old_r = alpha.p(), r = alpha.q(), old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const BigInt k = old_r / r;
      BigInt tmp = old_r - k * r;
      old_r = r;
      r = tmp;
      tmp = old_s - k * s;
      old_s = s;
      s = tmp;
      tmp = old_t - k * t;
      old_t = t;
      t = tmp;
    }
    s0 = old_s * old_r;
    r0 = -old_t * old_r;
  }
  const BigInt &ap = alpha.p(), &aq = alpha.q();
  std::int64_t count = 0;
  for (std::int64_t t = -t_max; t <= t_max; ++t) {
    const BigInt np = r0 + t * ap, nq = s0 + t * aq;
    const Slope n(np, nq);
    if (n == beta || n == gamma) continue;
    // Chords alpha-n and beta-gamma cross iff the cross ratio is negative.
    const BigInt num = det(ap, aq, beta.p(), beta.q()) * det(np, nq, gamma.p(), gamma.q());
    const BigInt den = det(ap, aq, gamma.p(), gamma.q()) * det(np, nq, beta.p(), beta.q());
    if (num * den < 0) ++count;
  }
  return count;
}

}  // namespace bgeom::farey
