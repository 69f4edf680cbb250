#include "bgeom/farey/farey.hpp"

#include <algorithm>

#include "bgeom/errors.hpp"
#include "bgeom/farey/cf.hpp"

namespace bgeom::farey {

namespace {

// D[k + 1] = Farey distance from infinity to c_k, k = -1 .. n.
std::vector<int> ladder_distances(const std::vector<BigInt>& terms) {
  std::vector<int> D(terms.size() + 1);
  if (terms.empty()) return D;
  D[0] = 0;
  D[1] = 1;
  for (std::size_t k = 1; k < terms.size(); ++k) {
    // c_k is adjacent to c_{k-1}, and to c_{k-2} when a_k = 1.
    const int via_prev = D[k] + 1;
    const int via_skip = terms[k] == 1 ? D[k - 1] + 1 : via_prev + 1;
    D[k + 1] = std::min(via_prev, via_skip);
  }
  return D;
}

}  // namespace

std::vector<int> ladder_path(const std::vector<BigInt>& terms) {
  const auto D = ladder_distances(terms);
  std::vector<int> path;
  int k = static_cast<int>(terms.size()) - 1;
  path.push_back(k);
  while (k >= 0) {
    if (k == 0) {
      k = -1;
    } else if (terms[k] == 1 && D[k - 1] < D[k]) {
      k -= 2;
    } else {
      k -= 1;
    }
    path.push_back(k);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int farey_distance(const Slope& a, const Slope& b) {
  if (a == b) return 0;
  const auto terms = cf_expand(normalizing_matrix(a)(b));
  return ladder_distances(terms).back();
}

std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b) {
  if (a == b) return {a};
  const Mat2 M = normalizing_matrix(a);
  const Mat2 Minv = M.inverse();
  const auto terms = cf_expand(M(b));
  const auto conv = convergents(terms);
  std::vector<Slope> out;
  for (int k : ladder_path(terms)) out.push_back(k < 0 ? a : Minv(conv[k]));
  return out;
}

BigInt twist_coordinate(const Slope& alpha, const Slope& beta) {
  const Slope y = normalizing_matrix(alpha)(beta);
  if (y.is_infinity()) throw UndefinedProjection("twist undefined: " + beta.str() + " equals the core curve");
  return floor_div(y.p(), y.q());
}

std::optional<BigInt> twist_coordinate(const Slope& alpha, const EndInvariant& nu) {
  return floor_mobius(normalizing_matrix(alpha), nu);
}

BigInt annular_coeff(const Slope& alpha, const Slope& beta, const Slope& gamma) {
  return boost::multiprecision::abs(twist_coordinate(alpha, beta) - twist_coordinate(alpha, gamma));
}

}  // namespace bgeom::farey
