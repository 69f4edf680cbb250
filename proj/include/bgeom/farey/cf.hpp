#pragma once

#include <string_view>
#include <vector>

#include "bgeom/farey/slope.hpp"

namespace bgeom::farey {

/// [a0; a1, ..., an] by the Euclidean algorithm, last term >= 2 unless n = 0.
/// Infinity gives an empty list.
std::vector<BigInt> cf_expand(const Slope& x);

/// The value of a finite continued fraction (empty -> infinity).
Slope cf_value(const std::vector<BigInt>& terms);

/// Convergents c_0 .. c_n of a coefficient list.
std::vector<Slope> convergents(const std::vector<BigInt>& terms);

/// Parses an exact rational written as "p/q", an integer, "inf" or a finite
/// decimal such as "-3.125". Throws ParseError.
Slope parse_rational(std::string_view text);

}  // namespace bgeom::farey
