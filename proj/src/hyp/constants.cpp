#include "bgeom/hyp/constants.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "bgeom/errors.hpp"

namespace bgeom::hyp {

ConstantsProfile::ConstantsProfile(double eps0, double eps1, double L1, double K0,
                                   double tube_radius_c)
    : eps0_(eps0), eps1_(eps1), L1_(L1), K0_(K0), tube_radius_c_(tube_radius_c) {
  const bool finite = std::isfinite(eps0) && std::isfinite(eps1) && std::isfinite(L1) &&
                      std::isfinite(K0) && std::isfinite(tube_radius_c);
  if (!finite) throw DomainError("constants profile: non-finite value");
  if (!(eps1 > 0.0 && eps1 < eps0)) throw DomainError("constants profile: need 0 < eps1 < eps0");
  if (!(K0 >= 1.0)) throw DomainError("constants profile: need K0 >= 1");
  if (!(eps1 < eps0 / K0)) throw DomainError("constants profile: need eps1 < eps0/K0");
  if (!(L1 > 0.0)) throw DomainError("constants profile: need L1 > 0");
  if (!(tube_radius_c >= 0.0)) throw DomainError("constants profile: need c >= 0");
}

ConstantsProfile ConstantsProfile::defaults(int chi) {
  if (chi >= 0) throw DomainError("constants profile: Euler characteristic must be negative");
  ConstantsProfile p(0.1, 0.01, 6.0 * std::abs(chi), 2.0, 0.0);
  p.is_default_ = true;
  return p;
}

std::string ConstantsProfile::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "eps0=" << eps0_ << " eps1=" << eps1_ << " L1=" << L1_ << " K0=" << K0_
     << " c=" << tube_radius_c_;
  if (is_default_) os << " (conventional defaults, not derived constants)";
  return os.str();
}

ConstantsProfile ConstantsProfile::from_json(const std::string& text,
                                             const ConstantsProfile& base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("constants profile: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("constants profile: expected a JSON object");
  auto get = [&](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ParseError(std::string("constants profile: ") + key + " is not a number");
    return j[key].get<double>();
  };
  return ConstantsProfile(get("eps0", base.eps0()), get("eps1", base.eps1()), get("L1", base.L1()),
                          get("K0", base.K0()), get("c", base.tube_radius_c()));
}

}  // namespace bgeom::hyp
