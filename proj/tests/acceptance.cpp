// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed here.
// Usage: acceptance <path-to-bgeom>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bgeom/calibration.hpp"
#include "bgeom/farey/cf.hpp"
#include "bgeom/farey/end_invariant.hpp"
#include "bgeom/farey/farey.hpp"
#include "bgeom/farey/oracles.hpp"
#include "bgeom/farey/spectrum.hpp"
#include "bgeom/hyp/collar.hpp"
#include "bgeom/hyp/estimates.hpp"
#include "bgeom/hyp/hexagon.hpp"
#include "bgeom/moves/resolution.hpp"
#include "oracles/hyperboloid.hpp"

using namespace bgeom;
using farey::BigInt;
using farey::Slope;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool fast = s < time_limit;
  const bool pass = o.ok && fast;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", n, o.detail.c_str(), s,
              time_limit, fast ? "" : ", too slow");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome twist_ratio() {
  const auto m = hyp::max_twist_ratio();
  const bool ok = m.ratio_max < 1.5 && std::abs(m.w0_argmax - 2.0) <= 1e-3;
  return {ok, fmt("max p/ell = %.6f at w0 = %.6f (need < 1.5, |w0 - 2| <= 1e-3)", m.ratio_max, m.w0_argmax)};
}

Outcome collar_suite() {
  const int N = 10000;
  double prev = 0;
  int bad_bound = 0, bad_mono = 0;
  for (int k = 1; k <= N; ++k) {
    // Geometric spacing from 1e-6 to 20.
    const double ell = 1e-6 * std::pow(20.0 / 1e-6, static_cast<double>(k - 1) / (N - 1));
    const auto c = hyp::collar_profile(ell);
    // ell cosh(w0) recomputed here loses the ell^2/6 term below ell ~ 1e-5,
    // so monotonicity is checked on the closed form and the two compared.
    const double b = c.boundary_len_full;
    if (std::abs(b - ell * std::cosh(c.w0)) > 1e-12 * b) ++bad_bound;
    if (b < 2.0 || b > ell + 2.0) ++bad_bound;
    if (k > 1 && b < prev) ++bad_mono;
    prev = b;
  }
  const auto cusp = hyp::cusp_collar_lengths();
  const bool cusp_ok = cusp.full == 2.0 && std::abs(cusp.reduced - 2.0 / std::exp(1.0)) < 1e-15;
  return {bad_bound == 0 && bad_mono == 0 && cusp_ok,
          fmt("%.0f grid values, %.0f bound violations, %.0f monotonicity violations", N, bad_bound, bad_mono) +
              (cusp_ok ? ", cusp lengths 2 and 2/e" : ", cusp lengths wrong")};
}

Outcome hexagon_suite() {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> U(0.02, 4.0);
  double worst = 0;
  int bounds_failed = 0, case2 = 0;
  for (int n = 0; n < 1000; ++n) {
    double a[3] = {U(rng), U(rng), U(rng)};
    if (n % 4 == 0) a[n % 3] = a[(n + 1) % 3] + a[(n + 2) % 3] + U(rng);  // long side
    const auto h = hyp::hexagon_solve(a[0], a[1], a[2]);
    case2 += h.kind == hyp::HexCase::Case2;
    const auto m = hyp::band_measurements(h);
    worst = std::max(worst, m.max_residual);
    bounds_failed += !m.bounds_hold;
  }
  return {worst < 1e-5 && bounds_failed == 0,
          fmt("1000 hexagons (%.0f long-side), max Gauss-Bonnet residual %.2e, %.0f edge-bound failures", case2, worst,
              bounds_failed)};
}

Outcome oracle_distance() {
  const farey::FareyBox box(50);
  const int n = static_cast<int>(box.size());
  long mismatches = 0, pairs = 0;
  for (int v = 0; v < n; ++v) {
    const auto d = box.bfs(v);
    const Slope a = box.slope(v);
    for (int w = 0; w < n; ++w, ++pairs)
      if (farey::farey_distance(a, box.slope(w)) != d[w]) ++mismatches;
  }
  return {mismatches == 0, fmt("%.0f slopes, %.0f ordered pairs, %.0f mismatches", n, static_cast<double>(pairs),
                               static_cast<double>(mismatches))};
}

Outcome spectrum_theorem() {
  std::mt19937_64 rng(20261016);
  long worst = 0, compared = 0, unaligned = 0;
  const auto inf = farey::EndInvariant::rational(Slope::infinity());
  for (int n = 0; n < 200; ++n) {
    std::vector<BigInt> t{BigInt(static_cast<long>(rng() % 7) - 3)};
    const int len = 4 + static_cast<int>(rng() % 8);
    for (int i = 1; i < len; ++i) t.push_back(1 + rng() % 15);
    if (t.back() == 1) t.back() = 2;
    const Slope x = farey::cf_value(t);
    const auto cf = farey::cf_expand(x);
    const auto conv = farey::convergents(cf);
    const auto s = farey::coefficient_spectrum(farey::EndInvariant::rational(x), inf, cf.size() + 2);
    for (std::size_t k = 0; k < s.pivots.size(); ++k) {
      const auto it = std::find(conv.begin(), conv.end(), s.pivots[k]);
      if (it == conv.end() || it + 1 == conv.end()) {
        ++unaligned;
        continue;
      }
      const BigInt& term = cf[static_cast<std::size_t>(it - conv.begin()) + 1];
      worst = std::max(worst, boost::multiprecision::abs(s.coeffs[k] - term).convert_to<long>());
      ++compared;
    }
  }
  const bool ok = unaligned == 0 && worst <= calibration::kSpectrumAlignment;
  return {ok, fmt("200 rationals, %.0f coefficients, max |coeff - cf term| = %.0f (constant %.0f)",
                  static_cast<double>(compared), static_cast<double>(worst), calibration::kSpectrumAlignment)};
}

Outcome resolution_properties() {
  std::ostringstream out;
  bool ok = true;
  BigInt delta21 = -1;
  for (const auto& [sig, H] : std::vector<std::pair<moves::SurfaceSig, int>>{
           {moves::make_surface(1, 1), 21}, {moves::make_surface(1, 1), 34}, {moves::make_surface(0, 4), 21}}) {
    const auto w = moves::sweep_resolutions_xi1(sig, H);
    if (delta21 < 0) delta21 = w.delta;
    ok = ok && w.failures == 0 && w.delta == calibration::kResolutionDelta && w.delta == delta21 &&
         w.K <= calibration::kResolutionK;
    out << sig.str() << " H=" << H << ": " << w.pairs << " pairs, " << w.failures << " failures, delta " << w.delta
        << ", K " << w.K << "; ";
  }
  out << "recorded delta " << calibration::kResolutionDelta;
  return {ok, out.str()};
}

Outcome isometry_oracle() {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> L(0.0, 3.0), R(0.0, 4.0), T(-3.0, 3.0), D(0.0, 2.0);
  double worst_s = 0, worst_e = 0;
  for (int n = 0; n < 100; ++n) {
    const double ell = L(rng), r = R(rng);
    worst_s = std::max(worst_s, std::abs(hyp::curve_shorten_displacement(ell, r) - oracle::translation_displacement(ell, r)));
    const double ell2 = L(rng), th = T(rng), t = D(rng);
    worst_e = std::max(worst_e, std::abs(hyp::equidistant_displacement(ell2, th, t) - oracle::orbit_arc_length(ell2, th, t)));
  }
  return {worst_s < 1e-9 && worst_e < 1e-9,
          fmt("100 inputs each, max error: shortening %.2e, equidistant %.2e (tolerance 1e-9)", worst_s, worst_e)};
}

struct CliRun {
  int code = -1;
  std::string out;
  double seconds = 0;
};

CliRun cli(const std::string& exe, const std::string& args) {
  const auto t0 = std::chrono::steady_clock::now();
  CliRun r;
  FILE* pipe = popen(("'" + exe + "' " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[1024];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Outcome cli_decisions(const std::string& exe) {
  const auto golden = cli(exe, "decide '[1;1,1](period:1)' inf -K 10");
  const auto doubling = cli(exe, "decide '[0;1,2,4,8,16,32,64,...]' inf -K 10");
  const bool ok = golden.code == 0 && golden.out.rfind("Bounded\n", 0) == 0 && golden.seconds < 1.0 &&
                  doubling.code == 3 && doubling.out.rfind("Unbounded\n", 0) == 0 && doubling.seconds < 1.0;
  return {ok, fmt("golden -> exit %.0f, doubling -> exit %.0f (want 0 Bounded, 3 Unbounded)", golden.code, doubling.code) +
                  fmt("; %.3f s and %.3f s", golden.seconds, doubling.seconds)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-bgeom>\n");
    return 2;
  }
  const std::string exe = argv[1];
  criterion(1, 1, twist_ratio);
  criterion(2, 1, collar_suite);
  criterion(3, 30, hexagon_suite);
  criterion(4, 60, oracle_distance);
  criterion(5, 60, spectrum_theorem);
  criterion(6, 600, resolution_properties);
  criterion(7, 60, isometry_oracle);
  criterion(8, 2, [&] { return cli_decisions(exe); });
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
