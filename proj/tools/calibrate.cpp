// Regenerates the measurement logs behind include/bgeom/calibration.hpp.
//
//   annular_fuzz.log        annular_coeff vs the separating-neighbor count
//   spectrum_alignment.log  spectrum coefficients vs continued-fraction terms
//   resolution.log          delta and K over exhaustive slope boxes

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgeom/calibration.hpp"
#include "bgeom/farey/cf.hpp"
#include "bgeom/farey/end_invariant.hpp"
#include "bgeom/farey/farey.hpp"
#include "bgeom/farey/oracles.hpp"
#include "bgeom/farey/spectrum.hpp"
#include "bgeom/io/atomic_file.hpp"
#include "bgeom/moves/resolution.hpp"

namespace {

using namespace bgeom;
using farey::BigInt;
using farey::Slope;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string annular_log(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> P(-30, 30), Q(0, 30);
  auto draw = [&] {
    long p = P(rng), q = Q(rng);
    if (p == 0 && q == 0) q = 1;
    return Slope(p, q);
  };
  std::vector<long> hist(8, 0);
  long worst = 0, used = 0;
  for (int n = 0; n < trials; ++n) {
    const Slope a = draw(), b = draw(), c = draw();
    if (a == b || a == c) continue;
    const long count = farey::separating_neighbors(a, b, c, 4000);
    const long coeff = farey::annular_coeff(a, b, c).convert_to<long>();
    const long dev = std::abs(coeff - count);
    ++hist[std::min<long>(dev, 7)];
    worst = std::max(worst, dev);
    ++used;
  }
  std::ostringstream out;
  out << "# annular fuzz: |annular_coeff(a,b,c) - #neighbors n of a with edge a-n separating b from c|\n"
      << "# random slopes |p|, |q| <= 30, seed " << seed << ", neighbor window |t| <= 4000\n"
      << "triples " << used << "\n";
  for (std::size_t d = 0; d < hist.size(); ++d)
    if (hist[d]) out << "deviation " << d << ": " << hist[d] << "\n";
  out << "max deviation " << worst << "\n"
      << "constant kAnnularFuzz = " << calibration::kAnnularFuzz << (worst <= calibration::kAnnularFuzz ? " (holds)" : " (VIOLATED)")
      << "\n";
  return out.str();
}

std::string spectrum_log(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  long worst = 0, terms_checked = 0, misaligned = 0;
  std::vector<long> hist(8, 0);
  for (int n = 0; n < trials; ++n) {
    std::vector<BigInt> t{BigInt(static_cast<long>(rng() % 7) - 3)};
    const int len = 4 + static_cast<int>(rng() % 8);
    for (int i = 1; i < len; ++i) t.push_back(1 + rng() % (rng() % 2 ? 3 : 20));
    if (t.back() == 1) t.back() = 2;
    const Slope x = farey::cf_value(t);
    const auto cf = farey::cf_expand(x);
    const auto s = farey::coefficient_spectrum(farey::EndInvariant::rational(x),
                                               farey::EndInvariant::rational(Slope::infinity()), cf.size() + 2);
    for (std::size_t k = 0; k < s.pivots.size(); ++k) {
      if (!s.aligned[k]) {
        ++misaligned;
        continue;
      }
      const long dev = boost::multiprecision::abs(s.coeffs[k] - *s.aligned[k]).convert_to<long>();
      ++hist[std::min<long>(dev, 7)];
      worst = std::max(worst, dev);
      ++terms_checked;
    }
  }
  std::ostringstream out;
  out << "# spectrum alignment: pivot c_k of the Farey geodesic from infinity to x is paired with the\n"
      << "# continued-fraction term a_{k+1} of x; deviation = |d_{c_k}(x, inf) - a_{k+1}|\n"
      << "# random x with 4..11 terms, seed " << seed << "\n"
      << "rationals " << trials << " pivots " << terms_checked << " unaligned " << misaligned << "\n";
  for (std::size_t d = 0; d < hist.size(); ++d)
    if (hist[d]) out << "deviation " << d << ": " << hist[d] << "\n";
  out << "max deviation " << worst << "\n"
      << "constant kSpectrumAlignment = " << calibration::kSpectrumAlignment
      << (worst <= calibration::kSpectrumAlignment ? " (holds)" : " (VIOLATED)") << "\n";
  return out.str();
}

std::string resolution_log(const std::vector<std::int64_t>& heights) {
  std::ostringstream out;
  out << "# complexity-one resolutions over all ordered pairs of distinct slopes with |p|, |q| <= H\n"
      << "# delta = max |d_beta(pred, succ) - d_beta(P, Q)|, K = max |J_[s,t]| / ((t-s) sup_Y d_Y(P,Q)), a = 1\n";
  for (const auto& [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}}) {
    const auto sig = moves::make_surface(g, p);
    for (auto H : heights) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto w = moves::sweep_resolutions_xi1(sig, H);
      out << sig.str() << " H=" << H << " slopes=" << w.slopes << " pairs=" << w.pairs << " failures=" << w.failures
          << " delta=" << w.delta << " K=" << w.K << " max_distance=" << w.max_distance
          << " max|twist_length-spectrum_sum|=" << w.twist_gap << " seconds=" << seconds_since(t0) << "\n";
      std::cerr << sig.str() << " H=" << H << " done\n";
    }
  }
  out << "constants kResolutionDelta = " << calibration::kResolutionDelta << ", kResolutionK = " << calibration::kResolutionK
      << ", exponent a = " << calibration::kResolutionExponent << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Regenerate calibration logs");
  std::string dir = "calibration";
  std::uint64_t seed = 20261016;
  std::vector<std::int64_t> heights{21, 34};
  bool skip_resolution = false;
  app.add_option("--out-dir", dir, "output directory");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--heights", heights, "slope boxes for the resolution sweep")->delimiter(',');
  app.add_flag("--skip-resolution", skip_resolution, "omit the exhaustive resolution sweep");
  CLI11_PARSE(app, argc, argv);

  try {
    std::filesystem::create_directories(dir);
    io::write_atomic(std::filesystem::path(dir) / "annular_fuzz.log", annular_log(seed, 3000));
    io::write_atomic(std::filesystem::path(dir) / "spectrum_alignment.log", spectrum_log(seed, 2000));
    if (!skip_resolution) io::write_atomic(std::filesystem::path(dir) / "resolution.log", resolution_log(heights));
  } catch (const std::exception& e) {
    std::cerr << "calibrate: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
