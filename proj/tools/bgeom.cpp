// bgeom: command-line front end for the hyperbolic estimates, the Farey/
// continued-fraction engine and the elementary-move engine.
//
// Exit codes: 0 success, 1 domain error, 2 parse/usage error. `decide`
// exits 0/3/4 for Bounded/Unbounded/IndeterminateAtDepth.

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bgeom/calibration.hpp"
#include "bgeom/errors.hpp"
#include "bgeom/farey/cf.hpp"
#include "bgeom/farey/end_invariant.hpp"
#include "bgeom/farey/farey.hpp"
#include "bgeom/farey/slope.hpp"
#include "bgeom/farey/spectrum.hpp"
#include "bgeom/hyp/collar.hpp"
#include "bgeom/hyp/constants.hpp"
#include "bgeom/hyp/estimates.hpp"
#include "bgeom/hyp/hexagon.hpp"
#include "bgeom/io/atomic_file.hpp"
#include "bgeom/io/csv.hpp"
#include "bgeom/moves/dot.hpp"
#include "bgeom/moves/pants.hpp"
#include "bgeom/moves/resolution.hpp"
#include "bgeom/moves/sequence.hpp"

namespace {

using namespace bgeom;
using farey::BigInt;
using farey::Slope;
using io::format_real;

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct Result {
  std::string text;
  std::optional<io::CsvTable> table;
  std::string dot;
  int status = 0;
};

double parse_real(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) throw ParseError("not a real number: '" + s + "'");
  return v;
}

long long parse_int(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

moves::SurfaceSig parse_surface(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("surface must be 'g,p', got '" + s + "'");
  return moves::make_surface(static_cast<int>(parse_int(s.substr(0, comma))),
                             static_cast<int>(parse_int(s.substr(comma + 1))));
}

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string cf_str(const std::vector<BigInt>& t) {
  if (t.empty()) return "[]";
  std::string out = "[" + t[0].str();
  for (std::size_t i = 1; i < t.size(); ++i) out += (i == 1 ? ";" : ",") + t[i].str();
  return out + "]";
}

// Text rendering of a table: "col=value" pairs, one row per line.
std::string table_text(const io::CsvTable& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + t.columns()[i] + "=" + row[i];
    out += '\n';
  }
  return out;
}

nlohmann::json json_cell(const std::string& s) {
  if (s == "true" || s == "false") return s == "true";
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (!s.empty() && end == s.c_str() + s.size() && std::isfinite(d)) return d;
  return s;
}

std::string table_json(const io::CsvTable& t, const std::string& command) {
  nlohmann::json j;
  j["command"] = command;
  j["columns"] = t.columns();
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows()) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns()[i]] = json_cell(row[i]);
    j["rows"].push_back(r);
  }
  std::istringstream comments(t.str());
  std::string line;
  j["notes"] = nlohmann::json::array();
  while (std::getline(comments, line))
    if (!line.empty() && line[0] == '#') j["notes"].push_back(line.substr(2));
  return j.dump(2) + "\n";
}

class Cli {
 public:
  Cli() : app_("bgeom: hyperbolic surface estimates, Farey continued fractions, elementary moves") {
    app_.fallthrough();
    app_.require_subcommand(1);
    app_.add_option("--format", format_, "Output format: text, csv, json or dot")
        ->check(CLI::IsMember({"text", "csv", "json", "dot"}));
    app_.add_option("-o,--output", output_, "Write the output atomically to this file");
    app_.add_option("--config", config_, "JSON job configuration (flags take precedence)");
    build_hyp();
    build_farey();
    build_moves();
    auto* batch = app_.add_subcommand("batch", "Run one subcommand per line of a file");
    batch->add_option("file", batch_file_)->required();
    bind(batch, [this] { return cmd_batch(); });
  }

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    try {
      std::reverse(args.begin(), args.end());
      app_.parse(args);
    } catch (const CLI::CallForHelp& e) {
      out << app_.help();
      return 0;
    } catch (const CLI::CallForAllHelp& e) {
      out << app_.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n" << (selected_ ? selected_->help() : app_.help());
      return kExitParse;
    }
    try {
      apply_config();
      Result r = action_();
      emit(r, out);
      return r.status;
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return kExitParse;
    } catch (const DomainError& e) {
      err << "domain error: " << e.what() << "\n";
      return kExitDomain;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitDomain;
    }
  }

 private:
  CLI::App app_;
  std::string format_ = "text";
  std::string output_;
  std::string config_;
  std::function<Result()> action_;
  CLI::App* selected_ = nullptr;
  std::string command_;
  nlohmann::json config_json_ = nlohmann::json::object();

  // Operands shared across subcommands.
  std::vector<std::string> reals_;
  std::vector<std::string> args_;
  // Scalar positionals: vector options would split bracketed text on commas.
  std::array<std::string, 3> ops_;
  std::map<const CLI::App*, std::size_t> op_count_;
  int band_samples_ = 4001;
  int juncture_samples_ = 801;
  long long depth_ = 64;
  std::string K_;
  std::string surface_ = "1,1";
  bool sphere_ = false;
  int radius_ = 6;
  int ball_radius_ = 2;
  int window_ = 2;
  long long height_ = 8;
  std::string pants_;
  std::string from_, to_;
  std::string center_ = "inf";
  std::string batch_file_;

  void bind(CLI::App* sub, std::function<Result()> fn) {
    sub->callback([this, sub, fn] {
      selected_ = sub;
      if (const auto it = op_count_.find(sub); it != op_count_.end()) args_.assign(ops_.begin(), ops_.begin() + it->second);
      command_ = sub->get_parent() && sub->get_parent() != &app_ ? sub->get_parent()->get_name() + " " + sub->get_name()
                                                                 : sub->get_name();
      action_ = fn;
    });
  }

  void operands(CLI::App* sub, const std::vector<std::pair<std::string, std::string>>& names) {
    for (std::size_t k = 0; k < names.size(); ++k) sub->add_option(names[k].first, ops_[k], names[k].second)->required();
    op_count_[sub] = names.size();
  }

  CLI::App* reals_cmd(const std::string& name, const std::string& help, std::vector<std::string> names) {
    auto* sub = app_.add_subcommand(name, help);
    sub->add_option("values", reals_, "operands: " + [&] {
      std::string s;
      for (const auto& n : names) s += (s.empty() ? "" : " ") + n;
      return s;
    }())->expected(static_cast<int>(names.size()))->required();
    return sub;
  }

  std::vector<double> reals() const {
    std::vector<double> v;
    for (const auto& s : reals_) v.push_back(parse_real(s));
    return v;
  }

  hyp::ConstantsProfile constants() const {
    auto profile = hyp::ConstantsProfile::defaults();
    if (const char* path = std::getenv("BGEOM_CONSTANTS"); path && *path)
      profile = hyp::ConstantsProfile::from_json(io::read_file(path), profile);
    if (config_json_.contains("constants"))
      profile = hyp::ConstantsProfile::from_json(config_json_["constants"].dump(), profile);
    return profile;
  }

  void apply_config() {
    if (config_.empty()) return;
    try {
      config_json_ = nlohmann::json::parse(io::read_file(config_));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    if (!config_json_.is_object()) throw ParseError("config: expected a JSON object");
    if (config_json_.contains("format") && app_.get_option("--format")->count() == 0)
      format_ = config_json_["format"].get<std::string>();
    if (config_json_.contains("output") && app_.get_option("--output")->count() == 0)
      output_ = config_json_["output"].get<std::string>();
  }

  void emit(const Result& r, std::ostream& out) const {
    std::string body;
    if (format_ == "dot") {
      if (r.dot.empty()) throw ParseError("'" + command_ + "' has no DOT output");
      body = r.dot;
    } else if (format_ == "csv" || format_ == "json") {
      if (!r.table) throw ParseError("'" + command_ + "' has no tabular output");
      body = format_ == "csv" ? r.table->str() : table_json(*r.table, command_);
    } else {
      body = r.text.empty() && r.table ? table_text(*r.table) : r.text;
    }
    if (output_.empty()) out << body;
    else io::write_atomic(output_, body);
  }

  static Result single(std::vector<std::string> cols, std::vector<std::string> row, std::vector<std::string> notes) {
    io::CsvTable t(std::move(cols));
    for (const auto& n : notes) t.comment(n);
    t.add_row(std::move(row));
    return Result{"", std::move(t), "", 0};
  }

  // ---- hyperbolic kernel ----

  void build_hyp() {
    auto* collar = app_.add_subcommand("collar", "Collar widths and boundary lengths for closed geodesics");
    collar->add_option("ell", reals_, "geodesic lengths")->required();
    bind(collar, [this] {
      io::CsvTable t({"ell", "w0", "w", "boundary_full", "boundary_reduced"});
      t.comment("collar: sinh(w0) sinh(ell/2) = 1; w = max(w0/2, w0 - 1); boundary = ell cosh(width)");
      for (double ell : reals()) {
        const auto c = hyp::collar_profile(ell);
        t.add_row({format_real(ell), format_real(c.w0), format_real(c.w), format_real(c.boundary_len_full),
                   format_real(c.boundary_len_reduced)});
      }
      return Result{"", t, "", 0};
    });

    auto* cusp = app_.add_subcommand("cusp", "Horocycle lengths of the full and reduced cusp collars");
    bind(cusp, [] {
      const auto c = hyp::cusp_collar_lengths();
      return single({"full", "reduced"}, {format_real(c.full), format_real(c.reduced)},
                    {"cusp collar: full horocycle length 2, one unit deeper 2/e"});
    });

    auto* hex = reals_cmd("hex", "Right-angled hexagon from alternate sides: band decomposition and Gauss-Bonnet",
                          {"a1", "a2", "a3"});
    bind(hex, [this] { return cmd_hex(); });

    auto* tr = app_.add_subcommand("twist-ratio", "Maximum of the collar crossing ratio p/ell");
    bind(tr, [] {
      const auto m = hyp::max_twist_ratio();
      return single({"ratio_max", "w0_argmax", "ell_argmax"},
                    {format_real(m.ratio_max), format_real(m.w0_argmax), format_real(m.ell_argmax)},
                    {"twist ratio: p/ell with sinh(w) sinh(p) = 1, w the reduced collar width"});
    });

    auto* sh = reals_cmd("shorten", "Displacement 2 asinh(sinh(ell/2) cosh r) at distance r from an axis",
                         {"ell", "r"});
    bind(sh, [this] {
      const auto v = reals();
      return single({"ell", "r", "displacement"},
                    {format_real(v[0]), format_real(v[1]), format_real(hyp::curve_shorten_displacement(v[0], v[1]))},
                    {"curve shortening: sinh(s/2) = sinh(ell/2) cosh r"});
    });

    auto* eq = reals_cmd("equidistant", "Displacement along the t-equidistant of a loxodromic axis",
                         {"ell", "theta", "t"});
    bind(eq, [this] {
      const auto v = reals();
      return single({"ell", "theta", "t", "displacement"},
                    {format_real(v[0]), format_real(v[1]), format_real(v[2]),
                     format_real(hyp::equidistant_displacement(v[0], v[1], v[2]))},
                    {"equidistant: sqrt(ell^2 cosh^2 t + theta^2 sinh^2 t)"});
    });

    auto* bs = reals_cmd("band-stretch", "Bilipschitz constant of the affine map between two bands",
                         {"r", "c", "r'", "c'"});
    bs->add_option("--samples", band_samples_, "sample points across the band")->default_val(4001);
    bind(bs, [this] {
      const auto v = reals();
      return single({"r", "c", "r_prime", "c_prime", "bilipschitz"},
                    {format_real(v[0]), format_real(v[1]), format_real(v[2]), format_real(v[3]),
                     format_real(hyp::band_stretch_bilipschitz(v[0], v[1], v[2], v[3], band_samples_))},
                    {"band metric dx^2 + cosh^2(x) dy^2, affine stretch [0,r]x[0,c] -> [0,r']x[0,c']"});
    });

    auto* tube = reals_cmd("tube", "Lower bound on the Margulis tube radius", {"eps"});
    bind(tube, [this] {
      const auto v = reals();
      const auto prof = constants();
      return single({"eps", "radius_lower"}, {format_real(v[0]), format_real(hyp::tube_radius_lower(v[0], prof))},
                    {"tube radius: max(0, log(eps0/eps)/2 - c)", "constants: " + prof.describe()});
    });

    auto* trunc = app_.add_subcommand("truncation", "Truncation length budget L = 3 pi |chi| / eps");
    trunc->add_option("values", reals_, "operands: chi eps")->expected(2)->required();
    bind(trunc, [this] {
      const int chi = static_cast<int>(parse_int(reals_[0]));
      const double eps = parse_real(reals_[1]);
      const auto b = hyp::truncation_budget(chi, eps);
      return single({"chi", "eps", "L", "L2"},
                    {std::to_string(chi), format_real(eps), format_real(b.L), format_real(b.L2)},
                    {"truncation: L = 3 pi |chi| / eps, L2 = 2 (L + eps)"});
    });

    auto* jn = reals_cmd("juncture", "Diameter of the intersection of b-neighborhoods of two half-planes",
                         {"b", "r0"});
    jn->add_option("--samples", juncture_samples_, "boundary samples per arc")->default_val(801);
    bind(jn, [this] {
      const auto v = reals();
      return single({"b", "r0", "diameter"},
                    {format_real(v[0]), format_real(v[1]), format_real(hyp::half_space_juncture_diam(v[0], v[1], juncture_samples_))},
                    {"convex juncture: diam(N_b(A) cap N_b(B)) for half-planes at distance r0"});
    });

    auto* tp = app_.add_subcommand("tripod", "Lower edge constant 2 log(2/sqrt 3)");
    bind(tp, [] {
      return single({"lower_const"}, {format_real(hyp::tripod_lower_const())}, {"tripod: 2 log(2/sqrt(3))"});
    });

    auto* cs = app_.add_subcommand("constants", "Show the active constants profile");
    bind(cs, [this] {
      const auto p = constants();
      return single({"eps0", "eps1", "L1", "K0", "c", "default"},
                    {format_real(p.eps0()), format_real(p.eps1()), format_real(p.L1()), format_real(p.K0()),
                     format_real(p.tube_radius_c()), yesno(p.is_default())},
                    {"constants: " + p.describe()});
    });
  }

  Result cmd_hex() {
    const auto v = reals();
    const auto geo = hyp::hexagon_solve(v[0], v[1], v[2]);
    const auto emb = hyp::hexagon_embed(geo);
    const auto meas = hyp::band_measurements(emb);
    io::CsvTable t({"triangle", "edge", "length", "curvature", "lower", "upper"});
    t.comment("hexagon: cosh c_jk = (cosh a_i + cosh a_j cosh a_k) / (sinh a_j sinh a_k)");
    t.comment("gauss-bonnet: sum e kappa + area(T) = target per triangle; edge bounds [2 log(2/sqrt 3), pi/tanh r]");
    std::ostringstream text;
    text << "case=" << (geo.kind == hyp::HexCase::Case1 ? 1 : 2) << " c12=" << format_real(geo.c[0])
         << " c23=" << format_real(geo.c[1]) << " c13=" << format_real(geo.c[2]) << " area=" << format_real(emb.area)
         << " max_residual=" << format_real(meas.max_residual) << " bounds_hold=" << yesno(meas.bounds_hold) << "\n";
    t.comment("case=" + std::string(geo.kind == hyp::HexCase::Case1 ? "1" : "2") + " area=" + format_real(emb.area) +
              " max_residual=" + format_real(meas.max_residual) + " bounds_hold=" + yesno(meas.bounds_hold));
    for (const auto& tri : meas.triangles) {
      text << tri.label << ": area=" << format_real(tri.area) << " residual=" << format_real(tri.residual()) << "\n";
      for (const auto& e : tri.edges)
        t.add_row({tri.label, e.label, format_real(e.length), format_real(e.curvature), format_real(e.lower),
                   format_real(e.upper)});
    }
    return Result{text.str(), t, "", 0};
  }

  // ---- Farey engine ----

  void build_farey() {
    auto* fr = app_.add_subcommand("farey", "Farey graph distance and geodesics");
    fr->require_subcommand(1);
    auto* dist = fr->add_subcommand("dist", "Farey graph distance");
    operands(dist, {{"a", "slope"}, {"b", "slope"}});
    bind(dist, [this] {
      const Slope a = Slope::parse(args_[0]), b = Slope::parse(args_[1]);
      const int d = farey::farey_distance(a, b);
      auto r = single({"a", "b", "distance"}, {a.str(), b.str(), std::to_string(d)},
                      {"farey distance via the continued fraction of the normalized slope"});
      r.text = std::to_string(d) + "\n";
      return r;
    });
    auto* geo = fr->add_subcommand("geodesic", "A Farey geodesic, endpoints included");
    operands(geo, {{"a", "start slope"}, {"b", "end slope"}});
    bind(geo, [this] {
      const auto path = farey::farey_geodesic(Slope::parse(args_[0]), Slope::parse(args_[1]));
      io::CsvTable t({"index", "slope"});
      std::string text;
      for (std::size_t i = 0; i < path.size(); ++i) {
        t.add_row({std::to_string(i), path[i].str()});
        text += (i ? " " : "") + path[i].str();
      }
      return Result{text + "\n", t, "", 0};
    });

    auto* in = app_.add_subcommand("intersect", "Geometric intersection number of two slopes");
    operands(in, {{"a", "slope"}, {"b", "slope"}});
    in->add_flag("--sphere", sphere_, "four-holed sphere (doubles the count)");
    bind(in, [this] {
      const Slope a = Slope::parse(args_[0]), b = Slope::parse(args_[1]);
      const BigInt i = farey::intersection_number(a, b, sphere_ ? farey::Surface::Sphere4 : farey::Surface::Torus1);
      auto r = single({"a", "b", "surface", "intersection"}, {a.str(), b.str(), sphere_ ? "S0,4" : "S1,1", i.str()},
                      {"intersection: |p s - q r|, doubled on the four-holed sphere"});
      r.text = i.str() + "\n";
      return r;
    });

    auto* tw = app_.add_subcommand("twist", "Twist coordinate floor(M beta) about alpha");
    operands(tw, {{"alpha", "twisting curve"}, {"beta", "slope"}});
    bind(tw, [this] {
      const Slope a = Slope::parse(args_[0]), b = Slope::parse(args_[1]);
      const BigInt t = farey::twist_coordinate(a, b);
      auto r = single({"alpha", "beta", "twist"}, {a.str(), b.str(), t.str()},
                      {"twist: floor(M beta), M = [[v,-u],[-q,p]] sends alpha to infinity"});
      r.text = t.str() + "\n";
      return r;
    });

    auto* an = app_.add_subcommand("annular", "Annular coefficient d_alpha(beta, gamma)");
    operands(an, {{"alpha", "annulus core"}, {"beta", "slope"}, {"gamma", "slope"}});
    bind(an, [this] {
      const Slope a = Slope::parse(args_[0]), b = Slope::parse(args_[1]), g = Slope::parse(args_[2]);
      const BigInt c = farey::annular_coeff(a, b, g);
      auto r = single({"alpha", "beta", "gamma", "coeff"}, {a.str(), b.str(), g.str(), c.str()},
                      {"annular coefficient: |twist(alpha,beta) - twist(alpha,gamma)|",
                       "agrees with the separating-neighbor count within " +
                           std::to_string(calibration::kAnnularFuzz)});
      r.text = c.str() + "\n";
      return r;
    });

    auto* cf = app_.add_subcommand("cf", "Continued fraction and convergents of an exact rational");
    operands(cf, {{"x", "p/q, integer or finite decimal"}});
    bind(cf, [this] {
      const Slope x = farey::parse_rational(args_[0]);
      const auto terms = farey::cf_expand(x);
      const auto conv = farey::convergents(terms);
      io::CsvTable t({"k", "a_k", "convergent"});
      t.comment("continued fraction of " + x.str() + " by the Euclidean algorithm");
      for (std::size_t k = 0; k < terms.size(); ++k) t.add_row({std::to_string(k), terms[k].str(), conv[k].str()});
      return Result{cf_str(terms) + "\n", t, "", 0};
    });

    auto* co = app_.add_subcommand("coeffs", "Annular coefficient spectrum of an end-invariant pair");
    operands(co, {{"nu+", "end invariant"}, {"nu-", "end invariant"}});
    co->add_option("--depth", depth_, "continued-fraction terms to develop")->default_val(64)->check(CLI::PositiveNumber);
    bind(co, [this] { return cmd_coeffs(); });

    auto* de = app_.add_subcommand("decide", "Bounded-geometry decision for an end-invariant pair");
    operands(de, {{"nu+", "end invariant"}, {"nu-", "end invariant"}});
    de->add_option("-K", K_, "coefficient threshold (>= 1)")->required();
    de->add_option("--depth", depth_, "continued-fraction terms to develop")->default_val(64)->check(CLI::PositiveNumber);
    bind(de, [this] { return cmd_decide(); });
  }

  static std::string aligned_str(const std::optional<BigInt>& a) { return a ? a->str() : ""; }

  Result cmd_coeffs() {
    const auto plus = farey::EndInvariant::parse(args_[0]);
    const auto minus = farey::EndInvariant::parse(args_[1]);
    const auto s = farey::coefficient_spectrum(plus, minus, static_cast<std::size_t>(depth_));
    io::CsvTable t({"k", "pivot", "coeff", "aligned"});
    t.comment("spectrum: d_alpha(nu+, nu-) at the Farey geodesic vertices between " + plus.str() + " and " +
              minus.str());
    t.comment("aligned = next continued-fraction term at the pivot; |coeff - aligned| <= " +
              std::to_string(calibration::kSpectrumAlignment));
    t.comment("sup=" + s.sup.str() + " complete=" + yesno(s.complete) + " limited=" + yesno(s.limited) +
              " depth=" + std::to_string(s.depth));
    std::string text;
    for (std::size_t k = 0; k < s.pivots.size(); ++k) {
      t.add_row({std::to_string(k), s.pivots[k].str(), s.coeffs[k].str(), aligned_str(s.aligned[k])});
      text += s.pivots[k].str() + " " + s.coeffs[k].str() + "\n";
    }
    text += "sup=" + s.sup.str() + " complete=" + yesno(s.complete) + " limited=" + yesno(s.limited) + "\n";
    return Result{text, t, "", 0};
  }

  Result cmd_decide() {
    const long long K = parse_int(K_);
    if (K < 1) throw DomainError("threshold K must be at least 1");
    const auto plus = farey::EndInvariant::parse(args_[0]);
    const auto minus = farey::EndInvariant::parse(args_[1]);
    const auto rep = farey::decide_bounded_geometry(plus, minus, BigInt(K), static_cast<std::size_t>(depth_));
    const std::string name = farey::to_string(rep.decision);
    auto r = single({"nu_plus", "nu_minus", "K", "depth", "decision", "sup", "reason"},
                    {plus.str(), minus.str(), std::to_string(K), std::to_string(rep.spectrum.depth), name,
                     rep.spectrum.sup.str(), rep.reason},
                    {"decision: Unbounded iff some annular coefficient reaches K"});
    r.text = name + "\n" + "reason: " + rep.reason + "\n";
    r.status = rep.decision == farey::Decision::Bounded ? 0 : rep.decision == farey::Decision::Unbounded ? 3 : 4;
    return r;
  }

  // ---- moves engine ----

  void build_moves() {
    auto* rs = app_.add_subcommand("resolve", "Elementary-move resolution sequence from P to Q");
    operands(rs, {{"P", "slope on S1,1 / S0,4, pants string otherwise"}, {"Q", "target, same form as P"}});
    rs->add_option("--surface", surface_, "g,p")->default_val("1,1");
    rs->add_option("--radius", radius_, "BFS radius for complexity >= 2")->default_val(6);
    rs->add_option("--window", window_, "twist-index window for BFS")->default_val(2);
    bind(rs, [this] { return cmd_resolve(); });

    auto* ck = app_.add_subcommand("check-resolution", "Measure resolution properties of a sequence file");
    operands(ck, {{"file", "sequence file"}});
    ck->add_option("--from", from_, "P (defaults to the file header)");
    ck->add_option("--to", to_, "Q (defaults to the file header)");
    bind(ck, [this] { return cmd_check(); });

    auto* ex = app_.add_subcommand("export-dot", "DOT graphs of pants decompositions and Farey balls");
    ex->require_subcommand(1);
    auto* ep = ex->add_subcommand("pants", "Pants adjacency graph");
    ep->add_option("--surface", surface_, "g,p")->default_val("1,1");
    ep->add_option("--pants", pants_, "decomposition 'a,b,*1 | ...' (default: standard seed)");
    bind(ep, [this] {
      const auto sig = parse_surface(surface_);
      const auto P = pants_.empty() ? moves::PantsDecomposition::seed(sig) : moves::PantsDecomposition::parse(sig, pants_);
      return Result{moves::pants_graph_dot(P), std::nullopt, moves::pants_graph_dot(P), 0};
    });
    auto* ef = ex->add_subcommand("farey", "Farey graph ball with a highlighted geodesic");
    ef->add_option("--center", center_, "center slope")->default_val("inf");
    ef->add_option("--radius", ball_radius_, "ball radius")->default_val(2);
    ef->add_option("--height", height_, "max |p|, |q|")->default_val(8);
    ef->add_option("--path", args_, "P Q: highlight a geodesic")->expected(2);
    bind(ef, [this] {
      std::vector<Slope> path;
      if (args_.size() == 2) path = farey::farey_geodesic(Slope::parse(args_[0]), Slope::parse(args_[1]));
      const auto dot = moves::farey_ball_dot(Slope::parse(center_), ball_radius_, height_, path);
      return Result{dot, std::nullopt, dot, 0};
    });
  }

  Result cmd_resolve() {
    const auto sig = parse_surface(surface_);
    std::optional<moves::MoveSequence> seq;
    if (sig.is_xi1()) {
      seq = moves::generate_resolution_xi1(sig, Slope::parse(args_[0]), Slope::parse(args_[1]));
    } else {
      const auto P = moves::PantsDecomposition::parse(sig, args_[0]);
      const auto Q = moves::PantsDecomposition::parse(sig, args_[1]);
      seq = moves::bfs_resolution(P, Q, radius_, window_);
      if (!seq) throw DomainError("no move sequence within radius " + std::to_string(radius_));
    }
    io::CsvTable t({"step", "removed", "inserted", "type", "index"});
    t.comment("resolution on " + sig.str() + (sig.is_xi1() ? ", one move per Farey geodesic edge; index = twist(next) - twist(Q), 0 or 1"
                                                          : ", breadth-first search in the move graph"));
    for (std::size_t k = 0; k < seq->moves().size(); ++k) {
      const auto& m = seq->moves()[k];
      t.add_row({std::to_string(k), m.removed, m.inserted, std::string(1, moves::type_letter(m.type)),
                 m.twist_index.str()});
    }
    return Result{seq->to_text(), t, "", 0};
  }

  Result cmd_check() {
    const auto seq = moves::MoveSequence::parse(io::read_file(args_[0]));
    const auto P = from_.empty() ? seq.from : std::optional<Slope>(Slope::parse(from_));
    const auto Q = to_.empty() ? seq.to : std::optional<Slope>(Slope::parse(to_));
    if (!P || !Q) throw ParseError("endpoints missing: give --from/--to or '# from'/'# to' headers");
    const auto r = moves::check_resolution_properties(seq, *P, *Q);
    io::CsvTable t({"beta", "first", "last", "pred", "succ", "local", "global", "deviation"});
    std::ostringstream sum;
    sum << "P=" << P->str() << " Q=" << Q->str() << " distance=" << r.distance << " moves=" << r.moves
        << " endpoints_ok=" << yesno(r.endpoints_ok) << " on_geodesic=" << yesno(r.every_step_on_geodesic)
        << " intervals_ok=" << yesno(r.non_interval.empty()) << " pred_succ_meet=" << yesno(r.pred_succ_meet)
        << " delta=" << r.delta << " K=" << format_real(r.K) << " a=" << r.a << " sup_dY=" << r.sup_dY
        << " twist_length=" << r.twist_length << " spectrum_sum=" << r.spectrum_sum;
    t.comment("resolution check: deviation = |d_beta(pred, succ) - d_beta(P, Q)|; K = max |J_[s,t]| / ((t-s) sup d_Y)");
    t.comment(sum.str());
    for (const auto& v : r.vertices)
      t.add_row({v.beta.str(), std::to_string(v.first), std::to_string(v.last), v.pred ? v.pred->str() : "",
                 v.succ ? v.succ->str() : "", v.local ? v.local->str() : "", v.global ? v.global->str() : "",
                 v.deviation.str()});
    std::string text = sum.str() + "\n";
    int status = 0;
    if (!r.ok()) {
      text += "FAILED: structural properties violated\n";
      status = kExitDomain;
    } else if (r.delta > calibration::kResolutionDelta) {
      text += "note: delta exceeds the calibrated " + std::to_string(calibration::kResolutionDelta) + "\n";
    }
    return Result{text, t, "", status};
  }

  // ---- batch ----

  static std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, have = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
        have = true;
      } else if (!quoted && (c == ' ' || c == '\t')) {
        if (have) out.push_back(cur);
        cur.clear();
        have = false;
      } else {
        cur += c;
        have = true;
      }
    }
    if (quoted) throw ParseError("unterminated quote in batch line: " + line);
    if (have) out.push_back(cur);
    return out;
  }

  Result cmd_batch();
};

Result Cli::cmd_batch() {
  std::istringstream in(io::read_file(batch_file_));
  io::CsvTable t({"line", "command", "exit", "output"});
  t.comment("batch: each row re-runs as `bgeom <command>` with the same exit code and text output");
  std::string line, text;
  int lineno = 0, worst = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    const auto args = tokenize(line);
    if (!args.empty() && args[0] == "batch") throw ParseError("nested batch on line " + std::to_string(lineno));
    std::ostringstream out, err;
    Cli sub;
    const int code = sub.run(args, out, err);
    std::string o = out.str() + err.str();
    while (!o.empty() && o.back() == '\n') o.pop_back();
    t.add_row({std::to_string(lineno), line, std::to_string(code), o});
    text += line + " -> exit " + std::to_string(code) + "\n" + o + "\n";
    if (code == kExitDomain || code == kExitParse) worst = std::max(worst, code);
  }
  return Result{text, t, "", worst};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Cli cli;
  return cli.run(std::move(args), std::cout, std::cerr);
}
