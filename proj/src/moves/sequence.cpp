#include "bgeom/moves/sequence.hpp"

#include <regex>
#include <sstream>

#include "bgeom/errors.hpp"

namespace bgeom::moves {

MoveSequence::MoveSequence(PantsDecomposition start, std::vector<ElementaryMove> moves) : moves_(std::move(moves)) {
  decomps_.reserve(moves_.size() + 1);
  decomps_.push_back(std::move(start));
  for (const auto& m : moves_) decomps_.push_back(apply_move(decomps_.back(), m));
  for (std::size_t k = 0; k < decomps_.size(); ++k)
    for (const auto& c : decomps_[k].curves()) occupancy_[c].push_back(static_cast<int>(k));
}

std::string MoveSequence::to_text() const {
  std::ostringstream out;
  const auto& s = surface();
  out << "# surface " << s.genus << ' ' << s.punctures << '\n';
  out << "# start " << decomps_.front().str() << '\n';
  if (from) out << "# from " << from->str() << '\n';
  if (to) out << "# to " << to->str() << '\n';
  for (std::size_t k = 0; k < moves_.size(); ++k) {
    const auto& m = moves_[k];
    out << "step " << k << ": remove " << m.removed << " insert " << m.inserted << " type " << type_letter(m.type)
        << " index " << m.twist_index << '\n';
  }
  return out.str();
}

MoveSequence MoveSequence::parse(const std::string& text) {
  static const std::regex step_re(R"(step\s+(\d+):\s+remove\s+(\S+)\s+insert\s+(\S+)\s+type\s+([TS])\s+index\s+(-?\d+))");
  std::optional<SurfaceSig> sig;
  std::optional<std::string> start;
  std::optional<farey::Slope> from, to;
  std::vector<ElementaryMove> moves;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string key;
      h >> key;
      std::string rest;
      std::getline(h >> std::ws, rest);
      if (key == "surface") {
        std::istringstream r(rest);
        int g = -1, p = -1;
        if (!(r >> g >> p)) fail("expected '# surface <genus> <punctures>'");
        sig = make_surface(g, p);
      } else if (key == "start") {
        start = rest;
      } else if (key == "from") {
        from = farey::Slope::parse(rest);
      } else if (key == "to") {
        to = farey::Slope::parse(rest);
      }
      continue;  // other comments are ignored
    }
    std::smatch mt;
    if (!std::regex_match(line, mt, step_re)) fail("malformed step '" + line + "'");
    if (std::stoul(mt[1]) != moves.size()) fail("step numbers must run 0, 1, 2, ...");
    ElementaryMove m;
    m.removed = mt[2];
    m.inserted = mt[3];
    m.type = mt[4] == "T" ? MoveType::Torus : MoveType::Sphere;
    m.twist_index = farey::BigInt(mt[5].str());
    moves.push_back(std::move(m));
  }
  if (!sig) throw ParseError("missing '# surface' header");
  if (!start) throw ParseError("missing '# start' header");
  MoveSequence seq(PantsDecomposition::parse(*sig, *start), std::move(moves));
  seq.from = from;
  seq.to = to;
  return seq;
}

OccupancyIntervals occupancy_intervals(const MoveSequence& seq) {
  OccupancyIntervals out;
  for (const auto& [curve, steps] : seq.occupancy()) {
    auto& runs = out.runs[curve];
    for (int k : steps) {
      if (!runs.empty() && runs.back().second + 1 == k) runs.back().second = k;
      else runs.emplace_back(k, k);
    }
    if (runs.size() > 1) out.flagged.push_back(curve);
  }
  return out;
}

std::pair<std::optional<std::string>, std::optional<std::string>> predecessor_successor(const MoveSequence& seq,
                                                                                       const std::string& beta) {
  const auto it = seq.occupancy().find(beta);
  if (it == seq.occupancy().end()) throw StructuralError("curve " + beta + " never occurs in the sequence");
  const auto& steps = it->second;
  if (steps.back() - steps.front() + 1 != static_cast<int>(steps.size()))
    throw StructuralError("occupancy of " + beta + " is not an interval");
  std::pair<std::optional<std::string>, std::optional<std::string>> out;
  const int k = steps.front(), l = steps.back();
  if (k > 0) out.first = seq.moves()[k - 1].removed;
  if (l < seq.length()) out.second = seq.moves()[l].inserted;
  return out;
}

}  // namespace bgeom::moves
