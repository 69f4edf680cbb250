#include "bgeom/moves/pants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bgeom/errors.hpp"
#include "bgeom/farey/farey.hpp"

namespace bgeom::moves {

using farey::BigInt;
using farey::Slope;

farey::Surface SurfaceSig::farey_surface() const {
  if (genus == 1 && punctures == 1) return farey::Surface::Torus1;
  if (genus == 0 && punctures == 4) return farey::Surface::Sphere4;
  throw UnsupportedSurface("no global slope model on " + str());
}

std::string SurfaceSig::str() const { return "S" + std::to_string(genus) + "," + std::to_string(punctures); }

SurfaceSig make_surface(int genus, int punctures) {
  SurfaceSig s{genus, punctures};
  if (genus < 0 || punctures < 0 || s.complexity() < 1)
    throw UnsupportedSurface("surface " + s.str() + " has no pants decomposition with a curve");
  return s;
}

std::string Pants::str() const { return slots[0].str() + "," + slots[1].str() + "," + slots[2].str(); }

char type_letter(MoveType t) { return t == MoveType::Torus ? 'T' : 'S'; }

namespace {

Slot curve(std::string id) { return Slot{false, std::move(id)}; }
Slot puncture(int k) { return Slot{true, std::to_string(k)}; }

Pants make_pants(Slot a, Slot b, Slot c) {
  Pants p{{std::move(a), std::move(b), std::move(c)}};
  std::sort(p.slots.begin(), p.slots.end());
  return p;
}

// Pairing of the four punctures of S0,4 cut off by a slope, by the parity
// class of (p, q).
std::array<std::array<int, 2>, 2> sphere_pairing(const Slope& s) {
  const bool p_odd = boost::multiprecision::abs(s.p()) % 2 == 1;
  const bool q_odd = s.q() % 2 == 1;
  if (!p_odd && q_odd) return {{{1, 2}, {3, 4}}};
  if (p_odd && !q_odd) return {{{1, 3}, {2, 4}}};
  return {{{1, 4}, {2, 3}}};
}

bool is_slope_id(const std::string& id) {
  try {
    Slope::parse(id);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace

PantsDecomposition::PantsDecomposition(SurfaceSig sig, std::vector<Pants> pants) : sig_(sig) {
  if (sig.complexity() < 1) throw StructuralError("surface " + sig.str() + " admits no curves");
  const int want_pants = 2 * sig.genus - 2 + sig.punctures;
  if (static_cast<int>(pants.size()) != want_pants)
    throw StructuralError("expected " + std::to_string(want_pants) + " pants, got " + std::to_string(pants.size()));

  std::map<std::string, int> curve_uses;
  std::map<std::string, int> puncture_uses;
  for (auto& p : pants) {
    std::sort(p.slots.begin(), p.slots.end());
    for (const auto& s : p.slots) {
      if (s.id.empty()) throw StructuralError("empty slot id");
      (s.puncture ? puncture_uses : curve_uses)[s.id]++;
    }
  }
  for (int k = 1; k <= sig.punctures; ++k)
    if (puncture_uses[std::to_string(k)] != 1) throw StructuralError("puncture *" + std::to_string(k) + " must fill one slot");
  if (static_cast<int>(puncture_uses.size()) != sig.punctures) throw StructuralError("unknown puncture label");
  for (const auto& [id, n] : curve_uses)
    if (n != 2) throw StructuralError("curve " + id + " fills " + std::to_string(n) + " slots, expected 2");
  if (static_cast<int>(curve_uses.size()) != sig.complexity())
    throw StructuralError("expected " + std::to_string(sig.complexity()) + " curves, got " +
                          std::to_string(curve_uses.size()));

  // The dual graph must be connected.
  std::vector<int> comp(pants.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::map<std::string, int> first_seen;
  for (std::size_t i = 0; i < pants.size(); ++i)
    for (const auto& s : pants[i].slots)
      if (!s.puncture) {
        auto [it, fresh] = first_seen.emplace(s.id, static_cast<int>(i));
        if (!fresh) comp[find(it->second)] = find(static_cast<int>(i));
      }
  for (std::size_t i = 1; i < pants.size(); ++i)
    if (find(static_cast<int>(i)) != find(0)) throw StructuralError("pants do not glue to a connected surface");

  std::sort(pants.begin(), pants.end(), [](const Pants& a, const Pants& b) { return a.str() < b.str(); });
  pants_ = std::move(pants);
  for (const auto& [id, n] : curve_uses) curves_.push_back(id);
}

PantsDecomposition PantsDecomposition::seed(SurfaceSig sig, const std::optional<Slope>& first) {
  make_surface(sig.genus, sig.punctures);
  if (sig.is_xi1()) {
    const Slope a = first.value_or(Slope(0, 1));
    const std::string id = a.str();
    if (sig.genus == 1) return PantsDecomposition(sig, {make_pants(curve(id), curve(id), puncture(1))});
    const auto pr = sphere_pairing(a);
    return PantsDecomposition(sig, {make_pants(curve(id), puncture(pr[0][0]), puncture(pr[0][1])),
                                    make_pants(curve(id), puncture(pr[1][0]), puncture(pr[1][1]))});
  }
  if (first) throw UnsupportedSurface("slope seeds need a complexity-one surface");

  int next = 0;
  auto fresh = [&] { return curve("c" + std::to_string(++next)); };
  std::vector<Pants> pants;
  std::vector<Slot> boundary;
  for (int h = 0; h < sig.genus; ++h) {
    const Slot handle = fresh();
    const Slot cuff = fresh();
    pants.push_back(make_pants(handle, handle, cuff));
    boundary.push_back(cuff);
  }
  for (int k = 1; k <= sig.punctures; ++k) boundary.push_back(puncture(k));

  if (boundary.size() == 2) {
    // Two boundary circles glue directly: rename the second onto the first.
    const Slot keep = boundary[1].puncture ? boundary[1] : boundary[0];
    const Slot drop = boundary[1].puncture ? boundary[0] : boundary[1];
    for (auto& p : pants)
      for (auto& s : p.slots)
        if (s == drop) s = keep;
  } else {
    // Chain of pants on a sphere with these boundary circles.
    Slot left = boundary[0];
    for (std::size_t i = 1; i + 2 < boundary.size(); ++i) {
      const Slot mid = fresh();
      pants.push_back(make_pants(left, boundary[i], mid));
      left = mid;
    }
    pants.push_back(make_pants(left, boundary[boundary.size() - 2], boundary.back()));
  }
  // Renumber curves so names are dense after any merge above.
  std::map<std::string, std::string> rename;
  int k = 0;
  for (auto& p : pants)
    for (auto& s : p.slots)
      if (!s.puncture && !rename.count(s.id)) rename[s.id] = "c" + std::to_string(++k);
  for (auto& p : pants)
    for (auto& s : p.slots)
      if (!s.puncture) s.id = rename[s.id];
  return PantsDecomposition(sig, std::move(pants));
}

PantsDecomposition PantsDecomposition::parse(SurfaceSig sig, const std::string& text) {
  std::vector<Pants> pants;
  std::stringstream in(text);
  std::string group;
  while (std::getline(in, group, '|')) {
    std::vector<Slot> slots;
    std::stringstream g(group);
    std::string tok;
    while (std::getline(g, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty()) throw ParseError("empty slot in '" + group + "'");
      slots.push_back(tok[0] == '*' ? Slot{true, tok.substr(1)} : Slot{false, tok});
    }
    if (slots.size() != 3) throw ParseError("pants need three slots: '" + group + "'");
    pants.push_back(make_pants(slots[0], slots[1], slots[2]));
  }
  return PantsDecomposition(sig, std::move(pants));
}

bool PantsDecomposition::contains(const std::string& c) const {
  return std::binary_search(curves_.begin(), curves_.end(), c);
}

MoveType PantsDecomposition::support_type(const std::string& c) const {
  if (!contains(c)) throw InvalidMove("curve " + c + " is not in the decomposition");
  for (const auto& p : pants_) {
    int n = 0;
    for (const auto& s : p.slots) n += (!s.puncture && s.id == c);
    if (n == 2) return MoveType::Torus;
  }
  return MoveType::Sphere;
}

std::string PantsDecomposition::str() const {
  std::string out;
  for (std::size_t i = 0; i < pants_.size(); ++i) {
    if (i) out += " | ";
    out += pants_[i].str();
  }
  return out;
}

PantsDecomposition apply_move(const PantsDecomposition& P, const ElementaryMove& m) {
  if (!P.contains(m.removed)) throw InvalidMove("curve " + m.removed + " is not in the decomposition");
  if (m.inserted.empty() || m.inserted == m.removed) throw InvalidMove("inserted curve must differ from removed");
  if (P.contains(m.inserted)) throw InvalidMove("curve " + m.inserted + " is already present");
  const MoveType support = P.support_type(m.removed);
  if (support != m.type)
    throw InvalidMove(std::string("move type ") + type_letter(m.type) + " does not match the " +
                      (support == MoveType::Torus ? "one-holed torus" : "four-holed sphere") + " around " + m.removed);

  const SurfaceSig& sig = P.surface();
  std::optional<Slope> new_slope;
  if (sig.is_xi1()) {
    if (!is_slope_id(m.inserted)) throw InvalidMove("complexity-one curves are slopes; got " + m.inserted);
    const Slope a = Slope::parse(m.removed);
    new_slope = Slope::parse(m.inserted);
    const BigInt want = sig.genus == 1 ? 1 : 2;
    if (farey::intersection_number(a, *new_slope, sig.farey_surface()) != want)
      throw InvalidMove("slopes " + m.removed + " and " + m.inserted + " are not related by an elementary move");
    if (new_slope->str() != m.inserted) throw InvalidMove("slope " + m.inserted + " is not in canonical form");
  }

  std::vector<Pants> out;
  std::vector<const Pants*> touched;
  for (const auto& p : P.pants()) {
    bool has = false;
    for (const auto& s : p.slots) has = has || (!s.puncture && s.id == m.removed);
    if (has) touched.push_back(&p);
    else out.push_back(p);
  }

  const Slot fresh{false, m.inserted};
  if (support == MoveType::Torus) {
    Pants p = *touched.at(0);
    for (auto& s : p.slots)
      if (!s.puncture && s.id == m.removed) s = fresh;
    out.push_back(make_pants(p.slots[0], p.slots[1], p.slots[2]));
    return PantsDecomposition(sig, std::move(out));
  }

  if (sig.is_xi1()) {
    const auto pr = sphere_pairing(*new_slope);
    return PantsDecomposition(sig, {make_pants(fresh, puncture(pr[0][0]), puncture(pr[0][1])),
                                    make_pants(fresh, puncture(pr[1][0]), puncture(pr[1][1]))});
  }

  auto others = [&](const Pants& p) {
    std::vector<Slot> v;
    for (const auto& s : p.slots)
      if (s.puncture || s.id != m.removed) v.push_back(s);
    return v;
  };
  const auto x = others(*touched.at(0));
  const auto y = others(*touched.at(1));
  const bool even = m.twist_index % 2 == 0;
  out.push_back(make_pants(fresh, x[0], even ? y[0] : y[1]));
  out.push_back(make_pants(fresh, x[1], even ? y[1] : y[0]));
  return PantsDecomposition(sig, std::move(out));
}

Slope farey_inserted(const Slope& alpha, const BigInt& n, const std::optional<Slope>& reference) {
  const BigInt base = reference ? farey::twist_coordinate(alpha, *reference) : BigInt(0);
  return farey::normalizing_matrix(alpha).inverse()(Slope(base + n, 1));
}

ElementaryMove farey_move(const PantsDecomposition& P, const Slope& alpha, const BigInt& n,
                          const std::optional<Slope>& reference) {
  if (!P.surface().is_xi1()) throw UnsupportedSurface("slope moves need a complexity-one surface");
  ElementaryMove m;
  m.removed = alpha.str();
  m.inserted = farey_inserted(alpha, n, reference).str();
  m.type = P.support_type(m.removed);
  m.twist_index = n;
  return m;
}

std::vector<std::pair<ElementaryMove, PantsDecomposition>> neighbor_moves(const PantsDecomposition& P, int window) {
  std::vector<std::pair<ElementaryMove, PantsDecomposition>> out;
  for (const auto& c : P.curves())
    for (int n = -window; n <= window; ++n) {
      ElementaryMove m;
      if (P.surface().is_xi1()) {
        m = farey_move(P, Slope::parse(c), n);
      } else {
        m.removed = c;
        m.inserted = c + "~" + std::to_string(n);
        m.type = P.support_type(c);
        m.twist_index = n;
        if (P.contains(m.inserted)) continue;
      }
      out.emplace_back(m, apply_move(P, m));
    }
  return out;
}

}  // namespace bgeom::moves
