#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bgeom/farey/slope.hpp"

namespace bgeom::moves {

/// Genus g with p punctures; needs 3g - 3 + p >= 1.
struct SurfaceSig {
  int genus = 1;
  int punctures = 1;

  int complexity() const { return 3 * genus - 3 + punctures; }
  int euler() const { return 2 - 2 * genus - punctures; }
  /// One-holed torus or four-holed sphere: curves are global slopes.
  bool is_xi1() const { return complexity() == 1; }
  farey::Surface farey_surface() const;

  std::string str() const;  // "S1,1"
  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

SurfaceSig make_surface(int genus, int punctures);

/// A boundary slot of a pair of pants: a curve or a puncture. Puncture ids
/// are written with a leading '*' ("*1").
struct Slot {
  bool puncture = false;
  std::string id;

  std::string str() const { return puncture ? "*" + id : id; }
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot& a, const Slot& b) { return a.str() <=> b.str(); }
};

struct Pants {
  std::array<Slot, 3> slots;  // kept sorted

  std::string str() const;  // "a,a,*1"
  friend bool operator==(const Pants&, const Pants&) = default;
};

enum class MoveType { Torus, Sphere };

char type_letter(MoveType t);

struct ElementaryMove {
  std::string removed;
  std::string inserted;
  MoveType type = MoveType::Torus;
  farey::BigInt twist_index = 0;
};

/// A maximal curve system: 3g - 3 + p curves cutting the surface into
/// 2g - 2 + p pants. Curve ids are opaque except on complexity-one surfaces,
/// where they are slopes "p/q".
class PantsDecomposition {
 public:
  /// Validates and canonicalizes. Throws StructuralError.
  PantsDecomposition(SurfaceSig sig, std::vector<Pants> pants);

  /// A standard decomposition. On complexity-one surfaces the single curve is
  /// the slope `first` (default 0/1); elsewhere curves are named c1, c2, ...
  static PantsDecomposition seed(SurfaceSig sig, const std::optional<farey::Slope>& first = std::nullopt);

  /// Parses "a,a,*1 | ..." as produced by str().
  static PantsDecomposition parse(SurfaceSig sig, const std::string& text);

  const SurfaceSig& surface() const { return sig_; }
  const std::vector<std::string>& curves() const { return curves_; }
  const std::vector<Pants>& pants() const { return pants_; }
  bool contains(const std::string& curve) const;

  /// Torus when the curve bounds the same pants twice, Sphere otherwise.
  /// Throws InvalidMove if absent.
  MoveType support_type(const std::string& curve) const;

  std::string str() const;
  friend bool operator==(const PantsDecomposition& a, const PantsDecomposition& b) {
    return a.sig_ == b.sig_ && a.pants_ == b.pants_;
  }

 private:
  SurfaceSig sig_;
  std::vector<std::string> curves_;  // sorted
  std::vector<Pants> pants_;         // sorted by str()
};

/// Replaces m.removed by m.inserted. On a four-holed support the new curve
/// pairs the four outer slots by the parity of twist_index (even keeps the
/// first slots of each pants together); on complexity-one surfaces the
/// slopes themselves fix the pairing and must meet once (torus) or twice
/// (sphere). Throws InvalidMove.
PantsDecomposition apply_move(const PantsDecomposition& P, const ElementaryMove& m);

/// The slope inserted by the move of index n about alpha: the Farey
/// neighbor M^{-1}(t + n) where M normalizes alpha and t is the twist of the
/// reference slope about alpha (0 without a reference).
farey::Slope farey_inserted(const farey::Slope& alpha, const farey::BigInt& n,
                            const std::optional<farey::Slope>& reference = std::nullopt);

/// Elementary move about the slope curve alpha of a complexity-one P.
ElementaryMove farey_move(const PantsDecomposition& P, const farey::Slope& alpha, const farey::BigInt& n,
                          const std::optional<farey::Slope>& reference = std::nullopt);

/// All decompositions reachable from P by one move with twist index in
/// [-window, window]; inserted curves of opaque surfaces are named
/// "<removed>~<index>".
std::vector<std::pair<ElementaryMove, PantsDecomposition>> neighbor_moves(const PantsDecomposition& P,
                                                                          int window);

}  // namespace bgeom::moves
