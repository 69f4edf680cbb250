#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgeom/farey/slope.hpp"
#include "bgeom/moves/pants.hpp"

namespace bgeom::moves {

/// P_0, ..., P_n with P_{k+1} = apply_move(P_k, moves[k]), and the occupancy
/// J_beta = {k : beta in P_k} of every curve that appears.
class MoveSequence {
 public:
  /// Replays the moves from `start`. Throws InvalidMove.
  MoveSequence(PantsDecomposition start, std::vector<ElementaryMove> moves);

  const SurfaceSig& surface() const { return decomps_.front().surface(); }
  const std::vector<PantsDecomposition>& decompositions() const { return decomps_; }
  const std::vector<ElementaryMove>& moves() const { return moves_; }
  /// Index of the last decomposition.
  int length() const { return static_cast<int>(moves_.size()); }
  const std::map<std::string, std::vector<int>>& occupancy() const { return occupancy_; }

  /// Endpoint labels for complexity-one sequences, carried through the text
  /// format.
  std::optional<farey::Slope> from, to;

  /// Line format: "# surface g p", "# start <pants>", optional "# from <slope>"
  /// and "# to <slope>", then "step k: remove <id> insert <id> type <T|S>
  /// index <n>" for the move taking P_k to P_{k+1}.
  std::string to_text() const;
  /// Throws ParseError on malformed lines, InvalidMove on illegal moves.
  static MoveSequence parse(const std::string& text);

 private:
  std::vector<PantsDecomposition> decomps_;
  std::vector<ElementaryMove> moves_;
  std::map<std::string, std::vector<int>> occupancy_;
};

struct OccupancyIntervals {
  /// Maximal runs [k, l] of each J_beta, in order.
  std::map<std::string, std::vector<std::pair<int, int>>> runs;
  /// Curves whose occupancy is not a single interval.
  std::vector<std::string> flagged;
};

OccupancyIntervals occupancy_intervals(const MoveSequence& seq);

/// For J_beta = [k, l]: the curve removed entering P_k (none if k = 0) and the
/// curve inserted leaving P_l (none if l = n). Throws StructuralError when
/// J_beta is empty or not an interval.
std::pair<std::optional<std::string>, std::optional<std::string>> predecessor_successor(const MoveSequence& seq,
                                                                                       const std::string& beta);

}  // namespace bgeom::moves
