#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bgeom/calibration.hpp"
#include "bgeom/errors.hpp"
#include "bgeom/farey/farey.hpp"
#include "bgeom/moves/dot.hpp"
#include "bgeom/moves/pants.hpp"
#include "bgeom/moves/resolution.hpp"
#include "bgeom/moves/sequence.hpp"

using namespace bgeom;
using namespace bgeom::moves;
using farey::BigInt;
using farey::Slope;

namespace {

Slope S(const char* s) { return Slope::parse(s); }

// Structural invariants checked independently of the constructor.
void check_invariants(const PantsDecomposition& P) {
  const auto& sig = P.surface();
  CHECK(static_cast<int>(P.pants().size()) == -sig.euler());
  CHECK(static_cast<int>(P.curves().size()) == sig.complexity());
  std::map<std::string, int> uses;
  for (const auto& pa : P.pants())
    for (const auto& s : pa.slots) ++uses[s.str()];
  for (const auto& c : P.curves()) CHECK(uses[c] == 2);
  for (int k = 1; k <= sig.punctures; ++k) CHECK(uses["*" + std::to_string(k)] == 1);
  CHECK(uses.size() == P.curves().size() + static_cast<std::size_t>(sig.punctures));
}

}  // namespace

TEST_CASE("seed decompositions") {
  for (const auto& [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {0, 5}, {1, 2}, {2, 0}, {0, 7}, {2, 3}}) {
    const auto P = PantsDecomposition::seed(make_surface(g, p));
    check_invariants(P);
    CHECK(PantsDecomposition::parse(P.surface(), P.str()) == P);
  }
  CHECK(PantsDecomposition::seed(make_surface(1, 2)).str() == "*1,*2,c2 | c1,c1,c2");
  CHECK_THROWS_AS(make_surface(0, 3), DomainError);
  CHECK(PantsDecomposition::seed(make_surface(1, 1), S("3/5")).curves() == std::vector<std::string>{"3/5"});
}

TEST_CASE("malformed decompositions are rejected") {
  const auto s12 = make_surface(1, 2);
  CHECK_THROWS_AS(PantsDecomposition::parse(s12, "c1,c1,c2 | c2,*1,*1"), StructuralError);
  CHECK_THROWS_AS(PantsDecomposition::parse(s12, "c1,c1,c2"), StructuralError);
  CHECK_THROWS_AS(PantsDecomposition::parse(s12, "c1,c1,c2 | c3,*1,*2"), StructuralError);
  // Two components.
  CHECK_THROWS_AS(PantsDecomposition::parse(make_surface(0, 6), "a,*1,*2 | a,*3,*4 | b,b,*5 | c,c,*6"),
                  StructuralError);
}

TEST_CASE("complexity-one moves") {
  const auto s11 = make_surface(1, 1), s04 = make_surface(0, 4);
  CHECK(farey_inserted(S("0/1"), 0) == Slope::infinity());
  const auto P = PantsDecomposition::seed(s11);
  const auto Q = apply_move(P, farey_move(P, S("0/1"), 0));
  CHECK(Q.curves() == std::vector<std::string>{"inf"});
  CHECK(Q.support_type("inf") == MoveType::Torus);
  for (int n = -4; n <= 4; ++n)
    CHECK(farey::intersection_number(S("0/1"), farey_inserted(S("0/1"), n)) == 1);
  // Slopes meeting more than once are not moves.
  CHECK_THROWS_AS(apply_move(P, {"0/1", "2/3", MoveType::Torus, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(P, {"1/3", "inf", MoveType::Torus, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(P, {"0/1", "inf", MoveType::Sphere, 0}), InvalidMove);

  const auto R = PantsDecomposition::seed(s04, S("1/2"));
  check_invariants(R);
  CHECK(R.support_type("1/2") == MoveType::Sphere);
  const auto R2 = apply_move(R, {"1/2", "0/1", MoveType::Sphere, 0});
  check_invariants(R2);
  // Pairing follows slope parity: 0/1 groups *1 with *2.
  CHECK(R2.str().find("*1,*2,0/1") != std::string::npos);
}

TEST_CASE("a sphere move leaves the other curves alone") {
  const auto P = PantsDecomposition::seed(make_surface(0, 5));
  check_invariants(P);
  REQUIRE(P.curves().size() == 2);
  const std::string a = P.curves()[0], b = P.curves()[1];
  const auto Q = apply_move(P, {a, "x", MoveType::Sphere, 1});
  check_invariants(Q);
  CHECK(Q.contains(b));
  CHECK(Q.contains("x"));
  CHECK(!Q.contains(a));
  CHECK(Q.support_type(b) == P.support_type(b));
  CHECK_THROWS_AS(apply_move(P, {a, b, MoveType::Sphere, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(P, {a, a, MoveType::Sphere, 0}), InvalidMove);
}

TEST_CASE("moves are reversible and preserve invariants") {
  for (const auto& sig : {make_surface(0, 5), make_surface(1, 2)}) {
    std::vector<PantsDecomposition> frontier{PantsDecomposition::seed(sig)};
    std::set<std::string> seen{frontier[0].str()};
    for (int depth = 0; depth < 4; ++depth) {
      std::vector<PantsDecomposition> next;
      for (const auto& P : frontier)
        for (const auto& [m, Q] : neighbor_moves(P, 1)) {
          check_invariants(Q);
          CHECK(Q.support_type(m.inserted) == m.type);
          bool restored = false;
          for (int n = -2; n <= 2 && !restored; ++n)
            restored = apply_move(Q, {m.inserted, m.removed, m.type, n}) == P;
          CHECK(restored);
          if (seen.insert(Q.str()).second) next.push_back(Q);
        }
      frontier = std::move(next);
    }
    CHECK(seen.size() > 100);
  }
}

TEST_CASE("occupancy and predecessor/successor") {
  const auto s11 = make_surface(1, 1);
  const auto P = PantsDecomposition::seed(s11);
  SUBCASE("a revisited curve is flagged") {
    const MoveSequence seq(P, {{"0/1", "inf", MoveType::Torus, 0}, {"inf", "0/1", MoveType::Torus, 0}});
    CHECK(seq.occupancy().at("0/1") == std::vector<int>{0, 2});
    const auto iv = occupancy_intervals(seq);
    CHECK(iv.flagged == std::vector<std::string>{"0/1"});
    CHECK(iv.runs.at("0/1").size() == 2);
    CHECK_THROWS_AS(predecessor_successor(seq, "0/1"), StructuralError);
    const auto [pr, su] = predecessor_successor(seq, "inf");
    CHECK(pr == "0/1");
    CHECK(su == "0/1");
  }
  SUBCASE("a path") {
    const MoveSequence seq(P, {{"0/1", "1/1", MoveType::Torus, 0}, {"1/1", "1/2", MoveType::Torus, 0}});
    CHECK(occupancy_intervals(seq).flagged.empty());
    const auto [p0, s0] = predecessor_successor(seq, "0/1");
    CHECK(!p0);
    CHECK(s0 == "1/1");
    const auto [p2, s2] = predecessor_successor(seq, "1/2");
    CHECK(p2 == "1/1");
    CHECK(!s2);
    CHECK_THROWS_AS(predecessor_successor(seq, "2/3"), StructuralError);
  }
  CHECK_THROWS_AS(MoveSequence(P, {{"1/0", "0/1", MoveType::Torus, 0}}), InvalidMove);
}

TEST_CASE("sequence text round trip") {
  const auto seq = generate_resolution_xi1(make_surface(1, 1), S("0/1"), S("-13/8"));
  const std::string text = seq.to_text();
  const auto back = MoveSequence::parse(text);
  CHECK(back.to_text() == text);
  CHECK(back.decompositions() == seq.decompositions());
  CHECK(back.from == S("0/1"));
  CHECK(back.to == S("-13/8"));
  CHECK_THROWS_AS(MoveSequence::parse("# surface 1 1\nstep 0: remove"), ParseError);
  CHECK_THROWS_AS(MoveSequence::parse("step 0: remove 0/1 insert inf type T index 0\n"), ParseError);

  const auto opaque = MoveSequence(PantsDecomposition::seed(make_surface(0, 5)), {{"c1", "d", MoveType::Sphere, 3}});
  CHECK(MoveSequence::parse(opaque.to_text()).decompositions() == opaque.decompositions());
}

TEST_CASE("complexity-one resolutions") {
  const auto s11 = make_surface(1, 1), s04 = make_surface(0, 4);
  SUBCASE("adjacent slopes take one move") {
    const auto seq = generate_resolution_xi1(s11, S("0/1"), Slope::infinity());
    CHECK(seq.length() == 1);
    CHECK(seq.moves()[0].twist_index == 0);
    CHECK(check_resolution_properties(seq, S("0/1"), Slope::infinity()).ok());
  }
  SUBCASE("move indices are relative to the target") {
    for (const auto* q : {"3/8", "-8/5", "55/34", "-100/3"}) {
      const auto seq = generate_resolution_xi1(s11, S("0/1"), S(q));
      for (const auto& m : seq.moves()) CHECK((m.twist_index == 0 || m.twist_index == 1));
    }
    CHECK(generate_resolution_xi1(s11, S("0/1"), S("-8/5")).moves()[0].twist_index == 1);
  }
  SUBCASE("twist length tracks the coefficient spectrum") {
    for (const auto* q : {"3/8", "-21/34", "100/7", "5/1"}) {
      for (const auto& sig : {s11, s04}) {
        const auto seq = generate_resolution_xi1(sig, S("0/1"), S(q));
        const auto r = check_resolution_properties(seq, S("0/1"), S(q));
        CHECK(r.ok());
        CHECK(r.moves == r.distance);
        CHECK(r.delta <= calibration::kResolutionDelta);
        CHECK(r.K <= calibration::kResolutionK);
        CHECK(boost::multiprecision::abs(r.twist_length - r.spectrum_sum) <= r.delta * r.distance + r.distance);
      }
    }
  }
  SUBCASE("swapping the endpoints reverses the path") {
    const auto fwd = generate_resolution_xi1(s11, S("2/7"), S("-5/3"));
    const auto bwd = generate_resolution_xi1(s11, S("-5/3"), S("2/7"));
    auto a = fwd.decompositions();
    const auto& b = bwd.decompositions();
    std::reverse(a.begin(), a.end());
    CHECK(a == b);
  }
  SUBCASE("a broken sequence is reported, not thrown") {
    const auto P = PantsDecomposition::seed(s11);
    const MoveSequence seq(P, {{"0/1", "1/1", MoveType::Torus, 0}, {"1/1", "inf", MoveType::Torus, 0}});
    const auto r = check_resolution_properties(seq, S("0/1"), S("1/2"));
    CHECK(!r.endpoints_ok);
    CHECK(!r.ok());
    const auto detour = check_resolution_properties(seq, S("0/1"), Slope::infinity());
    CHECK(detour.endpoints_ok);
    CHECK(!detour.every_step_on_geodesic);
  }
  CHECK_THROWS_AS(generate_resolution_xi1(make_surface(0, 5), S("0/1"), S("1/0")), UnsupportedSurface);
  CHECK_THROWS_AS(generate_resolution_xi1(s11, S("1/2"), S("1/2")), DegeneratePair);
}

TEST_CASE("exhaustive sweep over a small box") {
  for (const auto& sig : {make_surface(1, 1), make_surface(0, 4)}) {
    const auto w = sweep_resolutions_xi1(sig, 8);
    CHECK(w.failures == 0);
    CHECK(w.delta <= calibration::kResolutionDelta);
    CHECK(w.K <= calibration::kResolutionK);
    CHECK(w.pairs == w.slopes * (w.slopes - 1));
  }
}

TEST_CASE("breadth-first resolutions") {
  const auto s11 = make_surface(1, 1);
  const auto P = PantsDecomposition::seed(s11), Q = PantsDecomposition::seed(s11, S("2/5"));
  const auto seq = bfs_resolution(P, Q, 5, 3);
  REQUIRE(seq);
  CHECK(seq->length() == farey::farey_distance(S("0/1"), S("2/5")));
  CHECK(seq->decompositions().back() == Q);
  CHECK(!bfs_resolution(P, Q, 1, 3));

  const auto A = PantsDecomposition::seed(make_surface(0, 5));
  const auto named = bfs_resolution(A, apply_move(A, {"c1", "c1~1", MoveType::Sphere, 1}), 2, 1);
  REQUIRE(named);
  CHECK(named->length() == 1);
}

TEST_CASE("DOT export") {
  const auto g = pants_graph_dot(PantsDecomposition::seed(make_surface(1, 2)));
  CHECK(g.rfind("graph", 0) == 0);
  CHECK(g.find("c1") != std::string::npos);
  CHECK(g.find("*2") != std::string::npos);
  const auto path = farey::farey_geodesic(S("0/1"), S("3/5"));
  const auto f = moves::farey_ball_dot(S("0/1"), 3, 5, path);
  CHECK(f.find("\"3/5\"") != std::string::npos);
  CHECK(f.find("red") != std::string::npos);
  CHECK_THROWS_AS(moves::farey_ball_dot(S("7/1"), 2, 5), DomainError);
}
