#include "bgeom/moves/dot.hpp"

#include <map>
#include <set>
#include <sstream>

#include "bgeom/errors.hpp"
#include "bgeom/farey/oracles.hpp"

namespace bgeom::moves {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string pants_graph_dot(const PantsDecomposition& P) {
  std::ostringstream out;
  out << "graph pants {\n  label=" << quoted(P.surface().str()) << ";\n  node [shape=circle];\n";
  const auto& pants = P.pants();
  std::map<std::string, std::vector<std::size_t>> ends;
  for (std::size_t i = 0; i < pants.size(); ++i) {
    out << "  P" << i << " [label=" << quoted(pants[i].str()) << "];\n";
    for (const auto& s : pants[i].slots) {
      if (s.puncture) {
        out << "  " << quoted(s.str()) << " [shape=box];\n";
        out << "  P" << i << " -- " << quoted(s.str()) << ";\n";
      } else {
        ends[s.id].push_back(i);
      }
    }
  }
  for (const auto& [id, e] : ends)
    out << "  P" << e.at(0) << " -- P" << e.at(1) << " [label=" << quoted(id) << "];\n";
  out << "}\n";
  return out.str();
}

std::string farey_ball_dot(const farey::Slope& center, int radius, std::int64_t height,
                           const std::vector<farey::Slope>& path) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  const farey::FareyBox box(height);
  const int c = box.index(center);
  if (c < 0) throw DomainError("center " + center.str() + " lies outside the height box");
  const auto dist = box.bfs(c);

  std::set<int> on_path;
  std::set<std::pair<int, int>> path_edges;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int v = box.index(path[i]);
    if (v >= 0) on_path.insert(v);
    if (i > 0) {
      const int u = box.index(path[i - 1]);
      if (u >= 0 && v >= 0) path_edges.emplace(std::min(u, v), std::max(u, v));
    }
  }

  std::ostringstream out;
  out << "graph farey {\n  label=" << quoted("ball of radius " + std::to_string(radius) + " about " + center.str())
      << ";\n  node [shape=point];\n";
  for (int v = 0; v < static_cast<int>(box.size()); ++v) {
    if (dist[v] < 0 || dist[v] > radius) continue;
    out << "  v" << v << " [xlabel=" << quoted(box.slope(v).str());
    if (on_path.count(v)) out << ", color=red";
    out << "];\n";
  }
  for (int v = 0; v < static_cast<int>(box.size()); ++v) {
    if (dist[v] < 0 || dist[v] > radius) continue;
    for (int w : box.neighbors(v)) {
      if (w <= v || dist[w] < 0 || dist[w] > radius) continue;
      out << "  v" << v << " -- v" << w;
      if (path_edges.count({v, w})) out << " [color=red, penwidth=2]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bgeom::moves
