#include "flood/fixtures.hpp"

#include <stdexcept>

namespace flood {

namespace {

Instance build(const std::string& name, std::vector<std::string> names,
               int root,
               const std::vector<std::tuple<int, int, int>>& edges) {
  SignedGraph g;
  for (int v = 0; v < static_cast<int>(names.size()); ++v) g.addVertex(v);
  for (const auto& [u, v, w] : edges) g.addEdge(u, v, w);
  requireRES(g, root);
  return Instance{name, RESGraph{std::move(g), root}, std::move(names)};
}

Instance loop(const std::string& name, int weight) {
  return build(name, {"b"}, 0, {{0, 0, weight}});
}

Instance digon(const std::string& name, int w1, int w2) {
  return build(name, {"b", "v"}, 0, {{0, 1, w1}, {0, 1, w2}});
}

Instance tri() {
  return build("TRI", {"b", "x", "y"}, 0, {{0, 1, 1}, {1, 2, 0}, {2, 0, 0}});
}

Instance fig2() {
  // 4-cycle v1..v4 with one non-zero edge, plus a zero and a non-zero edge
  // from b to each cycle vertex.
  std::vector<std::tuple<int, int, int>> edges = {
      {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {1, 4, 1}};
  for (int i = 1; i <= 4; ++i) {
    edges.push_back({0, i, 1});
    edges.push_back({0, i, 0});
  }
  return build("FIG2", {"b", "v1", "v2", "v3", "v4"}, 0, edges);
}

Instance fig7() {
  // Three petals: four parallel edges b-ui weighted 1,1,0,0 and a non-zero
  // loop at each ui.
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 1; i <= 3; ++i) {
    edges.push_back({0, i, 1});
    edges.push_back({0, i, 1});
    edges.push_back({0, i, 0});
    edges.push_back({0, i, 0});
    edges.push_back({i, i, 1});
  }
  return build("FIG7", {"b", "u1", "u2", "u3"}, 0, edges);
}

Instance k5() {
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) edges.push_back({i, j, 1});
  return build("K5", {"v0", "v1", "v2", "v3", "v4"}, 0, edges);
}

}  // namespace

std::vector<std::string> fixtureNames() {
  return {"LOOP1", "LOOP0", "DIGON10", "DIGON11", "TRI", "FIG2", "FIG7", "K5"};
}

Instance fixture(const std::string& name) {
  if (name == "LOOP1") return loop("LOOP1", 1);
  if (name == "LOOP0") return loop("LOOP0", 0);
  if (name == "DIGON10") return digon("DIGON10", 1, 0);
  if (name == "DIGON11") return digon("DIGON11", 1, 1);
  if (name == "TRI") return tri();
  if (name == "FIG2") return fig2();
  if (name == "FIG7") return fig7();
  if (name == "K5") return k5();
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace flood
