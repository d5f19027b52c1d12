#include <set>

#include "doctest.h"
#include "flood/fixtures.hpp"
#include "flood/io.hpp"
#include "flood/solver.hpp"

using namespace flood;

namespace {

// Independent route: the flooding number via the plain flooding stream.
int naiveFloodingNumber(const RESGraph& g) {
  int best = -1;
  forEachFlooding(g, kDefaultCap, [&](const Flooding& f) {
    best = std::max(best, countNonZero(g.graph, f));
  });
  return std::max(0, best);
}

// Independent route: the problem statement read off every decomposition.
int naiveDirectNumber(const RESGraph& g) {
  int best = 0;
  forEachTransitionSystem(g.graph, kDefaultCap, [&](const TransitionSystem& ts) {
    std::vector<Circuit> dec = decompositionOf(g.graph, ts);
    for (const Circuit& c : dec) {
      if (circuitWeight(g.graph, c) != 1) return;
      bool hits = false;
      for (const Arc& a : c.arcs)
        hits = hits || g.graph.vertexOf(a.tail) == g.root ||
               g.graph.vertexOf(a.head) == g.root;
      if (!hits) return;
    }
    best = std::max(best, static_cast<int>(dec.size()));
  });
  return best;
}

int nonZeroEdgeCount(const SignedGraph& g) {
  int out = 0;
  for (EdgeId e : g.edgeIds()) out += g.weight(e);
  return out;
}

}  // namespace

TEST_CASE("transition system counts follow the double factorial product") {
  CHECK(countTransitionSystems(fixture("LOOP1").res.graph) == 1);
  CHECK(countTransitionSystems(fixture("FIG2").res.graph) == 8505);
  CHECK(countTransitionSystems(fixture("FIG7").res.graph) == 35083125ull);
  CHECK(countTransitionSystems(fixture("K5").res.graph) == 243);

  // A degree-4 vertex contributes a factor of 3.
  SignedGraph quad;
  quad.addVertex(0);
  quad.addVertex(1);
  for (int i = 0; i < 4; ++i) quad.addEdge(0, 1, 0);
  CHECK(countTransitionSystems(quad) == 9);
}

TEST_CASE("enumeration yields every pairing exactly once") {
  SignedGraph quad;
  quad.addVertex(0);
  quad.addVertex(1);
  for (int i = 0; i < 4; ++i) quad.addEdge(0, 1, 0);
  std::set<std::vector<std::pair<HalfEdgeId, HalfEdgeId>>> seen;
  forEachTransitionSystem(quad, kDefaultCap, [&](const TransitionSystem& ts) {
    std::vector<std::pair<HalfEdgeId, HalfEdgeId>> key;
    for (const Transition& t : ts.pairs) key.push_back({t.lo, t.hi});
    CHECK(seen.insert(key).second);
  });
  CHECK(seen.size() == 9);

  std::uint64_t fig2 = 0;
  forEachTransitionSystem(fixture("FIG2").res.graph, kDefaultCap,
                          [&](const TransitionSystem&) { ++fig2; });
  CHECK(fig2 == 8505);

  CHECK_THROWS_AS(forEachTransitionSystem(fixture("FIG2").res.graph, 100,
                                          [](const TransitionSystem&) {}),
                  CapExceeded);

  // First system in stream order: the smallest unpaired half-edge matches
  // its partners in increasing id order.
  bool first = true;
  forEachTransitionSystem(quad, kDefaultCap, [&](const TransitionSystem& ts) {
    if (!first) return;
    first = false;
    std::vector<std::pair<HalfEdgeId, HalfEdgeId>> got;
    for (const Transition& t : ts.pairs) got.push_back({t.lo, t.hi});
    CHECK(got == std::vector<std::pair<HalfEdgeId, HalfEdgeId>>(
                     {{0, 2}, {1, 3}, {4, 6}, {5, 7}}));
  });
}

TEST_CASE("decompositionOf follows transitions to closure") {
  for (const auto& [name, circuits, edges] :
       {std::tuple<const char*, int, int>{"TRI", 1, 3},
        {"DIGON10", 1, 2},
        {"LOOP1", 1, 1}}) {
    const RESGraph& res = fixture(name).res;
    int calls = 0;
    forEachTransitionSystem(res.graph, kDefaultCap,
                            [&](const TransitionSystem& ts) {
                              ++calls;
                              auto dec = decompositionOf(res.graph, ts);
                              CHECK(static_cast<int>(dec.size()) == circuits);
                              CHECK(static_cast<int>(dec[0].arcs.size()) ==
                                    edges);
                            });
    CHECK(calls == 1);
  }

  // Edge sets always partition E.
  const RESGraph& fig2 = fixture("FIG2").res;
  forEachTransitionSystem(fig2.graph, kDefaultCap,
                          [&](const TransitionSystem& ts) {
                            std::set<EdgeId> seen;
                            for (const Circuit& c :
                                 decompositionOf(fig2.graph, ts))
                              for (EdgeId e : circuitEdges(c, fig2.graph))
                                CHECK(seen.insert(e).second);
                            CHECK(seen.size() == fig2.graph.edgeCount());
                          });
}

TEST_CASE("floodings are the exactly-rooted decompositions") {
  int loops = 0;
  forEachFlooding(fixture("LOOP1").res, kDefaultCap, [&](const Flooding& f) {
    ++loops;
    CHECK(f.circuits.size() == 1);
  });
  CHECK(loops == 1);

  int tris = 0;
  forEachFlooding(fixture("TRI").res, kDefaultCap,
                  [&](const Flooding&) { ++tris; });
  CHECK(tris == 1);

  const RESGraph& fig2 = fixture("FIG2").res;
  int count = 0;
  forEachFlooding(fig2, kDefaultCap, [&](const Flooding& f) {
    ++count;
    CHECK(f.circuits.size() == 4);  // deg(b)/2
    validateFlooding(fig2, f);
  });
  CHECK(count > 0);
}

TEST_CASE("flooding numbers of the fixtures") {
  CHECK(floodingNumber(fixture("FIG2").res) == 3);
  CHECK(floodingNumber(fixture("LOOP1").res) == 1);
  CHECK(floodingNumber(fixture("LOOP0").res) == 0);
  CHECK(floodingNumber(fixture("DIGON10").res) == 1);
  CHECK(floodingNumber(fixture("DIGON11").res) == 0);
  CHECK(floodingNumber(fixture("TRI").res) == 1);
  CHECK(floodingNumber(fixture("K5").res) == 2);
}

TEST_CASE("direct definition numbers of the fixtures") {
  CHECK(directDefinitionNumber(fixture("FIG2").res) == 3);
  CHECK(directDefinitionNumber(fixture("LOOP0").res) == 0);
  CHECK(directDefinitionNumber(fixture("DIGON10").res) == 1);
}

TEST_CASE("fused scan agrees with the naive streams") {
  for (const auto& name : {"LOOP0", "LOOP1", "DIGON10", "DIGON11", "TRI",
                           "FIG2", "K5"}) {
    const RESGraph& res = fixture(name).res;
    CHECK(floodingNumber(res) == naiveFloodingNumber(res));
    CHECK(directDefinitionNumber(res) == naiveDirectNumber(res));
  }
  for (int i = 0; i < 20; ++i) {
    Instance inst = campaignInstance(11, i);
    CAPTURE(inst.name);
    CHECK(floodingNumber(inst.res) == naiveFloodingNumber(inst.res));
    CHECK(directDefinitionNumber(inst.res) == naiveDirectNumber(inst.res));
  }
}

TEST_CASE("solve reports witnesses that check out") {
  for (const auto& name : {"DIGON10", "TRI", "FIG2", "K5"}) {
    const RESGraph& res = fixture(name).res;
    SolveReport r = solve(res);
    REQUIRE(r.witnessFlooding.has_value());
    validateFlooding(res, *r.witnessFlooding);
    CHECK(countNonZero(res.graph, *r.witnessFlooding) == r.floodingNumber);
    if (*r.directDefinitionNumber > 0) {
      REQUIRE(r.witnessDecomposition.has_value());
      std::set<EdgeId> seen;
      for (const Circuit& c : *r.witnessDecomposition) {
        CHECK(circuitWeight(res.graph, c) == 1);
        for (EdgeId e : circuitEdges(c, res.graph))
          CHECK(seen.insert(e).second);
      }
      CHECK(seen.size() == res.graph.edgeCount());
      CHECK(static_cast<int>(r.witnessDecomposition->size()) ==
            *r.directDefinitionNumber);
    }
  }
}

TEST_CASE("witness selection is deterministic and thread independent") {
  const RESGraph& fig2 = fixture("FIG2").res;
  SolveReport a = solve(fig2, kDefaultCap, 1);
  SolveReport b = solve(fig2, kDefaultCap, 2);
  CHECK(a.floodingNumber == b.floodingNumber);
  CHECK(*a.witnessFlooding == *b.witnessFlooding);
  CHECK(*a.witnessDecomposition == *b.witnessDecomposition);
}

TEST_CASE("the witness is the least canonical flooding among maximizers") {
  for (const auto& name : {"DIGON10", "FIG2", "K5"}) {
    const RESGraph& res = fixture(name).res;
    SolveReport rep = solve(res);
    auto keyOf = [&](const Flooding& f) {
      std::vector<std::vector<std::pair<EdgeId, int>>> key;
      for (const Circuit& c : f.circuits) key.push_back(circuitKey(res.graph, c));
      return key;
    };
    std::optional<Flooding> least;
    forEachFlooding(res, kDefaultCap, [&](const Flooding& f) {
      if (countNonZero(res.graph, f) != rep.floodingNumber) return;
      if (!least || keyOf(f) < keyOf(*least)) least = f;
    });
    CAPTURE(name);
    REQUIRE(least.has_value());
    CHECK(*rep.witnessFlooding == *least);
  }
}

TEST_CASE("parity, bound, and equivalence laws on random instances") {
  for (int i = 0; i < 25; ++i) {
    Instance inst = campaignInstance(5, i);
    const RESGraph& res = inst.res;
    CAPTURE(inst.name);
    SolveReport r = solve(res);
    int degRoot = res.graph.degree(res.root);
    if (degRoot > 0)
      CHECK(r.floodingNumber % 2 == nonZeroEdgeCount(res.graph) % 2);
    CHECK(r.floodingNumber <= degRoot / 2);
    CHECK(r.floodingNumber == *r.directDefinitionNumber);
    CHECK(packingNumber(res) >= r.floodingNumber);
  }
}

TEST_CASE("flooding number is shifting invariant") {
  for (const auto& name : {"DIGON10", "TRI", "FIG2", "K5"}) {
    const RESGraph& res = fixture(name).res;
    int base = floodingNumber(res);
    const auto& verts = res.graph.vertices();
    for (std::uint32_t mask = 0; mask < (1u << verts.size()); ++mask) {
      std::vector<VertexId> A;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (mask & (1u << i)) A.push_back(verts[i]);
      RESGraph shifted = applyShifting(res, Shifting::canonical(res, A));
      CHECK(floodingNumber(shifted) == base);
    }
  }
}

TEST_CASE("packing numbers") {
  CHECK(packingNumber(fixture("FIG2").res) == 4);
  CHECK(packingNumber(fixture("FIG7").res) == 6);
  CHECK(packingNumber(fixture("LOOP0").res) == 0);
  CHECK(packingNumber(fixture("LOOP1").res) == 1);
  CHECK(packingNumber(fixture("K5").res) == 2);
}

TEST_CASE("non-zero root circuit search") {
  CHECK(hasNonzeroRootCircuit(fixture("LOOP1").res.graph, 0));
  CHECK_FALSE(hasNonzeroRootCircuit(fixture("LOOP0").res.graph, 0));
  CHECK(hasNonzeroRootCircuit(fixture("FIG2").res.graph, 0));

  SignedGraph stripped = fixture("FIG2").res.graph;
  for (EdgeId e : stripped.edgeIds())
    if (stripped.weight(e) == 1) stripped.removeEdge(e);
  CHECK_FALSE(hasNonzeroRootCircuit(stripped, 0));

  // A non-zero closed walk is not enough: the bridge cannot be reused.
  SignedGraph bridge;
  bridge.addVertex(0);
  bridge.addVertex(1);
  bridge.addEdge(0, 1, 0);
  bridge.addEdge(1, 1, 1);
  CHECK_FALSE(hasNonzeroRootCircuit(bridge, 0));
  CHECK(hasNonzeroRootCircuit(bridge, 1));
}

TEST_CASE("the edgeless one-vertex instance floods trivially") {
  SignedGraph g;
  g.addVertex(0);
  RESGraph res{g, 0};
  SolveReport r = solve(res);
  CHECK(r.floodingNumber == 0);
  CHECK(*r.directDefinitionNumber == 0);
  CHECK(r.enumeratedSystems == 1);
  REQUIRE(r.witnessFlooding.has_value());
  CHECK(r.witnessFlooding->circuits.empty());
}
