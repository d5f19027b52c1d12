#include "flood/corollary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace flood {

SignedGraph allOnesSignature(const SignedGraph& g) {
  SignedGraph out = g;
  for (EdgeId e : g.edgeIds()) out.setWeight(e, 1);
  return out;
}

std::vector<Circuit> nearRegularDecomposition(const SignedGraph& g, VertexId b,
                                              int d, int ell,
                                              std::uint64_t cap, int threads) {
  if (d < 1 || d > ell)
    throw std::invalid_argument("need 1 <= d <= l");
  if (!g.hasVertex(b)) throw std::invalid_argument("unknown root");
  if (g.vertexCount() % 2 == 0)
    throw std::invalid_argument("vertex count must be odd, is " +
                                std::to_string(g.vertexCount()));
  if (g.degree(b) != 2 * d)
    throw std::invalid_argument("root degree must be 2d = " +
                                std::to_string(2 * d) + ", is " +
                                std::to_string(g.degree(b)));
  for (VertexId v : g.vertices())
    if (v != b && g.degree(v) != 2 * ell)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " must have degree 2l = " +
                                  std::to_string(2 * ell) + ", has " +
                                  std::to_string(g.degree(v)));
  if (!g.connected()) throw std::invalid_argument("graph is not connected");
  if (g.vertexCount() >= 2 && minEdgeCut(g).cutSize < 2 * d)
    throw std::invalid_argument("graph is not 2d-edge-connected");

  RESGraph res{allOnesSignature(g), b};
  SolveOptions opts;
  opts.cap = cap;
  opts.needDirect = false;
  opts.threads = threads;
  SolveOutcome outcome = solveScan(res, opts);
  if (outcome.report.floodingNumber != d)
    throw CheckFailure("flooding number " +
                       std::to_string(outcome.report.floodingNumber) +
                       " instead of d = " + std::to_string(d));
  const Flooding& witness = *outcome.report.witnessFlooding;
  for (const Circuit& c : witness.circuits)
    if (c.arcs.size() % 2 != 1)
      throw CheckFailure("witness contains an even circuit");
  return witness.circuits;
}

namespace {

struct Contraction {
  SignedGraph contracted;
  VertexId mergedVertex;
};

// Identify S to a fresh vertex and delete the loops this creates. Edge and
// half-edge ids survive, so trails in the contraction read back verbatim in
// the original graph.
Contraction contractToVertex(const SignedGraph& g,
                             const std::vector<VertexId>& S) {
  std::set<VertexId> inS(S.begin(), S.end());
  Contraction out;
  out.mergedVertex = g.vertices().back() + 1;
  out.contracted.addVertex(out.mergedVertex);
  for (VertexId v : g.vertices())
    if (!inS.count(v)) out.contracted.addVertex(v);
  for (EdgeId e : g.edgeIds()) {
    auto [lo, hi] = g.halves(e);
    VertexId u = g.vertexOf(lo);
    VertexId v = g.vertexOf(hi);
    bool uIn = inS.count(u) != 0;
    bool vIn = inS.count(v) != 0;
    if (uIn && vIn) continue;  // becomes a loop at the merged vertex
    out.contracted.addEdgeExplicit(e, lo, uIn ? out.mergedVertex : u, hi,
                                   vIn ? out.mergedVertex : v, g.weight(e));
  }
  return out;
}

}  // namespace

OddDecomposition regularOddDecomposition(const SignedGraph& g,
                                         std::uint64_t cap, int threads) {
  if (g.vertexCount() == 0) throw std::invalid_argument("empty graph");
  if (!g.connected()) throw std::invalid_argument("graph is not connected");
  int degFirst = g.degree(g.vertices().front());
  for (VertexId v : g.vertices())
    if (g.degree(v) != degFirst)
      throw std::invalid_argument("graph is not regular: degrees " +
                                  std::to_string(degFirst) + " and " +
                                  std::to_string(g.degree(v)));
  if (degFirst == 0 || degFirst % 2 != 0)
    throw std::invalid_argument("degree must be a positive even number");
  if (g.vertexCount() % 2 == 0)
    throw std::invalid_argument("vertex count must be odd");
  int ell = degFirst / 2;

  // Base case: 2l-edge-connected, any root will do.
  MinCut cut;
  if (g.vertexCount() > 1) cut = minEdgeCut(g);
  if (g.vertexCount() == 1 || cut.cutSize >= 2 * ell) {
    VertexId b = g.vertices().front();
    return OddDecomposition{b,
                            nearRegularDecomposition(g, b, ell, ell, cap,
                                                     threads)};
  }

  if (cut.side.size() % 2 == 0 || cut.cutSize % 2 != 0)
    throw CheckFailure("minimum cut side has unexpected parity");
  int d = cut.cutSize / 2;

  Contraction contraction = contractToVertex(g, cut.side);
  const SignedGraph& H = contraction.contracted;
  if (H.vertexCount() % 2 == 0 ||
      H.degree(contraction.mergedVertex) != 2 * d)
    throw CheckFailure("contracted instance violates the root hypotheses");
  std::vector<Circuit> rootedCircuits;
  try {
    rootedCircuits = nearRegularDecomposition(H, contraction.mergedVertex, d,
                                              ell, cap, threads);
  } catch (const std::invalid_argument& ex) {
    throw CheckFailure(std::string("contracted instance rejected: ") +
                       ex.what());
  }

  // Each contracted circuit is a trail of g with both ends in S.
  std::vector<Trail> trails;
  for (const Circuit& c : rootedCircuits) {
    Trail t{c.arcs};
    validateTrail(g, t);
    if (t.arcs.size() % 2 != 1)
      throw CheckFailure("expansion trail has an even edge count");
    trails.push_back(std::move(t));
  }

  // G': the subgraph induced by S plus one edge per trail.
  SignedGraph inner;
  for (VertexId v : cut.side) inner.addVertex(v);
  std::set<VertexId> inS(cut.side.begin(), cut.side.end());
  for (EdgeId e : g.edgeIds()) {
    auto [u, v] = g.ends(e);
    if (inS.count(u) && inS.count(v)) {
      auto [lo, hi] = g.halves(e);
      inner.addEdgeExplicit(e, lo, u, hi, v, g.weight(e));
    }
  }
  std::map<EdgeId, const Trail*> trailOf;
  std::map<EdgeId, HalfEdgeId> forwardHalf;  // half at the trail's tail
  EdgeId nextEdge = g.maxEdgeId() + 1;
  HalfEdgeId nextHalf = g.maxHalfEdgeId() + 1;
  for (const Trail& t : trails) {
    VertexId u = tailVertex(g, t);
    VertexId v = headVertex(g, t);
    HalfEdgeId hu = nextHalf++;
    HalfEdgeId hv = nextHalf++;
    inner.addEdgeExplicit(nextEdge, hu, u, hv, v, 0);
    trailOf[nextEdge] = &t;
    forwardHalf[nextEdge] = hu;
    ++nextEdge;
  }
  if (inner.vertexCount() >= g.vertexCount())
    throw CheckFailure("recursion did not shrink the vertex set");

  OddDecomposition rec = regularOddDecomposition(inner, cap, threads);

  OddDecomposition out;
  out.baseVertex = rec.baseVertex;
  for (const Circuit& c : rec.circuits) {
    Circuit expanded;
    for (const Arc& a : c.arcs) {
      EdgeId e = inner.edgeOf(a.tail);
      auto it = trailOf.find(e);
      if (it == trailOf.end()) {
        expanded.arcs.push_back(a);
        continue;
      }
      Trail t = *it->second;
      if (a.tail != forwardHalf.at(e)) t = reverseTrail(t);
      expanded.arcs.insert(expanded.arcs.end(), t.arcs.begin(), t.arcs.end());
    }
    validateCircuit(g, expanded);
    out.circuits.push_back(std::move(expanded));
  }
  return out;
}

bool verifyOddDecomposition(const SignedGraph& g, const OddDecomposition& dec,
                            int ell) {
  if (static_cast<int>(dec.circuits.size()) != ell) return false;
  std::set<EdgeId> used;
  for (const Circuit& c : dec.circuits) {
    if (c.arcs.empty() || c.arcs.size() % 2 != 1) return false;
    try {
      validateCircuit(g, c);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (g.vertexOf(c.arcs.front().tail) != dec.baseVertex ||
        g.vertexOf(c.arcs.back().head) != dec.baseVertex)
      return false;
    for (const Arc& a : c.arcs)
      if (!used.insert(g.edgeOf(a.tail)).second) return false;
  }
  return used.size() == g.edgeCount();
}

PackingCorollaryReport checkPackingCorollary(const RESGraph& g,
                                             std::uint64_t cap, int threads) {
  requireRES(g.graph, g.root);
  if (!isRoot4EC(g))
    throw std::invalid_argument(
        "packing corollary requires a rooted 4-edge-connected instance");
  PackingCorollaryReport report;
  report.packing = packingNumber(g, cap);
  report.flooding = floodingNumber(g, cap, threads);
  report.holds = report.flooding >= (report.packing + 1) / 2;
  return report;
}

}  // namespace flood
