#include "flood/reduce.hpp"

#include <algorithm>

#include "flood/matroid.hpp"

namespace flood {

std::vector<EdgeId> edgesAvoidingRoot(const RESGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.graph.edgeIds()) {
    auto [u, v] = g.graph.ends(e);
    if (u != g.root && v != g.root) out.push_back(e);
  }
  return out;
}

Reduction eReduction(const RESGraph& g, EdgeId e, int w) {
  if (!g.graph.hasEdge(e)) throw std::invalid_argument("unknown edge");
  if (w != 0 && w != 1) throw std::invalid_argument("weight must be 0 or 1");
  auto [u, v] = g.graph.ends(e);
  if (u == g.root || v == g.root)
    throw std::invalid_argument("reduction edge must avoid the root");

  auto [hLow, hHigh] = g.graph.halves(e);
  VertexId atLow = g.graph.vertexOf(hLow);
  VertexId atHigh = g.graph.vertexOf(hHigh);
  int we = g.graph.weight(e);

  Reduction red;
  red.sourceEdge = e;
  red.weightChoice = w;
  red.freshLow = g.graph.maxHalfEdgeId() + 1;
  red.freshHigh = g.graph.maxHalfEdgeId() + 2;
  red.newEdgeAtLowHalf = g.graph.maxEdgeId() + 1;
  red.newEdgeAtHighHalf = g.graph.maxEdgeId() + 2;

  SignedGraph out = g.graph;
  out.removeEdge(e);
  // The edge keeping the lexicographically smaller original half-edge takes
  // weight w; the other takes gamma(e) + w, so the pair sums to gamma(e).
  out.addEdgeExplicit(red.newEdgeAtLowHalf, hLow, atLow, red.freshLow, g.root,
                      w);
  out.addEdgeExplicit(red.newEdgeAtHighHalf, hHigh, atHigh, red.freshHigh,
                      g.root, (we + w) % 2);
  red.result = RESGraph{std::move(out), g.root};
  requireRES(red.result.graph, red.result.root);
  return red;
}

ReductionCheck checkReductionMonotone(const RESGraph& g, EdgeId e,
                                      std::uint64_t cap, int threads) {
  ReductionCheck check;
  check.nuOriginal = floodingNumber(g, cap, threads);
  check.monotone = true;
  check.parity = true;
  for (int w = 0; w <= 1; ++w) {
    Reduction red = eReduction(g, e, w);
    check.nuReduced[w] = floodingNumber(red.result, cap, threads);
    if (check.nuReduced[w] < check.nuOriginal) check.monotone = false;
    if ((check.nuReduced[w] - check.nuOriginal) % 2 != 0) check.parity = false;
  }
  return check;
}

Certificate liftCertificate(const RESGraph& g, const Reduction& red,
                            const Certificate& cert, std::uint64_t cap,
                            int threads) {
  int nuG = floodingNumber(g, cap, threads);
  int nuRed = floodingNumber(red.result, cap, threads);
  if (nuRed > nuG + 1)
    throw std::invalid_argument("reduction flooding number exceeds nu + 1");
  if (certificateValue(red.result, cert.shift, cert.X) != cert.value)
    throw std::invalid_argument("certificate value does not match its pair");
  if (cert.value != nuRed)
    throw std::invalid_argument("certificate is not optimal for the reduction");

  // Same X; the shift set replays verbatim since the reduction keeps the
  // vertex set.
  Certificate lifted;
  lifted.X = cert.X;
  lifted.shift = Shifting::canonical(g, cert.shift.shiftSet);
  lifted.value = certificateValue(g, lifted.shift, lifted.X);
  if (lifted.value != nuG)
    throw CheckFailure("lifted certificate is not optimal for the original");
  return lifted;
}

TwoNonLoopOutcome checkTwoNonLoopLemma(const RESGraph& g, std::uint64_t cap,
                                       int threads) {
  int nuG = floodingNumber(g, cap, threads);
  std::vector<EdgeId> inner = edgesAvoidingRoot(g);
  for (EdgeId e : inner) {
    for (int w = 0; w <= 1; ++w) {
      Reduction red = eReduction(g, e, w);
      if (floodingNumber(red.result, cap, threads) < nuG + 2)
        return TwoNonLoopOutcome::NotApplicable;
    }
  }

  FloodingMatroid m = buildMatroid(g, cap, threads);
  std::set<std::pair<std::pair<HalfEdgeId, HalfEdgeId>, int>> nonLoop;
  for (const MatroidElement& e : nonLoopElements(m))
    nonLoop.insert({{e.arc.tail, e.arc.head}, e.bit});
  for (EdgeId e : inner) {
    auto [lo, hi] = g.graph.halves(e);
    for (const Arc& arc : {Arc{lo, hi}, Arc{hi, lo}}) {
      for (int bit = 0; bit <= 1; ++bit) {
        if (!nonLoop.count({{arc.tail, arc.head}, bit}))
          throw CheckFailure(
              "arc of G - b lacks a non-loop element despite the hypothesis");
      }
    }
  }
  return TwoNonLoopOutcome::Holds;
}

}  // namespace flood
