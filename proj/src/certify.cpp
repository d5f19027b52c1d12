#include "flood/certify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace flood {

namespace {

std::vector<std::vector<VertexId>> componentsOutside(
    const SignedGraph& g, const std::set<VertexId>& inX) {
  std::set<VertexId> seen;
  std::vector<std::vector<VertexId>> comps;
  for (VertexId v : g.vertices()) {
    if (inX.count(v) || seen.count(v)) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> todo;
    seen.insert(v);
    todo.push(v);
    while (!todo.empty()) {
      VertexId x = todo.front();
      todo.pop();
      comp.push_back(x);
      for (HalfEdgeId h : g.halfEdgesAt(x)) {
        VertexId y = g.vertexOf(g.mate(h));
        if (inX.count(y) || seen.count(y)) continue;
        seen.insert(y);
        todo.push(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

OddnessReport oddComponents(const RESGraph& g, const Shifting& shift,
                            const std::vector<VertexId>& X) {
  std::set<VertexId> inX(X.begin(), X.end());
  if (!inX.count(g.root))
    throw std::invalid_argument("X must contain the root");
  for (VertexId v : X)
    if (!g.graph.hasVertex(v))
      throw std::invalid_argument("X contains unknown vertex");

  SignedGraph shifted = applyShifting(g.graph, shift);
  OddnessReport report;
  for (auto& comp : componentsOutside(g.graph, inX)) {
    CutParts parts = cutAndInterior(g.graph, comp);
    OddComponent oc;
    oc.cutSize = static_cast<int>(parts.cut.size());
    for (EdgeId e : parts.interior) oc.nonZeroCount += shifted.weight(e);
    for (EdgeId e : parts.cut) oc.nonZeroCount += shifted.weight(e);
    oc.isOdd = (oc.nonZeroCount % 2) != ((oc.cutSize / 2) % 2);
    oc.verts = std::move(comp);
    report.oddCount += oc.isOdd;
    report.components.push_back(std::move(oc));
  }
  return report;
}

int certificateValue(const RESGraph& g, const Shifting& shift,
                     const std::vector<VertexId>& X) {
  OddnessReport odd = oddComponents(g, shift, X);
  SignedGraph shifted = applyShifting(g.graph, shift);
  CutParts parts = cutAndInterior(g.graph, X);
  int interiorNonZero = 0;
  for (EdgeId e : parts.interior) interiorNonZero += shifted.weight(e);
  return interiorNonZero + static_cast<int>(parts.cut.size()) / 2 -
         odd.oddCount;
}

void sweepCertificates(
    const RESGraph& g, std::uint64_t cap,
    const std::function<void(const Shifting&, const std::vector<VertexId>&,
                             int)>& fn) {
  std::vector<VertexId> others;
  for (VertexId v : g.graph.vertices())
    if (v != g.root) others.push_back(v);
  std::size_t n = others.size();
  if (n > 30) throw CapExceeded(std::numeric_limits<std::uint64_t>::max(), cap);
  std::uint64_t pairs = (std::uint64_t{1} << n) << n;  // 4^n
  if (pairs > cap) throw CapExceeded(pairs, cap);

  for (std::uint64_t aMask = 0; aMask < (std::uint64_t{1} << n); ++aMask) {
    std::vector<VertexId> aSet;
    for (std::size_t i = 0; i < n; ++i)
      if (aMask & (std::uint64_t{1} << i)) aSet.push_back(others[i]);
    Shifting shift{aSet};
    for (std::uint64_t xMask = 0; xMask < (std::uint64_t{1} << n); ++xMask) {
      std::vector<VertexId> X{g.root};
      for (std::size_t i = 0; i < n; ++i)
        if (xMask & (std::uint64_t{1} << i)) X.push_back(others[i]);
      std::sort(X.begin(), X.end());
      fn(shift, X, certificateValue(g, shift, X));
    }
  }
}

Certificate bestCertificate(const RESGraph& g, std::uint64_t cap) {
  requireRES(g.graph, g.root);
  bool have = false;
  Certificate best;
  sweepCertificates(g, cap, [&](const Shifting& shift,
                                const std::vector<VertexId>& X, int value) {
    bool better;
    if (!have) {
      better = true;
    } else if (value != best.value) {
      better = value < best.value;
    } else if (X.size() != best.X.size()) {
      better = X.size() < best.X.size();
    } else if (X != best.X) {
      better = X < best.X;
    } else {
      better = shift.shiftSet < best.shift.shiftSet;
    }
    if (better) {
      best = Certificate{X, shift, value};
      have = true;
    }
  });
  return best;
}

MinMaxReport verifyMinMax(const RESGraph& g, std::uint64_t cap, int threads) {
  MinMaxReport report;
  report.lhs = floodingNumber(g, cap, threads);
  report.best = bestCertificate(g, cap);
  report.rhs = report.best.value;
  report.equal = report.lhs == report.rhs;
  report.easyDirectionOk = true;
  sweepCertificates(g, cap,
                    [&](const Shifting&, const std::vector<VertexId>&,
                        int value) {
                      if (report.lhs > value) report.easyDirectionOk = false;
                    });
  return report;
}

HittingSet eppHittingSet(const RESGraph& g, std::uint64_t cap) {
  requireRES(g.graph, g.root);
  if (!isRoot4EC(g))
    throw std::invalid_argument(
        "hitting set requires a rooted 4-edge-connected instance");
  HittingSet out;
  out.cert = bestCertificate(g, cap);

  SignedGraph shifted = applyShifting(g.graph, out.cert.shift);
  CutParts parts = cutAndInterior(g.graph, out.cert.X);
  std::set<EdgeId> F;
  for (EdgeId e : parts.interior)
    if (shifted.weight(e) == 1) F.insert(e);

  // F2 is delta(X) minus one crossing edge per component of G - X, so each
  // component keeps a single lifeline no circuit can return through. The
  // kept edge is the least id into its component.
  std::set<EdgeId> kept;
  std::set<VertexId> inX(out.cert.X.begin(), out.cert.X.end());
  for (auto& comp : componentsOutside(g.graph, inX)) {
    std::set<VertexId> inComp(comp.begin(), comp.end());
    for (EdgeId e : parts.cut) {
      auto [u, v] = g.graph.ends(e);
      if (inComp.count(u) || inComp.count(v)) {
        kept.insert(e);
        break;  // parts.cut is in ascending edge id order
      }
    }
  }
  for (EdgeId e : parts.cut)
    if (!kept.count(e)) F.insert(e);
  out.edges.assign(F.begin(), F.end());

  if (static_cast<int>(out.edges.size()) > 3 * out.cert.value)
    throw CheckFailure("hitting set exceeds three times the certificate value");
  SignedGraph remaining = g.graph;
  for (EdgeId e : out.edges) remaining.removeEdge(e);
  if (hasNonzeroRootCircuit(remaining, g.root))
    throw CheckFailure("hitting set leaves a non-zero circuit at the root");
  return out;
}

}  // namespace flood
