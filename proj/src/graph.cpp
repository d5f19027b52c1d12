#include "flood/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace flood {

namespace {

std::string vtxList(const std::vector<VertexId>& vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

void SignedGraph::addVertex(VertexId v) {
  if (hasVertex(v)) return;
  verts_.insert(std::upper_bound(verts_.begin(), verts_.end(), v), v);
  halfEdgesAt_[v];
}

EdgeId SignedGraph::addEdge(VertexId u, VertexId v, int weight) {
  EdgeId e = edges_.empty() ? 0 : edges_.rbegin()->first + 1;
  addEdgeExplicit(e, 2 * e, u, 2 * e + 1, v, weight);
  return e;
}

void SignedGraph::addEdgeExplicit(EdgeId e, HalfEdgeId hu, VertexId u,
                                  HalfEdgeId hv, VertexId v, int weight) {
  if (edges_.count(e)) throw std::invalid_argument("duplicate edge id");
  if (halfs_.count(hu) || halfs_.count(hv) || hu == hv)
    throw std::invalid_argument("half-edge id clash");
  if (!hasVertex(u) || !hasVertex(v))
    throw std::invalid_argument("edge endpoint is not a vertex");
  if (weight != 0 && weight != 1)
    throw std::invalid_argument("weight must be 0 or 1");
  EdgeRec rec;
  rec.lo = std::min(hu, hv);
  rec.hi = std::max(hu, hv);
  rec.weight = weight;
  edges_[e] = rec;
  halfs_[hu] = HalfRec{u, e};
  halfs_[hv] = HalfRec{v, e};
  auto insertSorted = [&](VertexId at, HalfEdgeId h) {
    auto& list = halfEdgesAt_[at];
    list.insert(std::upper_bound(list.begin(), list.end(), h), h);
  };
  insertSorted(u, hu);
  insertSorted(v, hv);
}

void SignedGraph::removeEdge(EdgeId e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw std::invalid_argument("unknown edge");
  for (HalfEdgeId h : {it->second.lo, it->second.hi}) {
    VertexId at = halfs_.at(h).at;
    auto& list = halfEdgesAt_.at(at);
    list.erase(std::find(list.begin(), list.end(), h));
    halfs_.erase(h);
  }
  edges_.erase(it);
}

std::vector<EdgeId> SignedGraph::edgeIds() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [e, rec] : edges_) out.push_back(e);
  return out;
}

std::pair<HalfEdgeId, HalfEdgeId> SignedGraph::halves(EdgeId e) const {
  const auto& rec = edges_.at(e);
  return {rec.lo, rec.hi};
}

int SignedGraph::weight(EdgeId e) const { return edges_.at(e).weight; }

void SignedGraph::setWeight(EdgeId e, int w) {
  if (w != 0 && w != 1) throw std::invalid_argument("weight must be 0 or 1");
  edges_.at(e).weight = w;
}

bool SignedGraph::isLoop(EdgeId e) const {
  const auto& rec = edges_.at(e);
  return halfs_.at(rec.lo).at == halfs_.at(rec.hi).at;
}

std::pair<VertexId, VertexId> SignedGraph::ends(EdgeId e) const {
  const auto& rec = edges_.at(e);
  return {halfs_.at(rec.lo).at, halfs_.at(rec.hi).at};
}

VertexId SignedGraph::vertexOf(HalfEdgeId h) const {
  auto it = halfs_.find(h);
  if (it == halfs_.end()) throw std::invalid_argument("unknown half-edge");
  return it->second.at;
}

EdgeId SignedGraph::edgeOf(HalfEdgeId h) const {
  auto it = halfs_.find(h);
  if (it == halfs_.end()) throw std::invalid_argument("unknown half-edge");
  return it->second.edge;
}

HalfEdgeId SignedGraph::mate(HalfEdgeId h) const {
  const auto& rec = edges_.at(edgeOf(h));
  return rec.lo == h ? rec.hi : rec.lo;
}

const std::vector<HalfEdgeId>& SignedGraph::halfEdgesAt(VertexId v) const {
  auto it = halfEdgesAt_.find(v);
  if (it == halfEdgesAt_.end()) throw std::invalid_argument("unknown vertex");
  return it->second;
}

int SignedGraph::degree(VertexId v) const {
  return static_cast<int>(halfEdgesAt(v).size());
}

EdgeId SignedGraph::maxEdgeId() const {
  return edges_.empty() ? -1 : edges_.rbegin()->first;
}

HalfEdgeId SignedGraph::maxHalfEdgeId() const {
  return halfs_.empty() ? -1 : halfs_.rbegin()->first;
}

bool SignedGraph::connected() const {
  if (verts_.empty()) return false;
  std::set<VertexId> seen;
  std::queue<VertexId> todo;
  seen.insert(verts_.front());
  todo.push(verts_.front());
  while (!todo.empty()) {
    VertexId v = todo.front();
    todo.pop();
    for (HalfEdgeId h : halfEdgesAt(v)) {
      VertexId w = vertexOf(mate(h));
      if (seen.insert(w).second) todo.push(w);
    }
  }
  return seen.size() == verts_.size();
}

Transition makeTransition(const SignedGraph& g, HalfEdgeId a, HalfEdgeId b) {
  if (a == b) throw std::invalid_argument("transition half-edges must differ");
  VertexId va = g.vertexOf(a);
  VertexId vb = g.vertexOf(b);
  if (va != vb)
    throw std::invalid_argument("transition half-edges at different vertices");
  return Transition{std::min(a, b), std::max(a, b), va};
}

Shifting Shifting::canonical(const RESGraph& g, std::vector<VertexId> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (VertexId v : verts)
    if (!g.graph.hasVertex(v))
      throw std::invalid_argument("shift set contains unknown vertex");
  bool hasRoot = std::binary_search(verts.begin(), verts.end(), g.root);
  if (!hasRoot) return Shifting{std::move(verts)};
  std::vector<VertexId> complement;
  for (VertexId v : g.graph.vertices())
    if (!std::binary_search(verts.begin(), verts.end(), v))
      complement.push_back(v);
  return Shifting{std::move(complement)};
}

int degree(const SignedGraph& g, VertexId v) { return g.degree(v); }

CutParts cutAndInterior(const SignedGraph& g, const std::vector<VertexId>& X) {
  std::set<VertexId> inX;
  for (VertexId v : X) {
    if (!g.hasVertex(v))
      throw std::invalid_argument("cut set contains unknown vertex");
    inX.insert(v);
  }
  CutParts parts;
  for (EdgeId e : g.edgeIds()) {
    auto [u, v] = g.ends(e);
    int count = static_cast<int>(inX.count(u)) + static_cast<int>(inX.count(v));
    if (g.isLoop(e)) count = inX.count(u) ? 2 : 0;
    if (count == 2)
      parts.interior.push_back(e);
    else if (count == 1)
      parts.cut.push_back(e);
  }
  return parts;
}

int trailWeight(const SignedGraph& g, const Trail& t) {
  int w = 0;
  for (const Arc& a : t.arcs) w ^= g.weight(g.edgeOf(a.tail));
  return w;
}

int circuitWeight(const SignedGraph& g, const Circuit& c) {
  return trailWeight(g, asTrail(c));
}

SignedGraph applyShifting(const SignedGraph& g, const Shifting& s) {
  SignedGraph out = g;
  for (EdgeId e : g.edgeIds()) {
    if (g.isLoop(e)) continue;
    auto [u, v] = g.ends(e);
    int flips =
        static_cast<int>(std::binary_search(s.shiftSet.begin(),
                                            s.shiftSet.end(), u)) +
        static_cast<int>(std::binary_search(s.shiftSet.begin(),
                                            s.shiftSet.end(), v));
    if (flips % 2 == 1) out.setWeight(e, 1 - g.weight(e));
  }
  return out;
}

RESGraph applyShifting(const RESGraph& g, const Shifting& s) {
  return RESGraph{applyShifting(g.graph, s), g.root};
}

VertexId tailVertex(const SignedGraph& g, const Trail& t) {
  if (t.arcs.empty()) throw std::invalid_argument("empty trail");
  return g.vertexOf(t.arcs.front().tail);
}

VertexId headVertex(const SignedGraph& g, const Trail& t) {
  if (t.arcs.empty()) throw std::invalid_argument("empty trail");
  return g.vertexOf(t.arcs.back().head);
}

Trail composeTrails(const SignedGraph& g, const Trail& a, const Trail& b) {
  if (headVertex(g, a) != tailVertex(g, b))
    throw std::invalid_argument("compose: endpoints do not match");
  std::set<EdgeId> used;
  for (const Arc& arc : a.arcs) used.insert(g.edgeOf(arc.tail));
  for (const Arc& arc : b.arcs)
    if (!used.insert(g.edgeOf(arc.tail)).second)
      throw std::invalid_argument("compose: trails share an edge");
  Trail out = a;
  out.arcs.insert(out.arcs.end(), b.arcs.begin(), b.arcs.end());
  return out;
}

Trail reverseTrail(const Trail& t) {
  Trail out;
  out.arcs.reserve(t.arcs.size());
  for (auto it = t.arcs.rbegin(); it != t.arcs.rend(); ++it)
    out.arcs.push_back(it->reversed());
  return out;
}

Circuit reverseCircuit(const Circuit& c) {
  return Circuit{reverseTrail(asTrail(c)).arcs};
}

Circuit cyclicReorder(const Circuit& c, std::size_t i) {
  if (i >= c.arcs.size()) throw std::invalid_argument("rotation out of range");
  Circuit out;
  out.arcs.reserve(c.arcs.size());
  out.arcs.insert(out.arcs.end(), c.arcs.begin() + i, c.arcs.end());
  out.arcs.insert(out.arcs.end(), c.arcs.begin(), c.arcs.begin() + i);
  return out;
}

std::vector<Transition> transitionsOfTrail(const SignedGraph& g,
                                           const Trail& t) {
  std::vector<Transition> out;
  for (std::size_t i = 0; i + 1 < t.arcs.size(); ++i)
    out.push_back(makeTransition(g, t.arcs[i].head, t.arcs[i + 1].tail));
  return out;
}

std::vector<Transition> transitionsOfCircuit(const SignedGraph& g,
                                             const Circuit& c) {
  return transitionsOfTrail(g, asTrail(c));
}

std::vector<Trail> splitByTransitions(const SignedGraph& g, const Trail& t,
                                      const std::vector<Transition>& cuts) {
  std::vector<Transition> own = transitionsOfTrail(g, t);
  std::vector<std::size_t> slots;
  std::set<std::size_t> seen;
  for (const Transition& r : cuts) {
    auto it = std::find(own.begin(), own.end(), r);
    if (it == own.end())
      throw std::invalid_argument("split: not a transition of the trail");
    std::size_t slot = static_cast<std::size_t>(it - own.begin());
    if (!seen.insert(slot).second)
      throw std::invalid_argument("split: duplicate transition");
    slots.push_back(slot);
  }
  std::sort(slots.begin(), slots.end());
  std::vector<Trail> pieces;
  std::size_t start = 0;
  for (std::size_t slot : slots) {
    Trail piece;
    piece.arcs.assign(t.arcs.begin() + start, t.arcs.begin() + slot + 1);
    pieces.push_back(std::move(piece));
    start = slot + 1;
  }
  Trail last;
  last.arcs.assign(t.arcs.begin() + start, t.arcs.end());
  pieces.push_back(std::move(last));
  return pieces;
}

void validateTrail(const SignedGraph& g, const Trail& t) {
  if (t.arcs.empty()) throw std::invalid_argument("trail must be nonempty");
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < t.arcs.size(); ++i) {
    const Arc& a = t.arcs[i];
    if (g.edgeOf(a.tail) != g.edgeOf(a.head) || a.tail == a.head)
      throw std::invalid_argument("arc half-edges do not form an edge");
    if (!used.insert(g.edgeOf(a.tail)).second)
      throw std::invalid_argument("trail repeats an edge");
    if (i + 1 < t.arcs.size() &&
        g.vertexOf(a.head) != g.vertexOf(t.arcs[i + 1].tail))
      throw std::invalid_argument("trail arcs are not chained");
  }
}

void validateCircuit(const SignedGraph& g, const Circuit& c) {
  Trail t = asTrail(c);
  validateTrail(g, t);
  if (tailVertex(g, t) != headVertex(g, t))
    throw std::invalid_argument("circuit does not close up");
}

Trail asTrail(const Circuit& c) { return Trail{c.arcs}; }

Circuit asCircuit(const SignedGraph& g, const Trail& t) {
  Circuit c{t.arcs};
  validateCircuit(g, c);
  return c;
}

std::pair<EdgeId, int> arcKey(const SignedGraph& g, const Arc& a) {
  EdgeId e = g.edgeOf(a.tail);
  auto [lo, hi] = g.halves(e);
  return {e, a.tail == lo ? 0 : 1};
}

std::vector<std::pair<EdgeId, int>> circuitKey(const SignedGraph& g,
                                               const Circuit& c) {
  std::vector<std::pair<EdgeId, int>> key;
  key.reserve(c.arcs.size());
  for (const Arc& a : c.arcs) key.push_back(arcKey(g, a));
  return key;
}

Circuit canonicalCircuit(const SignedGraph& g, const Circuit& c) {
  Circuit best = c;
  auto bestKey = circuitKey(g, best);
  auto consider = [&](const Circuit& cand) {
    auto key = circuitKey(g, cand);
    if (key < bestKey) {
      bestKey = std::move(key);
      best = cand;
    }
  };
  for (std::size_t i = 0; i < c.arcs.size(); ++i) consider(cyclicReorder(c, i));
  Circuit rev = reverseCircuit(c);
  for (std::size_t i = 0; i < rev.arcs.size(); ++i)
    consider(cyclicReorder(rev, i));
  return best;
}

Circuit canonicalRootedCircuit(const SignedGraph& g, const Circuit& c) {
  Circuit rev = reverseCircuit(c);
  return circuitKey(g, rev) < circuitKey(g, c) ? rev : c;
}

Circuit rootAnchoredCircuit(const SignedGraph& g, VertexId root,
                            const Circuit& c) {
  bool have = false;
  Circuit best;
  std::vector<std::pair<EdgeId, int>> bestKey;
  for (const Circuit& base : {c, reverseCircuit(c)}) {
    for (std::size_t i = 0; i < base.arcs.size(); ++i) {
      if (g.vertexOf(base.arcs[i].tail) != root) continue;
      Circuit cand = cyclicReorder(base, i);
      auto key = circuitKey(g, cand);
      if (!have || key < bestKey) {
        bestKey = std::move(key);
        best = std::move(cand);
        have = true;
      }
    }
  }
  if (!have) throw std::invalid_argument("circuit does not hit the root");
  return best;
}

std::vector<EdgeId> circuitEdges(const Circuit& c, const SignedGraph& g) {
  std::vector<EdgeId> out;
  out.reserve(c.arcs.size());
  for (const Arc& a : c.arcs) out.push_back(g.edgeOf(a.tail));
  std::sort(out.begin(), out.end());
  return out;
}

bool isEulerian(const SignedGraph& g) {
  if (g.vertexCount() == 0) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) % 2 != 0) return false;
  return g.connected();
}

bool isRES(const SignedGraph& g, VertexId root) {
  return g.hasVertex(root) && isEulerian(g);
}

void requireRES(const SignedGraph& g, VertexId root) {
  if (!g.hasVertex(root))
    throw std::invalid_argument("root is not a vertex of the graph");
  std::vector<VertexId> odd;
  for (VertexId v : g.vertices())
    if (g.degree(v) % 2 != 0) odd.push_back(v);
  if (!odd.empty())
    throw NotEulerianError("odd-degree vertices: " + vtxList(odd), odd, false);
  if (!g.connected())
    throw NotEulerianError("graph is not connected", {}, true);
}

bool isRoot4EC(const RESGraph& g) {
  std::vector<VertexId> others;
  for (VertexId v : g.graph.vertices())
    if (v != g.root) others.push_back(v);
  std::size_t n = others.size();
  if (n > 20) throw CapExceeded(1ull << n, 1ull << 20);
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<VertexId> Y;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) Y.push_back(others[i]);
    if (cutAndInterior(g.graph, Y).cut.size() == 2) return false;
  }
  return true;
}

MinCut minEdgeCut(const SignedGraph& g, int maxVertices) {
  std::size_t n = g.vertexCount();
  if (n < 2)
    throw std::invalid_argument("min cut needs at least two vertices");
  if (static_cast<int>(n) > maxVertices)
    throw CapExceeded(1ull << n, 1ull << maxVertices);
  const std::vector<VertexId>& verts = g.vertices();
  bool have = false;
  MinCut best;
  bool bestOdd = false;
  for (std::uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
    std::vector<VertexId> S;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) S.push_back(verts[i]);
    int cut = static_cast<int>(cutAndInterior(g, S).cut.size());
    bool odd = S.size() % 2 == 1;
    bool better;
    if (!have) {
      better = true;
    } else if (cut != best.cutSize) {
      better = cut < best.cutSize;
    } else if (odd != bestOdd) {
      better = odd;
    } else {
      better = S < best.side;
    }
    if (better) {
      best = MinCut{std::move(S), cut};
      bestOdd = odd;
      have = true;
    }
  }
  return best;
}

}  // namespace flood
