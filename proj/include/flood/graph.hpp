#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flood/errors.hpp"

namespace flood {

using VertexId = int;
using EdgeId = int;
using HalfEdgeId = int;

// Half-edge model of a multigraph with a Z2 weight per edge. An edge is an
// unordered pair of half-edges; each half-edge is incident to exactly one
// vertex. A loop keeps two distinct half-edges at the same vertex, so it
// contributes 2 to the degree. Half-edge ids are globally unique and an
// edge's pair is stored sorted.
class SignedGraph {
 public:
  SignedGraph() = default;

  void addVertex(VertexId v);
  bool hasVertex(VertexId v) const { return halfEdgesAt_.count(v) != 0; }

  // Appends an edge with packed half-edge ids 2e (at u) and 2e+1 (at v),
  // where e is one past the current largest edge id.
  EdgeId addEdge(VertexId u, VertexId v, int weight);

  // Explicit form used by reductions and contractions, where half-edge ids
  // must survive graph surgery.
  void addEdgeExplicit(EdgeId e, HalfEdgeId hu, VertexId u, HalfEdgeId hv,
                       VertexId v, int weight);

  void removeEdge(EdgeId e);

  const std::vector<VertexId>& vertices() const { return verts_; }
  std::size_t vertexCount() const { return verts_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }
  std::vector<EdgeId> edgeIds() const;

  bool hasEdge(EdgeId e) const { return edges_.count(e) != 0; }
  // Sorted pair of half-edges of e.
  std::pair<HalfEdgeId, HalfEdgeId> halves(EdgeId e) const;
  int weight(EdgeId e) const;
  void setWeight(EdgeId e, int w);
  bool isLoop(EdgeId e) const;
  // Both endpoints of e, in half-edge order.
  std::pair<VertexId, VertexId> ends(EdgeId e) const;

  VertexId vertexOf(HalfEdgeId h) const;
  EdgeId edgeOf(HalfEdgeId h) const;
  HalfEdgeId mate(HalfEdgeId h) const;

  // Sorted half-edge ids at v; size equals degree(v).
  const std::vector<HalfEdgeId>& halfEdgesAt(VertexId v) const;
  int degree(VertexId v) const;

  EdgeId maxEdgeId() const;
  HalfEdgeId maxHalfEdgeId() const;

  bool connected() const;

  bool operator==(const SignedGraph&) const = default;

 private:
  struct EdgeRec {
    HalfEdgeId lo = -1;
    HalfEdgeId hi = -1;
    int weight = 0;
    bool operator==(const EdgeRec&) const = default;
  };
  struct HalfRec {
    VertexId at = -1;
    EdgeId edge = -1;
    bool operator==(const HalfRec&) const = default;
  };

  std::vector<VertexId> verts_;  // sorted, unique
  std::map<EdgeId, EdgeRec> edges_;
  std::map<HalfEdgeId, HalfRec> halfs_;
  std::map<VertexId, std::vector<HalfEdgeId>> halfEdgesAt_;
};

// Rooted Eulerian signed graph: connected, every degree even, root present.
// The one-vertex edgeless graph counts as Eulerian.
struct RESGraph {
  SignedGraph graph;
  VertexId root = 0;

  bool operator==(const RESGraph&) const = default;
};

// Ordered traversal of one edge: tail half-edge first, head second.
struct Arc {
  HalfEdgeId tail = -1;
  HalfEdgeId head = -1;

  Arc reversed() const { return Arc{head, tail}; }
  auto operator<=>(const Arc&) const = default;
};

// Nonempty arc sequence with pairwise-distinct edges, chained head-to-tail.
struct Trail {
  std::vector<Arc> arcs;
  bool operator==(const Trail&) const = default;
};

// A trail whose tail vertex equals its head vertex.
struct Circuit {
  std::vector<Arc> arcs;
  bool operator==(const Circuit&) const = default;
};

// Unordered pair of distinct half-edges at one vertex.
struct Transition {
  HalfEdgeId lo = -1;
  HalfEdgeId hi = -1;
  VertexId at = -1;

  auto operator<=>(const Transition& o) const {
    return std::pair{lo, hi} <=> std::pair{o.lo, o.hi};
  }
  bool operator==(const Transition& o) const {
    return lo == o.lo && hi == o.hi;
  }
};

Transition makeTransition(const SignedGraph& g, HalfEdgeId a, HalfEdgeId b);

// Shift set, canonicalized to exclude the root (a shift at the root equals
// shifting at every other vertex, so the two representatives coincide).
struct Shifting {
  std::vector<VertexId> shiftSet;  // sorted, unique, root-free

  static Shifting canonical(const RESGraph& g, std::vector<VertexId> verts);
  bool operator==(const Shifting&) const = default;
};

// --- basic queries -----------------------------------------------------

int degree(const SignedGraph& g, VertexId v);

struct CutParts {
  std::vector<EdgeId> interior;  // E(X): both ends in X (loops included)
  std::vector<EdgeId> cut;       // delta(X): exactly one end in X
};
CutParts cutAndInterior(const SignedGraph& g, const std::vector<VertexId>& X);

int trailWeight(const SignedGraph& g, const Trail& t);
int circuitWeight(const SignedGraph& g, const Circuit& c);

SignedGraph applyShifting(const SignedGraph& g, const Shifting& s);
RESGraph applyShifting(const RESGraph& g, const Shifting& s);

// --- trail algebra ------------------------------------------------------

VertexId tailVertex(const SignedGraph& g, const Trail& t);
VertexId headVertex(const SignedGraph& g, const Trail& t);

Trail composeTrails(const SignedGraph& g, const Trail& a, const Trail& b);
Trail reverseTrail(const Trail& t);
Circuit reverseCircuit(const Circuit& c);
Circuit cyclicReorder(const Circuit& c, std::size_t i);

std::vector<Transition> transitionsOfTrail(const SignedGraph& g,
                                           const Trail& t);
std::vector<Transition> transitionsOfCircuit(const SignedGraph& g,
                                             const Circuit& c);

std::vector<Trail> splitByTransitions(const SignedGraph& g, const Trail& t,
                                      const std::vector<Transition>& cuts);

void validateTrail(const SignedGraph& g, const Trail& t);
void validateCircuit(const SignedGraph& g, const Circuit& c);

Trail asTrail(const Circuit& c);
Circuit asCircuit(const SignedGraph& g, const Trail& t);

// --- canonical forms ----------------------------------------------------

// (edge id, direction) encoding of an arc; direction is +1 when the arc runs
// from the lower half-edge to the higher one.
std::pair<EdgeId, int> arcKey(const SignedGraph& g, const Arc& a);

// Lexicographically least (edge,dir) sequence over all rotations of the
// circuit and of its reversal. Used to deduplicate decompositions.
Circuit canonicalCircuit(const SignedGraph& g, const Circuit& c);

// Lexicographically least of the two root-anchored orientations. The circuit
// must have its tail and head at the root and visit it nowhere else.
Circuit canonicalRootedCircuit(const SignedGraph& g, const Circuit& c);

// Least (edge,dir) sequence over the rotations (of both orientations) whose
// tail sits at the root. The circuit must hit the root.
Circuit rootAnchoredCircuit(const SignedGraph& g, VertexId root,
                            const Circuit& c);

std::vector<std::pair<EdgeId, int>> circuitKey(const SignedGraph& g,
                                               const Circuit& c);

std::vector<EdgeId> circuitEdges(const Circuit& c, const SignedGraph& g);

// --- Eulerian / connectivity predicates ----------------------------------

bool isEulerian(const SignedGraph& g);
bool isRES(const SignedGraph& g, VertexId root);
// Throws NotEulerianError naming the offending vertices.
void requireRES(const SignedGraph& g, VertexId root);

// True iff no nonempty Y avoiding the root has |delta(Y)| == 2. Exhaustive
// over subsets; vacuously true when the root is the only vertex.
bool isRoot4EC(const RESGraph& g);

struct MinCut {
  std::vector<VertexId> side;  // S, sorted
  int cutSize = 0;
};
// Exhaustive global minimum edge cut over nonempty proper vertex subsets.
// Among minimizers, odd |S| is preferred, then the lexicographically least
// sorted vertex list. Vertex counts beyond maxVertices are an error.
MinCut minEdgeCut(const SignedGraph& g, int maxVertices = 16);

}  // namespace flood
