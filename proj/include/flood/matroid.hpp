#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flood/graph.hpp"
#include "flood/solver.hpp"

namespace flood {

// Ground set member: an arc together with a Z2 bit. A basis element
// represents a zero circuit of an optimal flooding by the arc and the weight
// of the circuit's prefix up to and including that arc.
struct MatroidElement {
  Arc arc;
  int bit = 0;
  auto operator<=>(const MatroidElement&) const = default;
};

// One representative per arc of a zero rooted circuit.
std::vector<MatroidElement> representativesOf(const SignedGraph& g,
                                              VertexId root,
                                              const Circuit& rooted);

class FloodingMatroid {
 public:
  struct FloodingInfo {
    // Per zero circuit: the element ids that can represent it, over both
    // traversal directions.
    std::vector<std::set<int>> zeroCandidates;
    std::map<EdgeId, int> zeroCircuitOfEdge;
    std::set<Transition> transitions;
  };

  RESGraph instance;
  int floodingNumber = 0;
  int rank = 0;
  std::vector<MatroidElement> groundSet;  // all 4|E| elements, by id
  std::vector<std::vector<int>> bases;    // sorted element-id sets, sorted
  std::vector<Flooding> optimalFloodings;
  std::vector<FloodingInfo> info;  // parallel to optimalFloodings

  int elementId(const MatroidElement& e) const;
  MatroidElement element(int id) const;
  bool isBasisIds(std::vector<int> ids) const;
  // True iff B is a system of representatives for optimal flooding f.
  bool isSystemFor(std::size_t floodingIndex,
                   const std::vector<int>& basisIds) const;

 private:
  friend FloodingMatroid buildMatroid(const RESGraph&, std::uint64_t, int);
  std::map<EdgeId, int> edgeIndex_;
  std::vector<EdgeId> edgeByIndex_;
  std::set<std::vector<int>> basisSet_;
};

FloodingMatroid buildMatroid(const RESGraph& g,
                             std::uint64_t cap = kDefaultCap,
                             int threads = 1);

int rank(const FloodingMatroid& m);
bool isBasis(const FloodingMatroid& m, const std::vector<MatroidElement>& B);
std::vector<MatroidElement> nonLoopElements(const FloodingMatroid& m);

struct ExchangeCounterexample {
  std::vector<int> basis1;
  std::vector<int> basis2;
  int removed = 0;
};

// Exhaustive basis exchange axiom check over all ordered basis pairs.
std::optional<ExchangeCounterexample> checkBasisExchange(
    const FloodingMatroid& m);

// No basis may contain (f0, 0) and (f1, 1) for arcs with a common head.
bool checkSameHeadLemma(const FloodingMatroid& m);

// A transition works for a basis when some optimal flooding has it as a
// transition and the basis as a system of representatives. Transitions at
// the root never qualify: rooted circuits have no transition there.
bool transitionWorksFor(const FloodingMatroid& m, const Transition& R,
                        const std::vector<int>& basisIds);

// For every basis, every vertex v != root joined to the root by an edge, and
// every half-edge h at v on such an edge: strictly more than half of the
// deg(v)-1 transitions at v containing h must work for the basis. Requires a
// rooted 4-edge-connected instance.
bool checkMainLemma(const FloodingMatroid& m);

}  // namespace flood
