#pragma once

#include <cstdint>
#include <vector>

#include "flood/certify.hpp"
#include "flood/graph.hpp"
#include "flood/solver.hpp"

namespace flood {

// Result of deleting an edge e of G - b and reattaching its half-edges to
// the root through two fresh edges whose weights sum to gamma(e).
struct Reduction {
  EdgeId sourceEdge = -1;
  int weightChoice = 0;  // weight of the new edge at the lower half of e
  RESGraph result;
  EdgeId newEdgeAtLowHalf = -1;
  EdgeId newEdgeAtHighHalf = -1;
  HalfEdgeId freshLow = -1;   // h', at the root
  HalfEdgeId freshHigh = -1;  // r', at the root
};

Reduction eReduction(const RESGraph& g, EdgeId e, int w);

struct ReductionCheck {
  int nuOriginal = 0;
  int nuReduced[2] = {0, 0};  // per weight choice
  bool monotone = false;      // nu(red) >= nu(g), both choices
  bool parity = false;        // nu(red) == nu(g) (mod 2), both choices
};

ReductionCheck checkReductionMonotone(const RESGraph& g, EdgeId e,
                                      std::uint64_t cap = kDefaultCap,
                                      int threads = 1);

// Lifts a certificate of the reduced instance back to g: same X, the shift
// set replayed on g. Requires nu(red) <= nu(g) + 1 and an optimal
// certificate of the reduction; the lifted pair must value exactly nu(g).
Certificate liftCertificate(const RESGraph& g, const Reduction& red,
                            const Certificate& cert,
                            std::uint64_t cap = kDefaultCap, int threads = 1);

enum class TwoNonLoopOutcome {
  NotApplicable,  // some reduction fails the nu + 2 hypothesis
  Holds,          // hypothesis holds and every arc of G - b is doubly non-loop
};

TwoNonLoopOutcome checkTwoNonLoopLemma(const RESGraph& g,
                                       std::uint64_t cap = kDefaultCap,
                                       int threads = 1);

// Edges with neither end at the root.
std::vector<EdgeId> edgesAvoidingRoot(const RESGraph& g);

}  // namespace flood
