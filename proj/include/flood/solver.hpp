#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// A perfect pairing of the half-edges at every vertex. Decomposing along it
// yields closed trails whose edge sets partition E(G).
struct TransitionSystem {
  std::vector<Transition> pairs;  // sorted by (lo, hi)
  bool operator==(const TransitionSystem&) const = default;
};

// Product over vertices of (deg(v) - 1)!!, saturating instead of overflowing.
std::uint64_t countTransitionSystems(const SignedGraph& g);

// Yields every full pairing exactly once, in the order given by repeatedly
// matching the smallest unpaired half-edge with each partner in increasing
// id order. Throws CapExceeded when the total count exceeds cap.
void forEachTransitionSystem(
    const SignedGraph& g, std::uint64_t cap,
    const std::function<void(const TransitionSystem&)>& fn);

std::vector<Circuit> decompositionOf(const SignedGraph& g,
                                     const TransitionSystem& ts);

// Circuit decomposition of size deg(root)/2 where every circuit has the root
// as its tail and head. Circuits are stored rooted-canonical and sorted.
struct Flooding {
  std::vector<Circuit> circuits;
  bool operator==(const Flooding&) const = default;
};

int countNonZero(const SignedGraph& g, const Flooding& f);
void validateFlooding(const RESGraph& g, const Flooding& f);

void forEachFlooding(const RESGraph& g, std::uint64_t cap,
                     const std::function<void(const Flooding&)>& fn);

struct SolveReport {
  int floodingNumber = 0;
  std::optional<Flooding> witnessFlooding;
  // Maximum size of a decomposition in which every circuit is non-zero and
  // hits the root; absent when the scan ran in flooding-only mode.
  std::optional<int> directDefinitionNumber;
  std::optional<std::vector<Circuit>> witnessDecomposition;
  std::uint64_t enumeratedSystems = 0;
};

struct SolveOptions {
  std::uint64_t cap = kDefaultCap;
  // When false the scan prunes every branch that cannot produce a flooding;
  // such branches contain no decomposition that qualifies for either
  // objective, so the flooding number stays exact but the direct-definition
  // objective is not computed.
  bool needDirect = true;
  bool collectOptimal = false;
  int threads = 1;
};

struct SolveOutcome {
  SolveReport report;
  std::vector<Flooding> optimalFloodings;  // filled when collectOptimal
};

SolveOutcome solveScan(const RESGraph& g, const SolveOptions& opts);

// One pass serving both objectives, with witnesses.
SolveReport solve(const RESGraph& g, std::uint64_t cap = kDefaultCap,
                  int threads = 1);

int floodingNumber(const RESGraph& g, std::uint64_t cap = kDefaultCap,
                   int threads = 1);
int directDefinitionNumber(const RESGraph& g, std::uint64_t cap = kDefaultCap,
                           int threads = 1);

// Maximum number of pairwise edge-disjoint non-zero circuits hitting the
// root (no partition requirement). Exact via memoized search over
// remaining-edge states.
int packingNumber(const RESGraph& g, std::uint64_t cap = kDefaultCap);

// True iff some circuit through the root has weight 1. Exact.
bool hasNonzeroRootCircuit(const SignedGraph& g, VertexId root);

}  // namespace flood
