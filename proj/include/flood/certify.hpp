#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flood/graph.hpp"
#include "flood/solver.hpp"

namespace flood {

struct OddComponent {
  std::vector<VertexId> verts;  // Y, sorted
  int cutSize = 0;              // |delta(Y)|
  int nonZeroCount = 0;         // non-zero edges of E(Y) u delta(Y), shifted
  bool isOdd = false;           // parity differs from |delta(Y)|/2
};

struct OddnessReport {
  std::vector<OddComponent> components;
  int oddCount = 0;
};

OddnessReport oddComponents(const RESGraph& g, const Shifting& shift,
                            const std::vector<VertexId>& X);

// gamma'(E(X)) + |delta(X)|/2 - odd(G - X), exactly.
int certificateValue(const RESGraph& g, const Shifting& shift,
                     const std::vector<VertexId>& X);

struct Certificate {
  std::vector<VertexId> X;  // sorted, contains the root
  Shifting shift;
  int value = 0;
  bool operator==(const Certificate&) const = default;
};

// Minimizes certificateValue over every canonical shifting and every vertex
// set containing the root. Ties break to the smallest |X|, then the
// lexicographically least X, then the least shift set.
Certificate bestCertificate(const RESGraph& g,
                            std::uint64_t cap = kDefaultCap);

// Visits every (shifting, X) pair with its value, in enumeration order.
void sweepCertificates(
    const RESGraph& g, std::uint64_t cap,
    const std::function<void(const Shifting&, const std::vector<VertexId>&,
                             int)>& fn);

struct MinMaxReport {
  int lhs = 0;  // flooding number
  int rhs = 0;  // best certificate value
  bool equal = false;
  // lhs <= certificateValue for every (shifting, X) pair
  bool easyDirectionOk = false;
  Certificate best;
};

MinMaxReport verifyMinMax(const RESGraph& g, std::uint64_t cap = kDefaultCap,
                          int threads = 1);

struct HittingSet {
  std::vector<EdgeId> edges;  // F = F1 u F2, sorted
  Certificate cert;
};

// Erdos-Posa style hitting set built from the best certificate: the non-zero
// edges inside X plus one crossing edge per component of G - X. Requires a
// rooted 4-edge-connected instance; the result is re-checked against
// hasNonzeroRootCircuit before being returned.
HittingSet eppHittingSet(const RESGraph& g, std::uint64_t cap = kDefaultCap);

}  // namespace flood
