#pragma once

#include <cstdint>
#include <vector>

#include "flood/graph.hpp"
#include "flood/solver.hpp"

namespace flood {

// Signature giving every edge weight 1, so a circuit's weight is the parity
// of its edge count.
SignedGraph allOnesSignature(const SignedGraph& g);

// Rooted decomposition for a graph that is 2l-regular away from a root of
// degree 2d, 2d-edge-connected, with an odd number of vertices: d circuits,
// each with an odd number of edges, each rooted at b, partitioning E.
std::vector<Circuit> nearRegularDecomposition(const SignedGraph& g, VertexId b,
                                              int d, int ell,
                                              std::uint64_t cap = kDefaultCap,
                                              int threads = 1);

struct OddDecomposition {
  VertexId baseVertex = 0;
  std::vector<Circuit> circuits;
};

// Decomposition of a connected 2l-regular graph with an odd number of
// vertices into l odd circuits sharing one base vertex. Recurses on a
// minimum edge cut until the graph is 2l-edge-connected.
OddDecomposition regularOddDecomposition(const SignedGraph& g,
                                         std::uint64_t cap = kDefaultCap,
                                         int threads = 1);

bool verifyOddDecomposition(const SignedGraph& g, const OddDecomposition& dec,
                            int ell);

struct PackingCorollaryReport {
  int packing = 0;
  int flooding = 0;
  bool holds = false;  // flooding >= ceil(packing / 2)
};

// Requires a rooted 4-edge-connected Eulerian instance.
PackingCorollaryReport checkPackingCorollary(const RESGraph& g,
                                             std::uint64_t cap = kDefaultCap,
                                             int threads = 1);

}  // namespace flood
