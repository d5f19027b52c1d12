#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flood/fixtures.hpp"
#include "flood/graph.hpp"

namespace flood {

// Instance text format: JSON with fields schema, name, vertices (unique
// names), root, edges ({id, ends, weight}). Half-edge ids come out packed as
// 2*id at ends[0] and 2*id + 1 at ends[1].
Instance parseInstance(const std::string& text);
std::string emitInstance(const Instance& inst);

std::string instanceDigest(const Instance& inst);

// "edgeId:+" when the arc runs from the lower half-edge to the higher one.
std::string arcToken(const SignedGraph& g, const Arc& a);

// Seeded generator with explicit bounded draws, so streams are reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Inclusive bounds.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(
                                             hi - lo + 1));
  }
  int bit() { return uniform(0, 1); }

 private:
  std::mt19937_64 eng_;
};

// Connected even-degree instance built by overlaying random closed walks
// from a random root until the edge budget is met, then flipping a fair coin
// per edge weight.
Instance genInstance(int nVertices, int nEdges, std::uint64_t seed);

struct CampaignSpec {
  int maxVertices = 5;
  int maxEdges = 9;
  // Skip draws whose transition-system count (or that of any reduction)
  // would dwarf the scan budget.
  std::uint64_t systemCap = 1'000'000;
};

// Deterministic stream of solvable random Eulerian instances: the index-th
// accepted draw for this seed.
Instance campaignInstance(std::uint64_t seed, int index,
                          const CampaignSpec& spec = {});

}  // namespace flood
