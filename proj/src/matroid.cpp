#include "flood/matroid.hpp"

#include <algorithm>
#include <functional>

namespace flood {

std::vector<MatroidElement> representativesOf(const SignedGraph& g,
                                              VertexId root,
                                              const Circuit& rooted) {
  validateCircuit(g, rooted);
  if (g.vertexOf(rooted.arcs.front().tail) != root)
    throw std::invalid_argument("circuit is not rooted");
  if (circuitWeight(g, rooted) != 0)
    throw std::invalid_argument("representatives exist only for zero circuits");
  std::vector<MatroidElement> out;
  int prefix = 0;
  for (const Arc& a : rooted.arcs) {
    prefix ^= g.weight(g.edgeOf(a.tail));
    out.push_back(MatroidElement{a, prefix});
  }
  return out;
}

int FloodingMatroid::elementId(const MatroidElement& e) const {
  EdgeId edge = instance.graph.edgeOf(e.arc.tail);
  auto [lo, hi] = instance.graph.halves(edge);
  int dir = e.arc.tail == lo ? 0 : 1;
  return 4 * edgeIndex_.at(edge) + 2 * dir + e.bit;
}

MatroidElement FloodingMatroid::element(int id) const {
  EdgeId edge = edgeByIndex_.at(id / 4);
  auto [lo, hi] = instance.graph.halves(edge);
  int dir = (id / 2) % 2;
  Arc arc = dir == 0 ? Arc{lo, hi} : Arc{hi, lo};
  return MatroidElement{arc, id % 2};
}

bool FloodingMatroid::isBasisIds(std::vector<int> ids) const {
  std::sort(ids.begin(), ids.end());
  return basisSet_.count(ids) != 0;
}

bool FloodingMatroid::isSystemFor(std::size_t floodingIndex,
                                  const std::vector<int>& basisIds) const {
  const FloodingInfo& fi = info.at(floodingIndex);
  if (basisIds.size() != fi.zeroCandidates.size()) return false;
  std::set<int> seen;
  for (int id : basisIds) {
    MatroidElement e = element(id);
    EdgeId edge = instance.graph.edgeOf(e.arc.tail);
    auto it = fi.zeroCircuitOfEdge.find(edge);
    if (it == fi.zeroCircuitOfEdge.end()) return false;
    if (!fi.zeroCandidates[it->second].count(id)) return false;
    if (!seen.insert(it->second).second) return false;
  }
  return true;
}

FloodingMatroid buildMatroid(const RESGraph& g, std::uint64_t cap,
                             int threads) {
  requireRES(g.graph, g.root);
  FloodingMatroid m;
  m.instance = g;
  for (EdgeId e : g.graph.edgeIds()) {
    m.edgeIndex_[e] = static_cast<int>(m.edgeByIndex_.size());
    m.edgeByIndex_.push_back(e);
  }
  for (std::size_t i = 0; i < 4 * m.edgeByIndex_.size(); ++i)
    m.groundSet.push_back(m.element(static_cast<int>(i)));

  SolveOptions opts;
  opts.cap = cap;
  opts.needDirect = false;
  opts.collectOptimal = true;
  opts.threads = threads;
  SolveOutcome outcome = solveScan(g, opts);
  m.floodingNumber = outcome.report.floodingNumber;
  m.rank = g.graph.degree(g.root) / 2 - m.floodingNumber;
  m.optimalFloodings = std::move(outcome.optimalFloodings);

  constexpr std::uint64_t kBasisInstanceCap = 4'000'000;
  std::uint64_t basisInstances = 0;
  for (const Flooding& f : m.optimalFloodings) {
    FloodingMatroid::FloodingInfo fi;
    std::uint64_t product = 1;
    for (const Circuit& c : f.circuits) {
      for (const Transition& t : transitionsOfCircuit(g.graph, c))
        fi.transitions.insert(t);
      if (circuitWeight(g.graph, c) != 0) continue;
      int idx = static_cast<int>(fi.zeroCandidates.size());
      std::set<int> cands;
      for (const MatroidElement& e : representativesOf(g.graph, g.root, c))
        cands.insert(m.elementId(e));
      for (const MatroidElement& e :
           representativesOf(g.graph, g.root, reverseCircuit(c)))
        cands.insert(m.elementId(e));
      for (const Arc& a : c.arcs)
        fi.zeroCircuitOfEdge[g.graph.edgeOf(a.tail)] = idx;
      product *= cands.size();
      fi.zeroCandidates.push_back(std::move(cands));
    }
    if (static_cast<int>(fi.zeroCandidates.size()) != m.rank)
      throw CheckFailure("optimal flooding has unexpected zero circuit count");
    basisInstances += product;
    if (basisInstances > kBasisInstanceCap)
      throw CapExceeded(basisInstances, kBasisInstanceCap);

    // All systems of representatives of this flooding.
    std::vector<int> pick(fi.zeroCandidates.size(), 0);
    std::function<void(std::size_t, std::vector<int>&)> emit =
        [&](std::size_t i, std::vector<int>& acc) {
          if (i == fi.zeroCandidates.size()) {
            std::vector<int> sorted = acc;
            std::sort(sorted.begin(), sorted.end());
            m.basisSet_.insert(std::move(sorted));
            return;
          }
          for (int id : fi.zeroCandidates[i]) {
            acc.push_back(id);
            emit(i + 1, acc);
            acc.pop_back();
          }
        };
    std::vector<int> acc;
    emit(0, acc);
    m.info.push_back(std::move(fi));
  }
  if (m.rank == 0) m.basisSet_.insert(std::vector<int>{});
  m.bases.assign(m.basisSet_.begin(), m.basisSet_.end());
  return m;
}

int rank(const FloodingMatroid& m) { return m.rank; }

bool isBasis(const FloodingMatroid& m, const std::vector<MatroidElement>& B) {
  std::vector<int> ids;
  ids.reserve(B.size());
  for (const MatroidElement& e : B) ids.push_back(m.elementId(e));
  return m.isBasisIds(std::move(ids));
}

std::vector<MatroidElement> nonLoopElements(const FloodingMatroid& m) {
  std::set<int> ids;
  for (const auto& b : m.bases) ids.insert(b.begin(), b.end());
  std::vector<MatroidElement> out;
  for (int id : ids) out.push_back(m.element(id));
  return out;
}

std::optional<ExchangeCounterexample> checkBasisExchange(
    const FloodingMatroid& m) {
  for (const auto& B1 : m.bases) {
    for (const auto& B2 : m.bases) {
      for (int b1 : B1) {
        if (std::binary_search(B2.begin(), B2.end(), b1)) continue;
        bool exchanged = false;
        for (int b2 : B2) {
          if (std::binary_search(B1.begin(), B1.end(), b2)) continue;
          std::vector<int> candidate;
          candidate.reserve(B1.size());
          for (int x : B1)
            if (x != b1) candidate.push_back(x);
          candidate.push_back(b2);
          if (m.isBasisIds(std::move(candidate))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return ExchangeCounterexample{B1, B2, b1};
      }
    }
  }
  return std::nullopt;
}

bool checkSameHeadLemma(const FloodingMatroid& m) {
  const SignedGraph& g = m.instance.graph;
  for (const auto& basis : m.bases) {
    for (int idA : basis) {
      MatroidElement a = m.element(idA);
      if (a.bit != 0) continue;
      for (int idB : basis) {
        MatroidElement b = m.element(idB);
        if (b.bit != 1) continue;
        if (g.vertexOf(a.arc.head) == g.vertexOf(b.arc.head)) return false;
      }
    }
  }
  return true;
}

bool transitionWorksFor(const FloodingMatroid& m, const Transition& R,
                        const std::vector<int>& basisIds) {
  if (R.at == m.instance.root) return false;
  std::vector<int> sorted = basisIds;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < m.optimalFloodings.size(); ++i) {
    if (!m.info[i].transitions.count(R)) continue;
    if (m.isSystemFor(i, sorted)) return true;
  }
  return false;
}

bool checkMainLemma(const FloodingMatroid& m) {
  const SignedGraph& g = m.instance.graph;
  VertexId root = m.instance.root;
  if (!isRoot4EC(m.instance))
    throw std::invalid_argument(
        "main lemma requires a rooted 4-edge-connected instance");

  // Half-edges h at v != root whose edge joins v to the root.
  std::vector<HalfEdgeId> qualifying;
  for (EdgeId e : g.edgeIds()) {
    if (g.isLoop(e)) continue;
    auto [lo, hi] = g.halves(e);
    if (g.vertexOf(lo) == root && g.vertexOf(hi) != root)
      qualifying.push_back(hi);
    else if (g.vertexOf(hi) == root && g.vertexOf(lo) != root)
      qualifying.push_back(lo);
  }

  std::map<Transition, std::vector<std::size_t>> byTransition;
  for (std::size_t i = 0; i < m.info.size(); ++i)
    for (const Transition& t : m.info[i].transitions)
      byTransition[t].push_back(i);

  for (const auto& basis : m.bases) {
    for (HalfEdgeId h : qualifying) {
      VertexId v = g.vertexOf(h);
      int total = 0;
      int worked = 0;
      for (HalfEdgeId other : g.halfEdgesAt(v)) {
        if (other == h) continue;
        ++total;
        auto it = byTransition.find(makeTransition(g, h, other));
        if (it == byTransition.end()) continue;
        for (std::size_t idx : it->second) {
          if (m.isSystemFor(idx, basis)) {
            ++worked;
            break;
          }
        }
      }
      if (2 * worked <= total) return false;
    }
  }
  return true;
}

}  // namespace flood
