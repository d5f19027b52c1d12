#include "flood/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace flood {

namespace {

std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// (deg - 1)!! pairings of deg half-edges; deg must be even.
std::uint64_t pairingsOf(int deg) {
  std::uint64_t out = 1;
  for (int k = deg - 1; k >= 1; k -= 2)
    out = satMul(out, static_cast<std::uint64_t>(k));
  return out;
}

using CircuitKey = std::vector<std::pair<EdgeId, int>>;
using FloodKey = std::vector<CircuitKey>;

FloodKey keyOf(const SignedGraph& g, const std::vector<Circuit>& circuits) {
  FloodKey key;
  key.reserve(circuits.size());
  for (const Circuit& c : circuits) key.push_back(circuitKey(g, c));
  return key;
}

// Exhaustive scan over transition systems with incremental trail fragments.
// Closing a cycle that avoids the root kills the branch for both objectives,
// so those subtrees are skipped; in flooding-only mode, cycles that touch the
// root more than once are skipped as well.
class Scan {
 public:
  Scan(const RESGraph& g, const SolveOptions& opts)
      : g_(&g.graph), root_(g.root), opts_(opts) {
    // Root half-edges are scanned first: cycles then close at the deeper
    // non-root levels, which is where pruning cuts the most.
    std::vector<HalfEdgeId> globals;
    for (VertexId v : g_->vertices())
      for (HalfEdgeId h : g_->halfEdgesAt(v)) globals.push_back(h);
    std::sort(globals.begin(), globals.end(),
              [&](HalfEdgeId a, HalfEdgeId b) {
                bool ra = g_->vertexOf(a) == root_;
                bool rb = g_->vertexOf(b) == root_;
                if (ra != rb) return ra;
                return a < b;
              });
    H_ = static_cast<int>(globals.size());
    toGlobal_ = globals;
    std::map<HalfEdgeId, int> toLocal;
    for (int i = 0; i < H_; ++i) toLocal[globals[i]] = i;
    mate_.resize(H_);
    vert_.resize(H_);
    w_.resize(H_);
    std::map<VertexId, int> vidx;
    for (VertexId v : g_->vertices()) {
      int idx = static_cast<int>(vidx.size());
      vidx[v] = idx;
    }
    atVert_.resize(vidx.size());
    for (int i = 0; i < H_; ++i) {
      HalfEdgeId h = globals[i];
      mate_[i] = toLocal.at(g_->mate(h));
      vert_[i] = vidx.at(g_->vertexOf(h));
      w_[i] = g_->weight(g_->edgeOf(h));
      atVert_[vert_[i]].push_back(i);
    }
    partner_.assign(H_, -1);
    endOther_.resize(H_);
    fragW_.resize(H_);
    fragBH_.resize(H_);
    for (int i = 0; i < H_; ++i) {
      endOther_[i] = mate_[i];
      fragW_[i] = w_[i];
      fragBH_[i] = static_cast<int>(g_->vertexOf(toGlobal_[i]) == root_) +
                   static_cast<int>(g_->vertexOf(toGlobal_[mate_[i]]) == root_);
    }
  }

  struct Result {
    int bestFlood = -1;
    FloodKey bestFloodKey;
    std::optional<Flooding> bestFloodObj;
    long long bestDirect = -1;
    FloodKey bestDirectKey;
    std::optional<std::vector<Circuit>> bestDirectObj;
    std::vector<Flooding> optimal;
  };

  Result run() {
    result_ = Result{};
    dfs(0);
    return std::move(result_);
  }

  // Enumerates the pruned DFS prefixes of the given depth, in scan order.
  std::vector<std::vector<std::pair<int, int>>> prefixes(int depth) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> path;
    collectPrefixes(0, depth, path, out);
    return out;
  }

  Result runPrefix(const std::vector<std::pair<int, int>>& path) {
    result_ = Result{};
    replay(path, 0);
    return std::move(result_);
  }

  int pairingsTotal() const { return H_ / 2; }

 private:
  void replay(const std::vector<std::pair<int, int>>& path, std::size_t i) {
    if (i == path.size()) {
      dfs(0);
      return;
    }
    auto [x, y] = path[i];
    if (endOther_[x] == y) {
      int bh = fragBH_[x];
      int cw = fragW_[x];
      applyClose(x, y, cw, bh);
      replay(path, i + 1);
      undoClose(x, y, cw, bh);
    } else {
      JoinUndo u = applyJoin(x, y);
      replay(path, i + 1);
      undoJoin(x, y, u);
    }
  }

  void collectPrefixes(int from, int depth,
                       std::vector<std::pair<int, int>>& path,
                       std::vector<std::vector<std::pair<int, int>>>& out) {
    if (static_cast<int>(path.size()) == depth) {
      out.push_back(path);
      return;
    }
    while (from < H_ && partner_[from] != -1) ++from;
    if (from == H_) return;  // shallower leaf; caller avoids this regime
    int x = from;
    for (int y : atVert_[vert_[x]]) {
      if (y == x || partner_[y] != -1) continue;
      if (endOther_[x] == y) {
        int bh = fragBH_[x];
        if (bh == 0) continue;
        if (!opts_.needDirect && bh != 2) continue;
        int cw = fragW_[x];
        applyClose(x, y, cw, bh);
        path.emplace_back(x, y);
        collectPrefixes(x + 1, depth, path, out);
        path.pop_back();
        undoClose(x, y, cw, bh);
      } else {
        JoinUndo u = applyJoin(x, y);
        path.emplace_back(x, y);
        collectPrefixes(x + 1, depth, path, out);
        path.pop_back();
        undoJoin(x, y, u);
      }
    }
  }

  struct JoinUndo {
    int a, b, aW, aBH, bW, bBH;
  };

  void applyClose(int x, int y, int cw, int bh) {
    partner_[x] = y;
    partner_[y] = x;
    ++closed_;
    nz_ += cw;
    zero_ += cw ^ 1;
    over2_ += bh > 2;
  }
  void undoClose(int x, int y, int cw, int bh) {
    partner_[x] = -1;
    partner_[y] = -1;
    --closed_;
    nz_ -= cw;
    zero_ -= cw ^ 1;
    over2_ -= bh > 2;
  }
  JoinUndo applyJoin(int x, int y) {
    int a = endOther_[x];
    int b = endOther_[y];
    JoinUndo u{a, b, fragW_[a], fragBH_[a], fragW_[b], fragBH_[b]};
    int nw = fragW_[x] ^ fragW_[y];
    int nb = fragBH_[x] + fragBH_[y];
    endOther_[a] = b;
    endOther_[b] = a;
    fragW_[a] = fragW_[b] = nw;
    fragBH_[a] = fragBH_[b] = nb;
    partner_[x] = y;
    partner_[y] = x;
    return u;
  }
  void undoJoin(int x, int y, const JoinUndo& u) {
    partner_[x] = -1;
    partner_[y] = -1;
    endOther_[u.a] = x;
    endOther_[u.b] = y;
    fragW_[u.a] = u.aW;
    fragBH_[u.a] = u.aBH;
    fragW_[u.b] = u.bW;
    fragBH_[u.b] = u.bBH;
  }

  void dfs(int from) {
    while (from < H_ && partner_[from] != -1) ++from;
    if (from == H_) {
      leaf();
      return;
    }
    int x = from;
    for (int y : atVert_[vert_[x]]) {
      if (y == x || partner_[y] != -1) continue;
      if (endOther_[x] == y) {
        int bh = fragBH_[x];
        if (bh == 0) continue;
        if (!opts_.needDirect && bh != 2) continue;
        int cw = fragW_[x];
        applyClose(x, y, cw, bh);
        dfs(x + 1);
        undoClose(x, y, cw, bh);
      } else {
        JoinUndo u = applyJoin(x, y);
        dfs(x + 1);
        undoJoin(x, y, u);
      }
    }
  }

  // Extracts the closed trails of the completed pairing, in scan order, each
  // starting from its smallest local half-edge.
  std::vector<std::vector<Arc>> extractCycles() const {
    std::vector<std::vector<Arc>> cycles;
    std::vector<char> visited(H_, 0);
    for (int i = 0; i < H_; ++i) {
      if (visited[i]) continue;
      std::vector<Arc> arcs;
      int cur = i;
      do {
        visited[cur] = 1;
        visited[mate_[cur]] = 1;
        arcs.push_back(Arc{toGlobal_[cur], toGlobal_[mate_[cur]]});
        cur = partner_[mate_[cur]];
      } while (cur != i);
      cycles.push_back(std::move(arcs));
    }
    return cycles;
  }

  Flooding materializeFlooding() const {
    Flooding f;
    for (auto& arcs : extractCycles()) {
      std::size_t start = 0;
      for (std::size_t k = 0; k < arcs.size(); ++k)
        if (g_->vertexOf(arcs[k].tail) == root_) {
          start = k;
          break;
        }
      Circuit c;
      c.arcs.insert(c.arcs.end(), arcs.begin() + start, arcs.end());
      c.arcs.insert(c.arcs.end(), arcs.begin(), arcs.begin() + start);
      f.circuits.push_back(canonicalRootedCircuit(*g_, c));
    }
    std::sort(f.circuits.begin(), f.circuits.end(),
              [&](const Circuit& a, const Circuit& b) {
                return circuitKey(*g_, a) < circuitKey(*g_, b);
              });
    return f;
  }

  std::vector<Circuit> materializeDecomposition() const {
    std::vector<Circuit> out;
    for (auto& arcs : extractCycles())
      out.push_back(canonicalCircuit(*g_, Circuit{std::move(arcs)}));
    std::sort(out.begin(), out.end(), [&](const Circuit& a, const Circuit& b) {
      return circuitKey(*g_, a) < circuitKey(*g_, b);
    });
    return out;
  }

  void leaf() {
    if (over2_ == 0) {
      // Every closed trail touches the root exactly once: a flooding.
      if (nz_ > result_.bestFlood) {
        Flooding f = materializeFlooding();
        result_.bestFlood = nz_;
        result_.bestFloodKey = keyOf(*g_, f.circuits);
        if (opts_.collectOptimal) {
          result_.optimal.clear();
          result_.optimal.push_back(f);
        }
        result_.bestFloodObj = std::move(f);
      } else if (nz_ == result_.bestFlood) {
        Flooding f = materializeFlooding();
        FloodKey key = keyOf(*g_, f.circuits);
        if (opts_.collectOptimal) result_.optimal.push_back(f);
        if (key < result_.bestFloodKey) {
          result_.bestFloodKey = std::move(key);
          result_.bestFloodObj = std::move(f);
        }
      }
    }
    if (opts_.needDirect && zero_ == 0) {
      long long size = closed_;
      if (size > result_.bestDirect) {
        std::vector<Circuit> d = materializeDecomposition();
        result_.bestDirect = size;
        result_.bestDirectKey = keyOf(*g_, d);
        result_.bestDirectObj = std::move(d);
      } else if (size == result_.bestDirect) {
        std::vector<Circuit> d = materializeDecomposition();
        FloodKey key = keyOf(*g_, d);
        if (key < result_.bestDirectKey) {
          result_.bestDirectKey = std::move(key);
          result_.bestDirectObj = std::move(d);
        }
      }
    }
  }

  const SignedGraph* g_;
  VertexId root_;
  SolveOptions opts_;
  int H_ = 0;
  std::vector<HalfEdgeId> toGlobal_;
  std::vector<int> mate_, vert_, w_;
  std::vector<std::vector<int>> atVert_;
  std::vector<int> partner_, endOther_, fragW_, fragBH_;
  int closed_ = 0, nz_ = 0, zero_ = 0, over2_ = 0;
  Result result_;
};

void mergeInto(Scan::Result& acc, Scan::Result&& part, bool collectOptimal) {
  if (part.bestFlood > acc.bestFlood) {
    acc.bestFlood = part.bestFlood;
    acc.bestFloodKey = std::move(part.bestFloodKey);
    acc.bestFloodObj = std::move(part.bestFloodObj);
    if (collectOptimal) acc.optimal = std::move(part.optimal);
  } else if (part.bestFlood == acc.bestFlood && part.bestFlood >= 0) {
    if (collectOptimal)
      acc.optimal.insert(acc.optimal.end(),
                         std::make_move_iterator(part.optimal.begin()),
                         std::make_move_iterator(part.optimal.end()));
    if (part.bestFloodKey < acc.bestFloodKey) {
      acc.bestFloodKey = std::move(part.bestFloodKey);
      acc.bestFloodObj = std::move(part.bestFloodObj);
    }
  }
  if (part.bestDirect > acc.bestDirect) {
    acc.bestDirect = part.bestDirect;
    acc.bestDirectKey = std::move(part.bestDirectKey);
    acc.bestDirectObj = std::move(part.bestDirectObj);
  } else if (part.bestDirect == acc.bestDirect && part.bestDirect >= 0) {
    if (part.bestDirectKey < acc.bestDirectKey) {
      acc.bestDirectKey = std::move(part.bestDirectKey);
      acc.bestDirectObj = std::move(part.bestDirectObj);
    }
  }
}

}  // namespace

std::uint64_t countTransitionSystems(const SignedGraph& g) {
  std::uint64_t total = 1;
  for (VertexId v : g.vertices()) total = satMul(total, pairingsOf(g.degree(v)));
  return total;
}

void forEachTransitionSystem(
    const SignedGraph& g, std::uint64_t cap,
    const std::function<void(const TransitionSystem&)>& fn) {
  std::uint64_t total = countTransitionSystems(g);
  if (total > cap) throw CapExceeded(total, cap);

  std::vector<HalfEdgeId> halves;
  for (VertexId v : g.vertices())
    for (HalfEdgeId h : g.halfEdgesAt(v)) halves.push_back(h);
  std::sort(halves.begin(), halves.end());
  int H = static_cast<int>(halves.size());
  std::map<HalfEdgeId, int> toLocal;
  for (int i = 0; i < H; ++i) toLocal[halves[i]] = i;
  std::vector<std::vector<int>> atVert;
  std::vector<int> vertIdx(H);
  {
    std::map<VertexId, int> vidx;
    for (VertexId v : g.vertices()) vidx[v] = static_cast<int>(vidx.size());
    atVert.resize(vidx.size());
    for (int i = 0; i < H; ++i) {
      vertIdx[i] = vidx.at(g.vertexOf(halves[i]));
      atVert[vertIdx[i]].push_back(i);
    }
  }
  std::vector<int> partner(H, -1);

  std::function<void(int)> rec = [&](int from) {
    while (from < H && partner[from] != -1) ++from;
    if (from == H) {
      TransitionSystem ts;
      for (int i = 0; i < H; ++i)
        if (partner[i] > i)
          ts.pairs.push_back(
              makeTransition(g, halves[i], halves[partner[i]]));
      fn(ts);
      return;
    }
    int x = from;
    for (int y : atVert[vertIdx[x]]) {
      if (y == x || partner[y] != -1) continue;
      partner[x] = y;
      partner[y] = x;
      rec(x + 1);
      partner[x] = -1;
      partner[y] = -1;
    }
  };
  rec(0);
}

std::vector<Circuit> decompositionOf(const SignedGraph& g,
                                     const TransitionSystem& ts) {
  std::map<HalfEdgeId, HalfEdgeId> partner;
  for (const Transition& t : ts.pairs) {
    if (g.vertexOf(t.lo) != g.vertexOf(t.hi))
      throw std::invalid_argument("transition joins different vertices");
    if (partner.count(t.lo) || partner.count(t.hi))
      throw std::invalid_argument("half-edge paired twice");
    partner[t.lo] = t.hi;
    partner[t.hi] = t.lo;
  }
  for (VertexId v : g.vertices())
    for (HalfEdgeId h : g.halfEdgesAt(v))
      if (!partner.count(h))
        throw std::invalid_argument("half-edge left unpaired");

  std::vector<Circuit> out;
  std::set<HalfEdgeId> visited;
  for (VertexId v : g.vertices()) {
    for (HalfEdgeId h : g.halfEdgesAt(v)) {
      if (visited.count(h)) continue;
      std::vector<Arc> arcs;
      HalfEdgeId cur = h;
      do {
        visited.insert(cur);
        visited.insert(g.mate(cur));
        arcs.push_back(Arc{cur, g.mate(cur)});
        cur = partner.at(g.mate(cur));
      } while (cur != h);
      out.push_back(canonicalCircuit(g, Circuit{std::move(arcs)}));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Circuit& a, const Circuit& b) {
    return circuitKey(g, a) < circuitKey(g, b);
  });
  return out;
}

int countNonZero(const SignedGraph& g, const Flooding& f) {
  int nz = 0;
  for (const Circuit& c : f.circuits) nz += circuitWeight(g, c);
  return nz;
}

void validateFlooding(const RESGraph& g, const Flooding& f) {
  int degRoot = g.graph.degree(g.root);
  if (static_cast<int>(f.circuits.size()) * 2 != degRoot)
    throw CheckFailure("flooding has wrong number of circuits");
  std::set<EdgeId> used;
  for (const Circuit& c : f.circuits) {
    validateCircuit(g.graph, c);
    if (g.graph.vertexOf(c.arcs.front().tail) != g.root ||
        g.graph.vertexOf(c.arcs.back().head) != g.root)
      throw CheckFailure("flooding circuit is not rooted");
    int rootHalves = 0;
    for (const Arc& a : c.arcs) {
      rootHalves += g.graph.vertexOf(a.tail) == g.root;
      rootHalves += g.graph.vertexOf(a.head) == g.root;
      if (!used.insert(g.graph.edgeOf(a.tail)).second)
        throw CheckFailure("flooding circuits share an edge");
    }
    if (rootHalves != 2)
      throw CheckFailure("flooding circuit visits the root more than once");
  }
  if (used.size() != g.graph.edgeCount())
    throw CheckFailure("flooding does not cover every edge");
}

void forEachFlooding(const RESGraph& g, std::uint64_t cap,
                     const std::function<void(const Flooding&)>& fn) {
  int degRoot = g.graph.degree(g.root);
  forEachTransitionSystem(
      g.graph, cap, [&](const TransitionSystem& ts) {
        std::map<HalfEdgeId, HalfEdgeId> partner;
        for (const Transition& t : ts.pairs) {
          partner[t.lo] = t.hi;
          partner[t.hi] = t.lo;
        }
        std::vector<Circuit> rooted;
        std::set<HalfEdgeId> visited;
        for (VertexId v : g.graph.vertices()) {
          for (HalfEdgeId h : g.graph.halfEdgesAt(v)) {
            if (visited.count(h)) continue;
            std::vector<Arc> arcs;
            int rootHalves = 0;
            HalfEdgeId cur = h;
            do {
              visited.insert(cur);
              visited.insert(g.graph.mate(cur));
              rootHalves +=
                  static_cast<int>(g.graph.vertexOf(cur) == g.root) +
                  static_cast<int>(g.graph.vertexOf(g.graph.mate(cur)) ==
                                   g.root);
              arcs.push_back(Arc{cur, g.graph.mate(cur)});
              cur = partner.at(g.graph.mate(cur));
            } while (cur != h);
            if (rootHalves != 2) return;  // not a flooding
            std::size_t start = 0;
            for (std::size_t k = 0; k < arcs.size(); ++k)
              if (g.graph.vertexOf(arcs[k].tail) == g.root) {
                start = k;
                break;
              }
            Circuit c;
            c.arcs.insert(c.arcs.end(), arcs.begin() + start, arcs.end());
            c.arcs.insert(c.arcs.end(), arcs.begin(), arcs.begin() + start);
            rooted.push_back(canonicalRootedCircuit(g.graph, c));
          }
        }
        if (static_cast<int>(rooted.size()) * 2 != degRoot) return;
        std::sort(rooted.begin(), rooted.end(),
                  [&](const Circuit& a, const Circuit& b) {
                    return circuitKey(g.graph, a) < circuitKey(g.graph, b);
                  });
        fn(Flooding{std::move(rooted)});
      });
}

SolveOutcome solveScan(const RESGraph& g, const SolveOptions& opts) {
  requireRES(g.graph, g.root);
  std::uint64_t total = countTransitionSystems(g.graph);
  if (total > opts.cap) throw CapExceeded(total, opts.cap);

  Scan scan(g, opts);
  Scan::Result merged;
  int threads = std::max(1, opts.threads);
  if (threads == 1 || total < 4096 || scan.pairingsTotal() <= 4) {
    merged = scan.run();
  } else {
    // Partition the pairing search tree by DFS prefixes; results merge in
    // prefix order, so the outcome is identical to the sequential scan.
    int depth = 1;
    std::vector<std::vector<std::pair<int, int>>> tasks;
    while (depth <= 4 && depth < scan.pairingsTotal()) {
      tasks = scan.prefixes(depth);
      if (static_cast<int>(tasks.size()) >= threads * 8) break;
      ++depth;
    }
    if (tasks.empty()) {
      merged = scan.run();
    } else {
      std::vector<Scan::Result> results(tasks.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        Scan local(g, opts);
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          results[i] = local.runPrefix(tasks[i]);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      for (auto& r : results) mergeInto(merged, std::move(r), opts.collectOptimal);
    }
  }

  SolveOutcome out;
  out.report.enumeratedSystems = total;
  out.report.floodingNumber = std::max(0, merged.bestFlood);
  if (merged.bestFloodObj) out.report.witnessFlooding = *merged.bestFloodObj;
  if (opts.needDirect) {
    out.report.directDefinitionNumber =
        static_cast<int>(std::max<long long>(0, merged.bestDirect));
    if (merged.bestDirectObj)
      out.report.witnessDecomposition = *merged.bestDirectObj;
  }
  if (out.report.witnessFlooding)
    validateFlooding(g, *out.report.witnessFlooding);
  out.optimalFloodings = std::move(merged.optimal);
  return out;
}

SolveReport solve(const RESGraph& g, std::uint64_t cap, int threads) {
  SolveOptions opts;
  opts.cap = cap;
  opts.threads = threads;
  return solveScan(g, opts).report;
}

int floodingNumber(const RESGraph& g, std::uint64_t cap, int threads) {
  SolveOptions opts;
  opts.cap = cap;
  opts.needDirect = false;
  opts.threads = threads;
  return solveScan(g, opts).report.floodingNumber;
}

int directDefinitionNumber(const RESGraph& g, std::uint64_t cap, int threads) {
  SolveOptions opts;
  opts.cap = cap;
  opts.threads = threads;
  return *solveScan(g, opts).report.directDefinitionNumber;
}

namespace {

// Local edge-indexed view used by the subset searches.
struct EdgeView {
  std::vector<EdgeId> eids;
  std::vector<int> u, v;      // dense endpoint indices
  std::vector<int> w;
  std::vector<int> rootHalves;  // 2 for a loop at the root, 1 if incident
  int nVerts = 0;
};

EdgeView makeEdgeView(const SignedGraph& g, VertexId root) {
  EdgeView view;
  std::map<VertexId, int> vidx;
  for (VertexId x : g.vertices()) vidx[x] = static_cast<int>(vidx.size());
  view.nVerts = static_cast<int>(vidx.size());
  for (EdgeId e : g.edgeIds()) {
    auto [a, b] = g.ends(e);
    view.eids.push_back(e);
    view.u.push_back(vidx.at(a));
    view.v.push_back(vidx.at(b));
    view.w.push_back(g.weight(e));
    view.rootHalves.push_back(static_cast<int>(a == root) +
                              static_cast<int>(b == root));
  }
  return view;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// True iff the edges of mask form one connected even-degree subgraph.
bool isCircuitEdgeSet(const EdgeView& view, std::uint32_t mask) {
  if (mask == 0) return false;
  std::vector<int> degPar(view.nVerts, 0);
  Dsu dsu(view.nVerts);
  int first = -1;
  for (std::size_t i = 0; i < view.eids.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (first < 0) first = view.u[i];
    degPar[view.u[i]] ^= 1;
    degPar[view.v[i]] ^= 1;
    dsu.unite(view.u[i], view.v[i]);
  }
  for (int d : degPar)
    if (d) return false;
  int comp = dsu.find(first);
  for (std::size_t i = 0; i < view.eids.size(); ++i)
    if ((mask & (1u << i)) && dsu.find(view.u[i]) != comp) return false;
  return true;
}

}  // namespace

int packingNumber(const RESGraph& g, std::uint64_t cap) {
  requireRES(g.graph, g.root);
  EdgeView view = makeEdgeView(g.graph, g.root);
  std::size_t m = view.eids.size();
  if (m >= 31 || (std::uint64_t{1} << m) > cap)
    throw CapExceeded(m >= 63 ? std::numeric_limits<std::uint64_t>::max()
                              : (std::uint64_t{1} << m),
                      cap);

  // All edge sets of non-zero circuits hitting the root.
  std::vector<std::uint32_t> family;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    int wsum = 0;
    bool hitsRoot = false;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        wsum ^= view.w[i];
        hitsRoot = hitsRoot || view.rootHalves[i] > 0;
      }
    if (wsum == 1 && hitsRoot && isCircuitEdgeSet(view, mask))
      family.push_back(mask);
  }

  auto rootBudget = [&](std::uint32_t avail) {
    int halves = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (avail & (1u << i)) halves += view.rootHalves[i];
    return halves / 2;
  };

  std::unordered_map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t)> best = [&](std::uint32_t avail) -> int {
    if (avail == 0) return 0;
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    int out = 0;
    if (rootBudget(avail) > 0) {
      for (std::uint32_t f : family) {
        if ((f & avail) != f) continue;
        out = std::max(out, 1 + best(avail & ~f));
      }
    }
    memo[avail] = out;
    return out;
  };
  return best(m == 0 ? 0u : static_cast<std::uint32_t>((1ull << m) - 1));
}

bool hasNonzeroRootCircuit(const SignedGraph& g, VertexId root) {
  if (!g.hasVertex(root)) throw std::invalid_argument("unknown root");
  EdgeView view = makeEdgeView(g, root);
  std::size_t m = view.eids.size();
  if (m > 24) throw CapExceeded(std::uint64_t{1} << m, std::uint64_t{1} << 24);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    int wsum = 0;
    bool hitsRoot = false;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        wsum ^= view.w[i];
        hitsRoot = hitsRoot || view.rootHalves[i] > 0;
      }
    if (wsum == 1 && hitsRoot && isCircuitEdgeSet(view, mask)) return true;
  }
  return false;
}

}  // namespace flood
