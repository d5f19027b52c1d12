#include "flood/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "flood/solver.hpp"
#include "json.hpp"

namespace flood {

namespace {

using Json = nlohmann::ordered_json;

}  // namespace

Instance parseInstance(const std::string& text) {
  Json doc = Json::parse(text);
  if (!doc.contains("schema") || doc["schema"].get<int>() != 1)
    throw std::invalid_argument("unsupported schema version");

  Instance inst;
  if (doc.contains("name")) inst.name = doc["name"].get<std::string>();

  std::map<std::string, VertexId> byName;
  for (const auto& v : doc.at("vertices")) {
    std::string name = v.get<std::string>();
    if (byName.count(name))
      throw std::invalid_argument("duplicate vertex name: " + name);
    VertexId id = static_cast<VertexId>(inst.vertexNames.size());
    byName[name] = id;
    inst.vertexNames.push_back(name);
  }

  std::string rootName = doc.at("root").get<std::string>();
  auto rootIt = byName.find(rootName);
  if (rootIt == byName.end())
    throw std::invalid_argument("unknown root: " + rootName);

  SignedGraph g;
  for (VertexId v = 0; v < static_cast<VertexId>(inst.vertexNames.size()); ++v)
    g.addVertex(v);
  std::set<EdgeId> seenIds;
  for (const auto& e : doc.at("edges")) {
    EdgeId id = e.at("id").get<EdgeId>();
    if (id < 0 || !seenIds.insert(id).second)
      throw std::invalid_argument("duplicate or negative edge id: " +
                                  std::to_string(id));
    const auto& ends = e.at("ends");
    if (ends.size() != 2) throw std::invalid_argument("edge needs two ends");
    auto u = byName.find(ends[0].get<std::string>());
    auto v = byName.find(ends[1].get<std::string>());
    if (u == byName.end() || v == byName.end())
      throw std::invalid_argument("edge end is not a vertex");
    int w = e.at("weight").get<int>();
    g.addEdgeExplicit(id, 2 * id, u->second, 2 * id + 1, v->second, w);
  }

  try {
    requireRES(g, rootIt->second);
  } catch (const NotEulerianError& err) {
    std::string msg = "instance is not Eulerian: ";
    if (err.disconnected()) {
      msg += "not connected";
    } else {
      msg += "odd degree at";
      for (VertexId v : err.offendingVertices())
        msg += " " + inst.vertexNames[v];
    }
    throw NotEulerianError(msg, err.offendingVertices(), err.disconnected());
  }
  inst.res = RESGraph{std::move(g), rootIt->second};
  return inst;
}

std::string emitInstance(const Instance& inst) {
  Json doc;
  doc["schema"] = 1;
  doc["name"] = inst.name;
  doc["vertices"] = inst.vertexNames;
  doc["root"] = inst.vertexNames.at(inst.res.root);
  Json edges = Json::array();
  for (EdgeId e : inst.res.graph.edgeIds()) {
    auto [lo, hi] = inst.res.graph.halves(e);
    Json rec;
    rec["id"] = e;
    rec["ends"] = {inst.vertexNames.at(inst.res.graph.vertexOf(lo)),
                   inst.vertexNames.at(inst.res.graph.vertexOf(hi))};
    rec["weight"] = inst.res.graph.weight(e);
    edges.push_back(std::move(rec));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string instanceDigest(const Instance& inst) {
  std::string text = emitInstance(inst);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string arcToken(const SignedGraph& g, const Arc& a) {
  auto [e, dir] = arcKey(g, a);
  return std::to_string(e) + (dir == 0 ? ":+" : ":-");
}

Instance genInstance(int nVertices, int nEdges, std::uint64_t seed) {
  if (nVertices < 1) throw std::invalid_argument("need at least one vertex");
  Rng rng(seed);
  SignedGraph g;
  for (VertexId v = 0; v < nVertices; ++v) g.addVertex(v);
  VertexId root = rng.uniform(0, nVertices - 1);

  std::vector<std::pair<VertexId, VertexId>> walkEdges;
  // First walk covers every vertex so the overlay is connected.
  if (nVertices == 1) {
    walkEdges.push_back({root, root});
  } else {
    std::vector<VertexId> order;
    for (VertexId v = 0; v < nVertices; ++v)
      if (v != root) order.push_back(v);
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
      std::swap(order[i], order[rng.uniform(0, i)]);
    VertexId prev = root;
    for (VertexId v : order) {
      walkEdges.push_back({prev, v});
      prev = v;
    }
    walkEdges.push_back({prev, root});
  }
  // Further closed walks from the root until the edge budget is met.
  while (static_cast<int>(walkEdges.size()) < nEdges) {
    int remaining = nEdges - static_cast<int>(walkEdges.size());
    if (remaining == 1) {
      walkEdges.push_back({root, root});
      continue;
    }
    int len = 2 + rng.uniform(0, std::min(remaining, 4) - 2);
    VertexId prev = root;
    for (int i = 0; i + 1 < len; ++i) {
      VertexId nextV = rng.uniform(0, nVertices - 1);
      walkEdges.push_back({prev, nextV});
      prev = nextV;
    }
    walkEdges.push_back({prev, root});
  }
  for (auto [u, v] : walkEdges) g.addEdge(u, v, 0);
  for (EdgeId e : g.edgeIds()) g.setWeight(e, rng.bit());

  Instance inst;
  inst.name = "gen-n" + std::to_string(nVertices) + "-m" +
              std::to_string(nEdges) + "-s" + std::to_string(seed);
  for (VertexId v = 0; v < nVertices; ++v)
    inst.vertexNames.push_back("v" + std::to_string(v));
  requireRES(g, root);
  inst.res = RESGraph{std::move(g), root};
  return inst;
}

Instance campaignInstance(std::uint64_t seed, int index,
                          const CampaignSpec& spec) {
  // Split the stream per (seed, index) so instances are independent of how
  // many of them a command requests.
  std::uint64_t mixed = seed * 0x9e3779b97f4a7c15ull +
                        static_cast<std::uint64_t>(index) * 0xbf58476d1ce4e5b9ull;
  for (int attempt = 0;; ++attempt) {
    Rng rng(mixed + static_cast<std::uint64_t>(attempt) * 0x94d049bb133111ebull);
    int nV = rng.uniform(1, spec.maxVertices);
    int nE = rng.uniform(std::min(nV, spec.maxEdges), spec.maxEdges);
    Instance inst = genInstance(nV, nE, rng.next());
    std::uint64_t systems = countTransitionSystems(inst.res.graph);
    int degRoot = inst.res.graph.degree(inst.res.root);
    if (systems > spec.systemCap) continue;
    if (systems * static_cast<std::uint64_t>(degRoot + 1) >
        10 * spec.systemCap)
      continue;
    return inst;
  }
}

}  // namespace flood
