#include "doctest.h"
#include "flood/certify.hpp"
#include "flood/fixtures.hpp"
#include "flood/io.hpp"

using namespace flood;

TEST_CASE("oddComponents reports exact component parities") {
  Instance fig2 = fixture("FIG2");
  OddnessReport r = oddComponents(fig2.res, Shifting{{}}, {0});
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].verts == std::vector<VertexId>({1, 2, 3, 4}));
  CHECK(r.components[0].cutSize == 8);
  CHECK(r.components[0].nonZeroCount == 5);
  CHECK(r.components[0].isOdd);
  CHECK(r.oddCount == 1);

  OddnessReport full =
      oddComponents(fig2.res, Shifting{{}}, fig2.res.graph.vertices());
  CHECK(full.components.empty());

  Instance d11 = fixture("DIGON11");
  OddnessReport rd = oddComponents(d11.res, Shifting{{}}, {0});
  REQUIRE(rd.components.size() == 1);
  CHECK(rd.components[0].cutSize == 2);
  CHECK(rd.components[0].nonZeroCount == 2);
  CHECK(rd.components[0].isOdd);

  CHECK_THROWS_AS(oddComponents(fig2.res, Shifting{{}}, {1}),
                  std::invalid_argument);
}

TEST_CASE("certificateValue evaluates the min-max expression") {
  CHECK(certificateValue(fixture("FIG2").res, Shifting{{}}, {0}) == 3);
  CHECK(certificateValue(fixture("LOOP1").res, Shifting{{}}, {0}) == 1);
  CHECK(certificateValue(fixture("DIGON11").res, Shifting{{}}, {0}) == 0);
}

TEST_CASE("bestCertificate minimizes over all shiftings and X") {
  CHECK(bestCertificate(fixture("FIG2").res).value == 3);
  CHECK(bestCertificate(fixture("LOOP0").res).value == 0);
  CHECK(bestCertificate(fixture("FIG7").res).value == 3);
  CHECK(bestCertificate(fixture("K5").res).value == 2);

  Certificate a = bestCertificate(fixture("FIG2").res);
  Certificate b = bestCertificate(fixture("FIG2").res);
  CHECK(a == b);
}

TEST_CASE("min-max equality and the easy direction") {
  for (const auto& name : fixtureNames()) {
    if (std::string(name) == "FIG7") continue;  // covered by acceptance
    MinMaxReport r = verifyMinMax(fixture(name).res);
    CAPTURE(name);
    CHECK(r.equal);
    CHECK(r.easyDirectionOk);
  }
  CHECK(verifyMinMax(fixture("LOOP1").res).lhs == 1);
  CHECK(verifyMinMax(fixture("LOOP1").res).rhs == 1);

  for (int i = 0; i < 30; ++i) {
    Instance inst = campaignInstance(13, i);
    CAPTURE(inst.name);
    MinMaxReport r = verifyMinMax(inst.res);
    CHECK(r.equal);
    CHECK(r.easyDirectionOk);
  }
}

TEST_CASE("shifting outside X never changes the value") {
  for (const auto& name : {"TRI", "FIG2", "K5", "FIG7"}) {
    const RESGraph& res = fixture(name).res;
    std::vector<VertexId> X{res.root};
    for (VertexId v : res.graph.vertices()) {
      if (v == res.root || v == res.graph.vertices().back()) continue;
      X.push_back(v);
    }
    std::sort(X.begin(), X.end());
    VertexId outside = res.graph.vertices().back();
    for (const auto& base :
         {std::vector<VertexId>{}, std::vector<VertexId>{X[1]}}) {
      Shifting a = Shifting::canonical(res, base);
      std::vector<VertexId> plus = base;
      plus.push_back(outside);
      Shifting b = Shifting::canonical(res, plus);
      CHECK(certificateValue(res, a, X) == certificateValue(res, b, X));
    }
  }
}

TEST_CASE("a shift set and its complement induce the same signature") {
  for (const auto& name : {"TRI", "FIG2", "K5"}) {
    const RESGraph& res = fixture(name).res;
    const auto& verts = res.graph.vertices();
    for (std::uint32_t mask = 0; mask < (1u << verts.size()); ++mask) {
      std::vector<VertexId> A, comp;
      for (std::size_t i = 0; i < verts.size(); ++i)
        (mask & (1u << i) ? A : comp).push_back(verts[i]);
      SignedGraph viaA = res.graph;
      SignedGraph viaComp = res.graph;
      for (EdgeId e : res.graph.edgeIds()) {
        if (res.graph.isLoop(e)) continue;
        auto [u, v] = res.graph.ends(e);
        auto flips = [&](const std::vector<VertexId>& s) {
          return static_cast<int>(std::count(s.begin(), s.end(), u)) +
                 static_cast<int>(std::count(s.begin(), s.end(), v));
        };
        if (flips(A) % 2) viaA.setWeight(e, 1 - viaA.weight(e));
        if (flips(comp) % 2) viaComp.setWeight(e, 1 - viaComp.weight(e));
      }
      CHECK(viaA == viaComp);
    }
  }
}

TEST_CASE("hitting sets break every non-zero root circuit") {
  Instance fig7 = fixture("FIG7");
  HittingSet hs = eppHittingSet(fig7.res);
  CHECK(static_cast<int>(hs.edges.size()) <= 3 * hs.cert.value);
  CHECK(hs.cert.value == 3);
  SignedGraph remaining = fig7.res.graph;
  for (EdgeId e : hs.edges) remaining.removeEdge(e);
  CHECK_FALSE(hasNonzeroRootCircuit(remaining, fig7.res.root));

  // Flooding number zero forces the empty hitting set.
  HittingSet empty = eppHittingSet(fixture("LOOP0").res);
  CHECK(empty.edges.empty());
  CHECK(empty.cert.value == 0);

  CHECK_THROWS_AS(eppHittingSet(fixture("DIGON10").res),
                  std::invalid_argument);
}
