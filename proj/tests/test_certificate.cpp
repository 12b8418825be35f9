#include <doctest.h>

#include <algorithm>
#include <set>

#include "indpoly/certificate.hpp"
#include "indpoly/counting.hpp"

using namespace indpoly;

TEST_SUITE("certificate") {

TEST_CASE("base nodes") {
    for (BaseGraph b : {BaseGraph::K1, BaseGraph::K2, BaseGraph::C6}) {
        CertNodePtr node = cert_base(b);
        CHECK(node->claimed_bracket == base_bracket(b));
        CHECK(node->claimed_phi == base_phi(b));
        CHECK(predicted_bracket(*node) == node->claimed_bracket);
        Realization real = realize(*node);
        CHECK(real.rooted.graph.vertex_count() == realized_size(*node));
        CHECK(compute_bracket(real.rooted) == node->claimed_bracket);
    }
    CHECK(base_phi(BaseGraph::C6) == 1);
    CHECK(base_phi(BaseGraph::K2) == 0);
    CHECK(realize(*cert_base(BaseGraph::C6)).hexagons.size() == 1);
    CHECK(realize(*cert_base(BaseGraph::K2)).hexagons.empty());
}

TEST_CASE("builders compute claims bottom-up") {
    CertNodePtr tree = cert_paste(cert_extend(1, cert_base(BaseGraph::C6)),
                                  cert_extend(2, cert_base(BaseGraph::C6)));
    // <1,2,1> (x) <-1,1,2> = <0, 2, 2>
    CHECK(tree->claimed_bracket == make_bracket(2, 2));
    CHECK(tree->claimed_phi == 2);
    CHECK(predicted_phi(*tree) == 2);
    CHECK(realized_size(*tree) == 7 + 8 - 1);

    Realization real = realize(*tree);
    CHECK(real.rooted.graph.vertex_count() == 14);
    CHECK(real.hexagons.size() == 2);
    CHECK(compute_bracket(real.rooted) == tree->claimed_bracket);
    CHECK(is_connected(real.rooted.graph));
}

TEST_CASE("builder validation") {
    CHECK_THROWS_AS(cert_extend(-1, cert_base(BaseGraph::C6)), std::invalid_argument);
    CHECK_THROWS_AS(cert_extend(2, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(cert_paste(cert_base(BaseGraph::K1), cert_base(BaseGraph::C6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cert_paste(nullptr, cert_base(BaseGraph::C6)), std::invalid_argument);
    CHECK_NOTHROW(cert_paste(cert_base(BaseGraph::K2), cert_base(BaseGraph::K2)));
}

TEST_CASE("realization tracks hexagons through relabeling") {
    // Two extended hexagons pasted, then extended again.
    CertNodePtr tree = cert_extend(
        3, cert_paste(cert_extend(2, cert_base(BaseGraph::C6)),
                      cert_extend(1, cert_base(BaseGraph::C6))));
    Realization real = realize(*tree);
    const Graph& g = real.rooted.graph;
    REQUIRE(real.hexagons.size() == 2);
    std::set<int> seen;
    for (const auto& hex : real.hexagons) {
        REQUIRE(hex.size() == 6);
        for (size_t i = 0; i < 6; ++i) {
            CHECK(g.has_edge(hex[i], hex[(i + 1) % 6]));
            CHECK(!seen.count(hex[i]));
            seen.insert(hex[i]);
        }
        // a hexagon vertex has degree 2 or 3 here (cycle + one attachment)
        for (int v : hex) CHECK(g.degree(v) <= 3);
    }
    CHECK(realized_size(*tree) == g.vertex_count());
}

TEST_CASE("json round-trip preserves everything") {
    CertNodePtr tree = cert_extend(
        1, cert_paste(cert_extend(2, cert_base(BaseGraph::C6)),
                      cert_extend(2, cert_base(BaseGraph::K2))));
    Certificate cert{tree, 1, BigInt(-2)};
    std::string text = certificate_to_json(cert);
    CHECK(text.find("cert-v1") != std::string::npos);

    Certificate back = certificate_from_json(text);
    CHECK(back.k == 1);
    CHECK(back.q == -2);
    CHECK(certificate_to_json(back) == text);  // canonical re-serialization
    CHECK(predicted_bracket(*back.root) == predicted_bracket(*tree));
    CHECK(realize(back).rooted.graph == realize(cert).rooted.graph);
}

TEST_CASE("parser keeps tampered claims for verification to catch") {
    Certificate cert{cert_extend(1, cert_base(BaseGraph::C6)), 1, BigInt(1)};
    std::string text = certificate_to_json(cert);
    // claimed bracket of the root is ["1","2","1"]; forge the value entry
    size_t pos = text.find("\"1\",");
    REQUIRE(pos != std::string::npos);
    std::string forged = text.substr(0, pos) + "\"7\"," + text.substr(pos + 4);
    Certificate back = certificate_from_json(forged);
    CHECK(back.root->claimed_bracket.value == 7);
    CHECK(!back.root->claimed_bracket.consistent());
}

TEST_CASE("parser accepts plain integers for convenience") {
    std::string text = R"({
      "format": "cert-v1",
      "target": {"k": 1, "q": 2},
      "root": {"kind": "base", "base": "C6", "bracket": [2, 1, -1], "phi": 1}
    })";
    Certificate cert = certificate_from_json(text);
    CHECK(cert.q == 2);
    CHECK(cert.root->claimed_bracket == bracket_c6());
}

TEST_CASE("parse rejections") {
    auto reject = [](const std::string& text) {
        CHECK_THROWS_AS(certificate_from_json(text), CertParseError);
    };
    reject("not json at all");
    reject("[]");
    reject(R"({"format": "cert-v2", "target": {"k":1,"q":"1"}, "root": {}})");
    reject(R"({"target": {"k":1,"q":"1"}, "root": {}})");  // no format
    reject(R"({"format": "cert-v1", "root": {}})");        // no target
    reject(R"({"format": "cert-v1", "target": {"k":1,"q":"1"}})");  // no root
    // unknown kind
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"mystery","bracket":["0","1","1"],"phi":0}})");
    // extend without child
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"extend","ell":1,"children":[],"bracket":["0","1","1"],"phi":0}})");
    // paste with one child
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"paste","children":[
                {"kind":"base","base":"K2","bracket":["-1","0","1"],"phi":0}
              ],"bracket":["0","1","1"],"phi":0}})");
    // negative ell
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"extend","ell":-2,"children":[
                {"kind":"base","base":"K2","bracket":["-1","0","1"],"phi":0}
              ],"bracket":["0","1","1"],"phi":0}})");
    // bad base name
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"base","base":"C5","bracket":["0","1","1"],"phi":0}})");
    // bracket with wrong arity
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"base","base":"K1","bracket":["0","1"],"phi":0}})");
    // non-numeric bracket entry
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"base","base":"K1","bracket":["0","x","1"],"phi":0}})");
    // missing phi
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"1"},
              "root":{"kind":"base","base":"K1","bracket":["0","1","1"]}})");
    // garbage q
    reject(R"({"format":"cert-v1","target":{"k":1,"q":"12a"},
              "root":{"kind":"base","base":"K1","bracket":["0","1","1"],"phi":0}})");
}

TEST_CASE("big values serialize as decimal strings") {
    // pasting extended hexagons doubles the a-entry each time:
    // value after 40 hexagons is 2^40 - 1, well past 64 bits of headroom later
    CertNodePtr tree = cert_extend(1, cert_base(BaseGraph::C6));
    for (int i = 1; i < 40; ++i)
        tree = cert_paste(tree, cert_extend(1, cert_base(BaseGraph::C6)));
    Certificate cert{tree, 40, tree->claimed_bracket.value};
    CHECK(cert.q == pow2(40) - 1);
    CHECK(tree->claimed_phi == 40);
    Certificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.q == pow2(40) - 1);
    CHECK(back.root->claimed_bracket.value == pow2(40) - 1);
    CHECK(back.root->claimed_bracket == tree->claimed_bracket);
}

}  // TEST_SUITE
