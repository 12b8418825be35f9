#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/bracket.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

enum class BaseGraph { K1, K2, C6 };

std::string base_graph_name(BaseGraph b);
Bracket base_bracket(BaseGraph b);
int base_phi(BaseGraph b);

// Node of a construction tree. Leaves are base rooted graphs; inner nodes are
// root extension (one child) or root pasting (two children). Every node
// carries the bracket and decycling number it claims for its subtree; for
// trees built through the builder functions those claims are computed, while
// trees loaded from a cert file carry whatever the file said (verification
// re-derives and compares).
struct CertNode;
using CertNodePtr = std::shared_ptr<const CertNode>;

struct CertNode {
    enum class Kind { Base, Extend, Paste };

    Kind kind = Kind::Base;
    BaseGraph base = BaseGraph::K1;    // Kind::Base only
    int ell = 0;                       // Kind::Extend only
    std::vector<CertNodePtr> children; // 0 / 1 / 2 by kind

    Bracket claimed_bracket;
    int claimed_phi = 0;
};

// Builders; claims are computed bottom-up. cert_extend requires ell >= 0;
// cert_paste requires both children to realize graphs with at least two
// vertices (pasting at a K1 would be a no-op that breaks bracket bookkeeping).
CertNodePtr cert_base(BaseGraph b);
CertNodePtr cert_extend(int ell, CertNodePtr child);
CertNodePtr cert_paste(CertNodePtr left, CertNodePtr right);

// Claims recomputed from the tree shape alone (ignoring stored claims).
Bracket predicted_bracket(const CertNode& node);
int predicted_phi(const CertNode& node);
long long realized_size(const CertNode& node);  // |V| of the realization

// Full certificate: a construction tree plus the target it claims to hit,
// namely a connected graph with decycling number k and I(G;-1) = q.
struct Certificate {
    CertNodePtr root;
    int k = 0;
    BigInt q;
};

// Rooted graph realized from a tree, with the 6-cycle of every C6 leaf
// tracked through relabeling. Synthesizer output always pastes at extension
// endpoints, so its hexagons end up vertex-disjoint; for arbitrary trees that
// is not guaranteed, and verification checks it instead of assuming it.
struct Realization {
    RootedGraph rooted;
    std::vector<std::vector<int>> hexagons;  // cyclic vertex lists
};

Realization realize(const CertNode& node);
Realization realize(const Certificate& cert);

// cert-v1 (de)serialization. JSON with decimal-string integers so values
// survive arbitrary magnitude; see README for the exact field layout.
struct CertParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace indpoly
