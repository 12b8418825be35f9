#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

// Outcome of min_decycling. When exact, phi is the decycling number and
// witness is a minimum decycling set (sorted). When a budget cap was hit,
// exact is false, phi holds the cap, and the meaning is "decycling number
// exceeds phi"; witness is empty.
struct DecyclingResult {
    bool exact = true;
    int phi = 0;
    std::vector<int> witness;
};

// Exact minimum decycling set (feedback vertex set) by iterative deepening:
// for each component, try sizes 0, 1, ... and branch on the vertices of a
// shortest cycle (every decycling set must hit every cycle). Deterministic.
// With budget_cap set, gives up once no solution within the cap exists and
// returns an inexact lower-bound result instead of searching forever.
DecyclingResult min_decycling(const Graph& g,
                              std::optional<int> budget_cap = std::nullopt);

// True iff deleting s (valid labels, duplicates tolerated) leaves a forest.
bool is_decycling_set(const Graph& g, std::span<const int> s);

// Shortest cycle of g (fewest vertices), as a cyclically ordered vertex list;
// nullopt for forests. Deterministic tie-break by BFS start order.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

// Checkable proof that the decycling number equals k: k vertex-disjoint
// cycles force phi >= k, and a decycling set of size k gives phi <= k.
struct PhiCertificate {
    std::vector<std::vector<int>> disjoint_cycles;  // each cyclically ordered
    std::vector<int> decycling_set;                 // one vertex per cycle
};

struct CheckResult {
    bool ok = true;
    std::string reason;  // empty when ok
};

// Validates a PhiCertificate against g: each listed cycle is a real cycle,
// the cycles are pairwise vertex-disjoint, |decycling_set| equals the number
// of cycles, and removing the set leaves a forest. Runs in polynomial time.
CheckResult check_phi_certificate(const Graph& g, const PhiCertificate& cert);

}  // namespace indpoly
