#include "indpoly/decycling.hpp"

#include <algorithm>
#include <queue>

namespace indpoly {

namespace {

// Shortest cycle restricted to alive vertices, empty if none. All-starts BFS:
// for every non-tree edge met, the two tree paths plus that edge close a
// cycle; taking the best over all starts yields a genuinely shortest one.
// Iteration order (starts ascending, BFS order, neighbors ascending) with
// strict improvement makes the result deterministic.
std::vector<int> shortest_cycle_masked(const std::vector<std::vector<int>>& adj,
                                       const std::vector<char>& alive) {
    int n = static_cast<int>(adj.size());
    std::vector<int> best;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        if (!alive[s]) continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (!alive[w]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    // Candidate cycle: tree path from u, tree path from w,
                    // joined at their lowest common ancestor, closed by (u,w).
                    std::vector<int> pu{u};
                    while (parent[pu.back()] >= 0) pu.push_back(parent[pu.back()]);
                    std::vector<char> on_pu(n, 0);
                    for (int x : pu) on_pu[x] = 1;
                    std::vector<int> pw{w};
                    while (!on_pu[pw.back()]) pw.push_back(parent[pw.back()]);
                    int lca = pw.back();
                    std::vector<int> cycle;
                    for (int x : pu) {
                        if (x == lca) break;
                        cycle.push_back(x);
                    }
                    cycle.push_back(lca);
                    // then down the other branch to w (empty when lca == w)
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
                    if (best.empty() || cycle.size() < best.size()) {
                        best = std::move(cycle);
                        if (best.size() == 3) return best;
                    }
                }
            }
        }
    }
    return best;
}

bool search_decycling(const std::vector<std::vector<int>>& adj, std::vector<char>& alive,
                      int budget, std::vector<int>& chosen) {
    std::vector<int> cyc = shortest_cycle_masked(adj, alive);
    if (cyc.empty()) return true;
    if (budget == 0) return false;
    // Greedy vertex-disjoint cycle packing starting from this cycle. Each
    // packed cycle needs its own decycling vertex, so a packing larger than
    // the budget proves this subtree hopeless; without it, the iterative
    // deepening spends exponential time refuting budgets below phi on graphs
    // with many disjoint cycles.
    {
        std::vector<char> packed = alive;
        std::vector<int> cur = cyc;
        int need = 0;
        while (!cur.empty()) {
            if (++need > budget) return false;
            for (int v : cur) packed[v] = 0;
            cur = shortest_cycle_masked(adj, packed);
        }
    }
    // Any decycling set must contain a vertex of this cycle; branch on each.
    for (int v : cyc) {
        alive[v] = 0;
        chosen.push_back(v);
        if (search_decycling(adj, alive, budget - 1, chosen)) {
            alive[v] = 1;
            return true;
        }
        chosen.pop_back();
        alive[v] = 1;
    }
    return false;
}

std::vector<std::vector<int>> adjacency_of(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<int> cyc = shortest_cycle_masked(adjacency_of(g), alive);
    if (cyc.empty()) return std::nullopt;
    return cyc;
}

DecyclingResult min_decycling(const Graph& g, std::optional<int> budget_cap) {
    if (budget_cap && *budget_cap < 0) throw std::invalid_argument("budget cap must be >= 0");
    int total = 0;
    std::vector<int> witness;
    for (const auto& comp : components(g)) {
        auto adj = adjacency_of(comp.graph);
        std::vector<char> alive(comp.graph.vertex_count(), 1);
        int limit = comp.graph.vertex_count();
        if (budget_cap) limit = std::min(limit, *budget_cap - total);
        bool found = false;
        for (int t = 0; t <= limit; ++t) {
            std::vector<int> chosen;
            if (search_decycling(adj, alive, t, chosen)) {
                for (int v : chosen) witness.push_back(comp.original_labels[v]);
                total += t;
                found = true;
                break;
            }
        }
        if (!found) {
            // Even the full remaining budget cannot decycle this component.
            DecyclingResult out;
            out.exact = false;
            out.phi = *budget_cap;
            return out;
        }
    }
    std::sort(witness.begin(), witness.end());
    return DecyclingResult{true, total, std::move(witness)};
}

bool is_decycling_set(const Graph& g, std::span<const int> s) {
    return is_acyclic(delete_vertices(g, s));
}

CheckResult check_phi_certificate(const Graph& g, const PhiCertificate& cert) {
    auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
    int n = g.vertex_count();
    std::vector<int> owner(n, -1);  // which cycle claimed each vertex
    for (int i = 0; i < static_cast<int>(cert.disjoint_cycles.size()); ++i) {
        const auto& cyc = cert.disjoint_cycles[i];
        if (cyc.size() < 3)
            return fail("cycle " + std::to_string(i) + " has fewer than 3 vertices");
        for (int v : cyc) {
            if (v < 0 || v >= n)
                return fail("cycle " + std::to_string(i) + " lists invalid vertex " +
                            std::to_string(v));
            if (owner[v] == i)
                return fail("cycle " + std::to_string(i) + " repeats vertex " + std::to_string(v));
            if (owner[v] >= 0)
                return fail("cycles " + std::to_string(owner[v]) + " and " + std::to_string(i) +
                            " share vertex " + std::to_string(v));
            owner[v] = i;
        }
        int len = static_cast<int>(cyc.size());
        for (int j = 0; j < len; ++j) {
            int u = cyc[j], w = cyc[(j + 1) % len];
            if (!g.has_edge(u, w))
                return fail("cycle " + std::to_string(i) + " needs missing edge (" +
                            std::to_string(u) + ", " + std::to_string(w) + ")");
        }
    }
    if (cert.decycling_set.size() != cert.disjoint_cycles.size())
        return fail("decycling set has " + std::to_string(cert.decycling_set.size()) +
                    " vertices but there are " + std::to_string(cert.disjoint_cycles.size()) +
                    " cycles");
    std::vector<char> in_set(n, 0);
    for (int v : cert.decycling_set) {
        if (v < 0 || v >= n)
            return fail("decycling set lists invalid vertex " + std::to_string(v));
        if (in_set[v]) return fail("decycling set repeats vertex " + std::to_string(v));
        in_set[v] = 1;
    }
    if (!is_decycling_set(g, cert.decycling_set))
        return fail("graph minus the decycling set still contains a cycle");
    return CheckResult{};
}

}  // namespace indpoly
