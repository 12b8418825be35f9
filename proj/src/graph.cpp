#include "indpoly/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace indpoly {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(n_) + ")");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (r < 0 || r >= graph.vertex_count())
        throw std::invalid_argument("root " + std::to_string(r) + " out of range");
}

Graph make_path(int n) {
    if (n < 0) throw std::invalid_argument("path length must be >= 0");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph make_complete(int n) {
    if (n < 0) throw std::invalid_argument("order must be >= 0");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

// Builds the induced subgraph on the vertices where keep[v] is true, compacting
// labels in increasing order. Returns the new graph; if old_to_new is given it
// receives the label map (-1 for dropped vertices).
static Graph induced_on_kept(const Graph& g, const std::vector<char>& keep,
                             std::vector<int>* old_to_new = nullptr) {
    std::vector<int> map(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) map[v] = next++;
    std::vector<Edge> e;
    for (const auto& [u, v] : g.edges())
        if (map[u] >= 0 && map[v] >= 0) e.emplace_back(map[u], map[v]);
    if (old_to_new) *old_to_new = map;
    return Graph(next, std::move(e));
}

Graph delete_vertex(const Graph& g, int v) {
    int one[1] = {v};
    return delete_vertices(g, one);
}

Graph delete_vertices(const Graph& g, std::span<const int> vs) {
    std::vector<char> keep(g.vertex_count(), 1);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        keep[v] = 0;
    }
    return induced_on_kept(g, keep);
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
    std::vector<char> keep(g.vertex_count(), 1);
    keep[v] = 0;
    for (int w : g.neighbors(v)) keep[w] = 0;
    return induced_on_kept(g, keep);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int off = g.vertex_count();
    std::vector<Edge> e = g.edges();
    for (const auto& [u, v] : h.edges()) e.emplace_back(u + off, v + off);
    return Graph(off + h.vertex_count(), std::move(e));
}

// BFS labeling: component id per vertex, or -1 before visiting.
static std::vector<int> component_ids(const Graph& g, int* count_out) {
    std::vector<int> id(g.vertex_count(), -1);
    int count = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (id[s] >= 0) continue;
        id[s] = count;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (id[w] < 0) {
                    id[w] = count;
                    q.push(w);
                }
        }
        ++count;
    }
    if (count_out) *count_out = count;
    return id;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    int count = 0;
    component_ids(g, &count);
    return count == 1;
}

bool is_acyclic(const Graph& g) {
    int count = 0;
    component_ids(g, &count);
    // A graph is a forest iff |E| = |V| - #components.
    return g.edge_count() == g.vertex_count() - count;
}

std::vector<Component> components(const Graph& g) {
    int count = 0;
    std::vector<int> id = component_ids(g, &count);
    std::vector<Component> out(count);
    for (int v = 0; v < g.vertex_count(); ++v) out[id[v]].original_labels.push_back(v);
    std::vector<int> local(g.vertex_count());
    for (auto& comp : out)
        for (int i = 0; i < static_cast<int>(comp.original_labels.size()); ++i)
            local[comp.original_labels[i]] = i;
    std::vector<std::vector<Edge>> edges(count);
    for (const auto& [u, v] : g.edges()) edges[id[u]].emplace_back(local[u], local[v]);
    for (int c = 0; c < count; ++c)
        out[c].graph = Graph(static_cast<int>(out[c].original_labels.size()),
                             std::move(edges[c]));
    return out;
}

std::optional<std::vector<int>> find_cycle(const Graph& g) {
    // DFS with parent tracking; a back edge closes a cycle through the DFS
    // stack. Iterative to keep deep graphs off the call stack.
    int n = g.vertex_count();
    std::vector<int> parent(n, -2);  // -2 unvisited, -1 root
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            const auto& nb = g.neighbors(u);
            if (idx >= nb.size()) {
                stack.pop_back();
                continue;
            }
            int w = nb[idx++];
            if (parent[w] == -2) {
                parent[w] = u;
                stack.emplace_back(w, 0);
            } else if (w != parent[u]) {
                // Back edge u -> w. Since we return at the first one found, w
                // is always an ancestor on the current DFS stack: an edge into
                // a finished subtree would have been reported from the other
                // end while that subtree was active.
                std::vector<int> cycle{u};
                for (auto it = stack.rbegin() + 1; it != stack.rend(); ++it) {
                    cycle.push_back(it->first);
                    if (it->first == w) return cycle;
                }
                throw std::logic_error("find_cycle: back edge to non-ancestor");
            }
        }
    }
    return std::nullopt;
}

RootedGraph paste_with_maps(const RootedGraph& g, const RootedGraph& h, PasteMaps& maps) {
    int gn = g.graph.vertex_count();
    int hn = h.graph.vertex_count();
    maps.left.assign(gn, -1);
    maps.right.assign(hn, -1);
    for (int u = 0; u < gn; ++u)
        maps.left[u] = (u == g.root) ? 0 : (u < g.root ? u + 1 : u);
    int off = gn;  // right non-root vertices follow all left vertices
    for (int u = 0; u < hn; ++u)
        maps.right[u] = (u == h.root) ? 0 : off + (u < h.root ? u : u - 1);
    std::vector<Edge> e;
    for (const auto& [u, v] : g.graph.edges()) e.emplace_back(maps.left[u], maps.left[v]);
    for (const auto& [u, v] : h.graph.edges()) {
        Edge cand{std::min(maps.right[u], maps.right[v]), std::max(maps.right[u], maps.right[v])};
        e.push_back(cand);
    }
    // A root-incident edge present on both sides would collapse to the same
    // pasted edge; keep the result simple.
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return RootedGraph(Graph(gn + hn - 1, std::move(e)), 0);
}

RootedGraph paste(const RootedGraph& g, const RootedGraph& h) {
    PasteMaps maps;
    return paste_with_maps(g, h, maps);
}

RootedGraph extend(const RootedGraph& g, int ell) {
    if (ell < 0) throw std::invalid_argument("extension length must be >= 0");
    if (ell == 0) return g;
    int n = g.graph.vertex_count();
    std::vector<Edge> e = g.graph.edges();
    e.emplace_back(g.root, n);
    for (int i = 1; i < ell; ++i) e.emplace_back(n + i - 1, n + i);
    return RootedGraph(Graph(n + ell, std::move(e)), n + ell - 1);
}

}  // namespace indpoly
