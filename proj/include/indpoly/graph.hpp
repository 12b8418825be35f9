#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indpoly {

// Undirected edge, stored normalized with first() < second().
using Edge = std::pair<int, int>;

// Simple undirected graph on vertex labels 0..n-1. Immutable after
// construction; all mutating operations return new graphs. The vertex count
// may exceed the number of labels that appear in edges (isolated vertices).
class Graph {
public:
    Graph() = default;

    // Edges are normalized (u, v) -> (min, max) and sorted. Throws
    // std::invalid_argument on out-of-range endpoints, self-loops, or
    // duplicate edges.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbor list. Throws std::invalid_argument on a bad label.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, unique, u < v
    std::vector<std::vector<int>> adj_;  // sorted adjacency lists
};

// Graph with a distinguished root vertex. Throws std::invalid_argument if the
// root is out of range.
struct RootedGraph {
    RootedGraph(Graph g, int r);

    Graph graph;
    int root;
};

Graph make_path(int n);      // P_n, vertices 0..n-1 in path order
Graph make_cycle(int n);     // C_n, n >= 3, vertices in cycle order
Graph make_complete(int n);  // K_n

// Deletes v; remaining vertices are relabeled by order-preserving compaction
// (labels above v shift down by one).
Graph delete_vertex(const Graph& g, int v);

// Deletes every vertex in vs (duplicates allowed); survivors are compacted in
// increasing label order.
Graph delete_vertices(const Graph& g, std::span<const int> vs);

// Deletes v together with all its neighbors (closed neighborhood).
Graph delete_closed_neighborhood(const Graph& g, int v);

// Disjoint union; h's vertices are shifted up by g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);  // vacuously true for the empty graph
bool is_acyclic(const Graph& g);

// One connected component as an induced subgraph. original_labels[i] is the
// label in the parent graph of the component's vertex i (increasing order).
struct Component {
    Graph graph;
    std::vector<int> original_labels;
};

// Components ordered by smallest original label.
std::vector<Component> components(const Graph& g);

// Some cycle as a vertex sequence (consecutive entries adjacent, last adjacent
// to first), or nullopt if the graph is acyclic.
std::optional<std::vector<int>> find_cycle(const Graph& g);

// Vertex maps used by paste(): left[u] / right[u] give the label in the pasted
// graph of vertex u of the left / right input.
struct PasteMaps {
    std::vector<int> left;
    std::vector<int> right;
};

// Identifies the two roots. The merged root gets label 0; the remaining left
// vertices keep their relative order at labels 1..|G|-1, then the remaining
// right vertices follow. Edges are the union of both images (a shared edge at
// the root collapses, since the result is simple).
RootedGraph paste(const RootedGraph& g, const RootedGraph& h);
RootedGraph paste_with_maps(const RootedGraph& g, const RootedGraph& h, PasteMaps& maps);

// Appends a path of ell new vertices to the root and moves the root to the far
// end of that path. Original labels are preserved; the path vertices get
// labels n, n+1, ..., n+ell-1 in order. ell = 0 returns the input unchanged.
RootedGraph extend(const RootedGraph& g, int ell);

}  // namespace indpoly
