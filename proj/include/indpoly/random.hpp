#pragma once

#include <random>

#include "indpoly/graph.hpp"

namespace indpoly {

// Reproducible randomness: std::mt19937 output is pinned by the standard, but
// distribution objects are not, so sampling maps raw draws explicitly. Same
// seed, same graphs, on any platform.

inline double unit_real(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0);  // [0, 1)
}

// Uniform on [lo, hi]; modulo bias is irrelevant at test-suite ranges.
inline int uniform_int(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

// G(n, p): each pair independently an edge, scanned in lexicographic order.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_real(rng) < p) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

}  // namespace indpoly
