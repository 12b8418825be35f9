#include "indpoly/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

namespace indpoly {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntegerPolynomial IntegerPolynomial::one() { return IntegerPolynomial({BigInt(1)}); }

void IntegerPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntegerPolynomial IntegerPolynomial::times_x() const {
    if (coeffs_.empty()) return {};
    std::vector<BigInt> c;
    c.reserve(coeffs_.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator+(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    std::vector<BigInt> c(std::max(p.coeffs_.size(), q.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator*(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    if (p.coeffs_.empty() || q.coeffs_.empty()) return {};
    std::vector<BigInt> c(p.coeffs_.size() + q.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return IntegerPolynomial(std::move(c));
}

std::string IntegerPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = big_abs(c);
        std::string term;
        if (k == 0) {
            term = mag.str();
        } else {
            if (mag != 1) term = mag.str();
            term += "x";
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

// (1+x)^n, the polynomial of the edgeless graph on n vertices. Binomial row
// built with exact division: C(n,k) = C(n,k-1) * (n-k+1) / k.
static IntegerPolynomial edgeless_polynomial(int n) {
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) c[k] = c[k - 1] * (n - k + 1) / k;
    return IntegerPolynomial(std::move(c));
}

// Pivot for the deletion recursion: a maximum-degree vertex. Ties go to the
// candidate whose deletion leaves the smallest largest component, so long
// pasted chains split near their middle and the recursion stays polynomial
// instead of peeling one block at a time; remaining ties take the lowest
// label.
static int pivot_vertex(const Graph& g) {
    int n = g.vertex_count();
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == max_deg) candidates.push_back(v);
    if (candidates.size() == 1) return candidates[0];

    int best = candidates[0];
    int best_worst = n + 1;
    std::vector<int> seen(n, -1);  // candidate label for which the vertex was visited
    std::vector<int> stack;
    for (int cand : candidates) {
        int worst = 0;
        for (int start = 0; start < n && worst < best_worst; ++start) {
            if (start == cand || seen[start] == cand) continue;
            int size = 0;
            seen[start] = cand;
            stack.push_back(start);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++size;
                for (int w : g.neighbors(u))
                    if (w != cand && seen[w] != cand) {
                        seen[w] = cand;
                        stack.push_back(w);
                    }
            }
            worst = std::max(worst, size);
        }
        if (worst < best_worst) {
            best_worst = worst;
            best = cand;
        }
    }
    return best;
}

IntegerPolynomial independence_polynomial(const Graph& g) {
    if (g.edge_count() == 0) return edgeless_polynomial(g.vertex_count());
    auto comps = components(g);
    if (comps.size() > 1) {
        IntegerPolynomial acc = IntegerPolynomial::one();
        for (const auto& comp : comps) acc = acc * independence_polynomial(comp.graph);
        return acc;
    }
    int v = pivot_vertex(g);
    return independence_polynomial(delete_vertex(g, v)) +
           independence_polynomial(delete_closed_neighborhood(g, v)).times_x();
}

BigInt value_at_minus_one(const Graph& g) {
    if (g.edge_count() == 0) return g.vertex_count() == 0 ? 1 : 0;
    auto comps = components(g);
    if (comps.size() > 1) {
        BigInt acc = 1;
        for (const auto& comp : comps) {
            acc *= value_at_minus_one(comp.graph);
            if (acc == 0) return acc;
        }
        return acc;
    }
    int v = pivot_vertex(g);
    return value_at_minus_one(delete_vertex(g, v)) -
           value_at_minus_one(delete_closed_neighborhood(g, v));
}

int independence_number(const Graph& g) { return independence_polynomial(g).degree(); }

Bracket compute_bracket(const RootedGraph& g) {
    BigInt a = value_at_minus_one(delete_vertex(g.graph, g.root));
    BigInt b = value_at_minus_one(delete_closed_neighborhood(g.graph, g.root));
    BigInt whole = value_at_minus_one(g.graph);
    if (whole != a - b)
        throw std::logic_error("deletion recursion identity violated at root " +
                               std::to_string(g.root));
    Bracket br;
    br.value = std::move(whole);
    br.a = std::move(a);
    br.b = std::move(b);
    return br;
}

IntegerPolynomial brute_force_census(const Graph& g, int max_vertices) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw SizeLimitError("brute-force census refused: " + std::to_string(n) +
                             " vertices exceeds cap " + std::to_string(max_vertices));
    std::vector<std::uint64_t> nbmask(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbmask[u] |= std::uint64_t(1) << v;
        nbmask[v] |= std::uint64_t(1) << u;
    }
    // Subset DP: S is independent iff S minus its lowest vertex is independent
    // and that vertex has no neighbor in the rest. One bit per subset.
    std::vector<BigInt> counts(n + 1, BigInt(0));
    counts[0] = 1;
    std::vector<bool> indep(std::size_t(1) << n, false);
    indep[0] = true;
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
        int v = std::countr_zero(s);
        std::uint64_t rest = s & (s - 1);
        if (indep[rest] && (nbmask[v] & rest) == 0) {
            indep[s] = true;
            counts[static_cast<int>(std::popcount(s))] += 1;
        }
    }
    return IntegerPolynomial(std::move(counts));
}

}  // namespace indpoly
