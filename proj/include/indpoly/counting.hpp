#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/bracket.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

// Dense integer polynomial with arbitrary-precision coefficients. Stored
// low-degree first with trailing zeros trimmed; the zero polynomial has an
// empty coefficient vector and degree -1.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;  // zero polynomial
    explicit IntegerPolynomial(std::vector<BigInt> coeffs);

    static IntegerPolynomial one();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int k) const;  // 0 beyond the degree
    BigInt evaluate(const BigInt& x) const;

    IntegerPolynomial times_x() const;  // multiply by x

    friend IntegerPolynomial operator+(const IntegerPolynomial& p, const IntegerPolynomial& q);
    friend IntegerPolynomial operator*(const IntegerPolynomial& p, const IntegerPolynomial& q);
    bool operator==(const IntegerPolynomial&) const = default;

    std::string str() const;  // e.g. "1 + 3x + x^2"

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Thrown when a brute-force routine is asked to exceed its vertex cap.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact independence polynomial I(G;x): coefficient k counts the independent
// sets of size k, including the empty set (constant term 1). Computed by the
// deletion recursion I(G) = I(G-v) + x I(G-N[v]) with component splitting;
// pivot is the maximum-degree vertex (lowest label on ties).
IntegerPolynomial independence_polynomial(const Graph& g);

// I(G; -1) by the same recursion, specialized to avoid building coefficients.
BigInt value_at_minus_one(const Graph& g);

// Independence number alpha(G) = deg I(G;x).
int independence_number(const Graph& g);

// Bracket of (G, root) from three independent evaluations; also re-checks the
// recursion identity I(G;-1) = a - b and throws std::logic_error if the two
// paths ever disagree (they cannot, unless the counter itself is broken).
Bracket compute_bracket(const RootedGraph& g);

// Independence polynomial by direct enumeration of all 2^n vertex subsets.
// Deliberately shares no code with the recursion so the two can cross-check
// each other. Throws SizeLimitError when n > max_vertices (default cap 25).
IntegerPolynomial brute_force_census(const Graph& g, int max_vertices = 25);

}  // namespace indpoly
