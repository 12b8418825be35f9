#pragma once

#include <stdexcept>

#include "indpoly/bigint.hpp"
#include "indpoly/certificate.hpp"

namespace indpoly {

// Requested value is impossible: |I(G;-1)| <= 2^phi(G) for every graph, so no
// graph with decycling number k can reach a value of larger magnitude.
struct BoundError : std::domain_error {
    using std::domain_error::domain_error;
};

// During the odd-value recursion every intermediate certificate keeps its
// bracket in one of two closed forms for value q and decycling number k:
//   Form1: <q,  2^k,      2^k - q>
//   Form2: <q, -2^k + q, -2^k    >
// Tracking which form a subtree is in tells the recursion which extension or
// attachment step preserves the invariant.
enum class ClaimForm { Form1, Form2 };

struct ClaimResult {
    Certificate certificate;
    ClaimForm form;
};

// Connected realization for odd q with 0 < q < 2^k, k >= 1. The certificate's
// bracket matches its ClaimForm exactly.
ClaimResult claim_graph(int k, const BigInt& q);

// Combines two certificates into one whose realization is connected, with
// value q1*q2 and decycling number k1+k2: extend both roots by 2, paste,
// extend by 4 (restoring the product value), then run the same composition
// against K2 (a bracket no-op that keeps the result's shape uniform).
Certificate connectify(const Certificate& g, const Certificate& h);

// Connected graph certificate with decycling number k and I(G;-1) = q, for
// any k >= 1 and |q| <= 2^k. Throws std::invalid_argument for k < 1 and
// BoundError when |q| > 2^k. The realization has at most 30k + 30 vertices.
Certificate synth(int k, const BigInt& q);

}  // namespace indpoly
