#pragma once

#include <string>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/certificate.hpp"
#include "indpoly/decycling.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

// Verification depth. Levels are cumulative: oracle runs everything poly
// does plus the brute-force census; full additionally computes the decycling
// number exactly.
enum class VerifyLevel { Poly, Oracle, Full };

VerifyLevel parse_verify_level(const std::string& name);  // "poly"|"oracle"|"full"
std::string to_string(VerifyLevel level);

// One verified clause. checked = false means the clause was skipped (the
// detail says why); skipped clauses never fail a report.
struct CheckItem {
    std::string clause;
    bool checked = false;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct Report {
    std::string version = "report-v1";
    std::string digest;  // short hash of the verified input, for replay logs
    std::vector<CheckItem> items;
    double total_ms = 0.0;

    bool passed() const;        // no checked clause failed
    std::string text() const;   // one line per clause + verdict
    std::string to_json() const;
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Full;
    int oracle_cap = 25;  // census size limit at oracle level and above
    // Optional proof of the decycling number. At poly/oracle level the phi
    // clause is checked through this certificate when supplied and skipped
    // otherwise; full level computes the decycling number directly (and also
    // checks the certificate if one is given).
    const PhiCertificate* phi_certificate = nullptr;
};

// Checks that g is a (k, q)-graph: |q| <= 2^k, g connected, I(g;-1) = q
// (census-confirmed at oracle level when small enough), decycling number k
// per the options above.
Report verify_kq(const Graph& g, int k, const BigInt& q, const VerifyOptions& opts);

// Validates a construction certificate in six stages: (1) tree structure,
// (2) stored claims match recomputed predictions, (3) the realized graph's
// computed bracket equals the prediction, (4) connectivity, (5) decycling
// number k proven by the hexagon blocks + one-vertex-per-block set, (6) the
// 2^k bound and target value. Stages after the first failure are skipped.
Report verify_certificate(const Certificate& cert);

// Proof skeleton extracted from a realization: the tracked hexagons as the
// disjoint cycles, lowest label of each as the decycling set.
PhiCertificate phi_certificate_from_realization(const Realization& real);

// Property sweep of the bound |I(G;-1)| <= 2^phi(G): two fixed tight cases
// (one hexagon, two disjoint hexagons) plus `trials` seeded random graphs
// with n in [1, n_max] and edge probability cycling over 0.1..0.9. phi is
// computed by exhaustive subset search independent of min_decycling, so
// n_max must be <= 12. The report counts violations (always expected zero)
// and how often the bound is tight.
Report bound_sweep(int n_max, int trials, unsigned int seed);

}  // namespace indpoly
