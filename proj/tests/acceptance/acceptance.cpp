// End-to-end acceptance checks. Runs seven criteria covering the CLI, the
// synthesizer across its whole (k, q) domain for small k, certificate
// verification at k = 10, the bracket calculus on random rooted graphs, the
// decycling bound sweep, brute-force cross-validation, and the claim-form
// identity. Prints one [PASS]/[FAIL] line per criterion; exits nonzero if
// any criterion fails or exceeds its time limit.
//
// Usage: acceptance --cli /path/to/indpoly

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "indpoly/counting.hpp"
#include "indpoly/decycling.hpp"
#include "indpoly/io.hpp"
#include "indpoly/random.hpp"
#include "indpoly/synth.hpp"
#include "indpoly/verify.hpp"

#include "../oracles.hpp"

using namespace indpoly;

namespace {

std::string g_cli;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;  // keep the first failure
        pass = false;
    }
};

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string make_temp_dir() {
    char templ[] = "/tmp/indpoly-acceptance-XXXXXX";
    char* dir = mkdtemp(templ);
    if (!dir) throw std::runtime_error("mkdtemp failed");
    return dir;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// 1. The CLI evaluates the four reference graphs to 0, -1, -2, 2 and
//    reproduces the hexagon extension table.
Outcome criterion_cli_fixed_values() {
    Outcome out;
    std::string dir = make_temp_dir();
    struct Fixture {
        std::string name;
        Graph graph;
        std::string value;
    };
    std::vector<Fixture> fixtures = {
        {"k1", Graph(1, {}), "0"},
        {"k2", make_complete(2), "-1"},
        {"c3", make_cycle(3), "-2"},
        {"c6", make_cycle(6), "2"},
    };
    for (const auto& fx : fixtures) {
        std::string path = dir + "/" + fx.name + ".edges";
        write_edge_list_file(path, fx.graph);
        CliResult res = run_cli("eval " + path);
        if (res.exit_code != 0)
            out.fail("eval " + fx.name + " exited " + std::to_string(res.exit_code));
        else if (!contains(res.out, "I(-1) = " + fx.value))
            out.fail("eval " + fx.name + " printed '" + res.out + "', wanted I(-1) = " + fx.value);
    }
    CliResult table = run_cli("table c6");
    if (table.exit_code != 0)
        out.fail("table c6 exited " + std::to_string(table.exit_code));
    for (const std::string& row : {"<2, 1, -1>", "<1, 2, 1>", "<-1, 1, 2>", "<-2, -1, 1>",
                                   "<-1, -2, -1>", "<1, -1, -2>"})
        if (!contains(table.out, row)) out.fail("table c6 output missing row " + row);
    if (out.pass) out.detail = "K1, K2, C3, C6 + hexagon table via CLI";
    return out;
}

// 2. Every target in the k <= 4 domain synthesizes to a connected graph with
//    the right value (brute-force census when small enough, recursion
//    otherwise) and exactly the right decycling number.
Outcome criterion_small_k_domain() {
    Outcome out;
    int cases = 0;
    for (int k = 1; k <= 4; ++k) {
        for (BigInt q = -pow2(k); q <= pow2(k); ++q) {
            ++cases;
            std::string label = "(k=" + std::to_string(k) + ", q=" + q.str() + ")";
            Realization real = realize(synth(k, q));
            const Graph& g = real.rooted.graph;
            if (!is_connected(g)) {
                out.fail(label + " not connected");
                continue;
            }
            BigInt value = g.vertex_count() <= 25 ? brute_force_census(g).evaluate(-1)
                                                  : value_at_minus_one(g);
            if (value != q) out.fail(label + " has value " + value.str());
            DecyclingResult phi = min_decycling(g);
            if (!phi.exact || phi.phi != k)
                out.fail(label + " has decycling number " + std::to_string(phi.phi));
        }
    }
    if (out.pass) out.detail = std::to_string(cases) + " targets, census- or recursion-checked";
    return out;
}

// 3. At k = 10 the synthesizer's certificates verify end to end, and each
//    realization carries a 10-cycle/10-vertex decycling certificate.
Outcome criterion_k10_certificates() {
    Outcome out;
    std::vector<BigInt> targets;
    for (long long v : {0LL, 1LL, 341LL, 1023LL, 1024LL}) {
        targets.push_back(v);
        if (v != 0) targets.push_back(-v);
    }
    for (const BigInt& q : targets) {
        std::string label = "(k=10, q=" + q.str() + ")";
        Certificate cert = synth(10, q);
        Report report = verify_certificate(cert);
        if (!report.passed()) {
            out.fail(label + " certificate rejected: " + report.text());
            continue;
        }
        Realization real = realize(cert);
        PhiCertificate pc = phi_certificate_from_realization(real);
        if (pc.disjoint_cycles.size() != 10 || pc.decycling_set.size() != 10)
            out.fail(label + " certificate has " + std::to_string(pc.disjoint_cycles.size()) +
                     " cycles, " + std::to_string(pc.decycling_set.size()) + " set vertices");
        CheckResult check = check_phi_certificate(real.rooted.graph, pc);
        if (!check.ok) out.fail(label + " decycling certificate invalid: " + check.reason);
    }
    if (out.pass) out.detail = std::to_string(targets.size()) + " certificates at k=10";
    return out;
}

// 4. Bracket identities (extension, pasting), the deletion recursion at a
//    random pivot, and the component product rule hold on random rooted
//    graphs.
Outcome criterion_random_identities() {
    Outcome out;
    std::mt19937 rng(20260823u);
    const int trials = 200;
    for (int t = 0; t < trials && out.pass; ++t) {
        int n = uniform_int(rng, 2, 12);
        Graph g = random_graph(n, 0.15 + 0.07 * (t % 10), rng);
        RootedGraph rg(g, uniform_int(rng, 0, n - 1));
        Bracket bg = compute_bracket(rg);

        int ell = uniform_int(rng, 0, 8);
        if (compute_bracket(extend(rg, ell)) != extend_bracket(bg, ell))
            out.fail("extension identity failed at trial " + std::to_string(t));

        int m = uniform_int(rng, 2, 12);
        Graph h = random_graph(m, 0.3, rng);
        RootedGraph rh(h, uniform_int(rng, 0, m - 1));
        if (compute_bracket(paste(rg, rh)) != paste_brackets(bg, compute_bracket(rh)))
            out.fail("pasting identity failed at trial " + std::to_string(t));

        int v = uniform_int(rng, 0, n - 1);
        IntegerPolynomial whole = independence_polynomial(g);
        IntegerPolynomial split = independence_polynomial(delete_vertex(g, v)) +
                                  independence_polynomial(delete_closed_neighborhood(g, v)).times_x();
        if (whole != split) out.fail("deletion recursion failed at trial " + std::to_string(t));

        if (independence_polynomial(disjoint_union(g, h)) !=
            whole * independence_polynomial(h))
            out.fail("product rule failed at trial " + std::to_string(t));
    }
    if (out.pass) out.detail = std::to_string(trials) + " random rooted graphs, zero failures";
    return out;
}

// 5. The bound |I(G;-1)| <= 2^phi(G) holds across a large seeded sweep with
//    exhaustive phi, and at least one tight case is exhibited.
Outcome criterion_bound_sweep() {
    Outcome out;
    Report report = bound_sweep(10, 1000, 424243u);
    if (!report.passed()) out.fail("sweep reported a violation: " + report.text());
    std::string tight;
    for (const auto& item : report.items)
        if (item.clause == "tight_cases") tight = item.detail;
    if (tight.empty()) out.fail("sweep exhibited no tight case");
    if (out.pass) out.detail = "1000 graphs + fixed preamble; tight case: " + tight;
    return out;
}

// 6. The polynomial recursion agrees with the subset census, and the
//    decycling solver agrees with exhaustive subset minimization.
Outcome criterion_brute_force_agreement() {
    Outcome out;
    std::mt19937 rng(987654321u);
    for (int t = 0; t < 300 && out.pass; ++t) {
        int n = uniform_int(rng, 1, 12);
        Graph g = random_graph(n, 0.1 + 0.08 * (t % 10), rng);
        if (independence_polynomial(g) != brute_force_census(g))
            out.fail("polynomial/census mismatch at trial " + std::to_string(t));
    }
    std::mt19937 rng2(192837465u);
    for (int t = 0; t < 300 && out.pass; ++t) {
        int n = uniform_int(rng2, 1, 12);
        Graph g = random_graph(n, 0.1 + 0.08 * (t % 10), rng2);
        DecyclingResult res = min_decycling(g);
        int want = test_oracle::phi(g);
        if (!res.exact || res.phi != want)
            out.fail("decycling mismatch at trial " + std::to_string(t) + ": got " +
                     std::to_string(res.phi) + ", subset minimum " + std::to_string(want));
    }
    if (out.pass) out.detail = "300 + 300 seeded graphs against independent brute force";
    return out;
}

// 7. For every odd q in (0, 2^k), k <= 6, the claim construction lands in
//    one of its two stated bracket forms, both as claimed and as realized.
Outcome criterion_claim_forms() {
    Outcome out;
    int cases = 0;
    for (int k = 1; k <= 6; ++k) {
        for (BigInt q = 1; q < pow2(k); q += 2) {
            ++cases;
            std::string label = "(k=" + std::to_string(k) + ", q=" + q.str() + ")";
            ClaimResult cr = claim_graph(k, q);
            Bracket want;
            want.value = q;
            if (cr.form == ClaimForm::Form1) {
                want.a = pow2(k);
                want.b = pow2(k) - q;
            } else {
                want.a = q - pow2(k);
                want.b = -pow2(k);
            }
            if (cr.certificate.root->claimed_bracket != want) {
                out.fail(label + " claimed " + to_string(cr.certificate.root->claimed_bracket) +
                         ", form says " + to_string(want));
                continue;
            }
            if (compute_bracket(realize(cr.certificate).rooted) != want)
                out.fail(label + " realized bracket differs from form");
        }
    }
    if (out.pass) out.detail = std::to_string(cases) + " odd targets across k <= 6";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
    if (g_cli.empty()) {
        std::cerr << "usage: acceptance --cli /path/to/indpoly\n";
        return 2;
    }

    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
        long long limit_ms;  // 0 = no individual limit
    };
    std::vector<Criterion> criteria = {
        {"cli fixed values and hexagon table", criterion_cli_fixed_values, 1000},
        {"full (k, q) domain for k <= 4", criterion_small_k_domain, 60000},
        {"k = 10 certificate round trip", criterion_k10_certificates, 10000},
        {"bracket and recursion identities on random graphs", criterion_random_identities, 0},
        {"decycling bound sweep", criterion_bound_sweep, 0},
        {"brute-force agreement", criterion_brute_force_agreement, 0},
        {"claim-form identity for k <= 6", criterion_claim_forms, 30000},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (out.pass && criteria[i].limit_ms > 0 && ms > criteria[i].limit_ms)
            out.fail("time limit exceeded: " + std::to_string(ms) + " ms > " +
                     std::to_string(criteria[i].limit_ms) + " ms");
        if (!out.pass) ++failures;
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << "/7 " << criteria[i].name
                  << " (" << ms << " ms): " << out.detail << "\n";
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 7 criteria passed\n";
    return 0;
}
