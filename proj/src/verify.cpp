#include "indpoly/verify.hpp"

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "indpoly/counting.hpp"
#include "indpoly/random.hpp"

namespace indpoly {

VerifyLevel parse_verify_level(const std::string& name) {
    if (name == "poly") return VerifyLevel::Poly;
    if (name == "oracle") return VerifyLevel::Oracle;
    if (name == "full") return VerifyLevel::Full;
    throw std::invalid_argument("unknown verification level '" + name +
                                "' (expected poly, oracle, or full)");
}

std::string to_string(VerifyLevel level) {
    switch (level) {
        case VerifyLevel::Poly: return "poly";
        case VerifyLevel::Oracle: return "oracle";
        case VerifyLevel::Full: return "full";
    }
    throw std::logic_error("unknown level");
}

bool Report::passed() const {
    for (const auto& item : items)
        if (item.checked && !item.pass) return false;
    return true;
}

std::string Report::text() const {
    std::string out;
    for (const auto& item : items) {
        const char* tag = !item.checked ? "[SKIP]" : item.pass ? "[PASS]" : "[FAIL]";
        out += tag;
        out += " ";
        out += item.clause;
        if (!item.detail.empty()) out += ": " + item.detail;
        out += "\n";
    }
    out += "verdict: ";
    out += passed() ? "PASS" : "FAIL";
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.1f ms)", total_ms);
    out += buf;
    out += "\n";
    return out;
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["version"] = version;
    j["digest"] = digest;
    j["passed"] = passed();
    j["total_ms"] = total_ms;
    j["checks"] = nlohmann::json::array();
    for (const auto& item : items)
        j["checks"].push_back({{"clause", item.clause},
                               {"status", !item.checked ? "skipped" : item.pass ? "pass" : "fail"},
                               {"detail", item.detail},
                               {"ms", item.ms}});
    return j.dump(2) + "\n";
}

namespace {

std::string fnv_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string graph_digest(const Graph& g) {
    std::string s = "n=" + std::to_string(g.vertex_count()) + ";";
    for (const auto& [u, v] : g.edges())
        s += std::to_string(u) + "-" + std::to_string(v) + ",";
    return fnv_digest(s);
}

// Runs one clause under a timer. The body fills in pass/detail and may mark
// the clause skipped.
template <typename Fn>
void run_clause(Report& report, const std::string& clause, Fn&& body) {
    CheckItem item;
    item.clause = clause;
    item.checked = true;
    auto start = std::chrono::steady_clock::now();
    body(item);
    item.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
    report.total_ms += item.ms;
    report.items.push_back(std::move(item));
}

void skip_clause(Report& report, const std::string& clause, const std::string& why) {
    CheckItem item;
    item.clause = clause;
    item.checked = false;
    item.detail = why;
    report.items.push_back(std::move(item));
}

// Exact decycling number by subset enumeration, independent of the branching
// search in min_decycling so the two can cross-check. Caller keeps n <= 12.
int exhaustive_phi(const Graph& g) {
    int n = g.vertex_count();
    const auto& edges = g.edges();
    int best = n;
    std::array<int, 12> parent{};
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        int t = std::popcount(mask);
        if (t >= best) continue;
        std::iota(parent.begin(), parent.begin() + n, 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool forest = true;
        for (const auto& [u, v] : edges) {
            if ((mask >> u) & 1 || (mask >> v) & 1) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) {
                forest = false;
                break;
            }
            parent[ru] = rv;
        }
        if (forest) best = t;
    }
    return best;
}

}  // namespace

Report verify_kq(const Graph& g, int k, const BigInt& q, const VerifyOptions& opts) {
    Report report;
    report.digest = graph_digest(g);
    auto overall = std::chrono::steady_clock::now();

    run_clause(report, "bound", [&](CheckItem& item) {
        if (k < 0) {
            item.pass = false;
            item.detail = "k must be >= 0, got " + std::to_string(k);
            return;
        }
        item.pass = big_abs(q) <= pow2(k);
        item.detail = "|" + q.str() + "| " + (item.pass ? "<=" : ">") + " 2^" +
                      std::to_string(k) + " = " + pow2(k).str();
    });

    run_clause(report, "connected", [&](CheckItem& item) {
        item.pass = is_connected(g);
        if (!item.pass) item.detail = std::to_string(components(g).size()) + " components";
    });

    BigInt value;
    run_clause(report, "value", [&](CheckItem& item) {
        value = value_at_minus_one(g);
        item.pass = value == q;
        item.detail = "I(-1) = " + value.str() + (item.pass ? "" : ", expected " + q.str());
    });

    if (opts.level == VerifyLevel::Poly) {
        skip_clause(report, "census", "skipped at level poly");
    } else if (g.vertex_count() > opts.oracle_cap) {
        skip_clause(report, "census",
                    "skipped: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds census cap " + std::to_string(opts.oracle_cap));
    } else {
        run_clause(report, "census", [&](CheckItem& item) {
            IntegerPolynomial enumerated = brute_force_census(g, opts.oracle_cap);
            bool value_ok = enumerated.evaluate(BigInt(-1)) == q;
            bool poly_ok = enumerated == independence_polynomial(g);
            item.pass = value_ok && poly_ok;
            if (item.pass)
                item.detail = "enumeration agrees (" + std::to_string(enumerated.degree()) +
                              " = independence number)";
            else if (!value_ok)
                item.detail = "enumerated I(-1) = " + enumerated.evaluate(BigInt(-1)).str() +
                              ", expected " + q.str();
            else
                item.detail = "enumerated polynomial differs from recursion";
        });
    }

    bool have_cert = opts.phi_certificate != nullptr;
    if (opts.level == VerifyLevel::Full) {
        run_clause(report, "phi", [&](CheckItem& item) {
            DecyclingResult res = min_decycling(g, k);
            if (!res.exact) {
                item.pass = false;
                item.detail = "decycling number exceeds " + std::to_string(k);
            } else {
                item.pass = res.phi == k;
                item.detail = "decycling number = " + std::to_string(res.phi) +
                              (item.pass ? "" : ", expected " + std::to_string(k));
            }
        });
    } else if (!have_cert) {
        skip_clause(report, "phi",
                    "skipped: no decycling certificate supplied at level " +
                        to_string(opts.level));
    }
    if (have_cert) {
        run_clause(report, "phi_certificate", [&](CheckItem& item) {
            CheckResult res = check_phi_certificate(g, *opts.phi_certificate);
            int blocks = static_cast<int>(opts.phi_certificate->disjoint_cycles.size());
            if (!res.ok) {
                item.pass = false;
                item.detail = res.reason;
            } else if (blocks != k) {
                item.pass = false;
                item.detail = "certificate proves decycling number " + std::to_string(blocks) +
                              ", expected " + std::to_string(k);
            } else {
                item.pass = true;
                item.detail = std::to_string(blocks) + " disjoint cycles + " +
                              std::to_string(blocks) + "-vertex decycling set";
            }
        });
    }

    report.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               overall)
                          .count();
    return report;
}

namespace {

// Stage-1 structural walk; returns an error description or empty string.
std::string check_structure(const CertNode& node, const std::string& path) {
    size_t want = node.kind == CertNode::Kind::Base     ? 0
                  : node.kind == CertNode::Kind::Extend ? 1
                                                        : 2;
    if (node.children.size() != want)
        return path + ": node has " + std::to_string(node.children.size()) +
               " children, expected " + std::to_string(want);
    if (node.kind == CertNode::Kind::Extend && node.ell < 0)
        return path + ": negative extension length";
    if (!node.claimed_bracket.consistent())
        return path + ": claimed bracket " + to_string(node.claimed_bracket) +
               " violates value = a - b";
    if (node.claimed_phi < 0) return path + ": negative claimed decycling number";
    for (size_t i = 0; i < node.children.size(); ++i) {
        if (!node.children[i]) return path + ": null child";
        std::string err =
            check_structure(*node.children[i], path + ".children[" + std::to_string(i) + "]");
        if (!err.empty()) return err;
    }
    if (node.kind == CertNode::Kind::Paste)
        for (size_t i = 0; i < 2; ++i)
            if (realized_size(*node.children[i]) < 2)
                return path + ": paste operand " + std::to_string(i) +
                       " realizes fewer than 2 vertices";
    return "";
}

// Stage-2 walk: recomputed predictions vs stored claims at every node.
std::string check_claims(const CertNode& node, const std::string& path) {
    Bracket predicted = predicted_bracket(node);
    if (!(predicted == node.claimed_bracket))
        return path + ": claimed bracket " + to_string(node.claimed_bracket) +
               " but construction gives " + to_string(predicted);
    int phi = predicted_phi(node);
    if (phi != node.claimed_phi)
        return path + ": claimed decycling number " + std::to_string(node.claimed_phi) +
               " but construction gives " + std::to_string(phi);
    for (size_t i = 0; i < node.children.size(); ++i) {
        std::string err =
            check_claims(*node.children[i], path + ".children[" + std::to_string(i) + "]");
        if (!err.empty()) return err;
    }
    return "";
}

int count_nodes(const CertNode& node) {
    int total = 1;
    for (const auto& c : node.children)
        if (c) total += count_nodes(*c);
    return total;
}

}  // namespace

PhiCertificate phi_certificate_from_realization(const Realization& real) {
    PhiCertificate cert;
    cert.disjoint_cycles = real.hexagons;
    for (const auto& hex : cert.disjoint_cycles)
        cert.decycling_set.push_back(*std::min_element(hex.begin(), hex.end()));
    return cert;
}

Report verify_certificate(const Certificate& cert) {
    // Realizations are capped so a hostile file with huge extension lengths
    // cannot demand an absurd graph build.
    constexpr long long kMaxRealizedVertices = 2'000'000;

    Report report;
    auto overall = std::chrono::steady_clock::now();
    report.digest = fnv_digest("cert:k=" + std::to_string(cert.k) + ";q=" + cert.q.str() +
                              ";nodes=" + (cert.root ? std::to_string(count_nodes(*cert.root))
                                                     : std::string("0")));

    const std::array<const char*, 6> stage_names = {"structure",        "claims", "realized_bracket",
                                                    "connected",        "phi",    "bound"};
    size_t next_stage = 0;
    bool failed = false;
    auto give_up = [&]() {
        for (; next_stage < stage_names.size(); ++next_stage)
            skip_clause(report, stage_names[next_stage], "not reached: earlier stage failed");
    };

    // Stage 1: structure.
    run_clause(report, stage_names[next_stage++], [&](CheckItem& item) {
        if (!cert.root) {
            item.pass = false;
            item.detail = "certificate has no construction tree";
            return;
        }
        if (cert.k < 0) {
            item.pass = false;
            item.detail = "target decycling number is negative";
            return;
        }
        std::string err = check_structure(*cert.root, "root");
        if (err.empty() && realized_size(*cert.root) > kMaxRealizedVertices)
            err = "realization would have " + std::to_string(realized_size(*cert.root)) +
                  " vertices (cap " + std::to_string(kMaxRealizedVertices) + ")";
        item.pass = err.empty();
        item.detail = err.empty() ? std::to_string(count_nodes(*cert.root)) + " nodes" : err;
    });
    failed = !report.items.back().pass;
    if (failed) {
        give_up();
        report.total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - overall)
                              .count();
        return report;
    }

    // Stage 2: claims.
    run_clause(report, stage_names[next_stage++], [&](CheckItem& item) {
        std::string err = check_claims(*cert.root, "root");
        item.pass = err.empty();
        item.detail = err;
    });

    // Stage 3..5 need the realization; build it once after stage 2 passes.
    Realization real{RootedGraph(make_path(1), 0), {}};
    Bracket predicted;
    if (report.items.back().pass) {
        real = realize(*cert.root);
        predicted = predicted_bracket(*cert.root);

        run_clause(report, stage_names[next_stage++], [&](CheckItem& item) {
            Bracket computed = compute_bracket(real.rooted);
            item.pass = computed == predicted;
            item.detail = item.pass ? "computed " + to_string(computed)
                                    : "computed " + to_string(computed) + " but tree predicts " +
                                          to_string(predicted);
        });
        if (report.items.back().pass) {
            run_clause(report, stage_names[next_stage++], [&](CheckItem& item) {
                item.pass = is_connected(real.rooted.graph);
                item.detail = std::to_string(real.rooted.graph.vertex_count()) + " vertices, " +
                              std::to_string(real.rooted.graph.edge_count()) + " edges" +
                              (item.pass ? "" : ", disconnected");
            });
        }
    }
    if (!report.items.back().pass) {
        give_up();
        report.total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - overall)
                              .count();
        return report;
    }

    // Stage 5: decycling number proven by hexagon blocks.
    run_clause(report, stage_names[next_stage++], [&](CheckItem& item) {
        PhiCertificate phi_cert = phi_certificate_from_realization(real);
        CheckResult res = check_phi_certificate(real.rooted.graph, phi_cert);
        int blocks = static_cast<int>(phi_cert.disjoint_cycles.size());
        if (!res.ok) {
            item.pass = false;
            item.detail = res.reason;
        } else if (blocks != cert.k) {
            item.pass = false;
            item.detail = std::to_string(blocks) + " hexagon blocks but target claims " +
                          std::to_string(cert.k);
        } else {
            item.pass = true;
            item.detail = std::to_string(blocks) + " disjoint hexagons + " +
                          std::to_string(blocks) + "-vertex decycling set";
        }
    });
    if (!report.items.back().pass) {
        give_up();
        report.total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - overall)
                              .count();
        return report;
    }

    // Stage 6: the 2^k bound and the target value.
    run_clause(report, stage_names[next_stage++], [&](CheckItem& item) {
        if (big_abs(cert.q) > pow2(cert.k)) {
            item.pass = false;
            item.detail = "|" + cert.q.str() + "| > 2^" + std::to_string(cert.k);
        } else if (predicted.value != cert.q) {
            item.pass = false;
            item.detail = "tree value " + predicted.value.str() + " does not meet target " +
                          cert.q.str();
        } else {
            item.pass = true;
            item.detail = "I(-1) = " + cert.q.str() + ", |q| <= 2^" + std::to_string(cert.k);
        }
    });

    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - overall)
            .count();
    return report;
}

Report bound_sweep(int n_max, int trials, unsigned int seed) {
    if (n_max < 1 || n_max > 12)
        throw std::invalid_argument("bound_sweep needs 1 <= n_max <= 12 (exhaustive phi)");
    if (trials < 0) throw std::invalid_argument("trials must be >= 0");

    Report report;
    report.digest = fnv_digest("sweep:seed=" + std::to_string(seed) +
                               ";trials=" + std::to_string(trials) +
                               ";nmax=" + std::to_string(n_max));
    auto overall = std::chrono::steady_clock::now();

    struct Case {
        std::string name;
        Graph graph;
    };
    std::vector<Case> fixed;
    fixed.push_back({"hexagon", make_cycle(6)});
    fixed.push_back({"two disjoint hexagons", disjoint_union(make_cycle(6), make_cycle(6))});

    int violations = 0;
    int tight = 0;
    int total = 0;
    std::string first_tight, first_violation;

    auto check_one = [&](const Graph& g, const std::string& name) {
        BigInt val = value_at_minus_one(g);
        int phi = exhaustive_phi(g);
        BigInt limit = pow2(phi);
        ++total;
        if (big_abs(val) > limit) {
            ++violations;
            if (first_violation.empty())
                first_violation = name + ": |I(-1)| = " + big_abs(val).str() + " > 2^" +
                                  std::to_string(phi);
        } else if (big_abs(val) == limit) {
            ++tight;
            if (first_tight.empty())
                first_tight = name + ": |I(-1)| = " + limit.str() + " = 2^" + std::to_string(phi);
        }
    };

    for (const auto& c : fixed) check_one(c.graph, c.name);
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = uniform_int(rng, 1, n_max);
        double p = 0.1 * (1 + t % 9);
        Graph g = random_graph(n, p, rng);
        check_one(g, "trial " + std::to_string(t));
    }

    run_clause(report, "no_violations", [&](CheckItem& item) {
        item.pass = violations == 0;
        item.detail = std::to_string(violations) + " violations in " + std::to_string(total) +
                      " graphs (seed " + std::to_string(seed) + ")" +
                      (first_violation.empty() ? "" : "; first: " + first_violation);
    });
    run_clause(report, "tight_cases", [&](CheckItem& item) {
        item.pass = tight >= 1;
        item.detail = std::to_string(tight) + " of " + std::to_string(total) +
                      " graphs meet the bound exactly" +
                      (first_tight.empty() ? "" : "; first: " + first_tight);
    });

    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - overall)
            .count();
    return report;
}

}  // namespace indpoly
