// Command-line front end: graph synthesis for target (k, q), evaluation,
// decycling numbers, and certificate verification over edge-list files.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/domain error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "indpoly/counting.hpp"
#include "indpoly/decycling.hpp"
#include "indpoly/io.hpp"
#include "indpoly/synth.hpp"
#include "indpoly/verify.hpp"

using namespace indpoly;

namespace {

int oracle_cap_from_env() {
    const char* raw = std::getenv("INDPOLY_ORACLE_CAP");
    if (!raw || !*raw) return 25;
    char* end = nullptr;
    long cap = std::strtol(raw, &end, 10);
    if (*end != '\0' || cap < 0)
        throw std::invalid_argument("INDPOLY_ORACLE_CAP must be a non-negative integer, got '" +
                                    std::string(raw) + "'");
    return static_cast<int>(cap);
}

VerifyLevel default_level(int k) { return k <= 4 ? VerifyLevel::Full : VerifyLevel::Poly; }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_synth(int k, const std::string& q_text, const std::string& out_path,
              const std::string& cert_path) {
    BigInt q = parse_bigint(q_text);
    Certificate cert = synth(k, q);
    Realization real = realize(cert);
    const Graph& g = real.rooted.graph;

    bool graph_to_stdout = out_path.empty();
    if (graph_to_stdout)
        write_edge_list(std::cout, g, real.rooted.root);
    else
        write_edge_list_file(out_path, g, real.rooted.root);
    if (!cert_path.empty()) {
        std::ofstream out(cert_path);
        if (!out) throw std::runtime_error("cannot open '" + cert_path + "' for writing");
        out << certificate_to_json(cert);
    }

    // When the graph occupies stdout, keep the summary on stderr so piping works.
    std::ostream& info = graph_to_stdout ? std::cerr : std::cout;
    info << "|V| = " << g.vertex_count() << "\n"
         << "|E| = " << g.edge_count() << "\n"
         << "k = " << cert.k << "\n"
         << "q = " << cert.q.str() << "\n"
         << "bracket = " << to_string(compute_bracket(real.rooted)) << "\n";
    return 0;
}

int cmd_eval(const std::string& path, bool with_poly) {
    ParsedGraph pg = read_edge_list_file(path);
    std::cout << "I(-1) = " << value_at_minus_one(pg.graph).str() << "\n";
    if (with_poly) {
        IntegerPolynomial poly = independence_polynomial(pg.graph);
        std::string line;
        for (const auto& c : poly.coefficients()) line += c.str() + " ";
        if (!line.empty()) line.pop_back();
        std::cout << (line.empty() ? "0" : line) << "\n";
    }
    if (pg.root)
        std::cout << "bracket = " << to_string(compute_bracket(RootedGraph(pg.graph, *pg.root)))
                  << "\n";
    return 0;
}

int cmd_fvs(const std::string& path) {
    ParsedGraph pg = read_edge_list_file(path);
    DecyclingResult res = min_decycling(pg.graph);
    std::cout << "phi = " << res.phi << "\n";
    std::string line;
    for (int v : res.witness) line += std::to_string(v) + " ";
    if (!line.empty()) line.pop_back();
    std::cout << "witness =" << (line.empty() ? "" : " " + line) << "\n";
    return 0;
}

int cmd_verify(const std::string& path, int k, const std::string& q_text,
               const std::string& level_name) {
    ParsedGraph pg = read_edge_list_file(path);
    BigInt q = parse_bigint(q_text);
    VerifyOptions opts;
    opts.level = level_name.empty() ? default_level(k) : parse_verify_level(level_name);
    opts.oracle_cap = oracle_cap_from_env();
    Report report = verify_kq(pg.graph, k, q, opts);
    std::cout << "level: " << to_string(opts.level) << "\n" << report.text();
    return report.passed() ? 0 : 1;
}

int cmd_verify_cert(const std::string& path) {
    Certificate cert = certificate_from_json(read_text_file(path));
    Report report = verify_certificate(cert);
    std::cout << "target: k = " << cert.k << ", q = " << cert.q.str() << "\n" << report.text();
    return report.passed() ? 0 : 1;
}

int cmd_table(const std::string& which) {
    if (which != "c6")
        throw std::invalid_argument("unknown table '" + which + "' (available: c6)");
    // Reference rows for the hexagon's extension walk, one per length 0..6.
    const long long rows[7][3] = {{2, 1, -1},   {1, 2, 1},   {-1, 1, 2}, {-2, -1, 1},
                                  {-1, -2, -1}, {1, -1, -2}, {2, 1, -1}};
    bool all_ok = true;
    for (int ell = 0; ell <= 6; ++ell) {
        RootedGraph rooted = extend(RootedGraph(make_cycle(6), 0), ell);
        Bracket got = compute_bracket(rooted);
        Bracket want;
        want.value = rows[ell][0];
        want.a = rows[ell][1];
        want.b = rows[ell][2];
        bool ok = got == want;
        all_ok = all_ok && ok;
        std::cout << "ell=" << ell << "  " << to_string(got) << "  "
                  << (ok ? "ok" : "MISMATCH, expected " + to_string(want)) << "\n";
    }
    std::cout << (all_ok ? "table verified" : "table mismatch") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_sweep(int k, const std::string& level_name, int jobs) {
    if (k < 1) throw std::invalid_argument("sweep needs k >= 1");
    if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
    VerifyLevel level = level_name.empty() ? default_level(k) : parse_verify_level(level_name);
    int cap = oracle_cap_from_env();

    std::vector<BigInt> qs;
    for (BigInt q = -pow2(k); q <= pow2(k); ++q) qs.push_back(q);

    struct Row {
        bool pass = false;
        std::string line;
    };
    std::vector<Row> rows(qs.size());
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < qs.size(); i = next.fetch_add(1)) {
            const BigInt& q = qs[i];
            Certificate cert = synth(k, q);
            Realization real = realize(cert);
            PhiCertificate phi_cert = phi_certificate_from_realization(real);
            VerifyOptions opts;
            opts.level = level;
            opts.oracle_cap = cap;
            opts.phi_certificate = &phi_cert;
            Report report = verify_kq(real.rooted.graph, k, q, opts);
            Row row;
            row.pass = report.passed();
            std::string verdict = row.pass ? "PASS" : "FAIL";
            row.line = "q=" + q.str() + ": " + verdict +
                       "  |V|=" + std::to_string(real.rooted.graph.vertex_count()) +
                       " |E|=" + std::to_string(real.rooted.graph.edge_count());
            if (!row.pass)
                for (const auto& item : report.items)
                    if (item.checked && !item.pass) {
                        row.line += "  [" + item.clause + ": " + item.detail + "]";
                        break;
                    }
            rows[i] = std::move(row);
        }
    };

    int thread_count = std::min<int>(jobs, static_cast<int>(qs.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < thread_count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    size_t passes = 0;
    for (const auto& row : rows) {
        std::cout << row.line << "\n";
        if (row.pass) ++passes;
    }
    std::cout << "level: " << to_string(level) << "\n";
    std::cout << "passes: " << passes << "/" << rows.size() << "\n";
    return passes == rows.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence polynomial toolkit: synthesize and verify graphs "
                 "with a prescribed decycling number k and value I(G;-1) = q"};
    app.require_subcommand(1);

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "construct a connected (k, q)-graph");
    int synth_k = 0;
    std::string synth_q, synth_out, synth_cert;
    synth_cmd->add_option("k", synth_k, "target decycling number (k >= 1)")->required();
    synth_cmd->add_option("q", synth_q, "target value of I(G;-1), |q| <= 2^k")->required();
    synth_cmd->add_option("--out", synth_out, "write the edge list here instead of stdout");
    synth_cmd->add_option("--cert", synth_cert, "also write the construction certificate (JSON)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate I(G;-1) for an edge-list file");
    std::string eval_path;
    bool eval_poly = false;
    eval_cmd->add_option("graph-file", eval_path, "edge-list file")->required();
    eval_cmd->add_flag("--poly", eval_poly, "also print the full coefficient list");

    // fvs
    auto* fvs_cmd = app.add_subcommand("fvs", "exact minimum feedback vertex set");
    std::string fvs_path;
    fvs_cmd->add_option("graph-file", fvs_path, "edge-list file")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check that a graph is a (k, q)-graph");
    std::string verify_path, verify_q, verify_level;
    int verify_k = 0;
    verify_cmd->add_option("graph-file", verify_path, "edge-list file")->required();
    verify_cmd->add_option("--k", verify_k, "claimed decycling number")->required();
    verify_cmd->add_option("--q", verify_q, "claimed value of I(G;-1)")->required();
    verify_cmd->add_option("--level", verify_level, "poly, oracle, or full (default by k)");

    // verify-cert
    auto* vc_cmd = app.add_subcommand("verify-cert", "check a construction certificate file");
    std::string vc_path;
    vc_cmd->add_option("cert-file", vc_path, "certificate JSON file")->required();

    // table
    auto* table_cmd = app.add_subcommand("table", "reproduce built-in reference tables");
    std::string table_name;
    table_cmd->add_option("name", table_name, "table name (c6)")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "synth+verify every q in [-2^k, 2^k]");
    int sweep_k = 0, sweep_jobs = 1;
    std::string sweep_level;
    sweep_cmd->add_option("k", sweep_k, "target decycling number")->required();
    sweep_cmd->add_option("--level", sweep_level, "poly, oracle, or full (default by k)");
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads (tasks split by q)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits clean; usage errors exit 2
    }

    try {
        if (*synth_cmd) return cmd_synth(synth_k, synth_q, synth_out, synth_cert);
        if (*eval_cmd) return cmd_eval(eval_path, eval_poly);
        if (*fvs_cmd) return cmd_fvs(fvs_path);
        if (*verify_cmd) return cmd_verify(verify_path, verify_k, verify_q, verify_level);
        if (*vc_cmd) return cmd_verify_cert(vc_path);
        if (*table_cmd) return cmd_table(table_name);
        if (*sweep_cmd) return cmd_sweep(sweep_k, sweep_level, sweep_jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
