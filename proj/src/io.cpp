#include "indpoly/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace indpoly {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

// Parses "<head> <int> [<int>]" strictly: known head token, the right number
// of integer fields, nothing trailing.
bool next_int(std::istringstream& ss, long long& out) {
    return static_cast<bool>(ss >> out);
}

}  // namespace

ParsedGraph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_n = false;
    long long n = 0;
    std::optional<int> root;
    std::vector<Edge> edges;
    std::set<Edge> seen;  // duplicate detection

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ss(line);
        std::string head;
        ss >> head;

        if (!have_n) {
            if (head != "n") throw ParseError(line_no, "expected header 'n <vertex_count>'");
            if (!next_int(ss, n) || n < 0)
                throw ParseError(line_no, "vertex count must be a non-negative integer");
            if (n > 10'000'000) throw ParseError(line_no, "vertex count implausibly large");
            std::string extra;
            if (ss >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
            have_n = true;
            continue;
        }

        if (head == "n") throw ParseError(line_no, "duplicate header line");
        if (head == "r") {
            if (root) throw ParseError(line_no, "duplicate root line");
            long long r = 0;
            if (!next_int(ss, r)) throw ParseError(line_no, "expected 'r <root>'");
            if (r < 0 || r >= n)
                throw ParseError(line_no, "root " + std::to_string(r) + " out of range [0, " +
                                              std::to_string(n) + ")");
            std::string extra;
            if (ss >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
            root = static_cast<int>(r);
            continue;
        }

        // Edge line: the head token must itself be the first endpoint.
        long long u = 0, v = 0;
        std::istringstream edge_ss(line);
        if (!(edge_ss >> u >> v))
            throw ParseError(line_no, "expected edge 'u v', got '" + line + "'");
        std::string extra;
        if (edge_ss >> extra)
            throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        int a = static_cast<int>(std::min(u, v)), b = static_cast<int>(std::max(u, v));
        if (!seen.emplace(a, b).second)
            throw ParseError(line_no, "duplicate edge (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ")");
        edges.emplace_back(a, b);
    }

    if (!have_n) throw ParseError(line_no, "missing header 'n <vertex_count>'");
    ParsedGraph out{Graph(static_cast<int>(n), std::move(edges)), root};
    return out;
}

ParsedGraph read_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::optional<int> root) {
    out << "n " << g.vertex_count() << "\n";
    if (root) out << "r " << *root << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string edge_list_string(const Graph& g, std::optional<int> root) {
    std::ostringstream out;
    write_edge_list(out, g, root);
    return out.str();
}

void write_edge_list_file(const std::string& path, const Graph& g, std::optional<int> root) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_edge_list(out, g, root);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace indpoly
