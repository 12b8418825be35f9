#include "indpoly/certificate.hpp"

#include <utility>

#include <json.hpp>

namespace indpoly {

using nlohmann::json;

std::string base_graph_name(BaseGraph b) {
    switch (b) {
        case BaseGraph::K1: return "K1";
        case BaseGraph::K2: return "K2";
        case BaseGraph::C6: return "C6";
    }
    throw std::logic_error("unknown base graph");
}

Bracket base_bracket(BaseGraph b) {
    switch (b) {
        case BaseGraph::K1: return bracket_k1();
        case BaseGraph::K2: return bracket_k2();
        case BaseGraph::C6: return bracket_c6();
    }
    throw std::logic_error("unknown base graph");
}

int base_phi(BaseGraph b) { return b == BaseGraph::C6 ? 1 : 0; }

static int base_size(BaseGraph b) {
    switch (b) {
        case BaseGraph::K1: return 1;
        case BaseGraph::K2: return 2;
        case BaseGraph::C6: return 6;
    }
    throw std::logic_error("unknown base graph");
}

CertNodePtr cert_base(BaseGraph b) {
    auto node = std::make_shared<CertNode>();
    node->kind = CertNode::Kind::Base;
    node->base = b;
    node->claimed_bracket = base_bracket(b);
    node->claimed_phi = base_phi(b);
    return node;
}

CertNodePtr cert_extend(int ell, CertNodePtr child) {
    if (ell < 0) throw std::invalid_argument("extension length must be >= 0");
    if (!child) throw std::invalid_argument("extend node needs a child");
    auto node = std::make_shared<CertNode>();
    node->kind = CertNode::Kind::Extend;
    node->ell = ell;
    node->claimed_bracket = extend_bracket(child->claimed_bracket, ell);
    node->claimed_phi = child->claimed_phi;
    node->children.push_back(std::move(child));
    return node;
}

CertNodePtr cert_paste(CertNodePtr left, CertNodePtr right) {
    if (!left || !right) throw std::invalid_argument("paste node needs two children");
    if (realized_size(*left) < 2 || realized_size(*right) < 2)
        throw std::invalid_argument("paste operands must have at least 2 vertices");
    auto node = std::make_shared<CertNode>();
    node->kind = CertNode::Kind::Paste;
    node->claimed_bracket = paste_brackets(left->claimed_bracket, right->claimed_bracket);
    node->claimed_phi = left->claimed_phi + right->claimed_phi;
    node->children.push_back(std::move(left));
    node->children.push_back(std::move(right));
    return node;
}

Bracket predicted_bracket(const CertNode& node) {
    switch (node.kind) {
        case CertNode::Kind::Base:
            return base_bracket(node.base);
        case CertNode::Kind::Extend:
            return extend_bracket(predicted_bracket(*node.children.at(0)), node.ell);
        case CertNode::Kind::Paste:
            return paste_brackets(predicted_bracket(*node.children.at(0)),
                                  predicted_bracket(*node.children.at(1)));
    }
    throw std::logic_error("unknown node kind");
}

int predicted_phi(const CertNode& node) {
    switch (node.kind) {
        case CertNode::Kind::Base:
            return base_phi(node.base);
        case CertNode::Kind::Extend:
            return predicted_phi(*node.children.at(0));
        case CertNode::Kind::Paste:
            return predicted_phi(*node.children.at(0)) + predicted_phi(*node.children.at(1));
    }
    throw std::logic_error("unknown node kind");
}

long long realized_size(const CertNode& node) {
    switch (node.kind) {
        case CertNode::Kind::Base:
            return base_size(node.base);
        case CertNode::Kind::Extend:
            return realized_size(*node.children.at(0)) + node.ell;
        case CertNode::Kind::Paste:
            return realized_size(*node.children.at(0)) + realized_size(*node.children.at(1)) - 1;
    }
    throw std::logic_error("unknown node kind");
}

Realization realize(const CertNode& node) {
    switch (node.kind) {
        case CertNode::Kind::Base: {
            switch (node.base) {
                case BaseGraph::K1: return Realization{RootedGraph(make_path(1), 0), {}};
                case BaseGraph::K2: return Realization{RootedGraph(make_path(2), 0), {}};
                case BaseGraph::C6:
                    return Realization{RootedGraph(make_cycle(6), 0), {{0, 1, 2, 3, 4, 5}}};
            }
            throw std::logic_error("unknown base graph");
        }
        case CertNode::Kind::Extend: {
            Realization r = realize(*node.children.at(0));
            // extension appends fresh vertices and keeps existing labels
            r.rooted = extend(r.rooted, node.ell);
            return r;
        }
        case CertNode::Kind::Paste: {
            Realization l = realize(*node.children.at(0));
            Realization r = realize(*node.children.at(1));
            PasteMaps maps;
            RootedGraph merged = paste_with_maps(l.rooted, r.rooted, maps);
            Realization out{std::move(merged), {}};
            for (auto& hex : l.hexagons) {
                for (int& v : hex) v = maps.left[v];
                out.hexagons.push_back(std::move(hex));
            }
            for (auto& hex : r.hexagons) {
                for (int& v : hex) v = maps.right[v];
                out.hexagons.push_back(std::move(hex));
            }
            return out;
        }
    }
    throw std::logic_error("unknown node kind");
}

Realization realize(const Certificate& cert) {
    if (!cert.root) throw std::invalid_argument("certificate has no construction tree");
    return realize(*cert.root);
}

// ---- cert-v1 JSON ----------------------------------------------------------

static json bigint_to_json(const BigInt& x) { return x.str(); }

// Accepts a decimal string (canonical) or a plain JSON integer (convenience
// for hand-written files).
static BigInt bigint_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_bigint(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw CertParseError(where + ": " + e.what());
        }
    }
    throw CertParseError(where + ": expected integer or decimal string");
}

static json node_to_json(const CertNode& node) {
    json j;
    switch (node.kind) {
        case CertNode::Kind::Base:
            j["kind"] = "base";
            j["base"] = base_graph_name(node.base);
            break;
        case CertNode::Kind::Extend:
            j["kind"] = "extend";
            j["ell"] = node.ell;
            j["children"] = json::array({node_to_json(*node.children.at(0))});
            break;
        case CertNode::Kind::Paste:
            j["kind"] = "paste";
            j["children"] = json::array({node_to_json(*node.children.at(0)),
                                         node_to_json(*node.children.at(1))});
            break;
    }
    j["bracket"] = json::array({bigint_to_json(node.claimed_bracket.value),
                                bigint_to_json(node.claimed_bracket.a),
                                bigint_to_json(node.claimed_bracket.b)});
    j["phi"] = node.claimed_phi;
    return j;
}

static CertNodePtr node_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw CertParseError(path + ": node must be an object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw CertParseError(path + ": missing string field 'kind'");
    std::string kind = j["kind"].get<std::string>();

    auto node = std::make_shared<CertNode>();
    size_t expected_children = 0;
    if (kind == "base") {
        node->kind = CertNode::Kind::Base;
        if (!j.contains("base") || !j["base"].is_string())
            throw CertParseError(path + ": base node needs string field 'base'");
        std::string name = j["base"].get<std::string>();
        if (name == "K1")
            node->base = BaseGraph::K1;
        else if (name == "K2")
            node->base = BaseGraph::K2;
        else if (name == "C6")
            node->base = BaseGraph::C6;
        else
            throw CertParseError(path + ": unknown base graph '" + name + "'");
    } else if (kind == "extend") {
        node->kind = CertNode::Kind::Extend;
        if (!j.contains("ell") || !j["ell"].is_number_integer())
            throw CertParseError(path + ": extend node needs integer field 'ell'");
        node->ell = j["ell"].get<int>();
        if (node->ell < 0) throw CertParseError(path + ": 'ell' must be >= 0");
        expected_children = 1;
    } else if (kind == "paste") {
        node->kind = CertNode::Kind::Paste;
        expected_children = 2;
    } else {
        throw CertParseError(path + ": unknown kind '" + kind + "'");
    }

    if (expected_children == 0) {
        if (j.contains("children") && !(j["children"].is_array() && j["children"].empty()))
            throw CertParseError(path + ": base node cannot have children");
    } else {
        if (!j.contains("children") || !j["children"].is_array() ||
            j["children"].size() != expected_children)
            throw CertParseError(path + ": '" + kind + "' node needs exactly " +
                                 std::to_string(expected_children) + " children");
        for (size_t i = 0; i < expected_children; ++i)
            node->children.push_back(
                node_from_json(j["children"][i], path + ".children[" + std::to_string(i) + "]"));
    }

    if (!j.contains("bracket") || !j["bracket"].is_array() || j["bracket"].size() != 3)
        throw CertParseError(path + ": 'bracket' must be an array of 3 integers");
    node->claimed_bracket.value = bigint_from_json(j["bracket"][0], path + ".bracket[0]");
    node->claimed_bracket.a = bigint_from_json(j["bracket"][1], path + ".bracket[1]");
    node->claimed_bracket.b = bigint_from_json(j["bracket"][2], path + ".bracket[2]");
    // Deliberately no consistency check here: tampered claims must survive
    // parsing so verification can report them.

    if (!j.contains("phi") || !j["phi"].is_number_integer())
        throw CertParseError(path + ": missing integer field 'phi'");
    node->claimed_phi = j["phi"].get<int>();

    return node;
}

std::string certificate_to_json(const Certificate& cert) {
    if (!cert.root) throw std::invalid_argument("certificate has no construction tree");
    json j;
    j["format"] = "cert-v1";
    j["target"] = {{"k", cert.k}, {"q", bigint_to_json(cert.q)}};
    j["root"] = node_to_json(*cert.root);
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CertParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CertParseError("top level must be an object");
    if (!j.contains("format") || j["format"] != "cert-v1")
        throw CertParseError("missing or unsupported 'format' (expected \"cert-v1\")");
    if (!j.contains("target") || !j["target"].is_object())
        throw CertParseError("missing object field 'target'");
    const json& t = j["target"];
    if (!t.contains("k") || !t["k"].is_number_integer())
        throw CertParseError("target needs integer field 'k'");
    if (!t.contains("q")) throw CertParseError("target needs field 'q'");
    if (!j.contains("root")) throw CertParseError("missing field 'root'");

    Certificate cert;
    cert.k = t["k"].get<int>();
    cert.q = bigint_from_json(t["q"], "target.q");
    cert.root = node_from_json(j["root"], "root");
    return cert;
}

}  // namespace indpoly
