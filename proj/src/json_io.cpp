#include "sbx/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sbx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw MalformedInput(what); }

int get_int(const json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    if (!j[key].is_number_integer()) bad(std::string("key \"") + key + "\" must be an integer");
    return j[key].get<int>();
}

std::vector<int> get_int_array(const json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    if (!j[key].is_array()) bad(std::string("key \"") + key + "\" must be an array");
    std::vector<int> out;
    for (auto& v : j[key]) {
        if (!v.is_number_integer()) bad(std::string("key \"") + key + "\" must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::pair<int, int>> get_pair_array(const json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    if (!j[key].is_array()) bad(std::string("key \"") + key + "\" must be an array");
    std::vector<std::pair<int, int>> out;
    for (auto& v : j[key]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer())
            bad(std::string("entries of \"") + key + "\" must be integer pairs");
        out.push_back({v[0].get<int>(), v[1].get<int>()});
    }
    return out;
}

BipartiteGraph parse_bipartite(const json& j) {
    auto xs = get_int_array(j, "x");
    auto ys = get_int_array(j, "y");
    auto edges = get_pair_array(j, "edges");
    std::set<int> xset(xs.begin(), xs.end()), yset(ys.begin(), ys.end());
    if (xset.size() != xs.size() || yset.size() != ys.size()) bad("duplicate vertex labels");
    for (auto& [a, b] : edges)
        if (!xset.count(a) || !yset.count(b)) bad("edge endpoint not in the vertex lists");
    return BipartiteGraph::make(xs, ys, edges);
}

SimpleGraph parse_simple(const json& j) {
    int n = get_int(j, "n");
    if (n < 0) bad("vertex count must be nonnegative");
    auto edges = get_pair_array(j, "edges");
    for (auto& [a, b] : edges)
        if (a < 1 || a > n || b < 1 || b > n || a == b) bad("edge endpoint out of range");
    return SimpleGraph::make(n, edges);
}

SbcProfile parse_profile(const json& j) {
    int q = get_int(j, "q");
    int qprime = get_int(j, "qprime");
    auto M = get_int_array(j, "M");
    // f and g are redundant with q + |M| and M.back(); when present they
    // must agree, otherwise the file contradicts itself.
    if (j.contains("f") && get_int(j, "f") != q + static_cast<int>(M.size()) - 1)
        bad("key \"f\" disagrees with q and the length of M");
    if (j.contains("g") && !M.empty() && get_int(j, "g") != M.back())
        bad("key \"g\" disagrees with the last entry of M");
    return SbcProfile::make(q, qprime, M);
}

ClosedGraph parse_closed(const json& j) {
    int n = get_int(j, "n");
    auto cliques = get_pair_array(j, "cliques");
    return ClosedGraph::make(n, cliques);
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    if (!j.contains("type") || !j["type"].is_string()) bad("missing string key \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "bipartite") return parse_bipartite(j);
    if (type == "simple") return parse_simple(j);
    if (type == "sbc_profile") return parse_profile(j);
    if (type == "closed") return parse_closed(j);
    bad("unknown type \"" + type + "\"");
}

ParsedInput load_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

nlohmann::ordered_json profile_to_json(const SbcProfile& p) {
    ordered_json j;
    j["type"] = "sbc_profile";
    j["q"] = p.q;
    j["f"] = p.f;
    j["qprime"] = p.qprime;
    j["g"] = p.g;
    j["M"] = p.M;
    return j;
}

nlohmann::ordered_json bipartite_to_json(const BipartiteGraph& g) {
    ordered_json j;
    j["type"] = "bipartite";
    j["x"] = g.xs;
    j["y"] = g.ys;
    auto e = ordered_json::array();
    for (auto& [a, b] : g.edges()) e.push_back({a, b});
    j["edges"] = std::move(e);
    return j;
}

nlohmann::ordered_json simple_to_json(const SimpleGraph& g) {
    ordered_json j;
    j["type"] = "simple";
    j["n"] = g.n;
    auto e = ordered_json::array();
    for (auto& [a, b] : g.edges) e.push_back({a, b});
    j["edges"] = std::move(e);
    return j;
}

nlohmann::ordered_json closed_to_json(const ClosedGraph& c) {
    ordered_json j;
    j["type"] = "closed";
    j["n"] = c.n;
    auto cl = ordered_json::array();
    for (auto& [a, b] : c.cliques) cl.push_back({a, b});
    j["cliques"] = std::move(cl);
    return j;
}

nlohmann::ordered_json family_to_json(const DisjointFamily& f) {
    ordered_json j;
    auto blocks = ordered_json::array();
    for (auto& b : f.blocks) {
        ordered_json jb;
        jb["x"] = b.x_labels;
        jb["y"] = b.y_labels;
        jb["witness"] = {b.witness.first, b.witness.second};
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

nlohmann::ordered_json support_to_json(const BettiSupport& s) {
    ordered_json j;
    j["projdim"] = s.projdim;
    j["reg"] = s.reg;
    auto pos = ordered_json::array();
    for (auto& [i, jj] : s.positions) pos.push_back({i, jj});
    j["positions"] = std::move(pos);
    auto ext = ordered_json::array();
    for (auto& [i, jj] : s.extremal) ext.push_back({i, jj});
    j["extremal"] = std::move(ext);
    j["unique_extremal"] = s.unique_extremal;
    return j;
}

}  // namespace sbx
