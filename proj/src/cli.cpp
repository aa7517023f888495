#include "sbx/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "sbx/betti.hpp"
#include "sbx/closed.hpp"
#include "sbx/constructions.hpp"
#include "sbx/families.hpp"
#include "sbx/graph_core.hpp"
#include "sbx/json_io.hpp"
#include "sbx/sbc.hpp"

namespace sbx {
namespace {

using nlohmann::ordered_json;

int desk_limit() {
    if (const char* env = std::getenv("SBC_SIZE_LIMIT")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 14;
}

void ensure_desk_scale(int vertices, bool force, const std::string& what) {
    int limit = desk_limit();
    if (!force && vertices > limit)
        throw std::invalid_argument(what + " refuses " + std::to_string(vertices) +
                                    " vertices (limit " + std::to_string(limit) +
                                    "; raise SBC_SIZE_LIMIT or pass --force)");
}

// Commands that run profile algorithms accept a profile directly or any
// bipartite graph that qualifies.
SbcProfile require_profile(const ParsedInput& in, const std::string& cmd) {
    if (std::holds_alternative<SbcProfile>(in)) return std::get<SbcProfile>(in);
    if (std::holds_alternative<BipartiteGraph>(in)) {
        auto res = check_strongly_biconvex(std::get<BipartiteGraph>(in));
        if (!res.ok())
            throw std::invalid_argument("input graph is not strongly biconvex: " +
                                        res.violation->condition + " (" + res.violation->witness +
                                        ")");
        return *res.profile;
    }
    throw MalformedInput(cmd + " needs a profile or bipartite graph");
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << "\n"; }

std::string pairs_text(const std::vector<std::pair<int, int>>& ps) {
    std::ostringstream ss;
    for (std::size_t k = 0; k < ps.size(); ++k)
        ss << (k ? " " : "") << "(" << ps[k].first << "," << ps[k].second << ")";
    return ss.str();
}

std::string profile_text(const SbcProfile& p) {
    std::ostringstream ss;
    ss << "q=" << p.q << " f=" << p.f << " qprime=" << p.qprime << " g=" << p.g << "\nM =";
    for (int v : p.M) ss << " " << v;
    return ss.str();
}

void support_text(std::ostream& out, const BettiSupport& s) {
    out << "projdim " << s.projdim << "\nreg " << s.reg << "\nunique_extremal "
        << (s.unique_extremal ? "true" : "false") << "\nextremal: "
        << pairs_text(s.extremal) << "\n";
    if (s.positions.empty()) return;
    // table rows are j - i = 0..reg, columns i = 1..projdim
    out << "table rows j-i, columns i:\n";
    for (int row = 0; row <= s.reg; ++row) {
        out << row << " |";
        for (int i = 1; i <= s.projdim; ++i)
            out << (s.positions.count({i, i + row}) ? " *" : " .");
        out << "\n";
    }
}

void family_text(std::ostream& out, const DisjointFamily& fam) {
    for (std::size_t k = 0; k < fam.blocks.size(); ++k) {
        const Block& b = fam.blocks[k];
        out << "block " << k + 1 << ": x[" << b.min_x() << ".." << b.max_x() << "] y["
            << b.min_y() << ".." << b.max_y() << "] witness (" << b.witness.first << ","
            << b.witness.second << ")\n";
    }
}

int do_check(const std::string& file, const std::string& format, std::ostream& out) {
    ParsedInput in = load_input_file(file);
    ordered_json j;
    int code = 0;
    if (std::holds_alternative<SbcProfile>(in)) {
        j["ok"] = true;
        j["profile"] = profile_to_json(std::get<SbcProfile>(in));
    } else if (std::holds_alternative<BipartiteGraph>(in)) {
        auto res = check_strongly_biconvex(std::get<BipartiteGraph>(in));
        if (res.ok()) {
            j["ok"] = true;
            j["profile"] = profile_to_json(*res.profile);
        } else {
            j["ok"] = false;
            j["condition"] = res.violation->condition;
            j["witness"] = res.violation->witness;
            code = 1;
        }
    } else if (std::holds_alternative<ClosedGraph>(in)) {
        const auto& c = std::get<ClosedGraph>(in);
        j["ok"] = true;
        j["closed"] = closed_to_json(c);
        j["initial_profile"] = profile_to_json(initial_graph(c).profile);
    } else {
        auto chk = is_closed_labeling(std::get<SimpleGraph>(in));
        j["ok"] = chk.ok;
        auto arr = ordered_json::array();
        for (auto& [a, b] : chk.cliques) arr.push_back({a, b});
        j["cliques"] = std::move(arr);
        if (!chk.ok) code = 1;
    }
    if (format == "text") {
        if (j["ok"].get<bool>()) {
            out << "ok\n";
            if (j.contains("profile"))
                out << profile_text(std::holds_alternative<SbcProfile>(in)
                                        ? std::get<SbcProfile>(in)
                                        : *check_strongly_biconvex(std::get<BipartiteGraph>(in))
                                               .profile)
                    << "\n";
        } else if (j.contains("condition")) {
            out << "violation: " << j["condition"].get<std::string>() << "\n  "
                << j["witness"].get<std::string>() << "\n";
        } else {
            out << "not a closed labeling\n";
        }
    } else {
        emit(out, j);
    }
    return code;
}

int do_inm(const std::string& file, bool oracle, bool force, const std::string& format,
           std::ostream& out, std::ostream& err) {
    SbcProfile p = require_profile(load_input_file(file), "inm");
    GreedyTrace trace = greedy_induced_matching(p);
    ordered_json j;
    j["size"] = trace.size();
    auto arr = ordered_json::array();
    for (auto& [a, b] : trace.pairs) arr.push_back({a, b});
    j["pairs"] = std::move(arr);
    if (oracle) {
        BipartiteGraph g = p.to_graph();
        ensure_desk_scale(g.vertex_count(), force, "the matching oracle");
        auto [bsize, bm] = brute_force_inm(g);
        j["oracle_size"] = bsize;
        if (bsize != trace.size()) {
            err << "greedy size " << trace.size() << " but the oracle found " << bsize << "\n";
            emit(out, j);
            return 1;
        }
    }
    if (format == "text") {
        out << "size " << trace.size() << "\npairs: " << pairs_text(trace.pairs) << "\n";
        if (oracle) out << "oracle agrees\n";
    } else {
        emit(out, j);
    }
    return 0;
}

int do_d(const std::string& file, int r, bool oracle, bool force, const std::string& format,
         std::ostream& out, std::ostream& err) {
    SbcProfile p = require_profile(load_input_file(file), "d");
    ordered_json j;
    std::optional<DisjointFamily> fam;
    if (r < 0) {
        long long v = d_recursive(p);
        j["d"] = v;
        if (oracle) {
            BipartiteGraph g = p.to_graph();
            ensure_desk_scale(g.vertex_count(), force, "the d oracle");
            auto [bv, bfam] = brute_force_d(g);
            j["oracle_d"] = bv;
            if (bv != v) {
                err << "d " << v << " but the oracle found " << bv << "\n";
                emit(out, j);
                return 1;
            }
        }
    } else {
        auto res = d_stratified(p, r);
        j["r"] = r;
        j["feasible"] = res.has_value();
        if (res) {
            j["d"] = res->first;
            j["family"] = family_to_json(res->second);
            fam = res->second;
        }
        if (oracle) {
            BipartiteGraph g = p.to_graph();
            ensure_desk_scale(g.vertex_count(), force, "the d oracle");
            auto bres = brute_force_d(g, r);
            j["oracle_feasible"] = bres.has_value();
            if (bres) j["oracle_d"] = bres->first;
            bool same = res.has_value() == bres.has_value() &&
                        (!res || res->first == bres->first);
            if (!same) {
                err << "stratified d disagrees with the oracle at r=" << r << "\n";
                emit(out, j);
                return 1;
            }
        }
    }
    if (format == "text") {
        if (r < 0)
            out << "d = " << j["d"].get<long long>() << "\n";
        else if (j["feasible"].get<bool>())
            out << "d_" << r << " = " << j["d"].get<long long>() << "\n";
        else
            out << "no family of size " << r << "\n";
        if (fam) family_text(out, *fam);
        if (oracle) out << "oracle agrees\n";
    } else {
        emit(out, j);
    }
    return 0;
}

int do_betti(const std::string& file, int hochster_char, bool force, const std::string& format,
             std::ostream& out, std::ostream& err) {
    ParsedInput in = load_input_file(file);
    BettiSupport s;
    SimpleGraph host;  // used for the homology verification pass
    if (std::holds_alternative<SimpleGraph>(in)) {
        host = std::get<SimpleGraph>(in);
        ensure_desk_scale(host.n, force, "the support search");
        s = betti_support_weakly_chordal(host);
    } else {
        SbcProfile p = require_profile(in, "betti");
        s = betti_support_profile(p);
        host = simple_from_bipartite(p.to_graph());
    }
    ordered_json j = support_to_json(s);
    if (hochster_char > 0) {
        ensure_desk_scale(host.n, force, "the homology verification");
        BettiSupport hs = betti_support_hochster(host, hochster_char);
        j["hochster"] = ordered_json{{"characteristic", hochster_char}, {"agrees", hs == s}};
        if (!(hs == s)) {
            err << "support disagrees with the homology computation at characteristic "
                << hochster_char << "\n";
            emit(out, j);
            return 1;
        }
    }
    if (format == "text") {
        support_text(out, s);
        if (hochster_char > 0)
            out << "homology verification at characteristic " << hochster_char << ": agrees\n";
    } else {
        emit(out, j);
    }
    return 0;
}

ordered_json binomial_to_json(const BinomialReport& rep) {
    ordered_json j;
    j["reg"] = rep.reg;
    j["projdim"] = rep.projdim;
    j["support_of_initial"] = support_to_json(rep.initial);
    auto ext = ordered_json::array();
    for (auto& [a, b] : rep.initial.extremal) ext.push_back({a, b});
    j["extremal_of_initial"] = std::move(ext);
    auto certs = ordered_json::array();
    for (auto& [a, b] : rep.vanishing_certificates) certs.push_back({a, b});
    j["binomial_vanishing_certificates"] = std::move(certs);
    j["forced_nonzero"] = ordered_json{{"column", rep.projdim}, {"row", rep.reg}};
    j["other_binomial_betti"] = "not_determined";
    j["unique_extremal"] = rep.unique_extremal_verdict;
    return j;
}

int do_closed(const std::string& file, const std::string& mode, const std::string& format,
              std::ostream& out) {
    ParsedInput in = load_input_file(file);
    if (!std::holds_alternative<ClosedGraph>(in))
        throw MalformedInput("closed needs a closed-graph input");
    const auto& c = std::get<ClosedGraph>(in);
    if (mode == "initial") {
        InitialGraph ini = initial_graph(c);
        if (format == "text") {
            out << profile_text(ini.profile) << "\n";
        } else {
            ordered_json j;
            j["graph"] = bipartite_to_json(ini.graph);
            j["profile"] = profile_to_json(ini.profile);
            emit(out, j);
        }
        return 0;
    }
    BinomialReport rep = binomial_invariants(c);
    if (format == "text") {
        out << "reg " << rep.reg << "\nprojdim " << rep.projdim << "\nunique_extremal "
            << rep.unique_extremal_verdict << "\nvanishing certificates:";
        for (auto& [a, b] : rep.vanishing_certificates) out << " (" << a << "," << b << ")";
        out << "\n";
    } else {
        emit(out, binomial_to_json(rep));
    }
    return 0;
}

ordered_json inm_json(const SbcProfile& p) {
    GreedyTrace t = greedy_induced_matching(p);
    ordered_json j;
    j["size"] = t.size();
    auto arr = ordered_json::array();
    for (auto& [a, b] : t.pairs) arr.push_back({a, b});
    j["pairs"] = std::move(arr);
    return j;
}

ordered_json stratified_json(const SbcProfile& p) {
    auto strat = ordered_json::array();
    int inm = greedy_induced_matching(p).size();
    for (int r = 1; r <= inm; ++r) {
        auto res = d_stratified(p, r);
        ordered_json row;
        row["r"] = r;
        if (res)
            row["d"] = res->first;
        else
            row["feasible"] = false;
        strat.push_back(std::move(row));
    }
    return strat;
}

int do_reproduce(const std::string& name, int t, const std::string& format, std::ostream& out) {
    ordered_json j;
    if (name == "h0") {
        SbcProfile p = build_h0();
        j["construction"] = "h0";
        j["profile"] = profile_to_json(p);
        j["inm"] = inm_json(p);
        long long d = d_recursive(p);
        j["d"] = d;
        j["stratified"] = stratified_json(p);
        j["support"] = support_to_json(betti_support_profile(p));
        if (format == "text") {
            out << "construction h0\n" << profile_text(p) << "\n";
            out << "inm " << j["inm"]["size"].get<int>() << ": "
                << pairs_text(greedy_induced_matching(p).pairs) << "\n";
            out << "d = " << d << "\n";
            for (auto& row : j["stratified"])
                if (row.contains("d"))
                    out << "d_" << row["r"].get<int>() << " = " << row["d"].get<long long>()
                        << "\n";
            support_text(out, betti_support_profile(p));
        } else {
            emit(out, j);
        }
        return 0;
    }
    // g0 and its gluings share the pipeline
    int copies = name == "g0" ? 1 : t;
    ClosedGraph c = build_g0t(copies);
    InitialGraph ini = initial_graph(c);
    SbcProfile base = build_h0_doubleprime();
    auto comps = connected_components(ini.graph);
    bool comps_match = static_cast<int>(comps.size()) == copies;
    if (comps_match) {
        // components come back in some order; identify each by its least label
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
        for (int k = 0; k < copies && comps_match; ++k) {
            auto res = check_strongly_biconvex(induced_subgraph(ini.graph, comps[k]));
            comps_match = res.ok() && *res.profile == shift_profile(base, 16 * k);
        }
    }
    j["construction"] = name;
    j["t"] = copies;
    j["n"] = c.n;
    j["closed"] = closed_to_json(c);
    j["initial_profile"] = profile_to_json(ini.profile);
    j["initial_components"] = comps.size();
    j["components_equal_shifted_doubleprime"] = comps_match;
    if (copies == 1) j["initial_equals_doubleprime"] = ini.profile == base;
    j["inm"] = inm_json(ini.profile);
    j["d"] = d_recursive(ini.profile);
    j["stratified"] = stratified_json(ini.profile);
    BinomialReport rep = binomial_invariants(c);
    j["binomial"] = binomial_to_json(rep);
    if (format == "text") {
        out << "construction " << name << " (t=" << copies << ", n=" << c.n << ")\n";
        out << "initial profile: " << profile_text(ini.profile) << "\n";
        out << "components " << comps.size() << (comps_match ? " (each a shifted copy)" : "")
            << "\n";
        out << "inm " << j["inm"]["size"].get<int>() << ": "
            << pairs_text(greedy_induced_matching(ini.profile).pairs) << "\n";
        out << "d = " << j["d"].get<long long>() << "\n";
        for (auto& row : j["stratified"])
            if (row.contains("d"))
                out << "d_" << row["r"].get<int>() << " = " << row["d"].get<long long>() << "\n";
        out << "reg " << rep.reg << "\nprojdim " << rep.projdim << "\nunique_extremal "
            << rep.unique_extremal_verdict << "\n";
        out << "certificate at (" << rep.projdim << "," << rep.projdim + rep.reg
            << "): " << (rep.vanishing_certificates.count({rep.projdim, rep.projdim + rep.reg})
                             ? "yes"
                             : "no")
            << "\n";
    } else {
        emit(out, j);
    }
    return 0;
}

int do_gen(std::uint64_t seed, int nx, int spread, int jump, const std::string& format,
           std::ostream& out) {
    GenParams params;
    params.qprime_spread = spread;
    params.max_jump = jump;
    SbcProfile p = random_sbc(seed, nx, params);
    if (format == "text")
        out << profile_text(p) << "\n";
    else
        emit(out, profile_to_json(p));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"strongly biconvex graphs: matchings, disjoint families, Betti supports"};
    app.require_subcommand(1);

    std::string check_file, check_format = "json";
    auto* sub_check = app.add_subcommand("check", "validate an input file");
    sub_check->add_option("file", check_file)->required();
    sub_check->add_option("--format", check_format)->check(CLI::IsMember({"json", "text"}));

    std::string inm_file, inm_format = "json";
    bool inm_oracle = false, inm_force = false;
    auto* sub_inm = app.add_subcommand("inm", "greedy maximum induced matching");
    sub_inm->add_option("file", inm_file)->required();
    sub_inm->add_flag("--oracle", inm_oracle, "cross-check against brute force");
    sub_inm->add_flag("--force", inm_force, "ignore the desk-scale guard");
    sub_inm->add_option("--format", inm_format)->check(CLI::IsMember({"json", "text"}));

    std::string d_file, d_format = "json";
    int d_r = -1;
    bool d_oracle = false, d_force = false;
    auto* sub_d = app.add_subcommand("d", "largest family value, overall or at a fixed size");
    sub_d->add_option("file", d_file)->required();
    sub_d->add_option("--r", d_r, "restrict to families of exactly this many blocks");
    sub_d->add_flag("--oracle", d_oracle, "cross-check against brute force");
    sub_d->add_flag("--force", d_force, "ignore the desk-scale guard");
    sub_d->add_option("--format", d_format)->check(CLI::IsMember({"json", "text"}));

    std::string betti_file, betti_format = "json";
    int betti_char = 0;
    bool betti_force = false;
    auto* sub_betti = app.add_subcommand("betti", "graded Betti support of the edge ideal");
    sub_betti->add_option("file", betti_file)->required();
    sub_betti->add_option("--hochster-char", betti_char,
                          "verify via simplicial homology at this characteristic");
    sub_betti->add_flag("--force", betti_force, "ignore the desk-scale guard");
    sub_betti->add_option("--format", betti_format)->check(CLI::IsMember({"json", "text"}));

    std::string closed_file, closed_mode, closed_format = "json";
    auto* sub_closed = app.add_subcommand("closed", "initial graph or binomial transfer report");
    sub_closed->add_option("file", closed_file)->required();
    sub_closed->add_option("mode", closed_mode)
        ->required()
        ->check(CLI::IsMember({"initial", "invariants"}));
    sub_closed->add_option("--format", closed_format)->check(CLI::IsMember({"json", "text"}));

    std::string rep_name, rep_format = "json";
    int rep_t = 1;
    auto* sub_rep = app.add_subcommand("reproduce", "run a named construction end to end");
    sub_rep->add_option("name", rep_name)->required()->check(CLI::IsMember({"h0", "g0", "g0t"}));
    sub_rep->add_option("--t", rep_t, "number of glued copies for g0t");
    sub_rep->add_option("--format", rep_format)->check(CLI::IsMember({"json", "text"}));

    std::uint64_t gen_seed = 1;
    int gen_nx = 0, gen_spread = 4, gen_jump = 3;
    std::string gen_format = "json";
    auto* sub_gen = app.add_subcommand("gen", "emit a seeded random profile");
    sub_gen->add_option("--seed", gen_seed);
    sub_gen->add_option("--nx", gen_nx)->required();
    sub_gen->add_option("--spread", gen_spread, "how far the first y label may exceed 2");
    sub_gen->add_option("--jump", gen_jump, "largest per-step growth of M");
    sub_gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv;
    argv.push_back("sbx");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*sub_check) return do_check(check_file, check_format, out);
        if (*sub_inm) return do_inm(inm_file, inm_oracle, inm_force, inm_format, out, err);
        if (*sub_d) return do_d(d_file, d_r, d_oracle, d_force, d_format, out, err);
        if (*sub_betti) return do_betti(betti_file, betti_char, betti_force, betti_format, out, err);
        if (*sub_closed) return do_closed(closed_file, closed_mode, closed_format, out);
        if (*sub_rep) return do_reproduce(rep_name, rep_t, rep_format, out);
        if (*sub_gen) return do_gen(gen_seed, gen_nx, gen_spread, gen_jump, gen_format, out);
        err << "no command\n";
        return 2;
    } catch (const MalformedInput& e) {
        err << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sbx
