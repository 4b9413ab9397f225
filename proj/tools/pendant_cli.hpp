#pragma once

// Command layer of the `pendant` tool, kept in a header so tests can drive
// it in-process with their own streams.

#include <pendant/pendant.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pendant::cli {

enum Exit : int
{
    ok = 0,
    usage = 1,
    input_error = 2,
    verify_failed = 3,
    contract_violation = 4,
};

inline constexpr int large_instance = 12;

struct RunConfig
{
    std::string command;
    std::string sub; ///< gadget / oracle kind
    std::string graph, certificate, hypergraph, tripartite, out;
    std::string terminals;
    std::optional<int> target;
    int k = 3;
    int ell = 2;
    int big_n = 2;
    int threads = 0;
    Vertex s1 = 0, s2 = 0, t1 = 0, t2 = 0;
    Vertex x1 = 0, y1 = 1, x2 = 2, y2 = 3;
    std::string family;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    bool json = false;
    bool allow_large = false;
    bool per_spec = false;
};

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (! out || ! (out << text))
        throw std::runtime_error("cannot write " + path);
}

inline TerminalSpec parse_terminal_list(const std::string &csv, int n)
{
    std::vector<Vertex> ids;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            ids.push_back(v);
        }
        catch (const std::logic_error &) {
            throw ParseError(0, "bad terminal id '" + item + "'");
        }
    }
    if (ids.size() < 2)
        throw ParseError(0, "--terminals needs a root and at least one more vertex");
    try {
        return TerminalSpec::make(n, ids.front(), std::vector<Vertex>(ids.begin() + 1, ids.end()));
    }
    catch (const InvalidDigraph &e) {
        throw ParseError(0, e.what());
    }
}

inline std::string spec_text(const TerminalSpec &s)
{
    std::string out = std::to_string(s.root());
    for (Vertex v : s.sinks())
        out += "," + std::to_string(v);
    return out;
}

using Json = nlohmann::ordered_json;

/// Emits either `key: value` lines or one JSON object.
class Report
{
public:
    explicit Report(bool json) : json_(json) {}

    template <typename T>
    void put(const std::string &key, const T &value)
    {
        data_[key] = value;
        order_.push_back(key);
    }

    void print(std::ostream &out) const
    {
        if (json_) {
            out << data_.dump(2) << '\n';
            return;
        }
        for (const auto &key : order_) {
            const Json &v = data_.at(key);
            if (v.is_string()) {
                const auto &s = v.get_ref<const std::string &>();
                if (s.find('\n') != std::string::npos)
                    out << key << ":\n" << s;
                else
                    out << key << ": " << s << '\n';
            }
            else
                out << key << ": " << v.dump() << '\n';
        }
    }

private:
    bool json_;
    Json data_ = Json::object();
    std::vector<std::string> order_;
};

inline void put_stats(Report &r, const SolveStats &s)
{
    r.put("trees_enumerated", s.trees_enumerated);
    r.put("candidate_sets", s.candidate_sets);
    r.put("search_nodes", s.search_nodes);
}

inline int cmd_solve(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    Digraph d = parse_digraph(read_file(c.graph));
    TerminalSpec spec = parse_terminal_list(c.terminals, d.order());
    if (d.order() > large_instance && ! c.allow_large) {
        err << "warning: " << d.order() << " vertices exceeds " << large_instance
            << "; the exact solver is exponential. Pass --allow-large to run anyway.\n";
        return input_error;
    }
    SolveResult res = solve_tau_sr(d, spec, c.target);
    auto check = validate_packing(d, res.certificate);
    Report r(c.json);
    r.put("command", "solve");
    r.put("terminals", spec_text(spec));
    r.put("value", res.value);
    r.put("at_least", res.lower_bound_only);
    r.put("upper_bound", res.upper_bound);
    put_stats(r, res.stats);
    r.put("certificate", write_certificate(res.certificate));
    r.print(out);
    if (! check.ok()) {
        err << "error: certificate failed validation (" << to_string(check.defect) << ")\n";
        return contract_violation;
    }
    return ok;
}

inline int cmd_tau_k(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    Digraph d = parse_digraph(read_file(c.graph));
    if (c.k < 2 || c.k > d.order())
        throw ParseError(0, "--k must satisfy 2 <= k <= n");
    TauKResult res = solve_tau_k(d, c.k, {c.threads, c.per_spec});
    SolveResult witness = solve_tau_sr(d, res.witness_spec);
    Report r(c.json);
    r.put("command", "tau-k");
    r.put("n", d.order());
    r.put("k", c.k);
    r.put("value", res.value);
    r.put("witness", spec_text(res.witness_spec));
    if (res.per_spec) {
        Json per = Json::object();
        for (const auto &[spec, v] : *res.per_spec)
            per[spec_text(spec)] = v;
        r.put("per_spec", per);
    }
    r.put("certificate", write_certificate(witness.certificate));
    r.print(out);
    if (witness.value != res.value || ! validate_packing(d, witness.certificate).ok()) {
        err << "error: witness re-solve disagrees with tau_k\n";
        return contract_violation;
    }
    return ok;
}

inline int cmd_bounds(const RunConfig &c, std::ostream &out, std::ostream &)
{
    Digraph d = parse_digraph(read_file(c.graph));
    if (c.k < 3 || c.k > d.order())
        throw ParseError(0, "--k must satisfy 3 <= k <= n");
    BoundsReport b = bounds_report(d, c.k, c.per_spec);
    Report r(c.json);
    r.put("command", "bounds");
    r.put("n", d.order());
    r.put("k", c.k);
    r.put("order_bound", b.order_bound);
    r.put("semidegree_bound", b.semidegree_bound);
    r.put("zero_rule_fires", b.zero_rule_fires);
    r.put("cut_bound", b.cut_bound);
    if (b.per_spec_cut) {
        Json per = Json::object();
        for (const auto &[spec, v] : *b.per_spec_cut)
            per[spec_text(spec)] = v;
        r.put("per_spec_cut", per);
    }
    r.print(out);
    return ok;
}

inline int cmd_ng_check(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    Digraph d = parse_digraph(read_file(c.graph));
    if (c.k < 3 || c.k > d.order())
        throw ParseError(0, "--k must satisfy 3 <= k <= n");
    auto ng = nordhaus_gaddum_check(d, c.k, {c.threads, false});
    Report r(c.json);
    r.put("command", "ng-check");
    r.put("n", ng.n);
    r.put("k", ng.k);
    r.put("tau", ng.tau);
    r.put("tau_complement", ng.tau_complement);
    r.put("sum", ng.sum);
    r.put("sum_upper", ng.sum_upper);
    r.put("product", ng.product);
    r.put("product_upper", ng.product_upper);
    r.put("sum_ok", ng.sum_ok);
    r.put("product_ok", ng.product_ok);
    r.put("sum_attains_upper", ng.sum_attains_upper);
    r.put("sum_attains_zero", ng.sum_attains_zero);
    r.put("product_attains_upper", ng.product_attains_upper);
    r.put("product_attains_zero", ng.product_attains_zero);
    r.print(out);
    if (! ng.ok()) {
        err << "error: Nordhaus-Gaddum bound violated\n";
        return contract_violation;
    }
    return ok;
}

inline int cmd_gadget(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    GadgetInstance g;
    if (c.sub == "eulerian") {
        Digraph d = parse_digraph(read_file(c.graph));
        if (! is_eulerian(d))
            err << "warning: source digraph is not Eulerian; building the gadget anyway\n";
        g = gadget_eulerian(d, c.s1, c.s2, c.t1, c.t2, c.k, c.ell);
    }
    else if (c.sub == "cllm")
        g = gadget_cllm(parse_tripartite(read_file(c.tripartite)), c.k);
    else if (c.sub == "hypergraph")
        g = gadget_hypergraph(parse_hypergraph(read_file(c.hypergraph)), c.ell);
    else
        g = gadget_amplifier(parse_digraph(read_file(c.graph)), c.x1, c.y1, c.x2, c.y2, c.big_n);

    write_file(c.out + ".dig", write_digraph(g.digraph, c.sub + " gadget from " + g.source));
    write_file(c.out + ".prov", "# " + g.source + "\n" + write_provenance(g.provenance));
    write_file(c.out + ".terms", write_terminals(g.spec));
    Report r(c.json);
    r.put("command", "gadget");
    r.put("kind", c.sub);
    r.put("source", g.source);
    r.put("n", g.digraph.order());
    r.put("m", g.digraph.size());
    r.put("k", g.spec.k());
    r.put("terminals", spec_text(g.spec));
    r.put("files", Json::array({c.out + ".dig", c.out + ".prov", c.out + ".terms"}));
    r.print(out);
    return ok;
}

inline int cmd_verify(const RunConfig &c, std::ostream &out, std::ostream &)
{
    Digraph d = parse_digraph(read_file(c.graph));
    Packing p = parse_certificate(read_file(c.certificate), d.order());
    auto check = validate_packing(d, p);
    Report r(c.json);
    r.put("command", "verify");
    r.put("valid", check.ok());
    r.put("trees", p.trees.size());
    if (! check.ok()) {
        r.put("reason", std::string(to_string(check.defect)));
        if (check.defect == PackingDefect::bad_tree) {
            r.put("tree", check.first);
            r.put("tree_reason", std::string(to_string(check.tree_defect)));
        }
        else
            r.put("pair", Json::array({check.first, check.second}));
    }
    r.print(out);
    return check.ok() ? ok : verify_failed;
}

inline std::string path_text(const Path &p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? " " : "") + std::to_string(p[i]);
    return s;
}

inline int cmd_oracle(const RunConfig &c, std::ostream &out, std::ostream &)
{
    Report r(c.json);
    r.put("command", "oracle");
    r.put("kind", c.sub);
    if (c.sub == "2linkage") {
        Digraph d = parse_digraph(read_file(c.graph));
        auto res = directed_two_linkage(d, c.s1, c.t1, c.s2, c.t2);
        r.put("result", res ? "feasible" : "infeasible");
        if (res) {
            r.put("path1", path_text(res->first));
            r.put("path2", path_text(res->second));
        }
    }
    else if (c.sub == "2color") {
        auto res = hypergraph_two_coloring(parse_hypergraph(read_file(c.hypergraph)));
        r.put("result", res ? "feasible" : "infeasible");
        if (res) {
            std::string s;
            for (Colour col : *res)
                s += col == Colour::red ? 'R' : 'B';
            r.put("colouring", s);
        }
    }
    else if (c.sub == "cllm") {
        auto res = cllm_solve(parse_tripartite(read_file(c.tripartite)));
        r.put("result", res ? "feasible" : "infeasible");
        if (res) {
            Json triples = Json::array();
            for (const auto &t : *res)
                triples.push_back(Json::array({t[0], t[1], t[2]}));
            r.put("triples", triples);
        }
    }
    else {
        Digraph d = parse_digraph(read_file(c.graph));
        if (d.order() < 2)
            throw ParseError(0, "kappa needs at least two vertices");
        r.put("kappa", vertex_connectivity(d));
    }
    r.print(out);
    return ok;
}

inline int cmd_gen(const RunConfig &c, std::ostream &out, std::ostream &)
{
    auto family = family_from_string(c.family);
    if (! family)
        throw ParseError(0, "unknown family '" + c.family + "'");
    GeneratorParams params{*family, c.n, c.p, c.seed};
    Digraph d = generate(params);
    std::ostringstream header;
    header << "family=" << c.family << " n=" << c.n << " p=" << c.p << " seed=" << c.seed;
    if (c.json) {
        Json j = Json::object();
        j["command"] = "gen";
        j["family"] = c.family;
        j["n"] = c.n;
        j["p"] = c.p;
        j["seed"] = c.seed;
        j["digraph"] = write_digraph(d);
        out << j.dump(2) << '\n';
    }
    else
        out << write_digraph(d, header.str());
    return ok;
}

/// Parses argv and runs one command. Never throws; returns the exit status.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig c;
    CLI::App app{"Pendant Steiner tree packing: exact solvers, gadgets, bounds and oracles", "pendant"};
    app.require_subcommand(1);
    app.add_flag("--json", c.json, "Machine-readable JSON output");

    auto graph_opt = [&](CLI::App *s) { s->add_option("--graph", c.graph, "Digraph file")->required(); };
    auto k_opt = [&](CLI::App *s) { s->add_option("--k", c.k, "Terminal set size")->required(); };
    auto threads_opt = [&](CLI::App *s) {
        s->add_option("--threads", c.threads, "Worker threads (default: $PENDANT_THREADS or 1)")
            ->check(CLI::Range(1, 256));
    };

    auto *solve = app.add_subcommand("solve", "Exact tau_{S,r} with a certificate");
    graph_opt(solve);
    solve->add_option("--terminals", c.terminals, "Root first: r,v1,v2,...")->required();
    solve->add_option("--target", c.target, "Stop once this many trees are found");
    solve->add_flag("--allow-large", c.allow_large, "Run on more than 12 vertices");

    auto *tau_k = app.add_subcommand("tau-k", "Exact tau_k with the lexicographically first witness");
    graph_opt(tau_k);
    k_opt(tau_k);
    threads_opt(tau_k);
    tau_k->add_flag("--per-spec", c.per_spec, "Report tau_{S,r} for every (S, r)");

    auto *bounds = app.add_subcommand("bounds", "Closed-form upper bounds");
    graph_opt(bounds);
    k_opt(bounds);
    bounds->add_flag("--per-spec", c.per_spec, "Report the cut value of every (S, r)");

    auto *ng = app.add_subcommand("ng-check", "Nordhaus-Gaddum check on D and its complement");
    graph_opt(ng);
    k_opt(ng);
    threads_opt(ng);

    auto *gadget = app.add_subcommand("gadget", "Build a reduction instance");
    gadget->require_subcommand(1);
    auto *g_eul = gadget->add_subcommand("eulerian", "From a 2-linkage instance (Eulerian target)");
    g_eul->add_option("--graph", c.graph)->required();
    g_eul->add_option("--s1", c.s1)->required();
    g_eul->add_option("--s2", c.s2)->required();
    g_eul->add_option("--t1", c.t1)->required();
    g_eul->add_option("--t2", c.t2)->required();
    g_eul->add_option("--k", c.k)->required();
    g_eul->add_option("--ell", c.ell)->required();
    auto *g_cllm = gadget->add_subcommand("cllm", "From a balanced tripartite graph");
    g_cllm->add_option("--tripartite", c.tripartite)->required();
    g_cllm->add_option("--k", c.k)->required();
    auto *g_hyp = gadget->add_subcommand("hypergraph", "From a hypergraph");
    g_hyp->add_option("--hypergraph", c.hypergraph)->required();
    g_hyp->add_option("--ell", c.ell)->required();
    auto *g_amp = gadget->add_subcommand("amplifier", "Gap amplifier from a 2-linkage instance");
    g_amp->add_option("--graph", c.graph)->required();
    g_amp->add_option("--x1", c.x1)->required();
    g_amp->add_option("--y1", c.y1)->required();
    g_amp->add_option("--x2", c.x2)->required();
    g_amp->add_option("--y2", c.y2)->required();
    g_amp->add_option("--N", c.big_n)->required();
    for (auto *s : {g_eul, g_cllm, g_hyp, g_amp})
        s->add_option("--out", c.out, "Output prefix for .dig, .prov and .terms")->required();

    auto *verify = app.add_subcommand("verify", "Check a packing certificate");
    graph_opt(verify);
    verify->add_option("--certificate", c.certificate)->required();

    auto *oracle = app.add_subcommand("oracle", "Exact reference procedures");
    oracle->require_subcommand(1);
    auto *o_link = oracle->add_subcommand("2linkage", "Directed 2-linkage");
    o_link->add_option("--graph", c.graph)->required();
    o_link->add_option("--s1", c.s1)->required();
    o_link->add_option("--t1", c.t1)->required();
    o_link->add_option("--s2", c.s2)->required();
    o_link->add_option("--t2", c.t2)->required();
    auto *o_col = oracle->add_subcommand("2color", "Hypergraph 2-colouring");
    o_col->add_option("--hypergraph", c.hypergraph)->required();
    auto *o_cllm = oracle->add_subcommand("cllm", "Connected transversal triples");
    o_cllm->add_option("--tripartite", c.tripartite)->required();
    auto *o_kappa = oracle->add_subcommand("kappa", "Vertex-strong connectivity");
    o_kappa->add_option("--graph", c.graph)->required();

    auto *gen = app.add_subcommand("gen", "Seeded instance generator");
    gen->add_option("--family", c.family, "Instance family")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(family_names), std::end(family_names))));
    gen->add_option("--n", c.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", c.p, "Arc probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", c.seed, "Random seed (default 0)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    if (tau_k->parsed() || ng->parsed())
        if (c.threads == 0)
            c.threads = default_thread_count();
    for (auto *s : {g_eul, g_cllm, g_hyp, g_amp, o_link, o_col, o_cllm, o_kappa})
        if (s->parsed())
            c.sub = s->get_name();

    try {
        if (solve->parsed())
            return cmd_solve(c, out, err);
        if (tau_k->parsed())
            return cmd_tau_k(c, out, err);
        if (bounds->parsed())
            return cmd_bounds(c, out, err);
        if (ng->parsed())
            return cmd_ng_check(c, out, err);
        if (gadget->parsed())
            return cmd_gadget(c, out, err);
        if (verify->parsed())
            return cmd_verify(c, out, err);
        if (oracle->parsed())
            return cmd_oracle(c, out, err);
        return cmd_gen(c, out, err);
    }
    catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const InvalidDigraph &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::logic_error &e) {
        err << "error: " << e.what() << '\n';
        return contract_violation;
    }
    catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

} // namespace pendant::cli
