#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bek/bei.hpp"

namespace bek::cli {

using Json = nlohmann::ordered_json;

// One command per invocation; everything deterministic, no seeds.
struct RunConfig {
    std::string command;
    std::string graph_path;
    int k = 2;
    int t = 2;
    int kmax = 3;
    bool probe_ntf = false;
    bool json = false;
    std::optional<int> max_n;
    std::optional<std::size_t> max_basis;
    std::optional<int> max_degree;
};

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline Graph load_graph(const RunConfig& cfg) {
    std::ifstream in(cfg.graph_path);
    if (!in) throw input_error("cannot open graph file: " + cfg.graph_path);
    return parse_graph(in);
}

inline GBLimits gb_limits(const RunConfig& cfg) {
    GBLimits lim;
    if (const char* env = std::getenv("BEK_MAX_BASIS")) {
        const std::string s = env;
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("BEK_MAX_BASIS is not a positive integer");
        try {
            lim.max_basis = static_cast<std::size_t>(std::stoull(s));
        } catch (const std::exception&) {
            throw input_error("BEK_MAX_BASIS is out of range");
        }
    }
    if (cfg.max_basis) lim.max_basis = *cfg.max_basis;
    if (cfg.max_degree) lim.max_degree = *cfg.max_degree;
    require(lim.max_basis > 0 && lim.max_degree > 0, "bounds must be positive");
    return lim;
}

inline Bounds binomial_bounds(const RunConfig& cfg) {
    Bounds b;
    b.gb = gb_limits(cfg);
    if (cfg.max_n) {
        require(*cfg.max_n > 0, "bounds must be positive");
        b.max_n = *cfg.max_n;
        b.max_enum_n = std::max(b.max_enum_n, *cfg.max_n);
    }
    return b;
}

// monomial-side probes tolerate slightly larger graphs
inline int monomial_max_n(const RunConfig& cfg) { return cfg.max_n ? *cfg.max_n : 10; }

inline Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"n", g.n()}, {"edges", edges}};
}

inline Json report_skeleton(const std::string& command, const Graph& g, Json params) {
    Json j;
    j["command"] = command;
    j["graph"] = graph_json(g);
    j["params"] = std::move(params);
    return j;
}

inline void check_monomial_side_n(const Graph& g, const RunConfig& cfg) {
    int bound = monomial_max_n(cfg);
    if (g.n() > bound)
        throw bound_error("n = " + std::to_string(g.n()) + " exceeds bound " +
                          std::to_string(bound));
}

inline std::string verdict_name(PowerComparison::Verdict v) {
    return v == PowerComparison::Verdict::Equal ? "EQUAL" : "STRICTLY_CONTAINED";
}

struct NtfLines {
    std::vector<std::string> text;
    std::optional<std::string> witness;
    Json flags;
};

inline NtfLines ntf_lines(const RingContext& ctx, const NtfReport& rep) {
    NtfLines lines;
    std::string head = "ntf-probe kmax=" + std::to_string(rep.kmax) + ": ";
    if (rep.violation_k)
        head += "violation at k=" + std::to_string(*rep.violation_k);
    else
        head += "no violation <= " + std::to_string(rep.kmax);
    lines.text.push_back(head);
    if (rep.witness) {
        lines.witness = render(ctx, *rep.witness);
        lines.text.push_back("witness: " + *lines.witness);
    }
    lines.text.push_back("note: " + rep.note);
    lines.flags["kmax"] = rep.kmax;
    lines.flags["violation_k"] = rep.violation_k ? Json(*rep.violation_k) : Json(nullptr);
    lines.flags["note"] = rep.note;
    return lines;
}

inline CliResult finish(const RunConfig& cfg, const Json& j, const std::string& text) {
    CliResult res;
    res.out = cfg.json ? j.dump(2) + "\n" : text;
    return res;
}

inline CliResult cmd_ideal(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    Ideal j = binomial_edge_ideal(g);
    std::ostringstream text;
    Json gens = Json::array();
    for (const auto& f : j.gens()) {
        std::string s = render(j.ctx(), f);
        text << s << "\n";
        gens.push_back(s);
    }
    Json out = report_skeleton("ideal", g, Json::object());
    out["result"] = std::move(gens);
    return finish(cfg, out, text.str());
}

inline CliResult cmd_primes(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    Bounds bounds = binomial_bounds(cfg);
    auto primes = minimal_primes(g, bounds);
    std::ostringstream text;
    Json result = Json::array();
    for (const auto& p : primes) {
        std::string gens;
        Json jgens = Json::array();
        for (const auto& f : p.ideal.gens()) {
            std::string s = render(p.ideal.ctx(), f);
            if (!gens.empty()) gens += ", ";
            gens += s;
            jgens.push_back(s);
        }
        if (gens.empty()) gens = "0";
        text << "S=" << render_set(p.cut.s) << " c=" << p.cut.c << ": " << gens << "\n";
        Json entry;
        entry["S"] = p.cut.s;
        entry["c"] = p.cut.c;
        entry["components"] = p.cut.components;
        entry["gens"] = std::move(jgens);
        result.push_back(std::move(entry));
    }
    Json out = report_skeleton("primes", g, Json::object());
    out["result"] = std::move(result);
    return finish(cfg, out, text.str());
}

inline CliResult cmd_compare(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    Bounds bounds = binomial_bounds(cfg);
    PowerComparison cmp = compare_powers(g, cfg.k, bounds);
    std::ostringstream text;
    text << "J^" << cfg.k << " vs J^(" << cfg.k << "): " << verdict_name(cmp.verdict) << "\n";
    Json out = report_skeleton("compare", g, Json{{"k", cfg.k}});
    out["result"] = verdict_name(cmp.verdict);
    if (cmp.witness) {
        std::string w = render(RingContext(g.n()), *cmp.witness);
        text << "witness: " << w << "\n";
        out["witness"] = w;
    }
    return finish(cfg, out, text.str());
}

inline CliResult cmd_symbolic(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    Bounds bounds = binomial_bounds(cfg);
    Ideal sym = symbolic_power(g, cfg.k, bounds);
    std::ostringstream text;
    Json gens = Json::array();
    for (const auto& f : sym.groebner(bounds.gb).basis) {
        std::string s = render(sym.ctx(), f);
        text << s << "\n";
        gens.push_back(s);
    }
    Json out = report_skeleton("symbolic", g, Json{{"k", cfg.k}});
    out["result"] = std::move(gens);
    return finish(cfg, out, text.str());
}

inline CliResult cmd_initial(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    check_monomial_side_n(g, cfg);
    GBLimits lim = gb_limits(cfg);
    MonomialIdeal ini = initial_ideal(binomial_edge_ideal(g), lim);
    std::ostringstream text;
    text << render(ini.ctx(), ini) << "\n";
    Json gens = Json::array();
    for (const auto& m : ini.gens()) gens.push_back(render(ini.ctx(), m));
    Json params = Json::object();
    if (cfg.probe_ntf) params["kmax"] = cfg.kmax;
    Json out = report_skeleton("initial", g, std::move(params));
    out["result"] = std::move(gens);
    if (cfg.probe_ntf) {
        NtfReport rep = ntf_probe(ini, cfg.kmax);
        NtfLines lines = ntf_lines(ini.ctx(), rep);
        for (const auto& l : lines.text) text << l << "\n";
        if (lines.witness) out["witness"] = *lines.witness;
        out["flags"] = std::move(lines.flags);
    }
    return finish(cfg, out, text.str());
}

inline CliResult cmd_ntf_probe(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    check_monomial_side_n(g, cfg);
    GBLimits lim = gb_limits(cfg);
    MonomialIdeal ini = initial_ideal(binomial_edge_ideal(g), lim);
    NtfReport rep = ntf_probe(ini, cfg.kmax);
    NtfLines lines = ntf_lines(ini.ctx(), rep);
    std::ostringstream text;
    for (const auto& l : lines.text) text << l << "\n";
    Json out = report_skeleton("ntf-probe", g, Json{{"kmax", cfg.kmax}});
    out["result"] = rep.violation_k ? Json(*rep.violation_k) : Json(nullptr);
    if (lines.witness) out["witness"] = *lines.witness;
    out["flags"] = std::move(lines.flags);
    return finish(cfg, out, text.str());
}

inline CliResult cmd_closed(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    int bound = cfg.max_n ? *cfg.max_n : 9;
    auto perm = find_closed_labeling(g, bound);
    std::ostringstream text;
    Json out = report_skeleton("closed", g, Json::object());
    if (perm) {
        text << "closed labeling:";
        for (int v : *perm) text << " " << v;
        text << "\n";
        out["result"] = *perm;
    } else {
        text << "not closed\n";
        out["result"] = nullptr;
    }
    return finish(cfg, out, text.str());
}

inline CliResult cmd_certify(const RunConfig& cfg) {
    Graph g = load_graph(cfg);
    Bounds bounds = binomial_bounds(cfg);
    CertificateReport rep = lemma_certificate(g, cfg.t, bounds);
    std::ostringstream text;
    text << "(i) initial-ideal intersection: " << (rep.ini_intersection ? "true" : "false")
         << "\n";
    text << "(ii.a) " << rep.hypothesis_a << "\n";
    Json commutes = Json::object();
    for (const auto& [cs, ok] : rep.ini_power_commutes) {
        text << "(ii.b) ini(P_S^t) = (ini P_S)^t: S=" << render_set(cs.s) << ": "
             << (ok ? "true" : "false") << "\n";
        commutes[render_set(cs.s)] = ok;
    }
    text << "(ii.c) monomial symbolic power equality at t=" << cfg.t << ": "
         << (rep.monomial_symbolic_equal ? "true" : "false") << "\n";
    text << "conclusion: " << (rep.conclusion ? "true" : "false") << "\n";
    Json out = report_skeleton("certify", g, Json{{"t", cfg.t}});
    out["result"] = rep.conclusion;
    Json flags;
    flags["i"] = rep.ini_intersection;
    flags["ii_a"] = rep.hypothesis_a;
    flags["ii_b"] = std::move(commutes);
    flags["ii_c"] = rep.monomial_symbolic_equal;
    out["flags"] = std::move(flags);
    return finish(cfg, out, text.str());
}

}  // namespace detail

// Parse argv-style arguments and run one command. Exit codes: 0 success,
// 2 input error, 3 resource bound exceeded, 4 internal invariant violation.
inline CliResult run_cli(std::vector<std::string> args) {
    RunConfig cfg;
    CLI::App app{"binomial edge ideals: symbolic vs ordinary powers"};
    app.require_subcommand(1);

    struct Cmd {
        const char* name;
        const char* desc;
        bool has_k, has_t, has_kmax, has_probe;
    };
    const Cmd cmds[] = {
        {"ideal", "print the generators of J_G", false, false, false, false},
        {"primes", "cut sets and minimal prime generators", false, false, false, false},
        {"compare", "compare J^k with J^(k)", true, false, false, false},
        {"symbolic", "reduced basis of J^(k)", true, false, false, false},
        {"initial", "initial ideal of J_G (optionally probe torsion-freeness)", false, false,
         true, true},
        {"closed", "find a closed labeling if one exists", false, false, false, false},
        {"certify", "check the transfer-lemma hypotheses at power t", false, true, false,
         false},
        {"ntf-probe", "probe ini(J_G) for symbolic/ordinary power gaps", false, false, true,
         false},
    };
    for (const auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.desc);
        sub->add_option("--graph", cfg.graph_path, "graph file")->required();
        if (c.has_k) sub->add_option("-k,--k", cfg.k, "power");
        if (c.has_t) sub->add_option("-t,--t", cfg.t, "power");
        if (c.has_kmax) sub->add_option("--kmax", cfg.kmax, "probe bound");
        if (c.has_probe) sub->add_flag("--probe-ntf", cfg.probe_ntf, "run the probe");
        sub->add_flag("--json", cfg.json, "JSON report");
        sub->add_option("--max-n", cfg.max_n, "vertex bound override");
        sub->add_option("--max-basis", cfg.max_basis, "basis size bound");
        sub->add_option("--max-degree", cfg.max_degree, "degree bound");
        sub->callback([&cfg, name = std::string(c.name)]() { cfg.command = name; });
    }

    CliResult res;
    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector overload wants this
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 2;
        return res;
    }

    try {
        require(cfg.k >= 1, "k must be >= 1");
        require(cfg.t >= 1, "t must be >= 1");
        require(cfg.kmax >= 2, "kmax must be >= 2");
        detail::gb_limits(cfg);  // surface a bad BEK_MAX_BASIS for every command
        if (cfg.command == "ideal") return detail::cmd_ideal(cfg);
        if (cfg.command == "primes") return detail::cmd_primes(cfg);
        if (cfg.command == "compare") return detail::cmd_compare(cfg);
        if (cfg.command == "symbolic") return detail::cmd_symbolic(cfg);
        if (cfg.command == "initial") return detail::cmd_initial(cfg);
        if (cfg.command == "closed") return detail::cmd_closed(cfg);
        if (cfg.command == "certify") return detail::cmd_certify(cfg);
        if (cfg.command == "ntf-probe") return detail::cmd_ntf_probe(cfg);
        throw internal_error("unknown command: " + cfg.command);
    } catch (const input_error& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
    } catch (const bound_error& e) {
        res.err = std::string("bound exceeded: ") + e.what() + "\n";
        res.exit_code = 3;
    } catch (const std::exception& e) {
        res.err = std::string("internal error: ") + e.what() + "\n";
        res.exit_code = 4;
    }
    return res;
}

}  // namespace bek::cli
