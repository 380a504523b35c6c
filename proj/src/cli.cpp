#include "qbound/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbound/audit.hpp"
#include "qbound/bounds.hpp"
#include "qbound/enumerate.hpp"
#include "qbound/families.hpp"
#include "qbound/forbidden.hpp"
#include "qbound/graph6.hpp"
#include "qbound/search.hpp"
#include "qbound/spectra.hpp"
#include "qbound/text.hpp"

namespace qbound {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SourceOpts {
    std::string family;
    std::string g6;
    std::string in_path;
    std::optional<int> n, m, k, s, t;
};

int count_sources(const SourceOpts& src) {
    return (!src.family.empty()) + (!src.g6.empty()) + (!src.in_path.empty());
}

GraphFamily resolve_family(const SourceOpts& src) {
    std::string name = src.family;
    std::vector<int> inline_params;
    if (auto comma = name.find(','); comma != std::string::npos) {
        std::stringstream ss(name.substr(comma + 1));
        name = name.substr(0, comma);
        std::string piece;
        while (std::getline(ss, piece, ','))
            inline_params.push_back(std::stoi(piece));
    }
    const auto fam = family_from_name(name);
    if (!fam) throw UsageError("unknown family '" + name + "'");

    GraphFamily f{*fam, 0, 0};
    const int arity = family_arity(*fam);
    if (!inline_params.empty()) {
        if (static_cast<int>(inline_params.size()) != arity)
            throw UsageError("family " + name + " takes " + std::to_string(arity) +
                             " parameter(s)");
        f.a = arity >= 1 ? inline_params[0] : 0;
        f.b = arity >= 2 ? inline_params[1] : 0;
        return f;
    }
    switch (*fam) {
        case Family::petersen: break;
        case Family::complete_bipartite:
            if (!src.s || !src.t)
                throw UsageError("complete_bipartite needs --s and --t (or --family complete_bipartite,s,t)");
            f.a = *src.s;
            f.b = *src.t;
            break;
        case Family::book:
            if (!src.k) throw UsageError("book needs --k (or --family book,k)");
            f.a = *src.k;
            break;
        case Family::rook:
        case Family::triangular:
            if (!src.m) throw UsageError(name + " needs --m (or --family " + name + ",m)");
            f.a = *src.m;
            break;
        default:
            if (!src.n) throw UsageError(name + " needs --n (or --family " + name + ",n)");
            f.a = *src.n;
            break;
    }
    return f;
}

/// Graphs named by one input source: a family instance, an inline graph6
/// string, or a graph6 file (one graph per line).
std::vector<std::pair<std::string, Graph>> load_graphs(const SourceOpts& src) {
    if (count_sources(src) != 1)
        throw UsageError("exactly one input source required: --family, --g6 or --in");
    std::vector<std::pair<std::string, Graph>> graphs;
    if (!src.family.empty()) {
        Graph g = make_family(resolve_family(src));
        graphs.emplace_back(to_graph6(g), std::move(g));
    } else if (!src.g6.empty()) {
        graphs.emplace_back(src.g6, from_graph6(src.g6));
    } else {
        std::ifstream file(src.in_path);
        if (!file) throw UsageError("cannot read " + src.in_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(file, line)) {
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            try {
                graphs.emplace_back(line, from_graph6(line));
            } catch (const std::invalid_argument& e) {
                throw UsageError(src.in_path + ": line " + std::to_string(line_no) + ": " +
                                 e.what());
            }
        }
    }
    return graphs;
}

std::ostream& sink(std::ostream& out, std::ofstream& file, const std::string& out_path) {
    if (out_path.empty()) return out;
    file.open(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
    return file;
}

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
    cmd->add_option("--family", src.family, "built-in family, e.g. petersen or rook,4");
    cmd->add_option("--g6", src.g6, "inline graph6 text");
    cmd->add_option("--in", src.in_path, "graph6 file, one graph per line");
    cmd->add_option("--n", src.n, "order parameter");
    cmd->add_option("--m", src.m, "grid/base parameter (rook, triangular)");
}

// ---- subcommand runners ----

int run_spectra(const SourceOpts& src, double tol, const std::string& format,
                const std::string& out_path, std::ostream& out_stream) {
    std::ofstream file;
    std::ostream& out = sink(out_stream, file, out_path);
    auto graphs = load_graphs(src);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [g6, g] : graphs) {
            const auto q = q_radius(g, tol);
            const auto rho = adj_radius(g, tol);
            arr.push_back({{"graph6", g6},
                           {"n", g.order()},
                           {"edges", g.edge_count()},
                           {"q", q.value},
                           {"q_residual", q.residual},
                           {"q_iterations", q.iterations},
                           {"q_converged", q.converged},
                           {"rho", rho.value},
                           {"rho_residual", rho.residual},
                           {"rho_iterations", rho.iterations},
                           {"rho_converged", rho.converged}});
        }
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << "graph6,n,edges,q,q_residual,q_iterations,rho,rho_residual,rho_iterations\n";
        for (const auto& [g6, g] : graphs) {
            const auto q = q_radius(g, tol);
            const auto rho = adj_radius(g, tol);
            out << g6 << ',' << g.order() << ',' << g.edge_count() << ',' << fmt_num(q.value)
                << ',' << fmt_num(q.residual) << ',' << q.iterations << ',' << fmt_num(rho.value)
                << ',' << fmt_num(rho.residual) << ',' << rho.iterations << "\n";
        }
    } else {
        for (const auto& [g6, g] : graphs) {
            const auto q = q_radius(g, tol);
            const auto rho = adj_radius(g, tol);
            out << "graph " << g6 << "\n"
                << "n " << g.order() << "\n"
                << "edges " << g.edge_count() << "\n"
                << "q " << fmt_num(q.value) << " residual " << fmt_num(q.residual)
                << " iterations " << q.iterations << "\n"
                << "rho " << fmt_num(rho.value) << " residual " << fmt_num(rho.residual)
                << " iterations " << rho.iterations << "\n";
        }
    }
    return 0;
}

int run_gen(const SourceOpts& src, const std::string& format, const std::string& out_path,
            std::ostream& out_stream) {
    std::ofstream file;
    std::ostream& out = sink(out_stream, file, out_path);
    if (src.family.empty()) throw UsageError("gen needs --family");
    const GraphFamily fam = resolve_family(src);
    const Graph g = make_family(fam);
    const std::string g6 = to_graph6(g);
    if (format == "json") {
        ordered_json j{{"family", std::string(family_name(fam.id))},
                       {"graph6", g6},
                       {"n", g.order()},
                       {"edges", g.edge_count()}};
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "family,graph6,n,edges\n"
            << family_name(fam.id) << ',' << g6 << ',' << g.order() << ',' << g.edge_count()
            << "\n";
    } else {
        out << g6 << "\n";
    }
    return 0;
}

int run_check(const SourceOpts& src, std::optional<int> k, std::optional<int> l,
              std::optional<int> s, std::optional<int> t, const std::string& format,
              const std::string& out_path, std::ostream& out_stream) {
    std::ofstream file;
    std::ostream& out = sink(out_stream, file, out_path);
    auto graphs = load_graphs(src);
    std::vector<int> ts;
    if (t && *t >= 2) ts.push_back(*t);

    ordered_json arr = ordered_json::array();
    for (const auto& [g6, g] : graphs) {
        const ForbiddenProfile p = profile(g, ts);
        ordered_json j;
        j["graph6"] = g6;
        j["n"] = g.order();
        j["max_adjacent_common"] = p.max_adjacent_common;
        if (p.max_nonadjacent_common)
            j["max_nonadjacent_common"] = *p.max_nonadjacent_common;
        else
            j["max_nonadjacent_common"] = nullptr;
        for (const auto& [tt, v] : p.tsubset_max) j["tsubset_max_" + std::to_string(tt)] = v;
        if (k) j["book_free_k_plus_1"] = is_book_free(g, *k + 1);
        if (l) j["k2_lplus1_free"] = is_kst_free(g, *l + 1, 2);
        if (s && t) j["kst_free"] = is_kst_free(g, *s, *t);
        const auto srg = srg_params(g);
        if (srg)
            j["srg"] = {{"n", srg->n}, {"k", srg->k_reg}, {"a", srg->a}, {"c", srg->c}};
        else
            j["srg"] = nullptr;
        arr.push_back(j);
    }

    if (format == "json") {
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << "graph6,n,max_adjacent_common,max_nonadjacent_common,book_free,k2l1_free,kst_free,srg\n";
        for (const auto& j : arr) {
            out << j["graph6"].get<std::string>() << ',' << j["n"] << ','
                << j["max_adjacent_common"] << ','
                << (j["max_nonadjacent_common"].is_null()
                        ? "absent"
                        : std::to_string(j["max_nonadjacent_common"].get<int>()))
                << ',' << (j.contains("book_free_k_plus_1") ? j["book_free_k_plus_1"].dump() : "")
                << ',' << (j.contains("k2_lplus1_free") ? j["k2_lplus1_free"].dump() : "") << ','
                << (j.contains("kst_free") ? j["kst_free"].dump() : "") << ','
                << (j["srg"].is_null() ? "" : j["srg"].dump()) << "\n";
        }
    } else {
        for (const auto& j : arr) {
            out << "graph " << j["graph6"].get<std::string>() << "\n";
            out << "max_adjacent_common " << j["max_adjacent_common"] << "\n";
            out << "max_nonadjacent_common "
                << (j["max_nonadjacent_common"].is_null()
                        ? "absent"
                        : std::to_string(j["max_nonadjacent_common"].get<int>()))
                << "\n";
            for (const auto& [key, val] : j.items())
                if (key.rfind("tsubset_max_", 0) == 0) out << key << " " << val << "\n";
            if (j.contains("book_free_k_plus_1"))
                out << "book_free(k+1) " << j["book_free_k_plus_1"] << "\n";
            if (j.contains("k2_lplus1_free")) out << "K_{2,l+1}_free " << j["k2_lplus1_free"] << "\n";
            if (j.contains("kst_free")) out << "K_{s,t}_free " << j["kst_free"] << "\n";
            out << "srg " << (j["srg"].is_null() ? std::string("absent") : j["srg"].dump()) << "\n";
        }
    }
    return 0;
}

int run_bound(const std::string& formula, const std::map<std::string, long long>& given,
              const std::string& format, const std::string& out_path, std::ostream& out_stream) {
    std::ofstream file;
    std::ostream& out = sink(out_stream, file, out_path);
    const auto id = formula_from_name(formula);
    if (!id) throw UsageError("unknown formula '" + formula + "'");
    const BoundResult r = evaluate_formula(*id, given);
    if (format == "json") {
        ordered_json j;
        j["formula"] = formula;
        j["params"] = r.params;
        j["hypothesis_ok"] = r.hypothesis_ok;
        if (r.hypothesis_ok)
            j["value"] = r.value;
        else
            j["reason"] = r.reason;
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "formula,params,value,hypothesis_ok,reason\n";
        out << formula << ',' << params_to_string(r.params) << ','
            << (r.hypothesis_ok ? fmt_num(r.value) : "") << ','
            << (r.hypothesis_ok ? "true" : "false") << ',' << r.reason << "\n";
    } else {
        if (r.hypothesis_ok)
            out << fmt_num(r.value) << "\n";
        else
            out << "hypothesis_ok false: " << r.reason << "\n";
    }
    return 0;
}

int run_audit(std::optional<int> order, const std::string& in_path,
              const std::vector<std::string>& formula_names,
              const std::vector<std::string>& st_texts, int jobs, double tol,
              const std::string& format, const std::string& out_path, std::ostream& out_stream) {
    AuditConfig cfg;
    cfg.jobs = jobs;
    cfg.power_tol = tol;
    if (!formula_names.empty()) {
        cfg.formulas.clear();
        for (const auto& name : formula_names) {
            const auto id = formula_from_name(name);
            if (!id || *id == FormulaId::lem4_bipartite || *id == FormulaId::zarankiewicz_edge)
                throw UsageError("formula '" + name + "' is not graph-auditable");
            cfg.formulas.insert(*id);
        }
    }
    if (!st_texts.empty()) {
        cfg.st_pairs.clear();
        for (const auto& text : st_texts) {
            const auto comma = text.find(',');
            if (comma == std::string::npos) throw UsageError("--st expects s,t");
            cfg.st_pairs.emplace_back(std::stoi(text.substr(0, comma)),
                                      std::stoi(text.substr(comma + 1)));
        }
    }

    if (order.has_value() == !in_path.empty())
        throw UsageError("audit needs exactly one of --order or --in");

    AuditReport report;
    if (order) {
        report = audit_exhaustive(*order, cfg);
    } else {
        std::ifstream in(in_path);
        if (!in) throw UsageError("cannot read " + in_path);
        report = audit_corpus(in, cfg);
    }

    std::ofstream file;
    std::ostream& out = sink(out_stream, file, out_path);
    if (format == "json") {
        out << report_to_json(report) << "\n";
    } else if (format == "csv") {
        out << report_to_csv(report);
    } else {
        out << "graphs " << report.graph_count << "\n"
            << "instances " << report.instance_count << "\n";
        for (const auto& [f, c] : report.counts) {
            out << formula_name(f) << " holds " << c.holds << " equality " << c.equality
                << " violation " << c.violation << " inconclusive " << c.inconclusive;
            if (auto it = report.gaps.find(f); it != report.gaps.end() && it->second.valid)
                out << " min_gap " << fmt_num(it->second.min_gap) << " at "
                    << it->second.graph6 << " [" << it->second.params << "]";
            out << "\n";
        }
        if (!report.skipped_lines.empty()) {
            out << "skipped_lines";
            for (auto ln : report.skipped_lines) out << " " << ln;
            out << "\n";
        }
        for (const AuditRecord& rec : report.records)
            out << verdict_name(rec.verdict) << " " << rec.graph6 << " " << formula_name(rec.formula)
                << " [" << params_to_string(rec.params) << "] bound " << fmt_num(rec.bound)
                << " estimate " << fmt_num(rec.estimate)
                << (srg_to_string(rec.srg, rec.verdict).empty()
                        ? ""
                        : " " + srg_to_string(rec.srg, rec.verdict))
                << "\n";
        out << "wall_ms " << fmt_num(report.wall_ms) << "\n";
    }
    return report.total_violations_excluding(FormulaId::lem1_printed) > 0 ? 2 : 0;
}

int run_search(int n, std::optional<int> k, std::optional<int> l, std::optional<int> s,
               std::optional<int> t, std::uint64_t budget, int restarts, std::uint64_t seed,
               double tol, const std::string& format, const std::string& out_path,
               std::ostream& out_stream) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.book_cap = k;
    cfg.pair_cap = l;
    if (s && t) cfg.st_free = std::make_pair(*s, *t);
    cfg.budget = budget;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.power_tol = tol;
    const SearchResult r = extremal_search(cfg);

    std::ofstream file;
    std::ostream& out = sink(out_stream, file, out_path);
    if (format == "json") {
        ordered_json j;
        j["best_graph6"] = r.best_graph6;
        j["best_q"] = r.best_q;
        j["evaluations"] = r.evaluations;
        ordered_json gaps = ordered_json::object();
        for (const auto& [name, gap] : r.bound_gaps) gaps[name] = gap;
        j["bound_gaps"] = gaps;
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "best_graph6,best_q,evaluations,bound_gaps\n";
        out << r.best_graph6 << ',' << fmt_num(r.best_q) << ',' << r.evaluations << ',';
        std::string gaps;
        for (const auto& [name, gap] : r.bound_gaps) {
            if (!gaps.empty()) gaps += ';';
            gaps += name + "=" + fmt_num(gap);
        }
        out << gaps << "\n";
    } else {
        out << "best " << r.best_graph6 << "\n"
            << "q " << fmt_num(r.best_q) << "\n"
            << "evaluations " << r.evaluations << "\n";
        for (const auto& [name, gap] : r.bound_gaps)
            out << "gap_" << name << " " << fmt_num(gap) << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"signless-Laplacian and adjacency spectral-radius bound toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // accept --format/--out/--tol after the subcommand too

    std::string format = "plain";
    std::string out_path;
    double tol = kDefaultPowerTol;
    app.add_option("--format", format, "output format: plain|json|csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--tol", tol, "power-iteration residual tolerance (default 1e-10)");

    // spectra
    SourceOpts spectra_src;
    auto* spectra_cmd = app.add_subcommand("spectra", "q(G) and rho(G) with residuals");
    add_source_flags(spectra_cmd, spectra_src);
    spectra_cmd->add_option("--k", spectra_src.k, "family parameter (book)");
    spectra_cmd->add_option("--s", spectra_src.s, "family parameter (complete_bipartite)");
    spectra_cmd->add_option("--t", spectra_src.t, "family parameter (complete_bipartite)");

    // gen
    SourceOpts gen_src;
    auto* gen_cmd = app.add_subcommand("gen", "print a named family as graph6");
    add_source_flags(gen_cmd, gen_src);
    gen_cmd->add_option("--k", gen_src.k, "family parameter (book)");
    gen_cmd->add_option("--s", gen_src.s, "family parameter (complete_bipartite)");
    gen_cmd->add_option("--t", gen_src.t, "family parameter (complete_bipartite)");

    // check
    SourceOpts check_src;
    std::optional<int> check_k, check_l, check_s, check_t;
    auto* check_cmd = app.add_subcommand("check", "forbidden profile and freeness verdicts");
    add_source_flags(check_cmd, check_src);
    check_cmd->add_option("--k", check_k, "book threshold: test B_{k+1}-freeness");
    check_cmd->add_option("--l", check_l, "pair threshold: test K_{2,l+1}-freeness");
    check_cmd->add_option("--s", check_s, "with --t: test K_{s,t}-freeness");
    check_cmd->add_option("--t", check_t, "with --s: test K_{s,t}-freeness");

    // bound
    std::string bound_formula;
    std::optional<long long> b_delta, b_k, b_l, b_n, b_s, b_t, b_a, b_b;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate a named bound formula");
    bound_cmd->add_option("--formula", bound_formula, "formula id, e.g. thm1")->required();
    bound_cmd->add_option("--delta", b_delta, "maximum degree");
    bound_cmd->add_option("--k", b_k, "k");
    bound_cmd->add_option("--l", b_l, "l");
    bound_cmd->add_option("--n", b_n, "order");
    bound_cmd->add_option("--s", b_s, "s");
    bound_cmd->add_option("--t", b_t, "t");
    bound_cmd->add_option("--A", b_a, "|A| (lem4)");
    bound_cmd->add_option("--B", b_b, "|B| (lem4)");

    // audit
    std::optional<int> audit_order;
    std::string audit_in;
    std::vector<std::string> audit_formulas, audit_st;
    int audit_jobs = 1;
    auto* audit_cmd = app.add_subcommand("audit", "audit bounds over an enumeration or corpus");
    audit_cmd->add_option("--order", audit_order, "exhaustive over connected graphs of this order (<= 7)");
    audit_cmd->add_option("--in", audit_in, "graph6 corpus file");
    audit_cmd->add_option("--formulas", audit_formulas, "subset of formulas (default: all auditable)")
        ->delimiter(',');
    audit_cmd->add_option("--st", audit_st, "K_{s,t} pair as s,t (repeatable)");
    audit_cmd->add_option("--jobs", audit_jobs, "worker count for partitioned audits");

    // search
    int search_n = 0;
    std::optional<int> search_k, search_l, search_s, search_t;
    std::uint64_t search_budget = 20000, search_seed = 1;
    int search_restarts = 8;
    auto* search_cmd = app.add_subcommand("search", "stochastic q-maximization under constraints");
    search_cmd->add_option("--n", search_n, "graph order")->required();
    search_cmd->add_option("--k", search_k, "book cap: adjacent pairs share <= k neighbors");
    search_cmd->add_option("--l", search_l, "pair cap: every pair shares <= l neighbors");
    search_cmd->add_option("--s", search_s, "with --t: stay K_{s,t}-free");
    search_cmd->add_option("--t", search_t, "with --s: stay K_{s,t}-free");
    search_cmd->add_option("--budget", search_budget, "max q evaluations");
    search_cmd->add_option("--restarts", search_restarts, "random restarts");
    search_cmd->add_option("--seed", search_seed, "random seed");

    std::vector<const char*> argv;
    argv.push_back("qbound");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (spectra_cmd->parsed()) return run_spectra(spectra_src, tol, format, out_path, out);
        if (gen_cmd->parsed()) return run_gen(gen_src, format, out_path, out);
        if (check_cmd->parsed())
            return run_check(check_src, check_k, check_l, check_s, check_t, format, out_path, out);
        if (bound_cmd->parsed()) {
            std::map<std::string, long long> params;
            if (b_delta) params["delta"] = *b_delta;
            if (b_k) params["k"] = *b_k;
            if (b_l) params["l"] = *b_l;
            if (b_n) params["n"] = *b_n;
            if (b_s) params["s"] = *b_s;
            if (b_t) params["t"] = *b_t;
            if (b_a) params["A"] = *b_a;
            if (b_b) params["B"] = *b_b;
            return run_bound(bound_formula, params, format, out_path, out);
        }
        if (audit_cmd->parsed())
            return run_audit(audit_order, audit_in, audit_formulas, audit_st, audit_jobs, tol,
                             format, out_path, out);
        if (search_cmd->parsed())
            return run_search(search_n, search_k, search_l, search_s, search_t, search_budget,
                              search_restarts, search_seed, tol, format, out_path, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

} // namespace qbound
