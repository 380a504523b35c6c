#include "qbound/audit.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <istream>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "qbound/enumerate.hpp"
#include "qbound/families.hpp"
#include "qbound/graph6.hpp"
#include "qbound/spectra.hpp"
#include "qbound/text.hpp"

namespace qbound {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::equality: return "equality";
        case Verdict::violation: return "violation";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

void VerdictCounts::bump(Verdict v) {
    switch (v) {
        case Verdict::holds: ++holds; break;
        case Verdict::equality: ++equality; break;
        case Verdict::violation: ++violation; break;
        case Verdict::inconclusive: ++inconclusive; break;
    }
}

std::set<FormulaId> AuditConfig::default_audit_formulas() {
    return {FormulaId::thm1,         FormulaId::cor1,           FormulaId::cor2,
            FormulaId::thm2,         FormulaId::lem1_printed,   FormulaId::lem1_corrected,
            FormulaId::lem2,         FormulaId::lem3_rho,       FormulaId::lem3_edge,
            FormulaId::lem5};
}

std::uint64_t AuditReport::violations_of(FormulaId id) const {
    auto it = counts.find(id);
    return it == counts.end() ? 0 : it->second.violation;
}

std::uint64_t AuditReport::total_violations_excluding(FormulaId id) const {
    std::uint64_t total = 0;
    for (const auto& [f, c] : counts)
        if (f != id) total += c.violation;
    return total;
}

std::string params_to_string(const std::map<std::string, long long>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out.push_back(';');
        out += k;
        out.push_back('=');
        out += std::to_string(v);
    }
    return out;
}

std::string srg_to_string(const SrgCheck& s, Verdict verdict) {
    if (verdict != Verdict::equality) return "";
    if (!s.params) return "none";
    std::string out = "srg(" + std::to_string(s.params->n) + "," + std::to_string(s.params->k_reg) +
                      "," + std::to_string(s.params->a) + "," + std::to_string(s.params->c) + ")";
    if (s.match) out += *s.match ? ":match" : ":mismatch";
    return out;
}

namespace {

Verdict classify(double bound, double value, double lower, double residual,
                 const AuditConfig& cfg) {
    if (lower > bound + cfg.violation_tol) return Verdict::violation;
    const bool within_holds = value + residual <= bound + cfg.violation_tol;
    if (std::abs(value - bound) <= cfg.equality_rtol * std::max(1.0, std::abs(bound)) &&
        within_holds)
        return Verdict::equality;
    return within_holds ? Verdict::holds : Verdict::inconclusive;
}

/// Equality parameters (k_reg, a, c) the formula's equality case names, when
/// it names one.
std::optional<std::array<int, 3>> srg_target(FormulaId f, int delta,
                                             const std::map<std::string, long long>& params) {
    auto get = [&](const char* key) { return static_cast<int>(params.at(key)); };
    switch (f) {
        case FormulaId::thm1:
        case FormulaId::lem1_printed:
        case FormulaId::lem1_corrected: return std::array<int, 3>{delta, get("k"), get("l")};
        case FormulaId::cor1: return std::array<int, 3>{delta, get("k"), delta};
        case FormulaId::cor2: return std::array<int, 3>{delta, get("l"), get("l")};
        default: return std::nullopt;
    }
}

struct GraphAuditContext {
    const Graph& g;
    const AuditConfig& cfg;
    std::string g6;
    int n;
    int delta;
    bool connected;
    ForbiddenProfile prof;
    std::optional<SpectralEstimate> q_est;
    std::optional<SpectralEstimate> rho_est;
    std::optional<std::optional<SrgParams>> srg; // cached srg_params result
    std::vector<AuditRecord> out;

    GraphAuditContext(const Graph& graph, const AuditConfig& config)
        : g(graph), cfg(config), g6(to_graph6(graph)), n(graph.order()),
          delta(degree_stats(graph).max_degree), connected(is_connected(graph)),
          prof(profile(graph)) {}

    const SpectralEstimate& q() {
        if (!q_est) q_est = q_radius(g, cfg.power_tol);
        return *q_est;
    }
    const SpectralEstimate& rho() {
        if (!rho_est) rho_est = adj_radius(g, cfg.power_tol);
        return *rho_est;
    }
    const std::optional<SrgParams>& srg_cached() {
        if (!srg) srg = srg_params(g);
        return *srg;
    }

    void emit(FormulaId f, std::map<std::string, long long> params, double bound, double value,
              double lower, double residual) {
        AuditRecord rec;
        rec.graph6 = g6;
        rec.formula = f;
        rec.params = std::move(params);
        rec.bound = bound;
        rec.estimate = value;
        rec.residual = residual;
        rec.verdict = classify(bound, value, lower, residual, cfg);
        if (rec.verdict == Verdict::equality) {
            rec.srg.params = srg_cached();
            if (auto target = srg_target(f, delta, rec.params); target && rec.srg.params) {
                rec.srg.match = rec.srg.params->k_reg == (*target)[0] &&
                                rec.srg.params->a == (*target)[1] &&
                                rec.srg.params->c == (*target)[2];
            } else if (srg_target(f, delta, rec.params)) {
                rec.srg.match = false;
            }
        }
        out.push_back(std::move(rec));
    }

    void emit_spectral(FormulaId f, std::map<std::string, long long> params, double bound,
                       const SpectralEstimate& est) {
        emit(f, std::move(params), bound, est.value, est.lower, est.residual);
    }
};

void audit_thm1_family(GraphAuditContext& ctx) {
    // Common grid skeleton for thm1/cor1/cor2: connected, k and l start at the
    // graph's own common-neighbor maxima, end at Δ-1.
    if (!ctx.connected || ctx.delta < 3) return;
    const int ka = ctx.prof.max_adjacent_common;
    const int la = ctx.prof.max_nonadjacent_common.value_or(0);
    const auto& cfg = ctx.cfg;
    const int n = ctx.n;
    const int delta = ctx.delta;

    if (cfg.formulas.count(FormulaId::thm1)) {
        for (int k = std::max(2, ka); k <= delta - 1; ++k)
            for (int l = std::max(k, la); l <= delta - 1; ++l)
                ctx.emit_spectral(FormulaId::thm1, {{"delta", delta}, {"k", k}, {"l", l}, {"n", n}},
                                  thm1_bound(delta, k, l, n), ctx.q());
    }
    if (cfg.formulas.count(FormulaId::cor1)) {
        for (int k = std::max(2, ka); k <= delta - 1; ++k)
            ctx.emit_spectral(FormulaId::cor1, {{"delta", delta}, {"k", k}, {"n", n}},
                              cor1_bound(delta, k, n), ctx.q());
    }
    if (cfg.formulas.count(FormulaId::cor2)) {
        for (int l = std::max({2, ka, la}); l <= delta - 1; ++l)
            ctx.emit_spectral(FormulaId::cor2, {{"delta", delta}, {"l", l}, {"n", n}},
                              cor2_bound(delta, l, n), ctx.q());
    }
}

void audit_lem12(GraphAuditContext& ctx) {
    const bool want_p = ctx.cfg.formulas.count(FormulaId::lem1_printed) > 0;
    const bool want_c = ctx.cfg.formulas.count(FormulaId::lem1_corrected) > 0;
    const bool want_2 = ctx.cfg.formulas.count(FormulaId::lem2) > 0;
    if (!want_p && !want_c && !want_2) return;
    if (ctx.n < 2) return;
    const int ka = ctx.prof.max_adjacent_common;
    const int la = ctx.prof.max_nonadjacent_common.value_or(0);
    const int delta = ctx.delta;
    const int n = ctx.n;
    // Lemma 1 requires connectivity; Lemma 2 does not. l is capped at Δ (the
    // lemmas allow larger l, but every pair's common neighborhood is <= Δ, so
    // larger l only loosens the bound).
    for (int k = ka; k <= delta; ++k)
        for (int l = std::max(k, la); l <= delta; ++l) {
            std::map<std::string, long long> params{
                {"delta", delta}, {"k", k}, {"l", l}, {"n", n}};
            if (ctx.connected && delta < n) {
                if (want_p)
                    ctx.emit_spectral(FormulaId::lem1_printed, params,
                                      lem1_bound_printed(delta, k, l, n), ctx.rho());
                if (want_c)
                    ctx.emit_spectral(FormulaId::lem1_corrected, params,
                                      lem1_bound_corrected(delta, k, l, n), ctx.rho());
            }
            if (want_2)
                ctx.emit_spectral(FormulaId::lem2, params, lem2_bound(delta, k, l, n), ctx.rho());
        }
}

void audit_kst_bounds(GraphAuditContext& ctx) {
    const bool want_thm2 = ctx.cfg.formulas.count(FormulaId::thm2) > 0;
    const bool want_rho = ctx.cfg.formulas.count(FormulaId::lem3_rho) > 0;
    const bool want_edge = ctx.cfg.formulas.count(FormulaId::lem3_edge) > 0;
    if (!want_thm2 && !want_rho && !want_edge) return;
    const int n = ctx.n;
    for (const auto& [s, t] : ctx.cfg.st_pairs) {
        if (!(s >= t && t >= 2)) continue;
        // freeness is undecidable above the subset-scan cap: no records
        if (t > 2 && n > kSubsetScanMaxOrder) continue;
        if (!is_kst_free(ctx.g, s, t)) continue;
        std::map<std::string, long long> params{{"n", n}, {"s", s}, {"t", t}};
        if (want_thm2 && t >= 3 && n >= s + t && ctx.connected)
            ctx.emit_spectral(FormulaId::thm2, params, thm2_bound(n, s, t), ctx.q());
        if (want_rho) ctx.emit_spectral(FormulaId::lem3_rho, params, lem3_rho_bound(n, s, t), ctx.rho());
        if (want_edge)
            ctx.emit(FormulaId::lem3_edge, params, zarankiewicz_edge_bound(n, s, t),
                     ctx.g.edge_count(), ctx.g.edge_count(), 0.0);
    }
}

void audit_lem5(GraphAuditContext& ctx) {
    if (!ctx.cfg.formulas.count(FormulaId::lem5)) return;
    if (ctx.n < 1 || degree_stats(ctx.g).min_degree < 1) return;
    ctx.emit_spectral(FormulaId::lem5, {{"n", ctx.n}}, merris_q_bound(ctx.g), ctx.q());
}

void merge_reports(AuditReport& into, AuditReport&& from) {
    if (into.graph_count == 0) {
        into.order_min = from.order_min;
        into.order_max = from.order_max;
    } else if (from.graph_count > 0) {
        into.order_min = std::min(into.order_min, from.order_min);
        into.order_max = std::max(into.order_max, from.order_max);
    }
    into.graph_count += from.graph_count;
    into.instance_count += from.instance_count;
    for (auto& [f, c] : from.counts) {
        VerdictCounts& dst = into.counts[f];
        dst.holds += c.holds;
        dst.equality += c.equality;
        dst.violation += c.violation;
        dst.inconclusive += c.inconclusive;
    }
    for (auto& [f, gap] : from.gaps) {
        if (!gap.valid) continue;
        GapStat& dst = into.gaps[f];
        const auto key = std::tie(gap.min_gap, gap.graph6, gap.params);
        if (!dst.valid || key < std::tie(dst.min_gap, dst.graph6, dst.params)) dst = gap;
    }
    into.records.insert(into.records.end(), std::make_move_iterator(from.records.begin()),
                        std::make_move_iterator(from.records.end()));
    into.skipped_lines.insert(into.skipped_lines.end(), from.skipped_lines.begin(),
                              from.skipped_lines.end());
}

void absorb_records(AuditReport& report, std::vector<AuditRecord>&& records, int order) {
    if (report.graph_count == 0) {
        report.order_min = report.order_max = order;
    } else {
        report.order_min = std::min(report.order_min, order);
        report.order_max = std::max(report.order_max, order);
    }
    ++report.graph_count;
    for (AuditRecord& rec : records) {
        ++report.instance_count;
        report.counts[rec.formula].bump(rec.verdict);
        const double gap = rec.bound - rec.estimate;
        GapStat& gs = report.gaps[rec.formula];
        const std::string ps = params_to_string(rec.params);
        if (!gs.valid || std::tie(gap, rec.graph6, ps) < std::tie(gs.min_gap, gs.graph6, gs.params))
            gs = GapStat{true, gap, rec.graph6, ps};
        if (rec.verdict == Verdict::equality || rec.verdict == Verdict::violation)
            report.records.push_back(std::move(rec));
    }
}

void sort_records(AuditReport& report) {
    std::sort(report.records.begin(), report.records.end(),
              [](const AuditRecord& a, const AuditRecord& b) {
                  return std::forward_as_tuple(a.graph6, formula_name(a.formula),
                                               params_to_string(a.params)) <
                         std::forward_as_tuple(b.graph6, formula_name(b.formula),
                                               params_to_string(b.params));
              });
    std::sort(report.skipped_lines.begin(), report.skipped_lines.end());
}

} // namespace

std::vector<AuditRecord> audit_graph(const Graph& g, const AuditConfig& cfg) {
    if (g.order() < 1) return {};
    GraphAuditContext ctx(g, cfg);
    audit_thm1_family(ctx);
    audit_lem12(ctx);
    audit_kst_bounds(ctx);
    audit_lem5(ctx);
    return std::move(ctx.out);
}

AuditReport audit_exhaustive(int n, const AuditConfig& cfg) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("audit_exhaustive supports 1 <= n <= 7, got " +
                                    std::to_string(n));
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = labeled_graph_count(n);
    const int jobs = std::max(1, cfg.jobs);

    std::vector<AuditReport> partials(jobs);
    auto work = [&](int job) {
        const std::uint64_t lo = total * job / jobs;
        const std::uint64_t hi = total * (job + 1) / jobs;
        for_each_labeled_graph(n, true, lo, hi, [&](const Graph& g, std::uint64_t) {
            absorb_records(partials[job], audit_graph(g, cfg), n);
        });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& t : pool) t.join();
    }

    AuditReport report;
    for (auto& part : partials) merge_reports(report, std::move(part));
    sort_records(report);
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count();
    return report;
}

AuditReport audit_corpus(std::istream& in, const AuditConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    AuditReport report;
    std::vector<Graph> graphs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(from_graph6(line));
        } catch (const std::invalid_argument&) {
            report.skipped_lines.push_back(line_no);
        }
    }

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || graphs.size() < 2) {
        for (const Graph& g : graphs) absorb_records(report, audit_graph(g, cfg), g.order());
    } else {
        std::vector<AuditReport> partials(jobs);
        auto work = [&](int job) {
            const std::size_t lo = graphs.size() * job / jobs;
            const std::size_t hi = graphs.size() * (job + 1) / jobs;
            for (std::size_t i = lo; i < hi; ++i)
                absorb_records(partials[job], audit_graph(graphs[i], cfg), graphs[i].order());
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& t : pool) t.join();
        for (auto& part : partials) merge_reports(report, std::move(part));
    }
    sort_records(report);
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count();
    return report;
}

FriendshipVerdict friendship_extremality(int n) {
    if (n < 5 || n > 7)
        throw std::invalid_argument("friendship_extremality supports 5 <= n <= 7, got " +
                                    std::to_string(n));
    const Graph fn = friendship(n);
    FriendshipVerdict verdict;
    verdict.q_friendship = q_radius(fn).value;
    verdict.confirmed = true;

    // Every relabeling of F_n, as an edge-mask set.
    std::set<std::uint64_t> friendship_masks;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Graph relabeled(n);
        for (int u = 0; u < n; ++u)
            fn.for_each_neighbor(u, [&](int v) {
                if (u < v) relabeled.add_edge(perm[u], perm[v]);
            });
        friendship_masks.insert(edge_mask_of(relabeled));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double cutoff = verdict.q_friendship - 1e-8;
    for_each_labeled_graph(n, true, [&](const Graph& g, std::uint64_t mask) {
        if (!is_kst_free(g, 2, 2)) return; // keep C_4-free graphs only
        ++verdict.c4_free_connected;
        if (q_radius(g).value < cutoff) return;
        ++verdict.maximizers;
        if (!friendship_masks.count(mask)) verdict.confirmed = false;
    });
    return verdict;
}

namespace {

nlohmann::ordered_json record_to_json(const AuditRecord& rec) {
    nlohmann::ordered_json j;
    j["graph6"] = rec.graph6;
    j["formula"] = formula_name(rec.formula);
    j["params"] = rec.params;
    j["bound"] = rec.bound;
    j["estimate"] = rec.estimate;
    j["residual"] = rec.residual;
    j["verdict"] = verdict_name(rec.verdict);
    if (rec.verdict == Verdict::equality) {
        if (rec.srg.params) {
            nlohmann::ordered_json s;
            s["n"] = rec.srg.params->n;
            s["k"] = rec.srg.params->k_reg;
            s["a"] = rec.srg.params->a;
            s["c"] = rec.srg.params->c;
            if (rec.srg.match) s["match"] = *rec.srg.match;
            j["srg"] = s;
        } else {
            j["srg"] = nullptr;
        }
    }
    return j;
}

} // namespace

std::string report_to_json(const AuditReport& r, bool include_wall_time) {
    nlohmann::ordered_json j;
    j["meta"] = {{"order_min", r.order_min},
                 {"order_max", r.order_max},
                 {"graphs", r.graph_count},
                 {"instances", r.instance_count},
                 {"skipped_lines", r.skipped_lines}};
    if (include_wall_time) j["meta"]["wall_ms"] = r.wall_ms;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [f, c] : r.counts)
        counts[std::string(formula_name(f))] = {{"holds", c.holds},
                                                {"equality", c.equality},
                                                {"violation", c.violation},
                                                {"inconclusive", c.inconclusive}};
    j["counts"] = counts;
    nlohmann::ordered_json gaps = nlohmann::ordered_json::object();
    for (const auto& [f, gs] : r.gaps)
        if (gs.valid)
            gaps[std::string(formula_name(f))] = {
                {"min_gap", gs.min_gap}, {"graph6", gs.graph6}, {"params", gs.params}};
    j["gaps"] = gaps;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const AuditRecord& rec : r.records) records.push_back(record_to_json(rec));
    j["records"] = records;
    return j.dump(2);
}

std::string report_to_csv(const AuditReport& r) {
    std::string out = "graph6,formula,params,bound,q_or_rho,residual,verdict,srg\n";
    for (const AuditRecord& rec : r.records) {
        out += rec.graph6;
        out.push_back(',');
        out += formula_name(rec.formula);
        out.push_back(',');
        out += params_to_string(rec.params);
        out.push_back(',');
        out += fmt_num(rec.bound);
        out.push_back(',');
        out += fmt_num(rec.estimate);
        out.push_back(',');
        out += fmt_num(rec.residual);
        out.push_back(',');
        out += verdict_name(rec.verdict);
        out.push_back(',');
        out += srg_to_string(rec.srg, rec.verdict);
        out.push_back('\n');
    }
    return out;
}

} // namespace qbound
