#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qbound/bounds.hpp"
#include "qbound/forbidden.hpp"
#include "qbound/graph.hpp"

namespace qbound {

enum class Verdict { holds, equality, violation, inconclusive };

std::string_view verdict_name(Verdict v);

/// Verdict tolerances. Violation is certified through the Rayleigh lower
/// bound: estimate.lower > bound + violation_tol cannot be a false positive.
struct AuditConfig {
    std::set<FormulaId> formulas = default_audit_formulas();
    std::vector<std::pair<int, int>> st_pairs = {{2, 2}, {3, 2}, {3, 3}, {4, 3}};
    double power_tol = 1e-10;
    double violation_tol = 1e-8;
    double equality_rtol = 1e-6;
    int jobs = 1;

    static std::set<FormulaId> default_audit_formulas();
};

struct SrgCheck {
    std::optional<SrgParams> params;
    std::optional<bool> match; // against the formula's equality parameters, when defined
};

struct AuditRecord {
    std::string graph6;
    FormulaId formula;
    std::map<std::string, long long> params;
    double bound = 0.0;
    double estimate = 0.0; // Rayleigh value (= certified lower bound), or e(G) for edge bounds
    double residual = 0.0;
    Verdict verdict = Verdict::inconclusive;
    SrgCheck srg; // populated for equality verdicts
};

struct VerdictCounts {
    std::uint64_t holds = 0;
    std::uint64_t equality = 0;
    std::uint64_t violation = 0;
    std::uint64_t inconclusive = 0;

    std::uint64_t total() const { return holds + equality + violation + inconclusive; }
    void bump(Verdict v);
};

struct GapStat {
    bool valid = false;
    double min_gap = 0.0; // min of bound - estimate over audited instances
    std::string graph6;
    std::string params;
};

struct AuditReport {
    int order_min = 0;
    int order_max = 0;
    std::uint64_t graph_count = 0;
    std::uint64_t instance_count = 0;
    std::vector<std::size_t> skipped_lines; // 1-based, corpus audits only
    double wall_ms = 0.0;
    std::map<FormulaId, VerdictCounts> counts;
    std::map<FormulaId, GapStat> gaps;
    std::vector<AuditRecord> records; // equality and violation records only

    std::uint64_t violations_of(FormulaId id) const;
    std::uint64_t total_violations_excluding(FormulaId id) const;
};

/// Every applicable (formula, parameter) instance for one graph, including
/// holds/inconclusive records. Grids follow each statement's hypothesis:
/// k ranges from the book number, l from the nonadjacent maximum, capped by
/// the formula's own inequalities (and by Δ for the unbounded-l lemmas).
std::vector<AuditRecord> audit_graph(const Graph& g, const AuditConfig& cfg);

/// Audits every connected labeled graph of order n (n <= 7), partitioning the
/// edge-mask range across cfg.jobs workers.
AuditReport audit_exhaustive(int n, const AuditConfig& cfg);

/// Audits a newline-separated graph6 stream; malformed lines are skipped and
/// reported by line number.
AuditReport audit_corpus(std::istream& in, const AuditConfig& cfg);

struct FriendshipVerdict {
    bool confirmed = false;
    double q_friendship = 0.0;
    std::uint64_t c4_free_connected = 0;
    std::uint64_t maximizers = 0;
};

/// Exhaustively confirms that F_n is the unique q-maximizer (up to
/// relabeling) among connected C_4-free graphs of order n, 5 <= n <= 7.
FriendshipVerdict friendship_extremality(int n);

std::string report_to_json(const AuditReport& r, bool include_wall_time = true);
std::string report_to_csv(const AuditReport& r);
std::string params_to_string(const std::map<std::string, long long>& params);
std::string srg_to_string(const SrgCheck& s, Verdict verdict);

} // namespace qbound
