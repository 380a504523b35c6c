#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qbound/audit.hpp"
#include "qbound/families.hpp"
#include "qbound/graph6.hpp"

using namespace qbound;

namespace {

AuditConfig only(std::initializer_list<FormulaId> formulas) {
    AuditConfig cfg;
    cfg.formulas = std::set<FormulaId>(formulas);
    return cfg;
}

const AuditRecord* find_record(const std::vector<AuditRecord>& records, FormulaId f,
                               std::initializer_list<std::pair<const char*, long long>> params) {
    for (const auto& rec : records) {
        if (rec.formula != f) continue;
        bool all = true;
        for (const auto& [key, val] : params) {
            auto it = rec.params.find(key);
            if (it == rec.params.end() || it->second != val) all = false;
        }
        if (all) return &rec;
    }
    return nullptr;
}

std::string json_without_wall_time(const AuditReport& r) { return report_to_json(r, false); }

} // namespace

TEST_CASE("rook(4) fixture: thm1 equality with SRG cross-check") {
    const auto records = audit_graph(rook(4), only({FormulaId::thm1}));
    const AuditRecord* rec = find_record(records, FormulaId::thm1, {{"k", 2}, {"l", 2}});
    REQUIRE(rec != nullptr);
    CHECK(rec->verdict == Verdict::equality);
    CHECK(std::abs(rec->bound - 12.0) <= 1e-6);
    CHECK(std::abs(rec->estimate - 12.0) <= 1e-6);
    REQUIRE(rec->srg.params.has_value());
    CHECK(rec->srg.params->n == 16);
    CHECK(rec->srg.params->k_reg == 6);
    CHECK(rec->srg.params->a == 2);
    CHECK(rec->srg.params->c == 2);
    CHECK(rec->srg.match == true);
}

TEST_CASE("triangular(5) fixture: thm1 equality with SRG cross-check") {
    const auto records = audit_graph(triangular(5), only({FormulaId::thm1}));
    const AuditRecord* rec = find_record(records, FormulaId::thm1, {{"k", 3}, {"l", 4}});
    REQUIRE(rec != nullptr);
    CHECK(rec->verdict == Verdict::equality);
    CHECK(std::abs(rec->bound - 12.0) <= 1e-6);
    REQUIRE(rec->srg.params.has_value());
    CHECK(rec->srg.params->a == 3);
    CHECK(rec->srg.params->c == 4);
    CHECK(rec->srg.match == true);
}

TEST_CASE("rook(4) fixture: printed lemma 1 is violated, corrected variant is tight") {
    const auto printed = audit_graph(rook(4), only({FormulaId::lem1_printed}));
    const AuditRecord* bad = find_record(printed, FormulaId::lem1_printed, {{"k", 2}, {"l", 2}});
    REQUIRE(bad != nullptr);
    CHECK(bad->verdict == Verdict::violation);
    CHECK(bad->bound == doctest::Approx(5.830951894845301).epsilon(1e-12));
    CHECK(bad->estimate == doctest::Approx(6.0));

    const auto corrected = audit_graph(rook(4), only({FormulaId::lem1_corrected}));
    const AuditRecord* good = find_record(corrected, FormulaId::lem1_corrected,
                                          {{"k", 2}, {"l", 2}});
    REQUIRE(good != nullptr);
    CHECK(good->verdict == Verdict::equality);
    CHECK(good->srg.match == true);
}

TEST_CASE("C_6 fixture: thm2 holds with the expected gap") {
    AuditConfig cfg = only({FormulaId::thm2});
    cfg.st_pairs = {{3, 3}};
    const auto records = audit_graph(cycle(6), cfg);
    const AuditRecord* rec = find_record(records, FormulaId::thm2, {{"s", 3}, {"t", 3}});
    REQUIRE(rec != nullptr);
    CHECK(rec->verdict == Verdict::holds);
    CHECK(rec->bound - rec->estimate ==
          doctest::Approx(7.301927248894627).epsilon(1e-9));
}

TEST_CASE("petersen fixture: lemma 2 equality at (0,1)") {
    const auto records = audit_graph(petersen(), only({FormulaId::lem2}));
    const AuditRecord* rec = find_record(records, FormulaId::lem2, {{"k", 0}, {"l", 1}});
    REQUIRE(rec != nullptr);
    CHECK(rec->verdict == Verdict::equality);
    CHECK(rec->estimate == doctest::Approx(3.0));
    CHECK(lem2_equality_case(petersen(), 0, 1) == 1);
}

TEST_CASE("exhaustive n=4: the theorems hold, the printed lemma 1 does not") {
    AuditConfig cfg; // all default formulas
    const AuditReport report = audit_exhaustive(4, cfg);
    CHECK(report.graph_count == 38);
    CHECK(report.total_violations_excluding(FormulaId::lem1_printed) == 0);
    CHECK(report.violations_of(FormulaId::lem1_printed) > 0); // K_4 at (2,2) among others

    std::uint64_t counted = 0;
    for (const auto& [f, c] : report.counts) counted += c.total();
    CHECK(counted == report.instance_count);
}

TEST_CASE("exhaustive n=3: no thm2 instances below s+t") {
    const AuditReport report = audit_exhaustive(3, only({FormulaId::thm2}));
    CHECK(report.instance_count == 0);
    CHECK(report.counts.find(FormulaId::thm2) == report.counts.end());
}

TEST_CASE("exhaustive n=5: lemma 5 has no violations") {
    const AuditReport report = audit_exhaustive(5, only({FormulaId::lem5}));
    CHECK(report.violations_of(FormulaId::lem5) == 0);
    CHECK(report.counts.at(FormulaId::lem5).total() == 728); // min degree >= 1 on connected n >= 2
}

TEST_CASE("partition invariance and determinism") {
    AuditConfig cfg;
    cfg.jobs = 1;
    const AuditReport a = audit_exhaustive(5, cfg);
    cfg.jobs = 4;
    const AuditReport b = audit_exhaustive(5, cfg);
    CHECK(json_without_wall_time(a) == json_without_wall_time(b));

    const AuditReport c = audit_exhaustive(5, cfg);
    CHECK(json_without_wall_time(b) == json_without_wall_time(c));
}

TEST_CASE("corpus audit over the SRG fixtures") {
    std::stringstream corpus;
    corpus << to_graph6(petersen()) << "\n"
           << to_graph6(rook(4)) << "\n"
           << to_graph6(triangular(5)) << "\n";
    AuditConfig cfg = only({FormulaId::thm1, FormulaId::lem2});
    const AuditReport report = audit_corpus(corpus, cfg);
    CHECK(report.graph_count == 3);
    CHECK(report.counts.at(FormulaId::thm1).equality == 2); // rook(4) and triangular(5)
    CHECK(report.counts.at(FormulaId::thm1).violation == 0);
    CHECK(report.counts.at(FormulaId::lem2).violation == 0);
    CHECK(report.skipped_lines.empty());

    // every thm1 equality record passes the SRG cross-check
    for (const auto& rec : report.records)
        if (rec.formula == FormulaId::thm1 && rec.verdict == Verdict::equality)
            CHECK(rec.srg.match == true);
}

TEST_CASE("corpus audit: empty stream and malformed lines") {
    std::stringstream empty;
    const AuditReport r0 = audit_corpus(empty, AuditConfig{});
    CHECK(r0.graph_count == 0);
    CHECK(r0.instance_count == 0);
    CHECK(r0.records.empty());

    std::stringstream mixed;
    mixed << to_graph6(cycle(5)) << "\n"
          << "!!not-graph6\n"
          << to_graph6(path(4)) << "\n";
    const AuditReport r1 = audit_corpus(mixed, AuditConfig{});
    CHECK(r1.graph_count == 2);
    REQUIRE(r1.skipped_lines.size() == 1);
    CHECK(r1.skipped_lines[0] == 2);
}

TEST_CASE("report serialization") {
    AuditConfig cfg = only({FormulaId::thm1});
    std::stringstream corpus;
    corpus << to_graph6(rook(4)) << "\n";
    const AuditReport report = audit_corpus(corpus, cfg);
    const std::string json_text = report_to_json(report);
    const auto j = nlohmann::json::parse(json_text);
    CHECK(j["meta"]["graphs"] == 1);
    CHECK(j["counts"]["thm1"]["equality"] == 1);
    REQUIRE(j["records"].size() == 1);
    CHECK(j["records"][0]["verdict"] == "equality");
    CHECK(j["records"][0]["srg"]["match"] == true);

    const std::string csv = report_to_csv(report);
    CHECK(csv.rfind("graph6,formula,params,bound,q_or_rho,residual,verdict,srg\n", 0) == 0);
    CHECK(csv.find("thm1,delta=6;k=2;l=2;n=16,12,12,0,equality,srg(16,6,2,2):match") !=
          std::string::npos);
}

TEST_CASE("corpus audit tolerates orders above the t-subset cap") {
    std::stringstream corpus;
    corpus << to_graph6(cycle(40)) << "\n";
    const AuditReport report = audit_corpus(corpus, AuditConfig{});
    CHECK(report.graph_count == 1);
    // t >= 3 instances are undecidable at this order and must be absent;
    // pair-based formulas still run
    CHECK(report.counts.find(FormulaId::thm2) == report.counts.end());
    CHECK(report.counts.at(FormulaId::lem2).violation == 0);
    CHECK(report.counts.at(FormulaId::lem5).total() == 1);
    CHECK(report.total_violations_excluding(FormulaId::lem1_printed) == 0);
}

TEST_CASE("friendship extremality at n = 5") {
    const FriendshipVerdict v = friendship_extremality(5);
    CHECK(v.confirmed);
    CHECK(v.q_friendship == doctest::Approx(5.561552812808831).epsilon(1e-9));
    // 5!/|Aut(F_5)| = 120/8 labelings of the two-triangle windmill
    CHECK(v.maximizers == 15);
    CHECK(v.c4_free_connected > 15);
    CHECK_THROWS_AS(friendship_extremality(4), std::invalid_argument);
    CHECK_THROWS_AS(friendship_extremality(8), std::invalid_argument);
}
