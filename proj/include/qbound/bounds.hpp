#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qbound/forbidden.hpp"
#include "qbound/graph.hpp"

namespace qbound {

enum class FormulaId {
    thm1,
    cor1,
    cor2,
    thm2,
    lem1_printed,
    lem1_corrected,
    lem2,
    lem3_rho,
    lem3_edge,
    lem4_bipartite,
    zarankiewicz_edge,
    lem5,
};

std::string_view formula_name(FormulaId id);
std::optional<FormulaId> formula_from_name(std::string_view name);

/// q(G) bound for connected {B_{k+1}, K_{2,l+1}}-free graphs:
/// (1/4)[3Δ+k-2l+1 + sqrt((3Δ+k-2l+1)^2 + 16l(Δ+n-1))].
/// Accepts 1 < k <= l <= Δ < n; the theorem instance checker (thm1_applies)
/// enforces the strict l < Δ, while l = Δ is the book-free specialization.
double thm1_bound(int delta, int k, int l, int n);

/// q(G) bound for connected B_{k+1}-free graphs (1 < k < Δ < n):
/// (1/4)[Δ+k+1 + sqrt((Δ+k+1)^2 + 32Δ(n-1))].
double cor1_bound(int delta, int k, int n);

/// q(G) bound for connected K_{2,l+1}-free graphs (1 < l < Δ):
/// (1/4)[3Δ-l+1 + sqrt((3Δ-l+1)^2 + 32l(n-1))].
double cor2_bound(int delta, int l, int n);

/// q(G) bound for connected K_{s,t}-free graphs, s >= t >= 3, n >= s+t:
/// n + (s-t+1)^{1/t} n^{1-1/t} + (t-1)(n-1)^{1-3/t} + t - 3.
double thm2_bound(int n, int s, int t);

/// ρ(G) bound as printed: [k-l + sqrt((k-l)^2 + 4Δ + 4l(n-l))]/2,
/// for 0 <= k <= l <= Δ < n. Empirically violated (see the audit module);
/// kept verbatim next to the corrected variant.
double lem1_bound_printed(int delta, int k, int l, int n);

/// Same shape with radicand term 4l(n-1), the unique variant whose equality
/// case matches the strongly-regular identity Δ(Δ-k-1) = l(n-1-Δ).
double lem1_bound_corrected(int delta, int k, int l, int n);

/// ρ(G) bound min{Δ, [k-l+1 + sqrt((k-l+1)^2 + 4l(n-1))]/2} for l >= k >= 0.
double lem2_bound(int delta, int k, int l, int n);

/// ρ(G) bound for K_{s,t}-free graphs: for t = 2,
/// 1/2 + sqrt((s-1)(n-1) + 1/4); for t >= 3,
/// (s-t+1)^{1/t} n^{1-1/t} + (t-1) n^{1-2/t} + t - 2.
double lem3_rho_bound(int n, int s, int t);

/// e(G) bound for K_{s,t}-free graphs (s >= t >= 2):
/// (1/2)(s-t+1)^{1/t} n^{2-1/t} + (1/2)(t-1) n^{2-2/t} + (1/2)(t-2) n.
double zarankiewicz_edge_bound(int n, int s, int t);

/// Bipartite edge bound (s >= 2, t >= 2, 0 <= k <= s-2):
/// (s-k-1)^{1/t} |B| |A|^{1-1/t} + (t-1)|A|^{1+k/t} + k|B|.
double lem4_bipartite_bound(int size_a, int size_b, int s, int t, int k);

// Hypothesis checkers: parameter inequalities plus connectivity and the
// required forbidden-subgraph freeness, with the vacuous conventions (a graph
// with no nonadjacent pair satisfies every l; one with no edge every k).
bool thm1_applies(const Graph& g, int k, int l);
bool cor1_applies(const Graph& g, int k);
bool cor2_applies(const Graph& g, int l);
bool thm2_applies(const Graph& g, int s, int t);
bool lem1_applies(const Graph& g, int k, int l);
bool lem2_applies(const Graph& g, int k, int l);
bool lem3_applies(const Graph& g, int s, int t);

/// Which of the two equality conditions of the min{Δ, ...} bound holds:
/// 1 when Δ^2 - Δ(k-l+1) <= l(n-1) and G is Δ-regular; 2 when the reverse
/// strict inequality holds and every adjacent pair has exactly k common
/// neighbors, every nonadjacent pair exactly l; 0 otherwise.
int lem2_equality_case(const Graph& g, int k, int l);

/// One evaluated bound instance with its instantiated symbols.
struct BoundResult {
    FormulaId formula;
    std::map<std::string, long long> params;
    double value = 0.0;
    bool hypothesis_ok = false;
    std::string reason; // set when hypothesis_ok is false
};

/// Dispatch by id over a symbol map (keys: delta,k,l,n,s,t,A,B as
/// applicable). Missing symbols or hypothesis violations come back as
/// hypothesis_ok = false with the reason text.
BoundResult evaluate_formula(FormulaId id, const std::map<std::string, long long>& params);

} // namespace qbound
