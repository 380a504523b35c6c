#include "qbound/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qbound {

namespace {

[[noreturn]] void reject(const std::string& formula, const std::string& why) {
    throw std::invalid_argument(formula + ": hypothesis violated: " + why);
}

double nth_root_pow(double base, double num, double den) { return std::pow(base, num / den); }

} // namespace

std::string_view formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::thm1: return "thm1";
        case FormulaId::cor1: return "cor1";
        case FormulaId::cor2: return "cor2";
        case FormulaId::thm2: return "thm2";
        case FormulaId::lem1_printed: return "lem1_printed";
        case FormulaId::lem1_corrected: return "lem1_corrected";
        case FormulaId::lem2: return "lem2";
        case FormulaId::lem3_rho: return "lem3_rho";
        case FormulaId::lem3_edge: return "lem3_edge";
        case FormulaId::lem4_bipartite: return "lem4_bipartite";
        case FormulaId::zarankiewicz_edge: return "zarankiewicz_edge";
        case FormulaId::lem5: return "lem5";
    }
    return "?";
}

std::optional<FormulaId> formula_from_name(std::string_view name) {
    for (FormulaId id :
         {FormulaId::thm1, FormulaId::cor1, FormulaId::cor2, FormulaId::thm2,
          FormulaId::lem1_printed, FormulaId::lem1_corrected, FormulaId::lem2, FormulaId::lem3_rho,
          FormulaId::lem3_edge, FormulaId::lem4_bipartite, FormulaId::zarankiewicz_edge,
          FormulaId::lem5})
        if (formula_name(id) == name) return id;
    return std::nullopt;
}

double thm1_bound(int delta, int k, int l, int n) {
    if (!(1 < k && k <= l && l <= delta && delta < n))
        reject("thm1", "need 1 < k <= l <= delta < n");
    const double b = 3.0 * delta + k - 2.0 * l + 1.0;
    return (b + std::sqrt(b * b + 16.0 * l * (delta + n - 1.0))) / 4.0;
}

double cor1_bound(int delta, int k, int n) {
    if (!(1 < k && k < delta && delta < n)) reject("cor1", "need 1 < k < delta < n");
    const double b = delta + k + 1.0;
    return (b + std::sqrt(b * b + 32.0 * delta * (n - 1.0))) / 4.0;
}

double cor2_bound(int delta, int l, int n) {
    if (!(1 < l && l < delta)) reject("cor2", "need 1 < l < delta");
    if (n <= delta) reject("cor2", "need delta < n");
    const double b = 3.0 * delta - l + 1.0;
    return (b + std::sqrt(b * b + 32.0 * l * (n - 1.0))) / 4.0;
}

double thm2_bound(int n, int s, int t) {
    if (!(s >= t && t >= 3)) reject("thm2", "need s >= t >= 3");
    if (n < s + t) reject("thm2", "need n >= s + t");
    const double nd = n;
    return nd + nth_root_pow(s - t + 1.0, 1.0, t) * std::pow(nd, 1.0 - 1.0 / t) +
           (t - 1.0) * std::pow(nd - 1.0, 1.0 - 3.0 / t) + t - 3.0;
}

namespace {
double lem1_shape(int delta, int k, int l, int n, bool corrected) {
    if (!(0 <= k && k <= l && l <= delta && delta < n))
        reject(corrected ? "lem1_corrected" : "lem1_printed", "need 0 <= k <= l <= delta < n");
    const double d = k - l;
    const double tail = corrected ? 4.0 * l * (n - 1.0) : 4.0 * l * (n - static_cast<double>(l));
    return (d + std::sqrt(d * d + 4.0 * delta + tail)) / 2.0;
}
} // namespace

double lem1_bound_printed(int delta, int k, int l, int n) {
    return lem1_shape(delta, k, l, n, false);
}

double lem1_bound_corrected(int delta, int k, int l, int n) {
    return lem1_shape(delta, k, l, n, true);
}

double lem2_bound(int delta, int k, int l, int n) {
    if (!(0 <= k && k <= l)) reject("lem2", "need l >= k >= 0");
    if (n < 2) reject("lem2", "need n >= 2");
    if (delta < 0) reject("lem2", "need delta >= 0");
    const double b = k - l + 1.0;
    const double root = (b + std::sqrt(b * b + 4.0 * l * (n - 1.0))) / 2.0;
    return std::min(static_cast<double>(delta), root);
}

double lem3_rho_bound(int n, int s, int t) {
    if (!(s >= t && t >= 2)) reject("lem3_rho", "need s >= t >= 2");
    if (n < 1) reject("lem3_rho", "need n >= 1");
    const double nd = n;
    if (t == 2) return 0.5 + std::sqrt((s - 1.0) * (nd - 1.0) + 0.25);
    return nth_root_pow(s - t + 1.0, 1.0, t) * std::pow(nd, 1.0 - 1.0 / t) +
           (t - 1.0) * std::pow(nd, 1.0 - 2.0 / t) + t - 2.0;
}

double zarankiewicz_edge_bound(int n, int s, int t) {
    if (!(s >= t && t >= 2)) reject("zarankiewicz_edge", "need s >= t >= 2");
    if (n < 1) reject("zarankiewicz_edge", "need n >= 1");
    const double nd = n;
    return 0.5 * nth_root_pow(s - t + 1.0, 1.0, t) * std::pow(nd, 2.0 - 1.0 / t) +
           0.5 * (t - 1.0) * std::pow(nd, 2.0 - 2.0 / t) + 0.5 * (t - 2.0) * nd;
}

double lem4_bipartite_bound(int size_a, int size_b, int s, int t, int k) {
    if (s < 2 || t < 2) reject("lem4_bipartite", "need s >= 2 and t >= 2");
    if (!(0 <= k && k <= s - 2)) reject("lem4_bipartite", "need 0 <= k <= s-2");
    if (size_a < 0 || size_b < 0) reject("lem4_bipartite", "part sizes must be >= 0");
    const double a = size_a, b = size_b;
    return nth_root_pow(s - k - 1.0, 1.0, t) * b * std::pow(a, 1.0 - 1.0 / t) +
           (t - 1.0) * std::pow(a, 1.0 + static_cast<double>(k) / t) + k * b;
}

namespace {

/// Pair caps with the vacuous conventions: no edges -> any k passes; no
/// nonadjacent pair -> any l passes.
bool pair_caps_ok(const Graph& g, std::optional<int> k_cap, std::optional<int> l_cap) {
    const ForbiddenProfile p = profile(g);
    if (k_cap && g.edge_count() > 0 && p.max_adjacent_common > *k_cap) return false;
    if (l_cap && p.max_nonadjacent_common && *p.max_nonadjacent_common > *l_cap) return false;
    return true;
}

} // namespace

bool thm1_applies(const Graph& g, int k, int l) {
    const int n = g.order();
    if (n < 2) return false;
    const int delta = degree_stats(g).max_degree;
    if (!(1 < k && k <= l && l < delta && delta < n)) return false;
    if (!is_connected(g)) return false;
    return pair_caps_ok(g, k, l);
}

bool cor1_applies(const Graph& g, int k) {
    const int n = g.order();
    if (n < 2) return false;
    const int delta = degree_stats(g).max_degree;
    if (!(1 < k && k < delta && delta < n)) return false;
    if (!is_connected(g)) return false;
    return pair_caps_ok(g, k, std::nullopt);
}

bool cor2_applies(const Graph& g, int l) {
    const int n = g.order();
    if (n < 2) return false;
    const int delta = degree_stats(g).max_degree;
    if (!(1 < l && l < delta)) return false;
    if (!is_connected(g)) return false;
    // K_{2,l+1}-freeness constrains every pair kind.
    return pair_caps_ok(g, l, l);
}

bool thm2_applies(const Graph& g, int s, int t) {
    if (!(s >= t && t >= 3)) return false;
    if (g.order() < s + t) return false;
    if (!is_connected(g)) return false;
    return is_kst_free(g, s, t);
}

bool lem1_applies(const Graph& g, int k, int l) {
    const int n = g.order();
    if (n < 2) return false;
    const int delta = degree_stats(g).max_degree;
    if (!(0 <= k && k <= l && l <= delta && delta < n)) return false;
    if (!is_connected(g)) return false;
    return pair_caps_ok(g, k, l);
}

bool lem2_applies(const Graph& g, int k, int l) {
    if (!(0 <= k && k <= l)) return false;
    if (g.order() < 2) return false;
    return pair_caps_ok(g, k, l);
}

bool lem3_applies(const Graph& g, int s, int t) {
    if (!(s >= t && t >= 2)) return false;
    return is_kst_free(g, s, t);
}

int lem2_equality_case(const Graph& g, int k, int l) {
    const int n = g.order();
    if (n < 1) return 0;
    const DegreeStats ds = degree_stats(g);
    const int delta = ds.max_degree;
    const long long lhs = static_cast<long long>(delta) * delta -
                          static_cast<long long>(delta) * (k - l + 1);
    const long long rhs = static_cast<long long>(l) * (n - 1);
    const bool regular = ds.max_degree == ds.min_degree;
    if (lhs <= rhs) return regular ? 1 : 0;

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int c = g.common_neighbor_count(u, v);
            if (g.has_edge(u, v) ? (c != k) : (c != l)) return 0;
        }
    return 2;
}

BoundResult evaluate_formula(FormulaId id, const std::map<std::string, long long>& params) {
    BoundResult r;
    r.formula = id;
    r.params = params;
    auto need = [&](const char* key) -> int {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument(std::string(formula_name(id)) + ": missing parameter " +
                                        key);
        return static_cast<int>(it->second);
    };
    try {
        switch (id) {
            case FormulaId::thm1:
                r.value = thm1_bound(need("delta"), need("k"), need("l"), need("n"));
                break;
            case FormulaId::cor1: r.value = cor1_bound(need("delta"), need("k"), need("n")); break;
            case FormulaId::cor2: r.value = cor2_bound(need("delta"), need("l"), need("n")); break;
            case FormulaId::thm2: r.value = thm2_bound(need("n"), need("s"), need("t")); break;
            case FormulaId::lem1_printed:
                r.value = lem1_bound_printed(need("delta"), need("k"), need("l"), need("n"));
                break;
            case FormulaId::lem1_corrected:
                r.value = lem1_bound_corrected(need("delta"), need("k"), need("l"), need("n"));
                break;
            case FormulaId::lem2:
                r.value = lem2_bound(need("delta"), need("k"), need("l"), need("n"));
                break;
            case FormulaId::lem3_rho:
                r.value = lem3_rho_bound(need("n"), need("s"), need("t"));
                break;
            case FormulaId::lem3_edge:
            case FormulaId::zarankiewicz_edge:
                r.value = zarankiewicz_edge_bound(need("n"), need("s"), need("t"));
                break;
            case FormulaId::lem4_bipartite:
                r.value = lem4_bipartite_bound(need("A"), need("B"), need("s"), need("t"),
                                               need("k"));
                break;
            case FormulaId::lem5:
                throw std::invalid_argument(
                    "lem5 is graph-dependent; evaluate it via the spectra module");
        }
        r.hypothesis_ok = true;
    } catch (const std::invalid_argument& e) {
        r.hypothesis_ok = false;
        r.reason = e.what();
    }
    return r;
}

} // namespace qbound
