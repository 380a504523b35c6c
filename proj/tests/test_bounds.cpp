#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qbound/bounds.hpp"
#include "qbound/families.hpp"
#include "qbound/spectra.hpp"

using namespace qbound;

TEST_CASE("thm1_bound values") {
    CHECK(thm1_bound(6, 3, 4, 10) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(thm1_bound(6, 2, 2, 16) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(thm1_bound(3, 2, 2, 10) == doctest::Approx(7.291502622129181).epsilon(1e-12));
    CHECK_THROWS_AS(thm1_bound(3, 1, 2, 10), std::invalid_argument); // k <= 1
    CHECK_THROWS_AS(thm1_bound(3, 3, 2, 10), std::invalid_argument); // k > l
    CHECK_THROWS_AS(thm1_bound(3, 2, 4, 10), std::invalid_argument); // l > delta
    CHECK_THROWS_AS(thm1_bound(9, 2, 2, 9), std::invalid_argument);  // delta >= n
}

TEST_CASE("thm1 equality characterization on SRG fixtures") {
    // q = 2*delta exactly when (delta, k, l) are strongly-regular parameters
    // with 1 < k <= l < delta.
    CHECK(std::abs(thm1_bound(6, 3, 4, 10) - 2.0 * 6) < 1e-9); // triangular(5)
    CHECK(std::abs(thm1_bound(6, 2, 2, 16) - 2.0 * 6) < 1e-9); // rook(4)
    CHECK(std::abs(thm1_bound(6, 3, 4, 10) - q_radius(triangular(5)).value) < 1e-9);
    CHECK(std::abs(thm1_bound(6, 2, 2, 16) - q_radius(rook(4)).value) < 1e-9);
}

TEST_CASE("corollary values") {
    CHECK(cor1_bound(3, 2, 10) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(cor1_bound(3, 2, 10) >= q_radius(petersen()).value);
    CHECK(cor2_bound(3, 2, 10) == doctest::Approx(8.32455532033676).epsilon(1e-12));
    CHECK(cor2_bound(3, 2, 10) >= q_radius(petersen()).value);
    CHECK_THROWS_AS(cor1_bound(3, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(cor1_bound(3, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(cor2_bound(3, 3, 10), std::invalid_argument);
}

TEST_CASE("corollaries reduce to thm1 substitutions when delta = n-1") {
    // The printed corollary radicands use 32x(n-1) where the substituted
    // theorem gives 16x(delta+n-1); the two coincide exactly on graphs with a
    // dominating vertex (delta = n-1).
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 100; ++i) {
        const int n = 5 + static_cast<int>(rng() % 50);
        const int delta = n - 1;
        const int k = 2 + static_cast<int>(rng() % (delta - 2));
        const double a = thm1_bound(delta, k, delta, n);
        const double b = cor1_bound(delta, k, n);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
        const int l = 2 + static_cast<int>(rng() % (delta - 2));
        const double c = thm1_bound(delta, l, l, n);
        const double d = cor2_bound(delta, l, n);
        CHECK(std::abs(c - d) <= 1e-12 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("thm1 monotone in k and n") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const int delta = 4 + static_cast<int>(rng() % 20);
        const int n = delta + 1 + static_cast<int>(rng() % 20);
        const int l = 2 + static_cast<int>(rng() % (delta - 2));
        const int k = 2 + static_cast<int>(rng() % (l - 1));
        if (k + 1 <= l) CHECK(thm1_bound(delta, k + 1, l, n) > thm1_bound(delta, k, l, n));
        CHECK(thm1_bound(delta, k, l, n + 1) > thm1_bound(delta, k, l, n));
    }
}

TEST_CASE("thm2_bound values") {
    CHECK(thm2_bound(6, 3, 3) == doctest::Approx(11.301927248894627).epsilon(1e-12));
    CHECK(thm2_bound(10, 3, 3) == doctest::Approx(16.64158883361278).epsilon(1e-12));
    CHECK(thm2_bound(10, 4, 3) == doctest::Approx(17.848035476425732).epsilon(1e-12));
    CHECK(thm2_bound(10, 3, 3) >= q_radius(cycle(10)).value);
    CHECK_THROWS_AS(thm2_bound(10, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(thm2_bound(5, 3, 3), std::invalid_argument); // n < s + t
}

TEST_CASE("lemma 1 printed and corrected variants") {
    CHECK(lem1_bound_printed(3, 0, 1, 10) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lem1_bound_printed(6, 2, 2, 16) ==
          doctest::Approx(5.830951894845301).epsilon(1e-12));
    // the printed form undercuts rho(rook(4)) = 6; the corrected one lands on it
    CHECK(lem1_bound_printed(6, 2, 2, 16) < adj_radius(rook(4)).value);
    CHECK(lem1_bound_corrected(6, 2, 2, 16) == doctest::Approx(6.0).epsilon(1e-12));

    // corrected variant equals delta on every SRG fixture
    CHECK(std::abs(lem1_bound_corrected(3, 0, 1, 10) - 3.0) < 1e-9);  // petersen
    CHECK(std::abs(lem1_bound_corrected(6, 2, 2, 16) - 6.0) < 1e-9);  // rook(4)
    CHECK(std::abs(lem1_bound_corrected(6, 3, 4, 10) - 6.0) < 1e-9);  // triangular(5)

    CHECK_THROWS_AS(lem1_bound_printed(3, -1, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(lem1_bound_corrected(3, 2, 1, 10), std::invalid_argument);
}

TEST_CASE("lemma 2 bound and equality conditions") {
    CHECK(lem2_bound(6, 2, 2, 16) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(lem2_bound(3, 0, 1, 10) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lem2_bound(2, 0, 2, 5) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(lem2_bound(3, 2, 1, 10), std::invalid_argument);

    CHECK(lem2_equality_case(rook(4), 2, 2) == 1);
    CHECK(lem2_equality_case(petersen(), 0, 1) == 1);
    CHECK(lem2_equality_case(cycle(5), 0, 2) == 1);
    // friendship(5) with (1,1): condition (2) - exact common counts, not regular
    CHECK(lem2_equality_case(friendship(5), 1, 1) == 2);
    CHECK(std::abs(lem2_bound(4, 1, 1, 5) - adj_radius(friendship(5)).value) < 1e-9);
    CHECK(lem2_equality_case(path(4), 0, 1) == 0);
}

TEST_CASE("lemma 3 rho bound") {
    CHECK(lem3_rho_bound(5, 2, 2) == doctest::Approx(2.5615528128088303).epsilon(1e-12));
    CHECK(lem3_rho_bound(10, 3, 3) == doctest::Approx(9.950458213676548).epsilon(1e-12));
    CHECK(lem3_rho_bound(10, 3, 2) == doctest::Approx(4.772001872658765).epsilon(1e-12));
    CHECK(std::abs(lem3_rho_bound(5, 2, 2) - adj_radius(friendship(5)).value) < 1e-9);
    CHECK(lem3_rho_bound(10, 3, 3) >= adj_radius(petersen()).value);
    CHECK_THROWS_AS(lem3_rho_bound(10, 1, 2), std::invalid_argument);
}

TEST_CASE("edge bounds") {
    CHECK(zarankiewicz_edge_bound(10, 3, 3) ==
          doctest::Approx(49.752291068382746).epsilon(1e-12));
    CHECK(zarankiewicz_edge_bound(6, 2, 2) ==
          doctest::Approx(10.348469228349535).epsilon(1e-12));
    CHECK(petersen().edge_count() <= zarankiewicz_edge_bound(10, 3, 3));
    CHECK(cycle(6).edge_count() <= zarankiewicz_edge_bound(6, 2, 2));
    CHECK_THROWS_AS(zarankiewicz_edge_bound(6, 2, 1), std::invalid_argument);
}

TEST_CASE("lemma 4 bipartite bound") {
    CHECK(lem4_bipartite_bound(9, 9, 2, 2, 0) == doctest::Approx(36.0).epsilon(1e-12));
    CHECK(lem4_bipartite_bound(5, 4, 3, 3, 0) ==
          doctest::Approx(24.736125994561547).epsilon(1e-12));
    CHECK(lem4_bipartite_bound(5, 4, 3, 3, 1) ==
          doctest::Approx(32.79583041961843).epsilon(1e-12));
    CHECK_THROWS_AS(lem4_bipartite_bound(5, 4, 3, 3, 2), std::invalid_argument); // k > s-2
    CHECK_THROWS_AS(lem4_bipartite_bound(5, 4, 1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(lem4_bipartite_bound(-1, 4, 3, 3, 0), std::invalid_argument);
}

TEST_CASE("hypothesis checkers") {
    CHECK(thm1_applies(rook(4), 2, 2));
    CHECK(thm1_applies(petersen(), 2, 2));
    // K_4 has no nonadjacent pair: the l condition is vacuous
    CHECK(thm1_applies(complete(4), 2, 2));
    CHECK(!thm1_applies(path(4), 2, 2)); // delta = 2 violates l < delta
    CHECK(!thm1_applies(rook(4), 2, 1)); // k > l
    Graph disconnected = build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(!thm1_applies(disconnected, 2, 2));

    CHECK(cor1_applies(rook(4), 2));
    CHECK(!cor1_applies(rook(4), 1));
    CHECK(cor2_applies(rook(4), 2));
    CHECK(!cor2_applies(rook(4), 6)); // l < delta fails

    CHECK(thm2_applies(petersen(), 3, 3));
    CHECK(!thm2_applies(complete(6), 3, 3));  // contains K_{3,3}
    CHECK(!thm2_applies(cycle(5), 3, 3));     // n < s + t

    CHECK(lem1_applies(petersen(), 0, 1));
    CHECK(!lem1_applies(petersen(), 0, 0)); // nonadjacent pairs share 1
    CHECK(lem2_applies(petersen(), 0, 1));
    CHECK(lem3_applies(petersen(), 3, 3));
    CHECK(!lem3_applies(complete(6), 3, 3));
}

TEST_CASE("evaluate_formula dispatch") {
    const BoundResult ok = evaluate_formula(
        FormulaId::thm1, {{"delta", 6}, {"k", 3}, {"l", 4}, {"n", 10}});
    CHECK(ok.hypothesis_ok);
    CHECK(ok.value == doctest::Approx(12.0));
    CHECK(std::isfinite(ok.value));
    CHECK(ok.value >= 0.0);

    const BoundResult missing = evaluate_formula(FormulaId::thm1, {{"delta", 6}});
    CHECK(!missing.hypothesis_ok);
    CHECK(!missing.reason.empty());

    const BoundResult bad = evaluate_formula(
        FormulaId::thm2, {{"n", 5}, {"s", 3}, {"t", 3}});
    CHECK(!bad.hypothesis_ok);

    const BoundResult lem5 = evaluate_formula(FormulaId::lem5, {});
    CHECK(!lem5.hypothesis_ok);

    const BoundResult a = evaluate_formula(
        FormulaId::lem3_edge, {{"n", 10}, {"s", 3}, {"t", 3}});
    const BoundResult b = evaluate_formula(
        FormulaId::zarankiewicz_edge, {{"n", 10}, {"s", 3}, {"t", 3}});
    CHECK(a.value == b.value);

    CHECK(formula_from_name("lem1_printed") == FormulaId::lem1_printed);
    CHECK(!formula_from_name("lemX").has_value());
}
