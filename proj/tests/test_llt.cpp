#include "oracles.hpp"

#include "stripllt/errors.hpp"
#include "stripllt/json_io.hpp"
#include "stripllt/llt.hpp"

#include <doctest.h>

#include <fstream>

using namespace sllt;

namespace {
HorizontalStrip S(const std::string& s) { return parse_strip(s); }
const HorizontalStrip lambda = S("4/0,5/4,8/5,6/1");
const QPoly q = QPoly::q_power(1);

BasisExpansion schur(int d, std::initializer_list<std::pair<Partition, QPoly>> terms) {
    BasisExpansion e;
    e.basis = Basis::s;
    e.degree = d;
    for (const auto& [p, c] : terms)
        e.add(p, c);
    return e;
}
} // namespace

TEST_CASE("inversions of explicit tableaux") {
    StripTableau t = {{1, 2, 2, 3}, {5}, {1, 1, 3}, {1, 4, 4, 4, 5}};
    StripTableau u = {{4, 4, 4, 4}, {3}, {1, 1, 1}, {2, 2, 2, 2, 2}};
    CHECK(valid_tableau(lambda, t, 5));
    CHECK(valid_tableau(lambda, u, 4));
    CHECK_FALSE(valid_tableau(lambda, t, 4));
    CHECK_FALSE(valid_tableau(lambda, {{2, 1, 2, 3}, {5}, {1, 1, 3}, {1, 4, 4, 4, 5}}, 5));
    CHECK(inversions(lambda, t) == 5);
    CHECK(inversions(lambda, u) == 6);
    CHECK(inversions(S("4/0"), {{1, 1, 2, 3}}) == 0);
    CHECK(inversions(S("1/0,1/0"), {{2}, {1}}) == 1);
    CHECK(inversions(S("1/0,1/0"), {{1}, {2}}) == 0);
}

TEST_CASE("LLT polynomial examples") {
    for (int a = 1; a <= 4; ++a)
        for (int k = 1; k <= 3; ++k)
            CHECK(llt_poly(S(std::to_string(a) + "/0"), k) == eval_basis(Basis::h, {a}, k));
    CHECK(to_basis(llt_poly(S("2/1,2/0"), 2), Basis::s) == schur(3, {{{3}, 1}, {{2, 1}, q}}));
    BasisExpansion big = to_basis(llt_poly(lambda, 4), Basis::s);
    CHECK(big.coeff({6, 4, 3}) == QPoly::q_power(6, 3) + QPoly::q_power(5));
    CHECK(big.coeff({8, 5}) == QPoly::q_power(5, 3) + QPoly::q_power(4, 4));
    CHECK(big.coeff({10, 3}) == QPoly::q_power(3, 6) + QPoly::q_power(2));
    CHECK(big.coeff({13}) == QPoly(1));
    std::ifstream in(std::string(GOLDEN_DIR) + "/example_schur_expansion.json");
    REQUIRE(in);
    CHECK(big == expansion_from_json(Json::parse(in)));
    CHECK_THROWS_AS(llt_poly(lambda, 0), Error);
}

TEST_CASE("enumeration agrees with the cell-by-cell definition") {
    for (const auto& s : enumerate_strips(3, 2, 3)) {
        CHECK(llt_poly(s, s.n()) == oracle::llt(s, s.n()));
    }
    for (const auto& s : enumerate_strips(2, 3, 3))
        CHECK(llt_poly(s, 3) == oracle::llt(s, 3));
}

TEST_CASE("two-row Schur formula") {
    CHECK(two_row_schur(2, 1, 1) == schur(3, {{{3}, 1}, {{2, 1}, q}}));
    CHECK(two_row_schur(3, 0, 0) == schur(3, {{{3}, 1}}));
    CHECK(two_row_schur(1, 1, 1) == schur(2, {{{2}, 1}, {{1, 1}, q}}));
    CHECK(two_row_schur(1, 1, 1) == to_basis(llt_poly(S("1/0,1/0"), 2), Basis::s));
    CHECK_THROWS_AS(two_row_schur(1, 2, 0), Error);
    CHECK_THROWS_AS(two_row_schur(2, 1, 2), Error);
    CHECK_THROWS_AS(two_row_schur(2, 1, -1), Error);
}

TEST_CASE("unicellular graphs") {
    HorizontalStrip l = S("2/1,1/0,1/0,2/1,2/1"), m = S("1/0,2/1,2/1,1/0,2/1");
    LabelledGraph gl = gamma_graph(l), gm = gamma_graph(m);
    using E = std::vector<std::pair<int, int>>;
    CHECK(gl.n == 5);
    CHECK(gl.edges == E{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(gm.edges == E{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    CHECK(gamma_graph(S("1/0")).edges.empty());
    try {
        gamma_graph(S("2/0"));
        FAIL("expected NotUnicellular");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnicellular);
    }
    CHECK(llt_via_colourings(gamma_graph(S("1/0,1/0")), 3) == llt_poly(S("1/0,1/0"), 3));
    CHECK(llt_via_colourings(gl, 5) == llt_poly(l, 5));
    CHECK(llt_via_colourings(gm, 5) == llt_poly(m, 5));
    CHECK(llt_poly(l, 5) == llt_poly(m, 5));
    LabelledGraph empty{3, {}};
    SymFunc sum = eval_basis(Basis::p, {1}, 2);
    CHECK(llt_via_colourings(empty, 2) == multiply(multiply(sum, sum), sum));
    for (const auto& s : enumerate_strips(4, 1, 3))
        CHECK(llt_via_colourings(gamma_graph(s), s.n()) == llt_poly(s, s.n()));
}

TEST_CASE("top q-degree") {
    CHECK(top_q_degree(llt_poly(lambda, 4)) == 6);
    CHECK(top_q_degree(llt_poly(S("3/0"), 2)) == 0);
    CHECK(top_q_degree(llt_poly(hl_strip({2, 1}), 2)) == 1);
    try {
        top_q_degree(SymFunc(2, 2));
        FAIL("expected ZeroPolynomial");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroPolynomial);
    }
}

TEST_CASE("sweep properties") {
    for (const auto& s : enumerate_strips(3, 3, 4)) {
        const int n = s.n();
        SymFunc g = llt_poly(s, n);
        CHECK(g.is_symmetric());
        CHECK(top_q_degree(g) == total_edge_weight(s));
        BasisExpansion e = to_basis(g, Basis::s);
        CHECK(e.integral());
        for (const auto& [p, c] : e.coeffs)
            CHECK(c.nonnegative());
        CHECK(evaluate(e, n) == g);
        CHECK(llt_poly(translate(s, 2), n) == g);
        CHECK(llt_poly(cycle(s), n) == g);
        CHECK(llt_poly(rotate(s, 5), n) == g);
        for (int i = 1; i < n; ++i)
            if (commutes(s.row(i), s.row(i + 1)))
                CHECK(llt_poly(commute_swap(s, i), n) == g);
    }
}
