#include "oracles.hpp"

#include "stripllt/chromatic.hpp"
#include "stripllt/errors.hpp"
#include "stripllt/llt.hpp"

#include <doctest.h>

#include <random>

using namespace sllt;

namespace {
Composition C(const std::string& s) { return parse_composition(s); }
HorizontalStrip S(const std::string& s) { return parse_strip(s); }
SymFunc p(const Partition& l, int k) { return eval_basis(Basis::p, l, k); }
SymFunc h(const Partition& l, int k) { return eval_basis(Basis::h, l, k); }
const QPoly q = QPoly::q_power(1);
} // namespace

TEST_CASE("path graphs") {
    VertexWeightedGraph g = path_graph(C("2,1,2,3,1"));
    CHECK(g.weights == std::vector<int>{2, 1, 2, 3, 1});
    int edges = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            edges += g.adjacent(a, b);
    CHECK(edges == 4);
    CHECK(g.adjacent(4, 5));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(path_graph(C("4")).n() == 1);
    for (const auto& a : {C("2,1,3"), C("1,1,1,1"), C("3,2")}) {
        WeightedGraph pi = pi_graph(strip_of_composition(a));
        WeightedGraph path(a.parts());
        for (int v = 1; v < a.length(); ++v)
            path.set_edge(v, v + 1, 1);
        CHECK(is_isomorphic(pi, path));
    }
    VertexWeightedGraph bad({1, 1});
    CHECK_THROWS_AS(bad.add_edge(1, 1), Error);
    CHECK_THROWS_AS(bad.add_edge(1, 3), Error);
}

TEST_CASE("extended chromatic function") {
    for (int k = 1; k <= 4; ++k)
        CHECK(extended_chromatic(path_graph(C(std::to_string(k))), k) == p({k}, k));
    SymFunc two = extended_chromatic(path_graph(C("1,1")), 2);
    SymFunc x1x2(2, 2);
    x1x2.add_term({1, 1}, 2);
    CHECK(two == x1x2);
    CHECK(two == p({1, 1}, 2) - p({2}, 2));
    CHECK(extended_chromatic(VertexWeightedGraph({2, 3}), 5) == multiply(p({2}, 5), p({3}, 5)));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 4;
        std::vector<int> w(n);
        for (auto& x : w)
            x = 1 + static_cast<int>(rng() % 3);
        VertexWeightedGraph g(w);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (rng() % 2)
                    g.add_edge(a, b);
        const int k = std::min(g.total_weight(), 5);
        SymFunc f = extended_chromatic(g, k);
        CHECK(f == oracle::chromatic(g, k));
        CHECK(f.is_symmetric());
    }
}

TEST_CASE("path p-expansion") {
    BasisExpansion e = path_p_expansion(C("1,1"));
    CHECK(e.basis == Basis::p);
    CHECK(e.coeffs == std::map<Partition, QPoly>{{{2}, -1}, {{1, 1}, 1}});
    CHECK(path_p_expansion(C("5")).coeffs == std::map<Partition, QPoly>{{{5}, 1}});
    for (const auto& a : {C("2,1,2"), C("1,2,1,1"), C("3,1")})
        CHECK(evaluate(path_p_expansion(a), a.size()) == extended_chromatic(path_graph(a), a.size()));
}

TEST_CASE("chromatic path relation and classification") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m < n; ++m)
            for (const auto& a : compositions_of(m))
                for (const auto& b : compositions_of(n - m)) {
                    SymFunc lhs = multiply(extended_chromatic(path_graph(a), n), extended_chromatic(path_graph(b), n));
                    SymFunc rhs = extended_chromatic(path_graph(concat(a, b)), n) +
                                  extended_chromatic(path_graph(near_concat(a, b)), n);
                    CHECK(lhs == rhs);
                }
    for (int n = 1; n <= 6; ++n) {
        auto all = compositions_of(n);
        std::vector<BasisExpansion> x;
        for (const auto& a : all)
            x.push_back(to_basis(extended_chromatic(path_graph(a), n), Basis::p));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK((x[i] == x[j]) == multiset_equal(all[i], all[j]));
    }
}

TEST_CASE("path LLT h-expansion") {
    BasisExpansion e = path_llt_h_expansion(C("1,1"));
    CHECK(e.basis == Basis::h);
    CHECK(e.coeff({1, 1}) == q);
    CHECK(e.coeff({2}) == 1 - q);
    CHECK(evaluate(e, 2) == llt_poly(S("2/1,1/0"), 2));
    CHECK(path_llt_h_expansion(C("4")).coeffs == std::map<Partition, QPoly>{{{4}, 1}});

    for (int n = 1; n <= 5; ++n)
        for (const auto& a : compositions_of(n))
            CHECK(evaluate(path_llt_h_expansion(a), n) == llt_poly(strip_of_composition(a), n));
    CHECK(evaluate(path_llt_h_expansion(C("1,1"), PathSign::Printed), 2) != llt_poly(S("2/1,1/0"), 2));

    // q G_1 G_1 = G_11 + (q - 1) G_2
    SymFunc g1 = llt_poly(strip_of_composition(C("1")), 2);
    SymFunc lhs = q * multiply(g1, g1);
    SymFunc rhs = llt_poly(strip_of_composition(C("1,1")), 2) + (q - 1) * llt_poly(strip_of_composition(C("2")), 2);
    CHECK(lhs == rhs);
    CHECK(h({1}, 2) == g1);
}

TEST_CASE("path LLT classification") {
    for (int n = 1; n <= 6; ++n) {
        auto all = compositions_of(n);
        std::vector<SymFunc> g;
        for (const auto& a : all)
            g.push_back(llt_poly(strip_of_composition(a), n));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK((g[i] == g[j]) == multiset_equal(all[i], all[j]));
    }
}

TEST_CASE("composition with a graph") {
    HorizontalStrip pi = S("1/0,2/1");
    CHECK(llt_poly(strip_compose(C("1,2"), pi)) == llt_poly(strip_compose(C("2,1"), pi)));
}

TEST_CASE("chromatic quasisymmetric function") {
    SymFunc sum = p({1}, 3);
    CHECK(chrom_quasisym(LabelledGraph{3, {}}, 3) == multiply(multiply(sum, sum), sum));
    SymFunc edge(2, 2);
    edge.add_term({1, 1}, 1 + q);
    CHECK(chrom_quasisym(LabelledGraph{2, {{1, 2}}}, 2) == edge);
    HorizontalStrip l = S("2/1,1/0,1/0,2/1,2/1"), m = S("1/0,2/1,2/1,1/0,2/1");
    CHECK(chrom_quasisym(gamma_graph(l), 5) == chrom_quasisym(gamma_graph(m), 5));
}

TEST_CASE("plethysm bridge") {
    CHECK(verify_plethysm_bridge(S("1/0,1/0")));
    CHECK(verify_plethysm_bridge(S("4/3")));
    CHECK(verify_plethysm_bridge(S("2/1,1/0,1/0,2/1,2/1")));
    CHECK(verify_plethysm_bridge(S("1/0,2/1,2/1,1/0,2/1")));
    for (const auto& s : enumerate_strips(3, 1, 2))
        CHECK(verify_plethysm_bridge(s));
    CHECK_THROWS_AS(verify_plethysm_bridge(S("2/0")), Error);
}
