#include "stripllt/chromatic.hpp"

#include "stripllt/errors.hpp"

#include <functional>
#include <numeric>

namespace sllt {

VertexWeightedGraph::VertexWeightedGraph(std::vector<int> w)
    : weights(std::move(w)), adj(weights.size(), std::vector<bool>(weights.size(), false)) {
    for (int x : weights)
        if (x < 1)
            fail(ErrorKind::PreconditionViolated, "vertex weights must be positive");
}

int VertexWeightedGraph::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0); }

void VertexWeightedGraph::add_edge(int a, int b) {
    if (a < 1 || b < 1 || a > n() || b > n())
        fail(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
    if (a == b)
        fail(ErrorKind::PreconditionViolated, "self-loops are not allowed");
    adj[a - 1][b - 1] = adj[b - 1][a - 1] = true;
}

VertexWeightedGraph path_graph(const Composition& alpha) {
    VertexWeightedGraph g(alpha.parts());
    for (int v = 1; v < g.n(); ++v)
        g.add_edge(v, v + 1);
    return g;
}

VertexWeightedGraph underlying_graph(const WeightedGraph& w) {
    VertexWeightedGraph g(w.weights);
    for (int a = 1; a <= w.n(); ++a)
        for (int b = a + 1; b <= w.n(); ++b)
            if (w.edge_weight(a, b) != 0)
                g.add_edge(a, b);
    return g;
}

SymFunc extended_chromatic(const VertexWeightedGraph& g, int k) {
    SymFunc f(k, g.total_weight());
    std::vector<int> colour(g.n());
    Exponent x(k, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n()) {
            f.add_term(x, QPoly(1));
            return;
        }
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = !(g.adj[u][v] && colour[u] == c);
            if (!ok)
                continue;
            colour[v] = c;
            x[c] += g.weights[v];
            rec(v + 1);
            x[c] -= g.weights[v];
        }
    };
    rec(0);
    return f;
}

BasisExpansion path_p_expansion(const Composition& alpha) {
    BasisExpansion e;
    e.basis = Basis::p;
    e.degree = alpha.size();
    for (const auto& c : coarsenings(alpha)) {
        long sign = (alpha.length() - c.length()) % 2 == 0 ? 1 : -1;
        e.add(sorted_partition(c.parts()), QPoly(sign));
    }
    e.normalize();
    return e;
}

BasisExpansion path_llt_h_expansion(const Composition& alpha, PathSign sign) {
    BasisExpansion e;
    e.basis = Basis::h;
    e.degree = alpha.size();
    const QPoly q = QPoly::q_power(1);
    const QPoly factor = sign == PathSign::Corrected ? QPoly(1) - q : q - QPoly(1);
    for (const auto& c : coarsenings(alpha)) {
        QPoly coef = QPoly::q_power(c.length() - 1) * pow(factor, alpha.length() - c.length());
        e.add(sorted_partition(c.parts()), coef);
    }
    e.normalize();
    return e;
}

SymFunc chrom_quasisym(const LabelledGraph& g, int k) {
    SymFunc f(k, g.n);
    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (auto [a, b] : g.edges)
        adj[a - 1][b - 1] = adj[b - 1][a - 1] = true;
    std::vector<int> colour(g.n);
    Exponent x(k, 0);
    std::function<void(int, int)> rec = [&](int v, int asc) {
        if (v == g.n) {
            f.add_term(x, QPoly::q_power(asc));
            return;
        }
        for (int c = 0; c < k; ++c) {
            int a = asc;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (!adj[u][v])
                    continue;
                ok = colour[u] != c;
                if (colour[u] < c)
                    ++a;
            }
            if (!ok)
                continue;
            colour[v] = c;
            ++x[c];
            rec(v + 1, a);
            --x[c];
        }
    };
    rec(0, 0);
    return f;
}

bool verify_plethysm_bridge(const HorizontalStrip& s) {
    if (!is_unicellular(s))
        fail(ErrorKind::NotUnicellular, "plethysm bridge needs a unicellular strip");
    const int n = s.n();
    try {
        BasisExpansion lhs = plethystic_q_substitute(to_basis(llt_poly(s, n), Basis::p));
        lhs = divide_qpoly(lhs, pow(QPoly::q_power(1) - QPoly(1), n));
        BasisExpansion rhs = to_basis(chrom_quasisym(gamma_graph(s), n), Basis::p);
        return lhs == rhs;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InexactDivision || e.kind() == ErrorKind::NotSymmetric)
            return false;
        throw;
    }
}

} // namespace sllt
