#include "stripllt/wgraph.hpp"

#include "stripllt/errors.hpp"
#include "stripllt/llt.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sllt {

WeightedGraph::WeightedGraph(std::vector<int> w)
    : weights(std::move(w)), edge(weights.size(), std::vector<int>(weights.size(), 0)) {}

void WeightedGraph::set_edge(int a, int b, int w) {
    if (a < 1 || b < 1 || a > n() || b > n() || a == b)
        fail(ErrorKind::IndexOutOfRange, "bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    edge[a - 1][b - 1] = w;
    edge[b - 1][a - 1] = w;
}

int WeightedGraph::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0); }

bool WeightedGraph::well_formed() const {
    for (int i = 0; i < n(); ++i) {
        if (weights[i] < 1 || edge[i][i] != 0)
            return false;
        for (int j = 0; j < n(); ++j)
            if (edge[i][j] != edge[j][i] || edge[i][j] < 0 || edge[i][j] > std::min(weights[i], weights[j]))
                return false;
    }
    return true;
}

WeightedGraph pi_graph(const HorizontalStrip& s) {
    WeightedGraph g(s.lengths());
    for (int i = 1; i <= s.n(); ++i)
        for (int j = i + 1; j <= s.n(); ++j)
            g.set_edge(i, j, m_ij(s, i, j));
    return g;
}

WeightedGraph permute(const WeightedGraph& g, const Permutation& perm) {
    WeightedGraph h(std::vector<int>(g.n()));
    for (int i = 0; i < g.n(); ++i) {
        h.weights[perm[i] - 1] = g.weights[i];
        for (int j = 0; j < g.n(); ++j)
            h.edge[perm[i] - 1][perm[j] - 1] = g.edge[i][j];
    }
    return h;
}

namespace {

// isomorphism-invariant vertex label: weight, then incident edge weights in decreasing order
std::vector<int> vertex_signature(const WeightedGraph& g, int v) {
    std::vector<int> sig;
    for (int u = 0; u < g.n(); ++u)
        if (u != v)
            sig.push_back(g.edge[v][u]);
    std::sort(sig.begin(), sig.end(), std::greater<>());
    sig.insert(sig.begin(), g.weights[v]);
    return sig;
}

} // namespace

std::optional<Permutation> is_isomorphic(const WeightedGraph& g, const WeightedGraph& h) {
    if (g.n() != h.n())
        return std::nullopt;
    const int n = g.n();
    std::vector<std::vector<int>> sg(n), sh(n);
    for (int v = 0; v < n; ++v) {
        sg[v] = vertex_signature(g, v);
        sh[v] = vertex_signature(h, v);
    }
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }
    Permutation perm(n, 0);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) {
        if (i == n)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || sg[i] != sh[v])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = g.edge[i][j] == h.edge[v][perm[j] - 1];
            if (!ok)
                continue;
            used[v] = true;
            perm[i] = v + 1;
            if (rec(i + 1))
                return true;
            used[v] = false;
        }
        return false;
    };
    if (!rec(0))
        return std::nullopt;
    return perm;
}

CanonicalForm canonical_form(const WeightedGraph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v)
        sig[v] = vertex_signature(g, v);
    std::vector<std::vector<int>> slots = sig;
    std::sort(slots.begin(), slots.end());

    CanonicalForm best;
    bool have_best = false;
    std::vector<int> order(n), key;
    std::vector<bool> used(n, false);
    std::function<void(int, bool)> rec = [&](int p, bool tight) {
        if (p == n) {
            if (!have_best || !tight) {
                best.edges = key;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || sig[v] != slots[p])
                continue;
            const std::size_t mark = key.size();
            bool t = tight && have_best;
            bool worse = false;
            for (int q = 0; q < p; ++q) {
                int e = g.edge[v][order[q]];
                key.push_back(e);
                if (t) {
                    int b = best.edges[key.size() - 1];
                    if (e > b) {
                        worse = true;
                        break;
                    }
                    if (e < b)
                        t = false;
                }
            }
            if (!worse) {
                used[v] = true;
                order[p] = v;
                rec(p + 1, t);
                used[v] = false;
            }
            key.resize(mark);
        }
    };
    rec(0, true);
    for (const auto& s : slots)
        best.weights.insert(best.weights.end(), s.begin(), s.end());
    return best;
}

DcGraphs predict_dc_graphs(const WeightedGraph& g, int i, int j, int mij) {
    const int n = g.n();
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        fail(ErrorKind::PreconditionViolated, "predict_dc_graphs needs two distinct vertices");
    if (g.edge_weight(i, j) != mij || mij >= std::min(g.weight(i), g.weight(j)))
        fail(ErrorKind::PreconditionViolated, "predict_dc_graphs needs M = edge(i, j) < min weight");

    DcGraphs out;
    out.prime = g;
    out.prime.set_edge(i, j, mij + 1);

    const int lo = std::min(i, j), hi = std::max(i, j);
    // new vertex list, referring to old vertices; 0 is the union, -1 the intersection
    std::vector<int> slots;
    for (int v = 1; v <= n; ++v) {
        if (v == lo) {
            slots.push_back(0);
            if (mij > 0)
                slots.push_back(-1);
        } else if (v != hi) {
            slots.push_back(v);
        }
    }
    std::vector<int> w;
    for (int s : slots)
        w.push_back(s == 0 ? g.weight(i) + g.weight(j) - mij : s == -1 ? mij : g.weight(s));
    WeightedGraph d(std::move(w));
    for (std::size_t a = 0; a < slots.size(); ++a)
        for (std::size_t b = a + 1; b < slots.size(); ++b) {
            int sa = slots[a], sb = slots[b];
            int e = 0;
            if (sa > 0 && sb > 0) {
                e = g.edge_weight(sa, sb);
            } else if (sa <= 0 && sb <= 0) {
                e = mij;
            } else {
                int special = sa > 0 ? sb : sa;
                int r = sa > 0 ? sa : sb;
                int m1 = g.edge_weight(i, r), m2 = g.edge_weight(j, r);
                if (special == 0)
                    e = std::min(g.weight(r), std::max({m1, m2, m1 + m2 - mij}));
                else
                    e = std::min({mij, m1, m2});
            }
            d.set_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1, e);
        }
    out.dprime = std::move(d);
    return out;
}

std::optional<HorizontalStrip> realize(const WeightedGraph& g, int bound) {
    const int n = g.n();
    if (n == 0)
        return std::nullopt;
    std::vector<int> vert(n);
    std::vector<Row> rows(n);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int p) {
        if (p == n)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            const int span = p == 0 ? 0 : bound;
            // offsets nearest zero first: 0, -1, 1, -2, 2, ...
            for (int t = 0; t <= 2 * span; ++t) {
                const int lo = t % 2 ? -(t + 1) / 2 : t / 2;
                Row r{lo, lo + g.weights[v] - 1};
                bool ok = true;
                for (int q = 0; q < p && ok; ++q)
                    ok = m_pair(rows[q], r) == g.edge[vert[q]][v];
                if (!ok)
                    continue;
                used[v] = true;
                vert[p] = v;
                rows[p] = r;
                if (rec(p + 1))
                    return true;
                used[v] = false;
            }
        }
        return false;
    };
    if (!rec(0))
        return std::nullopt;
    return normalize_translation(HorizontalStrip(rows));
}

std::optional<HorizontalStrip> realize(const WeightedGraph& g) { return realize(g, g.total_weight()); }

SymFunc llt_of_graph(const WeightedGraph& g, int bound) {
    auto s = realize(g, bound);
    if (!s)
        fail(ErrorKind::NotRealizedWithinBound, "no strip realizes the graph within bound " + std::to_string(bound));
    return llt_poly(*s, g.n());
}

} // namespace sllt
