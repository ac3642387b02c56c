#include "stripllt/llt.hpp"

#include "stripllt/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

namespace sllt {

int inversions(const HorizontalStrip& s, const StripTableau& t) {
    int inv = 0;
    for (int i = 0; i < s.n(); ++i)
        for (int j = i + 1; j < s.n(); ++j) {
            const Row& a = s.rows[i];
            const Row& b = s.rows[j];
            for (int c = a.lo; c <= a.hi; ++c) {
                int x = t[i][c - a.lo];
                if (c >= b.lo && c <= b.hi && x > t[j][c - b.lo])
                    ++inv;
                if (c - 1 >= b.lo && c - 1 <= b.hi && x < t[j][c - 1 - b.lo])
                    ++inv;
            }
        }
    return inv;
}

bool valid_tableau(const HorizontalStrip& s, const StripTableau& t, int k) {
    if (static_cast<int>(t.size()) != s.n())
        return false;
    for (int i = 0; i < s.n(); ++i) {
        if (static_cast<int>(t[i].size()) != s.rows[i].size())
            return false;
        for (std::size_t c = 0; c < t[i].size(); ++c) {
            if (t[i][c] < 1 || t[i][c] > k)
                return false;
            if (c > 0 && t[i][c - 1] > t[i][c])
                return false;
        }
    }
    return true;
}

namespace {

struct RowFillings {
    std::vector<std::vector<std::uint8_t>> values;
    std::vector<std::vector<std::uint8_t>> counts; // per value 1..k
};

RowFillings fillings(int len, int k) {
    RowFillings f;
    std::vector<std::uint8_t> cur(len);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == len) {
            f.values.push_back(cur);
            std::vector<std::uint8_t> cnt(k, 0);
            for (auto v : cur)
                ++cnt[v - 1];
            f.counts.push_back(std::move(cnt));
            return;
        }
        for (int v = lo; v <= k; ++v) {
            cur[pos] = static_cast<std::uint8_t>(v);
            rec(pos + 1, v);
        }
    };
    rec(0, 1);
    return f;
}

bool rows_interact(const Row& a, const Row& b) { return intersection_size(a, Row{b.lo, b.hi + 1}) > 0; }

} // namespace

SymFunc llt_poly(const HorizontalStrip& s, int k) {
    const int n = s.n();
    const int cells = s.cells();
    if (k < 1)
        fail(ErrorKind::PreconditionViolated, "need at least one variable");
    if (cells > 255)
        fail(ErrorKind::PreconditionViolated, "strip too large for enumeration");

    std::vector<RowFillings> rf;
    for (const auto& r : s.rows)
        rf.push_back(fillings(r.size(), k));

    // table[i][j][a * F_j + b]: inversions between filling a of row i and filling b of row j
    std::vector<std::vector<std::vector<std::uint16_t>>> table(n, std::vector<std::vector<std::uint16_t>>(n));
    std::vector<std::vector<int>> partners(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Row& a = s.rows[i];
            const Row& b = s.rows[j];
            if (!rows_interact(a, b))
                continue;
            partners[j].push_back(i);
            const auto& fa = rf[i].values;
            const auto& fb = rf[j].values;
            auto& tab = table[i][j];
            tab.resize(fa.size() * fb.size());
            for (std::size_t x = 0; x < fa.size(); ++x)
                for (std::size_t y = 0; y < fb.size(); ++y) {
                    int inv = 0;
                    for (int c = a.lo; c <= a.hi; ++c) {
                        int v = fa[x][c - a.lo];
                        if (c >= b.lo && c <= b.hi && v > fb[y][c - b.lo])
                            ++inv;
                        if (c - 1 >= b.lo && c - 1 <= b.hi && v < fb[y][c - 1 - b.lo])
                            ++inv;
                    }
                    tab[x * fb.size() + y] = static_cast<std::uint16_t>(inv);
                }
        }

    std::unordered_map<std::string, std::vector<std::int64_t>> acc;
    std::vector<std::size_t> choice(n);
    std::string expo(k, '\0');
    std::function<void(int, int)> rec = [&](int d, int q) {
        if (d == n) {
            auto& slot = acc[expo];
            if (static_cast<int>(slot.size()) <= q)
                slot.resize(q + 1, 0);
            ++slot[q];
            return;
        }
        const std::size_t F = rf[d].values.size();
        for (std::size_t f = 0; f < F; ++f) {
            int dq = 0;
            for (int i : partners[d])
                dq += table[i][d][choice[i] * F + f];
            choice[d] = f;
            const auto& cnt = rf[d].counts[f];
            for (int v = 0; v < k; ++v)
                expo[v] = static_cast<char>(expo[v] + cnt[v]);
            rec(d + 1, q + dq);
            for (int v = 0; v < k; ++v)
                expo[v] = static_cast<char>(expo[v] - cnt[v]);
        }
    };
    rec(0, 0);

    SymFunc g(k, cells);
    Exponent x(k);
    for (const auto& [key, qs] : acc) {
        for (int v = 0; v < k; ++v)
            x[v] = static_cast<unsigned char>(key[v]);
        std::vector<Integer> c(qs.size());
        for (std::size_t e = 0; e < qs.size(); ++e)
            c[e] = static_cast<long>(qs[e]);
        g.add_term(x, QPoly(std::move(c)));
    }
    return g;
}

SymFunc llt_poly(const HorizontalStrip& s) { return llt_poly(s, s.n()); }

BasisExpansion two_row_schur(int a, int b, int M) {
    if (!(a >= b && b >= M && M >= 0))
        fail(ErrorKind::PreconditionViolated, "two_row_schur needs a >= b >= M >= 0");
    BasisExpansion e;
    e.basis = Basis::s;
    e.degree = a + b;
    for (int k = 0; k <= b; ++k) {
        Partition p{a + b - k};
        if (k > 0)
            p.push_back(k);
        e.add(p, QPoly::q_power(std::min(M, k)));
    }
    return e;
}

bool LabelledGraph::adjacent(int a, int b) const {
    if (a > b)
        std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

bool is_unicellular(const HorizontalStrip& s) {
    return std::all_of(s.rows.begin(), s.rows.end(), [](const Row& r) { return r.size() == 1; });
}

LabelledGraph gamma_graph(const HorizontalStrip& s) {
    if (!is_unicellular(s))
        fail(ErrorKind::NotUnicellular, "gamma_graph needs every row to have one cell");
    // reverse content reading order: content descending, then row index descending
    std::vector<int> order(s.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (s.rows[a].lo != s.rows[b].lo)
            return s.rows[a].lo > s.rows[b].lo;
        return a > b;
    });
    LabelledGraph g;
    g.n = s.n();
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            int ra = order[a], rb = order[b];
            int ca = s.rows[ra].lo, cb = s.rows[rb].lo;
            if (ca == cb || (ca == cb + 1 && ra < rb))
                g.edges.emplace_back(a + 1, b + 1);
        }
    return g;
}

SymFunc llt_via_colourings(const LabelledGraph& g, int k) {
    SymFunc f(k, g.n);
    std::vector<int> kappa(g.n);
    Exponent x(k, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            int asc = 0;
            for (auto [a, b] : g.edges)
                if (kappa[a - 1] < kappa[b - 1])
                    ++asc;
            f.add_term(x, QPoly::q_power(asc));
            return;
        }
        for (int c = 0; c < k; ++c) {
            kappa[v] = c;
            ++x[c];
            rec(v + 1);
            --x[c];
        }
    };
    rec(0);
    return f;
}

int top_q_degree(const SymFunc& f) {
    if (f.is_zero())
        fail(ErrorKind::ZeroPolynomial, "top_q_degree of the zero polynomial");
    int d = -1;
    for (const auto& [x, c] : f.terms())
        d = std::max(d, c.degree());
    return d;
}

} // namespace sllt
