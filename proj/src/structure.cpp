#include "stripllt/structure.hpp"

#include "stripllt/errors.hpp"
#include "stripllt/wgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace sllt {

namespace {

bool noncommuting(const HorizontalStrip& s, int a, int b) { return !commutes(s.row(a), s.row(b)); }

void check_index(const HorizontalStrip& s, int i) {
    if (i < 1 || i > s.n())
        fail(ErrorKind::IndexOutOfRange, "row " + std::to_string(i) + " out of range 1.." + std::to_string(s.n()));
}

// fewest edges from idx.front() to idx.back() through increasing members of idx, using at least two edges
int shortest_chain(const HorizontalStrip& s, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    const int inf = 1 << 20;
    std::vector<int> d(k, inf);
    d[0] = 0;
    for (int b = 1; b < k; ++b)
        for (int a = 0; a < b; ++a) {
            if (d[a] == inf || !noncommuting(s, idx[a], idx[b]))
                continue;
            if (a == 0 && b == k - 1)
                continue;
            d[b] = std::min(d[b], d[a] + 1);
        }
    return d[k - 1];
}

} // namespace

bool is_noncommuting_path(const HorizontalStrip& s, const std::vector<int>& idx) {
    if (idx.size() < 3)
        return false;
    for (std::size_t t = 0; t < idx.size(); ++t) {
        check_index(s, idx[t]);
        if (t > 0 && (idx[t] <= idx[t - 1] || !noncommuting(s, idx[t - 1], idx[t])))
            return false;
    }
    return true;
}

bool is_minimal_ncp(const HorizontalStrip& s, const std::vector<int>& idx) {
    if (!is_noncommuting_path(s, idx))
        return false;
    return shortest_chain(s, idx) == static_cast<int>(idx.size()) - 1;
}

std::optional<NoncommutingPath> find_minimal_ncp(const HorizontalStrip& s, int i, int j) {
    check_index(s, i);
    check_index(s, j);
    if (i >= j)
        fail(ErrorKind::PreconditionViolated, "find_minimal_ncp needs i < j");
    const int inf = 1 << 20;
    std::vector<int> d(s.n() + 1, inf), from(s.n() + 1, 0);
    d[i] = 0;
    for (int b = i + 1; b <= j; ++b)
        for (int a = i; a < b; ++a) {
            if (d[a] == inf || (a == i && b == j) || !noncommuting(s, a, b))
                continue;
            if (d[a] + 1 < d[b]) {
                d[b] = d[a] + 1;
                from[b] = a;
            }
        }
    if (d[j] == inf)
        return std::nullopt;
    NoncommutingPath p;
    for (int v = j; v != i; v = from[v])
        p.indices.push_back(v);
    p.indices.push_back(i);
    std::reverse(p.indices.begin(), p.indices.end());
    // a shortest chain is minimal; greedy reduction is kept as a safeguard
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 1; t + 1 < p.indices.size() && p.indices.size() > 3; ++t) {
            auto trial = p.indices;
            trial.erase(trial.begin() + static_cast<long>(t));
            if (is_noncommuting_path(s, trial)) {
                p.indices = trial;
                changed = true;
                break;
            }
        }
    }
    return p;
}

bool is_strict_pair(const HorizontalStrip& s, int i, int j) {
    check_index(s, i);
    check_index(s, j);
    if (i >= j || s.row(i).lo >= s.row(j).lo)
        return false;
    const int m = m_ij(s, i, j);
    if (m > 0)
        return m < std::min(s.row(i).size(), s.row(j).size());
    for (int k = 1; k <= s.n(); ++k)
        if (k != i && k != j && m_ij(s, i, k) + m_ij(s, j, k) >= s.row(k).size() + 1)
            return true;
    return false;
}

std::vector<std::pair<int, int>> strict_pairs(const HorizontalStrip& s) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= s.n(); ++i)
        for (int j = i + 1; j <= s.n(); ++j)
            if (is_strict_pair(s, i, j))
                out.emplace_back(i, j);
    return out;
}

std::vector<StrictSequence> strict_sequences(const HorizontalStrip& s) {
    std::vector<StrictSequence> out;
    std::vector<int> chain;
    auto try_witnesses = [&] {
        const int j1 = chain.front(), jk = chain.back();
        for (int h = 1; h <= s.n(); ++h) {
            if (h >= j1 && h <= jk)
                continue;
            bool ok = std::all_of(chain.begin(), chain.end(), [&](int j) { return m_ij(s, j, h) > 0; });
            if (!ok)
                continue;
            const Row& rh = s.row(h);
            if (s.row(j1).lo + (j1 > h ? 1 : 0) <= rh.lo && rh.hi + (h > jk ? 1 : 0) <= s.row(jk).hi)
                out.push_back({chain, h});
        }
    };
    std::function<void()> extend = [&] {
        if (chain.size() >= 2)
            try_witnesses();
        const int last = chain.back();
        for (int j = last + 1; j <= s.n(); ++j) {
            if (s.row(j).lo != s.row(last).hi + 1)
                continue;
            bool zero = std::all_of(chain.begin(), chain.end(), [&](int a) { return m_ij(s, a, j) == 0; });
            if (!zero)
                continue;
            chain.push_back(j);
            extend();
            chain.pop_back();
        }
    };
    for (int j = 1; j <= s.n(); ++j) {
        chain = {j};
        extend();
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_nesting(const HorizontalStrip& s) {
    for (int i = 1; i <= s.n(); ++i)
        for (int j = i + 1; j <= s.n(); ++j) {
            const int m = m_ij(s, i, j);
            if (m != 0 && !prec(s, i, j) && !prec(s, j, i))
                return false;
            if (m == 0)
                for (int k = 1; k <= s.n(); ++k)
                    if (k != i && k != j && m_ij(s, i, k) + m_ij(s, j, k) > s.row(k).size())
                        return false;
        }
    return true;
}

namespace {

struct Tracked {
    HorizontalStrip s;
    std::vector<int> id; // original index of each current row

    void cycle_once() {
        s = cycle(s);
        std::rotate(id.begin(), id.begin() + 1, id.end());
    }
    void swap_at(int pos) { // 1-based pos and pos + 1
        s = commute_swap(s, pos);
        std::swap(id[pos - 1], id[pos]);
    }
    int position(int orig) const {
        return static_cast<int>(std::find(id.begin(), id.end(), orig) - id.begin()) + 1;
    }
};

} // namespace

HorizontalStrip local_rotate(const HorizontalStrip& s, int i) {
    const int n = s.n();
    if (i < 2 || i > n)
        fail(ErrorKind::IndexOutOfRange, "local_rotate needs 2 <= i <= n");
    if (s.row(i).lo != s.row(i - 1).hi + 1)
        fail(ErrorKind::HypothesisViolated,
             "adjacency condition fails at row " + std::to_string(i) + ": l(R_i) != r(R_{i-1}) + 1");

    auto M = [&](int a, int b) { return m_ij(s, a, b); };
    auto P = [&](int a, int b) { return prec(s, a, b); };
    std::vector<int> I;
    for (int t = 1; t <= n; ++t)
        if (t != i - 1 && t != i)
            I.push_back(t);

    std::vector<int> A, B;
    for (int t : I) {
        if (M(i - 1, t) == 0 && M(i, t) == 0)
            A.push_back(t);
        if (P(i - 1, t) && P(i, t))
            B.push_back(t);
    }
    auto separated = [&](int t) {
        return std::all_of(A.begin(), A.end(), [&](int a) { return M(a, t) == 0; }) &&
               std::all_of(B.begin(), B.end(), [&](int b) { return P(t, b); });
    };
    std::set<int> Cprev, Ccur;
    for (int t : I) {
        if (P(t, i - 1) && M(i, t) == 0 && separated(t))
            Cprev.insert(t);
        if (P(t, i) && M(i - 1, t) == 0 && separated(t))
            Ccur.insert(t);
    }

    auto violated = [&](int cond, int t) {
        fail(ErrorKind::HypothesisViolated,
             "condition " + std::to_string(cond) + " fails at row " + std::to_string(t));
    };
    for (int t : I) {
        const int a = M(i - 1, t), b = M(i, t);
        if (a > 0 && b > 0 && !(P(i - 1, t) && P(i, t)))
            violated(1, t);
        if (a > 0 && b == 0 && !P(t, i - 1))
            violated(2, t);
        if (a == 0 && b > 0 && !P(t, i))
            violated(3, t);
        if (P(t, i - 1) && !(b == 0 && separated(t)))
            violated(4, t);
        if (P(t, i) && !(a == 0 && separated(t)))
            violated(5, t);
    }
    for (int t : I) {
        bool inA = std::find(A.begin(), A.end(), t) != A.end();
        bool inB = std::find(B.begin(), B.end(), t) != B.end();
        if (!inA && !inB && !Cprev.count(t) && !Ccur.count(t))
            fail(ErrorKind::HypothesisViolated, "row " + std::to_string(t) + " lies in none of A, B, C");
    }

    Tracked st{s, {}};
    for (int t = 1; t <= n; ++t)
        st.id.push_back(t);
    try {
        for (int t = 0; t < i - 2; ++t)
            st.cycle_once();
        // C_i directly after R_i
        int slot = 3;
        for (int pos = 3; pos <= n; ++pos) {
            if (!Ccur.count(st.id[pos - 1]))
                continue;
            for (int p = pos; p > slot; --p)
                st.swap_at(p - 1);
            ++slot;
        }
        const int front = slot - 1;
        for (int t = 0; t < front; ++t)
            st.cycle_once();
        // C_{i-1} directly before R_{i-1}
        int before = st.position(i - 1);
        for (int pos = before - 1; pos >= 1; --pos) {
            if (!Cprev.count(st.id[pos - 1]))
                continue;
            for (int p = pos; p < before - 1; ++p)
                st.swap_at(p);
            --before;
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonCommutingSwap)
            throw;
        fail(ErrorKind::BlockNotSeparable, std::string("cannot gather the rotation block: ") + e.what());
    }

    const int x = st.position(i - 1) - static_cast<int>(Cprev.size());
    const int N = st.s.row(st.position(i - 1)).lo + st.s.row(st.position(i)).hi;
    HorizontalStrip out = st.s;
    for (int t = x; t <= n; ++t) {
        const Row& r = st.s.row(x + n - t);
        out.rows[t - 1] = {N - r.hi, N - r.lo};
    }
    return normalize_translation(out);
}

std::string to_string(const Move& m) {
    switch (m.kind) {
    case MoveKind::Translate: return "translate(" + std::to_string(m.arg) + ")";
    case MoveKind::Cycle: return "cycle";
    case MoveKind::Rotate: return "rotate";
    case MoveKind::CommuteSwap: return "commute_swap(" + std::to_string(m.arg) + ")";
    case MoveKind::LocalRotate: return "local_rotate(" + std::to_string(m.arg) + ")";
    }
    return "?";
}

HorizontalStrip apply_move(const HorizontalStrip& s, const Move& m) {
    switch (m.kind) {
    case MoveKind::Translate: return translate(s, m.arg);
    case MoveKind::Cycle: return normalize_translation(cycle(s));
    case MoveKind::Rotate: return normalize_translation(rotate(s, 0));
    case MoveKind::CommuteSwap: return normalize_translation(commute_swap(s, m.arg));
    case MoveKind::LocalRotate: return normalize_translation(local_rotate(s, m.arg));
    }
    fail(ErrorKind::PreconditionViolated, "unknown move");
}

std::optional<std::vector<Move>> similarity_witness(const HorizontalStrip& from, const HorizontalStrip& to, long budget) {
    if (from.n() != to.n() || !is_isomorphic(pi_graph(from), pi_graph(to)))
        fail(ErrorKind::GraphsNotIsomorphic, "the weighted graphs of the two strips are not isomorphic");
    const HorizontalStrip start = normalize_translation(from);
    const HorizontalStrip goal = normalize_translation(to);
    auto finish = [&](std::vector<Move> moves) {
        HorizontalStrip cur = from;
        for (const auto& m : moves)
            cur = apply_move(cur, m);
        if (cur != to)
            moves.push_back({MoveKind::Translate, to.min_content() - cur.min_content()});
        return moves;
    };

    std::map<HorizontalStrip, std::pair<HorizontalStrip, Move>> parent;
    std::deque<HorizontalStrip> queue{start};
    parent.emplace(start, std::make_pair(start, Move{}));
    auto path_to = [&](HorizontalStrip s) {
        std::vector<Move> moves;
        while (s != start) {
            const auto& [prev, mv] = parent.at(s);
            moves.push_back(mv);
            s = prev;
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
    };
    if (start == goal)
        return finish({});

    while (!queue.empty() && static_cast<long>(parent.size()) < budget) {
        HorizontalStrip cur = queue.front();
        queue.pop_front();
        std::vector<Move> cand{{MoveKind::Cycle, 0}, {MoveKind::Rotate, 0}};
        for (int i = 1; i < cur.n(); ++i)
            if (commutes(cur.row(i), cur.row(i + 1)))
                cand.push_back({MoveKind::CommuteSwap, i});
        for (int i = 2; i <= cur.n(); ++i)
            if (cur.row(i).lo == cur.row(i - 1).hi + 1)
                cand.push_back({MoveKind::LocalRotate, i});
        for (const auto& mv : cand) {
            HorizontalStrip next;
            try {
                next = apply_move(cur, mv);
            } catch (const Error&) {
                continue;
            }
            if (parent.count(next))
                continue;
            parent.emplace(next, std::make_pair(cur, mv));
            if (next == goal)
                return finish(path_to(next));
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

} // namespace sllt
