#include "stripllt/strips.hpp"

#include "stripllt/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace sllt {

Row make_row(int lo, int hi) {
    if (hi < lo)
        fail(ErrorKind::PreconditionViolated, "empty row");
    return {lo, hi};
}

int intersection_size(const Row& a, const Row& b) {
    return std::max(0, std::min(a.hi, b.hi) - std::max(a.lo, b.lo) + 1);
}

HorizontalStrip::HorizontalStrip(std::vector<Row> r) : rows(std::move(r)) {
    for (const auto& x : rows)
        if (x.hi < x.lo)
            fail(ErrorKind::PreconditionViolated, "empty row in strip");
}

const Row& HorizontalStrip::row(int i) const {
    if (i < 1 || i > n())
        fail(ErrorKind::IndexOutOfRange, "row index " + std::to_string(i) + " out of range 1.." + std::to_string(n()));
    return rows[i - 1];
}

int HorizontalStrip::cells() const {
    int c = 0;
    for (const auto& r : rows)
        c += r.size();
    return c;
}

int HorizontalStrip::min_content() const {
    int m = rows.at(0).lo;
    for (const auto& r : rows)
        m = std::min(m, r.lo);
    return m;
}

int HorizontalStrip::max_content() const {
    int m = rows.at(0).hi;
    for (const auto& r : rows)
        m = std::max(m, r.hi);
    return m;
}

std::vector<int> HorizontalStrip::lengths() const {
    std::vector<int> v;
    for (const auto& r : rows)
        v.push_back(r.size());
    return v;
}

namespace {

int parse_int(std::string tok, const std::string& whole) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    int v = 0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    if (!tok.empty() && *b == '+')
        ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (tok.empty() || ec != std::errc() || p != e)
        fail(ErrorKind::Parse, "bad strip literal: '" + whole + "'");
    return v;
}

} // namespace

HorizontalStrip parse_strip(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')'; }), t.end());
    std::vector<Row> rows;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t comma = t.find(',', pos);
        if (comma == std::string::npos)
            comma = t.size();
        std::string tok = t.substr(pos, comma - pos);
        std::size_t slash = tok.find('/');
        if (slash == std::string::npos)
            fail(ErrorKind::Parse, "row '" + tok + "' is not of the form a/b");
        int a = parse_int(tok.substr(0, slash), text);
        int b = parse_int(tok.substr(slash + 1), text);
        if (a <= b)
            fail(ErrorKind::Parse, "row '" + tok + "' is empty (need a > b)");
        rows.push_back({b, a - 1});
        pos = comma + 1;
    }
    return HorizontalStrip(std::move(rows));
}

std::string to_string(const Row& r) { return std::to_string(r.hi + 1) + "/" + std::to_string(r.lo); }

std::string to_string(const HorizontalStrip& s) {
    std::string out;
    for (const auto& r : s.rows) {
        if (!out.empty())
            out += ',';
        out += to_string(r);
    }
    return out;
}

int m_pair(const Row& r, const Row& rp) {
    if (r.lo <= rp.lo)
        return intersection_size(r, rp);
    return intersection_size(r, rp.shifted(1));
}

bool commutes(const Row& r, const Row& rp) { return m_pair(r, rp) == m_pair(rp, r); }

int m_ij(const HorizontalStrip& s, int i, int j) {
    const Row& a = s.row(i);
    const Row& b = s.row(j);
    if (i == j)
        fail(ErrorKind::IndexOutOfRange, "m_ij needs distinct indices");
    return i < j ? m_pair(a, b) : m_pair(b, a);
}

bool prec(const HorizontalStrip& s, int i, int j) { return m_ij(s, i, j) == s.row(i).size(); }

int n_lambda(const HorizontalStrip& s) {
    std::vector<int> len = s.lengths();
    std::sort(len.begin(), len.end(), std::greater<>());
    int v = 0;
    for (std::size_t i = 0; i < len.size(); ++i)
        v += static_cast<int>(i) * len[i];
    return v;
}

int n_lambda_pairwise(const HorizontalStrip& s) {
    int v = 0;
    for (int i = 0; i < s.n(); ++i)
        for (int j = i + 1; j < s.n(); ++j)
            v += std::min(s.rows[i].size(), s.rows[j].size());
    return v;
}

int total_edge_weight(const HorizontalStrip& s) {
    int v = 0;
    for (int i = 0; i < s.n(); ++i)
        for (int j = i + 1; j < s.n(); ++j)
            v += m_pair(s.rows[i], s.rows[j]);
    return v;
}

HorizontalStrip translate(const HorizontalStrip& s, int d) {
    HorizontalStrip t = s;
    for (auto& r : t.rows)
        r = r.shifted(d);
    return t;
}

HorizontalStrip normalize_translation(const HorizontalStrip& s) { return translate(s, -s.min_content()); }

HorizontalStrip cycle(const HorizontalStrip& s) {
    HorizontalStrip t;
    t.rows.assign(s.rows.begin() + 1, s.rows.end());
    t.rows.push_back(s.rows.front().shifted(-1));
    return t;
}

HorizontalStrip rotate(const HorizontalStrip& s, int c) {
    HorizontalStrip t;
    for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it)
        t.rows.push_back({c - it->hi, c - it->lo});
    return t;
}

HorizontalStrip commute_swap(const HorizontalStrip& s, int i) {
    const Row& a = s.row(i);
    const Row& b = s.row(i + 1);
    if (!commutes(a, b))
        fail(ErrorKind::NonCommutingSwap,
             "rows " + std::to_string(i) + " and " + std::to_string(i + 1) + " (" + to_string(a) + ", " +
                 to_string(b) + ") do not commute");
    HorizontalStrip t = s;
    std::swap(t.rows[i - 1], t.rows[i]);
    return t;
}

bool dc_eligible(const HorizontalStrip& s, int i) {
    if (i < 1 || i >= s.n())
        return false;
    const Row& a = s.rows[i - 1];
    const Row& b = s.rows[i];
    return b.lo > a.lo && !commutes(a, b);
}

DcTriple dc_triple(const HorizontalStrip& s, int i) {
    if (i < 1 || i >= s.n())
        fail(ErrorKind::IndexOutOfRange, "dc_triple index " + std::to_string(i) + " has no successor row");
    if (!dc_eligible(s, i))
        fail(ErrorKind::PreconditionViolated,
             "dc_triple needs lo(R_{i+1}) > lo(R_i) and noncommuting rows at i = " + std::to_string(i));
    const Row a = s.rows[i - 1];
    const Row b = s.rows[i];
    DcTriple out;
    out.prime = s;
    std::swap(out.prime.rows[i - 1], out.prime.rows[i]);
    std::vector<Row> rows(s.rows.begin(), s.rows.begin() + (i - 1));
    rows.push_back({std::min(a.lo, b.lo), std::max(a.hi, b.hi)});
    if (intersection_size(a, b) > 0)
        rows.push_back({std::max(a.lo, b.lo), std::min(a.hi, b.hi)});
    rows.insert(rows.end(), s.rows.begin() + (i + 1), s.rows.end());
    out.dprime = HorizontalStrip(std::move(rows));
    return out;
}

HorizontalStrip strip_of_composition(const Composition& a) {
    std::vector<int> prefix{0};
    for (int p : a.parts())
        prefix.push_back(prefix.back() + p);
    const int n = a.length();
    HorizontalStrip s;
    for (int i = 1; i <= n; ++i) {
        int top = prefix[n - i + 1];
        int bottom = prefix[n - i];
        s.rows.push_back({bottom, top - 1});
    }
    return s;
}

HorizontalStrip hl_strip(const Partition& lambda) {
    HorizontalStrip s;
    for (int part : lambda) {
        if (part < 1)
            fail(ErrorKind::PreconditionViolated, "partition parts must be positive");
        s.rows.push_back({0, part - 1});
    }
    return s;
}

namespace {

HorizontalStrip cycle_times(HorizontalStrip s, int times) {
    for (int t = 0; t < times; ++t)
        s = cycle(s);
    return s;
}

// first row holds the unique cell of maximal content
HorizontalStrip normalize_top(const HorizontalStrip& s) {
    int c = s.max_content();
    int t = 0;
    for (int i = 0; i < s.n(); ++i)
        if (s.rows[i].hi == c)
            t = i;
    HorizontalStrip r = cycle_times(s, t);
    int top = r.rows[0].hi;
    for (int i = 1; i < r.n(); ++i)
        if (r.rows[i].hi >= top)
            fail(ErrorKind::NormalizationFailed, "no cyclic shift gives a unique maximal cell in the first row");
    return r;
}

// last row holds the unique cell of minimal content
HorizontalStrip normalize_bottom(const HorizontalStrip& s) {
    int c = s.min_content();
    int j = 0;
    while (s.rows[j].lo != c)
        ++j;
    HorizontalStrip r = cycle_times(s, j + 1);
    int bottom = r.rows.back().lo;
    for (int i = 0; i + 1 < r.n(); ++i)
        if (r.rows[i].lo <= bottom)
            fail(ErrorKind::NormalizationFailed, "no cyclic shift gives a unique minimal cell in the last row");
    return r;
}

HorizontalStrip concat_rows(const HorizontalStrip& l, const HorizontalStrip& m, int& joint) {
    HorizontalStrip a = normalize_top(l);
    HorizontalStrip b = normalize_bottom(m);
    const int N = a.max_content() + 1;
    b = translate(b, N - b.min_content());
    HorizontalStrip out;
    out.rows = b.rows;
    out.rows.insert(out.rows.end(), a.rows.begin(), a.rows.end());
    joint = b.n(); // 1-based index of N + S_m
    return out;
}

} // namespace

HorizontalStrip strip_concat(const HorizontalStrip& l, const HorizontalStrip& m) {
    int joint = 0;
    return normalize_translation(concat_rows(l, m, joint));
}

HorizontalStrip strip_near_concat(const HorizontalStrip& l, const HorizontalStrip& m) {
    int joint = 0;
    HorizontalStrip c = concat_rows(l, m, joint);
    const Row s = c.rows[joint - 1];
    const Row r = c.rows[joint];
    std::vector<Row> rows(c.rows.begin(), c.rows.begin() + (joint - 1));
    rows.push_back({std::min(s.lo, r.lo), std::max(s.hi, r.hi)});
    if (intersection_size(s, r) > 0)
        rows.push_back({std::max(s.lo, r.lo), std::min(s.hi, r.hi)});
    rows.insert(rows.end(), c.rows.begin() + joint + 1, c.rows.end());
    return normalize_translation(HorizontalStrip(std::move(rows)));
}

HorizontalStrip strip_compose(const Composition& a, const HorizontalStrip& l) {
    auto power = [&](int k) {
        HorizontalStrip r = l;
        for (int i = 1; i < k; ++i)
            r = strip_near_concat(r, l);
        return r;
    };
    HorizontalStrip out = power(a[0]);
    for (int i = 1; i < a.length(); ++i)
        out = strip_concat(out, power(a[i]));
    return normalize_translation(out);
}

std::vector<HorizontalStrip> enumerate_strips(int max_rows, int max_len, int max_offset) {
    std::vector<Row> choices;
    for (int lo = 0; lo <= max_offset; ++lo)
        for (int len = 1; len <= max_len; ++len)
            choices.push_back({lo, lo + len - 1});
    std::vector<HorizontalStrip> out;
    HorizontalStrip cur;
    std::function<void(int)> rec = [&](int n) {
        if (cur.n() == n) {
            if (cur.min_content() == 0)
                out.push_back(cur);
            return;
        }
        for (const auto& r : choices) {
            cur.rows.push_back(r);
            rec(n);
            cur.rows.pop_back();
        }
    };
    for (int n = 1; n <= max_rows; ++n)
        rec(n);
    return out;
}

} // namespace sllt
