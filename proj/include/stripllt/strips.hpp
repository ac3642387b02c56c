#pragma once

#include "stripllt/compositions.hpp"

#include <string>
#include <vector>

// Row indices in this API are 1-based, matching the usual R_1, ..., R_n notation.

namespace sllt {

// Content interval [lo, hi]; the row a/b has lo = b, hi = a - 1.
struct Row {
    int lo = 0;
    int hi = 0;

    int size() const { return hi - lo + 1; }
    Row shifted(int d) const { return {lo + d, hi + d}; }
    bool contains(const Row& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Row&, const Row&) = default;
    friend auto operator<=>(const Row&, const Row&) = default;
};

Row make_row(int lo, int hi);
int intersection_size(const Row& a, const Row& b);

struct HorizontalStrip {
    std::vector<Row> rows;

    HorizontalStrip() = default;
    explicit HorizontalStrip(std::vector<Row> r);

    int n() const { return static_cast<int>(rows.size()); }
    const Row& row(int i) const; // 1-based
    int cells() const;
    int min_content() const;
    int max_content() const;
    std::vector<int> lengths() const;

    friend bool operator==(const HorizontalStrip&, const HorizontalStrip&) = default;
    friend auto operator<=>(const HorizontalStrip&, const HorizontalStrip&) = default;
};

HorizontalStrip parse_strip(const std::string& text);
std::string to_string(const Row& r);
std::string to_string(const HorizontalStrip& s);

int m_pair(const Row& r, const Row& rp);
bool commutes(const Row& r, const Row& rp);
int m_ij(const HorizontalStrip& s, int i, int j);
bool prec(const HorizontalStrip& s, int i, int j);

int n_lambda(const HorizontalStrip& s);
int n_lambda_pairwise(const HorizontalStrip& s);
int total_edge_weight(const HorizontalStrip& s);

HorizontalStrip translate(const HorizontalStrip& s, int d);
HorizontalStrip normalize_translation(const HorizontalStrip& s); // min content 0
HorizontalStrip cycle(const HorizontalStrip& s);
HorizontalStrip rotate(const HorizontalStrip& s, int c);
HorizontalStrip commute_swap(const HorizontalStrip& s, int i);

struct DcTriple {
    HorizontalStrip prime;  // rows i, i+1 swapped
    HorizontalStrip dprime; // union then intersection, empty intersection dropped
};
DcTriple dc_triple(const HorizontalStrip& s, int i);
bool dc_eligible(const HorizontalStrip& s, int i);

HorizontalStrip strip_of_composition(const Composition& a);
HorizontalStrip hl_strip(const Partition& lambda);

HorizontalStrip strip_concat(const HorizontalStrip& l, const HorizontalStrip& m);
HorizontalStrip strip_near_concat(const HorizontalStrip& l, const HorizontalStrip& m);
HorizontalStrip strip_compose(const Composition& a, const HorizontalStrip& l);

// Strips with 1..max_rows rows of length 1..max_len and lo in [0, max_offset], some lo = 0.
std::vector<HorizontalStrip> enumerate_strips(int max_rows, int max_len, int max_offset);

} // namespace sllt
