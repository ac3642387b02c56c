#pragma once

#include "stripllt/strips.hpp"
#include "stripllt/symfunc.hpp"

#include <utility>
#include <vector>

namespace sllt {

// One weakly increasing filling per row, entries in 1..k.
using StripTableau = std::vector<std::vector<int>>;

int inversions(const HorizontalStrip& s, const StripTableau& t);
bool valid_tableau(const HorizontalStrip& s, const StripTableau& t, int k);

SymFunc llt_poly(const HorizontalStrip& s, int k);
SymFunc llt_poly(const HorizontalStrip& s); // k = number of rows

BasisExpansion two_row_schur(int a, int b, int M);

// Vertices 1..n; edges stored as (a, b) with a < b.
struct LabelledGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool adjacent(int a, int b) const;
    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;
};

bool is_unicellular(const HorizontalStrip& s);
LabelledGraph gamma_graph(const HorizontalStrip& s);
SymFunc llt_via_colourings(const LabelledGraph& g, int k);

int top_q_degree(const SymFunc& f);

} // namespace sllt
