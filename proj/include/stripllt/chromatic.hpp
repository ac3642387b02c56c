#pragma once

#include "stripllt/compositions.hpp"
#include "stripllt/llt.hpp"
#include "stripllt/strips.hpp"
#include "stripllt/symfunc.hpp"
#include "stripllt/wgraph.hpp"

#include <vector>

namespace sllt {

// Vertices 1..n with positive weights.
struct VertexWeightedGraph {
    std::vector<int> weights;
    std::vector<std::vector<bool>> adj;

    VertexWeightedGraph() = default;
    explicit VertexWeightedGraph(std::vector<int> w);

    int n() const { return static_cast<int>(weights.size()); }
    int total_weight() const;
    void add_edge(int a, int b);
    bool adjacent(int a, int b) const { return adj.at(a - 1).at(b - 1); }

    friend bool operator==(const VertexWeightedGraph&, const VertexWeightedGraph&) = default;
};

VertexWeightedGraph path_graph(const Composition& alpha);
// nonzero edge weight becomes an edge
VertexWeightedGraph underlying_graph(const WeightedGraph& g);

SymFunc extended_chromatic(const VertexWeightedGraph& g, int k);

BasisExpansion path_p_expansion(const Composition& alpha);

// Corrected: q^{l(mu)-1} (1-q)^{l(alpha)-l(mu)}. Printed: (q-1) in place of (1-q).
enum class PathSign { Corrected, Printed };
BasisExpansion path_llt_h_expansion(const Composition& alpha, PathSign sign = PathSign::Corrected);

SymFunc chrom_quasisym(const LabelledGraph& g, int k);

bool verify_plethysm_bridge(const HorizontalStrip& s);

} // namespace sllt
