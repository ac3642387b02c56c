#pragma once

#include "stripllt/strips.hpp"
#include "stripllt/symfunc.hpp"

#include <optional>
#include <utility>
#include <vector>

// Vertex indices in this API are 1-based.

namespace sllt {

struct WeightedGraph {
    std::vector<int> weights;
    std::vector<std::vector<int>> edge; // symmetric, zero diagonal

    WeightedGraph() = default;
    explicit WeightedGraph(std::vector<int> w);

    int n() const { return static_cast<int>(weights.size()); }
    int weight(int v) const { return weights.at(v - 1); }
    int edge_weight(int a, int b) const { return edge.at(a - 1).at(b - 1); }
    void set_edge(int a, int b, int w);
    int total_weight() const;
    bool well_formed() const; // edge(i, j) <= min weights, symmetric, zero diagonal

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

WeightedGraph pi_graph(const HorizontalStrip& s);

// perm[i - 1] is the vertex of H that vertex i of G maps to.
using Permutation = std::vector<int>;

WeightedGraph permute(const WeightedGraph& g, const Permutation& perm);
std::optional<Permutation> is_isomorphic(const WeightedGraph& g, const WeightedGraph& h);

struct CanonicalForm {
    std::vector<int> weights; // sorted
    std::vector<int> edges;   // lexicographically least lower triangle
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const WeightedGraph& g);

struct DcGraphs {
    WeightedGraph prime;
    WeightedGraph dprime;
};
DcGraphs predict_dc_graphs(const WeightedGraph& g, int i, int j, int mij);

std::optional<HorizontalStrip> realize(const WeightedGraph& g, int bound);
std::optional<HorizontalStrip> realize(const WeightedGraph& g); // bound = total weight
SymFunc llt_of_graph(const WeightedGraph& g, int bound);

} // namespace sllt
