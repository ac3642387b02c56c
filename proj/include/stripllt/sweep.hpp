#pragma once

#include "stripllt/strips.hpp"
#include "stripllt/symfunc.hpp"
#include "stripllt/wgraph.hpp"

#include <utility>
#include <vector>

namespace sllt {

struct SweepEntry {
    HorizontalStrip strip;
    CanonicalForm form;
    SymFunc llt; // k = number of rows
};

std::vector<SweepEntry> sweep_entries(const std::vector<HorizontalStrip>& strips);

struct VerifyReport {
    long strips = 0;
    long buckets = 0;
    // strips with isomorphic weighted graphs but different LLT polynomials
    std::vector<std::pair<HorizontalStrip, HorizontalStrip>> mismatches;
    // strips with equal LLT polynomials but non-isomorphic weighted graphs, one per pair of buckets
    std::vector<std::pair<HorizontalStrip, HorizontalStrip>> converse;
};

VerifyReport verify_family(const std::vector<HorizontalStrip>& strips);

} // namespace sllt
