#include "stripllt/sweep.hpp"

#include "stripllt/llt.hpp"

#include <map>

namespace sllt {

std::vector<SweepEntry> sweep_entries(const std::vector<HorizontalStrip>& strips) {
    std::vector<SweepEntry> out;
    out.reserve(strips.size());
    for (const auto& s : strips)
        out.push_back({s, canonical_form(pi_graph(s)), llt_poly(s, s.n())});
    return out;
}

VerifyReport verify_family(const std::vector<HorizontalStrip>& strips) {
    VerifyReport rep;
    rep.strips = static_cast<long>(strips.size());
    auto entries = sweep_entries(strips);

    std::map<CanonicalForm, std::size_t> first;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        auto [it, fresh] = first.emplace(entries[e].form, e);
        if (!fresh && !(entries[it->second].llt == entries[e].llt))
            rep.mismatches.emplace_back(entries[it->second].strip, entries[e].strip);
    }
    rep.buckets = static_cast<long>(first.size());

    // the Schur expansion at k = rows is faithful, so it compares strips with different row counts
    std::map<std::pair<int, std::map<Partition, QPoly>>, std::vector<std::size_t>> by_value;
    for (const auto& [form, e] : first) {
        BasisExpansion x = to_basis(entries[e].llt, Basis::s);
        by_value[{x.degree, x.coeffs}].push_back(e);
    }
    for (const auto& [key, reps] : by_value)
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b)
                rep.converse.emplace_back(entries[reps[a]].strip, entries[reps[b]].strip);
    return rep;
}

} // namespace sllt
