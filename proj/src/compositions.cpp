#include "stripllt/compositions.hpp"

#include "stripllt/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace sllt {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        fail(ErrorKind::EmptyComposition, "composition must have at least one part");
    for (int p : parts_)
        if (p < 1)
            fail(ErrorKind::PreconditionViolated, "composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition reverse(const Composition& a) {
    std::vector<int> p(a.parts().rbegin(), a.parts().rend());
    return Composition(std::move(p));
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(p));
}

Composition near_concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts();
    p.back() += b[0];
    p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(p));
}

Composition compose(const Composition& a, const Composition& b) {
    auto power = [&](int k) {
        Composition r = b;
        for (int i = 1; i < k; ++i)
            r = near_concat(r, b);
        return r;
    };
    Composition out = power(a[0]);
    for (int i = 1; i < a.length(); ++i)
        out = concat(out, power(a[i]));
    return out;
}

std::vector<Composition> coarsenings(const Composition& a) {
    const int gaps = a.length() - 1;
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << gaps);
    // bit g set: merge across the gap after part g
    for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        std::vector<int> p{a[0]};
        for (int g = 0; g < gaps; ++g) {
            if (mask & (1u << g))
                p.back() += a[g + 1];
            else
                p.push_back(a[g + 1]);
        }
        out.emplace_back(std::move(p));
    }
    return out;
}

Partition sorted_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

PartitionMultiset coarsening_multiset(const Composition& a) {
    PartitionMultiset m;
    for (const auto& c : coarsenings(a))
        m.push_back(sorted_partition(c.parts()));
    std::sort(m.begin(), m.end());
    return m;
}

bool multiset_equal(const Composition& a, const Composition& b) {
    if (a.size() != b.size() || a.length() != b.length())
        return false;
    return coarsening_multiset(a) == coarsening_multiset(b);
}

std::vector<Partition> partitions_of(int n, int max_length) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_length)
            return;
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    return coarsenings(Composition(std::vector<int>(n, 1)));
}

Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 1)
            fail(ErrorKind::Parse, "bad composition literal: '" + text + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

std::string to_string(const Composition& a) {
    std::string s;
    for (int i = 0; i < a.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(a[i]);
    }
    return s;
}

std::string partition_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

} // namespace sllt
