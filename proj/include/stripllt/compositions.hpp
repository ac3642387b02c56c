#pragma once

#include <string>
#include <vector>

namespace sllt {

// weakly decreasing, positive parts
using Partition = std::vector<int>;

class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int operator[](int i) const { return parts_[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

// sorted multiset of partitions
using PartitionMultiset = std::vector<Partition>;

Composition reverse(const Composition& a);
Composition concat(const Composition& a, const Composition& b);
Composition near_concat(const Composition& a, const Composition& b);
Composition compose(const Composition& a, const Composition& b);

std::vector<Composition> coarsenings(const Composition& a);
PartitionMultiset coarsening_multiset(const Composition& a);
bool multiset_equal(const Composition& a, const Composition& b);

Partition sorted_partition(std::vector<int> parts);
std::vector<Partition> partitions_of(int n, int max_length);
std::vector<Composition> compositions_of(int n);

Composition parse_composition(const std::string& text);
std::string to_string(const Composition& a);
std::string partition_string(const Partition& p);

} // namespace sllt
