#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

// Ordered composition; position is the label (1-based in labels,
// 0-based in parts()). Never sorted implicitly.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    // label is 1-based
    int part(int label) const { return parts_.at(label - 1); }
    int operator[](std::size_t i) const { return parts_[i]; }

    // multiset of parts, descending
    std::vector<int> sorted_desc() const;

    Partition without(int label) const;
    Partition with_part(int label, int value) const;

    // "(2,1)"
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// "2,1" or "(2,1)"; throws std::invalid_argument
Partition parse_partition(std::string_view text);

// all ordered compositions of d (d >= 1)
std::vector<Partition> compositions(int d);

}  // namespace hurwitz
