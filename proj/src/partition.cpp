#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("partition parts must be positive");
        size_ += p;
    }
}

std::vector<int> Partition::sorted_desc() const {
    std::vector<int> out = parts_;
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition Partition::without(int label) const {
    std::vector<int> out = parts_;
    out.erase(out.begin() + (label - 1));
    return Partition(std::move(out));
}

Partition Partition::with_part(int label, int value) const {
    std::vector<int> out = parts_;
    out.at(label - 1) = value;
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition parse_partition(std::string_view text) {
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    if (text.empty())
        return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
            throw std::invalid_argument("bad partition: " + std::string(text));
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> compositions(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    if (d >= 1)
        rec(d);
    return out;
}

}  // namespace hurwitz
