#include "bcgrass/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bcgrass {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    validate();
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    validate();
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

std::optional<Partition> Partition::try_make(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return std::nullopt;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return std::nullopt;
    }
    return Partition(parts);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

bool Partition::is_hook() const {
    if (parts_.empty()) return false;
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::fits_box(int max_part, int max_len) const {
    return length() <= max_len && (parts_.empty() || parts_[0] <= max_part);
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

bool Partition::operator<(const Partition& o) const {
    if (weight_ != o.weight_) return weight_ < o.weight_;
    // reverse lexicographic: the lexicographically larger sequence sorts first
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

std::vector<Partition> partitions_of(int k, std::optional<int> max_len,
                                     std::optional<int> max_part) {
    if (k < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    const int len_cap = max_len.value_or(k);
    const int part_cap = max_part.value_or(k);

    std::function<void(int, int)> gen = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= len_cap) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            gen(remaining - p, p);
            cur.pop_back();
        }
    };
    gen(k, std::min(k, part_cap));
    return out;
}

}  // namespace bcgrass
