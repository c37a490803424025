#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bcgrass {

/// Integer partition: weakly decreasing sequence of positive parts. The empty
/// sequence is the unique partition of 0. Immutable after construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Non-throwing strict validation; trailing zeros are NOT tolerated here
    /// (used by the CLI, which must reject rather than repair its input).
    static std::optional<Partition> try_make(const std::vector<int>& parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 0-based; returns 0 beyond the length.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;

    /// Hook shapes (a, 1, 1, ..., 1) with a >= 1; the empty partition is not a hook.
    bool is_hook() const;

    /// Diagram containment mu subset-of *this.
    bool contains(const Partition& mu) const;

    /// length() <= max_len and every part <= max_part.
    bool fits_box(int max_part, int max_len) const;

    std::string str() const;  // "(2,1)", "()" for empty

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    /// Total order used everywhere: weight ascending, then reverse
    /// lexicographic within a weight, so maps iterate as (3), (2,1), (1,1,1).
    bool operator<(const Partition& o) const;

private:
    void validate() const;

    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of k respecting the bounds, in reverse lexicographic order.
/// k = 0 yields exactly the empty partition.
std::vector<Partition> partitions_of(int k,
                                     std::optional<int> max_len = std::nullopt,
                                     std::optional<int> max_part = std::nullopt);

}  // namespace bcgrass
