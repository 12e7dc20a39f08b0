#ifndef BESSELPOLY_PARTITION_HPP
#define BESSELPOLY_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace besselpoly {

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// stripped on construction, so (2,1,0) and (2,1) are the same value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }

    /// Part i (0-based); zero beyond the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Parts padded with zeros to exactly n entries (n >= length()).
    std::vector<int> padded(int n) const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Orders by weight first, then lexicographically. Used for every
/// partition-keyed map so that iteration and serialization are stable.
struct GradedPartitionLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

std::string to_string(const Partition& p);

Partition conjugate(const Partition& p);

/// mu <= lambda in dominance order (requires equal weight).
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// mu is contained in lambda as a diagram.
bool contains(const Partition& mu, const Partition& lambda);

enum class Direction { Up, Down };

struct CoCover {
    int row; // 1-based row index i
    Partition partition;
    bool operator==(const CoCover&) const = default;
};

/// lambda +- e_i over rows i = 1..n that yield a valid partition (of length at
/// most n when adding a box).
std::vector<CoCover> co_covers(const Partition& lambda, int n, Direction direction);

/// Writes lambda +- e_row (row 1-based) to out; false when the result is not
/// a partition.
bool add_box(const Partition& lambda, int row, Partition& out);
bool remove_box(const Partition& lambda, int row, Partition& out);

using Chain = std::vector<Partition>;

/// Every chain lambda = c_0 > c_1 > ... > c_r = mu removing one box per step,
/// in lexicographic order of the removed-row sequence. Throws
/// std::invalid_argument when mu is not contained in lambda.
std::vector<Chain> skew_standard_chains(const Partition& lambda, const Partition& mu);

/// All partitions of the given weight with at most max_length parts, in
/// decreasing lexicographic order.
std::vector<Partition> partitions_of(int weight, int max_length);

/// All partitions with weight <= max_weight and at most max_length parts,
/// graded by weight.
std::vector<Partition> partitions_up_to(int max_weight, int max_length);

/// All mu contained in lambda (including lambda and the empty partition),
/// graded by weight.
std::vector<Partition> subpartitions(const Partition& lambda);

/// Rectangular partition (k^n).
Partition rectangle(int k, int n);

} // namespace besselpoly

#endif
