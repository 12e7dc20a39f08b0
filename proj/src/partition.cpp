#include "besselpoly/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace besselpoly {

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const
{
    if (n < length())
        throw std::invalid_argument("partition longer than the number of variables");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

bool GradedPartitionLess::operator()(const Partition& a, const Partition& b) const
{
    int wa = a.weight(), wb = b.weight();
    if (wa != wb)
        return wa < wb;
    return a.parts() < b.parts();
}

std::string to_string(const Partition& p)
{
    std::ostringstream os;
    os << '(';
    if (p.empty())
        os << '0';
    for (int i = 0; i < p.length(); ++i)
        os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out;
    if (p.empty())
        return Partition{};
    out.resize(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool dominance_leq(const Partition& mu, const Partition& lambda)
{
    if (mu.weight() != lambda.weight())
        return false;
    int len = std::max(mu.length(), lambda.length());
    int sm = 0, sl = 0;
    for (int i = 0; i < len; ++i) {
        sm += mu[static_cast<std::size_t>(i)];
        sl += lambda[static_cast<std::size_t>(i)];
        if (sm > sl)
            return false;
    }
    return true;
}

bool contains(const Partition& mu, const Partition& lambda)
{
    if (mu.length() > lambda.length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(i)])
            return false;
    return true;
}

bool add_box(const Partition& lambda, int row, Partition& out)
{
    if (row < 1)
        return false;
    auto idx = static_cast<std::size_t>(row - 1);
    if (row > 1 && lambda[idx] + 1 > lambda[idx - 1])
        return false;
    std::vector<int> parts = lambda.padded(std::max(lambda.length(), row));
    ++parts[idx];
    out = Partition(std::move(parts));
    return true;
}

bool remove_box(const Partition& lambda, int row, Partition& out)
{
    if (row < 1 || row > lambda.length())
        return false;
    auto idx = static_cast<std::size_t>(row - 1);
    if (lambda[idx] - 1 < lambda[idx + 1])
        return false;
    std::vector<int> parts = lambda.parts();
    --parts[idx];
    out = Partition(std::move(parts));
    return true;
}

std::vector<CoCover> co_covers(const Partition& lambda, int n, Direction direction)
{
    std::vector<CoCover> out;
    for (int i = 1; i <= n; ++i) {
        Partition next;
        bool ok = direction == Direction::Up ? add_box(lambda, i, next) : remove_box(lambda, i, next);
        if (ok && next.length() <= n)
            out.push_back({i, std::move(next)});
    }
    return out;
}

std::vector<Chain> skew_standard_chains(const Partition& lambda, const Partition& mu)
{
    if (!contains(mu, lambda))
        throw std::invalid_argument("skew shape requires mu contained in lambda");
    std::vector<Chain> chains;
    Chain current{lambda};
    std::function<void(const Partition&)> descend = [&](const Partition& top) {
        if (top == mu) {
            chains.push_back(current);
            return;
        }
        for (int row = 1; row <= top.length(); ++row) {
            Partition next;
            if (!remove_box(top, row, next) || !contains(mu, next))
                continue;
            current.push_back(next);
            descend(next);
            current.pop_back();
        }
    };
    descend(lambda);
    return chains;
}

std::vector<Partition> partitions_of(int weight, int max_length)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> build = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_length)
            return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            parts.push_back(p);
            build(remaining - p, p);
            parts.pop_back();
        }
    };
    if (weight == 0)
        return {Partition{}};
    build(weight, weight);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_length)
{
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto level = partitions_of(w, max_length);
        std::sort(level.begin(), level.end(), GradedPartitionLess{});
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda)
{
    std::vector<Partition> out;
    std::vector<int> parts(static_cast<std::size_t>(lambda.length()), 0);
    std::function<void(std::size_t)> build = [&](std::size_t i) {
        if (i == parts.size()) {
            out.emplace_back(parts);
            return;
        }
        int cap = i == 0 ? lambda[0] : std::min(lambda[i], parts[i - 1]);
        for (int p = 0; p <= cap; ++p) {
            parts[i] = p;
            build(i + 1);
        }
    };
    build(0);
    std::sort(out.begin(), out.end(), GradedPartitionLess{});
    return out;
}

Partition rectangle(int k, int n)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(n), k));
}

} // namespace besselpoly
