#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weylhom {

/// A sequence of nonnegative integers; used for contents/weights, where
/// entry i counts the occurrences of letter i+1.
using Composition = std::vector<int>;

/// Integer partition: weakly decreasing positive parts. Trailing zeros are
/// stripped at construction, so rows() is intrinsic.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int degree() const { return degree_; } // sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;

    /// Largest row index with part >= 2, together with that part.
    /// (0, 0) when every part is 1 (or the partition is empty).
    struct QStat {
        int q;
        int part;
    };
    QStat q_statistic() const;

    std::string to_string() const; // "4,2,1"

    /// Accepts "4,2,1" and repeat shorthand "6,1^3"; whitespace ignored.
    static Partition parse(std::string_view text);

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// Hook partition (a, 1^b): one row of length a >= 1 and b further rows of
/// length 1. Stored as the pair (a, b) so that b = 0 unambiguously denotes
/// the single row (a).
class Hook {
public:
    Hook(int a, int b);

    int arm() const { return a_; }
    int leg() const { return b_; }
    int degree() const { return a_ + b_; }

    Partition to_partition() const;
    static std::optional<Hook> from_partition(const Partition& p);
    static Hook parse(std::string_view text);

    std::string to_string() const { return to_partition().to_string(); }

    bool operator==(const Hook&) const = default;
    auto operator<=>(const Hook&) const = default;

private:
    int a_, b_;
};

/// Dominance order: every prefix sum of lam is <= the matching prefix sum
/// of mu. Both must have the same degree.
bool dominance_leq(const Partition& lam, const Partition& mu);

/// All partitions of r with at most max_parts parts, ascending
/// lexicographic on the part sequences.
std::vector<Partition> enumerate_partitions(int r, int max_parts);

/// The r hooks of degree r, from (r) down to (1^r).
std::vector<Hook> enumerate_hooks(int r);

} // namespace weylhom
