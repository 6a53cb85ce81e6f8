#pragma once

#include "jackcc/algebra.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jackcc {

/// Integer partition: weakly decreasing positive parts.  Immutable.
class Partition {
public:
    Partition() = default;
    /// Parts must already be weakly decreasing and positive; throws InvalidPartition otherwise.
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);
    /// Sorts the parts and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);
    /// "3,2,1"; "-" or "" for the empty partition.
    static Partition parse(std::string_view text);
    static Partition single_row(int n) { return n == 0 ? Partition() : Partition({n}); }
    static Partition single_column(int n);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[i]; }
    std::span<const int> parts() const { return parts_; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int k) const;
    bool contains(int k) const { return multiplicity(k) > 0; }
    /// Distinct part values in decreasing order.
    std::vector<int> distinct_parts() const;

    Partition conjugate() const;
    /// Prefix-sum dominance: this >= other.  Both must have the same size.
    bool dominates(const Partition & other) const;
    /// n(lambda) = sum (i-1) lambda_i.
    long n_statistic() const;

    /// Adds parts (need not be sorted, zeros dropped).
    Partition with_parts(std::initializer_list<int> extra) const;
    /// Adds one part.
    Partition with_part(int k) const { return with_parts({k}); }
    /// Removes one copy of k; throws MissingPart.
    Partition without_part(int k) const;
    /// Parts left after removing one copy of k, as an owned list; throws MissingPart.
    std::vector<int> parts_without(int k) const;

    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    /// Lexicographic on the parts; reverse of the listing order of generate_partitions.
    friend std::strong_ordering operator<=>(const Partition & a, const Partition & b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Strict-weak ordering that lists partitions in reverse-lexicographic order.
struct ReverseLex {
    bool operator()(const Partition & a, const Partition & b) const { return b < a; }
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> generate_partitions(int n);

struct ClassData {
    BigInt z;
    BigInt aut;
    BigInt class_size;
};

/// z_lambda = prod i^{m_i} m_i!, Aut_lambda = prod m_i!, |C_lambda| = n!/z_lambda.
ClassData z_aut_class(const Partition & lambda);
BigInt factorial(int n);

/// The four part modifications.
///   lower_part(l, k):    remove a part k, add k-1
///   raise_part(l, k):    remove a part k, add k+1
///   merge_parts(l, k, j):  remove parts k and j, add k+j-1
///   split_part(l, k, j):   remove a part k+j+1, add k and j
/// Zero parts produced along the way are dropped.  Throw MissingPart.
Partition lower_part(const Partition & lambda, int k);
Partition raise_part(const Partition & lambda, int k);
Partition merge_parts(const Partition & lambda, int k, int j);
Partition split_part(const Partition & lambda, int k, int j);

enum class Modification { down_k, up_k, down_kl, up_kl };
/// Dispatches to the functions above; args hold k (and l for the two-part forms).
Partition modify(const Partition & lambda, Modification which, std::span<const int> args);

struct BoxStats {
    int row;    // 1-based
    int col;    // 1-based
    int arm;
    int leg;
    int coarm;
    int coleg;
};

std::vector<BoxStats> boxes(const Partition & lambda);

struct Hooks {
    AlphaPoly lower;   // h_lambda = prod (alpha a + l + 1)
    AlphaPoly upper;   // h'_lambda = prod (alpha (a + 1) + l)
    AlphaPoly j;       // lower * upper
};

Hooks hooks(const Partition & lambda);

/// Laplace-Beltrami eigenvalue: sum over boxes of (alpha a' - l').
AlphaPoly eigenvalue(const Partition & lambda);

/// Product over boxes other than (1,1) of (alpha a' - l').
AlphaPoly theta_top(const Partition & lambda);

} // namespace jackcc
