#pragma once

#include "jackcc/algebra.hpp"
#include "jackcc/partition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jackcc {

/* Vertices of a graph on [n] u [n^] are numbered 0 .. 2n-1: vertex k
 * (1-based, unhatted) is 2(k-1) and k^ is 2(k-1)+1.  So the order is
 * 1 < 1^ < 2 < 2^ < ... and parity tells the hat. */

inline bool is_hatted(int v) { return v % 2 == 1; }
/// "3" or "3^".
std::string vertex_label(int v);

/// Fixed-point-free involution on 2n vertices.
struct Matching {
    std::vector<int> partner;

    int order() const { return static_cast<int>(partner.size()) / 2; }
    /// Builds from vertex pairs; throws std::invalid_argument if not a perfect matching.
    static Matching from_pairs(int n, const std::vector<std::pair<int, int>> & pairs);
    bool is_valid() const;
    /// Every edge joins an unhatted and a hatted vertex.
    bool is_bipartite() const;
    /// Edges with the smaller endpoint first, sorted: "1-2^,2-3^,3-1^" style labels.
    std::string to_string() const;

    friend bool operator==(const Matching &, const Matching &) = default;
    friend auto operator<=>(const Matching & a, const Matching & b) { return a.partner <=> b.partner; }
};

/// Two-colour graph whose gray and black matchings form cycles of lengths 2 lambda_i.
struct LambdaGraph {
    Partition lambda;
    Matching gray;
    Matching black;
};

/// Canonical labeling: cycle i carries s+1, s+1^, s+2, ..., s+lambda_i, s+lambda_i^
/// with s = lambda_1 + ... + lambda_{i-1}; gray {k, k^}, black {k^, k+1} cyclically.
LambdaGraph build_canonical(const Partition & lambda);

/// Half-lengths of the alternating cycles of m1 u m2.
Partition union_cycle_type(const Matching & m1, const Matching & m2);

/// delta is good when gray u delta and black u delta are both single 2n-cycles.
bool is_good(const LambdaGraph & g, const Matching & delta);

enum class ReductionCase {
    same_cycle_odd = 1,    // lambda with one part lowered
    same_cycle_even = 2,   // one part split in two
    different_cycles = 3,  // two parts merged
};

struct Reduction {
    LambdaGraph graph;       // canonically relabeled
    Matching delta;          // delta minus {a, v}, relabeled
    ReductionCase kind;
    std::vector<int> relabel;   // old vertex -> new vertex, -1 for a and v
};

/// Removes a and v (matched by delta), joins their gray neighbours by a gray
/// edge and their black neighbours by a black edge, then relabels
/// canonically: cycles by decreasing length (ties: smallest old vertex),
/// each started at its smallest old vertex (smallest unhatted one when v is
/// hatted, so hats are preserved), traversed gray edge first.
/// Throws AdjacentPair when a and v are neighbours in g, std::invalid_argument
/// when delta does not match a to v.
Reduction reduce(const LambdaGraph & g, const Matching & delta, int a, int v);

/// Shape and case of the reduction through (a, v), independent of delta.
std::pair<Partition, ReductionCase> reduced_shape(const LambdaGraph & g, int a, int v);

/// Weight statistic: reduce at vertex 1 repeatedly, adding 1 whenever its
/// partner is unhatted.  Throws NotGoodMatching.
int weight(const Partition & lambda, const Matching & delta);

struct WeightedMatching {
    Matching matching;
    int weight = -1;    // -1 when weights were not requested
    bool bipartite = false;
};

struct WeightedMatchingSet {
    Partition lambda;
    std::vector<WeightedMatching> entries;
};

struct EnumerateOptions {
    bool prune = true;         // false: test every perfect matching (slow reference mode)
    bool compute_weights = true;
    int threads = 1;
};

/// Every good matching of the canonical lambda-graph, sorted by partner array.
/// Throws DegreeTooLarge beyond degree_bound().
WeightedMatchingSet enumerate_good(const Partition & lambda, const EnumerateOptions & options = {});

struct GoodCounts {
    long total = 0;       // b~^lambda_{nn}
    long bipartite = 0;   // c^lambda_{nn}
};

/// Memoized counts from enumeration.
GoodCounts good_counts(const Partition & lambda);

/// Sum over good matchings of beta^weight, as a polynomial in beta.
AlphaPoly weight_distribution(const Partition & lambda, int threads = 1);

struct CountCheck {
    std::string name;
    long lhs;
    long rhs;
    bool holds() const { return lhs == rhs; }
};

/// Splits the good matchings of lambda (|lambda| >= 2) by the partner of
/// the first vertex of cycle `index` and checks every class against the
/// counts of the reduced shape, then the summed recurrences for b~ and c.
std::vector<CountCheck> comb_partition_checks(const Partition & lambda, int index);

} // namespace jackcc
