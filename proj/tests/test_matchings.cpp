#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jackcc/config.hpp"
#include "jackcc/connection.hpp"
#include "jackcc/errors.hpp"
#include "jackcc/matchings.hpp"

#include <set>

using namespace jackcc;

namespace {

void all_perfect_matchings(std::vector<int> & partner, std::vector<std::vector<int>> & out)
{
    int size = static_cast<int>(partner.size());
    int u = 0;
    while (u < size && partner[u] != -1)
        ++u;
    if (u == size) {
        out.push_back(partner);
        return;
    }
    for (int w = u + 1; w < size; ++w) {
        if (partner[w] != -1)
            continue;
        partner[u] = w;
        partner[w] = u;
        all_perfect_matchings(partner, out);
        partner[u] = partner[w] = -1;
    }
}

// Length of the alternating cycle through vertex 0 of m1 u m2, in edges.
int cycle_through_zero(const std::vector<int> & m1, const std::vector<int> & m2)
{
    int x = 0, edges = 0;
    do {
        x = m2[m1[x]];
        edges += 2;
    } while (x != 0);
    return edges;
}

std::set<std::vector<int>> good_by_brute_force(const Partition & lambda)
{
    int n = lambda.size();
    LambdaGraph g = build_canonical(lambda);
    std::vector<int> partner(2 * n, -1);
    std::vector<std::vector<int>> every;
    all_perfect_matchings(partner, every);
    std::set<std::vector<int>> good;
    for (auto const & d : every)
        if (cycle_through_zero(g.gray.partner, d) == 2 * n && cycle_through_zero(g.black.partner, d) == 2 * n)
            good.insert(d);
    return good;
}

int cycle_index_of(const Partition & lambda, int vertex)
{
    int k = vertex / 2, start = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        if (k < start + lambda[i])
            return i;
        start += lambda[i];
    }
    return -1;
}

} // namespace

TEST_CASE("labels and matching text")
{
    CHECK(vertex_label(0) == "1");
    CHECK(vertex_label(1) == "1^");
    CHECK(vertex_label(5) == "3^");
    Matching m = Matching::from_pairs(2, {{0, 3}, {2, 1}});
    CHECK(m.to_string() == "1-2^,1^-2");
    CHECK(m.is_bipartite());
    CHECK(!Matching::from_pairs(2, {{0, 2}, {1, 3}}).is_bipartite());
    CHECK(m.order() == 2);
    CHECK_THROWS_AS(Matching::from_pairs(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Matching::from_pairs(2, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK(!Matching{{1, 0, 2, 2}}.is_valid());
}

TEST_CASE("canonical graph")
{
    LambdaGraph g = build_canonical({2, 1});
    CHECK(g.gray.partner == std::vector<int>{1, 0, 3, 2, 5, 4});
    CHECK(g.black.partner == std::vector<int>{3, 2, 1, 0, 5, 4});
    CHECK(union_cycle_type(g.gray, g.black) == Partition{2, 1});
    for (int n = 1; n <= 6; ++n)
        for (auto const & lambda : generate_partitions(n)) {
            LambdaGraph h = build_canonical(lambda);
            CHECK(h.gray.is_valid());
            CHECK(h.black.is_valid());
            CHECK(union_cycle_type(h.gray, h.black) == lambda);
        }
}

TEST_CASE("small counts")
{
    CHECK(good_counts({1}).total == 1);
    CHECK(good_counts({1}).bipartite == 1);
    CHECK(good_counts({2}).total == 1);
    CHECK(good_counts({2}).bipartite == 0);
    CHECK(good_counts({1, 1}).total == 2);
    CHECK(good_counts({1, 1}).bipartite == 1);
    CHECK(good_counts({3}).total == 4);
    CHECK(good_counts({3}).bipartite == 1);
    CHECK(good_counts({5}).bipartite == 8);
}

TEST_CASE("pruned enumeration matches brute force")
{
    for (int n = 1; n <= 5; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            auto expected = good_by_brute_force(lambda);
            auto fast = enumerate_good(lambda, {.compute_weights = false});
            auto slow = enumerate_good(lambda, {.prune = false, .compute_weights = false});
            std::set<std::vector<int>> got;
            for (auto const & e : fast.entries)
                got.insert(e.matching.partner);
            CHECK(got == expected);
            CHECK(got.size() == fast.entries.size());
            REQUIRE(slow.entries.size() == fast.entries.size());
            for (std::size_t i = 0; i < slow.entries.size(); ++i)
                CHECK(slow.entries[i].matching == fast.entries[i].matching);
            for (std::size_t i = 1; i < fast.entries.size(); ++i)
                CHECK(fast.entries[i - 1].matching < fast.entries[i].matching);
        }
    }
}

TEST_CASE("counts are the specializations of a_nn")
{
    for (int n = 1; n <= 6; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            AlphaPoly p = a_nn_recurrence(lambda);
            GoodCounts c = good_counts(lambda);
            CHECK(p.eval(2) == c.total);
            CHECK(p.eval(1) == c.bipartite);
        }
    }
}

TEST_CASE("reduction")
{
    LambdaGraph g = build_canonical({3});
    CHECK_THROWS_AS(reduced_shape(g, 0, 1), AdjacentPair);
    CHECK_THROWS_AS(reduced_shape(g, 0, 5), AdjacentPair);
    CHECK(reduced_shape(g, 0, 2).first == Partition{2});
    CHECK(reduced_shape(g, 0, 2).second == ReductionCase::same_cycle_odd);
    CHECK(reduced_shape(g, 0, 3).first == Partition{1, 1});
    CHECK(reduced_shape(g, 0, 3).second == ReductionCase::same_cycle_even);
    CHECK(reduced_shape(build_canonical({2, 1}), 0, 4).first == Partition{2});
    CHECK(reduced_shape(build_canonical({2, 1}), 0, 4).second == ReductionCase::different_cycles);

    for (int n = 2; n <= 5; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            LambdaGraph h = build_canonical(lambda);
            auto set = enumerate_good(lambda, {.compute_weights = false});
            for (int a = 0; a < 2 * n; a += 2) {
                int k = lambda[cycle_index_of(lambda, a)];
                std::map<int, std::set<std::vector<int>>> images;
                long sources = 0;
                for (auto const & e : set.entries) {
                    int v = e.matching.partner[a];
                    Reduction red = reduce(h, e.matching, a, v);
                    auto [shape, kind] = reduced_shape(h, a, v);
                    CHECK(red.graph.lambda == shape);
                    CHECK(red.kind == kind);
                    CHECK(is_good(red.graph, red.delta));
                    if (is_hatted(v) && e.bipartite)
                        CHECK(red.delta.is_bipartite());
                    if (is_hatted(v))
                        CHECK(red.delta.is_bipartite() == e.bipartite);
                    std::set<int> targets;
                    for (int x = 0; x < 2 * n; ++x)
                        if (x != a && x != v)
                            targets.insert(red.relabel[x]);
                    CHECK(targets.size() == static_cast<std::size_t>(2 * n - 2));
                    CHECK(*targets.rbegin() == 2 * n - 3);

                    switch (kind) {
                    case ReductionCase::same_cycle_odd:
                        CHECK(shape == lower_part(lambda, k));
                        break;
                    case ReductionCase::same_cycle_even: {
                        bool found = false;
                        for (int d = 1; d <= k - 2; ++d)
                            found |= shape == split_part(lambda, k - 1 - d, d);
                        CHECK(found);
                        break;
                    }
                    case ReductionCase::different_cycles:
                        CHECK(shape == merge_parts(lambda, k, lambda[cycle_index_of(lambda, v)]));
                        break;
                    }
                    images[v].insert(red.delta.partner);
                    ++sources;
                }
                // reduction is injective for each partner of a
                long total = 0;
                for (auto const & [v, imgs] : images)
                    total += static_cast<long>(imgs.size());
                CHECK(total == sources);
            }
        }
    }

    Matching bad = Matching::from_pairs(3, {{0, 2}, {1, 4}, {3, 5}});
    CHECK_THROWS_AS(reduce(g, bad, 0, 4), std::invalid_argument);
}

TEST_CASE("weights")
{
    CHECK(weight({1}, Matching::from_pairs(1, {{0, 1}})) == 0);
    CHECK_THROWS_AS(weight({2}, Matching::from_pairs(2, {{0, 1}, {2, 3}})), NotGoodMatching);
    CHECK_THROWS_AS(weight({2}, Matching::from_pairs(1, {{0, 1}})), NotGoodMatching);

    for (int n = 1; n <= 6; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            auto set = enumerate_good(lambda);
            for (auto const & e : set.entries) {
                CHECK((e.weight == 0) == e.bipartite);
                CHECK(e.weight >= 0);
                CHECK(e.weight <= n - 1);
            }
            AlphaPoly dist = weight_distribution(lambda);
            CHECK(dist == substitute_beta(a_nn_recurrence(lambda)));
            CHECK(dist.coefficient(n - 1) == BigRational(factorial(n - 1)));
        }
    }
    CHECK(weight_distribution({3}).to_string("b") == "1 + b + 2*b^2");
}

TEST_CASE("threads do not change the result")
{
    for (auto const & lambda : generate_partitions(5)) {
        auto one = enumerate_good(lambda);
        auto many = enumerate_good(lambda, {.threads = 4});
        REQUIRE(one.entries.size() == many.entries.size());
        for (std::size_t i = 0; i < one.entries.size(); ++i) {
            CHECK(one.entries[i].matching == many.entries[i].matching);
            CHECK(one.entries[i].weight == many.entries[i].weight);
        }
    }
}

TEST_CASE("partition of the good matchings by the partner of a pivot")
{
    for (int n = 2; n <= 7; ++n)
        for (auto const & lambda : generate_partitions(n))
            for (int i = 0; i < lambda.length(); ++i)
                for (auto const & c : comb_partition_checks(lambda, i))
                    CHECK_MESSAGE(c.holds(), c.name);
    CHECK_THROWS_AS(comb_partition_checks({1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(comb_partition_checks({2, 1}, 2), std::invalid_argument);
}

TEST_CASE("degree bound")
{
    int saved = degree_bound();
    set_degree_bound(4);
    CHECK_THROWS_AS(enumerate_good({5}), DegreeTooLarge);
    set_degree_bound(saved);
    CHECK_THROWS_AS(enumerate_good(Partition()), std::invalid_argument);
}
