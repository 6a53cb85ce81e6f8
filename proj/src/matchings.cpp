#include "jackcc/matchings.hpp"

#include "jackcc/config.hpp"
#include "jackcc/errors.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>

namespace jackcc {

std::string vertex_label(int v)
{
    return std::to_string(v / 2 + 1) + (is_hatted(v) ? "^" : "");
}

Matching Matching::from_pairs(int n, const std::vector<std::pair<int, int>> & pairs)
{
    Matching m{std::vector<int>(2 * n, -1)};
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= 2 * n || y >= 2 * n || x == y || m.partner[x] != -1 || m.partner[y] != -1)
            throw std::invalid_argument("not a perfect matching");
        m.partner[x] = y;
        m.partner[y] = x;
    }
    if (!m.is_valid())
        throw std::invalid_argument("not a perfect matching");
    return m;
}

bool Matching::is_valid() const
{
    int size = static_cast<int>(partner.size());
    if (size % 2)
        return false;
    for (int v = 0; v < size; ++v) {
        int w = partner[v];
        if (w < 0 || w >= size || w == v || partner[w] != v)
            return false;
    }
    return true;
}

bool Matching::is_bipartite() const
{
    for (std::size_t v = 0; v < partner.size(); ++v)
        if (is_hatted(static_cast<int>(v)) == is_hatted(partner[v]))
            return false;
    return true;
}

std::string Matching::to_string() const
{
    std::string out;
    for (std::size_t v = 0; v < partner.size(); ++v) {
        int w = partner[v];
        if (w < static_cast<int>(v))
            continue;
        if (!out.empty())
            out += ',';
        out += vertex_label(static_cast<int>(v)) + "-" + vertex_label(w);
    }
    return out;
}

LambdaGraph build_canonical(const Partition & lambda)
{
    int n = lambda.size();
    LambdaGraph g{lambda, Matching{std::vector<int>(2 * n)}, Matching{std::vector<int>(2 * n)}};
    int start = 0;
    for (int len : lambda.parts()) {
        for (int t = 0; t < len; ++t) {
            int k = 2 * (start + t);
            int next = 2 * (start + (t + 1) % len);
            g.gray.partner[k] = k + 1;
            g.gray.partner[k + 1] = k;
            g.black.partner[k + 1] = next;
            g.black.partner[next] = k + 1;
        }
        start += len;
    }
    return g;
}

Partition union_cycle_type(const Matching & m1, const Matching & m2)
{
    if (m1.partner.size() != m2.partner.size())
        throw std::invalid_argument("union_cycle_type: matchings of different sizes");
    std::size_t size = m1.partner.size();
    std::vector<bool> seen(size, false);
    std::vector<int> halves;
    for (std::size_t s = 0; s < size; ++s) {
        if (seen[s])
            continue;
        int len = 0;
        int x = static_cast<int>(s);
        do {
            int y = m1.partner[x];
            seen[x] = seen[y] = true;
            len += 2;
            x = m2.partner[y];
        } while (x != static_cast<int>(s));
        halves.push_back(len / 2);
    }
    return Partition::from_unsorted(std::move(halves));
}

bool is_good(const LambdaGraph & g, const Matching & delta)
{
    int n = g.lambda.size();
    if (static_cast<int>(delta.partner.size()) != 2 * n || !delta.is_valid())
        return false;
    Partition single = Partition::single_row(n);
    return union_cycle_type(g.gray, delta) == single && union_cycle_type(g.black, delta) == single;
}

namespace {

struct Rewired {
    std::vector<int> gray;
    std::vector<int> black;
    std::vector<std::vector<int>> cycles;   // gray-first traversals, sorted
    ReductionCase kind;
};

Rewired rewire(const LambdaGraph & g, int a, int v)
{
    int size = static_cast<int>(g.gray.partner.size());
    if (a < 0 || v < 0 || a >= size || v >= size)
        throw std::invalid_argument("reduce: vertex out of range");
    if (a == v || g.gray.partner[a] == v || g.black.partner[a] == v)
        throw AdjacentPair("reduce: " + vertex_label(a) + " and " + vertex_label(v) + " are adjacent");

    // Position of v along the cycle through a, walking gray edge first.
    ReductionCase kind = ReductionCase::different_cycles;
    {
        int x = a;
        int steps = 0;
        bool use_gray = true;
        do {
            x = use_gray ? g.gray.partner[x] : g.black.partner[x];
            use_gray = !use_gray;
            ++steps;
            if (x == v) {
                int between = steps - 1;
                kind = between % 2 ? ReductionCase::same_cycle_odd : ReductionCase::same_cycle_even;
                break;
            }
        } while (x != a);
    }

    Rewired r{g.gray.partner, g.black.partner, {}, kind};
    int a1 = r.gray[a], b1 = r.gray[v];
    int a2 = r.black[a], b2 = r.black[v];
    r.gray[a1] = b1;
    r.gray[b1] = a1;
    r.black[a2] = b2;
    r.black[b2] = a2;
    r.gray[a] = r.gray[v] = r.black[a] = r.black[v] = -1;

    std::vector<bool> seen(size, false);
    seen[a] = seen[v] = true;
    for (int s = 0; s < size; ++s) {
        if (seen[s])
            continue;
        std::vector<int> cyc;
        int x = s;
        do {
            int y = r.gray[x];
            cyc.push_back(x);
            cyc.push_back(y);
            seen[x] = seen[y] = true;
            x = r.black[y];
        } while (x != s);
        r.cycles.push_back(std::move(cyc));
    }
    // Starts were scanned in increasing order, so front() is each cycle's smallest vertex.
    std::ranges::stable_sort(r.cycles, [](auto const & x, auto const & y) {
        if (x.size() != y.size())
            return x.size() > y.size();
        return x.front() < y.front();
    });
    return r;
}

Partition shape_of(const Rewired & r)
{
    std::vector<int> parts;
    for (auto const & c : r.cycles)
        parts.push_back(static_cast<int>(c.size()) / 2);
    return Partition(std::move(parts));
}

} // namespace

std::pair<Partition, ReductionCase> reduced_shape(const LambdaGraph & g, int a, int v)
{
    Rewired r = rewire(g, a, v);
    return {shape_of(r), r.kind};
}

Reduction reduce(const LambdaGraph & g, const Matching & delta, int a, int v)
{
    int size = static_cast<int>(g.gray.partner.size());
    if (static_cast<int>(delta.partner.size()) != size || delta.partner[a] != v)
        throw std::invalid_argument("reduce: delta does not match " + vertex_label(a) + " to " + vertex_label(v));
    Rewired r = rewire(g, a, v);
    bool preserve_hats = is_hatted(v);

    std::vector<int> relabel(size, -1);
    int next = 0;
    for (auto const & cyc : r.cycles) {
        int start = cyc.front();
        if (preserve_hats) {
            start = size;
            for (int x : cyc)
                if (!is_hatted(x))
                    start = std::min(start, x);
        }
        int x = start;
        do {
            int y = r.gray[x];
            relabel[x] = next++;
            relabel[y] = next++;
            x = r.black[y];
        } while (x != start);
    }

    Partition shape = shape_of(r);
    Matching reduced{std::vector<int>(size - 2)};
    for (int x = 0; x < size; ++x) {
        if (x == a || x == v)
            continue;
        reduced.partner[relabel[x]] = relabel[delta.partner[x]];
    }
    return Reduction{build_canonical(shape), std::move(reduced), r.kind, std::move(relabel)};
}

int weight(const Partition & lambda, const Matching & delta)
{
    LambdaGraph g = build_canonical(lambda);
    if (!is_good(g, delta))
        throw NotGoodMatching("matching " + delta.to_string() + " is not good for " + lambda.to_string());
    int w = 0;
    Matching current = delta;
    while (g.lambda.size() > 1) {
        int v = current.partner[0];
        if (!is_hatted(v))
            ++w;
        Reduction red = reduce(g, current, 0, v);
        g = std::move(red.graph);
        current = std::move(red.delta);
    }
    return w;
}

namespace {

/* Backtracking over perfect matchings, smallest unmatched vertex first.
 * ends_g / ends_b hold, for each path endpoint in gray u delta and
 * black u delta, the opposite endpoint.  Closing a cycle early is pruned. */
class GoodEnumerator {
public:
    GoodEnumerator(const LambdaGraph & g, bool prune)
        : g_(g), prune_(prune), size_(static_cast<int>(g.gray.partner.size())),
          partner_(size_, -1), ends_g_(g.gray.partner), ends_b_(g.black.partner)
    {}

    void run_from(int first_partner, std::vector<Matching> & out)
    {
        if (!try_push(0, first_partner, 1))
            return;
        recurse(1, out);
        pop(0, first_partner);
    }

private:
    struct Saved {
        int eu_g, ew_g, old_eu_g, old_ew_g;
        int eu_b, ew_b, old_eu_b, old_ew_b;
    };

    bool try_push(int u, int w, int edges_after)
    {
        bool last = edges_after == size_ / 2;
        if (prune_) {
            if (!last && (ends_g_[u] == w || ends_b_[u] == w))
                return false;
        }
        Saved s{};
        s.eu_g = ends_g_[u];
        s.ew_g = ends_g_[w];
        s.old_eu_g = ends_g_[s.eu_g];
        s.old_ew_g = ends_g_[s.ew_g];
        s.eu_b = ends_b_[u];
        s.ew_b = ends_b_[w];
        s.old_eu_b = ends_b_[s.eu_b];
        s.old_ew_b = ends_b_[s.ew_b];
        if (prune_ && !last) {
            ends_g_[s.eu_g] = s.ew_g;
            ends_g_[s.ew_g] = s.eu_g;
            ends_b_[s.eu_b] = s.ew_b;
            ends_b_[s.ew_b] = s.eu_b;
        }
        saved_.push_back(s);
        partner_[u] = w;
        partner_[w] = u;
        return true;
    }

    void pop(int u, int w)
    {
        Saved s = saved_.back();
        saved_.pop_back();
        if (prune_) {
            // Restore in reverse order of the writes.
            ends_b_[s.ew_b] = s.old_ew_b;
            ends_b_[s.eu_b] = s.old_eu_b;
            ends_g_[s.ew_g] = s.old_ew_g;
            ends_g_[s.eu_g] = s.old_eu_g;
        }
        partner_[u] = partner_[w] = -1;
    }

    void recurse(int edges, std::vector<Matching> & out)
    {
        if (edges == size_ / 2) {
            Matching m{partner_};
            if (prune_ || is_good(g_, m))
                out.push_back(std::move(m));
            return;
        }
        int u = 0;
        while (partner_[u] != -1)
            ++u;
        for (int w = u + 1; w < size_; ++w) {
            if (partner_[w] != -1)
                continue;
            if (!try_push(u, w, edges + 1))
                continue;
            recurse(edges + 1, out);
            pop(u, w);
        }
    }

    const LambdaGraph & g_;
    bool prune_;
    int size_;
    std::vector<int> partner_;
    std::vector<int> ends_g_;
    std::vector<int> ends_b_;
    std::vector<Saved> saved_;
};

} // namespace

WeightedMatchingSet enumerate_good(const Partition & lambda, const EnumerateOptions & options)
{
    int n = lambda.size();
    if (n < 1)
        throw std::invalid_argument("enumerate_good: empty partition");
    check_degree(n, "matching enumeration");
    LambdaGraph g = build_canonical(lambda);

    int size = 2 * n;
    std::vector<std::vector<Matching>> branches(size);
    auto run_branch = [&](int w) {
        GoodEnumerator e(g, options.prune);
        e.run_from(w, branches[w]);
    };
    int threads = std::max(1, options.threads);
    if (threads == 1) {
        for (int w = 1; w < size; ++w)
            run_branch(w);
    } else {
        std::vector<std::future<void>> pending;
        for (int w = 1; w < size; ++w) {
            pending.push_back(std::async(std::launch::async, run_branch, w));
            if (static_cast<int>(pending.size()) >= threads) {
                for (auto & f : pending)
                    f.get();
                pending.clear();
            }
        }
        for (auto & f : pending)
            f.get();
    }

    WeightedMatchingSet out{lambda, {}};
    for (auto & branch : branches)
        for (auto & m : branch)
            out.entries.push_back(WeightedMatching{std::move(m), -1, false});
    std::ranges::sort(out.entries, {}, &WeightedMatching::matching);
    for (auto & e : out.entries) {
        e.bipartite = e.matching.is_bipartite();
        if (options.compute_weights)
            e.weight = weight(lambda, e.matching);
    }
    return out;
}

GoodCounts good_counts(const Partition & lambda)
{
    static std::mutex mutex;
    static std::map<Partition, GoodCounts, ReverseLex> memo;
    {
        std::lock_guard lock(mutex);
        auto it = memo.find(lambda);
        if (it != memo.end())
            return it->second;
    }
    GoodCounts c;
    for (auto const & e : enumerate_good(lambda, {.prune = true, .compute_weights = false}).entries) {
        ++c.total;
        c.bipartite += e.bipartite;
    }
    std::lock_guard lock(mutex);
    memo.emplace(lambda, c);
    return c;
}

AlphaPoly weight_distribution(const Partition & lambda, int threads)
{
    std::vector<BigRational> coeffs;
    for (auto const & e : enumerate_good(lambda, {.threads = threads}).entries) {
        if (e.weight >= static_cast<int>(coeffs.size()))
            coeffs.resize(e.weight + 1, BigRational(0));
        coeffs[e.weight] += 1;
    }
    return AlphaPoly::from_coefficients(std::move(coeffs));
}

std::vector<CountCheck> comb_partition_checks(const Partition & lambda, int index)
{
    if (lambda.size() < 2 || index < 0 || index >= lambda.length())
        throw std::invalid_argument("comb_partition_checks needs |lambda| >= 2 and a valid cycle index");
    LambdaGraph g = build_canonical(lambda);
    int size = 2 * lambda.size();
    int offset = 0;
    for (int i = 0; i < index; ++i)
        offset += lambda[i];
    int a = 2 * offset;
    int k = lambda[index];
    std::string tag = lambda.to_string() + " pivot " + vertex_label(a);

    std::vector<long> by_partner(size, 0), bip_by_partner(size, 0);
    GoodCounts whole{0, 0};
    for (auto const & e : enumerate_good(lambda, {.compute_weights = false}).entries) {
        int v = e.matching.partner[a];
        ++by_partner[v];
        bip_by_partner[v] += e.bipartite;
        ++whole.total;
        whole.bipartite += e.bipartite;
    }

    std::vector<CountCheck> checks;
    for (int v = 0; v < size; ++v) {
        if (v == a)
            continue;
        if (g.gray.partner[a] == v || g.black.partner[a] == v) {
            checks.push_back({tag + " neighbour " + vertex_label(v) + " unused", by_partner[v], 0});
            continue;
        }
        auto [shape, kind] = reduced_shape(g, a, v);
        GoodCounts sub = good_counts(shape);
        std::string where = tag + " -> " + vertex_label(v) + " case " + std::to_string(static_cast<int>(kind)) + " " +
                            shape.to_string();
        checks.push_back({where + " b~", by_partner[v], sub.total});
        checks.push_back({where + " c", bip_by_partner[v], is_hatted(v) ? sub.bipartite : 0});
    }

    long b_rhs = 0, c_rhs = 0;
    if (k >= 2)
        b_rhs += (k - 1) * good_counts(lower_part(lambda, k)).total;
    for (int d = 1; d <= k - 2; ++d) {
        GoodCounts s = good_counts(split_part(lambda, k - 1 - d, d));
        b_rhs += s.total;
        c_rhs += s.bipartite;
    }
    for (int q : lambda.parts_without(k)) {
        GoodCounts s = good_counts(merge_parts(lambda, k, q));
        b_rhs += 2L * q * s.total;
        c_rhs += static_cast<long>(q) * s.bipartite;
    }
    checks.push_back({tag + " b~ recurrence", whole.total, b_rhs});
    checks.push_back({tag + " c recurrence", whole.bipartite, c_rhs});
    return checks;
}

} // namespace jackcc
