#include "jackcc/connection.hpp"

#include "jackcc/config.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace jackcc {

namespace {

const AlphaPoly & alpha()
{
    static const AlphaPoly a = AlphaPoly::variable();
    return a;
}

const AlphaPoly & alpha_minus_one()
{
    static const AlphaPoly a = AlphaPoly::variable() - AlphaPoly(1);
    return a;
}

RatFunc alpha_power_times_z(const Partition & lambda)
{
    return RatFunc(AlphaPoly::monomial(BigRational(z_aut_class(lambda).z), lambda.length()));
}

} // namespace

CoeffResult make_result(const RatFunc & value)
{
    CoeffResult r{value, std::nullopt};
    if (value.is_polynomial())
        r.beta_form = substitute_beta(value.num());
    return r;
}

RatFunc a_cauchy(const ConnectionQuery & q)
{
    int n = q.lambda1.size();
    if (q.others.empty())
        throw std::invalid_argument("a_cauchy needs at least two partitions");
    for (auto const & mu : q.others)
        if (mu.size() != n)
            throw DegreeMismatch("connection coefficient indices of different weights");
    if (n == 0)
        throw std::invalid_argument("a_cauchy: partitions of 0");
    auto table = jack_table(n);
    RatFunc sum;
    for (auto const & [gamma, row] : table->rows) {
        RatFunc term = row.coeff(q.lambda1);
        for (auto const & mu : q.others) {
            if (term.is_zero())
                break;
            term *= row.coeff(mu);
        }
        if (term.is_zero())
            continue;
        sum += term / RatFunc(hooks(gamma).j);
    }
    return sum * alpha_power_times_z(q.lambda1);
}

RatFunc a_cauchy(const Partition & lambda, const Partition & mu, const Partition & nu)
{
    return a_cauchy(ConnectionQuery{lambda, {mu, nu}});
}

namespace {

std::mutex nn_mutex;
std::map<Partition, AlphaPoly, ReverseLex> nn_memo;

} // namespace

AlphaPoly a_nn_recurrence(const Partition & lambda)
{
    if (lambda.size() < 1)
        throw std::invalid_argument("a_nn_recurrence: empty partition");
    if (lambda.size() == 1)
        return AlphaPoly(1);
    {
        std::lock_guard lock(nn_mutex);
        auto it = nn_memo.find(lambda);
        if (it != nn_memo.end())
            return it->second;
    }
    AlphaPoly value = recurrence_bracket(lambda, lambda.largest());
    std::lock_guard lock(nn_mutex);
    nn_memo.emplace(lambda, value);
    return value;
}

AlphaPoly recurrence_bracket(const Partition & lambda, int part)
{
    if (!lambda.contains(part))
        throw MissingPart("recurrence_bracket: " + lambda.to_string() + " has no part " + std::to_string(part));
    if (lambda.size() < 2)
        throw std::invalid_argument("recurrence_bracket needs |lambda| >= 2");
    AlphaPoly res;
    if (part >= 2)
        res += alpha_minus_one() * BigRational(part - 1) * a_nn_recurrence(lower_part(lambda, part));
    for (int d = 1; d <= part - 2; ++d)
        res += a_nn_recurrence(split_part(lambda, part - 1 - d, d));
    for (int q : lambda.parts_without(part))
        res += alpha() * BigRational(q) * a_nn_recurrence(merge_parts(lambda, part, q));
    return res;
}

bool verify_i_independence(const Partition & lambda)
{
    auto parts = lambda.distinct_parts();
    AlphaPoly first = recurrence_bracket(lambda, parts.front());
    for (std::size_t k = 1; k < parts.size(); ++k)
        if (recurrence_bracket(lambda, parts[k]) != first)
            return false;
    return true;
}

IdentitySides thm_rec_sides(const Partition & lambda, const Partition & nu)
{
    int n = nu.size();
    if (lambda.size() != n + 1)
        throw DegreeMismatch("thm_rec_sides: lambda must have weight |nu| + 1");
    Partition row_n1 = Partition::single_row(n + 1);
    Partition row_n = Partition::single_row(n);

    RatFunc lhs;
    for (int i = 2; i <= n + 1; ++i) {
        if (!nu.contains(i - 1))
            continue;
        BigRational c(i * (nu.multiplicity(i) + 1));
        lhs += RatFunc(c) * a_cauchy(lambda, row_n1, raise_part(nu, i - 1));
    }

    RatFunc rhs;
    for (int k : lambda.parts()) {
        RatFunc bracket;
        if (k >= 2)
            bracket += RatFunc(alpha_minus_one() * BigRational(k - 1)) * a_cauchy(lower_part(lambda, k), row_n, nu);
        for (int d = 1; d <= k - 2; ++d)
            bracket += a_cauchy(split_part(lambda, k - 1 - d, d), row_n, nu);
        for (int q : lambda.parts_without(k))
            bracket += RatFunc(alpha() * BigRational(q)) * a_cauchy(merge_parts(lambda, k, q), row_n, nu);
        rhs += RatFunc(BigRational(k)) * bracket;
    }
    return {"thm-rec " + lambda.to_string() + " | " + nu.to_string(), lhs, rhs};
}

bool verify_thm_rec(const Partition & lambda, const Partition & nu)
{
    return thm_rec_sides(lambda, nu).holds();
}

std::vector<IdentitySides> remark_identity_sides(const Partition & mu)
{
    if (mu.empty())
        throw std::invalid_argument("remark identities need a nonempty partition");
    std::vector<IdentitySides> out;
    int n = mu.size() + 1;

    Partition with_one = mu.with_part(1);
    out.push_back({"a(mu+1) = alpha (n-1) a(mu), mu = " + mu.to_string(),
                   a_nn_recurrence(with_one),
                   alpha() * BigRational(n - 1) * a_nn_recurrence(mu)});

    int ones = with_one.multiplicity(1);
    std::vector<int> core_parts;
    for (int p : with_one.parts())
        if (p != 1)
            core_parts.push_back(p);
    if (!core_parts.empty()) {
        Partition core(core_parts);
        BigInt falling = factorial(n - 1) / factorial(n - ones - 1);
        out.push_back({"a(core+1^m) = alpha^m (n-1)!/(n-m-1)! a(core), lambda = " + with_one.to_string(),
                       a_nn_recurrence(with_one),
                       AlphaPoly::monomial(BigRational(falling), ones) * a_nn_recurrence(core)});
    }

    Partition with_two = mu.with_part(2);
    int n2 = with_two.size();
    AlphaPoly rhs = alpha() * alpha_minus_one() * BigRational(n2 - 2) * a_nn_recurrence(mu);
    for (int q : mu.parts())
        rhs += alpha() * BigRational(q) * a_nn_recurrence(raise_part(mu, q));
    out.push_back({"a(mu+2) identity, mu = " + mu.to_string(), a_nn_recurrence(with_two), rhs});
    return out;
}

bool remark_identities(const Partition & mu)
{
    for (auto const & s : remark_identity_sides(mu))
        if (!s.holds())
            return false;
    return true;
}

const PSumVector & lr_generating_vector(int n, int l, int r)
{
    if (n < 1 || l < 0 || r < 0)
        throw std::invalid_argument("lr_generating_vector: need n >= 1, l >= 0, r >= 0");
    check_degree(n, "Delta tower");
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<PSumVector>> cache;
    auto key = std::make_tuple(n, l, r);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    PSumVector v;
    if (r > 0) {
        v = apply_D(lr_generating_vector(n, l, r - 1));
    } else if (n > 1) {
        v = apply_Delta(l, lr_generating_vector(n - 1, l, 0));
    } else {
        v = PSumVector::basis_element(Partition{1}, RatFunc(AlphaPoly(1), alpha()));
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::make_unique<PSumVector>(std::move(v)));
    return *it->second;
}

RatFunc a_lr(const Partition & lambda, int l, int r)
{
    int n = lambda.size();
    RatFunc coeff = lr_generating_vector(n, l, r).coeff(lambda);
    RatFunc scale(AlphaPoly::monomial(1, lambda.length()), AlphaPoly(BigRational(z_aut_class(lambda).class_size)));
    return coeff * scale;
}

RatFunc a_lr_cauchy(const Partition & lambda, int l, int r)
{
    int n = lambda.size();
    ConnectionQuery q{lambda, {}};
    for (int i = 0; i < l; ++i)
        q.others.push_back(Partition::single_row(n));
    if (r > 0 && n < 2)
        return RatFunc();   // no transpositions in S_1
    for (int i = 0; i < r; ++i)
        q.others.push_back(Partition::single_column(n - 2).with_part(2));
    if (q.others.empty())
        throw std::invalid_argument("a_lr_cauchy needs l + r >= 1");
    return a_cauchy(q);
}

LrProperties lr_properties(const Partition & lambda, int l, int r)
{
    LrProperties p;
    int n = lambda.size();
    p.scaled = a_lr(lambda, l, r) * RatFunc(BigRational(z_aut_class(lambda).class_size));
    p.polynomial = p.scaled.is_polynomial();
    if (!p.polynomial)
        return p;
    const AlphaPoly & poly = p.scaled.num();
    p.integer_coefficients = poly.has_integer_coefficients();
    int bound = (n - 1) * (l - 1) + r;
    p.degree_within_bound = poly.degree() <= bound;
    int e = (l - 1) * (n - 1) + r + lambda.length() - 1;
    bool sym = true;
    int top = std::max(poly.degree(), e);
    for (int i = 0; i <= top; ++i) {
        BigRational mirror = (e - i >= 0) ? poly.coefficient(e - i) : BigRational(0);
        if (e % 2)
            mirror = -mirror;
        if (poly.coefficient(i) != mirror)
            sym = false;
    }
    p.sign_symmetric = sym;
    return p;
}

PSumVector gamma_step(int l, const PSumVector & v)
{
    int n = v.degree() + 1;
    return apply_Delta(l, v) * RatFunc(ratio(1, n));
}

PSumVector gamma_series(int l, int n)
{
    if (n < 1)
        throw std::invalid_argument("gamma_series: n must be positive");
    PSumVector v = PSumVector::basis_element(Partition{1}, RatFunc(AlphaPoly(1), alpha()));
    for (int k = 2; k <= n; ++k)
        v = gamma_step(l, v);
    return v;
}

namespace {

using Tensor = std::map<std::pair<Partition, Partition>, RatFunc>;

void add_tensor(Tensor & t, const PSumVector & x, const PSumVector & y, const RatFunc & scale)
{
    for (auto const & [mu, cx] : x.terms())
        for (auto const & [nu, cy] : y.terms())
            t[{mu, nu}] += scale * cx * cy;
}

} // namespace

std::vector<IdentitySides> two_series_sides(int n)
{
    if (n < 1)
        throw std::invalid_argument("two_series_sides: n must be positive");
    auto upper = jack_table(n + 1);
    auto lower = jack_table(n);
    Partition top = Partition::single_row(n + 1);
    Partition row = Partition::single_row(n);

    Tensor lhs, rhs;
    for (auto const & [rho, j] : upper->rows)
        add_tensor(lhs, j, apply_E2perp(j), upper->theta(rho, top) / RatFunc(hooks(rho).j));
    for (auto const & [gamma, j] : lower->rows)
        add_tensor(rhs, apply_DE2_commutator(j), j, lower->theta(gamma, row) / RatFunc(hooks(gamma).j));

    std::map<std::pair<Partition, Partition>, IdentitySides> merged;
    for (auto const & [key, c] : lhs)
        merged[key].lhs = c;
    for (auto const & [key, c] : rhs)
        merged[key].rhs = c;
    std::vector<IdentitySides> out;
    for (auto & [key, sides] : merged) {
        if (sides.lhs.is_zero() && sides.rhs.is_zero())
            continue;
        sides.name = "p" + key.first.to_string() + "(x) p" + key.second.to_string() + "(y)";
        out.push_back(std::move(sides));
    }
    return out;
}

std::vector<IdentitySides> theta_lemma_sides(const Partition & gamma)
{
    int n = gamma.size();
    if (n < 2)
        throw std::invalid_argument("theta_lemma_sides needs |gamma| >= 2");
    auto lower = jack_table(n);
    auto upper = jack_table(n + 1);
    Partition hook_small = Partition::single_column(n - 2).with_part(2);
    Partition hook_big = Partition::single_column(n - 1).with_part(2);
    RatFunc base = lower->theta(gamma, Partition::single_row(n));
    RatFunc base_hook = lower->theta(gamma, hook_small);

    std::vector<IdentitySides> out;
    for (int i = 0; i <= gamma.length(); ++i) {
        int current = i < gamma.length() ? gamma[i] : 0;
        if (i > 0 && gamma[i - 1] == current)
            continue;
        std::vector<int> parts(gamma.parts().begin(), gamma.parts().end());
        if (i == gamma.length())
            parts.push_back(1);
        else
            ++parts[i];
        Partition grown(std::move(parts));
        out.push_back({gamma.to_string() + " + box in row " + std::to_string(i + 1),
                       upper->theta(grown, Partition::single_row(n + 1)),
                       base * (upper->theta(grown, hook_big) - base_hook)});
    }
    return out;
}

namespace {

IdentitySides comb_values(const Partition & lambda, int index, const BigRational & at, bool bipartite)
{
    if (lambda.size() < 2 || index < 0 || index >= lambda.length())
        throw std::invalid_argument("comb recurrence needs |lambda| >= 2 and a valid part index");
    auto value = [&](const Partition & p) { return RatFunc(a_nn_recurrence(p).eval(at)); };
    int k = lambda[index];
    RatFunc rhs;
    if (!bipartite && k >= 2)
        rhs += RatFunc(BigRational(k - 1)) * value(lower_part(lambda, k));
    for (int d = 1; d <= k - 2; ++d)
        rhs += value(split_part(lambda, k - 1 - d, d));
    for (int q : lambda.parts_without(k))
        rhs += RatFunc(BigRational(bipartite ? q : 2 * q)) * value(merge_parts(lambda, k, q));
    return {std::string(bipartite ? "c" : "b~") + " recurrence " + lambda.to_string() + " part " + std::to_string(k),
            value(lambda), rhs};
}

} // namespace

IdentitySides comb_values_b(const Partition & lambda, int index)
{
    return comb_values(lambda, index, 2, false);
}

IdentitySides comb_values_c(const Partition & lambda, int index)
{
    return comb_values(lambda, index, 1, true);
}

} // namespace jackcc
