#include "jackcc/psum.hpp"

#include "jackcc/config.hpp"

#include <functional>
#include <mutex>

namespace jackcc {

namespace {

/* Rewrites every term p_mu of v through `images`, which calls emit(nu, c)
 * once per output term with a polynomial multiplier c. */
template <class Images>
PSumVector rewrite(const PSumVector & v, int out_degree, Images && images)
{
    PSumVector out(out_degree);
    for (auto const & [mu, coeff] : v.terms()) {
        images(mu, [&](const Partition & nu, const AlphaPoly & c) {
            if (!c.is_zero())
                out.add(nu, coeff * RatFunc(c));
        });
    }
    return out;
}

/* Integer-coefficient images of N, U and S on a single p_mu, accumulated
 * per target partition. */
struct SplitImages {
    std::map<Partition, BigRational, ReverseLex> n, u, s;
};

SplitImages nus_images(const Partition & mu)
{
    SplitImages out;
    auto parts = mu.distinct_parts();

    BigRational nc = 0;
    for (int i : parts)
        nc += ratio(i * (i - 1) * mu.multiplicity(i), 2);
    if (nc != 0)
        out.n[mu] += nc;

    for (int i : parts) {
        for (int j : parts) {
            BigRational mult;
            if (i == j) {
                int m = mu.multiplicity(i);
                if (m < 2)
                    continue;
                mult = BigRational(m * (m - 1));
            } else {
                mult = BigRational(mu.multiplicity(i) * mu.multiplicity(j));
            }
            Partition nu = mu.without_part(i).without_part(j).with_part(i + j);
            out.u[nu] += ratio(i * j, 2) * mult;
        }
    }

    for (int k : parts) {
        Partition rest = mu.without_part(k);
        BigRational c(k * mu.multiplicity(k), 2);
        for (int i = 1; i < k; ++i)
            out.s[rest.with_parts({i, k - i})] += c;
    }
    return out;
}

} // namespace

PSumVector apply_N(const PSumVector & v)
{
    return rewrite(v, v.degree(), [](const Partition & mu, auto emit) {
        for (auto const & [nu, c] : nus_images(mu).n)
            emit(nu, AlphaPoly(c));
    });
}

PSumVector apply_U(const PSumVector & v)
{
    return rewrite(v, v.degree(), [](const Partition & mu, auto emit) {
        for (auto const & [nu, c] : nus_images(mu).u)
            emit(nu, AlphaPoly(c));
    });
}

PSumVector apply_S(const PSumVector & v)
{
    return rewrite(v, v.degree(), [](const Partition & mu, auto emit) {
        for (auto const & [nu, c] : nus_images(mu).s)
            emit(nu, AlphaPoly(c));
    });
}

PSumVector apply_D(const PSumVector & v)
{
    const AlphaPoly alpha = AlphaPoly::variable();
    const AlphaPoly alpha_minus_one = alpha - AlphaPoly(1);
    return rewrite(v, v.degree(), [&](const Partition & mu, auto emit) {
        SplitImages im = nus_images(mu);
        std::map<Partition, AlphaPoly, ReverseLex> total;
        for (auto const & [nu, c] : im.n)
            total[nu] += alpha_minus_one * c;
        for (auto const & [nu, c] : im.u)
            total[nu] += alpha * c;
        for (auto const & [nu, c] : im.s)
            total[nu] += AlphaPoly(c);
        for (auto const & [nu, c] : total)
            emit(nu, c);
    });
}

PSumVector apply_D_power(PSumVector v, int times)
{
    for (int i = 0; i < times; ++i)
        v = apply_D(v);
    return v;
}

PSumVector apply_E2(const PSumVector & v)
{
    return rewrite(v, v.degree() + 1, [](const Partition & mu, auto emit) {
        for (int k : mu.distinct_parts())
            emit(raise_part(mu, k), AlphaPoly(k * mu.multiplicity(k)));
    });
}

PSumVector apply_E2perp(const PSumVector & v)
{
    return rewrite(v, v.degree() - 1, [](const Partition & mu, auto emit) {
        for (int k : mu.distinct_parts())
            if (k >= 2)
                emit(lower_part(mu, k), AlphaPoly(k * mu.multiplicity(k)));
    });
}

PSumVector multiply_p1(const PSumVector & v)
{
    return rewrite(v, v.degree() + 1, [](const Partition & mu, auto emit) {
        emit(mu.with_part(1), AlphaPoly(1));
    });
}

PSumVector apply_p1perp(const PSumVector & v)
{
    return rewrite(v, v.degree() - 1, [](const Partition & mu, auto emit) {
        int m = mu.multiplicity(1);
        if (m > 0)
            emit(mu.without_part(1), AlphaPoly::monomial(m, 1));
    });
}

PSumVector apply_DE2_commutator(const PSumVector & v)
{
    const AlphaPoly alpha = AlphaPoly::variable();
    const AlphaPoly alpha_minus_one = alpha - AlphaPoly(1);
    return rewrite(v, v.degree() + 1, [&](const Partition & mu, auto emit) {
        std::map<Partition, AlphaPoly, ReverseLex> total;
        auto parts = mu.distinct_parts();
        // (alpha - 1) sum (i-1)^2 p_i d/dp_{i-1}
        for (int k : parts)
            total[raise_part(mu, k)] += alpha_minus_one * BigRational(k * k * mu.multiplicity(k));
        // sum (i+j-1) p_i p_j d/dp_{i+j-1}, ordered pairs
        for (int k : parts) {
            Partition rest = mu.without_part(k);
            for (int i = 1; i <= k; ++i)
                total[rest.with_parts({i, k + 1 - i})] += AlphaPoly(k * mu.multiplicity(k));
        }
        // alpha sum i j p_{i+j+1} d^2/dp_i dp_j
        for (int i : parts) {
            for (int j : parts) {
                int mult;
                if (i == j) {
                    int m = mu.multiplicity(i);
                    if (m < 2)
                        continue;
                    mult = m * (m - 1);
                } else {
                    mult = mu.multiplicity(i) * mu.multiplicity(j);
                }
                Partition nu = mu.without_part(i).without_part(j).with_part(i + j + 1);
                total[nu] += alpha * BigRational(i * j * mult);
            }
        }
        for (auto const & [nu, c] : total)
            emit(nu, c);
    });
}

PSumVector apply_Delta(int l, const PSumVector & v)
{
    if (l < 0)
        throw std::invalid_argument("apply_Delta: l must be nonnegative");
    std::vector<PSumVector> d_powers{v};
    for (int k = 1; k <= l; ++k)
        d_powers.push_back(apply_D(d_powers.back()));
    PSumVector out(v.degree() + 1);
    BigInt binom = 1;
    for (int k = 0; k <= l; ++k) {
        // binom = C(l, k)
        PSumVector term = apply_D_power(multiply_p1(d_powers[l - k]), k);
        BigRational c(binom);
        if ((l - k) % 2)
            c = -c;
        out += term * RatFunc(c);
        binom = binom * (l - k) / (k + 1);
    }
    out *= RatFunc(AlphaPoly(1), AlphaPoly::variable());
    return out;
}

namespace {

/* Number of ways to distribute the parts of mu over rows with the given
 * capacities so that every row is filled exactly: the coefficient of
 * x^lambda in p_mu. */
long count_fillings(std::span<const int> mu_parts, std::size_t t, std::vector<int> & remaining)
{
    if (t == mu_parts.size()) {
        for (int r : remaining)
            if (r != 0)
                return 0;
        return 1;
    }
    long total = 0;
    for (auto & r : remaining) {
        if (r >= mu_parts[t]) {
            r -= mu_parts[t];
            total += count_fillings(mu_parts, t + 1, remaining);
            r += mu_parts[t];
        }
    }
    return total;
}

std::shared_ptr<const TransitionTable> build_transition(int n)
{
    auto table = std::make_shared<TransitionTable>();
    table->degree = n;
    table->basis = generate_partitions(n);
    for (std::size_t i = 0; i < table->basis.size(); ++i)
        table->index.emplace(table->basis[i], i);
    std::size_t dim = table->basis.size();
    table->matrix.assign(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            auto const & lambda = table->basis[row];
            std::vector<int> remaining(lambda.parts().begin(), lambda.parts().end());
            table->matrix[row][col] = count_fillings(table->basis[col].parts(), 0, remaining);
        }
    }
    return table;
}

} // namespace

std::shared_ptr<const TransitionTable> transition_table(int n)
{
    check_degree(n, "p/m transition");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const TransitionTable>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    auto built = build_transition(n);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return it->second;
}

MonomialVector p_to_m(const PSumVector & v)
{
    auto table = transition_table(v.degree());
    MonomialVector out(v.degree());
    for (auto const & [mu, c] : v.terms()) {
        std::size_t col = table->index.at(mu);
        for (std::size_t row = 0; row < table->basis.size(); ++row) {
            auto const & r = table->matrix[row][col];
            if (r != 0)
                out.add(table->basis[row], c * RatFunc(BigRational(r)));
        }
    }
    return out;
}

PSumVector m_to_p(const MonomialVector & w)
{
    auto table = transition_table(w.degree());
    std::size_t dim = table->basis.size();
    // R is upper triangular in reverse-lex order (nonzero only when row dominates column).
    std::vector<RatFunc> x(dim);
    for (std::size_t i = dim; i-- > 0;) {
        RatFunc acc = w.coeff(table->basis[i]);
        for (std::size_t j = i + 1; j < dim; ++j)
            if (table->matrix[i][j] != 0 && !x[j].is_zero())
                acc -= RatFunc(BigRational(table->matrix[i][j])) * x[j];
        x[i] = acc / RatFunc(BigRational(table->matrix[i][i]));
    }
    PSumVector out(w.degree());
    for (std::size_t i = 0; i < dim; ++i)
        out.add(table->basis[i], x[i]);
    return out;
}

} // namespace jackcc
