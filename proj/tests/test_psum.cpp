#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jackcc/jack.hpp"
#include "jackcc/psum.hpp"

#include <map>
#include <random>

using namespace jackcc;

namespace {

const AlphaPoly a = AlphaPoly::variable();
const RatFunc ra = RatFunc::variable();

/* Polynomials in m commuting variables with coefficients in Q[alpha]. */
using Exponent = std::vector<int>;
using MPoly = std::map<Exponent, AlphaPoly>;

void add_term(MPoly & p, const Exponent & e, const AlphaPoly & c)
{
    AlphaPoly & slot = p[e];
    slot += c;
    if (slot.is_zero())
        p.erase(e);
}

MPoly multiply(const MPoly & x, const MPoly & y)
{
    MPoly out;
    for (auto const & [ex, cx] : x) {
        for (auto const & [ey, cy] : y) {
            Exponent e(ex.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ex[i] + ey[i];
            add_term(out, e, cx * cy);
        }
    }
    return out;
}

MPoly expand_power_sum(const Partition & mu, int m)
{
    MPoly out{{Exponent(m, 0), AlphaPoly(1)}};
    for (int k : mu.parts()) {
        MPoly pk;
        for (int i = 0; i < m; ++i) {
            Exponent e(m, 0);
            e[i] = k;
            add_term(pk, e, AlphaPoly(1));
        }
        out = multiply(out, pk);
    }
    return out;
}

MPoly expand(const PSumVector & v, int m)
{
    MPoly out;
    for (auto const & [mu, c] : v.terms()) {
        REQUIRE(c.is_polynomial());
        for (auto const & [e, x] : expand_power_sum(mu, m))
            add_term(out, e, x * c.as_polynomial());
    }
    return out;
}

/* Exact division by x_i - x_j, eliminating x_i from the largest exponent down. */
MPoly divide_difference(MPoly p, int i, int j)
{
    MPoly quotient;
    while (!p.empty()) {
        auto it = std::max_element(p.begin(), p.end(), [i](auto const & x, auto const & y) { return x.first[i] < y.first[i]; });
        REQUIRE(it->first[i] > 0);
        Exponent e = it->first;
        AlphaPoly c = it->second;
        e[i] -= 1;
        add_term(quotient, e, c);
        add_term(p, it->first, -c);
        Exponent f = e;
        f[j] += 1;
        add_term(p, f, c);
    }
    return quotient;
}

/* (alpha/2) sum x_i^2 d_i^2 + sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j). */
MPoly laplace_beltrami(const MPoly & p, int m)
{
    MPoly out;
    for (auto const & [e, c] : p)
        for (int i = 0; i < m; ++i)
            if (e[i] >= 2)
                add_term(out, e, c * a * AlphaPoly(ratio(e[i] * (e[i] - 1), 2)));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            MPoly num;
            for (auto const & [e, c] : p) {
                if (e[i] > 0) {
                    Exponent f = e;
                    f[i] += 1;
                    add_term(num, f, c * AlphaPoly(e[i]));
                }
                if (e[j] > 0) {
                    Exponent f = e;
                    f[j] += 1;
                    add_term(num, f, -(c * AlphaPoly(e[j])));
                }
            }
            for (auto const & [e, c] : divide_difference(num, i, j))
                add_term(out, e, c);
        }
    }
    return out;
}

AlphaPoly monomial_coefficient(const MPoly & p, const Partition & lambda, int m)
{
    Exponent e(m, 0);
    for (int i = 0; i < lambda.length(); ++i)
        e[i] = lambda[i];
    auto it = p.find(e);
    return it == p.end() ? AlphaPoly() : it->second;
}

PSumVector random_vector(std::mt19937 & rng, int n)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    PSumVector v(n);
    for (auto const & mu : generate_partitions(n))
        v.add(mu, RatFunc(AlphaPoly::from_coefficients({coef(rng), coef(rng)})));
    return v;
}

PSumVector delta_by_commutators(int l, const PSumVector & v)
{
    if (l == 0)
        return multiply_p1(v) * RatFunc(AlphaPoly(1), a);
    return apply_D(delta_by_commutators(l - 1, v)) - delta_by_commutators(l - 1, apply_D(v));
}

PSumVector p(std::initializer_list<int> parts)
{
    return power_sum(Partition(parts));
}

} // namespace

TEST_CASE("vector basics")
{
    PSumVector v(2);
    v.add({2}, 3);
    v.add({1, 1}, 1);
    v.add({2}, -3);
    CHECK(v.size() == 1);
    CHECK(v.coeff({2}).is_zero());
    CHECK_THROWS_AS(v.add({3}, 1), DegreeMismatch);
    CHECK_THROWS_AS(v += p({3}), DegreeMismatch);
    CHECK((p({2}) + p({1, 1})).to_string() == "(1)*p[2] + (1)*p[1,1]");
    CHECK(PSumVector(3).to_string() == "0");
    CHECK((p({2}) * RatFunc()).is_zero());
}

TEST_CASE("N, U and S on small vectors")
{
    CHECK(apply_N(p({2})) == p({2}));
    CHECK(apply_N(p({1, 1})).is_zero());
    CHECK(apply_U(p({1, 1})) == p({2}));
    CHECK(apply_U(p({2})).is_zero());
    CHECK(apply_S(p({2})) == p({1, 1}));
    CHECK(apply_S(p({1, 1})).is_zero());
    CHECK(apply_N(p({3, 2})) == p({3, 2}) * RatFunc(4));
    CHECK(apply_U(p({2, 1})) == p({3}) * RatFunc(2));
    CHECK(apply_S(p({3})) == p({2, 1}) * RatFunc(3));
}

TEST_CASE("Laplace-Beltrami operator")
{
    CHECK(apply_D(p({1})).is_zero());
    CHECK(apply_D(p({2})) == p({2}) * RatFunc(a - AlphaPoly(1)) + p({1, 1}));
    PSumVector j2 = p({1, 1}) + p({2}) * ra;
    CHECK(apply_D(j2) == j2 * ra);
    CHECK(apply_D_power(p({2}), 0) == p({2}));
    CHECK(apply_D_power(p({2}), 2) == apply_D(apply_D(p({2}))));

    // against the differential operator on explicit polynomials
    for (int n = 1; n <= 4; ++n) {
        int m = n;
        for (auto const & mu : generate_partitions(n)) {
            MPoly lb = laplace_beltrami(expand_power_sum(mu, m), m);
            MonomialVector got = p_to_m(apply_D(power_sum(mu)));
            MonomialVector base = p_to_m(power_sum(mu));
            for (auto const & lambda : generate_partitions(n)) {
                AlphaPoly expected = monomial_coefficient(lb, lambda, m);
                RatFunc shifted = got.coeff(lambda) + base.coeff(lambda) * RatFunc((m - 1) * n);
                CHECK(shifted == RatFunc(expected));
            }
        }
    }
}

TEST_CASE("D is self-adjoint for the alpha inner product")
{
    std::mt19937 rng(5);
    for (int n = 1; n <= 6; ++n) {
        PSumVector u = random_vector(rng, n), v = random_vector(rng, n);
        CHECK(inner_product(apply_D(u), v) == inner_product(u, apply_D(v)));
    }
}

TEST_CASE("raising and lowering operators")
{
    CHECK(apply_E2(p({2})) == p({3}) * RatFunc(2));
    CHECK(apply_E2(p({1})) == p({2}));
    CHECK(apply_E2perp(p({3})) == p({2}) * RatFunc(3));
    CHECK(apply_E2perp(p({1, 1})).is_zero());
    CHECK(apply_p1perp(p({1, 1})) == p({1}) * RatFunc(AlphaPoly(2) * a));
    CHECK(multiply_p1(p({2})) == p({2, 1}));
    CHECK(apply_E2(p({2})).degree() == 3);
    CHECK(apply_E2perp(p({2, 1})).degree() == 2);

    // E2 = [D, p1/alpha]
    RatFunc inv(AlphaPoly(1), a);
    for (int n = 1; n <= 5; ++n) {
        for (auto const & mu : generate_partitions(n)) {
            PSumVector v = power_sum(mu);
            CHECK(apply_E2(v) == apply_D(multiply_p1(v)) * inv - multiply_p1(apply_D(v)) * inv);
        }
    }

    // adjoint pairs under the alpha inner product
    std::mt19937 rng(17);
    for (int n = 1; n <= 5; ++n) {
        PSumVector u = random_vector(rng, n), w = random_vector(rng, n + 1);
        CHECK(inner_product(apply_E2(u), w) == inner_product(u, apply_E2perp(w)));
        CHECK(inner_product(multiply_p1(u), w) == inner_product(u, apply_p1perp(w)));
    }
}

TEST_CASE("[D, E2] closed form")
{
    CHECK(apply_DE2_commutator(p({1})) == p({2}) * RatFunc(a - AlphaPoly(1)) + p({1, 1}));
    for (int n = 1; n <= 6; ++n) {
        for (auto const & mu : generate_partitions(n)) {
            PSumVector v = power_sum(mu);
            CHECK(apply_DE2_commutator(v) == apply_D(apply_E2(v)) - apply_E2(apply_D(v)));
        }
    }
    // the p_2 coefficient carries the factor alpha - 1
    CHECK(apply_DE2_commutator(p({1})).coeff({2}).eval(1) == 0);
}

TEST_CASE("Delta_l by binomial expansion")
{
    CHECK(apply_Delta(0, p({2})) == p({2, 1}) * RatFunc(AlphaPoly(1), a));
    CHECK(apply_Delta(1, p({1})) == p({2}));
    CHECK(apply_Delta(2, p({1})) == apply_DE2_commutator(p({1})));
    for (int l = 0; l <= 4; ++l) {
        for (int n = 1; n <= 4; ++n) {
            for (auto const & mu : generate_partitions(n)) {
                PSumVector v = power_sum(mu);
                CHECK(apply_Delta(l, v) == delta_by_commutators(l, v));
            }
        }
    }
}

TEST_CASE("power sums to monomials")
{
    CHECK(p_to_m(p({1})) == MonomialVector::basis_element({1}));
    CHECK(p_to_m(p({2})) == MonomialVector::basis_element({2}));
    CHECK(p_to_m(p({1, 1})) == MonomialVector::basis_element({2}) + MonomialVector::basis_element({1, 1}) * RatFunc(2));

    // against explicit expansion in n variables
    for (int n = 1; n <= 6; ++n) {
        auto table = transition_table(n);
        for (auto const & mu : generate_partitions(n)) {
            MPoly x = expand_power_sum(mu, n);
            for (auto const & lambda : generate_partitions(n)) {
                BigInt entry = table->matrix[table->index.at(lambda)][table->index.at(mu)];
                CHECK(AlphaPoly(BigRational(entry)) == monomial_coefficient(x, lambda, n));
            }
        }
    }

    std::mt19937 rng(23);
    for (int n = 1; n <= 7; ++n) {
        PSumVector v = random_vector(rng, n);
        CHECK(m_to_p(p_to_m(v)) == v);
    }
}
