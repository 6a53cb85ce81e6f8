#pragma once

#include "jackcc/algebra.hpp"
#include "jackcc/errors.hpp"
#include "jackcc/partition.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace jackcc {

struct PowerSumBasis {
    static constexpr const char * symbol = "p";
};
struct MonomialBasis {
    static constexpr const char * symbol = "m";
};

/// Homogeneous symmetric function of a fixed degree in one basis, with
/// coefficients in Q(alpha).  Zero coefficients are never stored; keys are
/// iterated in reverse-lexicographic order.
template <class Basis>
class HomogeneousVector {
public:
    using Terms = std::map<Partition, RatFunc, ReverseLex>;

    explicit HomogeneousVector(int degree = 0) : degree_(degree) {}

    static HomogeneousVector basis_element(const Partition & mu, RatFunc c = 1)
    {
        HomogeneousVector v(mu.size());
        v.add(mu, c);
        return v;
    }

    int degree() const { return degree_; }
    const Terms & terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    RatFunc coeff(const Partition & mu) const
    {
        auto it = terms_.find(mu);
        return it == terms_.end() ? RatFunc() : it->second;
    }

    /// Adds c * basis(mu).  Throws DegreeMismatch when |mu| != degree.
    void add(const Partition & mu, const RatFunc & c)
    {
        if (mu.size() != degree_)
            throw DegreeMismatch("term " + mu.to_string() + " in a vector of degree " + std::to_string(degree_));
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    HomogeneousVector & operator+=(const HomogeneousVector & o)
    {
        check_same_degree(o);
        for (auto const & [mu, c] : o.terms_)
            add(mu, c);
        return *this;
    }

    HomogeneousVector & operator-=(const HomogeneousVector & o)
    {
        check_same_degree(o);
        for (auto const & [mu, c] : o.terms_)
            add(mu, -c);
        return *this;
    }

    HomogeneousVector & operator*=(const RatFunc & s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto & [mu, c] : terms_)
            c *= s;
        return *this;
    }

    friend HomogeneousVector operator+(HomogeneousVector a, const HomogeneousVector & b) { return a += b; }
    friend HomogeneousVector operator-(HomogeneousVector a, const HomogeneousVector & b) { return a -= b; }
    friend HomogeneousVector operator*(HomogeneousVector a, const RatFunc & s) { return a *= s; }
    friend HomogeneousVector operator*(const RatFunc & s, HomogeneousVector a) { return a *= s; }

    friend bool operator==(const HomogeneousVector & a, const HomogeneousVector & b)
    {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// "c1*p[2,1] + c2*p[1,1,1]"; "0" for the zero vector.
    std::string to_string(std::string_view var = "a") const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto const & [mu, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + c.to_string(var) + ")*" + Basis::symbol + "[" + mu.to_string() + "]";
        }
        return out;
    }

private:
    void check_same_degree(const HomogeneousVector & o) const
    {
        if (o.degree_ != degree_ && !o.is_zero())
            throw DegreeMismatch("adding vectors of degree " + std::to_string(degree_) + " and " +
                                 std::to_string(o.degree_));
    }

    int degree_;
    Terms terms_;
};

using PSumVector = HomogeneousVector<PowerSumBasis>;
using MonomialVector = HomogeneousVector<MonomialBasis>;

/// p_mu as a vector.
inline PSumVector power_sum(const Partition & mu) { return PSumVector::basis_element(mu); }

/* The operators below act on the power-sum expansion by term rewriting.
 * Partial derivatives are taken in the multiset sense: d/dp_i on p_mu
 * contributes m_i(mu). */

/// N = 1/2 sum i(i-1) p_i d/dp_i.
PSumVector apply_N(const PSumVector & v);
/// U = 1/2 sum i j p_{i+j} d^2/dp_i dp_j.
PSumVector apply_U(const PSumVector & v);
/// S = 1/2 sum (i+j) p_i p_j d/dp_{i+j}.
PSumVector apply_S(const PSumVector & v);
/// Laplace-Beltrami operator (alpha - 1) N + alpha U + S.
PSumVector apply_D(const PSumVector & v);
PSumVector apply_D_power(PSumVector v, int times);

/// E2 = sum k p_{k+1} d/dp_k  (degree + 1).
PSumVector apply_E2(const PSumVector & v);
/// E2perp = sum (k+1) p_k d/dp_{k+1}  (degree - 1).
PSumVector apply_E2perp(const PSumVector & v);
/// Multiplication by p_1.
PSumVector multiply_p1(const PSumVector & v);
/// p1perp = alpha d/dp_1.
PSumVector apply_p1perp(const PSumVector & v);

/// Closed form of [D, E2] as a second-order operator (degree + 1).
PSumVector apply_DE2_commutator(const PSumVector & v);

/// Delta_l = [D, [D, ..., [D, p_1/alpha]]] with l brackets, via the binomial
/// expansion (1/alpha) sum_k C(l,k) (-1)^{l-k} D^k p_1 D^{l-k}.
PSumVector apply_Delta(int l, const PSumVector & v);

/// Integer matrix R with p_mu = sum_lambda R[lambda][mu] m_lambda, indexed by
/// the reverse-lexicographic listing of partitions of the degree.
struct TransitionTable {
    int degree;
    std::vector<Partition> basis;
    std::map<Partition, std::size_t, ReverseLex> index;
    std::vector<std::vector<BigInt>> matrix;   // [row lambda][col mu]
};

/// Cached per degree; throws DegreeTooLarge beyond degree_bound().
std::shared_ptr<const TransitionTable> transition_table(int n);

MonomialVector p_to_m(const PSumVector & v);
PSumVector m_to_p(const MonomialVector & w);

} // namespace jackcc
