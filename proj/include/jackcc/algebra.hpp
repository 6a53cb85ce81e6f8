#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jackcc {

using BigInt = mpz_class;
/* GMP keeps mpq_class canonical: positive denominator, gcd 1. */
using BigRational = mpq_class;

/// a/b in canonical form (the two-argument mpq_class constructor does not reduce).
inline BigRational ratio(long a, long b)
{
    BigRational q(a, b);
    q.canonicalize();
    return q;
}

/// Dense univariate polynomial over Q in the Jack parameter, ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(const BigRational & c);
    AlphaPoly(long c) : AlphaPoly(BigRational(c)) {}
    AlphaPoly(int c) : AlphaPoly(BigRational(c)) {}

    static AlphaPoly from_coefficients(std::vector<BigRational> coeffs);
    static AlphaPoly monomial(const BigRational & c, int degree);
    /// The indeterminate itself.
    static AlphaPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational> & coefficients() const { return coeffs_; }
    BigRational coefficient(int i) const;
    const BigRational & leading() const;
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool has_integer_coefficients() const;

    AlphaPoly monic() const;
    BigRational eval(const BigRational & x) const;
    /// p(x + c).
    AlphaPoly shift(const BigRational & c) const;

    AlphaPoly & operator+=(const AlphaPoly & o);
    AlphaPoly & operator-=(const AlphaPoly & o);
    AlphaPoly & operator*=(const AlphaPoly & o);
    AlphaPoly & operator*=(const BigRational & c);

    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly & b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly & b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly & a, const AlphaPoly & b);
    friend AlphaPoly operator*(AlphaPoly a, const BigRational & c) { return a *= c; }
    friend AlphaPoly operator*(const BigRational & c, AlphaPoly a) { return a *= c; }
    AlphaPoly operator-() const;

    friend bool operator==(const AlphaPoly & a, const AlphaPoly & b) { return a.coeffs_ == b.coeffs_; }

    /// "c0 + c1*a + c2*a^2" style, ascending degree, zero terms omitted.
    std::string to_string(std::string_view var = "a") const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly & a, const AlphaPoly & b);
/// a / b when b divides a; throws std::logic_error otherwise.
AlphaPoly exact_div(const AlphaPoly & a, const AlphaPoly & b);
/// Monic gcd; gcd(0, 0) = 0.
AlphaPoly gcd(AlphaPoly a, AlphaPoly b);
AlphaPoly pow(const AlphaPoly & p, unsigned e);

/// q(beta) = p(beta + 1).
AlphaPoly substitute_beta(const AlphaPoly & p);
/// Inverse of substitute_beta.
AlphaPoly substitute_alpha(const AlphaPoly & q);

/// Reduced rational function num/den with monic den and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const AlphaPoly & p) : num_(p), den_(1) {}
    RatFunc(const BigRational & c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(BigRational(c)) {}
    RatFunc(int c) : RatFunc(BigRational(c)) {}
    /// Throws DivisionByZero when den is zero.
    RatFunc(AlphaPoly num, AlphaPoly den);

    static RatFunc variable() { return RatFunc(AlphaPoly::variable()); }

    const AlphaPoly & num() const { return num_; }
    const AlphaPoly & den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Throws NotPolynomial unless the denominator is 1.
    const AlphaPoly & as_polynomial() const;

    /// Throws PoleAtPoint when the denominator vanishes at x.
    BigRational eval(const BigRational & x) const;

    RatFunc & operator+=(const RatFunc & o);
    RatFunc & operator-=(const RatFunc & o);
    RatFunc & operator*=(const RatFunc & o);
    RatFunc & operator/=(const RatFunc & o);

    friend RatFunc operator+(RatFunc a, const RatFunc & b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc & b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc & b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc & b) { return a /= b; }
    RatFunc operator-() const;

    friend bool operator==(const RatFunc & a, const RatFunc & b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(std::string_view var = "a") const;

private:
    void normalize();
    AlphaPoly num_;
    AlphaPoly den_;
};

inline BigRational eval_at(const RatFunc & p, const BigRational & x) { return p.eval(x); }

} // namespace jackcc
