#include "jackcc/algebra.hpp"

#include "jackcc/errors.hpp"

#include <stdexcept>

namespace jackcc {

AlphaPoly::AlphaPoly(const BigRational & c)
{
    if (c != 0) {
        coeffs_.push_back(c);
        coeffs_.back().canonicalize();
    }
}

AlphaPoly AlphaPoly::from_coefficients(std::vector<BigRational> coeffs)
{
    AlphaPoly p;
    p.coeffs_ = std::move(coeffs);
    for (auto & c : p.coeffs_)
        c.canonicalize();
    p.trim();
    return p;
}

AlphaPoly AlphaPoly::monomial(const BigRational & c, int degree)
{
    AlphaPoly p;
    if (c == 0)
        return p;
    p.coeffs_.assign(degree + 1, BigRational(0));
    p.coeffs_[degree] = c;
    p.coeffs_[degree].canonicalize();
    return p;
}

void AlphaPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigRational AlphaPoly::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[i];
}

const BigRational & AlphaPoly::leading() const
{
    if (coeffs_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool AlphaPoly::has_integer_coefficients() const
{
    for (auto const & c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

AlphaPoly AlphaPoly::monic() const
{
    if (is_zero())
        return *this;
    BigRational inv = 1 / leading();
    return *this * inv;
}

BigRational AlphaPoly::eval(const BigRational & x) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

AlphaPoly AlphaPoly::shift(const BigRational & c) const
{
    // Horner in the shifted variable: p(y + c) = (...(a_d (y+c) + a_{d-1})(y+c) ...)
    AlphaPoly lin = from_coefficients({c, BigRational(1)});
    AlphaPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= lin;
        acc += AlphaPoly(*it);
    }
    return acc;
}

AlphaPoly & AlphaPoly::operator+=(const AlphaPoly & o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

AlphaPoly & AlphaPoly::operator-=(const AlphaPoly & o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

AlphaPoly operator*(const AlphaPoly & a, const AlphaPoly & b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return AlphaPoly::from_coefficients(std::move(out));
}

AlphaPoly & AlphaPoly::operator*=(const AlphaPoly & o)
{
    *this = *this * o;
    return *this;
}

AlphaPoly & AlphaPoly::operator*=(const BigRational & c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto & x : coeffs_)
        x *= c;
    return *this;
}

AlphaPoly AlphaPoly::operator-() const
{
    AlphaPoly r = *this;
    for (auto & x : r.coeffs_)
        x = -x;
    return r;
}

std::string AlphaPoly::to_string(std::string_view var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        BigRational c = coeffs_[i];
        if (c == 0)
            continue;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1)
            out += c.get_str() + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly & a, const AlphaPoly & b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    int db = b.degree();
    if (a.degree() < db)
        return {AlphaPoly(), a};
    std::vector<BigRational> rem = a.coefficients();
    std::vector<BigRational> quo(a.degree() - db + 1, BigRational(0));
    BigRational inv = 1 / b.leading();
    auto const & bc = b.coefficients();
    for (int k = a.degree() - db; k >= 0; --k) {
        BigRational q = rem[k + db] * inv;
        quo[k] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {AlphaPoly::from_coefficients(std::move(quo)), AlphaPoly::from_coefficients(std::move(rem))};
}

AlphaPoly exact_div(const AlphaPoly & a, const AlphaPoly & b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::logic_error("exact_div: divisor does not divide dividend");
    return q;
}

AlphaPoly gcd(AlphaPoly a, AlphaPoly b)
{
    while (!b.is_zero()) {
        AlphaPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

AlphaPoly pow(const AlphaPoly & p, unsigned e)
{
    AlphaPoly r(1);
    for (unsigned i = 0; i < e; ++i)
        r *= p;
    return r;
}

AlphaPoly substitute_beta(const AlphaPoly & p) { return p.shift(1); }

AlphaPoly substitute_alpha(const AlphaPoly & q) { return q.shift(-1); }

RatFunc::RatFunc(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        den_ = AlphaPoly(1);
        return;
    }
    if (den_.degree() > 0) {
        AlphaPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    if (!den_.is_monic()) {
        BigRational inv = 1 / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
}

const AlphaPoly & RatFunc::as_polynomial() const
{
    if (!is_polynomial())
        throw NotPolynomial("rational function " + to_string() + " is not a polynomial");
    return num_;
}

BigRational RatFunc::eval(const BigRational & x) const
{
    BigRational d = den_.eval(x);
    if (d == 0)
        throw PoleAtPoint("denominator vanishes at " + x.get_str());
    return num_.eval(x) / d;
}

RatFunc & RatFunc::operator+=(const RatFunc & o)
{
    if (o.is_zero())
        return *this;
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc & RatFunc::operator-=(const RatFunc & o)
{
    return *this += -o;
}

RatFunc & RatFunc::operator*=(const RatFunc & o)
{
    if (is_polynomial() && o.is_polynomial()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc & RatFunc::operator/=(const RatFunc & o)
{
    if (o.is_zero())
        throw DivisionByZero("rational function division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::to_string(std::string_view var) const
{
    if (is_polynomial())
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace jackcc
