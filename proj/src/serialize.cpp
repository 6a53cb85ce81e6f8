#include "jackcc/serialize.hpp"

#include <stdexcept>

namespace jackcc {

Json to_json(const AlphaPoly & p)
{
    Json out = Json::array();
    for (auto const & c : p.coefficients())
        out.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
    return out;
}

Json to_json(const RatFunc & f)
{
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const PSumVector & v)
{
    Json terms = Json::array();
    for (auto const & [mu, c] : v.terms())
        terms.push_back(Json{{"mu", mu.to_string()}, {"coeff", to_json(c)}});
    return Json{{"degree", v.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const JackTable & t)
{
    Json rows = Json::array();
    for (auto const & [lambda, row] : t.rows)
        rows.push_back(Json{{"lambda", lambda.to_string()}, {"row", to_json(row)}});
    return Json{{"n", t.n}, {"rows", std::move(rows)}};
}

namespace {

BigInt parse_integer(const Json & j)
{
    if (!j.is_string())
        throw std::invalid_argument("expected an integer string");
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
        throw std::invalid_argument("malformed integer \"" + j.get<std::string>() + "\"");
    return z;
}

const Json & field(const Json & j, const char * key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

AlphaPoly poly_from_json(const Json & j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be an array of [num, den] pairs");
    std::vector<BigRational> coeffs;
    for (auto const & pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("polynomial coefficient must be a [num, den] pair");
        BigInt den = parse_integer(pair[1]);
        if (den == 0)
            throw std::invalid_argument("zero denominator in polynomial coefficient");
        BigRational c(parse_integer(pair[0]), den);
        c.canonicalize();
        coeffs.push_back(c);
    }
    return AlphaPoly::from_coefficients(std::move(coeffs));
}

RatFunc ratfunc_from_json(const Json & j)
{
    AlphaPoly den = poly_from_json(field(j, "den"));
    if (den.is_zero())
        throw std::invalid_argument("zero denominator in rational function");
    return RatFunc(poly_from_json(field(j, "num")), den);
}

PSumVector psum_from_json(const Json & j)
{
    const Json & degree = field(j, "degree");
    if (!degree.is_number_integer())
        throw std::invalid_argument("degree must be an integer");
    PSumVector v(degree.get<int>());
    for (auto const & term : field(j, "terms")) {
        const Json & mu = field(term, "mu");
        if (!mu.is_string())
            throw std::invalid_argument("mu must be a partition string");
        v.add(Partition::parse(mu.get<std::string>()), ratfunc_from_json(field(term, "coeff")));
    }
    return v;
}

JackTable jack_table_from_json(const Json & j)
{
    const Json & n = field(j, "n");
    if (!n.is_number_integer())
        throw std::invalid_argument("n must be an integer");
    JackTable t;
    t.n = n.get<int>();
    for (auto const & row : field(j, "rows")) {
        const Json & lambda = field(row, "lambda");
        if (!lambda.is_string())
            throw std::invalid_argument("lambda must be a partition string");
        t.rows.emplace(Partition::parse(lambda.get<std::string>()), psum_from_json(field(row, "row")));
    }
    return t;
}

} // namespace jackcc
