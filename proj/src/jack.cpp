#include "jackcc/jack.hpp"

#include "jackcc/config.hpp"
#include "jackcc/linalg.hpp"

#include <mutex>

namespace jackcc {

namespace {

/* Matrix of D - e I on the power-sum basis of degree n (reverse-lex order),
 * column mu holding the coefficients of D(p_mu). */
PolyMatrix shifted_d_matrix(const AlphaPoly & e, const std::vector<Partition> & basis)
{
    std::size_t dim = basis.size();
    PolyMatrix m(dim, std::vector<AlphaPoly>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        PSumVector image = apply_D(power_sum(basis[col]));
        for (std::size_t row = 0; row < dim; ++row) {
            RatFunc c = image.coeff(basis[row]);
            m[row][col] = c.as_polynomial();
        }
        m[col][col] -= e;
    }
    return m;
}

/* Rows expressing [m_kappa] v = 0 for every kappa not dominated by lambda. */
void append_triangularity(PolyMatrix & m, const Partition & lambda, const TransitionTable & table)
{
    std::size_t dim = table.basis.size();
    for (std::size_t row = 0; row < dim; ++row) {
        if (lambda.dominates(table.basis[row]))
            continue;
        std::vector<AlphaPoly> constraint(dim);
        for (std::size_t col = 0; col < dim; ++col)
            constraint[col] = AlphaPoly(BigRational(table.matrix[row][col]));
        m.push_back(std::move(constraint));
    }
}

} // namespace

const PSumVector & JackTable::row(const Partition & lambda) const
{
    auto it = rows.find(lambda);
    if (it == rows.end())
        throw std::out_of_range("no Jack row for " + lambda.to_string());
    return it->second;
}

RatFunc JackTable::theta(const Partition & lambda, const Partition & mu) const
{
    return row(lambda).coeff(mu);
}

void JackTable::validate() const
{
    Partition ones = Partition::single_column(n);
    for (auto const & [lambda, v] : rows) {
        if (v.coeff(ones) != RatFunc(1))
            throw std::logic_error("theta_{1^n} != 1 in row " + lambda.to_string());
        for (auto const & [mu, c] : v.terms())
            if (!c.is_polynomial())
                throw std::logic_error("non-polynomial Jack character in row " + lambda.to_string());
    }
}

int eigenspace_dimension(const Partition & lambda)
{
    int n = lambda.size();
    check_degree(n, "Jack eigenspace");
    auto basis = generate_partitions(n);
    return static_cast<int>(nullspace(shifted_d_matrix(eigenvalue(lambda), basis)).size());
}

PSumVector jack_in_p(const Partition & lambda)
{
    int n = lambda.size();
    if (n < 1)
        throw std::invalid_argument("jack_in_p: empty partition");
    check_degree(n, "Jack function");
    auto table = transition_table(n);
    const auto & basis = table->basis;

    PolyMatrix m = shifted_d_matrix(eigenvalue(lambda), basis);
    auto kernel = nullspace(m);
    if (kernel.size() > 1) {
        append_triangularity(m, lambda, *table);
        kernel = nullspace(std::move(m));
    }
    if (kernel.size() != 1)
        throw DegenerateSystem("constrained eigenspace for " + lambda.to_string() + " has dimension " +
                               std::to_string(kernel.size()));

    const auto & x = kernel.front();
    RatFunc scale = x.back();   // basis ends with 1^n
    if (scale.is_zero())
        throw DegenerateSystem("eigenvector for " + lambda.to_string() + " has no p_{1^n} term");
    PSumVector v(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        v.add(basis[i], x[i] / scale);

    MonomialVector mono = p_to_m(v);
    if (mono.coeff(lambda) != RatFunc(hooks(lambda).lower))
        throw DegenerateSystem("[m_lambda] J != h_lambda for " + lambda.to_string());
    for (auto const & [mu, c] : mono.terms())
        if (!lambda.dominates(mu))
            throw DegenerateSystem("J_" + lambda.to_string() + " has a monomial term m_" + mu.to_string() +
                                   " outside the dominance ideal");
    return v;
}

std::shared_ptr<const JackTable> jack_table(int n)
{
    if (n < 1)
        throw std::invalid_argument("jack_table: n must be positive");
    check_degree(n, "Jack table");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const JackTable>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    auto table = std::make_shared<JackTable>();
    table->n = n;
    for (auto const & lambda : generate_partitions(n))
        table->rows.emplace(lambda, jack_in_p(lambda));
    table->validate();
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(table));
    return it->second;
}

RatFunc inner_product(const PSumVector & u, const PSumVector & v)
{
    if (u.degree() != v.degree())
        throw DegreeMismatch("inner product of degrees " + std::to_string(u.degree()) + " and " +
                             std::to_string(v.degree()));
    RatFunc sum;
    for (auto const & [mu, c] : u.terms()) {
        auto it = v.terms().find(mu);
        if (it == v.terms().end())
            continue;
        AlphaPoly weight = AlphaPoly::monomial(BigRational(z_aut_class(mu).z), mu.length());
        sum += c * it->second * RatFunc(weight);
    }
    return sum;
}

} // namespace jackcc
