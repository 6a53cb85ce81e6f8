#pragma once

#include "jackcc/jack.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jackcc {

/// a^{lambda1}_{others...}(alpha); all partitions of the same weight.
struct ConnectionQuery {
    Partition lambda1;
    std::vector<Partition> others;
};

struct CoeffResult {
    RatFunc value;
    std::optional<AlphaPoly> beta_form;   // value(beta + 1) when value is a polynomial
};

CoeffResult make_result(const RatFunc & value);

/// One checked identity with both sides kept for reporting.
struct IdentitySides {
    std::string name;
    RatFunc lhs;
    RatFunc rhs;
    bool holds() const { return lhs == rhs; }
};

/// Cauchy-sum definition:
///   alpha^{l(lambda1)} z_{lambda1} sum_gamma prod_i theta^gamma_{lambda^i} / j_gamma.
/// Throws DegreeMismatch for unequal weights, DegreeTooLarge beyond the table bound.
RatFunc a_cauchy(const ConnectionQuery & q);
RatFunc a_cauchy(const Partition & lambda, const Partition & mu, const Partition & nu);

/// a^lambda_{(n)(n)} by the recurrence that removes the largest part.  Memoized.
AlphaPoly a_nn_recurrence(const Partition & lambda);

/// The recurrence right-hand side for lambda with the removed part equal to
/// `part` (which must occur in lambda, |lambda| >= 2).
AlphaPoly recurrence_bracket(const Partition & lambda, int part);

/// True iff recurrence_bracket agrees for every distinct part of lambda.
bool verify_i_independence(const Partition & lambda);

/// Both sides of the (n+1, nu) identity for lambda of n+1 and nu of n, with
/// every coefficient taken from a_cauchy.
IdentitySides thm_rec_sides(const Partition & lambda, const Partition & nu);
bool verify_thm_rec(const Partition & lambda, const Partition & nu);

/// The three identities obtained by choosing a part 1 or a part 2 in the
/// recurrence: mu + (1), the iterated form for mu + (1) + ... , and mu + (2).
std::vector<IdentitySides> remark_identity_sides(const Partition & mu);
bool remark_identities(const Partition & mu);

/// D^r Delta_l^{n-1} (p_1 / alpha), cached per (n, l, r).
const PSumVector & lr_generating_vector(int n, int l, int r);

/// a^{l,r}_lambda = alpha^{l(lambda)} / |C_lambda| * [p_lambda] D^r Delta_l^{n-1}(p_1/alpha).
RatFunc a_lr(const Partition & lambda, int l, int r);

/// The same coefficient from the Cauchy sum with l copies of (n) and r of (2,1^{n-2}).
RatFunc a_lr_cauchy(const Partition & lambda, int l, int r);

struct LrProperties {
    RatFunc scaled;        // |C_lambda| a^{l,r}_lambda
    bool polynomial = false;
    bool integer_coefficients = false;
    bool degree_within_bound = false;   // deg <= (n-1)(l-1) + r
    bool sign_symmetric = false;
    bool all() const { return polynomial && integer_coefficients && degree_within_bound && sign_symmetric; }
};

LrProperties lr_properties(const Partition & lambda, int l, int r);

/// Gamma^l_n = (1/n) Delta_l(Gamma^l_{n-1}) where v has degree n-1.
PSumVector gamma_step(int l, const PSumVector & v);
/// Gamma^l_n, iterated from Gamma^l_1 = p_1/alpha.
PSumVector gamma_series(int l, int n);

/// Relation between the two kernels in degree (n+1) x n:
///   sum_{rho |- n+1} theta^rho_{(n+1)} J_rho(x) E2perp J_rho(y) / j_rho
///     = sum_{gamma |- n} theta^gamma_{(n)} J_gamma(y) [D, E2] J_gamma(x) / j_gamma,
/// compared coefficientwise on p_mu(x) p_nu(y).  One entry per (mu, nu)
/// where either side is nonzero.
std::vector<IdentitySides> two_series_sides(int n);

/// theta^{gamma+i}_{(n+1)} = theta^gamma_{(n)} (theta^{gamma+i}_{[1^{n-1}2]} - theta^gamma_{[1^{n-2}2]})
/// for gamma |- n and every row i (1-based, up to l(gamma)+1) that can take a box.
std::vector<IdentitySides> theta_lemma_sides(const Partition & gamma);

/// Numeric recurrences at alpha = 2 (matching counts) and alpha = 1
/// (bipartite counts) for lambda of n+1 >= 2, removing the part at `index`;
/// values taken from a_nn_recurrence.
IdentitySides comb_values_b(const Partition & lambda, int index);
IdentitySides comb_values_c(const Partition & lambda, int index);

} // namespace jackcc
