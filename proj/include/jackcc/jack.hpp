#pragma once

#include "jackcc/psum.hpp"

#include <map>
#include <memory>

namespace jackcc {

/// Power-sum expansions J_lambda = sum_mu theta^lambda_mu(alpha) p_mu for every lambda of n.
struct JackTable {
    int n = 0;
    std::map<Partition, PSumVector, ReverseLex> rows;

    const PSumVector & row(const Partition & lambda) const;
    /// theta^lambda_mu; zero when absent.
    RatFunc theta(const Partition & lambda, const Partition & mu) const;
    /// Throws std::logic_error naming the first violated row invariant
    /// (theta_{1^n} = 1, polynomial entries).
    void validate() const;

    friend bool operator==(const JackTable &, const JackTable &) = default;
};

/// Jack function J_lambda in the power-sum basis, normalized so that
/// [m_lambda] J = h_lambda(alpha) and theta_{1^n} = 1.
///
/// Solved as the eigenvector of D for eigenvalue(lambda).  When the
/// eigenvalue is shared with another partition the eigenspace is cut down
/// by monomial triangularity: [m_mu] J = 0 unless lambda dominates mu.
/// Throws DegreeTooLarge, and DegenerateSystem if the constrained space is
/// not one-dimensional or the normalization check fails.
PSumVector jack_in_p(const Partition & lambda);

/// Dimension of the plain D-eigenspace for lambda's eigenvalue (before
/// triangularity constraints); exposed for the collision tests.
int eigenspace_dimension(const Partition & lambda);

/// Cached table for degree n, 1 <= n <= degree_bound().  Invariants are
/// validated before the table is published.
std::shared_ptr<const JackTable> jack_table(int n);

/// <u, v>_alpha = sum_mu u_mu v_mu alpha^{l(mu)} z_mu.  Throws DegreeMismatch.
RatFunc inner_product(const PSumVector & u, const PSumVector & v);

} // namespace jackcc
