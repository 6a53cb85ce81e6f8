#pragma once

#include "jackcc/algebra.hpp"

#include <vector>

namespace jackcc {

using PolyMatrix = std::vector<std::vector<AlphaPoly>>;

/// Basis of the right nullspace over Q(alpha) of a matrix with entries in
/// Q[alpha].  Elimination is fraction-free (Bareiss); only the final
/// back-substitution works in Q(alpha).  One vector per free column, with a
/// 1 in that column and 0 in the other free columns.
std::vector<std::vector<RatFunc>> nullspace(PolyMatrix a);

/// Rank over Q(alpha).
int rank(PolyMatrix a);

} // namespace jackcc
