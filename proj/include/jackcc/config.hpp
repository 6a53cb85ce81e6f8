#pragma once

namespace jackcc {

inline constexpr int default_degree_bound = 8;

/* Upper bound on n for Jack tables, transition matrices and matching
 * enumeration.  JACKCC_MAX_N in the environment overrides the default;
 * set_degree_bound() overrides both. */
int degree_bound();
void set_degree_bound(int n);

/* Throws DegreeTooLarge when n exceeds degree_bound(). */
void check_degree(int n, const char * what);

} // namespace jackcc
