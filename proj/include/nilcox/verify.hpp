#pragma once

// The acceptance checks behind `nilcox verify-all`: ten numbered checks, one
// PASS/FAIL line each, with per-check time budgets pinned in the source.
// The component checks are exposed on their own so the resolve subcommand
// can reuse them at chosen sizes.

#include <iosfwd>

namespace nilcox {

// d_k d_k = 0 and d_k d_l + d_l d_k = 0 on every cell of total degree <= cap.
bool check_complex_validity(int n, int degree_cap);

// Every differential leg lowers the cell degree by one, raises the internal
// degree by the length of its coefficient, and is never a unit.
bool check_minimality(int n, int degree_cap);

// d h + h d = 1 on every monomial (cell, basis element) of degree <= cap,
// or on `samples` seeded random monomials when exhaustion is too large.
bool check_homotopy_exhaustive(int n, int degree_cap);
bool check_homotopy_sampled(int n, int degree_cap, int samples, unsigned seed);

// Run the ten acceptance checks. One PASS/FAIL line per check goes to out;
// timing diagnostics go to log so the bytes of out stay run-independent.
// quick caps the exhaustive symmetric group ranges at n = 4 and skips the
// sampled n = 5 passes. Returns the number of failed checks.
int verify_all(bool quick, std::ostream& out, std::ostream& log);

}  // namespace nilcox
