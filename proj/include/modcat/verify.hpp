#pragma once

#include "modcat/report.hpp"
#include "modcat/types.hpp"

namespace modcat {

// Malle S, T for (n, d) against the renormalized quantum datum, indexed through iota.
Report verify_main_theorem(int n, int d, int jobs = 0);
Report verify_ennola(int n, int d);
Report verify_cyclic3(int jobs = 0);
Report verify_g27(int jobs = 0);
Report verify_g24(int jobs = 0);
Report verify_g4(int jobs = 0);
// Label counts and the symmetric center of the integral category.
Report verify_counts(int n, int d, int jobs = 0);
Report verify_sl2z(int n, int d, int jobs = 0);
// Integrality, negativity, associativity of A and A^abs; sign_d positivity is
// recorded under details and does not affect the outcome.
Report verify_cuntz(int n, int d, int jobs = 0);

// Exact and entrywise; violations name (i, j) and both values.
void compare_matrices(Report& r, const std::string& what, const Matrix& got, const Matrix& want);
void compare_vectors(Report& r, const std::string& what, const std::vector<CycNum>& got, const std::vector<CycNum>& want);

// True when every row and column holds exactly one nonzero entry.
bool is_scaled_permutation(const Matrix& m);

}  // namespace modcat
