#pragma once

#include <utility>
#include <vector>

#include "modcat/types.hpp"

namespace modcat {

class SymbolError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Euclidean remainder in [0, d).
int res(long long k, int d);

bool in_psi_sharp(const MalleSymbol& s);
void validate_symbol(const MalleSymbol& s);

// All of Psi#(n, d), sorted lexicographically on (f, k).
std::vector<MalleSymbol> enumerate_symbols(int n, int d);
long long psi_sharp_count(int n, int d);

// Values of f on all of Y: f(1..n+1), then each block {0..d-1} \ {k_i} increasing.
std::vector<int> full_values(const MalleSymbol& s);
int epsilon(const MalleSymbol& s);
int sign_d(const MalleSymbol& s);

// B(f, i) = sum_{j<=i} f(j) - sum_{j<i} k_{j-1}, i = 1..n.
long long partial_block(const MalleSymbol& s, int i);

// Exponent e with Fr(f) = zeta^e, zeta a primitive d-th root of unity.
int frobenius_exponent(const MalleSymbol& s);
// Fr(f) with zeta = zeta_d^u.
CycNum frobenius(const MalleSymbol& s, int u = 1);
// Fr(f) from the zeta_* formula, zeta_*^12 = zeta = zeta_d^u, evaluated at conductor 12d.
CycNum frobenius_zeta_star(const MalleSymbol& s, int u = 1);

// Rewritten formula with integer exponents.
CycNum malle_s_entry(const MalleSymbol& a, const MalleSymbol& b, int u = 1);
// Unnormalized sum of the rewritten formula without 1/d^n and signs; the
// entry equals sign_d(a) sign_d(b) numerator / d^n.
CycNum malle_s_numerator(const MalleSymbol& a, const MalleSymbol& b, int u = 1);
// tau(d) = prod_{i<j} (zeta^i - zeta^j).
CycNum tau(int d, int u = 1);
// Exterior-power matrix entry bold S_{f,g}.
CycNum exterior_s_entry(const MalleSymbol& a, const MalleSymbol& b, int u = 1);
// (-1)^{n(d-1)} / tau^n * conj(bold S_{f,g}).
CycNum malle_s_entry_lemma(const MalleSymbol& a, const MalleSymbol& b, int u = 1);

Matrix malle_s_matrix(const std::vector<MalleSymbol>& syms, int u = 1, int jobs = 0);
ModularDatum malle_datum(int n, int d, int u = 1, int jobs = 0);

std::pair<MalleSymbol, MalleSymbol> special_symbols(int n, int d);

// Type A_n root datum expected.
WeightPair iota(const RootDatum& rd, const MalleSymbol& s);
MalleSymbol f_from_weightpair(const RootDatum& rd, int d, const WeightPair& p);
MalleSymbol ennola(const MalleSymbol& s);
// gamma = (n+1)(n+2)/2 varpi_1 - rho.
Weight ennola_gamma(const RootDatum& rd);

// Reduced d-symbol view: entry i lies in S_j for every j in f(pi^{-1}(i)).
std::vector<std::vector<int>> d_symbol(const MalleSymbol& s);
std::string tableau(const MalleSymbol& s);

}  // namespace modcat
