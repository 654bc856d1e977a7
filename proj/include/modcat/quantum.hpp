#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modcat/types.hpp"

namespace modcat {

class QuantumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameters of T_xi for a root datum at a primitive l-th root of unity
// xi = zeta_l^e with l = 2d. Exponents <.,.> in (1/L)Z are evaluated in the
// working conductor lcm(4, L*l).
struct QuantumContext {
    RootDatum rd;
    int d = 0;
    int l = 0;
    int lprime = 0;
    int xi_exponent = 1;
    std::uint32_t conductor = 1;
    Sublattice sub;
    std::vector<Weight> alcove;
    CycNum weyl_denominator;        // sum sgn(w) xi^{<2rho, w.0>}
    CycNum weyl_denominator_minus;  // same with negated exponents
    CycNum imag_unit;

    // Residue r with xi^q = zeta_conductor^r; throws unless q*L is integral.
    std::int64_t xi_index(const Rational& q) const;
    CycNum xi_power(const Rational& q) const;
    // zeta = xi^{-2} as a power of zeta_d.
    int zeta_power() const;
};

// Default xi: zeta_{2d}^{-1} for type A (so zeta = xi^{-2} = zeta_d), zeta_{2d} for type B.
QuantumContext make_context(LieType type, int rank, int d, std::optional<int> xi_exponent = std::nullopt);

WeightPair canonical_pair(const QuantumContext& ctx, const WeightPair& p);
Weight grading(const QuantumContext& ctx, const WeightPair& p);
// Index of lambda+mu (halved) in ctx.alcove, or -1.
int alcove_index(const QuantumContext& ctx, const WeightPair& p);

std::vector<WeightPair> enumerate_simples(const QuantumContext& ctx, bool integral = true);

CycNum s_numerator(const QuantumContext& ctx, const WeightPair& a, const WeightPair& b);
CycNum s_entry(const QuantumContext& ctx, const WeightPair& a, const WeightPair& b);
CycNum twist(const QuantumContext& ctx, const WeightPair& a);
// Type A only: i^{-n-|Phi+|} * numerator / d^n.
CycNum renormalized_s(const QuantumContext& ctx, const WeightPair& a, const WeightPair& b);
std::pair<CycNum, CycNum> quantum_dims(const QuantumContext& ctx, const WeightPair& a);

Matrix s_matrix(const QuantumContext& ctx, const std::vector<WeightPair>& labels, int jobs = 0);
ModularDatum quantum_datum(const QuantumContext& ctx, const std::vector<WeightPair>& labels, int jobs = 0);

// Indices of simples with nonzero sum_b (dim-/dim+)(b) S_{a,b} S_{b,0}.
std::vector<std::size_t> symmetric_center(const QuantumContext& ctx, const std::vector<WeightPair>& simples, const Matrix& s);
std::size_t symmetric_center_size(const QuantumContext& ctx, const std::vector<WeightPair>& simples, const Matrix& s);

std::vector<WeightPair> subcategory_by_grading(const QuantumContext& ctx, const std::vector<WeightPair>& simples,
                                               const std::vector<Weight>& allowed_gradings);

struct SuperQuotient {
    std::vector<std::size_t> partner;          // index of X (x) J for each simple
    std::vector<std::size_t> representatives;  // indices into simples
};

// Pairs simples whose S-rows differ by the factor -1. Representatives follow
// the order of `preferred` when those labels occur, then ascending index.
SuperQuotient super_quotient(const QuantumContext& ctx, const std::vector<WeightPair>& simples, const Matrix& s,
                             const WeightPair& j, const std::vector<WeightPair>& preferred = {});

}  // namespace modcat
