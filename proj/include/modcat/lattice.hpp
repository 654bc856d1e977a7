#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcat/cyclo.hpp"

namespace modcat {

enum class LieType { A, B };

std::string to_string(LieType t);
LieType parse_lie_type(const std::string& s);

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Coordinates in the basis of simple roots.
using Weight = std::vector<Rational>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Rational& c, const Weight& a);
Weight zero_weight(int n);

struct WeylElement {
    int n = 0;
    std::vector<std::int64_t> matrix;  // row-major, acts on alpha-coordinates
    int parity = 1;                    // (-1)^length
    int length = 0;
    std::size_t inverse = 0;           // index into RootDatum::weyl

    Weight apply(const Weight& v) const;
};

struct RootDatum {
    LieType type = LieType::A;
    int rank = 0;
    std::vector<std::vector<Rational>> gram;  // <alpha_i, alpha_j>
    std::vector<std::vector<int>> cartan;     // <alpha_i, alpha_j^vee>
    std::vector<std::vector<int>> positive_roots;
    std::vector<Weight> fundamental_weights;
    Weight rho;
    int coxeter_number = 0;
    int dual_coxeter_number = 0;
    int D = 1;
    int L = 1;  // smallest L with L<P,P> in Z
    std::vector<int> highest_root;
    std::vector<int> highest_short_root;
    std::vector<WeylElement> weyl;
    std::size_t w0 = 0;

    const WeylElement& longest() const { return weyl[w0]; }
};

RootDatum build_root_datum(LieType type, int rank, std::size_t weyl_bound = 10000);
const std::vector<WeylElement>& enumerate_weyl(const RootDatum& rd);

Rational pairing(const RootDatum& rd, const Weight& v, const Weight& w);
// <v, alpha_i^vee>
Rational coroot_pairing(const RootDatum& rd, const Weight& v, int i);
Weight simple_root(const RootDatum& rd, int i);
Weight to_fundamental(const RootDatum& rd, const Weight& v);
Weight from_fundamental(const RootDatum& rd, const std::vector<Rational>& c);
Weight from_fundamental(const RootDatum& rd, const std::vector<int>& c);
Weight root_weight(const std::vector<int>& r);

bool in_P(const RootDatum& rd, const Weight& v);
bool in_Q(const Weight& v);
bool in_Pplus(const RootDatum& rd, const Weight& v);

struct WeightPairRaw {
    Weight lambda;
    Weight mu;
};

// w . (lambda, mu) = w(lambda+rho, mu+rho) - (rho, rho), where W acts on
// pairs through s = (lambda+mu)/2 and t = (lambda-mu)/2 as (ws+t, ws-t).
WeightPairRaw dot_action(const RootDatum& rd, const WeylElement& w, const WeightPairRaw& p);

// Throws LatticeError naming the violated inequality.
void check_admissible(const RootDatum& rd, int lprime);
std::vector<int> alcove_theta(const RootDatum& rd, int lprime);
// Dominant weights with <lambda+rho, theta_0> < l', sorted by level then
// descending fundamental-weight coordinates.
std::vector<Weight> alcove(const RootDatum& rd, int lprime);

struct Sublattice {
    int lprime = 0;
    // Lower-triangular integer basis (rows) of (l'Q^vee) cap Q in alpha-coordinates.
    std::vector<std::vector<Integer>> basis;
    Integer quotient_size;  // |Q / (l'Q^vee cap Q)|
    Integer p_mod_q;        // |P / Q|

    Weight canonical_rep(const Weight& v) const;
    bool contains(const Weight& v) const;
    // Every element of Q / sublattice, in lexicographic order of coordinates.
    std::vector<Weight> q_quotient() const;
};

Sublattice sublattice_ops(const RootDatum& rd, int lprime);

// Integer lattice helpers.
using IntMatrix = std::vector<std::vector<Integer>>;
// Basis of {z in Z^m : A z = 0} for an r x m integer matrix A.
IntMatrix integer_kernel(const IntMatrix& a);
// Row-style Hermite form with b_i[j] = 0 for j > i and reduced off-diagonals.
IntMatrix lower_hnf(IntMatrix rows, int n);

std::string weight_to_string(const Weight& v);

}  // namespace modcat
