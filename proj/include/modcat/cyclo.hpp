#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace modcat {

using Rational = mpq_class;
using Integer = mpz_class;

class CycloError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

// Element of Q(zeta_N). Stored as num / den with num reduced modulo the N-th
// cyclotomic polynomial (length phi(N)) and gcd(content(num), den) = 1.
class CycNum {
public:
    CycNum();
    explicit CycNum(std::int64_t n);
    explicit CycNum(const Rational& q, std::uint32_t conductor = 1);

    static CycNum from_power_basis(std::uint32_t conductor, const std::vector<Rational>& coeffs);
    // (sum_k full[k] zeta^k) / den for an integer polynomial of any length.
    static CycNum from_integer_poly(std::uint32_t conductor, const std::vector<Integer>& full, const Integer& den);

    std::uint32_t conductor() const { return n_; }
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    // Coefficients in the reduced power basis 1, z, ..., z^{phi(N)-1}.
    std::vector<Rational> coeffs() const;

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    Rational rational_part() const;

    std::complex<double> to_complex() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b);

    CycNum inverse() const;
    CycNum scaled(const Rational& q) const;

private:
    friend class CycAccumulator;
    friend CycNum embed(const CycNum& a, std::uint32_t m);
    void normalize();

    std::uint32_t n_ = 1;
    std::vector<Integer> num_;
    Integer den_ = 1;
};

std::uint32_t euler_phi(std::uint32_t n);
std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b);

// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(std::uint32_t n);

// Row k holds the coefficients of x^k mod Phi_N, k in [0, N).
const std::vector<std::vector<std::int64_t>>& power_table(std::uint32_t n);

CycNum root_of_unity(std::uint32_t n, std::int64_t k);
CycNum embed(const CycNum& a, std::uint32_t m);
CycNum conjugate(const CycNum& a);
// The automorphism zeta_N -> zeta_N^u, gcd(u, N) = 1.
CycNum galois(const CycNum& a, std::int64_t u);
// The same element at the smallest conductor containing it.
CycNum lower_conductor(const CycNum& a);
CycNum pow(const CycNum& a, std::int64_t e);

// Sums of integer multiples of zeta_N^k, reduced once at the end.
class CycAccumulator {
public:
    explicit CycAccumulator(std::uint32_t n);
    void add_power(std::int64_t k, std::int64_t mult = 1);
    CycNum value() const;
    std::uint32_t conductor() const { return n_; }

private:
    std::uint32_t n_;
    std::vector<std::int64_t> counts_;
};

// sum_k a[k]*b[k] with one normalization at the end. All entries are first
// embedded at a common conductor.
CycNum dot(std::span<const CycNum> a, std::span<const CycNum> b);

// Parses expressions such as "(1-E(3)^2)/3", "2*ER(5)", "-1/3*E(3)+E(3)^2".
// E(N) is zeta_N; ER(n) is the square root of n (positive real or positive
// imaginary) for n = +-1 or +-p with p an odd prime.
CycNum parse_cyc(const std::string& text);
CycNum sqrt_of_prime(std::int64_t n);

std::string to_string(const CycNum& a);
std::string to_latex(const CycNum& a);

}  // namespace modcat
