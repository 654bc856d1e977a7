#include <doctest.h>

#include <random>

#include "modcat/cyclo.hpp"
#include "oracle.hpp"

using namespace modcat;

namespace {

const std::uint32_t kConductors[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 21, 28};

CycNum random_cyc(std::mt19937_64& rng, std::uint32_t n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), pick(0, 2);
    std::vector<Rational> c(n);
    for (std::uint32_t k = 0; k < n; ++k)
        if (pick(rng) == 0) c[k] = Rational(num(rng), den(rng));
    CycNum x(0);
    for (std::uint32_t k = 0; k < n; ++k) {
        c[k].canonicalize();
        if (c[k] != 0) x += root_of_unity(n, k).scaled(c[k]);
    }
    return x;
}

}  // namespace

TEST_SUITE("cyclo") {

TEST_CASE("cyclotomic polynomials match sympy") {
    for (const auto& [key, coeffs] : oracle()["cyclotomic_polynomials"].items()) {
        auto n = static_cast<std::uint32_t>(std::stoul(key));
        const auto& ours = cyclotomic_polynomial(n);
        REQUIRE(ours.size() == coeffs.size());
        for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i] == Integer(coeffs[i].get<long>()));
    }
    for (const auto& [key, phi] : oracle()["totient"].items()) CHECK(euler_phi(static_cast<std::uint32_t>(std::stoul(key))) == phi.get<std::uint32_t>());
}

TEST_CASE("frozen values") {
    CycNum z3 = root_of_unity(3, 1);
    CHECK(z3 * z3 * z3 == CycNum(1));
    CHECK(z3.inverse() == CycNum(-1) - z3);
    CHECK(CycNum(1) + z3 + z3 * z3 == CycNum(0));
    CHECK(to_string(z3 * z3) == "E(3)^2");
    CHECK(to_string(CycNum(-1) - z3) == "E(3)^2");
    CHECK(to_latex(root_of_unity(5, 2)) == "\\zeta_{5}^{2}");
    CHECK(to_string(sqrt_of_prime(5)) == "E(5) - E(5)^2 - E(5)^3 + E(5)^4");
    CHECK(sqrt_of_prime(-7) * sqrt_of_prime(-7) == CycNum(-7));
    CHECK(sqrt_of_prime(7) * sqrt_of_prime(7) == CycNum(7));
    CHECK(std::abs(sqrt_of_prime(28).to_complex() - std::complex<double>(std::sqrt(28.0), 0)) < 1e-12);
    CHECK(std::abs(sqrt_of_prime(-3).to_complex() - std::complex<double>(0, std::sqrt(3.0))) < 1e-12);
    // A value of conductor 12 written at conductor 60.
    CycNum w = embed(root_of_unity(12, 5), 60);
    CHECK(w.conductor() == 60);
    CHECK(lower_conductor(w).conductor() == 12);
    CHECK(lower_conductor(embed(CycNum(Rational(3, 7)), 35)).conductor() == 1);
    CHECK(lower_conductor(root_of_unity(4, 2)).conductor() == 1);
    CHECK(CycNum(Rational(2, 4)).rational_part() == Rational(1, 2));
}

TEST_CASE("parser") {
    CHECK(parse_cyc("(1-E(3)^2)/3") == (CycNum(1) - root_of_unity(3, 2)).scaled(Rational(1, 3)));
    CHECK(parse_cyc("-1/3*E(3)+E(3)^2") == root_of_unity(3, 1).scaled(Rational(-1, 3)) + root_of_unity(3, 2));
    CHECK(parse_cyc("2*ER(5)") == sqrt_of_prime(5).scaled(Rational(2)));
    CHECK(parse_cyc("E(4)^-1") == root_of_unity(4, 3));
    CHECK(parse_cyc("2*(E(5)+1)") == root_of_unity(5, 1).scaled(Rational(2)) + CycNum(2));
    CHECK_THROWS_AS(parse_cyc("E(3"), CycloError);
    CHECK_THROWS_AS(parse_cyc("1/0"), DivisionByZero);
    CHECK_THROWS_AS(CycNum(0).inverse(), DivisionByZero);
}

TEST_CASE("field axioms and conjugation on random inputs") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kConductors) - 1);
    const int cases = 10000;
    int checked = 0;
    for (int t = 0; t < cases; ++t) {
        std::uint32_t n1 = kConductors[pick(rng)], n2 = kConductors[pick(rng)], n3 = kConductors[pick(rng)];
        CycNum a = random_cyc(rng, n1), b = random_cyc(rng, n2), c = random_cyc(rng, n3);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == CycNum(0));
        REQUIRE(a * CycNum(1) == a);
        if (!a.is_zero()) REQUIRE(a * a.inverse() == CycNum(1));
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
        REQUIRE(conjugate(a * b) == conjugate(a) * conjugate(b));
        REQUIRE(conjugate(a + b) == conjugate(a) + conjugate(b));
        REQUIRE(conjugate(conjugate(a)) == a);
        REQUIRE(galois(a * b, 11) == galois(a, 11) * galois(b, 11));
        REQUIRE(lower_conductor(a) == a);
        REQUIRE(parse_cyc(to_string(a)) == a);
        auto diff = (a * b).to_complex() - a.to_complex() * b.to_complex();
        REQUIRE(std::abs(diff) < 1e-8);
        REQUIRE(std::abs(conjugate(a).to_complex() - std::conj(a.to_complex())) < 1e-8);
        ++checked;
    }
    CHECK(checked == cases);
}

TEST_CASE("accumulator and dot agree with plain sums") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<CycNum> a, b;
        CycNum plain(0);
        for (int i = 0; i < 6; ++i) {
            a.push_back(random_cyc(rng, 12));
            b.push_back(random_cyc(rng, 20));
            plain += a.back() * b.back();
        }
        REQUIRE(dot(a, b) == plain);
    }
    CycAccumulator acc(12);
    for (int k = 0; k < 12; ++k) acc.add_power(k, 1);
    CHECK(acc.value().is_zero());
    acc.add_power(-1, 2);
    CHECK(acc.value() == root_of_unity(12, 11).scaled(Rational(2)));
}

}
