#include <doctest.h>

#include <random>

#include "modcat/quantum.hpp"
#include "modcat/reference.hpp"
#include "oracle.hpp"

using namespace modcat;

TEST_SUITE("quantum") {

TEST_CASE("context parameters") {
    QuantumContext a = make_context(LieType::A, 1, 3);
    CHECK(a.l == 6);
    CHECK(a.xi_exponent == -1);
    CHECK(a.conductor == 12);
    CHECK(a.zeta_power() == 1);
    CHECK(a.imag_unit == root_of_unity(4, 1));
    QuantumContext b = make_context(LieType::B, 3, 14);
    CHECK(b.conductor == 56);
    CHECK(b.imag_unit == b.xi_power(Rational(7)));
    CHECK(pow(b.imag_unit, 2) == CycNum(-1));
    // xi^4 = zeta_7 for the G24 parameters.
    CHECK(lower_conductor(b.xi_power(Rational(4))) == root_of_unity(7, 1));
    CHECK_THROWS_WITH_AS(make_context(LieType::A, 3, 3), doctest::Contains("d >= n+1 required"), QuantumError);
    CHECK_THROWS_AS(make_context(LieType::A, 1, 3, 2), QuantumError);
}

TEST_CASE("simple counts") {
    for (auto [n, d, count] : std::vector<std::tuple<int, int, std::size_t>>{{1, 3, 6}, {1, 4, 12}, {2, 4, 48}, {1, 5, 20}, {2, 5, 150}})
        CHECK(enumerate_simples(make_context(LieType::A, n, d)).size() == count);
    QuantumContext c = make_context(LieType::A, 1, 3);
    auto simples = enumerate_simples(c);
    CHECK(symmetric_center_size(c, simples, s_matrix(c, simples)) == 2);
}

TEST_CASE("s_entry and twist are constant on sublattice orbits") {
    std::mt19937_64 rng(17);
    for (auto [t, n, d] : std::vector<std::tuple<LieType, int, int>>{{LieType::A, 1, 4}, {LieType::A, 2, 4}, {LieType::B, 2, 10}}) {
        QuantumContext ctx = make_context(t, n, d);
        auto simples = enumerate_simples(ctx);
        std::uniform_int_distribution<std::size_t> pick(0, simples.size() - 1);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (int trial = 0; trial < 25; ++trial) {
            const WeightPair& a = simples[pick(rng)];
            const WeightPair& b = simples[pick(rng)];
            Weight nu = zero_weight(n);
            for (const auto& row : ctx.sub.basis) {
                int c = coef(rng);
                for (int i = 0; i < n; ++i) nu[i] += Rational(c * row[i]);
            }
            WeightPair shifted{a.lambda + nu, a.mu - nu};
            REQUIRE(s_entry(ctx, shifted, b) == s_entry(ctx, a, b));
            REQUIRE(s_entry(ctx, b, shifted) == s_entry(ctx, b, a));
            REQUIRE(twist(ctx, shifted) == twist(ctx, a));
            REQUIRE(canonical_pair(ctx, shifted) == canonical_pair(ctx, a));
        }
    }
}

TEST_CASE("unnormalized S is symmetric") {
    QuantumContext ctx = make_context(LieType::A, 2, 4);
    auto simples = enumerate_simples(ctx);
    Matrix s = s_matrix(ctx, simples, 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) REQUIRE(s[i][j] == s[j][i]);
    CHECK(s_matrix(ctx, simples, 3) == s);
}

TEST_CASE("G27 and G24 matrices agree with floating point evaluation") {
    for (auto [key, name, type, rank, d] : std::vector<std::tuple<std::string, std::string, LieType, int, int>>{
             {"G27", "G27_family", LieType::B, 2, 10}, {"G24", "G24_family", LieType::B, 3, 14}}) {
        QuantumContext ctx = make_context(type, rank, d);
        auto labels = reference_labels(reference(name), ctx.rd);
        const auto& o = oracle()["quantum"][key];
        for (std::size_t i = 0; i < labels.size(); ++i) {
            CHECK(close(twist(ctx, labels[i]).to_complex(), oracle_complex(o["T"][i])));
            for (std::size_t j = 0; j < labels.size(); ++j)
                CHECK(close(s_entry(ctx, labels[i], labels[j]).to_complex(), oracle_complex(o["S"][i][j])));
        }
    }
}

TEST_CASE("grading subcategories") {
    QuantumContext ctx = make_context(LieType::B, 2, 10);
    auto simples = enumerate_simples(ctx);
    Weight w1 = ctx.rd.fundamental_weights[0];
    CHECK(subcategory_by_grading(ctx, simples, {zero_weight(2), Rational(5) * w1}).size() == 6);
    CHECK_THROWS_AS(subcategory_by_grading(ctx, simples, {zero_weight(2), Rational(3) * w1}), QuantumError);
    CHECK_THROWS_AS(subcategory_by_grading(ctx, simples, {Rational(5) * w1}), QuantumError);
}

}
