#include <doctest.h>

#include <set>

#include "modcat/symbols.hpp"
#include "oracle.hpp"

using namespace modcat;

namespace {

std::vector<MalleSymbol> oracle_symbols(int n, int d) {
    std::vector<MalleSymbol> out;
    for (const auto& j : oracle()["malle"][std::to_string(n) + "," + std::to_string(d)]["labels"])
        out.push_back(MalleSymbol{n, d, j["f"].get<std::vector<int>>(), j["k"].get<std::vector<int>>()});
    return out;
}

const std::vector<std::pair<int, int>> kFamilies = {{1, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}};

}  // namespace

TEST_SUITE("symbols") {

TEST_CASE("enumeration matches the independent listing") {
    for (auto [n, d] : kFamilies) {
        CAPTURE(n);
        CAPTURE(d);
        auto syms = enumerate_symbols(n, d);
        CHECK(syms == oracle_symbols(n, d));
        CHECK(static_cast<long long>(syms.size()) == psi_sharp_count(n, d));
        CHECK(std::is_sorted(syms.begin(), syms.end()));
    }
    // C(d, n+1) d^{n-1}
    CHECK(psi_sharp_count(1, 3) == 3);
    CHECK(psi_sharp_count(2, 5) == 50);
    CHECK(psi_sharp_count(3, 6) == 15 * 36);
}

TEST_CASE("Frobenius eigenvalues") {
    for (auto [n, d] : kFamilies) {
        auto syms = enumerate_symbols(n, d);
        auto exps = oracle()["malle"][std::to_string(n) + "," + std::to_string(d)]["frobenius_exponents"].get<std::vector<int>>();
        REQUIRE(exps.size() == syms.size());
        for (std::size_t i = 0; i < syms.size(); ++i) {
            CHECK(frobenius_exponent(syms[i]) == exps[i]);
            CHECK(frobenius(syms[i]) == root_of_unity(static_cast<std::uint32_t>(d), exps[i]));
            CHECK(frobenius_zeta_star(syms[i]) == frobenius(syms[i]));
            CHECK(frobenius_zeta_star(syms[i], d - 1) == frobenius(syms[i], d - 1));
        }
    }
}

TEST_CASE("pairing identity behind the rewritten formula") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}}) {
        RootDatum rd = build_root_datum(LieType::A, n);
        auto syms = enumerate_symbols(n, d);
        Weight two_rho = Rational(2) * rd.rho;
        for (const auto& f : syms)
            for (const auto& g : syms) {
                WeightPair a = iota(rd, f), b = iota(rd, g);
                Rational lhs = pairing(rd, a.lambda + two_rho, b.mu) + pairing(rd, b.lambda + two_rho, a.mu);
                Rational rhs(0);
                for (int i = 1; i <= n; ++i) {
                    rhs -= Rational(static_cast<long>((f.k[i - 1] - f.f[i - 1]) * partial_block(g, i)));
                    rhs -= Rational(static_cast<long>((g.k[i - 1] - g.f[i - 1]) * partial_block(f, i)));
                }
                CAPTURE(to_string(f));
                CAPTURE(to_string(g));
                // Holds in the exponent of xi (order 2d) with zeta = xi^{-2}.
                Rational gap = (lhs - Rational(2) * rhs) / (2 * d);
                REQUIRE(gap.get_den() == 1);
            }
    }
}

TEST_CASE("rewritten formula against the exterior power form") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}}) {
        auto syms = enumerate_symbols(n, d);
        for (const auto& f : syms)
            for (const auto& g : syms) {
                CycNum lemma = malle_s_entry_lemma(f, g).scaled(Rational(epsilon(f) * epsilon(g)));
                REQUIRE(malle_s_entry(f, g) == lemma);
            }
    }
}

TEST_CASE("S against the determinant evaluation") {
    for (auto [n, d] : kFamilies) {
        const auto& o = oracle()["malle"][std::to_string(n) + "," + std::to_string(d)];
        auto syms = enumerate_symbols(n, d);
        CAPTURE(n);
        CAPTURE(d);
        auto want = [&](std::size_t i, std::size_t j) { return double(epsilon(syms[i]) * epsilon(syms[j])); };
        if (o.contains("S_determinant_form")) {
            for (std::size_t i = 0; i < syms.size(); ++i)
                for (std::size_t j = 0; j < syms.size(); ++j)
                    REQUIRE(close(malle_s_entry(syms[i], syms[j]).to_complex(), want(i, j) * oracle_complex(o["S_determinant_form"][i][j])));
        } else {
            for (std::size_t j = 0; j < syms.size(); ++j) {
                REQUIRE(close(malle_s_entry(syms[0], syms[j]).to_complex(), want(0, j) * oracle_complex(o["S_determinant_form_row0"][j])));
                REQUIRE(close(malle_s_entry(syms[j], syms[j]).to_complex(), oracle_complex(o["S_determinant_form_diag"][j])));
            }
        }
    }
}

TEST_CASE("S is symmetric and unitary for (2,4)") {
    ModularDatum md = malle_datum(2, 4);
    Matrix prod = matmul(md.s, conjugate_transpose(md.s));
    CHECK(is_identity(prod));
    for (std::size_t i = 0; i < md.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) REQUIRE(md.s[i][j] == md.s[j][i]);
}

TEST_CASE("Ennola permutes the family") {
    for (auto [n, d] : kFamilies) {
        auto syms = enumerate_symbols(n, d);
        std::set<MalleSymbol> image;
        for (const auto& s : syms) {
            MalleSymbol e = ennola(s);
            CHECK(in_psi_sharp(e));
            image.insert(e);
        }
        CHECK(image.size() == syms.size());
    }
}

TEST_CASE("iota round trip and special symbols") {
    for (auto [n, d] : kFamilies) {
        RootDatum rd = build_root_datum(LieType::A, n);
        for (const auto& s : enumerate_symbols(n, d)) REQUIRE(f_from_weightpair(rd, d, iota(rd, s)) == s);
        auto [sp, sp2] = special_symbols(n, d);
        CHECK(in_psi_sharp(sp));
        CHECK(in_psi_sharp(sp2));
        auto syms = enumerate_symbols(n, d);
        auto unit = oracle()["malle"][std::to_string(n) + "," + std::to_string(d)]["unit_index"].get<std::size_t>();
        CHECK(syms[unit] == sp);
    }
    CHECK_THROWS_AS(iota(build_root_datum(LieType::A, 2), MalleSymbol{1, 3, {0, 1}, {1}}), SymbolError);
}

TEST_CASE("validation") {
    CHECK_NOTHROW(validate_symbol(MalleSymbol{1, 3, {0, 1}, {1}}));
    CHECK_THROWS_AS(validate_symbol(MalleSymbol{1, 3, {1, 0}, {1}}), SymbolError);
    CHECK_THROWS_AS(validate_symbol(MalleSymbol{1, 3, {0, 3}, {1}}), SymbolError);
    CHECK_THROWS_AS(validate_symbol(MalleSymbol{1, 3, {0, 1}, {}}), SymbolError);
    CHECK_THROWS_AS(validate_symbol(MalleSymbol{1, 3, {0, 1}, {4}}), SymbolError);
    CHECK(res(-1, 5) == 4);
    CHECK(res(10, 5) == 0);
}

TEST_CASE("d-symbol and tableau") {
    for (const auto& s : enumerate_symbols(2, 4)) {
        auto rows = d_symbol(s);
        CHECK(rows.size() == 4u);
        CHECK(!tableau(s).empty());
        CHECK(tableau(s) == tableau(s));
    }
}

}
