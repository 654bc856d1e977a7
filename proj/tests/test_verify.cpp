#include <doctest.h>

#include "modcat/reference.hpp"
#include "modcat/verify.hpp"
#include "oracle.hpp"

using namespace modcat;

TEST_SUITE("verify") {

TEST_CASE("reference tables reparse to themselves") {
    for (const auto& r : reference_data()) {
        CAPTURE(r.name);
        Matrix s = reference_s(r);
        CHECK(s.size() == r.s_text.size());
        CHECK(reference_t(r).size() == r.t_text.size());
        // Rendering every entry canonically and parsing it back is the identity.
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) REQUIRE(parse_cyc(to_string(s[i][j])) == s[i][j]);
        CHECK(checksum(r) == checksum(r));
        CHECK_FALSE(canonical_text(r).empty());
    }
    CHECK_THROWS(reference("no_such_family"));
}

TEST_CASE("frozen reference checksums") {
    // Any edit to a transcribed table changes these.
    CHECK(checksum(reference("cyclic_3")) == 1615935808105332215ull);
    CHECK(checksum(reference("G4_family")) == 6150000868988307610ull);
    CHECK(checksum(reference("G27_family")) == 1959201345365736854ull);
    CHECK(checksum(reference("G24_family")) == 6636731516178076741ull);
}

TEST_CASE("reference S matrices are unitary") {
    for (const auto& name : {"cyclic_3", "G4_family", "G27_family", "G24_family"}) {
        CAPTURE(name);
        Matrix s = reference_s(reference(name));
        CHECK(is_identity(matmul(s, conjugate_transpose(s))));
    }
}

TEST_CASE("all checks pass on the small grid") {
    CHECK(verify_cyclic3().passed);
    CHECK(verify_g4().passed);
    CHECK(verify_g27().passed);
    CHECK(verify_g24().passed);
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}}) {
        CAPTURE(n);
        CAPTURE(d);
        CHECK(verify_main_theorem(n, d).passed);
        CHECK(verify_ennola(n, d).passed);
        CHECK(verify_counts(n, d).passed);
        CHECK(verify_sl2z(n, d).passed);
        CHECK(verify_cuntz(n, d).passed);
    }
}

TEST_CASE("reports are deterministic across job counts") {
    CHECK(to_json(verify_main_theorem(2, 4, 1)).dump() == to_json(verify_main_theorem(2, 4, 3)).dump());
    CHECK(to_json(verify_cuntz(1, 4, 1)).dump() == to_json(verify_cuntz(1, 4, 2)).dump());
}

TEST_CASE("comparison helpers") {
    Report r;
    Matrix a = identity_matrix(2), b = identity_matrix(2);
    compare_matrices(r, "S", a, b);
    CHECK(r.passed);
    b[0][1] = CycNum(1);
    compare_matrices(r, "S", a, b);
    CHECK_FALSE(r.passed);
    CHECK(r.violation_count == 1);
    CHECK(is_scaled_permutation(Matrix{{CycNum(0), CycNum(2)}, {root_of_unity(3, 1), CycNum(0)}}));
    CHECK_FALSE(is_scaled_permutation(b));
    Report v;
    compare_vectors(v, "T", {CycNum(1)}, {CycNum(-1)});
    CHECK_FALSE(v.passed);
}

TEST_CASE("violation cap") {
    Report r;
    r.violation_cap = 3;
    for (int i = 0; i < 10; ++i) r.fail({{"i", i}});
    Json j = to_json(r);
    CHECK(j["violations"].size() == 3u);
    CHECK(j["violation_count"] == 10);
    Report outer;
    outer.merge("inner", r);
    CHECK_FALSE(outer.passed);
    CHECK(outer.details.contains("inner"));
}

}
