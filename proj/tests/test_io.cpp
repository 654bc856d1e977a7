#include <doctest.h>

#include <random>

#include "modcat/io.hpp"
#include "modcat/quantum.hpp"
#include "modcat/symbols.hpp"

using namespace modcat;

TEST_SUITE("io") {

TEST_CASE("cyclotomic JSON uses the smallest conductor") {
    Json j = cyc_to_json(embed(root_of_unity(3, 2), 12));
    CHECK(j["conductor"] == 3);
    CHECK(j["coeffs"] == Json::array({"-1", "-1"}));
    CHECK(cyc_from_json(j) == root_of_unity(3, 2));
    CHECK(cyc_to_json(CycNum(Rational(-5, 2))) == Json{{"conductor", 1}, {"coeffs", {"-5/2"}}});
    CHECK(cyc_from_json(cyc_to_json(sqrt_of_prime(-7))) == sqrt_of_prime(-7));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 200; ++t) {
        CycNum x(0);
        for (std::uint32_t k = 0; k < 20; ++k) x += root_of_unity(20, k).scaled(Rational(c(rng), 3));
        REQUIRE(cyc_from_json(cyc_to_json(x)) == x);
    }
}

TEST_CASE("malformed input raises FormatError") {
    CHECK_THROWS_AS(cyc_from_json(Json{{"conductor", 5}, {"coeffs", {"1"}}}), FormatError);
    CHECK_THROWS_AS(cyc_from_json(Json{{"conductor", 0}, {"coeffs", Json::array()}}), FormatError);
    CHECK_THROWS_AS(cyc_from_json(Json{{"coeffs", {"1"}}}), FormatError);
    CHECK_THROWS_AS(cyc_from_json(Json{{"conductor", 1}, {"coeffs", {"x"}}}), FormatError);
    CHECK_THROWS_AS(parse_weight("1,2"), FormatError);
    CHECK_THROWS_AS(parse_weight("[1,a]"), FormatError);
    CHECK(parse_weight("[1/2,-3]") == Weight{Rational(1, 2), Rational(-3)});
    Json bad = datum_to_json(malle_datum(1, 3));
    bad["S"].erase(0);
    CHECK_THROWS_AS(datum_from_json(bad), FormatError);
    bad = datum_to_json(malle_datum(1, 3));
    bad["normalization"] = "sideways";
    CHECK_THROWS_AS(datum_from_json(bad), FormatError);
    CHECK_THROWS_AS(fusion_from_json(Json{{"labels", Json::array()}, {"unit_index", 0}, {"N", {{{"f", 1}, {"g", 0}, {"h", 0}, {"N", 1}}}}}),
                    FormatError);
}

TEST_CASE("modular data round trip") {
    ModularDatum md = malle_datum(2, 4);
    ModularDatum back = datum_from_json(datum_to_json(md));
    CHECK(back.labels == md.labels);
    CHECK(back.s == md.s);
    CHECK(back.t == md.t);
    CHECK(datum_to_json(back) == datum_to_json(md));

    QuantumContext ctx = make_context(LieType::A, 1, 3);
    auto simples = enumerate_simples(ctx);
    ModularDatum q;
    for (const auto& p : simples) q.labels.push_back(p);
    q.s = s_matrix(ctx, simples);
    for (const auto& p : simples) q.t.push_back(twist(ctx, p));
    q.params = {"A", 1, 6};
    ModularDatum qb = datum_from_json(datum_to_json(q));
    CHECK(qb.labels == q.labels);
    CHECK(qb.s == q.s);
}

TEST_CASE("CSV and LaTeX layout") {
    ModularDatum md = malle_datum(1, 3);
    std::string csv = datum_to_csv(md);
    CHECK(csv.rfind("f_index,g_index,conductor,coeffs\n", 0) == 0);
    std::size_t lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == 1 + md.size() * md.size() + md.size());
    CHECK(csv.find("\n0,T,") != std::string::npos);
    std::string tex = datum_to_latex(md);
    CHECK(tex.rfind("% labels:", 0) == 0);
    CHECK(tex.find("\\mathbb{S} = \\begin{bmatrix}") != std::string::npos);
    CHECK(tex.find("\\zeta_{3}^{2}") != std::string::npos);
}

TEST_CASE("fusion serialization") {
    ModularDatum md = malle_datum(1, 4);
    FusionRing ring;
    ring.labels = md.labels;
    ring.unit_index = 0;
    ring.n_tensor.assign(md.size() * md.size() * md.size(), 0);
    ring.n_tensor[5] = -2;
    ring.n_tensor[17] = 3;
    FusionRing back = fusion_from_json(fusion_to_json(ring));
    CHECK(back.n_tensor == ring.n_tensor);
    CHECK(fusion_to_csv(ring) == "f,g,h,N\n0,0,5,-2\n0,2,5,3\n");
}

}
