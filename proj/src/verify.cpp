#include "modcat/verify.hpp"

#include <algorithm>
#include <set>

#include "modcat/fusion.hpp"
#include "modcat/parallel.hpp"
#include "modcat/quantum.hpp"
#include "modcat/reference.hpp"
#include "modcat/symbols.hpp"

namespace modcat {

namespace {

Json entry_json(const CycNum& x) { return to_string(x); }

std::string ratio_text(const CycNum& a, const CycNum& b) {
    if (b.is_zero()) return a.is_zero() ? "0/0" : "inf";
    return to_string(lower_conductor(a / b));
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// gamma in Q^vee: coefficients on the simple coroots alpha_i^vee = 2 alpha_i / (alpha_i, alpha_i).
bool in_coroot_lattice(const RootDatum& rd, const Weight& v) {
    for (int i = 0; i < rd.rank; ++i) {
        Rational c = v[i] * rd.gram[i][i] / 2;
        if (c.get_den() != 1) return false;
    }
    return true;
}

std::vector<WeightPair> canonical_all(const QuantumContext& ctx, const std::vector<WeightPair>& xs) {
    std::vector<WeightPair> out;
    for (const auto& x : xs) out.push_back(canonical_pair(ctx, x));
    return out;
}

Json pair_json(const RootDatum& rd, const WeightPair& p) {
    return Json{{"lambda", weight_to_string(to_fundamental(rd, p.lambda))}, {"mu", weight_to_string(to_fundamental(rd, p.mu))}};
}

// Finds each reference label among the simples; records missing ones.
std::vector<std::size_t> locate(Report& r, const QuantumContext& ctx, const std::vector<WeightPair>& simples,
                                const std::vector<WeightPair>& wanted) {
    std::vector<std::size_t> idx;
    for (const auto& w : wanted) {
        auto it = std::find(simples.begin(), simples.end(), canonical_pair(ctx, w));
        if (it == simples.end())
            r.fail({{"label_missing", pair_json(ctx.rd, w)}});
        else
            idx.push_back(static_cast<std::size_t>(it - simples.begin()));
    }
    return idx;
}

Matrix restrict(const Matrix& s, const std::vector<std::size_t>& idx) {
    Matrix out(idx.size(), std::vector<CycNum>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = s[idx[i]][idx[j]];
    return out;
}

Matrix scaled(const Matrix& m, const CycNum& c) {
    Matrix out = m;
    for (auto& row : out)
        for (auto& x : row) x = c * x;
    return out;
}

}  // namespace

void compare_matrices(Report& r, const std::string& what, const Matrix& got, const Matrix& want) {
    if (got.size() != want.size()) {
        r.fail({{"matrix", what}, {"size", got.size()}, {"expected_size", want.size()}});
        return;
    }
    std::size_t bad = 0;
    for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = 0; j < got[i].size(); ++j)
            if (!(got[i][j] == want[i][j])) {
                ++bad;
                r.fail({{"matrix", what}, {"i", i}, {"j", j}, {"got", entry_json(got[i][j])}, {"expected", entry_json(want[i][j])},
                        {"ratio", ratio_text(got[i][j], want[i][j])}});
            }
    r.details[what] = bad == 0;
}

void compare_vectors(Report& r, const std::string& what, const std::vector<CycNum>& got, const std::vector<CycNum>& want) {
    if (got.size() != want.size()) {
        r.fail({{"vector", what}, {"size", got.size()}, {"expected_size", want.size()}});
        return;
    }
    std::size_t bad = 0;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!(got[i] == want[i])) {
            ++bad;
            r.fail({{"vector", what}, {"i", i}, {"got", entry_json(got[i])}, {"expected", entry_json(want[i])}});
        }
    r.details[what] = bad == 0;
}

bool is_scaled_permutation(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<int> col_count(n, 0);
    for (const auto& row : m) {
        int nz = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!row[j].is_zero()) {
                ++nz;
                ++col_count[j];
            }
        if (nz != 1) return false;
    }
    return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

Report verify_main_theorem(int n, int d, int jobs) {
    Report r;
    r.check = "main_theorem";
    r.params = {{"n", n}, {"d", d}};
    QuantumContext ctx = make_context(LieType::A, n, d);
    const int u = ctx.zeta_power();
    const int m_exp = n + static_cast<int>(ctx.rd.positive_roots.size());
    auto syms = enumerate_symbols(n, d);
    const std::size_t m = syms.size();

    std::vector<WeightPair> labels;
    for (const auto& f : syms) {
        labels.push_back(canonical_pair(ctx, iota(ctx.rd, f)));
        MalleSymbol back = f_from_weightpair(ctx.rd, d, labels.back());
        if (!(back == f)) r.fail({{"iota_roundtrip", to_string(f)}, {"got", to_string(back)}});
    }
    // Transparent objects are identified with the unit, so iota is injective
    // with image of index n+1 in the simples.
    auto simples = canonical_all(ctx, enumerate_simples(ctx));
    std::set<WeightPair> image(labels.begin(), labels.end()), all(simples.begin(), simples.end());
    bool inside = std::includes(all.begin(), all.end(), image.begin(), image.end());
    bool injective = image.size() == m;
    bool index_ok = all.size() == static_cast<std::size_t>(n + 1) * m;
    r.details["iota_injective"] = injective;
    r.details["iota_into_simples"] = inside;
    r.details["simples_per_label"] = m ? all.size() / m : 0;
    if (!(inside && injective && index_ok))
        r.fail({{"iota", "image is not an injective section of the simples"}, {"image", image.size()}, {"simples", all.size()}});

    Matrix malle = malle_s_matrix(syms, u, jobs);
    Matrix quantum(m, std::vector<CycNum>(m));
    parallel_for(
        m,
        [&](std::size_t i) {
            for (std::size_t j = 0; j < m; ++j) {
                int sg = sign_d(syms[i]) * sign_d(syms[j]);
                quantum[i][j] = renormalized_s(ctx, labels[i], labels[j]).scaled(Rational(sg));
            }
        },
        jobs);

    // The i-power convention is the one free choice; test both signs.
    Json candidates = Json::array();
    for (int c : {m_exp, -m_exp}) {
        CycNum ic = pow(ctx.imag_unit, c);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            for (std::size_t j = 0; j < m && ok; ++j) ok = malle[i][j] == ic * quantum[i][j];
        candidates.push_back(Json{{"i_power", c}, {"matches", ok}});
    }
    const int selected = m_exp;
    CycNum ic = pow(ctx.imag_unit, selected);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            CycNum q = ic * quantum[i][j];
            if (!(malle[i][j] == q))
                r.fail({{"f", to_string(syms[i])}, {"g", to_string(syms[j])}, {"malle", entry_json(malle[i][j])},
                        {"quantum", entry_json(q)}, {"ratio", ratio_text(malle[i][j], q)}});
        }
    std::size_t t_bad = 0;
    for (std::size_t i = 0; i < m; ++i) {
        CycNum fr = frobenius(syms[i], u), th = twist(ctx, labels[i]);
        if (!(fr == th)) {
            ++t_bad;
            r.fail({{"f", to_string(syms[i])}, {"frobenius", entry_json(fr)}, {"twist", entry_json(th)}});
        }
    }
    r.details["labels"] = m;
    r.details["T_equal"] = t_bad == 0;
    r.calibration = {{"xi", "zeta_" + std::to_string(ctx.l) + "^" + std::to_string(ctx.xi_exponent)},
                     {"zeta", "zeta_" + std::to_string(d) + "^" + std::to_string(u)},
                     {"imag_unit", "zeta_4"},
                     {"conjugation", "sign_d"},
                     {"i_power_selected", selected},
                     {"i_power_candidates", candidates},
                     {"statement", "S_malle(f,g) = i^c sign_d(f) sign_d(g) S~(iota f, iota g)"}};
    return r;
}

Report verify_ennola(int n, int d) {
    Report r;
    r.check = "ennola";
    r.params = {{"n", n}, {"d", d}};
    QuantumContext ctx = make_context(LieType::A, n, d);
    Weight gamma = ennola_gamma(ctx.rd);
    r.calibration = {{"gamma", weight_to_string(to_fundamental(ctx.rd, gamma))}};
    bool coroot = in_coroot_lattice(ctx.rd, gamma);
    r.details["gamma_in_coroot_lattice"] = coroot;
    if (!coroot) r.fail({{"gamma", "not in Q^vee"}});
    // L(-gamma, gamma)^{(x) d} is the unit.
    WeightPair dth{Rational(-d) * gamma, Rational(d) * gamma};
    WeightPair unit{zero_weight(n), zero_weight(n)};
    bool trivial = canonical_pair(ctx, dth) == unit;
    r.details["d_th_power_trivial"] = trivial;
    if (!trivial) r.fail({{"power", "L(-gamma,gamma)^d is not the unit"}});

    auto syms = enumerate_symbols(n, d);
    std::set<MalleSymbol> images;
    for (const auto& f : syms) {
        MalleSymbol e = ennola(f);
        images.insert(e);
        WeightPair p = iota(ctx.rd, f);
        WeightPair shifted{p.lambda - gamma, p.mu + gamma};
        MalleSymbol g = f_from_weightpair(ctx.rd, d, shifted);
        if (!(g == e)) r.fail({{"f", to_string(f)}, {"ennola", to_string(e)}, {"tensor", to_string(g)}});
        MalleSymbol it = f;
        for (int k = 0; k < d; ++k) it = ennola(it);
        if (!(it == f)) r.fail({{"f", to_string(f)}, {"order", "E^d(f) != f"}});
    }
    r.details["permutation"] = images.size() == syms.size();
    if (images.size() != syms.size()) r.fail({{"ennola", "not a permutation"}});
    r.details["labels"] = syms.size();
    return r;
}

Report verify_cyclic3(int jobs) {
    Report r;
    r.check = "cyclic_3";
    r.params = {{"n", 1}, {"d", 3}};
    const auto& ref = reference("cyclic_3");
    ModularDatum md = malle_datum(1, 3, 1, jobs);
    compare_matrices(r, "S", md.s, reference_s(ref));
    compare_vectors(r, "T", md.t, reference_t(ref));
    r.calibration = {{"zeta", "E(3)"}};
    return r;
}

Report verify_g27(int jobs) {
    Report r;
    r.check = "g27";
    r.params = {{"type", "B"}, {"rank", 2}, {"l", 20}};
    const auto& ref = reference("G27_family");
    QuantumContext ctx = make_context(LieType::B, 2, 10);
    auto simples = canonical_all(ctx, enumerate_simples(ctx));
    Weight w1 = ctx.rd.fundamental_weights[0];
    auto sub = subcategory_by_grading(ctx, simples, {zero_weight(2), Rational(5) * w1});
    r.details["simples"] = sub.size();
    if (sub.size() != 6) r.fail({{"simples", sub.size()}, {"expected", 6}});
    auto idx = locate(r, ctx, sub, reference_labels(ref, ctx.rd));
    if (idx.size() != 6) return r;
    std::vector<WeightPair> labels;
    for (auto i : idx) labels.push_back(sub[i]);
    ModularDatum md = quantum_datum(ctx, labels, jobs);
    CycNum scalar = reference_scalar(ref, ctx.imag_unit);
    compare_vectors(r, "T_C = T", md.t, reference_t(ref));
    compare_matrices(r, "S_C = -sqrt(20) S", md.s, scaled(reference_s(ref), scalar));
    compare_matrices(r, "S_C as displayed", md.s, reference_s_category(ref));
    Matrix s2 = matmul(md.s, md.s);
    bool perm = is_scaled_permutation(s2);
    r.details["S_C^2 scaled permutation"] = perm;
    if (!perm) r.fail({{"S_C^2", "not an invertible scaled permutation"}});
    r.calibration = {{"xi", "zeta_20"}, {"xi^4", "E(5)"}, {"scalar", ref.scalar}};
    return r;
}

Report verify_g24(int jobs) {
    Report r;
    r.check = "g24";
    r.params = {{"type", "B"}, {"rank", 3}, {"l", 28}};
    const auto& ref = reference("G24_family");
    QuantumContext ctx = make_context(LieType::B, 3, 14);
    auto simples = canonical_all(ctx, enumerate_simples(ctx));
    Weight w1 = ctx.rd.fundamental_weights[0];
    auto sub = subcategory_by_grading(ctx, simples, {zero_weight(3), Rational(7) * w1, Rational(14) * w1, Rational(21) * w1});
    r.details["simples"] = sub.size();
    if (sub.size() != 14) r.fail({{"simples", sub.size()}, {"expected", 14}});

    Matrix s = s_matrix(ctx, sub, jobs);
    auto center = symmetric_center(ctx, sub, s);
    r.details["symmetric_center_size"] = center.size();
    if (center.size() != 2) r.fail({{"symmetric_center_size", center.size()}, {"expected", 2}});
    WeightPair j = canonical_pair(ctx, {from_fundamental(ctx.rd, std::vector<int>{14, 0, 2}), from_fundamental(ctx.rd, std::vector<int>{-14, 0, 2})});
    WeightPair unit{zero_weight(3), zero_weight(3)};
    bool j_found = false;
    for (auto c : center) {
        if (sub[c] == unit) continue;
        j_found = sub[c] == j;
        if (!j_found) r.fail({{"transparent", pair_json(ctx.rd, sub[c])}, {"expected", pair_json(ctx.rd, j)}});
    }
    r.details["transparent_object_found"] = j_found;
    if (!j_found) r.fail({{"transparent", "object of dimension -1 not found"}});
    auto [dim_plus, dim_minus] = quantum_dims(ctx, j);
    CycNum theta = twist(ctx, j);
    r.details["transparent_dim"] = to_string(dim_plus);
    r.details["transparent_twist"] = to_string(theta);
    if (!(dim_plus == CycNum(-1))) r.fail({{"transparent_dim", to_string(dim_plus)}});
    if (!(theta == CycNum(1))) r.fail({{"transparent_twist", to_string(theta)}});

    auto preferred = reference_labels(ref, ctx.rd);
    SuperQuotient q = super_quotient(ctx, sub, s, j, preferred);
    r.details["representatives"] = q.representatives.size();
    if (q.representatives.size() != 7) r.fail({{"representatives", q.representatives.size()}, {"expected", 7}});
    auto idx = locate(r, ctx, sub, preferred);
    if (idx.size() != 7) return r;
    for (std::size_t k = 0; k < idx.size() && k < q.representatives.size(); ++k)
        if (q.representatives[k] != idx[k]) r.fail({{"representative", k}, {"got", pair_json(ctx.rd, sub[q.representatives[k]])}});

    Matrix s_hat = restrict(s, idx);
    std::vector<CycNum> t_hat;
    for (auto i : idx) t_hat.push_back(twist(ctx, sub[i]));
    CycNum scalar = reference_scalar(ref, ctx.imag_unit);
    compare_vectors(r, "T_hat = T", t_hat, reference_t(ref));
    compare_matrices(r, "S_hat = i sqrt(28) S", s_hat, scaled(reference_s(ref), scalar));
    compare_matrices(r, "S_hat as displayed", s_hat, reference_s_category(ref));
    r.calibration = {{"xi", "zeta_28"}, {"xi^4", "E(7)"}, {"imag_unit", "xi^7"}, {"scalar", ref.scalar}};
    return r;
}

Report verify_g4(int jobs) {
    Report r;
    r.check = "g4";
    r.params = {{"n", 1}, {"d", 3}};
    const auto& ref = reference("G4_family");
    ModularDatum md = malle_datum(1, 3, 1, jobs);
    Matrix want = reference_s(ref);
    Json found = Json::array();
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> sg(3);
        for (int i = 0; i < 3; ++i) sg[i] = (mask >> i) & 1 ? -1 : 1;
        if (sg[0] != 1) continue;  // D and -D give the same conjugation
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j) ok = md.s[i][j].scaled(Rational(sg[i] * sg[j])) == want[i][j];
        if (ok) found.push_back(sg);
    }
    r.details["sign_vectors"] = found;
    if (found.empty()) r.fail({{"sign_vector", "no +-1 diagonal conjugation matches fourierMat"}});
    compare_vectors(r, "eigenvalues", md.t, reference_t(ref));
    return r;
}

Report verify_counts(int n, int d, int jobs) {
    Report r;
    r.check = "counts";
    r.params = {{"n", n}, {"d", d}};
    long long symbols_expected = ipow(d, n) * binomial(d - 1, n) / (n + 1);
    long long simples_expected = ipow(d, n) * binomial(d - 1, n);
    long long symbols = psi_sharp_count(n, d);
    long long listed = static_cast<long long>(enumerate_symbols(n, d).size());
    QuantumContext ctx = make_context(LieType::A, n, d);
    auto simples = enumerate_simples(ctx);
    Matrix s = s_matrix(ctx, simples, jobs);
    auto center = symmetric_center_size(ctx, simples, s);
    r.details = {{"symbols", listed},
                 {"symbols_expected", symbols_expected},
                 {"simples", simples.size()},
                 {"simples_expected", simples_expected},
                 {"symmetric_center", center},
                 {"symmetric_center_expected", n + 1}};
    if (symbols != symbols_expected || listed != symbols_expected) r.fail({{"symbols", listed}, {"expected", symbols_expected}});
    if (static_cast<long long>(simples.size()) != simples_expected) r.fail({{"simples", simples.size()}, {"expected", simples_expected}});
    if (center != static_cast<std::size_t>(n + 1)) r.fail({{"symmetric_center", center}, {"expected", n + 1}});
    return r;
}

Report verify_sl2z(int n, int d, int jobs) {
    Report r = sl2z_relations(malle_datum(n, d, 1, jobs));
    r.params = {{"n", n}, {"d", d}};
    return r;
}

Report verify_cuntz(int n, int d, int jobs) {
    Report r;
    r.check = "cuntz";
    r.params = {{"n", n}, {"d", d}};
    ModularDatum md = malle_datum(n, d, 1, jobs);
    auto syms = enumerate_symbols(n, d);
    auto sp = special_symbols(n, d).first;
    auto unit = static_cast<std::size_t>(std::find(syms.begin(), syms.end(), sp) - syms.begin());
    FusionRing ring;
    try {
        ring = verlinde(md, unit, jobs);
    } catch (const NonIntegralCoefficient& e) {
        r.fail({{"f", e.f}, {"g", e.g}, {"h", e.h}, {"value", e.value}});
        return r;
    }
    r.details["integral"] = true;
    r.merge("ring_axioms", check_ring_axioms(ring));
    std::int64_t lowest = min_coefficient(ring);
    r.details["min_coefficient"] = lowest;
    r.details["has_negative"] = lowest < 0;
    if (lowest >= 0) r.fail({{"negative", "no strictly negative structure constant"}});
    r.merge("associativity", check_associativity(ring, false, jobs));
    r.merge("associativity_abs", check_associativity(ring, true, jobs));
    // Exploratory: recorded only.
    std::vector<int> signs;
    for (const auto& f : syms) signs.push_back(sign_d(f));
    Report pos = sign_rescaled_positivity(ring, signs);
    r.details["sign_rescaled_positivity"] = {{"passed", pos.passed}, {"violation_count", pos.violation_count},
                                             {"first_violations", pos.violations}};
    r.calibration = {{"unit", to_string(sp)}};
    return r;
}

}  // namespace modcat
