#include "modcat/reference.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modcat {

namespace {

// sqrt(-7) as written next to the G24 matrix.
const std::string R7 = "(E(7)+E(7)^2-E(7)^3+E(7)^4-E(7)^5-E(7)^6)";
const std::string X5 = "(-E(5)^4+E(5)^3+E(5)^2-E(5))";
const std::string Y5 = "(E(5)^4-E(5)^3-E(5)^2+E(5))";

std::string neg(const std::string& s) { return "-" + s; }
std::string times(int k, const std::string& s) { return std::to_string(k) + "*" + s; }

std::vector<ReferenceDatum> build() {
    std::vector<ReferenceDatum> out;

    ReferenceDatum c3;
    c3.name = "cyclic_3";
    c3.prefactor = "1/3";
    c3.s_text = {{"1-E(3)", "1-E(3)^2", "E(3)-E(3)^2"},
                 {"1-E(3)^2", "1-E(3)", "E(3)^2-E(3)"},
                 {"E(3)-E(3)^2", "E(3)^2-E(3)", "E(3)-E(3)^2"}};
    c3.t_text = {"1", "1", "E(3)^2"};
    out.push_back(c3);

    ReferenceDatum g4;
    g4.name = "G4_family";
    g4.prefactor = "1";
    g4.s_text = {{"-2/3*E(3)-1/3*E(3)^2", "-1/3*E(3)-2/3*E(3)^2", "-1/3*E(3)+1/3*E(3)^2"},
                 {"-1/3*E(3)-2/3*E(3)^2", "-2/3*E(3)-1/3*E(3)^2", "1/3*E(3)-1/3*E(3)^2"},
                 {"-1/3*E(3)+1/3*E(3)^2", "1/3*E(3)-1/3*E(3)^2", "1/3*E(3)-1/3*E(3)^2"}};
    g4.t_text = {"1", "1", "E(3)^2"};
    out.push_back(g4);

    ReferenceDatum g27;
    g27.name = "G27_family";
    g27.prefactor = "1/10";
    const std::string a = "2*(3*E(5)^4+2*E(5)^3+2*E(5)^2+3*E(5))";
    const std::string b = "2*(-2*E(5)^4-3*E(5)^3-3*E(5)^2-2*E(5))";
    g27.s_text = {{X5, X5, times(2, X5), times(2, X5), "-5", "-5"},
                  {X5, X5, times(2, X5), times(2, X5), "5", "5"},
                  {times(2, X5), times(2, X5), a, b, "0", "0"},
                  {times(2, X5), times(2, X5), b, a, "0", "0"},
                  {"-5", "5", "0", "0", "5", "-5"},
                  {"-5", "5", "0", "0", "-5", "5"}};
    g27.t_text = {"1", "1", "E(5)^3", "E(5)^2", "-1", "1"};
    const std::string p = "2*E(5)^4+2*E(5)", q = "2*E(5)^3+2*E(5)^2";
    g27.s_category = {{"1", "1", "2", "2", Y5, Y5},
                      {"1", "1", "2", "2", neg(Y5), neg(Y5)},
                      {"2", "2", p, q, "0", "0"},
                      {"2", "2", q, p, "0", "0"},
                      {Y5, neg(Y5), "0", "0", neg(Y5), Y5},
                      {Y5, neg(Y5), "0", "0", Y5, neg(Y5)}};
    g27.scalar = "-2*ER(5)";
    g27.label_order = {{{0, 0}, {0, 0}}, {{0, 2}, {0, 2}}, {{2, 0}, {2, 0}},
                       {{0, 1}, {0, 1}}, {{6, 1}, {-4, 1}}, {{6, 0}, {-4, 0}}};
    out.push_back(g27);

    ReferenceDatum g24;
    g24.name = "G24_family";
    g24.prefactor = "1/14";
    const std::string A = "2*E(7)^6+4*E(7)^4-4*E(7)^3-2*E(7)";
    const std::string B = "-4*E(7)^6+2*E(7)^5-2*E(7)^2+4*E(7)";
    const std::string C = "-4*E(7)^5-2*E(7)^4+2*E(7)^3+4*E(7)^2";
    const std::string m2r = times(-2, R7), p2r = times(2, R7);
    g24.s_text = {{neg(R7), R7, "7", "7", m2r, m2r, m2r},
                  {R7, neg(R7), "7", "7", p2r, p2r, p2r},
                  {"7", "7", "7", "-7", "0", "0", "0"},
                  {"7", "7", "-7", "7", "0", "0", "0"},
                  {m2r, p2r, "0", "0", A, B, C},
                  {m2r, p2r, "0", "0", B, C, A},
                  {m2r, p2r, "0", "0", C, A, B}};
    g24.t_text = {"1", "1", "1", "-1", "E(7)^3", "E(7)^5", "E(7)^6"};
    const std::string u = "2*E(7)^6+2*E(7)", v = "2*E(7)^5+2*E(7)^2", w = "2*E(7)^4+2*E(7)^3";
    g24.s_category = {{"1", "-1", R7, R7, "2", "2", "2"},
                      {"-1", "1", R7, R7, "-2", "-2", "-2"},
                      {R7, R7, R7, neg(R7), "0", "0", "0"},
                      {R7, R7, neg(R7), R7, "0", "0", "0"},
                      {"2", "-2", "0", "0", u, v, w},
                      {"2", "-2", "0", "0", v, w, u},
                      {"2", "-2", "0", "0", w, u, v}};
    g24.scalar = "I*2*ER(7)";
    g24.label_order = {{{0, 0, 0}, {0, 0, 0}},     {{14, 0, 0}, {-14, 0, 0}}, {{22, 0, 0}, {-20, 0, 0}},
                       {{22, 0, 1}, {-20, 0, 1}}, {{0, 0, 1}, {0, 0, 1}},     {{0, 1, 0}, {0, 1, 0}},
                       {{2, 0, 0}, {2, 0, 0}}};
    out.push_back(g24);
    return out;
}

Matrix parse_matrix(const std::vector<std::vector<std::string>>& text, const CycNum& factor) {
    Matrix m;
    for (const auto& row : text) {
        m.emplace_back();
        for (const auto& e : row) m.back().push_back(factor * parse_cyc(e));
    }
    return m;
}

}  // namespace

const std::vector<ReferenceDatum>& reference_data() {
    static const std::vector<ReferenceDatum> data = build();
    return data;
}

const ReferenceDatum& reference(const std::string& name) {
    const auto& all = reference_data();
    auto it = std::find_if(all.begin(), all.end(), [&](const ReferenceDatum& r) { return r.name == name; });
    if (it == all.end()) throw std::out_of_range("unknown reference datum " + name);
    return *it;
}

Matrix reference_s(const ReferenceDatum& r) { return parse_matrix(r.s_text, parse_cyc(r.prefactor)); }

std::vector<CycNum> reference_t(const ReferenceDatum& r) {
    std::vector<CycNum> t;
    for (const auto& e : r.t_text) t.push_back(parse_cyc(e));
    return t;
}

Matrix reference_s_category(const ReferenceDatum& r) { return parse_matrix(r.s_category, CycNum(1)); }

CycNum reference_scalar(const ReferenceDatum& r, const CycNum& imag_unit) {
    std::string text = r.scalar;
    bool has_i = false;
    if (text.rfind("I*", 0) == 0) {
        has_i = true;
        text = text.substr(2);
    }
    CycNum v = parse_cyc(text);
    return has_i ? imag_unit * v : v;
}

std::vector<WeightPair> reference_labels(const ReferenceDatum& r, const RootDatum& rd) {
    std::vector<WeightPair> out;
    for (const auto& [lam, mu] : r.label_order) {
        if (static_cast<int>(lam.size()) != rd.rank) throw std::invalid_argument("label rank mismatch in " + r.name);
        out.push_back({from_fundamental(rd, lam), from_fundamental(rd, mu)});
    }
    return out;
}

std::string canonical_text(const ReferenceDatum& r) {
    std::ostringstream os;
    os << r.name << "\nS";
    for (const auto& row : reference_s(r)) {
        os << "\n";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " ; " : "") << to_string(row[j]);
    }
    os << "\nT\n";
    auto t = reference_t(r);
    for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " ; " : "") << to_string(t[j]);
    if (!r.s_category.empty()) {
        os << "\nS_category";
        for (const auto& row : reference_s_category(r)) {
            os << "\n";
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " ; " : "") << to_string(row[j]);
        }
    }
    os << "\n";
    return os.str();
}

std::uint64_t checksum(const ReferenceDatum& r) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_text(r)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace modcat
