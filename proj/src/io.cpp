#include "modcat/io.hpp"

#include <sstream>

namespace modcat {

Json cyc_to_json(const CycNum& x) {
    CycNum y = lower_conductor(x);
    Json coeffs = Json::array();
    for (const auto& q : y.coeffs()) coeffs.push_back(q.get_str());
    return Json{{"conductor", y.conductor()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
    try {
        auto n = j.at("conductor").get<std::uint32_t>();
        std::vector<Rational> c;
        for (const auto& e : j.at("coeffs")) {
            Rational q(e.get<std::string>());
            q.canonicalize();
            c.push_back(q);
        }
        if (n == 0 || c.size() != euler_phi(n)) throw FormatError("coefficient count must equal phi(conductor)");
        return CycNum::from_power_basis(n, c);
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed cyclotomic number: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed cyclotomic number: ") + e.what());
    }
}

Weight parse_weight(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw FormatError("weight must look like [a,b,...]: " + text);
    Weight w;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            Rational q(item);
            q.canonicalize();
            w.push_back(q);
        } catch (const std::invalid_argument&) {
            throw FormatError("bad coordinate '" + item + "' in " + text);
        }
    }
    return w;
}

Json label_to_json(const Label& l) {
    if (const auto* p = std::get_if<WeightPair>(&l))
        return Json{{"lambda", weight_to_string(p->lambda)}, {"mu", weight_to_string(p->mu)}};
    const auto& s = std::get<MalleSymbol>(l);
    return Json{{"f", s.f}, {"k", s.k}};
}

Label label_from_json(const Json& j) {
    if (j.contains("f")) {
        MalleSymbol s;
        s.f = j.at("f").get<std::vector<int>>();
        s.k = j.at("k").get<std::vector<int>>();
        s.n = static_cast<int>(s.k.size());
        return s;
    }
    return WeightPair{parse_weight(j.at("lambda").get<std::string>()), parse_weight(j.at("mu").get<std::string>())};
}

Json datum_to_json(const ModularDatum& md) {
    Json j;
    Json labels = Json::array();
    for (const auto& l : md.labels) labels.push_back(label_to_json(l));
    j["labels"] = labels;
    Json s = Json::array();
    for (const auto& row : md.s) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(cyc_to_json(x));
        s.push_back(r);
    }
    j["S"] = s;
    Json t = Json::array();
    for (const auto& x : md.t) t.push_back(cyc_to_json(x));
    j["T"] = t;
    j["normalization"] = to_string(md.normalization);
    j["params"] = {{"type", md.params.type}, {"rank", md.params.rank}, {"l", md.params.l}};
    return j;
}

ModularDatum datum_from_json(const Json& j) {
    ModularDatum md;
    try {
        for (const auto& l : j.at("labels")) md.labels.push_back(label_from_json(l));
        for (const auto& row : j.at("S")) {
            md.s.emplace_back();
            for (const auto& x : row) md.s.back().push_back(cyc_from_json(x));
        }
        for (const auto& x : j.at("T")) md.t.push_back(cyc_from_json(x));
        std::string norm = j.at("normalization").get<std::string>();
        if (norm != "unnormalized" && norm != "renormalized") throw FormatError("unknown normalization " + norm);
        md.normalization = norm == "unnormalized" ? Normalization::unnormalized : Normalization::renormalized;
        const auto& p = j.at("params");
        md.params = {p.at("type").get<std::string>(), p.at("rank").get<int>(), p.at("l").get<int>()};
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed modular datum: ") + e.what());
    }
    for (auto& l : md.labels)
        if (auto* s = std::get_if<MalleSymbol>(&l)) s->d = md.params.l / 2;
    const std::size_t m = md.labels.size();
    if (md.s.size() != m || md.t.size() != m) throw FormatError("S and T must match the label count");
    for (const auto& row : md.s)
        if (row.size() != m) throw FormatError("S must be square");
    return md;
}

namespace {

std::string coeff_field(const CycNum& x) {
    CycNum y = lower_conductor(x);
    std::string out;
    auto c = y.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + c[i].get_str();
    return std::to_string(y.conductor()) + "," + out;
}

}  // namespace

std::string datum_to_csv(const ModularDatum& md) {
    std::ostringstream os;
    os << "f_index,g_index,conductor,coeffs\n";
    for (std::size_t i = 0; i < md.s.size(); ++i)
        for (std::size_t j = 0; j < md.s[i].size(); ++j) os << i << "," << j << "," << coeff_field(md.s[i][j]) << "\n";
    for (std::size_t i = 0; i < md.t.size(); ++i) os << i << ",T," << coeff_field(md.t[i]) << "\n";
    return os.str();
}

std::string datum_to_latex(const ModularDatum& md) {
    std::ostringstream os;
    os << "% labels:";
    for (std::size_t i = 0; i < md.labels.size(); ++i) os << (i ? "; " : " ") << label_to_string(md.labels[i]);
    os << "\n\\mathbb{S} = \\begin{bmatrix}\n";
    for (const auto& row : md.s) {
        os << "  ";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " & " : "") << to_latex(lower_conductor(row[j]));
        os << " \\\\\n";
    }
    os << "\\end{bmatrix}\n\\mathbb{T} = \\begin{bmatrix}\n";
    const std::size_t m = md.t.size();
    for (std::size_t i = 0; i < m; ++i) {
        os << "  ";
        for (std::size_t j = 0; j < m; ++j) os << (j ? " & " : "") << (i == j ? to_latex(lower_conductor(md.t[i])) : "0");
        os << " \\\\\n";
    }
    os << "\\end{bmatrix}\n";
    return os.str();
}

Json fusion_to_json(const FusionRing& ring) {
    Json j;
    Json labels = Json::array();
    for (const auto& l : ring.labels) labels.push_back(label_to_json(l));
    j["labels"] = labels;
    j["unit_index"] = ring.unit_index;
    Json n = Json::array();
    const std::size_t m = ring.size();
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t h = 0; h < m; ++h)
                if (std::int64_t v = ring.at(f, g, h)) n.push_back(Json{{"f", f}, {"g", g}, {"h", h}, {"N", v}});
    j["N"] = n;
    return j;
}

FusionRing fusion_from_json(const Json& j) {
    FusionRing ring;
    try {
        for (const auto& l : j.at("labels")) ring.labels.push_back(label_from_json(l));
        ring.unit_index = j.at("unit_index").get<std::size_t>();
        const std::size_t m = ring.labels.size();
        ring.n_tensor.assign(m * m * m, 0);
        for (const auto& e : j.at("N")) {
            auto f = e.at("f").get<std::size_t>(), g = e.at("g").get<std::size_t>(), h = e.at("h").get<std::size_t>();
            if (f >= m || g >= m || h >= m) throw FormatError("fusion index out of range");
            ring.n_tensor[(f * m + g) * m + h] = e.at("N").get<std::int64_t>();
        }
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed fusion ring: ") + e.what());
    }
    return ring;
}

std::string fusion_to_csv(const FusionRing& ring) {
    std::ostringstream os;
    os << "f,g,h,N\n";
    const std::size_t m = ring.size();
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t h = 0; h < m; ++h)
                if (std::int64_t v = ring.at(f, g, h)) os << f << "," << g << "," << h << "," << v << "\n";
    return os.str();
}

}  // namespace modcat
