#include "modcat/types.hpp"

#include <sstream>

namespace modcat {

std::string to_string(const WeightPair& p) { return "(" + weight_to_string(p.lambda) + ";" + weight_to_string(p.mu) + ")"; }

std::string to_string(const MalleSymbol& s) {
    std::ostringstream os;
    os << "f=(";
    for (std::size_t i = 0; i < s.f.size(); ++i) os << (i ? "," : "") << s.f[i];
    os << "),k=(";
    for (std::size_t i = 0; i < s.k.size(); ++i) os << (i ? "," : "") << s.k[i];
    os << ")";
    return os.str();
}

std::string label_to_string(const Label& l) {
    return std::visit([](const auto& x) { return to_string(x); }, l);
}

std::string to_string(Normalization n) { return n == Normalization::unnormalized ? "unnormalized" : "renormalized"; }

Matrix identity_matrix(std::size_t m) {
    Matrix r(m, std::vector<CycNum>(m, CycNum(0)));
    for (std::size_t i = 0; i < m; ++i) r[i][i] = CycNum(1);
    return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    std::size_t m = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    Matrix bt(p, std::vector<CycNum>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < p; ++j) bt[j][i] = b[i][j];
    Matrix c(m, std::vector<CycNum>(p));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < p; ++j) c[i][j] = dot(a[i], bt[j]);
    return c;
}

Matrix diag_mul(const Matrix& a, const std::vector<CycNum>& t) {
    Matrix r = a;
    for (auto& row : r)
        for (std::size_t j = 0; j < row.size(); ++j) row[j] *= t[j];
    return r;
}

Matrix conjugate_transpose(const Matrix& a) {
    std::size_t m = a.size(), p = m ? a[0].size() : 0;
    Matrix r(p, std::vector<CycNum>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < p; ++j) r[j][i] = conjugate(a[i][j]);
    return r;
}

bool is_identity(const Matrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == CycNum(i == j ? 1 : 0))) return false;
    return true;
}

}  // namespace modcat
