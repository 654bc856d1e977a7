#pragma once

#include <string>
#include <variant>
#include <vector>

#include "modcat/cyclo.hpp"
#include "modcat/lattice.hpp"

namespace modcat {

struct WeightPair {
    Weight lambda;
    Weight mu;

    friend bool operator==(const WeightPair&, const WeightPair&) = default;
    friend bool operator<(const WeightPair& a, const WeightPair& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.mu < b.mu;
    }
};

struct MalleSymbol {
    int n = 0;
    int d = 0;
    std::vector<int> f;  // n+1 strictly increasing values in [0, d)
    std::vector<int> k;  // k_0 .. k_{n-1}

    friend bool operator==(const MalleSymbol&, const MalleSymbol&) = default;
    friend bool operator<(const MalleSymbol& a, const MalleSymbol& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.k < b.k;
    }
};

using Label = std::variant<WeightPair, MalleSymbol>;

enum class Normalization { unnormalized, renormalized };

struct DatumParams {
    std::string type;
    int rank = 0;
    int l = 0;
};

using Matrix = std::vector<std::vector<CycNum>>;

struct ModularDatum {
    std::vector<Label> labels;
    Matrix s;
    std::vector<CycNum> t;
    Normalization normalization = Normalization::unnormalized;
    DatumParams params;

    std::size_t size() const { return labels.size(); }
};

std::string label_to_string(const Label& l);
std::string to_string(const WeightPair& p);
std::string to_string(const MalleSymbol& s);
std::string to_string(Normalization n);

Matrix identity_matrix(std::size_t m);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix diag_mul(const Matrix& a, const std::vector<CycNum>& t);  // a * diag(t)
Matrix conjugate_transpose(const Matrix& a);
bool is_identity(const Matrix& a);

}  // namespace modcat
