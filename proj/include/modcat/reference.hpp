#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modcat/types.hpp"

namespace modcat {

// Fourier matrix and Frobenius eigenvalues as printed, kept as exact strings.
// S_ref = prefactor * s_text. When present, s_category is the displayed
// S-matrix of the categorification; it equals scalar * S_ref.
struct ReferenceDatum {
    std::string name;
    std::string prefactor;
    std::vector<std::vector<std::string>> s_text;
    std::vector<std::string> t_text;
    std::vector<std::vector<std::string>> s_category;
    // Scalar relating s_category to S_ref; "I" stands for the context's i.
    std::string scalar;
    // Representatives in fundamental-weight coordinates (lambda; mu).
    std::vector<std::pair<std::vector<int>, std::vector<int>>> label_order;
};

const std::vector<ReferenceDatum>& reference_data();
const ReferenceDatum& reference(const std::string& name);

Matrix reference_s(const ReferenceDatum& r);
std::vector<CycNum> reference_t(const ReferenceDatum& r);
Matrix reference_s_category(const ReferenceDatum& r);
// Scalar with "I" replaced by the supplied square root of -1.
CycNum reference_scalar(const ReferenceDatum& r, const CycNum& imag_unit);
std::vector<WeightPair> reference_labels(const ReferenceDatum& r, const RootDatum& rd);

// Canonical rendering of every parsed entry; reparsing it reproduces the data.
std::string canonical_text(const ReferenceDatum& r);
// FNV-1a over canonical_text.
std::uint64_t checksum(const ReferenceDatum& r);

}  // namespace modcat
