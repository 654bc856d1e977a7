#pragma once

#include <string>

#include "modcat/fusion.hpp"
#include "modcat/report.hpp"
#include "modcat/types.hpp"

namespace modcat {

class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// {"conductor": N, "coeffs": ["p/q", ...]}: smallest conductor, coefficients
// on 1, z, ..., z^{phi(N)-1}.
Json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);

Weight parse_weight(const std::string& text);
Json label_to_json(const Label& l);
Label label_from_json(const Json& j);

Json datum_to_json(const ModularDatum& md);
ModularDatum datum_from_json(const Json& j);
// S entries "i,j,conductor,coeffs", then T entries "i,T,conductor,coeffs".
std::string datum_to_csv(const ModularDatum& md);
std::string datum_to_latex(const ModularDatum& md);

// Sparse: only nonzero coefficients are listed.
Json fusion_to_json(const FusionRing& ring);
FusionRing fusion_from_json(const Json& j);
std::string fusion_to_csv(const FusionRing& ring);

}  // namespace modcat
