#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "modcat/report.hpp"
#include "modcat/types.hpp"

namespace modcat {

class NonIntegralCoefficient : public std::runtime_error {
public:
    NonIntegralCoefficient(std::size_t f, std::size_t g, std::size_t h, const std::string& value);
    std::size_t f, g, h;
    std::string value;
};

struct FusionRing {
    std::vector<Label> labels;
    std::size_t unit_index = 0;
    std::vector<std::int64_t> n_tensor;  // index (f*m + g)*m + h

    std::size_t size() const { return labels.size(); }
    std::int64_t at(std::size_t f, std::size_t g, std::size_t h) const {
        std::size_t m = labels.size();
        return n_tensor[(f * m + g) * m + h];
    }
};

FusionRing verlinde(const ModularDatum& datum, std::size_t unit_index, int jobs = 0);
// Plain cyclotomic evaluation of one coefficient.
CycNum verlinde_entry(const ModularDatum& datum, std::size_t unit_index, std::size_t f, std::size_t g, std::size_t h);

Report check_ring_axioms(const FusionRing& ring);
Report check_associativity(const FusionRing& ring, bool absolute, int jobs = 0);
Report sl2z_relations(const ModularDatum& datum);
// d_f d_g d_h N_{f,g}^h >= 0 for the given signs.
Report sign_rescaled_positivity(const FusionRing& ring, const std::vector<int>& signs);
std::int64_t min_coefficient(const FusionRing& ring);

}  // namespace modcat
