#pragma once

#include <complex>
#include <fstream>
#include <stdexcept>

#include "modcat/report.hpp"

// Values frozen by tools/oracles.py (numpy / sympy, independent of the core).
inline const modcat::Json& oracle() {
    static const modcat::Json data = [] {
        std::ifstream f(std::string(MODCAT_TEST_DATA) + "/oracles.json");
        if (!f) throw std::runtime_error("missing tests/data/oracles.json");
        return modcat::Json::parse(f);
    }();
    return data;
}

inline std::complex<double> oracle_complex(const modcat::Json& j) { return {j[0].get<double>(), j[1].get<double>()}; }

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-8) { return std::abs(a - b) < tol; }
