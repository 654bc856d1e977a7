#include "modcat/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "modcat/parallel.hpp"

namespace modcat {

NonIntegralCoefficient::NonIntegralCoefficient(std::size_t f_, std::size_t g_, std::size_t h_, const std::string& v)
    : std::runtime_error("non-integral Verlinde coefficient N_{" + std::to_string(f_) + "," + std::to_string(g_) + "}^" +
                         std::to_string(h_) + " = " + v),
      f(f_), g(g_), h(h_), value(v) {}

namespace {

using i128 = __int128;

// Integer numerators over a common denominator; false if any entry is too large.
bool to_int_polys(const std::vector<CycNum>& xs, std::uint32_t conductor, std::vector<std::int64_t>& out, Integer& den) {
    std::uint32_t phi = euler_phi(conductor);
    den = 1;
    std::vector<CycNum> e;
    e.reserve(xs.size());
    for (const auto& x : xs) {
        e.push_back(embed(x, conductor));
        den = lcm(den, e.back().denominator());
    }
    const Integer limit = Integer(1) << 20;
    out.assign(xs.size() * phi, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        Integer scale = den / e[i].denominator();
        for (std::uint32_t j = 0; j < phi; ++j) {
            Integer v = e[i].numerators()[j] * scale;
            if (abs(v) >= limit) return false;
            out[i * phi + j] = v.get_si();
        }
    }
    return abs(den) < limit;
}

}  // namespace

CycNum verlinde_entry(const ModularDatum& datum, std::size_t unit, std::size_t f, std::size_t g, std::size_t h) {
    CycNum sum(0);
    for (std::size_t k = 0; k < datum.size(); ++k)
        sum += datum.s[f][k] * datum.s[g][k] * conjugate(datum.s[h][k]) / datum.s[unit][k];
    return sum;
}

FusionRing verlinde(const ModularDatum& datum, std::size_t unit, int jobs) {
    const std::size_t m = datum.size();
    if (unit >= m) throw std::out_of_range("unit index out of range");
    for (std::size_t k = 0; k < m; ++k)
        if (datum.s[unit][k].is_zero()) throw std::domain_error("S_{unit,k} vanishes for k = " + std::to_string(k));
    FusionRing ring;
    ring.labels = datum.labels;
    ring.unit_index = unit;
    ring.n_tensor.assign(m * m * m, 0);

    std::uint64_t cond = 1;
    for (const auto& row : datum.s)
        for (const auto& x : row) cond = lcm_u(cond, x.conductor());
    auto M = static_cast<std::uint32_t>(cond);
    const std::uint32_t phi = euler_phi(M);
    const auto& table = power_table(M);

    std::vector<CycNum> a(m * m), s(m * m), t(m * m);
    for (std::size_t k = 0; k < m; ++k) {
        CycNum inv = datum.s[unit][k].inverse();
        for (std::size_t f = 0; f < m; ++f) {
            a[f * m + k] = datum.s[f][k] * inv;
            s[f * m + k] = datum.s[f][k];
            t[f * m + k] = conjugate(datum.s[f][k]);
        }
    }
    std::vector<std::int64_t> ai, si, ti;
    Integer da, ds, dt;
    bool fast = to_int_polys(a, M, ai, da) && to_int_polys(s, M, si, ds) && to_int_polys(t, M, ti, dt);
    if (!fast) {
        parallel_for(
            m,
            [&](std::size_t f) {
                for (std::size_t g = 0; g < m; ++g)
                    for (std::size_t h = 0; h < m; ++h) {
                        CycNum v = verlinde_entry(datum, unit, f, g, h);
                        if (!v.is_integer()) throw NonIntegralCoefficient(f, g, h, to_string(v));
                        ring.n_tensor[(f * m + g) * m + h] = v.rational_part().get_num().get_si();
                    }
            },
            jobs);
        return ring;
    }

    auto reduce = [&](const std::vector<i128>& full, std::vector<i128>& out) {
        std::fill(out.begin(), out.end(), 0);
        for (std::size_t idx = 0; idx < full.size(); ++idx) {
            if (full[idx] == 0) continue;
            std::size_t r = idx % M;
            if (r < phi) {
                out[r] += full[idx];
            } else {
                const auto& row = table[r];
                for (std::uint32_t j = 0; j < phi; ++j) out[j] += full[idx] * row[j];
            }
        }
    };

    // c[(g*m + h)*m + k] = s_gk * t_hk reduced, as int64 polynomials.
    std::vector<std::int64_t> c(m * m * m * phi);
    parallel_for(
        m,
        [&](std::size_t g) {
            std::vector<i128> full(2 * phi - 1), red(phi);
            for (std::size_t h = 0; h < m; ++h)
                for (std::size_t k = 0; k < m; ++k) {
                    std::fill(full.begin(), full.end(), 0);
                    const std::int64_t* sg = &si[(g * m + k) * phi];
                    const std::int64_t* th = &ti[(h * m + k) * phi];
                    for (std::uint32_t i = 0; i < phi; ++i)
                        if (sg[i])
                            for (std::uint32_t j = 0; j < phi; ++j) full[i + j] += static_cast<i128>(sg[i]) * th[j];
                    reduce(full, red);
                    for (std::uint32_t j = 0; j < phi; ++j) c[((g * m + h) * m + k) * phi + j] = static_cast<std::int64_t>(red[j]);
                }
        },
        jobs);

    Integer total_den = da * ds * dt;
    auto den128 = static_cast<i128>(total_den.get_si());
    parallel_for(
        m,
        [&](std::size_t f) {
            std::vector<i128> full(2 * phi - 1), red(phi);
            for (std::size_t g = 0; g < m; ++g)
                for (std::size_t h = 0; h < m; ++h) {
                    std::fill(full.begin(), full.end(), 0);
                    for (std::size_t k = 0; k < m; ++k) {
                        const std::int64_t* af = &ai[(f * m + k) * phi];
                        const std::int64_t* cg = &c[((g * m + h) * m + k) * phi];
                        for (std::uint32_t i = 0; i < phi; ++i)
                            if (af[i])
                                for (std::uint32_t j = 0; j < phi; ++j) full[i + j] += static_cast<i128>(af[i]) * cg[j];
                    }
                    reduce(full, red);
                    bool integral = red[0] % den128 == 0;
                    for (std::uint32_t j = 1; j < phi && integral; ++j) integral = red[j] == 0;
                    if (!integral) {
                        CycNum v = verlinde_entry(datum, unit, f, g, h);
                        throw NonIntegralCoefficient(f, g, h, to_string(v));
                    }
                    ring.n_tensor[(f * m + g) * m + h] = static_cast<std::int64_t>(red[0] / den128);
                }
        },
        jobs);
    return ring;
}

Report check_ring_axioms(const FusionRing& ring) {
    Report r;
    r.check = "ring_axioms";
    const std::size_t m = ring.size(), u = ring.unit_index;
    r.params = {{"size", m}, {"unit_index", u}};
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h) {
            if (ring.at(u, g, h) != (g == h ? 1 : 0)) r.fail({{"relation", "unit"}, {"g", g}, {"h", h}, {"N", ring.at(u, g, h)}});
            for (std::size_t f = 0; f < m; ++f)
                if (ring.at(f, g, h) != ring.at(g, f, h))
                    r.fail({{"relation", "commutativity"}, {"f", f}, {"g", g}, {"h", h}});
        }
    return r;
}

Report check_associativity(const FusionRing& ring, bool absolute, int jobs) {
    Report r;
    r.check = absolute ? "associativity_abs" : "associativity";
    const std::size_t m = ring.size();
    r.params = {{"size", m}, {"absolute", absolute}};
    std::vector<std::int64_t> n = ring.n_tensor;
    if (absolute)
        for (auto& x : n) x = x < 0 ? -x : x;
    auto at = [&](std::size_t f, std::size_t g, std::size_t h) { return n[(f * m + g) * m + h]; };
    std::mutex mu;
    parallel_for(
        m,
        [&](std::size_t f) {
            std::vector<std::int64_t> lhs(m * m), rhs(m * m);
            for (std::size_t g = 0; g < m; ++g) {
                // (b_f b_g) b_h  vs  b_f (b_g b_h), for all h and x
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (std::size_t e = 0; e < m; ++e) {
                    std::int64_t v = at(f, g, e);
                    if (v == 0) continue;
                    for (std::size_t h = 0; h < m; ++h)
                        for (std::size_t x = 0; x < m; ++x) lhs[h * m + x] += v * at(e, h, x);
                }
                for (std::size_t h = 0; h < m; ++h)
                    for (std::size_t e = 0; e < m; ++e) {
                        std::int64_t v = at(g, h, e);
                        if (v == 0) continue;
                        for (std::size_t x = 0; x < m; ++x) rhs[h * m + x] += v * at(f, e, x);
                    }
                for (std::size_t h = 0; h < m; ++h)
                    for (std::size_t x = 0; x < m; ++x)
                        if (lhs[h * m + x] != rhs[h * m + x]) {
                            std::lock_guard<std::mutex> lock(mu);
                            r.fail({{"f", f}, {"g", g}, {"h", h}, {"x", x}, {"lhs", lhs[h * m + x]}, {"rhs", rhs[h * m + x]}});
                        }
            }
        },
        jobs);
    return r;
}

Report sl2z_relations(const ModularDatum& datum) {
    Report r;
    r.check = "sl2z";
    const std::size_t m = datum.size();
    r.params = {{"type", datum.params.type}, {"rank", datum.params.rank}, {"l", datum.params.l}, {"size", m}};
    const Matrix& s = datum.s;
    Matrix s2 = matmul(s, s);
    Matrix s4 = matmul(s2, s2);
    Matrix st = diag_mul(s, datum.t);
    Matrix st3 = matmul(matmul(st, st), st);
    Matrix s2t = diag_mul(s2, datum.t);
    bool commute = true;
    for (std::size_t i = 0; i < m && commute; ++i)
        for (std::size_t j = 0; j < m && commute; ++j) commute = s2t[i][j] == datum.t[i] * s2[i][j];
    bool symmetric = true;
    for (std::size_t i = 0; i < m && symmetric; ++i)
        for (std::size_t j = 0; j < i && symmetric; ++j) symmetric = s[i][j] == s[j][i];
    bool unitary = is_identity(matmul(s, conjugate_transpose(s)));
    std::vector<std::pair<std::string, bool>> rel{
        {"S^4 = 1", is_identity(s4)}, {"(ST)^3 = 1", is_identity(st3)}, {"[S^2,T] = 1", commute}, {"S symmetric", symmetric}, {"S unitary", unitary}};
    for (const auto& [name, ok] : rel) {
        r.details[name] = ok;
        if (!ok) r.fail({{"relation", name}});
    }
    return r;
}

Report sign_rescaled_positivity(const FusionRing& ring, const std::vector<int>& signs) {
    Report r;
    r.check = "sign_rescaled_positivity";
    const std::size_t m = ring.size();
    r.params = {{"size", m}};
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t h = 0; h < m; ++h) {
                std::int64_t v = signs[f] * signs[g] * signs[h] * ring.at(f, g, h);
                if (v < 0) r.fail({{"f", f}, {"g", g}, {"h", h}, {"value", v}});
            }
    return r;
}

std::int64_t min_coefficient(const FusionRing& ring) {
    return ring.n_tensor.empty() ? 0 : *std::min_element(ring.n_tensor.begin(), ring.n_tensor.end());
}

}  // namespace modcat
