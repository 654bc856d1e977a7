#include "modcat/quantum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "modcat/parallel.hpp"

namespace modcat {

namespace {

std::int64_t mod_pos(std::int64_t k, std::int64_t n) {
    std::int64_t r = k % n;
    return r < 0 ? r + n : r;
}

Weight twice_rho(const RootDatum& rd) { return Rational(2) * rd.rho; }

}  // namespace

std::int64_t QuantumContext::xi_index(const Rational& q) const {
    Rational k = q * rd.L;
    if (k.get_den() != 1) throw QuantumError("exponent " + q.get_str() + " is not in (1/L)Z with L = " + std::to_string(rd.L));
    auto scale = static_cast<std::int64_t>(conductor) / (static_cast<std::int64_t>(rd.L) * l);
    std::int64_t kk = mod_pos(k.get_num().get_si(), static_cast<std::int64_t>(rd.L) * l);
    return mod_pos(scale * xi_exponent * kk, conductor);
}

CycNum QuantumContext::xi_power(const Rational& q) const { return root_of_unity(conductor, xi_index(q)); }

int QuantumContext::zeta_power() const { return static_cast<int>(mod_pos(-xi_exponent, d)); }

QuantumContext make_context(LieType type, int rank, int d, std::optional<int> xi_exponent) {
    QuantumContext ctx;
    ctx.rd = build_root_datum(type, rank);
    if (type == LieType::A && d < rank + 1) throw QuantumError("d >= n+1 required (d = " + std::to_string(d) + ", n = " + std::to_string(rank) + ")");
    ctx.d = d;
    ctx.l = 2 * d;
    ctx.lprime = d;
    ctx.xi_exponent = xi_exponent.value_or(type == LieType::A ? -1 : 1);
    if (std::gcd(mod_pos(ctx.xi_exponent, ctx.l), static_cast<std::int64_t>(ctx.l)) != 1)
        throw QuantumError("xi must be a primitive l-th root of unity");
    ctx.conductor = static_cast<std::uint32_t>(lcm_u(4, static_cast<std::uint64_t>(ctx.rd.L) * static_cast<std::uint64_t>(ctx.l)));
    try {
        ctx.alcove = alcove(ctx.rd, ctx.lprime);
    } catch (const LatticeError& e) {
        throw QuantumError(e.what());
    }
    ctx.sub = sublattice_ops(ctx.rd, ctx.lprime);
    Weight tr = twice_rho(ctx.rd);
    CycAccumulator plus(ctx.conductor), minus(ctx.conductor);
    WeightPairRaw zero{zero_weight(rank), zero_weight(rank)};
    for (const auto& w : ctx.rd.weyl) {
        Weight x = dot_action(ctx.rd, w, zero).lambda;
        Rational e = pairing(ctx.rd, tr, x);
        plus.add_power(ctx.xi_index(e), w.parity);
        minus.add_power(ctx.xi_index(-e), w.parity);
    }
    ctx.weyl_denominator = plus.value();
    ctx.weyl_denominator_minus = minus.value();
    if (ctx.weyl_denominator.is_zero() || ctx.weyl_denominator_minus.is_zero())
        throw QuantumError("Weyl denominator vanishes at this root of unity");
    if (type == LieType::B && ctx.l % 4 == 0)
        ctx.imag_unit = ctx.xi_power(Rational(ctx.l / 4));
    else
        ctx.imag_unit = embed(root_of_unity(4, 1), ctx.conductor);
    return ctx;
}

WeightPair canonical_pair(const QuantumContext& ctx, const WeightPair& p) {
    Weight mu = ctx.sub.canonical_rep(p.mu);
    Weight nu = p.mu - mu;
    return {p.lambda + nu, mu};
}

Weight grading(const QuantumContext& ctx, const WeightPair& p) {
    return ctx.sub.canonical_rep(Rational(1, 2) * (p.lambda - p.mu));
}

int alcove_index(const QuantumContext& ctx, const WeightPair& p) {
    Weight eta = Rational(1, 2) * (p.lambda + p.mu);
    auto it = std::find(ctx.alcove.begin(), ctx.alcove.end(), eta);
    return it == ctx.alcove.end() ? -1 : static_cast<int>(it - ctx.alcove.begin());
}

std::vector<WeightPair> enumerate_simples(const QuantumContext& ctx, bool integral) {
    std::vector<Weight> mus = ctx.sub.q_quotient();
    if (!integral) {
        // Coset representatives of P/Q by fractional parts.
        std::set<Weight> cosets{zero_weight(ctx.rd.rank)};
        std::vector<Weight> queue{zero_weight(ctx.rd.rank)};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (const auto& fw : ctx.rd.fundamental_weights) {
                Weight v = queue[h] + fw;
                for (auto& x : v) {
                    Integer fl;
                    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
                    x -= Rational(fl);
                }
                if (cosets.insert(v).second) queue.push_back(v);
            }
        std::vector<Weight> all;
        for (const auto& c : cosets)
            for (const auto& q : mus) all.push_back(ctx.sub.canonical_rep(c + q));
        std::sort(all.begin(), all.end());
        mus = all;
    }
    std::vector<WeightPair> out;
    out.reserve(ctx.alcove.size() * mus.size());
    for (const auto& eta : ctx.alcove)
        for (const auto& mu : mus) out.push_back({Rational(2) * eta - mu, mu});
    return out;
}

CycNum s_numerator(const QuantumContext& ctx, const WeightPair& a, const WeightPair& b) {
    const RootDatum& rd = ctx.rd;
    Weight tr = twice_rho(rd);
    Weight left = tr + a.lambda;
    CycAccumulator acc(ctx.conductor);
    WeightPairRaw pb{b.lambda, b.mu};
    for (const auto& w : rd.weyl) {
        WeightPairRaw x = dot_action(rd, w, pb);
        Rational e = pairing(rd, left, x.mu) + pairing(rd, a.mu, x.lambda + tr);
        acc.add_power(ctx.xi_index(e), w.parity);
    }
    return acc.value();
}

CycNum s_entry(const QuantumContext& ctx, const WeightPair& a, const WeightPair& b) {
    return s_numerator(ctx, a, b) / ctx.weyl_denominator;
}

CycNum twist(const QuantumContext& ctx, const WeightPair& a) {
    return ctx.xi_power(pairing(ctx.rd, a.lambda + twice_rho(ctx.rd), a.mu));
}

CycNum renormalized_s(const QuantumContext& ctx, const WeightPair& a, const WeightPair& b) {
    if (ctx.rd.type != LieType::A) throw QuantumError("renormalized S is defined for type A only");
    int n = ctx.rd.rank;
    auto m = static_cast<std::int64_t>(n + static_cast<int>(ctx.rd.positive_roots.size()));
    Integer dn;
    mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(ctx.d), static_cast<unsigned long>(n));
    return (pow(ctx.imag_unit, -m) * s_numerator(ctx, a, b)).scaled(Rational(1) / Rational(dn));
}

std::pair<CycNum, CycNum> quantum_dims(const QuantumContext& ctx, const WeightPair& a) {
    const RootDatum& rd = ctx.rd;
    Weight tr = twice_rho(rd);
    CycAccumulator plus(ctx.conductor), minus(ctx.conductor);
    WeightPairRaw pa{a.lambda, a.mu};
    for (const auto& w : rd.weyl) {
        Rational e = pairing(rd, tr, dot_action(rd, w, pa).mu);
        plus.add_power(ctx.xi_index(e), w.parity);
        minus.add_power(ctx.xi_index(-e), w.parity);
    }
    return {plus.value() / ctx.weyl_denominator, minus.value() / ctx.weyl_denominator_minus};
}

Matrix s_matrix(const QuantumContext& ctx, const std::vector<WeightPair>& labels, int jobs) {
    if (ctx.weyl_denominator.is_zero()) throw QuantumError("Weyl denominator vanishes");
    CycNum inv = ctx.weyl_denominator.inverse();
    std::size_t m = labels.size();
    Matrix s(m, std::vector<CycNum>(m));
    parallel_for(
        m,
        [&](std::size_t i) {
            for (std::size_t j = 0; j < m; ++j) s[i][j] = s_numerator(ctx, labels[i], labels[j]) * inv;
        },
        jobs);
    return s;
}

ModularDatum quantum_datum(const QuantumContext& ctx, const std::vector<WeightPair>& labels, int jobs) {
    ModularDatum md;
    md.labels.assign(labels.begin(), labels.end());
    md.s = s_matrix(ctx, labels, jobs);
    for (const auto& a : labels) md.t.push_back(twist(ctx, a));
    md.normalization = Normalization::unnormalized;
    md.params = {to_string(ctx.rd.type), ctx.rd.rank, ctx.l};
    return md;
}

std::vector<std::size_t> symmetric_center(const QuantumContext& ctx, const std::vector<WeightPair>& simples, const Matrix& s) {
    WeightPair unit{zero_weight(ctx.rd.rank), zero_weight(ctx.rd.rank)};
    auto it = std::find(simples.begin(), simples.end(), unit);
    if (it == simples.end()) throw QuantumError("unit object missing from the simple list");
    auto u = static_cast<std::size_t>(it - simples.begin());
    std::size_t m = simples.size();
    std::vector<CycNum> c(m);
    for (std::size_t b = 0; b < m; ++b) {
        auto [dp, dm] = quantum_dims(ctx, simples[b]);
        c[b] = dm / dp * s[b][u];
    }
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < m; ++a)
        if (!dot(s[a], c).is_zero()) out.push_back(a);
    return out;
}

std::size_t symmetric_center_size(const QuantumContext& ctx, const std::vector<WeightPair>& simples, const Matrix& s) {
    return symmetric_center(ctx, simples, s).size();
}

std::vector<WeightPair> subcategory_by_grading(const QuantumContext& ctx, const std::vector<WeightPair>& simples,
                                               const std::vector<Weight>& allowed_gradings) {
    std::set<Weight> allowed;
    for (const auto& g : allowed_gradings) {
        if (!in_P(ctx.rd, g)) throw QuantumError("grading " + weight_to_string(g) + " is not in P");
        allowed.insert(ctx.sub.canonical_rep(g));
    }
    if (!allowed.count(zero_weight(ctx.rd.rank))) throw QuantumError("allowed gradings must contain 0");
    for (const auto& a : allowed)
        for (const auto& b : allowed)
            if (!allowed.count(ctx.sub.canonical_rep(a + b)))
                throw QuantumError("allowed gradings do not form a subgroup: " + weight_to_string(a) + " + " + weight_to_string(b));
    std::vector<WeightPair> out;
    for (const auto& s : simples)
        if (allowed.count(grading(ctx, s))) out.push_back(s);
    return out;
}

SuperQuotient super_quotient(const QuantumContext& ctx, const std::vector<WeightPair>& simples, const Matrix& s,
                             const WeightPair& j, const std::vector<WeightPair>& preferred) {
    std::size_t m = simples.size();
    SuperQuotient q;
    q.partner.assign(m, m);
    WeightPair unit{zero_weight(ctx.rd.rank), zero_weight(ctx.rd.rank)};
    WeightPair jc = canonical_pair(ctx, j);
    if (jc == canonical_pair(ctx, unit)) {
        for (std::size_t x = 0; x < m; ++x) {
            q.partner[x] = x;
            q.representatives.push_back(x);
        }
        return q;
    }
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            bool neg = true;
            for (std::size_t k = 0; k < m && neg; ++k) neg = s[y][k] == -s[x][k];
            if (!neg) continue;
            if (q.partner[x] != m) throw QuantumError("simple " + to_string(simples[x]) + " has two -1 partners");
            q.partner[x] = y;
        }
        if (q.partner[x] == m) throw QuantumError("simple " + to_string(simples[x]) + " has no -1 partner");
    }
    for (std::size_t x = 0; x < m; ++x)
        if (q.partner[q.partner[x]] != x || q.partner[x] == x) throw QuantumError("partner map is not a fixed-point-free involution");
    std::vector<bool> taken(m, false);
    for (const auto& p : preferred) {
        auto it = std::find(simples.begin(), simples.end(), canonical_pair(ctx, p));
        if (it == simples.end()) continue;
        auto x = static_cast<std::size_t>(it - simples.begin());
        if (taken[x]) continue;
        taken[x] = taken[q.partner[x]] = true;
        q.representatives.push_back(x);
    }
    for (std::size_t x = 0; x < m; ++x) {
        if (taken[x]) continue;
        taken[x] = taken[q.partner[x]] = true;
        q.representatives.push_back(x);
    }
    return q;
}

}  // namespace modcat
