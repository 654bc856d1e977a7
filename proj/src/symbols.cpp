#include "modcat/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modcat/parallel.hpp"

namespace modcat {

int res(long long k, int d) {
    long long r = k % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

namespace {

int permutation_parity(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

int sum_k(const MalleSymbol& s) { return std::accumulate(s.k.begin(), s.k.end(), 0); }

Integer power_of(int d, int n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
    return r;
}

// sum_{i=1..n} [(k_{i-1}(f) - f(i)) B(h,i) + (k_{i-1}(h) - h(i)) B(f,i)]
long long cross_exponent(const MalleSymbol& f, const MalleSymbol& h) {
    long long e = 0;
    for (int i = 1; i <= f.n; ++i)
        e += static_cast<long long>(f.k[i - 1] - f.f[i - 1]) * partial_block(h, i) +
             static_cast<long long>(h.k[i - 1] - h.f[i - 1]) * partial_block(f, i);
    return e;
}

}  // namespace

bool in_psi_sharp(const MalleSymbol& s) {
    long long sf = std::accumulate(s.f.begin(), s.f.end(), 0LL);
    return res(sf - sum_k(s), s.d) == 0;
}

void validate_symbol(const MalleSymbol& s) {
    if (s.n < 1 || s.d < s.n + 1) throw SymbolError("d >= n+1 required (n = " + std::to_string(s.n) + ", d = " + std::to_string(s.d) + ")");
    if (static_cast<int>(s.f.size()) != s.n + 1 || static_cast<int>(s.k.size()) != s.n)
        throw SymbolError("symbol " + to_string(s) + " has wrong shape");
    for (int i = 0; i <= s.n; ++i) {
        if (s.f[i] < 0 || s.f[i] >= s.d) throw SymbolError("f value out of range in " + to_string(s));
        if (i > 0 && s.f[i] <= s.f[i - 1]) throw SymbolError("f not strictly increasing in " + to_string(s));
    }
    for (int v : s.k)
        if (v < 0 || v >= s.d) throw SymbolError("k value out of range in " + to_string(s));
    if (!in_psi_sharp(s)) throw SymbolError("symbol " + to_string(s) + " is not in Psi#");
}

std::vector<MalleSymbol> enumerate_symbols(int n, int d) {
    if (n < 1 || d < n + 1) throw SymbolError("d >= n+1 required (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
    std::vector<MalleSymbol> out;
    std::vector<int> f(static_cast<std::size_t>(n + 1));
    std::iota(f.begin(), f.end(), 0);
    for (;;) {
        std::vector<int> k(static_cast<std::size_t>(n), 0);
        for (;;) {
            MalleSymbol s{n, d, f, k};
            if (in_psi_sharp(s)) out.push_back(s);
            int i = n - 1;
            while (i >= 0 && ++k[i] == d) k[i--] = 0;
            if (i < 0) break;
        }
        // next (n+1)-subset of [0, d) in lexicographic order
        int i = n;
        while (i >= 0 && f[i] == d - (n + 1) + i) --i;
        if (i < 0) break;
        ++f[i];
        for (int j = i + 1; j <= n; ++j) f[j] = f[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long psi_sharp_count(int n, int d) {
    // d^n * C(d-1, n) / (n+1)
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(d - 1), static_cast<unsigned long>(n));
    Integer v = power_of(d, n) * c / (n + 1);
    return v.get_si();
}

std::vector<int> full_values(const MalleSymbol& s) {
    std::vector<int> v(s.f);
    for (int i = 0; i < s.n; ++i)
        for (int x = 0; x < s.d; ++x)
            if (x != s.k[i]) v.push_back(x);
    return v;
}

int epsilon(const MalleSymbol& s) {
    auto v = full_values(s);
    long long cnt = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] < v[j]) ++cnt;
    return cnt % 2 ? -1 : 1;
}

int sign_d(const MalleSymbol& s) { return epsilon(s) * (sum_k(s) % 2 ? -1 : 1); }

long long partial_block(const MalleSymbol& s, int i) {
    long long b = 0;
    for (int j = 1; j <= i; ++j) b += s.f[j - 1];
    for (int j = 1; j < i; ++j) b -= s.k[j - 1];
    return b;
}

int frobenius_exponent(const MalleSymbol& s) {
    long long e = 0;
    for (int i = 1; i <= s.n; ++i) e += static_cast<long long>(s.k[i - 1] - s.f[i - 1]) * partial_block(s, i);
    return res(e, s.d);
}

CycNum frobenius(const MalleSymbol& s, int u) {
    return root_of_unity(static_cast<std::uint32_t>(s.d), static_cast<std::int64_t>(frobenius_exponent(s)) * u);
}

CycNum frobenius_zeta_star(const MalleSymbol& s, int u) {
    const long long d = s.d, n = s.n, m = 12 * d;
    long long us = -1;
    for (long long t = 0; t < 12; ++t) {
        long long cand = res(u + t * d, static_cast<int>(m));
        if (std::gcd(cand, m) == 1) {
            us = cand;
            break;
        }
    }
    if (us < 0) throw SymbolError("no primitive 12d-th root with zeta_*^12 = zeta");
    long long alpha = n * d * (1 - d * d);
    for (int y : full_values(s)) alpha -= 6 * (static_cast<long long>(y) * y + d * y);
    return root_of_unity(static_cast<std::uint32_t>(m), res(alpha, static_cast<int>(m)) * us % m);
}

CycNum malle_s_numerator(const MalleSymbol& a, const MalleSymbol& b, int u) {
    std::vector<int> sigma(static_cast<std::size_t>(a.n + 1));
    std::iota(sigma.begin(), sigma.end(), 0);
    CycAccumulator acc(static_cast<std::uint32_t>(a.d));
    MalleSymbol h = b;
    do {
        for (int i = 0; i <= a.n; ++i) h.f[i] = b.f[sigma[i]];
        acc.add_power(cross_exponent(a, h) * u, permutation_parity(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc.value();
}

CycNum malle_s_entry(const MalleSymbol& a, const MalleSymbol& b, int u) {
    if (a.n != b.n || a.d != b.d) throw SymbolError("symbols from different families");
    int sign = sign_d(a) * sign_d(b);
    return malle_s_numerator(a, b, u).scaled(Rational(sign) / Rational(power_of(a.d, a.n)));
}

CycNum tau(int d, int u) {
    CycNum t(1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            t *= root_of_unity(static_cast<std::uint32_t>(d), static_cast<std::int64_t>(i) * u) -
                 root_of_unity(static_cast<std::uint32_t>(d), static_cast<std::int64_t>(j) * u);
    return t;
}

CycNum exterior_s_entry(const MalleSymbol& a, const MalleSymbol& b, int u) {
    const int n = a.n, d = a.d;
    std::vector<int> sigma(static_cast<std::size_t>(n + 1));
    std::iota(sigma.begin(), sigma.end(), 0);
    CycAccumulator acc(static_cast<std::uint32_t>(d));
    long long kk = 0;
    for (int i = 0; i < n; ++i) kk += static_cast<long long>(a.k[i]) * b.k[i];
    do {
        long long e = -kk;
        for (int i = 0; i <= n; ++i) e += static_cast<long long>(a.f[i]) * b.f[sigma[i]];
        acc.add_power(e * u, permutation_parity(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    long long sign_exp = sum_k(a) + sum_k(b) + static_cast<long long>(n) * d * (d - 1) / 2;
    Rational pre(sign_exp % 2 ? -1 : 1);
    pre /= Rational(power_of(d, n));
    return (acc.value() * pow(tau(d, u), n)).scaled(pre);
}

CycNum malle_s_entry_lemma(const MalleSymbol& a, const MalleSymbol& b, int u) {
    const int n = a.n, d = a.d;
    CycNum v = conjugate(exterior_s_entry(a, b, u)) / pow(tau(d, u), n);
    return (n * (d - 1)) % 2 ? -v : v;
}

Matrix malle_s_matrix(const std::vector<MalleSymbol>& syms, int u, int jobs) {
    std::size_t m = syms.size();
    Matrix s(m, std::vector<CycNum>(m));
    parallel_for(
        m,
        [&](std::size_t i) {
            for (std::size_t j = 0; j < m; ++j) s[i][j] = malle_s_entry(syms[i], syms[j], u);
        },
        jobs);
    return s;
}

ModularDatum malle_datum(int n, int d, int u, int jobs) {
    auto syms = enumerate_symbols(n, d);
    ModularDatum md;
    md.labels.assign(syms.begin(), syms.end());
    md.s = malle_s_matrix(syms, u, jobs);
    for (const auto& s : syms) md.t.push_back(frobenius(s, u));
    md.normalization = Normalization::unnormalized;
    md.params = {"A", n, 2 * d};
    return md;
}

std::pair<MalleSymbol, MalleSymbol> special_symbols(int n, int d) {
    if (n < 1 || d < n + 1) throw SymbolError("d >= n+1 required (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
    MalleSymbol sp{n, d, {}, {}}, cosp{n, d, {}, {}};
    for (int i = 1; i <= n + 1; ++i) {
        sp.f.push_back(i - 1);
        cosp.f.push_back(i == 1 ? 0 : d - n + i - 2);
    }
    for (int j = 0; j < n; ++j) {
        sp.k.push_back(j + 1);
        cosp.k.push_back(d - j - 1);
    }
    validate_symbol(sp);
    validate_symbol(cosp);
    return {sp, cosp};
}

WeightPair iota(const RootDatum& rd, const MalleSymbol& s) {
    if (rd.type != LieType::A || rd.rank != s.n) throw SymbolError("iota needs the root datum A_n with n = " + std::to_string(s.n));
    const int n = s.n;
    Weight mu = zero_weight(n);
    for (int i = 1; i <= n; ++i) {
        long long v = 0;
        for (int j = 1; j < i; ++j) v += s.k[j - 1];
        for (int j = 1; j <= i; ++j) v -= s.f[j - 1];
        mu[i - 1] = static_cast<long>(v);
    }
    Weight lambda = -mu;
    for (int i = 1; i <= n; ++i) {
        int eta = s.f[i] - s.f[i - 1] - 1;
        lambda = lambda + Rational(2 * eta) * rd.fundamental_weights[i - 1];
    }
    return {lambda, mu};
}

MalleSymbol f_from_weightpair(const RootDatum& rd, int d, const WeightPair& p) {
    if (rd.type != LieType::A) throw SymbolError("f_from_weightpair needs a type A root datum");
    const int n = rd.rank;
    const Rational half(1, 2);
    Weight s = half * (p.lambda + p.mu) + rd.rho;
    Weight t = half * (p.lambda - p.mu) + rd.rho;
    auto as_int = [](const Rational& q) {
        if (q.get_den() != 1) throw SymbolError("non-integral pairing " + q.get_str() + " in f_from_weightpair");
        return q.get_num().get_si();
    };
    MalleSymbol out{n, d, {}, {}};
    long long base = -as_int(pairing(rd, p.mu, rd.fundamental_weights[0]));
    long long acc = base;
    for (int i = 1; i <= n + 1; ++i) {
        if (i > 1) acc += as_int(pairing(rd, s, simple_root(rd, i - 2)));
        out.f.push_back(res(acc, d));
    }
    std::sort(out.f.begin(), out.f.end());
    long long kacc = 0;
    for (int i = 1; i <= n; ++i) {
        kacc += as_int(pairing(rd, t, simple_root(rd, i - 1)));
        out.k.push_back(res(kacc, d));
    }
    validate_symbol(out);
    return out;
}

MalleSymbol ennola(const MalleSymbol& s) {
    const int n = s.n, d = s.d;
    MalleSymbol g{n, d, {}, {}};
    for (int i = 0; i < n; ++i) g.k.push_back(res(s.k[i] + i - n * (n + 3) / 2, d));
    for (int v : s.f) g.f.push_back(res(v - n * (n + 1) / 2, d));
    std::sort(g.f.begin(), g.f.end());
    validate_symbol(g);
    return g;
}

Weight ennola_gamma(const RootDatum& rd) {
    const int n = rd.rank;
    return Rational((n + 1) * (n + 2) / 2) * rd.fundamental_weights[0] - rd.rho;
}

std::vector<std::vector<int>> d_symbol(const MalleSymbol& s) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.d));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.d; ++j)
            if (j != s.k[i]) rows[j].push_back(i);
    for (int v : s.f) rows[v].push_back(s.n);
    return rows;
}

std::string tableau(const MalleSymbol& s) {
    std::ostringstream os;
    os << "(";
    auto rows = d_symbol(s);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        os << (j ? "," : "") << "[";
        for (std::size_t i = 0; i < rows[j].size(); ++i) os << (i ? "," : "") << rows[j][i];
        os << "]";
    }
    os << ")";
    return os.str();
}

}  // namespace modcat
