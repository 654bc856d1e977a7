#include "modcat/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace modcat {

namespace {

struct FieldData {
    std::uint32_t n = 1;
    std::uint32_t phi = 1;
    std::vector<Integer> poly;                 // Phi_n, degree phi, monic
    std::vector<std::vector<std::int64_t>> pw;  // x^k mod Phi_n for k in [0, n)
};

std::vector<Integer> poly_divexact(std::vector<Integer> a, const std::vector<Integer>& b) {
    // b monic
    std::size_t db = b.size() - 1;
    std::vector<Integer> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

std::unique_ptr<FieldData> build_field(std::uint32_t n);

const FieldData& field(std::uint32_t n) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<FieldData>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto built = build_field(n);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

std::unique_ptr<FieldData> build_field(std::uint32_t n) {
    auto fd = std::make_unique<FieldData>();
    fd->n = n;
    // x^n - 1 divided by Phi_m for every proper divisor m.
    std::vector<Integer> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t m = 1; m < n; ++m)
        if (n % m == 0) p = poly_divexact(p, field(m).poly);
    fd->poly = p;
    fd->phi = static_cast<std::uint32_t>(p.size() - 1);
    std::uint32_t phi = fd->phi;

    fd->pw.assign(n, std::vector<std::int64_t>(phi, 0));
    std::vector<Integer> cur(phi, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        for (std::uint32_t j = 0; j < phi; ++j) {
            if (!cur[j].fits_slong_p()) throw CycloError("power table overflow");
            fd->pw[k][j] = cur[j].get_si();
        }
        // multiply by x and reduce
        Integer top = cur[phi - 1];
        for (std::uint32_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::uint32_t j = 0; j < phi; ++j) cur[j] -= top * p[j];
    }
    return fd;
}

std::int64_t mod_pos(std::int64_t k, std::int64_t n) {
    std::int64_t r = k % n;
    return r < 0 ? r + n : r;
}

// Reduce a polynomial of arbitrary length in x modulo Phi_n.
std::vector<Integer> reduce_poly(const FieldData& fd, const std::vector<Integer>& full) {
    std::vector<Integer> out(fd.phi, 0);
    for (std::size_t k = 0; k < full.size(); ++k) {
        if (full[k] == 0) continue;
        std::size_t kk = k % fd.n;
        if (kk < fd.phi) {
            out[kk] += full[k];
        } else {
            const auto& row = fd.pw[kk];
            for (std::uint32_t j = 0; j < fd.phi; ++j)
                if (row[j] != 0) {
                    if (row[j] > 0)
                        mpz_addmul_ui(out[j].get_mpz_t(), full[k].get_mpz_t(), static_cast<unsigned long>(row[j]));
                    else
                        mpz_submul_ui(out[j].get_mpz_t(), full[k].get_mpz_t(), static_cast<unsigned long>(-row[j]));
                }
        }
    }
    return out;
}

// Rational polynomials for the inverse computation.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        Rational c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    trim(c);
    return c;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) { return field(n).phi; }

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

const std::vector<Integer>& cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw CycloError("conductor must be positive");
    return field(n).poly;
}

CycNum::CycNum() : n_(1), num_(1, 0), den_(1) {}

CycNum::CycNum(std::int64_t v) : n_(1), num_(1, Integer(static_cast<long>(v))), den_(1) {}

CycNum::CycNum(const Rational& q, std::uint32_t conductor) : n_(conductor), den_(q.get_den()) {
    if (conductor == 0) throw CycloError("conductor must be positive");
    num_.assign(field(conductor).phi, 0);
    num_[0] = q.get_num();
}

CycNum CycNum::from_power_basis(std::uint32_t conductor, const std::vector<Rational>& coeffs) {
    if (conductor == 0) throw CycloError("conductor must be positive");
    const FieldData& fd = field(conductor);
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> full(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) full[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
    CycNum r;
    r.n_ = conductor;
    r.num_ = reduce_poly(fd, full);
    r.den_ = den;
    r.normalize();
    return r;
}

CycNum CycNum::from_integer_poly(std::uint32_t conductor, const std::vector<Integer>& full, const Integer& den) {
    if (conductor == 0) throw CycloError("conductor must be positive");
    if (den == 0) throw DivisionByZero();
    CycNum r;
    r.n_ = conductor;
    r.num_ = reduce_poly(field(conductor), full);
    r.den_ = den;
    if (den < 0) {
        r.den_ = -den;
        for (auto& c : r.num_) c = -c;
    }
    r.normalize();
    return r;
}

const std::vector<std::vector<std::int64_t>>& power_table(std::uint32_t n) {
    if (n == 0) throw CycloError("conductor must be positive");
    return field(n).pw;
}

void CycNum::normalize() {
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_)
            if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<Rational> CycNum::coeffs() const {
    std::vector<Rational> out(num_.size());
    for (std::size_t j = 0; j < num_.size(); ++j) {
        out[j] = Rational(num_[j], den_);
        out[j].canonicalize();
    }
    return out;
}

bool CycNum::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycNum::is_rational() const {
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycNum::is_integer() const { return is_rational() && den_ == 1; }

Rational CycNum::rational_part() const {
    if (!is_rational()) throw CycloError("value is not rational");
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> s = 0;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0) continue;
        double c = Rational(num_[j], den_).get_d();
        double ang = two_pi * static_cast<double>(j) / static_cast<double>(n_);
        s += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.n_ != n_) {
        auto m = static_cast<std::uint32_t>(lcm_u(n_, o.n_));
        *this = embed(*this, m);
        return *this += embed(o, m);
    }
    if (den_ == o.den_) {
        for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
    } else {
        for (std::size_t j = 0; j < num_.size(); ++j) num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    if (o.n_ != n_) {
        auto m = static_cast<std::uint32_t>(lcm_u(n_, o.n_));
        *this = embed(*this, m);
        return *this *= embed(o, m);
    }
    const FieldData& fd = field(n_);
    if (o.is_rational()) {
        for (auto& c : num_) c *= o.num_[0];
        den_ *= o.den_;
        normalize();
        return *this;
    }
    std::vector<Integer> full(2 * fd.phi - 1, 0);
    for (std::uint32_t i = 0; i < fd.phi; ++i) {
        if (num_[i] == 0) continue;
        for (std::uint32_t j = 0; j < fd.phi; ++j)
            if (o.num_[j] != 0) mpz_addmul(full[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    num_ = reduce_poly(fd, full);
    den_ *= o.den_;
    normalize();
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.n_ != b.n_) {
        auto m = static_cast<std::uint32_t>(lcm_u(a.n_, b.n_));
        return embed(a, m) == embed(b, m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::scaled(const Rational& q) const {
    CycNum r = *this;
    for (auto& c : r.num_) c *= q.get_num();
    r.den_ *= q.get_den();
    r.normalize();
    return r;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        Rational q(den_, num_[0]);
        q.canonicalize();
        return CycNum(q, n_);
    }
    const FieldData& fd = field(n_);
    QPoly r0(fd.poly.begin(), fd.poly.end());
    QPoly r1(num_.begin(), num_.end());
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        qpoly_divmod(r0, r1, q, r);
        if (r.empty()) throw DivisionByZero();
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational c = r1[0];
    std::vector<Rational> coeffs(s1.size());
    for (std::size_t j = 0; j < s1.size(); ++j) coeffs[j] = s1[j] / c;
    // s1 has degree < phi already; den_ moves to the numerator.
    CycNum r = from_power_basis(n_, coeffs);
    return r.scaled(Rational(den_));
}

CycNum root_of_unity(std::uint32_t n, std::int64_t k) {
    if (n == 0) throw CycloError("conductor must be positive");
    const FieldData& fd = field(n);
    const auto& row = fd.pw[static_cast<std::size_t>(mod_pos(k, n))];
    std::vector<Rational> c(row.begin(), row.end());
    return CycNum::from_power_basis(n, c);
}

CycNum embed(const CycNum& a, std::uint32_t m) {
    if (m == 0 || m % a.n_ != 0) throw CycloError("embed: target conductor must be a multiple of " + std::to_string(a.n_));
    if (m == a.n_) return a;
    const FieldData& fd = field(m);
    std::uint32_t step = m / a.n_;
    std::vector<Integer> full(m, 0);
    for (std::size_t j = 0; j < a.num_.size(); ++j) full[j * step] = a.num_[j];
    CycNum r;
    r.n_ = m;
    r.num_ = reduce_poly(fd, full);
    r.den_ = a.den_;
    return r;
}

CycNum galois(const CycNum& a, std::int64_t u) {
    std::uint32_t n = a.conductor();
    if (std::gcd(mod_pos(u, n), static_cast<std::int64_t>(n)) != 1) throw CycloError("galois: exponent not a unit");
    std::vector<Rational> full(n, 0);
    auto c = a.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) full[static_cast<std::size_t>(mod_pos(static_cast<std::int64_t>(j) * u, n))] += c[j];
    return CycNum::from_power_basis(n, full);
}

CycNum conjugate(const CycNum& a) { return galois(a, -1); }

CycNum pow(const CycNum& a, std::int64_t e) {
    if (e < 0) return pow(a.inverse(), -e);
    CycNum result(Rational(1), a.conductor()), base = a;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

namespace {

// Solves E y = x for y, E of full column rank, exact.
bool solve_overdetermined(std::vector<std::vector<Rational>> e, std::vector<Rational> x, std::vector<Rational>& y) {
    std::size_t rows = e.size(), cols = rows ? e[0].size() : 0;
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && e[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(e[p], e[r]);
        std::swap(x[p], x[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || e[i][c] == 0) continue;
            Rational f = e[i][c] / e[r][c];
            for (std::size_t j = c; j < cols; ++j) e[i][j] -= f * e[r][j];
            x[i] -= f * x[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (x[i] != 0) return false;
    y.assign(cols, 0);
    for (std::size_t i = 0; i < r; ++i) y[pivcol[i]] = x[i] / e[i][pivcol[i]];
    return true;
}

}  // namespace

CycNum lower_conductor(const CycNum& a) {
    std::uint32_t n = a.conductor();
    if (a.is_rational()) return CycNum(a.rational_part());
    for (std::uint32_t m = 2; m < n; ++m) {
        if (n % m != 0 || m % 4 == 2) continue;
        bool fixed = true;
        for (std::uint32_t u = 1 + m; u < n && fixed; u += m)
            if (std::gcd(u, n) == 1 && !(galois(a, u) == a)) fixed = false;
        if (!fixed) continue;
        const FieldData& big = field(n);
        const FieldData& small = field(m);
        std::uint32_t step = n / m;
        std::vector<std::vector<Rational>> e(big.phi, std::vector<Rational>(small.phi));
        for (std::uint32_t j = 0; j < small.phi; ++j)
            for (std::uint32_t i = 0; i < big.phi; ++i) e[i][j] = big.pw[j * step][i];
        std::vector<Rational> y;
        if (!solve_overdetermined(e, a.coeffs(), y)) continue;
        return CycNum::from_power_basis(m, y);
    }
    return a;
}

CycAccumulator::CycAccumulator(std::uint32_t n) : n_(n), counts_(n, 0) {
    if (n == 0) throw CycloError("conductor must be positive");
}

void CycAccumulator::add_power(std::int64_t k, std::int64_t mult) { counts_[static_cast<std::size_t>(mod_pos(k, n_))] += mult; }

CycNum CycAccumulator::value() const {
    const FieldData& fd = field(n_);
    std::vector<std::int64_t> acc(fd.phi, 0);
    for (std::uint32_t k = 0; k < n_; ++k) {
        if (counts_[k] == 0) continue;
        const auto& row = fd.pw[k];
        for (std::uint32_t j = 0; j < fd.phi; ++j) acc[j] += counts_[k] * row[j];
    }
    CycNum r;
    r.n_ = n_;
    r.num_.resize(fd.phi);
    for (std::uint32_t j = 0; j < fd.phi; ++j) r.num_[j] = static_cast<long>(acc[j]);
    r.den_ = 1;
    return r;
}

CycNum dot(std::span<const CycNum> a, std::span<const CycNum> b) {
    if (a.size() != b.size()) throw CycloError("dot: length mismatch");
    std::uint64_t m = 1;
    for (const auto& x : a) m = lcm_u(m, x.conductor());
    for (const auto& x : b) m = lcm_u(m, x.conductor());
    auto mm = static_cast<std::uint32_t>(m);
    const FieldData& fd = field(mm);
    Integer den = 1;
    std::vector<CycNum> ea, eb;
    ea.reserve(a.size());
    eb.reserve(b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        ea.push_back(embed(a[k], mm));
        eb.push_back(embed(b[k], mm));
        den = lcm(den, ea.back().denominator() * eb.back().denominator());
    }
    std::vector<Integer> full(2 * fd.phi - 1, 0);
    Integer scale;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto& na = ea[k].numerators();
        const auto& nb = eb[k].numerators();
        scale = den / (ea[k].denominator() * eb[k].denominator());
        for (std::uint32_t i = 0; i < fd.phi; ++i) {
            if (na[i] == 0) continue;
            Integer ai = na[i] * scale;
            for (std::uint32_t j = 0; j < fd.phi; ++j)
                if (nb[j] != 0) mpz_addmul(full[i + j].get_mpz_t(), ai.get_mpz_t(), nb[j].get_mpz_t());
        }
    }
    std::vector<Integer> red = reduce_poly(fd, full);
    std::vector<Rational> coeffs(red.size());
    for (std::size_t j = 0; j < red.size(); ++j) coeffs[j] = Rational(red[j], den);
    for (auto& q : coeffs) q.canonicalize();
    return CycNum::from_power_basis(mm, coeffs);
}

namespace {

std::int64_t legendre(std::int64_t a, std::int64_t p) {
    a = mod_pos(a, p);
    if (a == 0) return 0;
    std::int64_t e = (p - 1) / 2, result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

CycNum sqrt_prime_star(std::int64_t p) {
    // Quadratic Gauss sum: square equals (-1)^((p-1)/2) p.
    CycAccumulator acc(static_cast<std::uint32_t>(p));
    for (std::int64_t a = 1; a < p; ++a) acc.add_power(a, legendre(a, p));
    return acc.value();
}

CycNum fix_sign(const CycNum& x) {
    auto z = x.to_complex();
    if (z.real() < -1e-9 || (std::abs(z.real()) <= 1e-9 && z.imag() < 0)) return -x;
    return x;
}

}  // namespace

CycNum sqrt_of_prime(std::int64_t n) {
    if (n == 0) return CycNum(0);
    CycNum r(1);
    std::int64_t m = n < 0 ? -n : n;
    if (n < 0) r *= root_of_unity(4, 1);
    std::int64_t sq = 1;
    for (std::int64_t p = 2; p * p <= m; ++p)
        while (m % (p * p) == 0) {
            m /= p * p;
            sq *= p;
        }
    std::int64_t rest = m;
    for (std::int64_t p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        rest /= p;
        if (p == 2) {
            r *= root_of_unity(8, 1) + root_of_unity(8, -1);
        } else {
            CycNum g = sqrt_prime_star(p);
            if (p % 4 == 3) g *= -root_of_unity(4, 1);  // sqrt(-p) -> sqrt(p) up to sign
            r *= g;
        }
    }
    return fix_sign(lower_conductor(r.scaled(Rational(sq))));
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    CycNum parse() {
        CycNum v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw CycloError("parse_cyc: " + what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::int64_t integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        std::int64_t v = std::stoll(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }
    CycNum expr() {
        CycNum v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    CycNum term() {
        CycNum v = unary();
        for (;;) {
            if (eat('*'))
                v *= unary();
            else if (eat('/'))
                v /= unary();
            else
                return v;
        }
    }
    CycNum unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    CycNum power() {
        CycNum base = atom();
        if (eat('^')) return modcat::pow(base, integer());
        return base;
    }
    CycNum atom() {
        skip();
        if (eat('(')) {
            CycNum v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (s_.compare(pos_, 3, "ER(") == 0) {
            pos_ += 3;
            std::int64_t n = integer();
            if (!eat(')')) fail("expected ')'");
            return sqrt_of_prime(n);
        }
        if (s_.compare(pos_, 2, "E(") == 0) {
            pos_ += 2;
            std::int64_t n = integer();
            if (n <= 0) fail("conductor must be positive");
            if (!eat(')')) fail("expected ')'");
            return root_of_unity(static_cast<std::uint32_t>(n), 1);
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return CycNum(integer());
        fail("unexpected token");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

// Display basis: 1, z, ..., z^{phi-1}, except for an odd prime conductor p
// where irrational values use z, ..., z^{p-1} (no constant term).
std::vector<std::pair<std::size_t, Rational>> display_terms(const CycNum& x) {
    auto c = x.coeffs();
    std::vector<std::pair<std::size_t, Rational>> out;
    const std::uint32_t n = x.conductor();
    if (n > 2 && euler_phi(n) == n - 1 && !x.is_rational()) {
        Rational c0 = c[0];
        for (std::size_t j = 1; j < n; ++j) {
            Rational v = (j < c.size() ? c[j] : Rational(0)) - c0;
            if (v != 0) out.emplace_back(j, v);
        }
        return out;
    }
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) out.emplace_back(j, c[j]);
    return out;
}

template <class Term>
std::string render(const CycNum& a, Term term) {
    CycNum x = lower_conductor(a);
    std::ostringstream os;
    bool first = true;
    for (auto [j, q] : display_terms(x)) {
        bool neg = q < 0;
        if (neg) q = -q;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        os << term(q, j, x.conductor());
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

CycNum parse_cyc(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const CycNum& a) {
    return render(a, [](const Rational& q, std::size_t j, std::uint32_t n) {
        std::string root = "E(" + std::to_string(n) + ")" + (j > 1 ? "^" + std::to_string(j) : "");
        if (j == 0) return q.get_str();
        if (q == 1) return root;
        return q.get_str() + "*" + root;
    });
}

std::string to_latex(const CycNum& a) {
    return render(a, [](const Rational& q, std::size_t j, std::uint32_t n) {
        std::string coef;
        if (q.get_den() == 1)
            coef = q.get_num().get_str();
        else
            coef = "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
        if (j == 0) return coef;
        std::string root = "\\zeta_{" + std::to_string(n) + "}" + (j > 1 ? "^{" + std::to_string(j) + "}" : "");
        return q == 1 ? root : coef + root;
    });
}

}  // namespace modcat
