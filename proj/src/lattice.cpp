#include "modcat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace modcat {

std::string to_string(LieType t) { return t == LieType::A ? "A" : "B"; }

LieType parse_lie_type(const std::string& s) {
    if (s == "A" || s == "a") return LieType::A;
    if (s == "B" || s == "b") return LieType::B;
    throw LatticeError("unsupported Lie type '" + s + "' (A or B)");
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r(a);
    for (auto& x : r) x = -x;
    return r;
}

Weight operator*(const Rational& c, const Weight& a) {
    Weight r(a);
    for (auto& x : r) x *= c;
    return r;
}

Weight zero_weight(int n) { return Weight(static_cast<std::size_t>(n), Rational(0)); }

Weight WeylElement::apply(const Weight& v) const {
    Weight r = zero_weight(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto m = matrix[static_cast<std::size_t>(i * n + j)];
            if (m != 0) r[i] += Rational(static_cast<long>(m)) * v[j];
        }
    return r;
}

namespace {

using Mat = std::vector<std::int64_t>;

Mat mat_mul(const Mat& a, const Mat& b, int n) {
    Mat c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            auto x = a[static_cast<std::size_t>(i * n + k)];
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += x * b[static_cast<std::size_t>(k * n + j)];
        }
    return c;
}

std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw LatticeError("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Integer floor_div(const Rational& a, const Integer& b) {
    Integer num = a.get_num(), den = a.get_den() * b, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

RootDatum build_root_datum(LieType type, int rank, std::size_t weyl_bound) {
    if (rank < 1) throw LatticeError("rank must be at least 1");
    if (type == LieType::B && rank < 2) throw LatticeError("type B requires rank >= 2");
    RootDatum rd;
    rd.type = type;
    rd.rank = rank;
    const int n = rank;
    auto un = static_cast<std::size_t>(n);
    rd.gram.assign(un, std::vector<Rational>(un, 0));
    for (int i = 0; i < n; ++i) {
        // Type B: alpha_1 is the short simple root, the others are long.
        Rational diag = (type == LieType::B && i > 0) ? 4 : 2;
        rd.gram[i][i] = diag;
        if (i + 1 < n) {
            Rational off = (type == LieType::B) ? -2 : -1;
            rd.gram[i][i + 1] = off;
            rd.gram[i + 1][i] = off;
        }
    }
    rd.cartan.assign(un, std::vector<int>(un, 0));
    std::vector<std::vector<Rational>> cart_q(un, std::vector<Rational>(un));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational c = 2 * rd.gram[i][j] / rd.gram[j][j];
            cart_q[i][j] = c;
            rd.cartan[i][j] = static_cast<int>(c.get_num().get_si());
        }
    // varpi_i = sum_k (A^{-1})_{ik} alpha_k
    auto inv = rational_inverse(cart_q);
    rd.fundamental_weights.assign(un, zero_weight(n));
    rd.rho = zero_weight(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) rd.fundamental_weights[i][k] = inv[i][k];
        rd.rho = rd.rho + rd.fundamental_weights[i];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational p = pairing(rd, rd.fundamental_weights[i], rd.fundamental_weights[j]);
            rd.L = static_cast<int>(std::lcm(static_cast<long>(rd.L), p.get_den().get_si()));
        }

    // Weyl group: breadth-first closure of the simple reflections.
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i) {
        Mat s(static_cast<std::size_t>(n * n), 0);
        for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(k * n + k)] = 1;
        // (s_i v)_i = v_i - sum_j v_j <alpha_j, alpha_i^vee>
        for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(i * n + j)] -= rd.cartan[j][i];
        gens.push_back(s);
    }
    std::map<Mat, std::size_t> seen;
    Mat id(static_cast<std::size_t>(n * n), 0);
    for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k * n + k)] = 1;
    rd.weyl.push_back(WeylElement{n, id, 1, 0, 0});
    seen[id] = 0;
    for (std::size_t head = 0; head < rd.weyl.size(); ++head) {
        for (const auto& g : gens) {
            Mat m = mat_mul(g, rd.weyl[head].matrix, n);
            if (seen.count(m)) continue;
            if (rd.weyl.size() >= weyl_bound)
                throw LatticeError("Weyl group exceeds bound " + std::to_string(weyl_bound));
            seen[m] = rd.weyl.size();
            rd.weyl.push_back(WeylElement{n, m, -rd.weyl[head].parity, rd.weyl[head].length + 1, 0});
        }
    }
    for (auto& w : rd.weyl) {
        std::vector<std::vector<Rational>> q(un, std::vector<Rational>(un));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q[i][j] = Rational(static_cast<long>(w.matrix[static_cast<std::size_t>(i * n + j)]));
        auto qi = rational_inverse(q);
        Mat mi(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mi[static_cast<std::size_t>(i * n + j)] = qi[i][j].get_num().get_si();
        w.inverse = seen.at(mi);
    }
    rd.w0 = static_cast<std::size_t>(std::max_element(rd.weyl.begin(), rd.weyl.end(),
                                                      [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; }) -
                                     rd.weyl.begin());

    // Roots: W-orbits of the simple roots.
    std::map<std::vector<int>, int> roots;  // root -> squared length
    for (int i = 0; i < n; ++i) {
        Weight a = simple_root(rd, i);
        for (const auto& w : rd.weyl) {
            Weight r = w.apply(a);
            std::vector<int> ri(un);
            for (int k = 0; k < n; ++k) ri[k] = static_cast<int>(r[k].get_num().get_si());
            roots[ri] = static_cast<int>(rd.gram[i][i].get_num().get_si());
        }
    }
    int min_len = 1 << 30, max_len = 0;
    for (const auto& [r, len] : roots) {
        min_len = std::min(min_len, len);
        max_len = std::max(max_len, len);
    }
    rd.D = max_len / min_len;
    int best = -1, best_short = -1;
    for (const auto& [r, len] : roots) {
        if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
        rd.positive_roots.push_back(r);
        int h = std::accumulate(r.begin(), r.end(), 0);
        if (h > best) {
            best = h;
            rd.highest_root = r;
        }
        if (len == min_len && h > best_short) {
            best_short = h;
            rd.highest_short_root = r;
        }
    }
    std::sort(rd.positive_roots.begin(), rd.positive_roots.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        return ha != hb ? ha < hb : a < b;
    });
    rd.coxeter_number = static_cast<int>(2 * rd.positive_roots.size()) / n;
    Weight theta = root_weight(rd.highest_root);
    Rational hv = 2 * pairing(rd, rd.rho, theta) / pairing(rd, theta, theta) + 1;
    rd.dual_coxeter_number = static_cast<int>(hv.get_num().get_si());
    return rd;
}

const std::vector<WeylElement>& enumerate_weyl(const RootDatum& rd) { return rd.weyl; }

Rational pairing(const RootDatum& rd, const Weight& v, const Weight& w) {
    Rational s = 0;
    for (int i = 0; i < rd.rank; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < rd.rank; ++j)
            if (w[j] != 0 && rd.gram[i][j] != 0) s += v[i] * rd.gram[i][j] * w[j];
    }
    return s;
}

Rational coroot_pairing(const RootDatum& rd, const Weight& v, int i) {
    Rational s = 0;
    for (int k = 0; k < rd.rank; ++k) s += v[k] * rd.gram[k][i];
    return 2 * s / rd.gram[i][i];
}

Weight simple_root(const RootDatum& rd, int i) {
    Weight a = zero_weight(rd.rank);
    a[i] = 1;
    return a;
}

Weight root_weight(const std::vector<int>& r) {
    Weight w(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = r[i];
    return w;
}

Weight to_fundamental(const RootDatum& rd, const Weight& v) {
    Weight c(static_cast<std::size_t>(rd.rank));
    for (int i = 0; i < rd.rank; ++i) c[i] = coroot_pairing(rd, v, i);
    return c;
}

Weight from_fundamental(const RootDatum& rd, const std::vector<Rational>& c) {
    Weight v = zero_weight(rd.rank);
    for (int i = 0; i < rd.rank; ++i)
        if (c[i] != 0) v = v + c[i] * rd.fundamental_weights[i];
    return v;
}

Weight from_fundamental(const RootDatum& rd, const std::vector<int>& c) {
    std::vector<Rational> q(c.begin(), c.end());
    return from_fundamental(rd, q);
}

bool in_P(const RootDatum& rd, const Weight& v) {
    for (int i = 0; i < rd.rank; ++i)
        if (coroot_pairing(rd, v, i).get_den() != 1) return false;
    return true;
}

bool in_Q(const Weight& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool in_Pplus(const RootDatum& rd, const Weight& v) {
    for (int i = 0; i < rd.rank; ++i) {
        Rational c = coroot_pairing(rd, v, i);
        if (c.get_den() != 1 || c < 0) return false;
    }
    return true;
}

WeightPairRaw dot_action(const RootDatum& rd, const WeylElement& w, const WeightPairRaw& p) {
    const Rational half(1, 2);
    Weight s = half * (p.lambda + p.mu) + rd.rho;
    Weight t = half * (p.lambda - p.mu);
    Weight ws = w.apply(s);
    return {ws + t - rd.rho, ws - t - rd.rho};
}

void check_admissible(const RootDatum& rd, int lprime) {
    if (lprime % rd.D == 0) {
        if (lprime < rd.D * rd.dual_coxeter_number)
            throw LatticeError("inadmissible l' = " + std::to_string(lprime) + ": l' >= D*h^vee = " +
                               std::to_string(rd.D * rd.dual_coxeter_number) + " required");
    } else if (lprime <= rd.coxeter_number) {
        throw LatticeError("inadmissible l' = " + std::to_string(lprime) + ": l' > h = " + std::to_string(rd.coxeter_number) +
                           " required");
    }
}

std::vector<int> alcove_theta(const RootDatum& rd, int lprime) {
    return lprime % rd.D == 0 ? rd.highest_root : rd.highest_short_root;
}

std::vector<Weight> alcove(const RootDatum& rd, int lprime) {
    check_admissible(rd, lprime);
    Weight theta = root_weight(alcove_theta(rd, lprime));
    std::vector<Rational> step(static_cast<std::size_t>(rd.rank));
    for (int i = 0; i < rd.rank; ++i) step[i] = pairing(rd, rd.fundamental_weights[i], theta);
    Rational budget = Rational(lprime) - pairing(rd, rd.rho, theta);

    std::vector<std::vector<int>> coords;
    std::vector<int> cur(static_cast<std::size_t>(rd.rank), 0);
    std::function<void(int, Rational)> rec = [&](int i, Rational used) {
        if (i == rd.rank) {
            coords.push_back(cur);
            return;
        }
        for (int a = 0; used + a * step[i] < budget; ++a) {
            cur[i] = a;
            rec(i + 1, used + a * step[i]);
        }
        cur[i] = 0;
    };
    rec(0, 0);
    std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
        int la = std::accumulate(a.begin(), a.end(), 0), lb = std::accumulate(b.begin(), b.end(), 0);
        return la != lb ? la < lb : a > b;
    });
    std::vector<Weight> out;
    for (const auto& c : coords) out.push_back(from_fundamental(rd, c));
    return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    std::size_t r = a.size(), m = r ? a[0].size() : 0;
    // Rows of [A^T | I_m], reduced by unimodular row operations on the first r columns.
    IntMatrix work(m, std::vector<Integer>(r + m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < r; ++j) work[i][j] = a[j][i];
        work[i][r + i] = 1;
    }
    std::size_t prow = 0;
    for (std::size_t c = 0; c < r && prow < m; ++c) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = prow; i < m; ++i)
                if (work[i][c] != 0 && (best == m || abs(work[i][c]) < abs(work[best][c]))) best = i;
            if (best == m) break;
            std::swap(work[best], work[prow]);
            bool done = true;
            for (std::size_t i = prow + 1; i < m; ++i) {
                if (work[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), work[i][c].get_mpz_t(), work[prow][c].get_mpz_t());
                for (std::size_t j = 0; j < r + m; ++j) work[i][j] -= q * work[prow][j];
                if (work[i][c] != 0) done = false;
            }
            if (done) {
                ++prow;
                break;
            }
        }
    }
    IntMatrix ker;
    for (std::size_t i = prow; i < m; ++i) ker.emplace_back(work[i].begin() + static_cast<std::ptrdiff_t>(r), work[i].end());
    return ker;
}

IntMatrix lower_hnf(IntMatrix rows, int n) {
    auto un = static_cast<std::size_t>(n);
    IntMatrix basis(un);
    for (int c = n - 1; c >= 0; --c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
            if (best == rows.size()) throw LatticeError("lattice is not of full rank");
            bool done = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t());
                for (std::size_t j = 0; j < un; ++j) rows[i][j] -= q * rows[best][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) {
                basis[c] = rows[best];
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
        }
        if (basis[c][c] < 0)
            for (auto& x : basis[c]) x = -x;
    }
    for (int c = n - 1; c >= 0; --c)
        for (int j = c + 1; j < n; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), basis[j][c].get_mpz_t(), basis[c][c].get_mpz_t());
            if (q != 0)
                for (std::size_t k = 0; k < un; ++k) basis[j][k] -= q * basis[c][k];
        }
    return basis;
}

Sublattice sublattice_ops(const RootDatum& rd, int lprime) {
    const int n = rd.rank;
    auto un = static_cast<std::size_t>(n);
    // Columns of B span l'Q^vee: l' * (2/<a_i,a_i>) a_i.
    std::vector<std::vector<Rational>> b(un, std::vector<Rational>(un, 0));
    Integer m = 1;
    for (int i = 0; i < n; ++i) {
        b[i][i] = Rational(2 * lprime) / rd.gram[i][i];
        b[i][i].canonicalize();
        m = lcm(m, Integer(b[i][i].get_den()));
    }
    // x in Z^n with Bx in Z^n  <=>  (mB) x - m y = 0 for some y in Z^n; y is the lattice vector.
    IntMatrix a(un, std::vector<Integer>(2 * un, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational v = b[i][j] * Rational(m);
            a[i][j] = v.get_num();
        }
        a[i][un + static_cast<std::size_t>(i)] = -m;
    }
    IntMatrix ker = integer_kernel(a);
    IntMatrix gens;
    for (const auto& z : ker) gens.emplace_back(z.begin() + n, z.end());
    Sublattice s;
    s.lprime = lprime;
    s.basis = lower_hnf(gens, n);
    s.quotient_size = 1;
    for (int i = 0; i < n; ++i) s.quotient_size *= s.basis[i][i];
    std::vector<std::vector<Rational>> cq(un, std::vector<Rational>(un));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cq[i][j] = rd.cartan[i][j];
    // |P/Q| = det(Cartan), by elimination.
    Rational det = 1;
    for (std::size_t c = 0; c < un; ++c) {
        std::size_t p = c;
        while (p < un && cq[p][c] == 0) ++p;
        if (p != c) {
            std::swap(cq[p], cq[c]);
            det = -det;
        }
        det *= cq[c][c];
        for (std::size_t i = c + 1; i < un; ++i) {
            Rational f = cq[i][c] / cq[c][c];
            for (std::size_t j = c; j < un; ++j) cq[i][j] -= f * cq[c][j];
        }
    }
    s.p_mod_q = abs(det.get_num());
    return s;
}

Weight Sublattice::canonical_rep(const Weight& v) const {
    Weight r = v;
    for (std::size_t i = basis.size(); i-- > 0;) {
        Integer q = floor_div(r[i], basis[i][i]);
        if (q == 0) continue;
        for (std::size_t k = 0; k <= i; ++k) r[k] -= Rational(q * basis[i][k]);
    }
    return r;
}

bool Sublattice::contains(const Weight& v) const {
    Weight r = canonical_rep(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Weight> Sublattice::q_quotient() const {
    std::size_t n = basis.size();
    std::vector<Weight> out;
    std::vector<long> cur(n, 0);
    for (;;) {
        Weight w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = cur[i];
        out.push_back(w);
        bool wrapped = true;
        for (std::size_t i = n; i > 0 && wrapped; --i) {
            if (++cur[i - 1] < basis[i - 1][i - 1].get_si())
                wrapped = false;
            else
                cur[i - 1] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

std::string weight_to_string(const Weight& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace modcat
