"""Regenerates tests/data/oracles.json from an independent implementation.

Everything here is floating point (numpy) or sympy; nothing is shared with the
C++ core. Run from the repository root:

    python3 tools/oracles.py
"""

import cmath
import itertools
import json
from fractions import Fraction as F
from pathlib import Path

import numpy as np
import sympy

GRID = [(1, 3), (1, 4), (2, 4), (1, 5), (2, 5)]


def perm_sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


# Malle symbols and the determinant form of the Fourier matrix.

def symbols(n, d):
    out = []
    for f in itertools.combinations(range(d), n + 1):
        for k in itertools.product(range(d), repeat=n):
            if (sum(f) - sum(k)) % d == 0:
                out.append((f, k))
    return out


def partial(f, k, i):
    return sum(f[:i]) - sum(k[: i - 1])


def frobenius_exponent(f, k, d):
    n = len(k)
    return sum((k[i - 1] - f[i - 1]) * partial(f, k, i) for i in range(1, n + 1)) % d


def malle_s_determinant(n, d, a, b):
    zeta = cmath.exp(2j * cmath.pi / d)
    (f, k), (g, kg) = a, b
    tau = 1
    for i in range(d):
        for j in range(i + 1, d):
            tau *= zeta**i - zeta**j
    det = 0
    for p in itertools.permutations(range(n + 1)):
        term = 1
        for i in range(n + 1):
            term *= zeta ** (f[i] * g[p[i]])
        det += perm_sign(p) * term
    bold = (-1) ** (sum(k) + sum(kg)) * (-1) ** (n * d * (d - 1) // 2) * tau**n / d**n
    for i in range(n):
        bold *= zeta ** (-k[i] * kg[i])
    bold *= det
    return (-1) ** (n * (d - 1)) / tau**n * np.conj(bold)


def special_index(syms, n, d):
    sp = (tuple(range(n + 1)), tuple(range(1, n + 1)))
    return syms.index(sp)


def verlinde(S, unit):
    N = np.einsum("fk,gk,hk,k->fgh", S, S, np.conj(S), 1 / S[unit])
    R = np.rint(N.real)
    err = max(np.abs(N - R).max(), 0.0)
    return R.astype(int), float(err)


# Root data, Weyl groups and the quantum S-matrix.

def gram(t, n):
    G = [[0] * n for _ in range(n)]
    for i in range(n):
        G[i][i] = 2 if t == "A" or i == 0 else 4
        if i + 1 < n:
            G[i][i + 1] = G[i + 1][i] = -1 if t == "A" else -2
    return G


class RootData:
    def __init__(self, t, n):
        self.t, self.n, self.G = t, n, gram(t, n)
        M = [[F(2 * self.G[i][j], self.G[j][j]) for j in range(n)] for i in range(n)]
        Mi = sympy.Matrix(M).inv()
        self.fw = [[F(str(Mi[k, i])) for i in range(n)] for k in range(n)]
        self.rho = [sum(self.fw[k][i] for k in range(n)) for i in range(n)]

        def refl(i):
            R = [[F(0)] * n for _ in range(n)]
            for c in range(n):
                v = [F(0)] * n
                v[c] = F(1)
                v[i] -= M[c][i]
                for r in range(n):
                    R[r][c] = v[r]
            return R

        gens = [refl(i) for i in range(n)]
        ident = tuple(tuple(F(int(i == j)) for j in range(n)) for i in range(n))
        els, frontier = {ident: 1}, [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gens:
                    p = tuple(tuple(sum(g[i][k] * m[k][j] for k in range(n)) for j in range(n)) for i in range(n))
                    if p not in els:
                        els[p] = -els[m]
                        nxt.append(p)
            frontier = nxt
        self.W = list(els.items())
        roots = set()
        for w, _ in self.W:
            for i in range(n):
                e = [F(int(i == j)) for j in range(n)]
                roots.add(tuple(self.act(w, e)))
        self.positive = [r for r in roots if all(x >= 0 for x in r)]

    def pair(self, u, v):
        return sum(u[i] * self.G[i][j] * v[j] for i in range(self.n) for j in range(self.n))

    def act(self, w, v):
        return [sum(w[i][j] * v[j] for j in range(self.n)) for i in range(self.n)]

    def weight(self, coords):
        return [sum(F(coords[k]) * self.fw[k][i] for k in range(self.n)) for i in range(self.n)]


def add(u, v):
    return [a + b for a, b in zip(u, v)]


def sub(u, v):
    return [a - b for a, b in zip(u, v)]


def sc(c, u):
    return [c * a for a in u]


def dot_action(rd, w, lam, mu):
    s = sc(F(1, 2), add(lam, mu))
    t = sc(F(1, 2), sub(lam, mu))
    ws = rd.act(w, add(s, rd.rho))
    return sub(add(ws, t), rd.rho), sub(sub(ws, t), rd.rho)


def quantum_s(rd, xi, a, b):
    lam, mu = a
    two = sc(2, rd.rho)
    num = 0
    for w, sg in rd.W:
        l2, m2 = dot_action(rd, w, *b)
        num += sg * xi(rd.pair(add(two, lam), m2) + rd.pair(mu, add(l2, two)))
    z = [F(0)] * rd.n
    den = sum(sg * xi(rd.pair(two, dot_action(rd, w, z, z)[1])) for w, sg in rd.W)
    return num / den


def twist(rd, xi, a):
    lam, mu = a
    return xi(rd.pair(add(lam, sc(2, rd.rho)), mu))


def alcove_size(rd, lprime):
    # Brute force over dominant weights with bounded coordinates. The wall is
    # the highest root when D | l', else the highest short root.
    D = 1 if rd.t == "A" else 2
    short = min(rd.G[i][i] for i in range(rd.n))
    cands = rd.positive if lprime % D == 0 else [r for r in rd.positive if rd.pair(r, r) == short]
    theta = list(max(cands, key=sum))
    count = 0
    for c in itertools.product(range(lprime), repeat=rd.n):
        if rd.pair(add(rd.weight(c), rd.rho), theta) < lprime:
            count += 1
    return count


def cplx(z):
    return [round(float(z.real), 12), round(float(z.imag), 12)]


def main():
    out = {}

    out["cyclotomic_polynomials"] = {
        str(n): [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, sympy.Symbol("x"))).all_coeffs())]
        for n in list(range(1, 41)) + [60, 84, 105, 140]
    }
    out["totient"] = {str(n): int(sympy.totient(n)) for n in [1, 2, 12, 20, 28, 60, 84, 105, 140, 560]}

    lie = {}
    for t, n in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3)]:
        rd = RootData(t, n)
        lie[f"{t}{n}"] = {"weyl_order": len(rd.W), "positive_roots": len(rd.positive),
                          "rho_alpha": [str(x) for x in rd.rho]}
    out["root_data"] = lie
    out["alcove_sizes"] = {"A1_3": alcove_size(RootData("A", 1), 3), "A2_4": alcove_size(RootData("A", 2), 4),
                           "A2_5": alcove_size(RootData("A", 2), 5), "B2_10": alcove_size(RootData("B", 2), 10),
                           "B3_14": alcove_size(RootData("B", 3), 14)}

    malle = {}
    for n, d in GRID:
        syms = symbols(n, d)
        S = np.array([[malle_s_determinant(n, d, a, b) for b in syms] for a in syms])
        unit = special_index(syms, n, d)
        N, err = verlinde(S, unit)
        entry = {
            "labels": [{"f": list(f), "k": list(k)} for f, k in syms],
            "frobenius_exponents": [frobenius_exponent(f, k, d) for f, k in syms],
            "unit_index": unit,
            "verlinde_rounding_error": err,
            "verlinde_min": int(N.min()),
            "verlinde_max": int(N.max()),
            "verlinde_negative_count": int((N < 0).sum()),
            "verlinde_abs_sum": int(np.abs(N).sum()),
        }
        if len(syms) <= 20:
            entry["S_determinant_form"] = [[cplx(x) for x in row] for row in S]
            entry["N_sparse"] = [[int(f), int(g), int(h), int(N[f, g, h])] for f, g, h in zip(*np.nonzero(N))]
        else:
            entry["S_determinant_form_row0"] = [cplx(x) for x in S[0]]
            entry["S_determinant_form_diag"] = [cplx(S[i, i]) for i in range(len(syms))]
        malle[f"{n},{d}"] = entry
    out["malle"] = malle

    # G27: B2 at l = 20, xi = exp(2 pi i/20); G24: B3 at l = 28.
    quantum = {}
    for key, (t, n, l, reps) in {
        "G27": ("B", 2, 20, [((0, 0), (0, 0)), ((0, 2), (0, 2)), ((2, 0), (2, 0)), ((0, 1), (0, 1)),
                             ((6, 1), (-4, 1)), ((6, 0), (-4, 0))]),
        "G24": ("B", 3, 28, [((0, 0, 0), (0, 0, 0)), ((14, 0, 0), (-14, 0, 0)), ((22, 0, 0), (-20, 0, 0)),
                             ((22, 0, 1), (-20, 0, 1)), ((0, 0, 1), (0, 0, 1)), ((0, 1, 0), (0, 1, 0)),
                             ((2, 0, 0), (2, 0, 0))]),
    }.items():
        rd = RootData(t, n)

        def xi(e, l=l):
            return cmath.exp(2j * cmath.pi * float(e) / l)

        labels = [(rd.weight(a), rd.weight(b)) for a, b in reps]
        quantum[key] = {
            "S": [[cplx(quantum_s(rd, xi, a, b)) for b in labels] for a in labels],
            "T": [cplx(twist(rd, xi, a)) for a in labels],
        }
    out["quantum"] = quantum

    path = Path(__file__).resolve().parent.parent / "tests" / "data" / "oracles.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
