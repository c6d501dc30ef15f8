"""Independent oracles for frozen test values.

Exact values come from clearing denominators in the scalar equations with
sympy; numeric cross-checks build the Dirichlet-to-Neumann matrix with numpy.
Run: python3 tests/oracles/closed_forms.py
"""
import itertools
import numpy as np
import sympy as sp

lam, rho = sp.symbols("lam rho")


def spider_root(lengths):
    l1, l2 = lengths[0], lengths[1]
    F = sum(1 / (1 - l * lam) for l in lengths)
    num = sp.numer(sp.together(F))
    poly = sp.Poly(sp.expand(num), lam)
    lo, hi = 1 / sp.Integer(l1), 1 / sp.Integer(l2)
    if poly.degree() <= 2:
        roots = [r for r in sp.solve(poly.as_expr(), lam) if r.is_real and lo < r < hi]
        assert len(roots) == 1, roots
        return sp.nsimplify(sp.simplify(roots[0]))
    roots = [r for r in poly.nroots(n=30) if r.is_real and lo < r < hi]
    assert len(roots) == 1, roots
    return roots[0]


def ds_rho(a, b):
    r = a[0]
    A = sum(1 / (rho - x) for x in a)
    B = sum(1 / (rho - x) for x in b)
    num = sp.numer(sp.together(1 / A + 1 / B - 1))
    poly = sp.Poly(sp.expand(num), rho)
    if poly.degree() <= 2:
        roots = [x for x in sp.solve(poly.as_expr(), rho) if x.is_real and x > r]
    else:
        roots = [x for x in poly.nroots(n=30) if x.is_real and x > r]
    assert len(roots) == 1, roots
    return sp.simplify(roots[0])


def spider_edges(lengths):
    edges, nxt = [], 1
    for l in lengths:
        prev = 0
        for _ in range(l):
            edges.append((prev, nxt)); prev = nxt; nxt += 1
    return nxt, edges


def ds_edges(a, b):
    edges, nxt = [(0, 1)], 2
    for root, side in ((0, a), (1, b)):
        for l in side:
            prev = root
            for _ in range(l):
                edges.append((prev, nxt)); prev = nxt; nxt += 1
    return nxt, edges


def dtn_lambda2(n, edges):
    L = np.zeros((n, n))
    for u, v in edges:
        L[u, u] += 1; L[v, v] += 1; L[u, v] -= 1; L[v, u] -= 1
    deg = np.diag(L)
    B = [i for i in range(n) if deg[i] == 1]
    I = [i for i in range(n) if deg[i] != 1]
    S = L[np.ix_(B, B)] - L[np.ix_(B, I)] @ np.linalg.solve(L[np.ix_(I, I)], L[np.ix_(I, B)])
    return np.sort(np.linalg.eigvalsh(S))[1]


def show(name, expr, numeric=None):
    val = float(sp.N(expr, 30))
    line = f"{name:32s} {sp.simplify(expr)!s:28s} {val:.17g}"
    if numeric is not None:
        line += f"   dtn={numeric:.17g} diff={abs(numeric - val):.2e}"
    print(line)


for prof in [(3, 2, 1), (2, 1, 1), (3, 2, 2), (4, 1, 1), (2, 1), (3, 2, 1, 1), (5, 4, 3, 2), (4, 3, 2, 2),
             (3, 2, 1, 1, 1), (5, 2, 2, 1), (4, 3, 2, 1), (4, 3, 3, 1), (5, 4, 4, 1, 1), (5, 4, 3, 2, 1)]:
    show(f"spider{prof}", spider_root(prof), dtn_lambda2(*spider_edges(prof)))

for a, b in [((2,), (2,)), ((2, 1), (2,)), ((3, 1), (3, 1)), ((2, 1), (2, 1)), ((2, 1, 1), (2,)),
             ((3, 2, 1), (3, 3)), ((3, 1, 1), (3,))]:
    r = ds_rho(list(a), list(b))
    show(f"rho DS{a};{b}", r)
    show(f"lambda DS{a};{b}", 1 / r, dtn_lambda2(*ds_edges(a, b)))

# Balanced family at non-feasible endpoint / feasible q
def sigma(r, M, q):
    c = M // q
    t = M - c * q
    lengths = [r + 1, r] + [c + 1] * t + [c] * (q - t)
    return spider_root(lengths)

for r, M in [(2, 2), (4, 5), (5, 12)]:
    qs = range(-(-M // r), M + 1)
    print(f"Sigma_{r},{M}:", [(q, float(sp.N(sigma(r, M, q), 20))) for q in qs])
show("Sigma(2,2,2)", sigma(2, 2, 2))

# Threshold data
def threshold(r, t):
    s = (r + 1) // 2
    P = 1 - 3 * s * lam + (2 * s * s + s - 2 * t - 1) * lam ** 2
    z = [x for x in sp.solve(P, lam) if 1 / sp.Integer(r + 1) < x < 1 / sp.Integer(r)][0]
    kappa = -(1 - s * z) * (1 / (1 - (r + 1) * z) + 1 / (1 - r * z) + (t - s + 1) / (1 - s * z) + (s - t) / (1 - (s - 1) * z))
    return sp.simplify(z), sp.nsimplify(sp.radsimp(sp.simplify(kappa)))

for r, t in [(4, 1), (6, 2)]:
    z, k = threshold(r, t)
    show(f"zeta r={r} t={t}", z)
    show(f"kappa r={r} t={t}", k)

# Star and path DtN spectra
print("star3 spectrum", np.linalg.eigvalsh(np.eye(3) - np.ones((3, 3)) / 3))
