"""Independent oracle for the C++ test suites.

Dict-based exact multivariate polynomial arithmetic over Q, written from
scratch (no sympy, no shared code with the library under test). Used to
derive the frozen expected values in tests/ and the golden map files in
data/. Keep this file independent of the C++ implementation.

A polynomial is a dict {exponent-tuple: Fraction}, zero coefficients never
stored. A map is a list of polynomials.
"""

from fractions import Fraction
import itertools


def pzero():
    return {}


def pvar(i, n):
    e = [0] * n
    e[i] = 1
    return {tuple(e): Fraction(1)}


def pconst(c, n):
    c = Fraction(c)
    return {tuple([0] * n): c} if c else {}


def padd(a, b):
    r = dict(a)
    for m, c in b.items():
        s = r.get(m, Fraction(0)) + c
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def pneg(a):
    return {m: -c for m, c in a.items()}


def psub(a, b):
    return padd(a, pneg(b))


def pscale(a, c):
    c = Fraction(c)
    if not c:
        return {}
    return {m: c * k for m, k in a.items()}


def pmul(a, b, trunc=None):
    r = {}
    for ma, ca in a.items():
        da = sum(ma)
        for mb, cb in b.items():
            if trunc is not None and da + sum(mb) > trunc:
                continue
            m = tuple(x + y for x, y in zip(ma, mb))
            s = r.get(m, Fraction(0)) + ca * cb
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return r


def ppow(a, e, trunc=None, memo=None):
    n = None
    if memo is None:
        memo = {}
    if e == 0:
        for m in a:
            n = len(m)
            break
        return pconst(1, n if n is not None else 0)
    if e == 1:
        return a
    if e in memo:
        return memo[e]
    half = ppow(a, e // 2, trunc, memo)
    r = pmul(half, half, trunc)
    if e % 2:
        r = pmul(r, a, trunc)
    memo[e] = r
    return r


def deg(a):
    return max((sum(m) for m in a), default=None)


def order(a):
    return min((sum(m) for m in a), default=None)


def subst(p, images, trunc=None):
    """p(images); images are polys over a common ambient."""
    nin = len(images)
    nout = len(next(iter(images[0]), ())) if images[0] else None
    for img in images:
        for m in img:
            nout = len(m)
            break
    memos = [dict() for _ in range(nin)]
    orders = [order(img) for img in images]
    r = {}
    for m, c in p.items():
        if trunc is not None:
            lb = 0
            for i, e in enumerate(m):
                if e:
                    if orders[i] is None:
                        lb = None  # image is zero => term vanishes
                        break
                    lb += e * orders[i]
            if lb is None:
                continue
            if lb > trunc:
                continue
        term = pconst(c, nout)
        dead = False
        for i, e in enumerate(m):
            if not e:
                continue
            if not images[i]:
                dead = True
                break
            term = pmul(term, ppow(images[i], e, trunc, memos[i]), trunc)
            if not term:
                dead = True
                break
        if not dead:
            r = padd(r, term)
    return r


def mident(n):
    return [pvar(i, n) for i in range(n)]


def mcompose(f, g, trunc=None):
    return [subst(fi, g, trunc) for fi in f]


def msub(f, g):
    return [psub(a, b) for a, b in zip(f, g)]


def mzero(f):
    return all(not p for p in f)


def pascal_steps(F, mmax, trunc=None):
    """[P_0=Id, P_1, ..., P_k] up to first zero step or mmax."""
    n = len(F)
    steps = [mident(n)]
    for k in range(mmax):
        nxt = msub(mcompose(steps[-1], F, trunc), steps[-1])
        steps.append(nxt)
        if mzero(nxt):
            break
    return steps

# ---------------------------------------------------------------- printing

def grlex_key(m):
    return (sum(m), m)


def poly_str(p, names):
    if not p:
        return "0"
    items = sorted(p.items(), key=lambda t: grlex_key(t[0]), reverse=True)
    out = []
    for idx, (m, c) in enumerate(items):
        neg = c < 0
        c = abs(c)
        parts = []
        if c != 1 or not any(m):
            parts.append(str(c))
        for i, e in enumerate(m):
            if e == 0:
                continue
            parts.append(names[i] if e == 1 else f"{names[i]}^{e}")
        term = "*".join(parts)
        if idx == 0:
            out.append(("-" if neg else "") + term)
        else:
            out.append((" - " if neg else " + ") + term)
    return "".join(out)


def map_str(F, names):
    lines = ["vars: " + " ".join(names)]
    lines += [poly_str(p, names) for p in F]
    return "\n".join(lines) + "\n"

# ------------------------------------------------------------------- maps

def nagata():
    n = 3
    x1, x2, x3 = (pvar(i, 3) for i in range(3))
    lam = padd(pmul(x1, x3), pmul(x2, x2))
    h1 = psub(pscale(pmul(lam, x2), -2), pmul(pmul(lam, lam), x3))
    h2 = pmul(lam, x3)
    f = [padd(x1, h1), padd(x2, h2), x3]
    return f, [h1, h2, pzero()]


def vasyunin():
    x = [pvar(i, 5) for i in range(5)]
    h = [
        pzero(),
        pmul(x[0], x[2]),
        padd(pmul(x[0], x[3]), pscale(pmul(x[1], x[1]), Fraction(1, 2))),
        psub(pmul(x[0], x[4]), pmul(x[1], x[2])),
        pscale(pmul(x[2], x[2]), Fraction(1, 2)),
    ]
    return [padd(x[i], h[i]) for i in range(5)], h


def fibonacci_affine(a, b):
    x1, x2 = pvar(0, 2), pvar(1, 2)
    f1 = padd(padd(pscale(x1, 2), x2), pconst(a, 2))
    f2 = padd(padd(x1, x2), pconst(b, 2))
    return [f1, f2]


def gh_composition():
    x1, x2 = pvar(0, 2), pvar(1, 2)
    g = [padd(x1, ppow(x2, 3)), x2]
    h = [x1, padd(x2, pmul(x1, x1))]
    return mcompose(g, h), g, h


def jacobian(F):
    n = len(F)

    def dpoly(p, j):
        r = {}
        for m, c in p.items():
            if m[j] == 0:
                continue
            mm = list(m)
            k = mm[j]
            mm[j] -= 1
            mm = tuple(mm)
            s = r.get(mm, Fraction(0)) + c * k
            if s:
                r[mm] = s
            else:
                r.pop(mm, None)
        return r

    return [[dpoly(F[i], j) for j in range(n)] for i in range(n)]


def mat_mul(A, B, n):
    return [[
        __import__("functools").reduce(padd, (pmul(A[i][k], B[k][j]) for k in range(n)), {})
        for j in range(n)] for i in range(n)]


def mat_zero(A):
    return all(not e for row in A for e in row)


def det(A):
    n = len(A)
    if n == 1:
        return A[0][0]
    r = {}
    for j in range(n):
        if not A[0][j]:
            continue
        minor = [[A[i][k] for k in range(n) if k != j] for i in range(1, n)]
        t = pmul(A[0][j], det(minor))
        r = padd(r, t) if j % 2 == 0 else psub(r, t)
    return r
