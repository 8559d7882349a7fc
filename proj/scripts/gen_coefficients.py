#!/usr/bin/env python3
"""Derive the elementary-expansion coefficient table.

The coefficients u_{2m}, v_{2m+1} of

    P_n^{(a,b)}(cos t) = G/sqrt(pi k) (cos X U - sin X V) / (sin^{a+1/2}(t/2) cos^{b+1/2}(t/2))

are obtained by re-expanding Hahn's explicit trigonometric expansion in
negative powers of k = n + (a+b+1)/2.  From them we build the derivative
coefficients m_{2l}, n_{2l+1} and the node corrections theta_m obtained by
inverting W(theta0 + eps) = 0 order by order.

Every coefficient is stored as (A(x) + sin(t) B(x)) / sin(t)^K with x = cos t,
where A and B are polynomials in x, a, b with rational coefficients.

Usage: gen_coefficients.py [--order N] [--out data/elementary_coefficients.txt]
"""

import argparse
import hashlib
import sys
import time
from fractions import Fraction

import sympy as sp

x, a, b = sp.symbols("x a b", real=True)
S, C = sp.symbols("S C", real=True)  # sin(t/2), cos(t/2)
GENS = (x, a, b)
ZERO = sp.Poly(0, *GENS, domain="QQ")
ONE_MINUS_X2 = sp.Poly(1 - x**2, *GENS, domain="QQ")


def P(expr):
    return sp.Poly(expr, *GENS, domain="QQ")


class Fn:
    """(A + s B) / s^K with s = sin(t), s^2 = 1 - x^2."""

    __slots__ = ("A", "B", "K")

    def __init__(self, A, B=None, K=0):
        self.A = A
        self.B = ZERO if B is None else B
        self.K = K

    @staticmethod
    def const(c):
        return Fn(P(c))

    def is_zero(self):
        return self.A.is_zero and self.B.is_zero

    def times_s(self):
        # (A + sB) s = (1-x^2) B + s A
        return Fn(ONE_MINUS_X2 * self.B, self.A, self.K)

    def raised(self, K):
        f = self
        for _ in range(K - self.K):
            f = f.times_s()
        return Fn(f.A, f.B, K)

    def reduce(self):
        f = self
        while f.K > 0:
            if f.is_zero():
                return Fn(ZERO, ZERO, 0)
            q, r = f.A.div(ONE_MINUS_X2)
            if not r.is_zero:
                break
            # (A + sB)/s = B + s A/(1-x^2)
            f = Fn(f.B, q, f.K - 1)
        return f

    def __add__(self, o):
        if isinstance(o, (int, Fraction, sp.Rational)):
            o = Fn.const(o)
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        K = max(self.K, o.K)
        p, q = self.raised(K), o.raised(K)
        return Fn(p.A + q.A, p.B + q.B, K).reduce()

    __radd__ = __add__

    def __neg__(self):
        return Fn(-self.A, -self.B, self.K)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction, sp.Rational)):
            c = sp.Rational(o)
            return Fn(self.A * c, self.B * c, self.K)
        A = self.A * o.A + ONE_MINUS_X2 * self.B * o.B
        B = self.A * o.B + self.B * o.A
        return Fn(A, B, self.K + o.K).reduce()

    __rmul__ = __mul__

    def d_theta(self):
        A, B, K = self.A, self.B, self.K
        xp = P(x)
        Ax = A.diff(x)
        Bx = B.diff(x)
        nA = -ONE_MINUS_X2 * Ax - K * xp * A
        nB = -ONE_MINUS_X2 * Bx + xp * B - K * xp * B
        return Fn(nA, nB, K + 1).reduce()

    def to_expr(self):
        s = sp.Symbol("s")
        return (self.A.as_expr() + s * self.B.as_expr()) / s**self.K

    def evalf(self, xv, av, bv):
        import math
        sv = math.sqrt(1 - xv * xv)
        A = float(self.A.as_expr().subs({x: xv, a: av, b: bv}))
        B = float(self.B.as_expr().subs({x: xv, a: av, b: bv}))
        return (A + sv * B) / sv**self.K


# ---------------------------------------------------------------------------
# Normalisation factor K(k) = H sqrt(k) / (sqrt(pi) G) as a series in d = 1/k.


def series_exp(L, N):
    """exp of a series L (list, L[0] == 0) truncated at d^N."""
    out = [sp.Integer(1)] + [sp.Integer(0)] * N
    for n in range(1, N + 1):
        acc = 0
        for i in range(1, n + 1):
            acc += i * L[i] * out[n - i]
        out[n] = sp.expand(acc / n)
    return out


def series_mul(p, q, N):
    out = [sp.Integer(0)] * (N + 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            if i + j > N:
                break
            out[i + j] += pi * qj
    return [sp.expand(t) for t in out]


def normalisation_series(N):
    h1 = (b - a + 1) / sp.Integer(2)
    h2 = (1 - a - b) / sp.Integer(2)
    L = [sp.Integer(0)] * (N + 1)
    for k in range(2, N + 2):
        Bk = (sp.bernoulli(k, h1) + sp.bernoulli(k, h2)
              - sp.bernoulli(k, sp.Rational(1, 2)) - sp.bernoulli(k, 1))
        L[k - 1] = sp.expand((-1) ** k * Bk / (k * (k - 1)))
    return series_exp(L, N)


def pochhammer_series(m, N):
    """Series of 1/(2^m (2k+1)_m) = (d/4)^m prod 1/(1 + i d/2)."""
    s = [sp.Integer(0)] * (N + 1)
    if m > N:
        return s
    s[m] = sp.Rational(1, 4**m)
    for i in range(1, m + 1):
        geo = [(-sp.Rational(i, 2)) ** j for j in range(N + 1)]
        s = series_mul(s, geo, N)
    return s


def hahn_term(m):
    """g_m (S C)^m as (real, imag) polynomials in a, b, S, C."""
    re = 0
    im = 0
    cis = sp.expand((C + sp.I * S) ** m)
    for l in range(m + 1):
        cml = (sp.rf(sp.Rational(1, 2) + a, l) * sp.rf(sp.Rational(1, 2) - a, l)
               * sp.rf(sp.Rational(1, 2) + b, m - l) * sp.rf(sp.Rational(1, 2) - b, m - l))
        term = sp.expand(cml * (-sp.I) ** l * cis * S ** (m - l) * C**l
                         / (sp.factorial(l) * sp.factorial(m - l)))
        tr, ti = term.as_real_imag()
        re += tr
        im += ti
    return sp.expand(re), sp.expand(im)


def sc_poly_to_fn(expr, k):
    """Convert a homogeneous polynomial in S, C of degree 2k divided by (SC)^k."""
    poly = sp.Poly(expr, S, C)
    A = ZERO
    B = ZERO
    half_m = P((1 - x) / 2)
    half_p = P((1 + x) / 2)
    for (p, q), coeff in poly.terms():
        c = P(coeff)
        if p % 2 == 0 and q % 2 == 0:
            A += c * half_m ** (p // 2) * half_p ** (q // 2)
        elif p % 2 == 1 and q % 2 == 1:
            # S C = s/2
            B += c * sp.Rational(1, 2) * half_m ** ((p - 1) // 2) * half_p ** ((q - 1) // 2)
        else:
            raise RuntimeError("odd total degree in S, C")
    # (SC)^k = (s/2)^k
    return Fn(A * 2**k, B * 2**k, k).reduce()


def derive_uv(N):
    Kser = normalisation_series(N)
    g = [hahn_term(m) for m in range(N + 1)]
    coef = []
    for m in range(N + 1):
        coef.append(series_mul(Kser, pochhammer_series(m, N), N))
    u = {}
    v = {}
    for k in range(N + 1):
        re = 0
        im = 0
        for m in range(k + 1):
            c = coef[m][k]
            if c == 0:
                continue
            scale = (S * C) ** (k - m)
            re += c * g[m][0] * scale
            im += c * g[m][1] * scale
        fre = sc_poly_to_fn(sp.expand(re), k)
        fim = sc_poly_to_fn(sp.expand(im), k)
        if k % 2 == 0:
            if not fim.is_zero():
                raise RuntimeError(f"v_{k} does not vanish")
            u[k] = fre
        else:
            if not fre.is_zero():
                raise RuntimeError(f"u_{k} does not vanish")
            v[k] = fim
    return u, v


# ---------------------------------------------------------------------------
# Zero inversion: sin(k eps) U(t0+eps) + cos(k eps) V(t0+eps) = 0.


class Ser:
    """Truncated power series in d with Fn coefficients."""

    def __init__(self, c, N):
        self.N = N
        self.c = list(c) + [None] * (N + 1 - len(c))

    @staticmethod
    def zero(N):
        return Ser([], N)

    def __add__(self, o):
        out = []
        for p, q in zip(self.c, o.c):
            if p is None:
                out.append(q)
            elif q is None:
                out.append(p)
            else:
                out.append(p + q)
        return Ser(out, self.N)

    def __mul__(self, o):
        if not isinstance(o, Ser):
            return Ser([None if p is None else p * o for p in self.c], self.N)
        out = [None] * (self.N + 1)
        for i, p in enumerate(self.c):
            if p is None:
                continue
            for j, q in enumerate(o.c):
                if q is None or i + j > self.N:
                    continue
                t = p * q
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return Ser(out, self.N)

    def power(self, r):
        out = Ser([Fn.const(1)], self.N)
        for _ in range(r):
            out = out * self
        return out


def invert_nodes(u, v, M):
    """Return theta_1..theta_M (as Fn) for the elementary expansion."""
    N = 2 * M - 1
    # derivatives u^{(r)}, v^{(r)} up to r = M
    du = {k: [u[k]] for k in u}
    dv = {k: [v[k]] for k in v}
    for k in du:
        for r in range(M):
            du[k].append(du[k][-1].d_theta())
    for k in dv:
        for r in range(M):
            dv[k].append(dv[k][-1].d_theta())

    thetas = []
    fact = [1]
    for i in range(1, 2 * N + 2):
        fact.append(fact[-1] * i)

    for m in range(1, M + 1):
        # eps = sum theta_i d^{2i}; y = k eps = sum theta_i d^{2i-1}
        eps = Ser.zero(N)
        y = Ser.zero(N)
        for i, t in enumerate(thetas, start=1):
            if 2 * i <= N:
                eps.c[2 * i] = t
            y.c[2 * i - 1] = t
        eps_pow = [eps.power(r) for r in range(M + 1)]
        # U(t0 + eps) and V(t0 + eps)
        U = Ser.zero(N)
        V = Ser.zero(N)
        for k, ders in du.items():
            if k > N:
                continue
            for r in range(M + 1):
                term = Ser([None] * k + [ders[r] * Fraction(1, fact[r])], N) * eps_pow[r]
                U = U + term
        for k, ders in dv.items():
            if k > N:
                continue
            for r in range(M + 1):
                term = Ser([None] * k + [ders[r] * Fraction(1, fact[r])], N) * eps_pow[r]
                V = V + term
        # sin y, cos y
        siny = Ser.zero(N)
        cosy = Ser([Fn.const(1)], N)
        ypow = Ser([Fn.const(1)], N)
        for r in range(1, N + 1):
            ypow = ypow * y
            if r % 2 == 1:
                siny = siny + ypow * Fraction((-1) ** (r // 2), fact[r])
            else:
                cosy = cosy + ypow * Fraction((-1) ** (r // 2), fact[r])
        E = siny * U + cosy * V
        lead = E.c[2 * m - 1]
        thetas.append(-lead if lead is not None else Fn.const(0))
        print(f"  theta_{m}: K={thetas[-1].K}, terms={len(thetas[-1].A.terms())}+{len(thetas[-1].B.terms())}",
              file=sys.stderr)
    return thetas


# ---------------------------------------------------------------------------
# Checks against the printed coefficients.


def printed_checks(u, v, thetas):
    s = sp.Symbol("s")

    def same(fn, expr, name):
        diff = sp.simplify((fn.to_expr() - expr).subs(s, sp.sqrt(1 - x**2)))
        ok = diff == 0
        print(f"  check {name}: {'ok' if ok else 'MISMATCH ' + str(diff)}", file=sys.stderr)
        return ok

    ok = True
    q1 = (2 * a**2 - 2 * b**2 + (2 * a**2 + 2 * b**2 - 1) * x) / (8 * s)
    ok &= same(v[1], q1, "v_1 = q_1")
    th1 = -(2 * b**2 * x + 2 * a**2 * x - x - 2 * b**2 + 2 * a**2) / (8 * s)
    ok &= same(thetas[0], th1, "theta_1")
    th2 = (-33 * x - 36 * b**2 * x**2 + 36 * a**2 * x**2 + 24 * b**4 * x**2 - 24 * a**4 * x**2 + 2 * x**3
           + 84 * b**2 * x - 60 * a**4 * x - 60 * b**4 * x + 84 * a**2 * x + 4 * b**4 * x**3 + 4 * a**4 * x**3
           - 8 * b**2 * x**3 + 40 * a**2 - 8 * a**2 * x**3 - 40 * b**2 + 32 * b**4 - 32 * a**4
           + 24 * a**2 * b**2 * x**3 - 24 * a**2 * b**2 * x) / (384 * s**3)
    ok &= same(thetas[1], th2, "theta_2")
    # u_2 as printed, with the parenthesis closed after the x^0 group.
    u2p = (12 * (5 - 2 * a**2 - 2 * b**2) * (a**2 - b**2) * x
           + 4 * (-3 * (a**2 - b**2) ** 2 + 3 * (a**2 + b**2) - 6 + 4 * a * (a**2 - 1 + 3 * b**2))
           + (-12 * (a**2 + b**2) * (a**2 + b**2 - 1) - 16 * a * (a**2 - 1 + 3 * b**2) - 3) * x**2) / (384 * s**2)
    same(u[2], u2p, "u_2 (printed form, informational)")
    # theta_3 in terms of u, v and their theta-derivatives
    if len(thetas) >= 3:
        v1, v3, v5, u2, u4 = v[1], v[3], v[5], u[2], u[4]
        v1p, v1pp, v3p, u2p_ = v1.d_theta(), v1.d_theta().d_theta(), v3.d_theta(), u2.d_theta()
        th3 = (Fraction(-4, 3) * v1p * v1 * v1 * v1 + Fraction(-1, 5) * v1 * v1 * v1 * v1 * v1 + (-v5)
               + v3 * v1 * v1 + Fraction(-1, 2) * v1pp * v1 * v1 + (-2) * v1p * u2 * v1 + (-1) * v1p * v1p * v1
               + v1p * v3 + (-1) * u2 * u2 * v1 + (-1) * u2p_ * v1 * v1 + u4 * v1 + (-1) * u2 * v1 * v1 * v1
               + u2 * v3 + v3p * v1)
        d = thetas[2] - th3
        print(f"  check theta_3 vs general formula: {'ok' if d.is_zero() else 'MISMATCH'}", file=sys.stderr)
        ok &= d.is_zero()
    # Chebyshev case kills every v and theta
    half = {a: -sp.Rational(1, 2), b: -sp.Rational(1, 2)}
    for k, f in v.items():
        if not (f.A.as_expr().subs(half) == 0 and f.B.as_expr().subs(half) == 0):
            print(f"  v_{k} does not vanish at a=b=-1/2", file=sys.stderr)
            ok = False
    return ok


# ---------------------------------------------------------------------------
# Emission.


def fmt_rational(r):
    r = sp.Rational(r)
    return f"{r.p}/{r.q}"


def decimal30(r):
    import mpmath
    mpmath.mp.dps = 40
    v = mpmath.mpf(r.p) / r.q
    return mpmath.nstr(v, 30, min_fixed=-1, max_fixed=-1)


def emit(entries, path):
    lines = []
    for name, fn in entries:
        lines.append(f"coef {name} {fn.K}")
        for part, poly in (("A", fn.A), ("B", fn.B)):
            if poly.is_zero:
                continue
            for (i, j, k), c in sorted(poly.terms()):
                r = sp.Rational(c)
                lines.append(f"{part} {i} {j} {k} {decimal30(r)} {fmt_rational(r)}")
        lines.append("end")
    body = "\n".join(lines) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()[:16]
    header = ("# Elementary-expansion coefficients for Gauss-Jacobi asymptotics.\n"
              "# Each entry: f(t) = (A(x) + sin(t) B(x)) / sin(t)^K, x = cos(t).\n"
              "# Term lines: <A|B> <x power> <alpha power> <beta power> <decimal> <exact rational>\n"
              "version 1\n"
              f"hash {digest}\n")
    with open(path, "w", newline="\n") as fh:
        fh.write(header + body)
    return digest


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=5, help="number of node corrections theta_m")
    ap.add_argument("--out", default="data/elementary_coefficients.txt")
    args = ap.parse_args()
    M = args.order
    N = 2 * M - 1
    t0 = time.time()
    print(f"deriving u, v through order {N}", file=sys.stderr)
    u, v = derive_uv(N)
    print(f"  done in {time.time() - t0:.1f}s", file=sys.stderr)
    thetas = invert_nodes(u, v, M)
    print(f"  inversion done in {time.time() - t0:.1f}s", file=sys.stderr)
    if not printed_checks(u, v, thetas):
        print("validation failed", file=sys.stderr)
        return 1
    entries = []
    for k in sorted(u):
        entries.append((f"u{k}", u[k]))
    for k in sorted(v):
        entries.append((f"v{k}", v[k]))
    # derivative coefficients m_{2l} = u_{2l} + v_{2l-1}', n_{2l+1} = v_{2l+1} - u_{2l}'
    for k in sorted(u):
        mk = u[k] if k == 0 else u[k] + v[k - 1].d_theta()
        entries.append((f"m{k}", mk))
    for k in sorted(v):
        entries.append((f"n{k}", v[k] - u[k - 1].d_theta()))
    for i, t in enumerate(thetas, start=1):
        entries.append((f"theta{i}", t))
    digest = emit(entries, args.out)
    print(f"wrote {args.out} (hash {digest}) in {time.time() - t0:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
