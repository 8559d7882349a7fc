#!/usr/bin/env python3
"""High-precision reference data for the Gauss-Jacobi tests.

Nodes are zeros of P_n^{(a,b)} located by Newton iteration on the three-term
recurrence at 50 digits, seeded by scipy, and checked by sign changes at the
midpoints between consecutive nodes.  Weights follow from

    w = M / ((1 - x^2) P'(x)^2),   omega = w / (sin^{2a+1}(t/2) cos^{2b+1}(t/2)).

Outputs (30 significant digits):
    data/golden/jacobi_<n>_<a>_<b>.csv   header n,alpha,beta,k,theta,x,w,omega
    data/golden/oracles.csv              name,value

Usage: gen_golden.py [--out data/golden] [--only NAME]
"""

import argparse
import os
import sys
from fractions import Fraction

import mpmath as mp
from scipy.special import roots_jacobi

mp.mp.dps = 50
DIGITS = 30

RULES = [
    (100, "0.1", "-0.3"),
    (100, "5", "-0.3"),
    (100, "-0.6", "-0.7"),
    (1000, "0.1", "-0.3"),
    (1000, "5", "-0.3"),
    (1000, "-0.6", "-0.7"),
    (100, "1/3", "1/4"),
    (100, "1/3", "1/5"),
    (100, "0.5", "-0.3"),
    (20, "0.1", "0.3"),
    (5, "0", "0"),
]


def num(s):
    return mp.mpf(Fraction(s).numerator) / Fraction(s).denominator


def tag(s):
    return s.replace("/", "o").replace("-", "m")


def fmt(v):
    return mp.nstr(v, DIGITS, strip_zeros=False)


def jacobi(n, a, b, x):
    """P_n and P_{n-1} by the forward recurrence."""
    p0 = mp.mpf(1)
    p1 = (a - b) / 2 + (a + b + 2) * x / 2
    if n == 1:
        return p1, p0
    for k in range(1, n):
        c = 2 * k + a + b
        A = (c + 1) * (c + 2) / (2 * (k + 1) * (k + a + b + 1))
        B = (a * a - b * b) * (c + 1) / (2 * (k + 1) * (k + a + b + 1) * c)
        C = (k + a) * (k + b) * (c + 2) / ((k + 1) * (k + a + b + 1) * c)
        p0, p1 = p1, (A * x + B) * p1 - C * p0
    return p1, p0


def jacobi_d(n, a, b, x):
    p, q = jacobi(n, a, b, x)
    c = 2 * n + a + b
    d = (n * ((a - b) - c * x) * p + 2 * (n + a) * (n + b) * q) / (c * (1 - x * x))
    return p, d


def log_mass(n, a, b):
    return ((a + b + 1) * mp.log(2) + mp.loggamma(n + a + 1) + mp.loggamma(n + b + 1)
            - mp.loggamma(n + 1) - mp.loggamma(n + a + b + 1))


def zeros(n, a, b):
    seeds, _ = roots_jacobi(n, float(a), float(b))
    out = []
    tol = mp.mpf(10) ** (-mp.mp.dps + 5)
    for s in seeds:
        x = mp.mpf(s)
        for _ in range(40):
            p, d = jacobi_d(n, a, b, x)
            dx = p / d
            x -= dx
            if abs(dx) < tol:
                break
        else:
            sys.exit(f"no convergence n={n} a={a} b={b} seed={s}")
        out.append(x)
    out.sort()
    # one zero per sign change between consecutive midpoints
    edges = [mp.mpf(-1)] + [(out[i] + out[i + 1]) / 2 for i in range(n - 1)] + [mp.mpf(1)]
    signs = [mp.sign(jacobi(n, a, b, e)[0]) for e in edges]
    for i in range(n):
        if signs[i] * signs[i + 1] >= 0:
            sys.exit(f"bracket check failed n={n} a={a} b={b} k={i + 1}")
    return out


def rule(n, sa, sb):
    a, b = num(sa), num(sb)
    lm = log_mass(n, a, b)
    rows = []
    for k, x in enumerate(zeros(n, a, b), 1):
        _, d = jacobi_d(n, a, b, x)
        w = mp.exp(lm) / ((1 - x * x) * d * d)
        t = mp.acos(x)
        sh, ch = mp.sin(t / 2), mp.cos(t / 2)
        om = w / (sh ** (2 * a + 1) * ch ** (2 * b + 1))
        rows.append((k, t, x, w, om))
    total = mp.fsum(r[3] for r in rows)
    exact = mp.power(2, a + b + 1) * mp.beta(a + 1, b + 1)
    if abs(total / exact - 1) > mp.mpf(10) ** -40:
        sys.exit(f"weight sum check failed n={n} a={sa} b={sb}")
    return rows


def write_rule(out, n, sa, sb):
    rows = rule(n, sa, sb)
    path = os.path.join(out, f"jacobi_{n}_{tag(sa)}_{tag(sb)}.csv")
    with open(path, "w", newline="\n") as f:
        f.write("n,alpha,beta,k,theta,x,w,omega\n")
        for k, t, x, w, om in rows:
            f.write(f"{n},{sa},{sb},{k},{fmt(t)},{fmt(x)},{fmt(w)},{fmt(om)}\n")
    print(path)


def oracles():
    out = []
    nu = mp.mpf(1) / 4
    j5 = mp.besseljzero(nu, 5)
    out.append(("bessel_zero_0.25_5", j5))
    for e in range(1, 6):
        h = mp.mpf(10) ** -e
        out.append((f"bessel_j_0.25_j5_plus_1e-{e}", mp.besselj(nu, j5 + h)))
    out.append(("bessel_j_0.25_15.42", mp.besselj(nu, mp.mpf("15.42"))))
    for nu_s, m in (("0", 1), ("1", 3), ("3", 1), ("6", 1), ("0.3", 10), ("5.5", 7)):
        out.append((f"bessel_zero_{nu_s}_{m}", mp.besseljzero(num(nu_s), m)))

    out.append(("log_total_mass_0.1_-0.3",
                (mp.mpf("0.1") + mp.mpf("-0.3") + 1) * mp.log(2)
                + mp.log(mp.beta(mp.mpf("1.1"), mp.mpf("0.7")))))
    # independent check of the closed form by direct integration of the weight
    quad = mp.quad(lambda x: (1 - x) ** mp.mpf("0.1") * (1 + x) ** mp.mpf("-0.3"), [-1, 0, 1])
    out.append(("total_mass_quad_0.1_-0.3", quad))
    out.append(("log_gauss_mass_100_0.1_-0.3", log_mass(100, mp.mpf("0.1"), mp.mpf("-0.3"))))

    a, b = mp.mpf(1) / 3, mp.mpf(1) / 4
    kap = 100 + (a + b + 1) / 2
    out.append(("g_front_100_1/3_1/4", mp.gamma(100 + a + 1) / (mp.factorial(100) * kap ** a)))
    a, b = mp.mpf(2), mp.mpf(1)
    kap = 10 + (a + b + 1) / 2
    out.append(("g_front_10_2_1", mp.gamma(10 + a + 1) / (mp.factorial(10) * kap ** a)))

    # hypergeometric form of P_n^{(a,b)}(x)
    a, b = mp.mpf(1) / 3, mp.mpf(1) / 5
    x = mp.mpf("0.5")
    hyp = mp.binomial(10 + a, 10) * mp.hyp2f1(-10, 10 + a + b + 1, a + 1, (1 - x) / 2)
    out.append(("jacobi_hyp_10_1/3_1/5_0.5", hyp))

    a, b = mp.mpf("0.1"), mp.mpf("-0.3")
    for name, t in (("pi/2", mp.pi / 2), ("0.05", mp.mpf("0.05")), ("0.7", mp.mpf("0.7"))):
        tt = mp.mpf(float(t))  # the double nearest to t
        out.append((f"jacobi_100_0.1_-0.3_theta_{name}", jacobi(100, a, b, mp.cos(tt))[0]))
        out.append((f"theta_double_{name}", tt))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/golden")
    ap.add_argument("--only", default=None)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    if args.only in (None, "oracles"):
        path = os.path.join(args.out, "oracles.csv")
        with open(path, "w", newline="\n") as f:
            f.write("name,value\n")
            for name, v in oracles():
                f.write(f"{name},{fmt(v)}\n")
        print(path)
    for n, sa, sb in RULES:
        if args.only not in (None, f"{n}_{sa}_{sb}"):
            continue
        write_rule(args.out, n, sa, sb)


if __name__ == "__main__":
    main()
