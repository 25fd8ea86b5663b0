#!/usr/bin/env python3
"""Regenerate crates/core/src/quadrature/tables.rs.

Line rules (Gauss-Lobatto, Gauss-Legendre) are computed by Newton iteration in
50-digit arithmetic. Triangle rules are fully symmetric (D3) rules with positive
weights and interior nodes, obtained by solving the moment equations for a fixed
orbit structure: multistart least squares in double precision, then
Gauss-Newton polishing in 50-digit arithmetic. Degrees 10 and 12 use
D3-symmetrized collapsed Gauss products, which are exact by construction.

Usage: python3 tools/gen_quadrature_tables.py > crates/core/src/quadrature/tables.rs
"""
import sys
from math import factorial

import mpmath as mp
import numpy as np
from scipy.optimize import least_squares

mp.mp.dps = 50
DIGITS = 21


def legendre(n, x):
    """P_n(x) and P_n'(x)."""
    p0, p1 = mp.mpf(1), x
    if n == 0:
        return p0, mp.mpf(0)
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    if abs(x) == 1:
        return p1, mp.mpf(n * (n + 1)) / 2 * x ** (n + 1)
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


def gauss_legendre(n):
    nodes, weights = [], []
    for i in range(n):
        x = mp.cos(mp.pi * (i + mp.mpf(3) / 4) / (n + mp.mpf(1) / 2))
        for _ in range(100):
            p, dp = legendre(n, x)
            dx = p / dp
            x -= dx
            if abs(dx) < mp.mpf(10) ** (-45):
                break
        _, dp = legendre(n, x)
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    order = sorted(range(n), key=lambda i: nodes[i])
    return [nodes[i] for i in order], [weights[i] for i in order]


def gauss_lobatto(n):
    # interior nodes: roots of P'_{n-1}
    m = n - 1
    interior = []
    for i in range(1, m):
        x = -mp.cos(mp.pi * i / m)
        for _ in range(200):
            # f = P'_m, f' = P''_m from Legendre ODE: (1-x^2)P'' = 2xP' - m(m+1)P
            p, dp = legendre(m, x)
            d2p = (2 * x * dp - m * (m + 1) * p) / (1 - x * x)
            dx = dp / d2p
            x -= dx
            if abs(dx) < mp.mpf(10) ** (-45):
                break
        interior.append(x)
    nodes = [mp.mpf(-1)] + sorted(interior) + [mp.mpf(1)]
    weights = []
    for x in nodes:
        p, _ = legendre(m, x)
        weights.append(mp.mpf(2) / (m * (m + 1) * p * p))
    return nodes, weights


# ---------------------------------------------------------------------------
# triangle rules

def monomials(d):
    return [(p, q) for t in range(d + 1) for p in range(t + 1) for q in [t - p]]


def exact_mean(p, q):
    # mean of x^p y^q over the unit right triangle (area 1/2)
    return 2 * mp.mpf(factorial(p) * factorial(q)) / factorial(p + q + 2)


def expand(structure, params, lib):
    """Barycentric points and weights for an orbit structure."""
    pts, wts = [], []
    it = iter(params)
    for kind in structure:
        if kind == "s3":
            w = next(it)
            third = lib(1) / 3
            pts.append((third, third, third))
            wts.append(w)
        elif kind == "s21":
            a = next(it)
            w = next(it)
            c = 1 - 2 * a
            for bary in [(a, a, c), (a, c, a), (c, a, a)]:
                pts.append(bary)
                wts.append(w)
        elif kind == "s111":
            a = next(it)
            b = next(it)
            w = next(it)
            c = 1 - a - b
            for bary in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]:
                pts.append(bary)
                wts.append(w)
    return pts, wts


def residual(structure, params, d, lib):
    pts, wts = expand(structure, params, lib)
    res = []
    for p, q in monomials(d):
        s = sum(w * bary[0] ** p * bary[1] ** q for bary, w in zip(pts, wts))
        res.append(s - (exact_mean(p, q) if lib is mp.mpf else float(exact_mean(p, q))))
    return res


def n_params(structure):
    return sum({"s3": 1, "s21": 2, "s111": 3}[k] for k in structure)


def unpack(structure, z):
    """Map box-constrained search variables to orbit parameters.

    s111 orbits are searched as (a, t) in the unit square with b = t (1 - a),
    so every point of the box is inside the triangle.
    """
    params = []
    it = iter(z)
    for kind in structure:
        if kind == "s3":
            params.append(next(it))
        elif kind == "s21":
            params += [next(it), next(it)]
        else:
            a, t, w = next(it), next(it), next(it)
            params += [a, t * (1 - a), w]
    return params


def bounds(structure):
    lo, hi = [], []
    for kind in structure:
        if kind == "s3":
            lo += [0.0]
            hi += [1.0]
        elif kind == "s21":
            lo += [0.0, 0.0]
            hi += [0.5, 1.0]
        else:
            lo += [0.0, 0.0, 0.0]
            hi += [1.0, 1.0, 1.0]
    return np.array(lo), np.array(hi)


def float_residual(structure, d):
    mons = np.array(monomials(d))
    exact = np.array([float(exact_mean(p, q)) for p, q in mons])

    def f(z):
        pts, wts = expand(structure, unpack(structure, z), float)
        pts = np.array(pts)
        wts = np.array(wts)
        vals = pts[:, 0:1] ** mons[None, :, 0] * pts[:, 1:2] ** mons[None, :, 1]
        return wts @ vals - exact

    return f


def random_start(structure, rng):
    lo, hi = bounds(structure)
    npts = sum({"s3": 1, "s21": 3, "s111": 6}[k] for k in structure)
    z = lo + (hi - lo) * rng.uniform(0.02, 0.98, size=len(lo))
    # weights near the uniform value
    k = 0
    for kind in structure:
        k += {"s3": 0, "s21": 1, "s111": 2}[kind]
        z[k] = rng.uniform(0.3, 1.5) / npts
        k += 1
    return z


def admissible(structure, params, tol=1e-9):
    pts, wts = expand(structure, params, float)
    if min(wts) <= tol:
        return False
    for bary in pts:
        if min(bary) <= tol:
            return False
    return True


def polish(structure, x0, d):
    x = [mp.mpf(float(v)) for v in x0]
    for _ in range(60):
        r = mp.matrix(residual(structure, x, d, mp.mpf))
        h = mp.mpf(10) ** (-25)
        cols = []
        for j in range(len(x)):
            xp = list(x)
            xp[j] += h
            rp = mp.matrix(residual(structure, xp, d, mp.mpf))
            cols.append((rp - r) / h)
        J = mp.matrix(len(r), len(x))
        for j, c in enumerate(cols):
            for i in range(len(r)):
                J[i, j] = c[i]
        # minimum-norm Gauss-Newton step via truncated SVD; orbit
        # structures with more parameters than invariant moments are rank
        # deficient
        U, S, V = mp.svd_r(J)
        smax = max(S)
        step = [mp.mpf(0)] * len(x)
        for k in range(len(S)):
            if S[k] > smax * mp.mpf(10) ** (-30):
                coef = -sum(U[i, k] * r[i] for i in range(len(r))) / S[k]
                for j in range(len(x)):
                    step[j] += coef * V[k, j]
        x = [xi + si for xi, si in zip(x, step)]
        if mp.norm(step) < mp.mpf(10) ** (-40):
            break
    r = residual(structure, x, d, mp.mpf)
    return x, max(abs(v) for v in r)


def solve_triangle(structure, d, seed=1):
    rng = np.random.default_rng(seed)
    f = float_residual(structure, d)
    lo, hi = bounds(structure)
    for attempt in range(200000):
        z0 = random_start(structure, rng)
        sol = least_squares(f, z0, bounds=(lo, hi), xtol=1e-12, ftol=1e-12, gtol=1e-12,
                            max_nfev=300)
        params = unpack(structure, sol.x)
        # finite-difference Jacobians limit the double-precision stage to
        # about 1e-8; the extended-precision polish finishes the job
        if np.max(np.abs(sol.fun)) > 1e-5 or not admissible(structure, params):
            continue
        x, res = polish(structure, params, d)
        if res < mp.mpf(10) ** (-35) and admissible(structure, [float(v) for v in x]):
            print(f"degree {d}: solved after {attempt + 1} starts", file=sys.stderr)
            return x
    raise RuntimeError(f"no admissible rule for degree {d}")


TRIANGLE_STRUCTURES = {
    1: ["s3"],
    2: ["s21"],
    4: ["s21", "s21"],
    5: ["s3", "s21", "s21"],
    6: ["s21", "s21", "s111"],
    8: ["s3", "s21", "s21", "s21", "s111"],
    9: ["s3", "s21", "s21", "s21", "s21", "s111"],
    # Orbit searches for these degrees are unreliable; use symmetrized
    # conical products instead (see conical_product).
    10: "product",
    12: "product",
}


def conical_product(d):
    """D3-symmetrized collapsed Gauss product rule exact for degree d.

    With y = (1 - x) t the triangle becomes the unit square with Jacobian
    (1 - x); Gauss-Legendre in x (absorbing the Jacobian) and in t with
    n = d // 2 + 1 points each is exact for degree d. Every product node is
    expanded to its full six-point orbit with a sixth of the weight, which
    keeps weights positive and nodes interior.
    """
    n = d // 2 + 1
    xs, ws = gauss_legendre(n)
    half = [((1 + x) / 2, w / 2) for x, w in zip(xs, ws)]
    structure, params = [], []
    for x, wx in half:
        for t, wt in half:
            y = (1 - x) * t
            structure.append("s111")
            params += [1 - x - y, x, 2 * wx * wt * (1 - x) / 6]
    return structure, params


def fmt(v):
    s = mp.nstr(v, DIGITS, strip_zeros=False, min_fixed=-5, max_fixed=5)
    if "e" not in s and "." not in s:
        s += ".0"
    return s


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_quadrature_tables.py. Do not edit by hand.\n\n")
    out.write("/// Gauss-Lobatto rules on [-1, 1] for 2..=16 points: (nodes, weights), weights sum to 2.\n")
    out.write("pub(crate) static GAUSS_LOBATTO: &[(&[f64], &[f64])] = &[\n")
    for n in range(2, 17):
        x, w = gauss_lobatto(n)
        out.write("    (\n        &[" + ", ".join(fmt(v) for v in x) + "],\n")
        out.write("        &[" + ", ".join(fmt(v) for v in w) + "],\n    ),\n")
    out.write("];\n\n")
    out.write("/// Gauss-Legendre rules on [-1, 1] for 1..=24 points: (nodes, weights), weights sum to 2.\n")
    out.write("pub(crate) static GAUSS_LEGENDRE: &[(&[f64], &[f64])] = &[\n")
    for n in range(1, 25):
        x, w = gauss_legendre(n)
        out.write("    (\n        &[" + ", ".join(fmt(v) for v in x) + "],\n")
        out.write("        &[" + ", ".join(fmt(v) for v in w) + "],\n    ),\n")
    out.write("];\n\n")

    out.write("/// Fully symmetric triangle rules: (degree, barycentric nodes, weights summing to 1).\n")
    out.write("pub(crate) static TRIANGLE: &[(usize, &[[f64; 3]], &[f64])] = &[\n")
    for d, structure in TRIANGLE_STRUCTURES.items():
        if structure == "product":
            structure, params = conical_product(d)
            worst = max(abs(r) for r in residual(structure, params, d, mp.mpf))
            assert worst < mp.mpf(10) ** -40, f"degree {d} product rule residual {worst}"
        elif structure == ["s3"]:
            params = [mp.mpf(1)]
        else:
            params = solve_triangle(structure, d)
        pts, wts = expand(structure, params, mp.mpf)
        total = sum(wts)
        print(f"degree {d}: {len(pts)} points, weight sum - 1 = {mp.nstr(total - 1, 5)}",
              file=sys.stderr)
        out.write(f"    (\n        {d},\n        &[\n")
        for bary in pts:
            out.write("            [" + ", ".join(fmt(v) for v in bary) + "],\n")
        out.write("        ],\n        &[" + ", ".join(fmt(v) for v in wts) + "],\n    ),\n")
    out.write("];\n")


if __name__ == "__main__":
    main()
