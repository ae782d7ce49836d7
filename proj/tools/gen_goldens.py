#!/usr/bin/env python3
"""Regenerate the frozen tables under tests/golden/.

Everything here is computed with exact rational arithmetic (sympy on QQ),
independently of the C++ library, so the files double as an oracle for the
golden-file tests.  Run from the repository root:

    python3 tools/gen_goldens.py

Also prints the pinned constants that appear as literals in the test sources,
so they can be re-derived at any time.
"""

import math
import os
import sys

import sympy as sp

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GOLDEN = os.path.join(ROOT, "tests", "golden")


def rat_str(q):
    q = sp.Rational(q)
    return f"{q.p}/{q.q}"


def write_csv(name, lines):
    path = os.path.join(GOLDEN, name)
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(lines)} lines)")


# ---------------------------------------------------------------------------
# dimension formulas for the graded polynomial spaces
# ---------------------------------------------------------------------------

def dim_A(n, p):
    """Homogeneous degree-p polynomials in n variables."""
    if p < 0:
        return 0
    return math.comb(p + n - 1, n - 1)


def dim_H_homog(n, k):
    return dim_A(n, k) - dim_A(n, k - 2)


def dim_Hd(n, k):
    return dim_A(n, k) + dim_A(n, k - 1)


def dim_P(n, p):
    return sum(dim_A(n, j) for j in range(p + 1))


def gen_dims(n_max=3, p_max=20):
    lines = ["n,p,dim_A,dim_H_homog,dim_Hd,dim_P"]
    for n in range(1, n_max + 1):
        for p in range(p_max + 1):
            lines.append(
                f"{n},{p},{dim_A(n, p)},{dim_H_homog(n, p)},"
                f"{dim_Hd(n, p)},{dim_P(n, p)}"
            )
    write_csv("dims.csv", lines)


# ---------------------------------------------------------------------------
# lattice operators on Z^n via shift substitution
# ---------------------------------------------------------------------------

def spatial_monomials(n, d):
    """All x^alpha with |alpha| <= d."""

    def rec(k, rem):
        if k == 0:
            yield ()
            return
        for a in range(rem + 1):
            for rest in rec(k - 1, rem - a):
                yield (a,) + rest

    return [(alpha, 0) for alpha in rec(n, d)]


def parabolic_monomials(n, d):
    """All x^alpha t^m with |alpha| + 2m <= d."""
    out = []
    for m in range(d // 2 + 1):
        for alpha, _ in spatial_monomials(n, d - 2 * m):
            out.append((alpha, m))
    return out


def lattice_kernel_dim(n, d, kind):
    xs = sp.symbols(f"x1:{n + 1}")
    t = sp.Symbol("t")

    def mono_expr(mono):
        alpha, m = mono
        e = sp.Integer(1)
        for x, a in zip(xs, alpha):
            e *= x**a
        return e * t**m

    def disc_lap(e):
        out = sp.Integer(0)
        for x in xs:
            out += e.subs(x, x + 1) + e.subs(x, x - 1) - 2 * e
        return sp.expand(out)

    def disc_heat(e):
        return sp.expand(e.subs(t, t + 1) - e - disc_lap(e))

    if kind == "laplacian":
        basis = spatial_monomials(n, d)
        op = disc_lap
    else:
        basis = parabolic_monomials(n, d)
        op = disc_heat

    rows = []
    gens = list(xs) + [t]
    for mono in basis:
        img = op(mono_expr(mono))
        poly = sp.Poly(img, *gens) if img != 0 else None
        row = []
        for other in basis:
            alpha, m = other
            if poly is None:
                row.append(sp.Integer(0))
            else:
                row.append(poly.coeff_monomial(mono_expr(other)))
        rows.append(row)
    # columns of the operator matrix are images of basis elements
    M = sp.Matrix(rows).T
    return len(basis) - M.rank()


def gen_lattice(n_max=2, d_max=8):
    lines = ["n,d,disc_heat_dim,cont_P_dim,disc_harm_dim,cont_H_dim,thm1_ok"]
    for n in range(1, n_max + 1):
        heat = [lattice_kernel_dim(n, d, "heat") for d in range(d_max + 1)]
        harm = [lattice_kernel_dim(n, d, "laplacian") for d in range(d_max + 1)]
        for d in range(d_max + 1):
            k = d // 2
            ok = heat[2 * k] <= sum(harm[2 * i] for i in range(k + 1))
            lines.append(
                f"{n},{d},{heat[d]},{dim_P(n, d)},{harm[d]},"
                f"{dim_Hd(n, d)},{1 if ok else 0}"
            )
    write_csv("lattice.csv", lines)


# ---------------------------------------------------------------------------
# box-cylinder energy ratios
# ---------------------------------------------------------------------------

def box_integral(u, n, s):
    """Exact integral of u over [-s,s]^n x [-s^2, 0]."""
    xs = sp.symbols(f"x1:{n + 1}")
    t = sp.Symbol("t")
    out = u
    for x in xs:
        out = sp.integrate(out, (x, -s, s))
    return sp.integrate(out, (t, -s * s, 0))


def energy_ratio(u, n, r):
    xs = sp.symbols(f"x1:{n + 1}")
    t = sp.Symbol("t")
    grad = sum(sp.diff(u, x) ** 2 for x in xs)
    tsq = sp.diff(u, t) ** 2
    s = sp.Rational(r, 10)
    num_grad = r**2 * box_integral(grad, n, s)
    num_time = r**4 * box_integral(tsq, n, s)
    denom = box_integral(u**2, n, sp.Rational(r))
    return num_grad, num_time, denom, sp.Rational(num_grad + num_time, 1) / denom


def gen_rp_table():
    xs = sp.symbols("x1:2")
    x = xs[0]
    t = sp.Symbol("t")
    u = x**2 + 2 * t
    lines = ["r,num_grad,num_time,denom,ratio"]
    for j in range(11):
        r = sp.Integer(2**j)
        ng, nt, de, ra = energy_ratio(u, 1, r)
        lines.append(
            f"{rat_str(r)},{rat_str(ng)},{rat_str(nt)},{rat_str(de)},{rat_str(ra)}"
        )
    write_csv("rp_x2_2t.csv", lines)


def pinned_rp_constants():
    t = sp.Symbol("t")
    x1, x2 = sp.symbols("x1 x2")

    print("\n-- pinned energy-ratio constants --")
    u = x1**2 + 2 * t
    _, _, _, ra = energy_ratio(u, 1, sp.Integer(1))
    print(f"ratio(x^2+2t, n=1, r=1) = {rat_str(ra)}")
    limit = ra

    for label, u, n in [
        ("x^2+2t+x, n=1", x1**2 + 2 * t + x1, 1),
        ("x1^2+2t+x2, n=2", x1**2 + 2 * t + x2, 2),
        ("x^4+12tx^2+12t^2+x^2+2t+1, n=1",
         x1**4 + 12 * t * x1**2 + 12 * t**2 + x1**2 + 2 * t + 1, 1),
    ]:
        ratios = []
        for j in range(11):
            r = sp.Integer(2**j)
            ratios.append(energy_ratio(u, n, r)[3])
        mx = max(ratios)
        print(f"max ratio({label}) over r=2^0..2^10 = {rat_str(mx)}")
        print(f"  first = {rat_str(ratios[0])}, last = {rat_str(ratios[-1])}")

    print(f"homogeneous-layer limit for the first two: {rat_str(limit)}")


def pinned_growth_envelope(n_max=3, d_max=20):
    print("\n-- pinned growth-envelope bands (dim_P(n,d)/d^n, d=1..20) --")
    for n in range(1, n_max + 1):
        ratios = [sp.Rational(dim_P(n, d), d**n) for d in range(1, d_max + 1)]
        dec = all(ratios[i] > ratios[i + 1] for i in range(len(ratios) - 1))
        print(
            f"n={n}: min={rat_str(min(ratios))} max={rat_str(max(ratios))} "
            f"strictly_decreasing={dec}"
        )


def spot_checks():
    print("\n-- spot checks --")
    t = sp.Symbol("t")
    x1, x2 = sp.symbols("x1 x2")
    lap = sp.diff(x1**3 + x1 * x2**2, x1, 2) + sp.diff(x1**3 + x1 * x2**2, x2, 2)
    print(f"laplacian(x1^3 + x1*x2^2) = {sp.expand(lap)}")

    # 2x2 interpolation coefficients at nodes (-1/2, 0)
    V = sp.Matrix([[1, sp.Rational(-1, 2)], [1, 0]])
    B = V.inv()
    print(f"B for nodes (-1/2, 0): {B.tolist()}")

    # default nodes for k=2 and the exact-inverse residual
    k = 2
    nodes = [sp.Rational(i - k - 1, k + 1) for i in range(1, k + 2)]
    V = sp.Matrix([[nd**l for l in range(k + 1)] for nd in nodes])
    B = V.inv()
    print(f"default nodes k=2: {[rat_str(nd) for nd in nodes]}")
    print(f"B*V == I: {sp.simplify(B * V - sp.eye(k + 1)) == sp.zeros(k + 1)}")

    print(f"(5/2)^4 * 12 = {rat_str(sp.Rational(5, 2) ** 4 * 12)}")


def main():
    os.makedirs(GOLDEN, exist_ok=True)
    gen_dims()
    gen_lattice()
    gen_rp_table()
    pinned_rp_constants()
    pinned_growth_envelope()
    spot_checks()


if __name__ == "__main__":
    sys.exit(main())
