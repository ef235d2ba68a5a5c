"""Topological entropy bounds from decoration invariants.

Each index i and rational q = m/n give two integer polynomials whose
largest roots in (1, 2] bound the dilatation of orbits in the associated
family: H for the family members themselves and Hbar for the forcing
lower bound.  Polynomials are plain coefficient lists, constant term
first.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .families import r_sequence
from .height import HALF
from .words import DomainError


def _padd(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for k, v in enumerate(a):
        out[k] += v
    for k, v in enumerate(b):
        out[k] += v
    return out


def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _monomial(k: int) -> list[int]:
    return [0] * k + [1]


def eval_poly(coeffs: list[int], x: float) -> float:
    """Evaluate a coefficient list (constant term first) at x by Horner."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def g_poly(i: int) -> list[int]:
    """x^(2i+6) - x^(2i+5) - x^(2i+4) - x^(2i+3) - 2."""
    if i < 0:
        raise DomainError(f"index must be nonnegative, got {i}")
    c = [0] * (2 * i + 7)
    c[0] = -2
    c[2 * i + 3] = c[2 * i + 4] = c[2 * i + 5] = -1
    c[2 * i + 6] = 1
    return c


def f_poly(q: Fraction) -> list[int]:
    """Sum of x^floor(jn/m) for j = 1 .. m-1; the zero polynomial for m = 1."""
    q = Fraction(q)
    if not 0 < q <= HALF:
        raise DomainError(f"need 0 < q <= 1/2, got {q}")
    m, n = q.numerator, q.denominator
    if m == 1:
        return [0]
    c = [0] * ((m - 1) * n // m + 1)
    for j in range(1, m):
        c[j * n // m] += 1
    return c


def H_poly(i: int, q: Fraction) -> list[int]:
    """The member polynomial of the (i, q) family."""
    q = Fraction(q)
    n = q.denominator
    g = g_poly(i)
    f = f_poly(q)
    t1 = _pmul(_monomial(n + 1), g)
    # 2x (x^2 - 1) (x^(2i+4) + 1) f
    t2 = _pmul(_pmul([0, -2, 0, 2], _padd(_monomial(2 * i + 4), [1])), f)
    t3 = [0] * (2 * i + 7)
    t3[0] = -1
    t3[1] = t3[2] = t3[3] = 1
    t3[2 * i + 6] = 2
    return _padd(_padd(t1, t2), t3)


def Hbar_poly(i: int, q: Fraction) -> list[int]:
    """The forcing lower-bound polynomial of the (i, q) family; Hbar(1) = 0."""
    q = Fraction(q)
    n = q.denominator
    g = g_poly(i)
    f = f_poly(q)
    t1 = _pmul(_padd(_monomial(n), [-1]), g)
    t2 = _pmul(
        _pmul([-2, 0, 2], _padd(_monomial(2 * i + 4), [1])), _padd([1], f)
    )
    return _padd(t1, t2)


def largest_root(
    coeffs: list[int], lo: float = 1.0, hi: float = 2.0, tol: float = 1e-9
) -> float:
    """The largest root of the polynomial in (lo, hi], by grid scan and bisection.

    The value at hi anchors the sign reference; if it vanishes there the
    endpoint is nudged up once before giving up.  Roots at lo itself (a
    common feature of these polynomials) are deliberately out of range.
    """
    f_hi = eval_poly(coeffs, hi)
    if f_hi == 0.0:
        hi += 1e-6
        f_hi = eval_poly(coeffs, hi)
        if f_hi == 0.0:
            return hi
    x_prev, f_prev = hi, f_hi
    x = hi - 1e-3
    while x > lo + 1e-9:
        f_x = eval_poly(coeffs, x)
        if f_x == 0.0:
            return x
        if (f_x < 0) != (f_prev < 0):
            a, fa, b = x, f_x, x_prev
            while b - a > tol:
                m = (a + b) / 2
                f_m = eval_poly(coeffs, m)
                if f_m == 0.0:
                    return m
                if (f_m < 0) == (fa < 0):
                    a, fa = m, f_m
                else:
                    b = m
            return (a + b) / 2
        x_prev, f_prev = x, f_x
        x -= 1e-3
    raise DomainError("no root in the requested interval")


def entropy_certificate(
    code: str, i_max: int
) -> tuple[list[int], float, float] | None:
    """The best entropy certificate among the odd-ones invariants of the code.

    Returns (polynomial, root, log root) for the index whose Hbar root is
    largest, or None when no invariant drops below 1/2.
    """
    best: tuple[list[int], float] | None = None
    for i, r in enumerate(r_sequence(code, i_max)):
        if r < HALF:
            poly = Hbar_poly(i, r)
            root = largest_root(poly, 1.0, 2.0, 1e-9)
            if best is None or root > best[1]:
                best = (poly, root)
    if best is None:
        return None
    return best[0], best[1], math.log(best[1])


def entropy_lower_bound(code: str, i_max: int) -> float:
    """A lower bound for the topological entropy forced by the orbit."""
    cert = entropy_certificate(code, i_max)
    return 0.0 if cert is None else cert[2]
