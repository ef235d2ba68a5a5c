"""Heights of sequences and the rational words c_q and d_q.

The height of a one-sided sequence is a rational in [0, 1/2] that is
non-increasing with respect to the unimodal order: the maximal sequence
10^inf has height 0 and every sequence that does not begin 10 has height
1/2.  For each rational q = m/n in (0, 1/2] there is a palindromic word
c_q of length n+1 such that (c_q 0)^inf has height exactly q.

Two independent routes to the height are provided: :func:`height` runs the
run-length scanning algorithm, and :func:`height_oracle` binary-searches
the Stern-Brocot tree using only unimodal comparisons against the words
c_q.  They are checked against each other in the test suite.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import groupby

from .words import (
    EQ,
    GT,
    LT,
    DomainError,
    Seq,
    _check_word,
    forward_ray,
    unimodal_cmp,
)

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def _cq(m: int, n: int) -> str:
    # i-th symbol is 1 exactly when some multiple of n lies strictly
    # between (i-1)m and (i+1)m
    bits = []
    for i in range(n + 1):
        j0 = (i - 1) * m // n + 1
        bits.append("1" if j0 * n < (i + 1) * m else "0")
    return "".join(bits)


def cq_word(q: Fraction) -> str:
    """The word c_q, defined for rational q with 0 < q <= 1/2.

    c_q is a palindrome of length denominator(q) + 1 beginning and ending
    with 1, e.g. c_{1/3} = 1001 and c_{2/5} = 101101.
    """
    q = Fraction(q)
    if not 0 < q <= HALF:
        raise DomainError(f"c_q requires 0 < q <= 1/2, got {q}")
    return _cq(q.numerator, q.denominator)


def finite_order_word(q: Fraction) -> str:
    """The word d_q: the first denominator(q) - 1 symbols of c_q."""
    q = Fraction(q)
    if not 0 < q <= HALF:
        raise DomainError(f"d_q requires 0 < q <= 1/2, got {q}")
    return cq_word(q)[: q.denominator - 1]


def _zero_runs(word: str) -> list[int]:
    """Lengths of the maximal 0-runs of word, left to right."""
    return [len(list(g)) for ch, g in groupby(word) if ch == "0"]


@lru_cache(maxsize=1 << 17)
def height(c: Seq) -> Fraction:
    """The height of the sequence c.

    Scans the runs of c, maintaining a shrinking rational interval [X, Y]
    of heights compatible with what has been read so far.  A finite window
    of the sequence (preperiod plus four full periods) always suffices: if
    the scan is still alive at the end of the window the height is the
    median of X, Y and the average 1-density of the repeating part.
    """
    if c[0] == "0" or c[1] == "1":
        return HALF
    limit = len(c.pre) + 4 * len(c.per) + 8
    runs = [(ch, len(list(g))) for ch, g in groupby(c.prefix(limit))]
    tail_infinite = c.per in ("0", "1")
    if not tail_infinite:
        runs.pop()  # the window truncates the final run; discard it

    # X = xn/xd and Y = yn/yd bound the height from below and above;
    # s counts completed chunks 0^kappa 1 1 and S sums their 0-run lengths
    xn, xd = 0, 1
    yn, yd = 1, 2
    s = 0
    S = 0
    pending = 0
    j = 1  # runs[0] is the single leading 1
    while True:
        if pending:
            kappa, run, run_inf = 0, pending, False
        else:
            if j >= len(runs):
                break
            kappa = runs[j][1]
            if tail_infinite and j == len(runs) - 1:
                return Fraction(xn, xd)  # the sequence ends 0^inf
            j += 1
            S += kappa
            if j >= len(runs):
                break
            run = runs[j][1]
            run_inf = tail_infinite and j == len(runs) - 1
            j += 1
        if run_inf:
            # the sequence ends 1^inf
            n2, d2 = s + 1, 2 * s + 1 + S
            if n2 * xd <= xn * d2:
                return Fraction(xn, xd)
            if n2 * yd < yn * d2:
                yn, yd = n2, d2
            return Fraction(yn, yd) if 2 * yn < yd else HALF
        s += 1
        xd2 = 2 * s + S  # candidate x_s = s / (2s + S)
        yd2 = xd2 - 1  # candidate y_s = s / (2s - 1 + S)
        if s * xd <= xn * yd2:
            return Fraction(xn, xd)  # y_s <= X
        if s * yd >= yn * xd2:
            return Fraction(yn, yd)  # x_s >= Y
        if s * xd > xn * xd2:
            xn, xd = s, xd2
        if s * yd < yn * yd2:
            yn, yd = s, yd2
        if run == 1:
            return Fraction(yn, yd)
        pending = run - 2

    # window exhausted: pin the height by the periodic average
    an = c.per.count("1")
    ad = 2 * len(c.per)
    if an * xd <= xn * ad:
        return Fraction(xn, xd)
    if an * yd >= yn * ad:
        return Fraction(yn, yd)
    return Fraction(an, ad)


def height_oracle(c: Seq, max_den: int = 64) -> Fraction:
    """The height of c, found by descending the Stern-Brocot tree.

    Uses nothing but unimodal comparisons of c against the periodic
    sequences (c_q 0)^inf, whose heights are exactly q.  Valid whenever
    the true height has denominator at most max_den; raises DomainError
    if the answer cannot be certified within that bound.
    """
    if max_den < 2:
        raise DomainError("max_den must be at least 2")

    def probe(q: Fraction) -> int:
        return unimodal_cmp(Seq.periodic(cq_word(q) + "0"), c)

    if probe(HALF) != LT:
        return HALF
    lo = Fraction(0, 1)
    hi = HALF
    bound = max(4 * max_den, 3 * (len(c.pre) + 4 * len(c.per) + 8))
    result = None
    while lo.denominator + hi.denominator <= bound:
        mid = Fraction(
            lo.numerator + hi.numerator, lo.denominator + hi.denominator
        )
        side = probe(mid)
        if side == EQ:
            result = mid
            break
        if side == LT:
            hi = mid  # height <= mid
        else:
            lo = mid  # height >= mid
    if result is None:
        # the height is lo or hi; one more probe separates them
        mid = Fraction(
            lo.numerator + hi.numerator, lo.denominator + hi.denominator
        )
        side = probe(mid)
        result = mid if side == EQ else (lo if side == LT else hi)
    if result.denominator > max_den:
        raise DomainError(
            f"height {result} exceeds certified denominator bound {max_den}"
        )
    return result


@lru_cache(maxsize=None)
def scope(w: str) -> Fraction:
    """The scope of a decoration w: the least height along the cycle 10w0."""
    _check_word(w)
    code = "10" + w + "0"
    return min(height(forward_ray(code, i)) for i in range(len(code)))


def starlem_check(q: Fraction, r: int, f: Seq) -> bool:
    """Test the height inequality behind star-decoration forcing.

    For q = m/n with 0-run lengths kappa_1 .. kappa_m in c_q and for
    1 <= r <= m, forms the word 1 0^(kappa_r + 1) (11 0^kappa_j for
    j > r) 1 and checks that appending any continuation f keeps the
    height at most q.
    """
    q = Fraction(q)
    kappas = _zero_runs(cq_word(q))
    if not 1 <= r <= len(kappas):
        raise DomainError(f"need 1 <= r <= {len(kappas)}, got {r}")
    word = (
        "1"
        + "0" * (kappas[r - 1] + 1)
        + "".join("11" + "0" * kappas[j] for j in range(r, len(kappas)))
        + "1"
    )
    return height(Seq(word + f.pre, f.per)) <= q
