"""Classification of periodic orbit codes by height and decoration.

Every primitive cyclic code falls into one of a handful of families: the
two fixed points, the period-two orbit, one reducible period-four orbit,
finite-order orbits (period equal to the height denominator), NBT orbits
(period two more than the denominator), and decorated orbits, whose
canonical codes factor as c_q x w y for a decoration word w.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .height import HALF, cq_word, finite_order_word, height, scope
from .words import (
    GT,
    DomainError,
    Seq,
    _check_word,
    canonical_code,
    flip_last,
    is_primitive,
    unimodal_cmp,
)

FIXED_POINT = "fixed-point"
PERIOD_TWO = "period-two"
REDUCIBLE = "reducible"
FINITE_ORDER = "finite-order"
NBT = "NBT"
DECORATED = "decorated"


def is_paired(code: str) -> bool:
    """True iff flipping the last symbol of the code leaves a primitive word.

    Paired codes come in partner pairs ending 0 and 1 that carry the same
    orbit data; unpaired codes (like 10 and 1011) stand alone.
    """
    _check_word(code, allow_empty=False)
    return is_primitive(flip_last(code))


def orbit_height(code: str) -> Fraction:
    """The height of the periodic orbit with the given code.

    The code is brought to canonical form first.  A paired code ending in
    1 takes its height from its partner ending in 0.
    """
    code = canonical_code(code)
    if is_paired(code) and code.endswith("1"):
        code = flip_last(code)
    return height(Seq.periodic(code))


@dataclass(frozen=True)
class Classification:
    code: str
    period: int
    height: Fraction
    kind: str
    decoration: str | None = None
    x: str | None = None
    y: str | None = None


def classify(code: str) -> Classification:
    """Classify a primitive cyclic code.

    The returned code is the canonical spelling.  For decorated orbits the
    canonical code is rotated to the unimodal-maximal rotation beginning
    with c_q, which factors as c_q x w y; the decoration w and the framing
    symbols x, y are reported.
    """
    _check_word(code, allow_empty=False)
    if not is_primitive(code):
        raise DomainError(f"imprimitive code: {code}")
    word = canonical_code(code)
    N = len(word)
    if N == 1:
        return Classification(word, 1, HALF, FIXED_POINT)
    if N == 2:
        return Classification(word, 2, HALF, PERIOD_TWO)
    if word == "1011":
        return Classification(word, 4, HALF, REDUCIBLE)
    q = orbit_height(word)
    n = q.denominator
    if N == n:
        if not word.startswith(finite_order_word(q)):
            raise DomainError(f"cannot classify code: {word}")
        return Classification(word, N, q, FINITE_ORDER)
    if N == n + 2 and q < HALF:
        if not word.startswith(cq_word(q)):
            raise DomainError(f"cannot classify code: {word}")
        return Classification(word, N, q, NBT)
    if N >= n + 3:
        c = cq_word(q)
        candidates = [
            rot
            for rot in (word[k:] + word[:k] for k in range(N))
            if rot.startswith(c)
        ]
        if not candidates:
            raise DomainError(f"cannot classify code: {word}")
        best = candidates[0]
        for rot in candidates[1:]:
            if unimodal_cmp(Seq.periodic(rot), Seq.periodic(best)) == GT:
                best = rot
        return Classification(
            word,
            N,
            q,
            DECORATED,
            decoration=best[n + 2 : N - 1],
            x=best[n + 1],
            y=best[N - 1],
        )
    raise DomainError(f"cannot classify code: {word}")


def orbit_exists(q: Fraction, w: str) -> int:
    """How many of the four words c_q x w y are codes of orbits of height q.

    Counts spellings: imprimitive words and words whose orbit has some
    other height are not counted.
    """
    _check_word(w)
    q = Fraction(q)
    c = cq_word(q)
    count = 0
    for x in "01":
        for y in "01":
            word = c + x + w + y
            if is_primitive(word) and orbit_height(word) == q:
                count += 1
    return count


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def q_in_Qw_sufficient(q: Fraction, w: str) -> bool:
    """A primality condition sufficient for q to be a parameter of the w family."""
    q = Fraction(q)
    if not 0 < q < scope(w):
        raise DomainError(
            f"q must lie strictly between 0 and the scope {scope(w)} of {w!r}"
        )
    return _is_prime(q.denominator + len(w) + 3)


def reverse_orbit(code: str) -> str:
    """The canonical code of the time-reversed orbit."""
    _check_word(code, allow_empty=False)
    return canonical_code(code[::-1])
