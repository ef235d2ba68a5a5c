"""Decoration invariants of periodic orbits.

For a decoration word w and an orbit code R, the invariant r^w(R) is a
rational in (0, scope(w)] computed from heights of rays based at cyclic
occurrences of certain windows derived from w.  The orbit R forces the
w-decorated family member at parameter q exactly when q > r^w(R).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .height import HALF, height, scope
from .words import (
    DomainError,
    _check_word,
    append_even,
    backward_ray,
    even_final_subwords,
    even_initial_subwords,
    flip_first,
    flip_last,
    forward_ray,
    prepend_even,
)

FORWARD = "forward"
BACKWARD = "backward"
BOTH = "both"

FORCED = "FORCED"
NOT_FORCED = "NOT-FORCED"
AT_THRESHOLD = "THRESHOLD"


def _occurrences(code: str, v: str) -> list[int]:
    doubled = code * (len(v) // len(code) + 2)
    return [p for p in range(len(code)) if doubled.startswith(v, p)]


def r_dir(code: str, windows, direction: str) -> Fraction:
    """Least ray height over all cyclic occurrences of the given windows.

    A window occupying positions p .. p+|v|-1 of the cyclic code has a
    forward ray leaving its right end and a backward ray leaving its left
    end; "both" takes the larger of the two heights before minimizing.
    """
    _check_word(code, allow_empty=False)
    N = len(code)
    best = HALF
    for v in windows:
        for p in _occurrences(code, v):
            i = (p + len(v)) % N
            if direction == FORWARD:
                q = height(forward_ray(code, i))
            elif direction == BACKWARD:
                q = height(backward_ray(code, p))
            elif direction == BOTH:
                q = max(
                    height(backward_ray(code, p)),
                    height(forward_ray(code, i)),
                )
            else:
                raise DomainError(f"unknown direction: {direction!r}")
            if q < best:
                best = q
    return best


@lru_cache(maxsize=None)
def _mu_windows(w: str) -> tuple[str, ...]:
    _check_word(w)
    return tuple(
        flip_first(v) + x
        for v in even_final_subwords(prepend_even(w))
        for x in "01"
    )


@lru_cache(maxsize=None)
def _nu_windows(w: str) -> tuple[str, ...]:
    _check_word(w)
    return tuple(
        x + flip_last(v)
        for v in even_initial_subwords(append_even(w))
        for x in "01"
    )


@lru_cache(maxsize=None)
def _lam_windows(w: str) -> tuple[str, ...]:
    _check_word(w)
    return tuple(x + w + y for x in "01" for y in "01")


def mu(w: str, code: str) -> Fraction:
    """Forward-ray invariant over windows built from even suffixes of w."""
    return min(scope(w), r_dir(code, _mu_windows(w), FORWARD))


def nu(w: str, code: str) -> Fraction:
    """Backward-ray invariant over windows built from even prefixes of w."""
    return min(scope(w), r_dir(code, _nu_windows(w), BACKWARD))


def lam(w: str, code: str) -> Fraction:
    """Two-sided invariant over the windows x w y."""
    return min(scope(w), r_dir(code, _lam_windows(w), BOTH))


def r_w(w: str, code: str) -> Fraction:
    """The decoration invariant r^w of an orbit code."""
    return min(lam(w, code), max(mu(w, code), nu(w, code)))


def r_star(code: str) -> Fraction:
    """The star invariant: two-sided ray heights at every position."""
    return min(HALF, r_dir(code, ("0", "1"), BOTH))


def forces(code: str, w: str, q: Fraction) -> str:
    """Does the orbit force the w-decorated family member at parameter q?

    Returns FORCED, NOT-FORCED, or THRESHOLD (the boundary case q = r^w).
    The parameter must satisfy 0 < q < scope(w).
    """
    q = Fraction(q)
    if not 0 < q < scope(w):
        raise DomainError(
            f"q must lie strictly between 0 and the scope {scope(w)} of {w!r}"
        )
    r = r_w(w, code)
    if q > r:
        return FORCED
    if q < r:
        return NOT_FORCED
    return AT_THRESHOLD


def rhe_is_half(code: str) -> bool:
    """True iff the right-hand end invariant of the orbit is 1/2.

    Holds exactly when the cyclic code contains 01010 or a 1-run of odd
    length at least 3.
    """
    _check_word(code, allow_empty=False)
    if "0" not in code:
        return False
    doubled = code * (5 // len(code) + 3)
    if "01010" in doubled:
        return True
    k = code.index("0")
    rot = code[k + 1 :] + code[: k + 1]  # rotate to end on that 0
    return any(len(run) % 2 == 1 and len(run) >= 3 for run in rot.split("0"))
