"""Forcing decided by intersections with four disks.

For a decoration w and parameter q, four disks A, B, C, D are cut out of
the plane by the stable and unstable boundary of the decorated family
member.  Whether a point of a periodic orbit lies in a disk is decided by
two strict unimodal comparisons of its rays against periodic thresholds.
Counting the orbit's points in each disk gives a forcing test that is
completely independent of the invariant formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .height import cq_word, scope
from .words import (
    EQ,
    GT,
    DomainError,
    OrbitPoint,
    Seq,
    _check_word,
    canonical_code,
    is_even,
    is_primitive,
    unimodal_cmp,
)


@dataclass(frozen=True)
class DiskSpec:
    """One of the four disks, named A, B, C or D.

    ``principal`` bounds the ray leaving the disk on its own side (the
    backward ray for A and B, the forward ray for C and D); ``shifted``
    bounds the shift of the opposite ray.
    """

    name: str
    principal: Seq
    shifted: Seq


@lru_cache(maxsize=None)
def _specs(w: str, q: Fraction) -> tuple[DiskSpec, ...]:
    c = cq_word(q)
    rw = w[::-1]
    return (
        DiskSpec("A", Seq.periodic(c + "0" + rw + "0"), Seq.periodic(w + "0" + c + "1")),
        DiskSpec("B", Seq.periodic(c + "1" + rw + "1"), Seq.periodic(w + "1" + c + "0")),
        DiskSpec("C", Seq.periodic(c + "0" + w + "0"), Seq.periodic(rw + "0" + c + "1")),
        DiskSpec("D", Seq.periodic(c + "1" + w + "1"), Seq.periodic(rw + "1" + c + "0")),
    )


def disk_specs(w: str, q: Fraction) -> tuple[DiskSpec, ...]:
    """The four disks of the w family at parameter q, in order A, B, C, D."""
    _check_word(w)
    q = Fraction(q)
    if not 0 < q < scope(w):
        raise DomainError(
            f"q must lie strictly between 0 and the scope {scope(w)} of {w!r}"
        )
    return _specs(w, q)


def in_disk(point: OrbitPoint, spec: DiskSpec) -> bool:
    """Whether an orbit point lies inside the disk.

    Both comparisons are evaluated first; if either ray sits exactly on a
    threshold the point belongs to the family boundary orbit itself and a
    DomainError is raised.
    """
    if spec.name in ("A", "B"):
        first = point.backward
        second = point.forward.shift()
    else:
        first = point.forward
        second = point.backward.shift()
    side1 = unimodal_cmp(first, spec.principal)
    side2 = unimodal_cmp(second, spec.shifted)
    if side1 == EQ or side2 == EQ:
        raise DomainError("point lies on the boundary orbit of the family")
    return side1 == GT and side2 == GT


def intersection_counts(
    code: str, w: str, q: Fraction
) -> tuple[int, int, int, int]:
    """How many points of the orbit lie in each of the disks A, B, C, D."""
    _check_word(code, allow_empty=False)
    q = Fraction(q)
    specs = disk_specs(w, q)
    canon = canonical_code(code)
    if len(canon) != len(code):
        raise DomainError(f"imprimitive code: {code}")
    c = cq_word(q)
    for x in "01":
        for y in "01":
            word = c + x + w + y
            if is_primitive(word) and canonical_code(word) == canon:
                raise DomainError(
                    "the code is a boundary orbit of the family itself"
                )
    counts = [0, 0, 0, 0]
    for p in range(len(code)):
        point = OrbitPoint(code, p)
        for k, spec in enumerate(specs):
            if in_disk(point, spec):
                counts[k] += 1
    return tuple(counts)


def forcing_oracle(code: str, w: str, q: Fraction) -> bool:
    """Forcing decided purely by disk intersections.

    Requires the denominator of q to exceed twice the period, which keeps
    every comparison strict.  For even decorations (evenly many 1s) the test
    is nonempty intersection with both A and C; for odd decorations, with
    both B and D.
    """
    q = Fraction(q)
    if q.denominator <= 2 * len(code):
        raise DomainError(
            "the denominator of q must exceed twice the period of the code"
        )
    a, b, c, d = intersection_counts(code, w, q)
    if is_even(w):
        return a > 0 and c > 0
    return b > 0 and d > 0
