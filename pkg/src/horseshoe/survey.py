"""Surveys over all orbits of a given period.

Enumerates primitive binary necklaces, tabulates decoration invariants
with orbits grouped by (kind, height, decoration), and measures how
universal a decoration's forcing is across all orbits of a period,
either exactly or by orbit-uniform sampling.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .height import HALF, cq_word, finite_order_word, scope
from .invariants import r_star, r_w
from .orbits import DECORATED, FINITE_ORDER, NBT, classify
from .words import DomainError, Seq, canonical_code, is_primitive, unimodal_cmp

STAR = "*"


def necklaces(n: int) -> list[str]:
    """Canonical codes of all primitive binary necklaces of length n."""
    if n < 1:
        raise DomainError(f"necklace length must be positive, got {n}")
    out = []
    w = [0]
    while w:
        if len(w) == n:
            out.append(canonical_code("".join("01"[b] for b in w)))
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


@dataclass(frozen=True)
class TableRow:
    label: str
    members: tuple[str, ...]
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class DecInvTable:
    period: int
    decorations: tuple[str, ...]
    scope_row: tuple[Fraction, ...]
    rows: tuple[TableRow, ...]


def _row_label(kind, q, w, members, infos) -> str:
    if len(members) == 1:
        return members[0]
    if kind == FINITE_ORDER:
        return finite_order_word(q) + "."
    if kind == NBT:
        return cq_word(q) + "."
    if kind != DECORATED:
        return members[0]
    c = cq_word(q)
    if len(members) == 4:
        return c + "." + w + "."
    if len(members) == 3:
        return c + "." + w + "(.)"
    xs = {info.x for info in infos}
    ys = {info.y for info in infos}
    if len(xs) == 1:
        return c + next(iter(xs)) + w + "."
    if len(ys) == 1:
        return c + "." + w + next(iter(ys))
    return c + "." + w + "."


_DEFAULT_DECORATIONS = (STAR, "", "0", "1", "00", "11", "000", "101", "111")


def decinv_table(
    period: int, decorations: tuple[str, ...] = _DEFAULT_DECORATIONS
) -> DecInvTable:
    """Invariants of every orbit of one period, grouped into table rows.

    Orbits sharing kind, height, and decoration form one row; their
    invariants are required to agree.  Rows are ordered by the unimodal
    order of each row's least member, and the table carries a leading
    row of scopes ("*" marks the star invariant, whose scope is 1/2).
    """
    if period < 3:
        raise DomainError(f"table requires period at least 3, got {period}")
    decorations = tuple(decorations)
    groups: dict[tuple, list] = {}
    for code in necklaces(period):
        info = classify(code)
        groups.setdefault((info.kind, info.height, info.decoration), []).append(
            info
        )
    periodic_cmp = cmp_to_key(
        lambda a, b: unimodal_cmp(Seq.periodic(a), Seq.periodic(b))
    )
    rows = []
    for (kind, q, w), infos in groups.items():
        members = sorted((info.code for info in infos), key=periodic_cmp)
        values = []
        for d in decorations:
            vals = [r_star(m) if d == STAR else r_w(d, m) for m in members]
            if any(v != vals[0] for v in vals):
                raise RuntimeError(
                    f"group members disagree on {d!r}: {members} -> {vals}"
                )
            values.append(vals[0])
        label = _row_label(kind, q, w, members, infos)
        rows.append(TableRow(label, tuple(members), tuple(values)))
    rows.sort(key=lambda row: periodic_cmp(row.members[0]))
    scope_row = tuple(HALF if d == STAR else scope(d) for d in decorations)
    return DecInvTable(period, decorations, scope_row, tuple(rows))


def universality_scan(w: str, q: Fraction, n: int) -> Fraction:
    """The exact fraction of period-n orbits whose invariant r^w is below q."""
    q = Fraction(q)
    if not 0 < q < scope(w):
        raise DomainError(
            f"q must lie strictly between 0 and the scope {scope(w)} of {w!r}"
        )
    codes = necklaces(n)
    hits = sum(1 for code in codes if r_w(w, code) < q)
    return Fraction(hits, len(codes))


def universality_sample(
    w: str, q: Fraction, n: int, k: int, seed: int = 0
) -> Fraction:
    """Like the scan, estimated from k orbits drawn uniformly at random."""
    q = Fraction(q)
    if not 0 < q < scope(w):
        raise DomainError(
            f"q must lie strictly between 0 and the scope {scope(w)} of {w!r}"
        )
    if n < 1 or k < 1:
        raise DomainError("need a positive period and sample size")
    rng = random.Random(seed)
    hits = 0
    for _ in range(k):
        while True:
            word = "".join(rng.choice("01") for _ in range(n))
            if is_primitive(word):
                break
        if r_w(w, canonical_code(word)) < q:
            hits += 1
    return Fraction(hits, k)
