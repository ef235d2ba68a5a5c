"""Binary words, eventually periodic sequences, and the unimodal order.

Finite words are plain strings over the alphabet {0, 1}.  One-sided infinite
sequences are :class:`Seq` values, stored as a preperiodic part followed by a
repeating part.  The unimodal order is the total order on one-sided sequences
in which the lexicographic comparison at the first disagreement is reversed
whenever the common prefix contains an odd number of 1s.
"""
from __future__ import annotations

from dataclasses import dataclass
from os.path import commonprefix

LT, EQ, GT = -1, 0, 1


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


def _check_word(w: str, *, allow_empty: bool = True) -> str:
    if not isinstance(w, str) or w.strip("01") != "":
        raise DomainError(f"not a binary word: {w!r}")
    if not allow_empty and not w:
        raise DomainError("word must be nonempty")
    return w


def is_even(w: str) -> bool:
    """True iff w contains an even number of 1s (the empty word is even)."""
    return w.count("1") % 2 == 0


def _flip(symbol: str) -> str:
    return "1" if symbol == "0" else "0"


def flip_first(w: str) -> str:
    """The word with its first symbol changed."""
    _check_word(w, allow_empty=False)
    return _flip(w[0]) + w[1:]


def flip_last(w: str) -> str:
    """The word with its last symbol changed."""
    _check_word(w, allow_empty=False)
    return w[:-1] + _flip(w[-1])


def append_even(w: str) -> str:
    """w extended on the right by the symbol that makes the result even."""
    _check_word(w)
    return w + ("0" if is_even(w) else "1")


def prepend_even(w: str) -> str:
    """w extended on the left by the symbol that makes the result even."""
    _check_word(w)
    return ("0" if is_even(w) else "1") + w


def even_initial_subwords(w: str) -> list[str]:
    """Nonempty even prefixes of w, in increasing length order."""
    _check_word(w)
    return [w[:k] for k in range(1, len(w) + 1) if is_even(w[:k])]


def even_final_subwords(w: str) -> list[str]:
    """Nonempty even suffixes of w, in increasing length order."""
    _check_word(w)
    return [w[k:] for k in range(len(w) - 1, -1, -1) if is_even(w[k:])]


@dataclass(frozen=True)
class Seq:
    """An eventually periodic one-sided sequence pre · per · per · per …

    Instances are normalized on construction: the repeating part is reduced
    to its primitive root and the preperiod is shortened as far as possible,
    so equal sequences compare equal as values.
    """

    pre: str
    per: str

    def __post_init__(self) -> None:
        _check_word(self.pre)
        _check_word(self.per, allow_empty=False)
        per = self.per
        # reduce the repeating part to its primitive root
        d = (per + per).find(per, 1)
        per = per[:d]
        # absorb any matching tail of the preperiod into the cycle
        pre = self.pre
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @staticmethod
    def periodic(word: str) -> "Seq":
        return Seq("", word)

    @staticmethod
    def parse(text: str) -> "Seq":
        """Parse "PRE(PER)", "(PER)", or a bare word meaning (word)^infinity."""
        if "(" in text or ")" in text:
            if text.count("(") != 1 or not text.endswith(")"):
                raise DomainError(f"malformed sequence: {text!r}")
            pre, per = text[:-1].split("(")
            return Seq(pre, per)
        _check_word(text, allow_empty=False)
        return Seq("", text)

    def __str__(self) -> str:
        return f"{self.pre}({self.per})"

    def __getitem__(self, i: int) -> str:
        if i < 0:
            raise IndexError(i)
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> str:
        """The first n symbols as a string."""
        if n <= len(self.pre):
            return self.pre[:n]
        k = -(-(n - len(self.pre)) // len(self.per))
        return (self.pre + self.per * k)[:n]

    def shift(self) -> "Seq":
        """The sequence with its first symbol removed."""
        if self.pre:
            return Seq(self.pre[1:], self.per)
        return Seq("", self.per[1:] + self.per[0])


def unimodal_cmp(s: Seq, t: Seq) -> int:
    """Compare two sequences in the unimodal order; returns LT, EQ or GT.

    If the sequences agree on max(preperiods) + |per_s| + |per_t| symbols
    they agree everywhere, so the comparison is decided within that window.
    """
    n = max(len(s.pre), len(t.pre)) + len(s.per) + len(t.per)
    a, b = s.prefix(n), t.prefix(n)
    if a == b:
        return EQ
    i = len(commonprefix((a, b)))
    if a[:i].count("1") % 2 == 0:
        return LT if a[i] < b[i] else GT
    return GT if a[i] < b[i] else LT


def forward_ray(code: str, i: int) -> Seq:
    """The periodic sequence read rightward from position i of the cyclic code."""
    _check_word(code, allow_empty=False)
    i %= len(code)
    return Seq("", code[i:] + code[:i])


def backward_ray(code: str, i: int) -> Seq:
    """The periodic sequence read leftward starting at position i−1 of the cyclic code."""
    _check_word(code, allow_empty=False)
    i %= len(code)
    return Seq("", (code[i:] + code[:i])[::-1])


@dataclass(frozen=True)
class OrbitPoint:
    """A point of a periodic orbit: a repeating code together with a phase.

    The point's biinfinite itinerary is … b₂ b₁ b₀ · f₀ f₁ f₂ … where the
    forward ray f starts at the given offset and the backward ray b starts
    one position to its left.
    """

    code: str
    offset: int = 0

    @property
    def forward(self) -> Seq:
        return forward_ray(self.code, self.offset)

    @property
    def backward(self) -> Seq:
        return backward_ray(self.code, self.offset)


def is_primitive(word: str) -> bool:
    """True iff the word's least period equals its length."""
    _check_word(word, allow_empty=False)
    return (word + word).find(word, 1) == len(word)


def canonical_code(word: str) -> str:
    """The unimodal-maximal rotation of the primitive root of a cyclic word.

    This is the code read from the rightmost point of the corresponding
    periodic orbit, and is the canonical spelling used throughout.
    """
    _check_word(word, allow_empty=False)
    d = (word + word).find(word, 1)
    word = word[:d]
    best = word
    best_seq = Seq.periodic(word)
    for k in range(1, len(word)):
        rot = word[k:] + word[:k]
        rot_seq = Seq.periodic(rot)
        if unimodal_cmp(rot_seq, best_seq) == GT:
            best, best_seq = rot, rot_seq
    return best
