from fractions import Fraction

import pytest

from horseshoe.height import (
    DomainError,
    cq_word,
    finite_order_word,
    height,
    height_oracle,
    scope,
    starlem_check,
)
from horseshoe.words import GT, LT, Seq, unimodal_cmp

F = Fraction


CQ_TABLE = {
    F(1, 3): "1001",
    F(1, 4): "10001",
    F(1, 5): "100001",
    F(2, 5): "101101",
    F(1, 6): "1000001",
    F(1, 7): "10000001",
    F(2, 7): "10011001",
    F(3, 7): "10111101",
    F(1, 8): "100000001",
    F(3, 8): "101101101",
    F(1, 9): "1000000001",
    F(2, 9): "1000110001",
    F(4, 9): "1011111101",
    F(1, 10): "10000000001",
    F(3, 10): "10011011001",
    F(1, 11): "100000000001",
    F(2, 11): "100001100001",
    F(3, 11): "100110011001",
    F(4, 11): "101101101101",
}


def test_cq_table():
    for q, word in CQ_TABLE.items():
        assert cq_word(q) == word


def test_cq_basics():
    assert cq_word(F(1, 2)) == "101"
    for q in CQ_TABLE:
        w = cq_word(q)
        assert len(w) == q.denominator + 1
        assert w == w[::-1]  # palindrome
        assert w.count("1") == 2 * q.numerator


def test_cq_palindromes_larger():
    for n in range(2, 41):
        for m in range(1, n // 2 + 1):
            if F(m, n).denominator != n:
                continue
            w = cq_word(F(m, n))
            assert w == w[::-1]
            assert w[:2] == "10" or w == "101"


def test_cq_domain():
    with pytest.raises(DomainError):
        cq_word(F(2, 3))
    with pytest.raises(DomainError):
        cq_word(F(0, 1))
    with pytest.raises(DomainError):
        cq_word(F(-1, 4))


def test_cq_monotone():
    # lower height, higher sequence: q < q' makes (c_q 0)^inf the larger ray
    qs = sorted(
        {F(m, n) for n in range(2, 21) for m in range(1, n // 2 + 1)}
    )
    seqs = [Seq.periodic(cq_word(q) + "0") for q in qs]
    for a, b in zip(seqs, seqs[1:]):
        assert unimodal_cmp(b, a) == LT


def test_finite_order_word():
    assert finite_order_word(F(1, 3)) == "10"
    assert finite_order_word(F(2, 5)) == "1011"
    assert finite_order_word(F(3, 8)) == "1011011"
    for q in CQ_TABLE:
        assert finite_order_word(q) == cq_word(q)[: q.denominator - 1]


HEIGHTS = [
    ("10111100(11)", F(2, 5)),
    ("(10010)", F(1, 3)),
    ("1(0)", F(0, 1)),
    ("(10)", F(1, 2)),
    ("(0)", F(1, 2)),
    ("10(1)", F(1, 2)),
    ("100(1)", F(1, 3)),
    ("(1001)", F(1, 4)),
    ("(1000001)", F(1, 7)),
    ("(10000011)", F(1, 6)),
    ("(10110110)", F(3, 8)),
    ("(10110111)", F(3, 8)),
    ("(10011100)", F(1, 3)),
    ("(10001100)", F(1, 4)),
    ("(10111010)", F(1, 2)),
    ("(1011)", F(1, 2)),
    ("(10110)", F(2, 5)),
    ("(101)", F(1, 3)),
    ("(100)", F(1, 3)),
    ("(1000)", F(1, 4)),
    ("(10000)", F(1, 5)),
    ("(10001001)", F(1, 4)),
    ("(1000000)", F(1, 7)),
    ("(1000010110)", F(1, 5)),
    ("(10101)", F(1, 2)),
]


@pytest.mark.parametrize("text,want", HEIGHTS)
def test_height_values(text, want):
    assert height(Seq.parse(text)) == want


def test_height_of_zero_start():
    # anything at or below (10)^inf sits at height one half
    assert height(Seq("01", "10")) == F(1, 2)
    assert height(Seq.periodic("0011")) == F(1, 2)
    assert height(Seq("110", "10")) == F(1, 2)


def test_height_of_cq_sequences():
    for q, word in CQ_TABLE.items():
        assert height(Seq.periodic(word + "0")) == q
        assert height(Seq.periodic(finite_order_word(q) + "0")) == q


def test_height_oracle_matches_on_goldens():
    for text, want in HEIGHTS:
        c = Seq.parse(text)
        assert height_oracle(c, max_den=64) == want


def test_height_oracle_domain():
    with pytest.raises(DomainError):
        height_oracle(Seq.periodic("10010"), max_den=1)
    # 1/7 is not representable with denominators up to 5
    with pytest.raises(DomainError):
        height_oracle(Seq.periodic("1000001"), max_den=5)


def test_height_order_reversing_small():
    seqs = [Seq.parse(t) for t, _ in HEIGHTS]
    for s in seqs:
        for t in seqs:
            if unimodal_cmp(s, t) == GT:
                assert height(s) <= height(t)


SCOPES = {
    "": F(1, 3),
    "0": F(1, 4),
    "1": F(1, 2),
    "00": F(1, 5),
    "11": F(2, 5),
    "000": F(1, 6),
    "101": F(1, 2),
    "111": F(1, 2),
}


def test_scope_values():
    for w, want in SCOPES.items():
        assert scope(w) == want


def test_scope_of_star_words():
    from horseshoe.families import star_decoration

    for n in range(3, 16):
        for m in range(1, (n - 1) // 2 + 1):
            q = F(m, n)
            if q.denominator != n:
                continue
            assert scope(star_decoration(q)) == q


def test_starlem_domain():
    with pytest.raises(DomainError):
        starlem_check(F(1, 3), 0, Seq.periodic("10"))
    with pytest.raises(DomainError):
        starlem_check(F(1, 3), 3, Seq.periodic("10"))


def test_starlem_small():
    f = Seq.periodic("10")
    for q in [F(1, 3), F(2, 5), F(1, 4), F(3, 7)]:
        runs = [b for b in cq_word(q).split("1") if b]
        for r in range(1, len(runs) + 1):
            assert starlem_check(q, r, f)
