from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from horseshoe.words import (
    EQ,
    GT,
    LT,
    DomainError,
    OrbitPoint,
    Seq,
    append_even,
    backward_ray,
    canonical_code,
    even_final_subwords,
    even_initial_subwords,
    flip_first,
    flip_last,
    forward_ray,
    is_even,
    is_primitive,
    prepend_even,
    unimodal_cmp,
)


def test_parity_accents():
    assert is_even("")
    assert is_even("0")
    assert not is_even("1")
    assert is_even("1001")
    assert append_even("") == "0"
    assert append_even("1") == "11"
    assert append_even("11") == "110"
    assert prepend_even("") == "0"
    assert prepend_even("1") == "11"
    assert prepend_even("10") == "110"
    assert flip_first("011") == "111"
    assert flip_last("011") == "010"


def test_even_subwords_increasing_length():
    # nonempty even-parity prefixes and suffixes, shortest first
    assert even_initial_subwords("11") == ["11"]
    assert even_final_subwords("11") == ["11"]
    assert even_initial_subwords("110") == ["11", "110"]
    assert even_final_subwords("110") == ["0", "110"]
    assert even_initial_subwords("0") == ["0"]
    assert even_initial_subwords("10010") == ["1001", "10010"]
    assert even_final_subwords("10010") == ["0", "10010"]


def test_accents_reject_bad_words():
    with pytest.raises(DomainError):
        flip_first("")
    with pytest.raises(DomainError):
        flip_last("")
    with pytest.raises(DomainError):
        append_even("102")
    with pytest.raises(DomainError):
        even_initial_subwords("abc")


def test_seq_normalization():
    assert Seq("", "11") == Seq("", "1")
    assert Seq("10", "0") == Seq("1", "0")
    assert Seq("100", "1") == Seq("100", "1")
    assert Seq("1001", "1") == Seq("100", "1")  # tail rolls into the cycle
    assert Seq("", "1010") == Seq("", "10")
    s = Seq("10110", "110110")
    assert len(s.per) == 3


def test_seq_parse_and_str():
    assert Seq.parse("10111100(11)") == Seq("10111100", "11")
    assert Seq.parse("(10)") == Seq.periodic("10")
    assert Seq.parse("1001") == Seq.periodic("1001")
    assert str(Seq("100", "1")) == "100(1)"
    with pytest.raises(DomainError):
        Seq.parse("10(1")
    with pytest.raises(DomainError):
        Seq.parse("10()")
    with pytest.raises(DomainError):
        Seq.parse("")


def test_seq_indexing_prefix_shift():
    s = Seq("10", "011")
    assert [s[i] for i in range(8)] == list("10011011")
    assert s.prefix(8) == "10011011"
    assert s.prefix(2) == "10"
    assert s.prefix(0) == ""
    assert s.shift() == Seq("0", "011")
    assert Seq.periodic("10").shift() == Seq.periodic("01")
    with pytest.raises(IndexError):
        s[-1]


@given(
    pre=st.text(alphabet="01", max_size=5),
    per=st.text(alphabet="01", min_size=1, max_size=5),
    n=st.integers(min_value=0, max_value=40),
)
def test_seq_normalization_preserves_symbols(pre, per, n):
    raw = pre + per * 50
    s = Seq(pre, per)
    assert s.prefix(n) == raw[:n]


def test_unimodal_order_basics():
    top = Seq("1", "0")
    bottom = Seq.periodic("0")
    mid = Seq.periodic("10")
    assert unimodal_cmp(top, mid) == GT
    assert unimodal_cmp(bottom, mid) == LT
    assert unimodal_cmp(mid, mid) == EQ
    # reversal after an odd number of ones
    assert unimodal_cmp(Seq.periodic("10110"), Seq.periodic("10100")) == GT
    assert unimodal_cmp(Seq.periodic("1011"), Seq.periodic("1010")) == GT
    assert unimodal_cmp(Seq.periodic("10010110"), Seq.periodic("10010111")) == LT


def test_unimodal_equality_only_for_equal_sequences():
    # distinct spellings of one sequence compare equal
    assert unimodal_cmp(Seq("10", "1101"), Seq("101", "1011")) == EQ
    assert unimodal_cmp(Seq("", "10"), Seq("10", "10")) == EQ


@given(
    a=st.text(alphabet="01", min_size=1, max_size=6),
    b=st.text(alphabet="01", min_size=1, max_size=6),
)
def test_unimodal_antisymmetry(a, b):
    s, t = Seq.periodic(a), Seq.periodic(b)
    assert unimodal_cmp(s, t) == -unimodal_cmp(t, s)
    assert (unimodal_cmp(s, t) == EQ) == (s == t)


def test_rays():
    assert forward_ray("10010", 0) == Seq.periodic("10010")
    assert forward_ray("10010", 2) == Seq.periodic("01010010"[:5])
    assert forward_ray("10010", 7) == forward_ray("10010", 2)
    # the backward ray reads leftward starting one place before the offset
    assert backward_ray("10010", 0) == Seq.periodic("01001")
    assert backward_ray("10010", 3) == Seq.periodic("00101")
    pt = OrbitPoint("10010", 3)
    assert pt.forward == forward_ray("10010", 3)
    assert pt.backward == backward_ray("10010", 3)


def test_backward_ray_symbols():
    code = "1011100"
    for i in range(len(code)):
        b = backward_ray(code, i)
        for k in range(12):
            assert b[k] == code[(i - 1 - k) % len(code)]


def test_is_primitive():
    assert is_primitive("1")
    assert is_primitive("10")
    assert not is_primitive("1010")
    assert not is_primitive("11")
    assert is_primitive("110100")


def test_canonical_code():
    assert canonical_code("00101") == "10010"
    assert canonical_code("0111011") == "1011011"
    assert canonical_code("1100") == "1001"
    assert canonical_code("10101010") == "10"  # reduced to the primitive root
    assert canonical_code("1") == "1"
    assert canonical_code("0") == "0"


@given(w=st.text(alphabet="01", min_size=1, max_size=8), k=st.integers(0, 7))
def test_canonical_code_rotation_invariant(w, k):
    k %= len(w)
    assert canonical_code(w[k:] + w[:k]) == canonical_code(w)


def test_canonical_code_is_unimodal_max_rotation():
    for word in ["100010111001010", "10010110", "1000001"]:
        canon = canonical_code(word)
        best = Seq.periodic(canon)
        for k in range(len(word)):
            rot = Seq.periodic(word[k:] + word[:k])
            assert unimodal_cmp(rot, best) != GT
