from fractions import Fraction

import pytest

from horseshoe.disks import (
    DomainError,
    disk_specs,
    forcing_oracle,
    in_disk,
    intersection_counts,
)
from horseshoe.height import cq_word
from horseshoe.words import OrbitPoint, canonical_code

F = Fraction


def test_disk_specs_shape():
    specs = disk_specs("10", F(1, 4))
    assert [s.name for s in specs] == ["A", "B", "C", "D"]
    a, b, c, d = specs
    # A and B thresholds carry the reversed word, C and D the word itself
    assert str(a.principal) == "(100010010)"
    assert str(a.shifted) == "(100100011)"
    assert str(b.principal) == "(100011011)"
    assert str(b.shifted) == "(101100010)"
    assert str(c.principal) == "(100010100)"
    assert str(c.shifted) == "(010100011)"
    assert str(d.principal) == "(100011101)"
    assert str(d.shifted) == "(011100010)"


def test_disk_specs_domain():
    with pytest.raises(DomainError):
        disk_specs("11", F(2, 5))  # at the scope
    with pytest.raises(DomainError):
        disk_specs("11", F(0, 1))


def test_counts_on_boundary_families():
    # orbits of the form c_q' 0 w 0 meet exactly the principal disks
    code = canonical_code(cq_word(F(1, 4)) + "0" + "11" + "0")
    assert intersection_counts(code, "11", F(1, 3)) == (1, 0, 1, 0)
    code = canonical_code(cq_word(F(1, 4)) + "0" + "1" + "0")
    assert intersection_counts(code, "1", F(1, 3)) == (0, 1, 0, 1)


def test_counts_reject_bad_input():
    with pytest.raises(DomainError):
        intersection_counts("1010", "1", F(1, 3))
    # the boundary family itself is excluded
    with pytest.raises(DomainError):
        intersection_counts(canonical_code(cq_word(F(1, 4)) + "0110"), "11", F(1, 4))


def test_forcing_oracle_values():
    assert forcing_oracle("10010110", "11", F(9, 25))
    assert not forcing_oracle("10010110", "11", F(8, 25))


def test_forcing_oracle_needs_fine_denominator():
    with pytest.raises(DomainError):
        forcing_oracle("10010110", "11", F(1, 3))


def test_in_disk_is_strict():
    # the orbit of c_q 0 w 0 itself lies on the boundary of disk A
    specs = disk_specs("11", F(1, 3))
    code = "10010110"
    with pytest.raises(DomainError):
        for k in range(len(code)):
            in_disk(OrbitPoint(code, k), specs[0])


def test_even_containments_spot():
    # D inside C and B inside A, pointwise
    for code in ["10010110", "100101100", "1001011010"]:
        for q in [F(1, 3), F(2, 7), F(3, 10)]:
            specs = disk_specs("11", q)
            a, b, c, d = specs
            for k in range(len(code)):
                pt = OrbitPoint(code, k)
                try:
                    if in_disk(pt, d):
                        assert in_disk(pt, c)
                    if in_disk(pt, b):
                        assert in_disk(pt, a)
                except DomainError:
                    continue
