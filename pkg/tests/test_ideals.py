import itertools

import numpy as np
import pytest

from ringlab import (
    all_right_ideals,
    catalog_build,
    is_principal,
    named_elements_example31,
    non_principal_right_ideals,
    principal_right_ideal,
    right_ideal_generated,
)
from ringlab.errors import CapacityExceeded
from ringlab.ideals import ideal_sum, validate_right_ideal


def _oracle_right_ideals(R):
    """Subset enumeration: every subset closed under + and right *. Only
    feasible for tiny rings; the independent check for the join closure."""
    n = R.order
    out = []
    for bits in range(1, 1 << n):
        members = [k for k in range(n) if bits >> k & 1]
        S = set(members)
        if R.zero not in S:
            continue
        if any(R.add(x, y) not in S for x in S for y in S):
            continue
        if any(R.mul(x, r) not in S for x in S for r in range(n)):
            continue
        out.append(tuple(members))
    return sorted(out, key=lambda m: (len(m), m))


@pytest.mark.parametrize("name,p,expected_count", [
    ("modint", 4, 3),
    ("gf", 3, 2),
    ("ternions", 2, 7),
])
def test_all_right_ideals_vs_subset_oracle(name, p, expected_count):
    R = catalog_build(name, p)
    oracle = _oracle_right_ideals(R)
    got = [i.members for i in all_right_ideals(R)]
    assert got == oracle
    assert len(got) == expected_count


def test_ternions2_ideal_sizes():
    R = catalog_build("ternions", 2)
    assert [i.size for i in all_right_ideals(R)] == [1, 2, 2, 2, 4, 4, 8]


def test_principal_ideal_z4(z4):
    assert principal_right_ideal(z4, 2).members == (0, 2)
    assert principal_right_ideal(z4, 1).members == (0, 1, 2, 3)


def test_principal_ideal_of_one_is_ring(ex31):
    assert principal_right_ideal(ex31, ex31.one).size == ex31.order


def test_example31_IR(ex31):
    named = named_elements_example31(ex31)
    ir = principal_right_ideal(ex31, named["I"])
    assert set(ir.members) == {named["0"], named["I"]}


def test_generated_IJ_and_IA(ex31):
    named = named_elements_example31(ex31)
    ij = right_ideal_generated(ex31, [named["I"], named["J"]])
    assert set(ij.members) == {named["0"], named["I"], named["J"], named["K"]}
    ia = right_ideal_generated(ex31, [named["I"], named["A"]])
    assert ia.size == 8
    i2 = next(i for i in non_principal_right_ideals(ex31) if i.size == 8)
    assert ia.members == i2.members


def test_generated_by_one(z4):
    assert right_ideal_generated(z4, [1]).size == 4


def test_is_principal(z4, ex31):
    two = principal_right_ideal(z4, 2)
    assert is_principal(z4, two) == (True, 2)
    whole = principal_right_ideal(z4, 1)
    ok, witness = is_principal(z4, whole)
    assert ok and witness == z4.one
    named = named_elements_example31(ex31)
    i1 = right_ideal_generated(ex31, [named["I"], named["J"]])
    assert is_principal(ex31, i1) == (False, None)


def test_non_principal_example31(ex31):
    nps = non_principal_right_ideals(ex31)
    assert sorted(i.size for i in nps) == [4, 8]


def test_non_principal_z4_empty(z4):
    assert non_principal_right_ideals(z4) == []


def test_gf_fields_have_trivial_lattice(gf2, gf3):
    for R in (gf2, gf3):
        sizes = [i.size for i in all_right_ideals(R)]
        assert sizes == [1, R.order]


def test_generated_equals_principal_sum(ternions2):
    R = ternions2
    for a, b in itertools.product(R.elements(), repeat=2):
        gen = right_ideal_generated(R, [a, b])
        summed = ideal_sum(R, principal_right_ideal(R, a), principal_right_ideal(R, b))
        assert gen.members == summed.members


def test_validate_right_ideal(z4):
    from ringlab import RightIdealSet
    assert validate_right_ideal(z4, RightIdealSet(z4, (0, 2)))
    assert not validate_right_ideal(z4, RightIdealSet(z4, (0, 1)))
    assert not validate_right_ideal(z4, RightIdealSet(z4, (2,)))


def test_capacity_guard(z4):
    with pytest.raises(CapacityExceeded):
        all_right_ideals(z4, cap=2)


def test_left_ideals_via_opposite_ring(ternions2):
    """Left ideals are right ideals of the opposite ring; checked against a
    raw subset enumeration using left multiplication."""
    from ringlab import opposite_ring
    R = ternions2
    n = R.order
    oracle = []
    for bits in range(1, 1 << n):
        S = {k for k in range(n) if bits >> k & 1}
        if R.zero not in S:
            continue
        if any(R.add(x, y) not in S for x in S for y in S):
            continue
        if any(R.mul(r, x) not in S for x in S for r in range(n)):  # left mult
            continue
        oracle.append(tuple(sorted(S)))
    got = [i.members for i in all_right_ideals(opposite_ring(R))]
    assert got == sorted(oracle, key=lambda m: (len(m), m))
    # noncommutative: the left and right lattices genuinely differ here
    rights = {i.members for i in all_right_ideals(R)}
    assert set(got) != rights
