import numpy as np
import pytest

from ringlab import (
    RingSpec,
    build_ring,
    catalog_build,
    check_condition_F,
    direct_product,
    is_commutative,
    is_dedekind_finite,
    is_left_zero_divisor,
    is_local,
    is_right_zero_divisor,
    opposite_ring,
    units,
)
from ringlab.errors import AxiomViolation, SpecError


def test_modint_arithmetic(z4):
    assert z4.order == 4
    assert z4.labels == ("0", "1", "2", "3")
    assert z4.add(2, 3) == 1
    assert z4.mul(2, 2) == 0
    assert z4.neg(1) == 3


def test_modint_rejects_trivial():
    with pytest.raises(SpecError):
        build_ring(RingSpec("modint", {"n": 1}))


def test_units_z4(z4):
    assert units(z4) == {1, 3}


def test_units_gf3(gf3):
    assert units(gf3) == {1, 2}


def test_inverse_of(z4):
    from ringlab.core import inverse_of
    assert inverse_of(z4, 3) == 3
    with pytest.raises(SpecError):
        inverse_of(z4, 2)


# Oracle: brute-force two-sided inverses with raw 3x3 matrix arithmetic over
# GF(2), independent of the table machinery.
def _mul3(X, Y, p=2):
    return tuple(tuple(sum(X[i][k] * Y[k][j] for k in range(3)) % p
                       for j in range(3)) for i in range(3))


def _shape_matrices():
    return [((a, 0, 0), (b, a, 0), (c, 0, d))
            for a in range(2) for b in range(2) for c in range(2) for d in range(2)]


def test_units_example31_match_matrix_oracle(ex31):
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    mats = _shape_matrices()
    oracle = {X for X in mats
              if any(_mul3(X, Y) == ident and _mul3(Y, X) == ident for Y in mats)}
    assert len(oracle) == 4
    assert all(X[0][0] == 1 and X[2][2] == 1 for X in oracle)
    got = {tuple(tuple(row) for row in ex31.meta["matrices"][u]) for u in units(ex31)}
    assert got == oracle


def test_zero_divisors_z4(z4):
    assert is_left_zero_divisor(z4, 2)
    assert not is_left_zero_divisor(z4, 3)
    assert is_left_zero_divisor(z4, 0)


def test_zero_divisor_example31_I(ex31):
    from ringlab import named_elements_example31
    named = named_elements_example31(ex31)
    assert is_left_zero_divisor(ex31, named["I"])
    assert is_right_zero_divisor(ex31, named["I"])


def test_condition_f(z4, ternions2, gf3):
    t3_gf3 = catalog_build("t3", 3)
    for R in (z4, ternions2, gf3, t3_gf3):
        assert check_condition_F(R)


def test_dedekind_finite(z4, mat2_2, ex31):
    for R in (z4, mat2_2, ex31):
        assert is_dedekind_finite(R)


def test_commutative(z6, ternions2, t3_2):
    assert is_commutative(z6)
    assert not is_commutative(ternions2)
    assert not is_commutative(t3_2)


def test_is_local(z4, z6, gf3):
    ok, maximal = is_local(z4)
    assert ok and maximal.members == (0, 2)
    assert is_local(z6) == (False, None)
    ok, maximal = is_local(gf3)
    assert ok and maximal.members == (0,)


def test_direct_product_z2_z3(z2xz3, z6):
    assert z2xz3.order == 6
    assert is_commutative(z2xz3)
    # isomorphic to modint(6): same invariants
    assert len(units(z2xz3)) == len(units(z6)) == 2


def test_direct_product_singleton(z4):
    assert direct_product([z4]) is z4


def test_direct_product_units_componentwise():
    z2 = catalog_build("modint", 2)
    P = direct_product([z2, z2])
    assert units(P) == {P.index_of_coords((1, 1))}


def test_opposite_is_involution(ex31, ternions2):
    for R in (ex31, ternions2):
        opp = opposite_ring(opposite_ring(R))
        assert np.array_equal(opp.mul_table, R.mul_table)
        assert np.array_equal(opp.add_table, R.add_table)
    O = opposite_ring(ternions2)
    assert np.array_equal(O.mul_table, ternions2.mul_table.T)


def test_opposite_of_commutative_is_identity(z6):
    assert np.array_equal(opposite_ring(z6).mul_table, z6.mul_table)


def test_structure_constants_non_associative_rejected():
    # x*x = y, y*y = x, x*y = y*x = 0 over (Z2)^3 with identity adjoint fails
    spec = RingSpec("structure_constants", {
        "char_orders": [2, 2, 2],
        "basis": ["1", "x", "y"],
        "mul": {"1*1": "1", "1*x": "x", "1*y": "y", "x*1": "x", "y*1": "y",
                "x*x": "y", "y*y": "x", "x*y": "0", "y*x": "0"}})
    with pytest.raises(AxiomViolation):
        build_ring(spec)


def test_structure_constants_missing_product_rejected():
    spec = RingSpec("structure_constants", {
        "char_orders": [2, 2],
        "basis": ["1", "t"],
        "mul": {"1*1": "1", "1*t": "t", "t*1": "t"}})  # t*t absent
    with pytest.raises(SpecError):
        build_ring(spec)


def test_structure_constants_bad_bilinearity_rejected():
    # t has additive order 2 but t*t = 1 lives in a Z4 coordinate
    spec = RingSpec("structure_constants", {
        "char_orders": [4, 2],
        "basis": ["1", "t"],
        "mul": {"1*1": "1", "1*t": "t", "t*1": "t", "t*t": "1"}})
    with pytest.raises(SpecError):
        build_ring(spec)


def test_matrix_shape_closure_violation():
    # [[a,b],[b,0]] over GF(2): the product of two b=1 matrices puts a 1 in
    # the forced-zero corner, so the shape is not multiplicatively closed
    spec = RingSpec("matrix_shape", {
        "p": 2, "size": 2, "pattern": [["a", "b"], ["b", 0]]})
    with pytest.raises(AxiomViolation):
        build_ring(spec)


def test_matrix_shape_labels_deterministic(ex31):
    rebuilt = catalog_build("example31", 2)
    assert rebuilt.labels == ex31.labels
    assert np.array_equal(rebuilt.mul_table, ex31.mul_table)


def test_law_witness_reported():
    bad_mul = np.zeros((3, 3), dtype=int)
    i = np.arange(3)
    add = (i[:, None] + i[None, :]) % 3
    bad_mul[1] = i  # 1 is a left identity only; 2*x stays 0
    with pytest.raises(AxiomViolation) as exc:
        from ringlab.core import check_ring_axioms
        check_ring_axioms(add, bad_mul, 0, 1, ("0", "1", "2"))
    assert exc.value.law == "multiplicative_identity"


def test_characteristic(charp2_2, gf3):
    assert charp2_2.characteristic() == 4
    assert gf3.characteristic() == 3


def test_coords_roundtrip(ex31):
    for a in ex31.elements():
        assert ex31.index_of_coords(ex31.coords_of(a)) == a
