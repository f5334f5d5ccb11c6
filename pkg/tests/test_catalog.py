import json

import numpy as np
import pytest

from ringlab import (
    build_ring,
    catalog_build,
    desk_rings,
    four_rings_report,
    is_commutative,
    named_elements_example31,
    parse_ring_spec,
)
from ringlab.catalog import emit_structure_spec
from ringlab.errors import NonPrime, ParseError, UnknownName, WrongRing


@pytest.mark.parametrize("name,p,order", [
    ("example31", 2, 16), ("example31", 3, 81),
    ("ternions", 2, 8), ("ternions", 3, 27),
    ("t3", 2, 64),
    ("char_p2", 2, 16), ("char_p2", 3, 81),
    ("p4_second", 2, 16), ("p4_second", 3, 81),
    ("gf", 5, 5),
    ("modint", 12, 12),
])
def test_catalog_orders(name, p, order):
    assert catalog_build(name, p).order == order


def test_matn_orders():
    assert catalog_build("matn", 2, k=2).order == 16
    assert catalog_build("matn", 3, k=2).order == 81


def test_catalog_errors():
    with pytest.raises(UnknownName):
        catalog_build("nope", 2)
    with pytest.raises(NonPrime):
        catalog_build("ternions", 4)


def test_char_p2_relations():
    for p in (2, 3):
        R = catalog_build("char_p2", p, law_check_cap=p ** 4)
        one = R.one
        t = R.index_of_coords((0, 1, 0))
        y = R.index_of_coords((0, 0, 1))
        zero = R.zero
        assert R.mul(t, t) == zero
        assert R.mul(y, y) == y
        assert R.mul(t, y) == zero
        assert R.mul(y, t) == t
        assert R.characteristic() == p * p
        assert not is_commutative(R)


def test_named_elements(ex31):
    named = named_elements_example31(ex31)
    mats = ex31.meta["matrices"]
    assert tuple(map(tuple, mats[named["I"]])) == ((0, 0, 0), (1, 0, 0), (1, 0, 0))
    assert tuple(map(tuple, mats[named["A"]])) == ((1, 0, 0), (1, 1, 0), (1, 0, 0))
    assert named["0"] == ex31.zero


def test_named_elements_wrong_ring(z4):
    with pytest.raises(WrongRing):
        named_elements_example31(z4)
    with pytest.raises(WrongRing):
        named_elements_example31(catalog_build("example31", 3))


def test_example31_product_replay(ex31):
    """Replay the defining product identity: for r with entries (a, b, c, d),
    r*I = [[0,0,0],[a,0,0],[d,0,0]] and r*A = [[a,0,0],[a+b,a,0],[c+d,0,0]];
    in particular (r*I, r*A) vanishes only at r = 0."""
    named = named_elements_example31(ex31)
    I, A = named["I"], named["A"]
    mats = ex31.meta["matrices"]
    for r in ex31.elements():
        a, b, c, d = ex31.coords_of(r)
        ri = mats[ex31.mul(r, I)]
        ra = mats[ex31.mul(r, A)]
        assert tuple(map(tuple, ri)) == ((0, 0, 0), (a, 0, 0), (d, 0, 0))
        assert tuple(map(tuple, ra)) == ((a, 0, 0), ((a + b) % 2, a, 0), ((c + d) % 2, 0, 0))
        if ex31.mul(r, I) == ex31.zero and ex31.mul(r, A) == ex31.zero:
            assert r == ex31.zero


def test_parse_modint():
    spec = parse_ring_spec('{"kind": "modint", "n": 4}')
    assert spec.kind == "modint" and spec.params == {"n": 4}
    assert build_ring(spec).order == 4


def test_parse_matrix_shape_tied_letters():
    text = json.dumps({"kind": "matrix_shape", "p": 2, "size": 3,
                       "pattern": [["a", 0, 0], ["b", "a", 0], ["c", 0, "d"]]})
    ring = build_ring(parse_ring_spec(text))
    assert ring.order == 16


def test_parse_unknown_kind():
    with pytest.raises(ParseError) as exc:
        parse_ring_spec('{"kind": "frobnicate"}')
    assert "kind" in str(exc.value)


def test_parse_syntax_error_has_position():
    with pytest.raises(ParseError) as exc:
        parse_ring_spec('{"kind": "modint", }')
    assert isinstance(exc.value.position, int)


def test_parse_missing_field_path():
    with pytest.raises(ParseError) as exc:
        parse_ring_spec('{"kind": "matrix_shape", "p": 2, "size": 2}')
    assert "pattern" in str(exc.value)


def test_parse_nested_product():
    text = json.dumps({"kind": "product", "factors": [
        {"kind": "modint", "n": 2}, {"kind": "catalog", "name": "gf", "p": 3}]})
    ring = build_ring(parse_ring_spec(text))
    assert ring.order == 6


@pytest.mark.parametrize("make", [
    lambda: catalog_build("modint", 6),
    lambda: catalog_build("example31", 2),
    lambda: catalog_build("ternions", 3),
    lambda: catalog_build("char_p2", 2, law_check_cap=16),
    lambda: catalog_build("p4_second", 2),
])
def test_structure_spec_roundtrip(make):
    R = make()
    doc = emit_structure_spec(R)
    rebuilt = build_ring(parse_ring_spec(json.dumps(doc)),
                         law_check_cap=min(R.order, 81))
    assert rebuilt.order == R.order
    assert np.array_equal(rebuilt.add_table, R.add_table)
    assert np.array_equal(rebuilt.mul_table, R.mul_table)
    assert rebuilt.zero == R.zero and rebuilt.one == R.one


def test_four_rings_report():
    rep = four_rings_report(2)
    assert rep.passed, rep.failures
    assert rep.info["example31"]["free_outlier_submodules"] == 6
    for name in ("ternions", "example31", "p4_second", "char_p2"):
        assert rep.info[name]["free_outlier_pairs"] > 0


def test_desk_rings_capped():
    rings = desk_rings(64)
    assert all(R.order <= 64 for _, R in rings)
    assert len(rings) >= 15
