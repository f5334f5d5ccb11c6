import math

from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import catalog_build, is_free, is_unimodular, pid_decompose
from ringlab.checks import (
    check_commutative_finite,
    check_ideal_lattice_properties,
    check_local_line,
    check_orbit_properties,
    check_pair_properties,
    check_ring_core_properties,
    check_semisimple_free_admissible,
    run_property_suites,
)


def test_property_suites_all_pass():
    reports = run_property_suites()
    failed = [(r.name, r.failures[:3]) for r in reports if not r.passed]
    assert not failed, failed


def test_local_line_modint9():
    rep = check_local_line(catalog_build("modint", 9))
    assert rep.passed
    assert rep.info["points"] == 12


def test_commutative_check_flags_noncommutative():
    rep = check_commutative_finite(catalog_build("ternions", 2))
    assert not rep.passed


def test_semisimple_instances():
    assert check_semisimple_free_admissible(catalog_build("matn", 2, k=2)).passed


@given(a=st.integers(-10**9, 10**9), b=st.integers(-10**9, 10**9))
def test_pid_decompose_properties(a, b):
    if a == 0 and b == 0:
        return
    d, r1, r2 = pid_decompose(a, b)
    assert d > 0
    assert a == d * r1 and b == d * r2
    assert math.gcd(r1, r2) == 1


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 24), a=st.integers(0, 23), b=st.integers(0, 23))
def test_modint_pairs_match_gcd_oracle(n, a, b):
    """Number-theoretic oracle for Z_n: (a, b) is free iff unimodular iff
    gcd(a, b, n) = 1."""
    R = catalog_build("modint", n)
    a, b = a % n, b % n
    expect = math.gcd(math.gcd(a, b), n) == 1
    assert is_unimodular(R, (a, b)) == expect
    assert is_free(R, (a, b)) == expect


@settings(max_examples=10, deadline=None)
@given(n=st.integers(2, 12))
def test_modint_suites(n):
    R = catalog_build("modint", n)
    assert check_ring_core_properties(R).passed
    assert check_ideal_lattice_properties(R).passed
    assert check_pair_properties(R).passed
    assert check_orbit_properties(R).passed
