import numpy as np
import pytest

from ringlab import (
    gl2_generators,
    is_invertible_mat2,
    mat2_apply,
    orbit_ideal_invariant,
    pair_orbits,
    projective_line,
    submodule_orbits,
    verify_t3,
    verify_ternions,
)
from ringlab.errors import CapacityExceeded, PreconditionViolated
from ringlab.orbits import enumerate_gl2, kernel_vector, mat2_identity, mat2_mul


def test_mat2_apply(z4):
    ident = mat2_identity(z4)
    assert mat2_apply(z4, (1, 2), ident) == (1, 2)
    swap = (0, 1, 1, 0)
    assert mat2_apply(z4, (1, 2), swap) == (2, 1)
    assert mat2_apply(z4, (1, 2), (1, 0, 1, 1)) == (3, 2)


def test_invertibility(z4):
    assert is_invertible_mat2(z4, mat2_identity(z4))
    assert not is_invertible_mat2(z4, (0, 0, 0, 0))
    assert not is_invertible_mat2(z4, (1, 0, 0, 2))
    assert kernel_vector(z4, (1, 0, 0, 2)) == (0, 2)


def test_det_shortcut_matches_kernel_scan(z6):
    import itertools
    for M in itertools.product(range(6), repeat=4):
        assert is_invertible_mat2(z6, M) == (kernel_vector(z6, M) is None)


def test_gl2_generators_gf2(gf2):
    gens = gl2_generators(gf2)
    assert len(gens) == 7
    assert all(kernel_vector(gf2, M) is None for M in gens)


def test_gl2_generators_include_unit_diagonal(z4):
    assert (3, 0, 0, 1) in gl2_generators(z4)


def test_gl2_generator_group_closure_sample(ternions2):
    gens = gl2_generators(ternions2)
    ident = mat2_identity(ternions2)
    for M in gens[:10]:
        assert is_invertible_mat2(ternions2, M)
        prod = mat2_mul(ternions2, M, M)
        assert is_invertible_mat2(ternions2, prod)
    assert ident in gens


def test_gf2_free_pairs_single_orbit(gf2):
    table = pair_orbits(gf2, None, "exact")
    assert len(table.orbits) == 1
    assert table.orbits[0].size == 3


def test_exact_matches_bfs_small(ex31, ternions2, mat2_2):
    for R in (ex31, ternions2, mat2_2):
        bfs = pair_orbits(R, None, "bfs")
        exact = pair_orbits(R, None, "exact")
        assert np.array_equal(bfs.labels_flat, exact.labels_flat)


def test_exact_mode_guard(ternions3):
    with pytest.raises(CapacityExceeded):
        pair_orbits(ternions3, None, "exact")


def test_unimodular_orbit_contains_one_zero(ex31):
    table = pair_orbits(ex31, None, "bfs")
    k = table.orbit_of((ex31.one, ex31.zero))
    assert k >= 0
    orbit = table.orbits[k]
    assert orbit.ideal.size == ex31.order


def test_non_closed_input_rejected(gf2):
    with pytest.raises(PreconditionViolated):
        pair_orbits(gf2, [(gf2.one, gf2.zero)], "bfs")


def test_orbit_ideal_invariant_constant(ternions2):
    table = pair_orbits(ternions2, None, "bfs")
    for orbit in table.orbits:
        for member in orbit.members:
            assert orbit_ideal_invariant(ternions2, member).members == orbit.ideal.members


def test_orbit_ideal_invariant_unimodular(z4):
    assert orbit_ideal_invariant(z4, (1, 2)).size == 4


def test_ternion_submodule_orbits(ternions2, ternions3):
    for R, q in ((ternions2, 2), (ternions3, 3)):
        table = submodule_orbits(R, mode="bfs")
        assert len(table.orbits) == 2
        line = {s.points for s in projective_line(R)}
        sizes = sorted(o.size for o in table.orbits)
        assert max(sizes) == len(line)


def test_submodule_orbits_restricted(ternions2):
    from ringlab import cyclic_submodule
    sub = cyclic_submodule(ternions2, (ternions2.one, ternions2.zero))
    table = submodule_orbits(ternions2, submodules=[sub])
    assert len(table.orbits) == 1
    assert table.orbits[0].ideal.size == ternions2.order


def test_submodule_orbits_reject_torsion_generator(z4):
    from ringlab import cyclic_submodule
    sub = cyclic_submodule(z4, (2, 2))
    with pytest.raises(PreconditionViolated):
        submodule_orbits(z4, submodules=[sub])


def test_verify_ternions():
    for q in (2, 3):
        rep = verify_ternions(q)
        assert rep.passed, rep.failures
        assert rep.info["submodule_orbits"] == 2


def test_verify_t3_gf2():
    rep = verify_t3(2)
    assert rep.passed, rep.failures
    assert rep.info["pair_orbits"] == 6
    assert rep.info["submodule_orbits"] == 5
    assert rep.info["certified"]


def test_t3_listed_ideal_shapes(t3_2):
    # representatives 1 and 4: whole ring, and the shape with the middle
    # column and bottom-right corner forced to zero
    R = t3_2
    rep1 = (R.index_of_coords((1, 0, 1, 0, 0, 1)), R.zero)
    assert orbit_ideal_invariant(R, rep1).size == 64
    rep4 = (R.index_of_coords((1, 0, 0, 0, 1, 0)), R.index_of_coords((0, 1, 0, 0, 0, 0)))
    ideal4 = orbit_ideal_invariant(R, rep4)
    expect = {R.index_of_coords((a, b, 0, d, e, 0))
              for a in range(2) for b in range(2) for d in range(2) for e in range(2)}
    assert set(ideal4.members) == expect


def test_verify_t3_budget_guard():
    from ringlab.errors import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        verify_t3(3, budget_seconds=0.001)


def test_enumerate_gl2_top_rows_are_admissible(ex31):
    from ringlab.pairs import admissible_mask
    mats = enumerate_gl2(ex31)
    top = {(int(a), int(b)) for a, b in mats[:, :2]}
    honest = {(int(a), int(b)) for a, b in np.argwhere(admissible_mask(ex31, False))}
    assert top == honest
