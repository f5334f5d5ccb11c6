"""Structural property suites swept over the desk catalog.

Each function exhaustively verifies one module's invariant list on a single
ring and returns a Report; run_property_suites sweeps them over the fixed
desk catalog (orders <= 64 exhaustive, seeded samples above where an
invariant says so).
"""

from __future__ import annotations

import numpy as np

from . import core, ideals, orbits, pairs
from .core import FiniteRing
from .reporting import Report

SAMPLE_SEED = 0xB0B
EXACT_CAP = orbits.EXACT_MODE_CAP


def _fail(failures, name, *info):
    failures.append((name, info))


# ----------------------------------------------------------------- ring-core


def check_ring_core_properties(R: FiniteRing) -> Report:
    failures = []
    try:
        core.check_ring_axioms(R.add_table, R.mul_table, R.zero, R.one, R.labels)
    except Exception as e:  # pragma: no cover - build already validated
        _fail(failures, "law_suite", str(e))
    if not core.check_condition_F(R):
        _fail(failures, "condition_F")
    if not core.is_dedekind_finite(R):
        _fail(failures, "dedekind_finite")
    opp = core.opposite_ring(core.opposite_ring(R))
    if not (np.array_equal(opp.mul_table, R.mul_table)
            and np.array_equal(opp.add_table, R.add_table)):
        _fail(failures, "opposite_involution")
    if R.factors is not None:
        got = core.units(R)
        strides = R.meta["strides"]
        expect = set()
        import itertools
        for combo in itertools.product(*(sorted(core.units(F)) for F in R.factors)):
            expect.add(sum(int(u) * s for u, s in zip(combo, strides)))
        if got != expect:
            _fail(failures, "product_units_componentwise")
    return Report(name=f"ring-core properties [{R.origin}]",
                  passed=not failures, failures=failures)


# -------------------------------------------------------------- ideal-lattice


def check_ideal_lattice_properties(R: FiniteRing) -> Report:
    failures = []
    n = R.order

    # generated ideal of {a, b} is the elementwise sum aR + bR; the sum only
    # depends on the principal ideals, so distinct (aR, bR) combos cover all
    pm = pairs.principal_membership(R)
    reps, pc = np.unique(pm, axis=0, return_inverse=True)
    pc = pc.ravel()
    seen = set()
    sample = {}
    for a in range(n):
        for b in range(n):
            key = (min(pc[a], pc[b]), max(pc[a], pc[b]))
            if key not in seen:
                seen.add(key)
                sample[key] = (a, b)
    for (a, b) in sample.values():
        gen = ideals.right_ideal_generated(R, [a, b])
        summed = ideals.ideal_sum(R, ideals.principal_right_ideal(R, a),
                                  ideals.principal_right_ideal(R, b))
        if gen.members != summed.members:
            _fail(failures, "generated_equals_principal_sum", R.labels[a], R.labels[b])

    lattice = ideals.all_right_ideals(R)
    members_set = {i.members for i in lattice}
    if tuple([R.zero]) not in members_set or tuple(range(n)) not in members_set:
        _fail(failures, "lattice_contains_zero_and_ring")
    for ideal in lattice:
        if not ideals.validate_right_ideal(R, ideal):
            _fail(failures, "ideal_closure", ideal.members)
    for i1 in lattice:
        for i2 in lattice:
            if ideals.ideal_sum(R, i1, i2).members not in members_set:
                _fail(failures, "lattice_join_closed", i1.members, i2.members)
                break

    # three-way unimodularity bridge, each side computed independently
    um_scan = pairs.uni_mask(R)                      # direct ax + by = 1 scan
    ids, gen_ideals = pairs.pair_ideal_classes(R)    # via generated ideal
    full_id = next(k for k, i in enumerate(gen_ideals) if i.size == n)
    um_ideal = ids == full_id
    covered = np.zeros((n, n), dtype=bool)           # inside a proper ideal
    for ideal in lattice:
        if ideal.size == n:
            continue
        m = np.array(ideal.members, dtype=np.int64)
        covered[np.ix_(m, m)] = True
    um_cover = ~covered
    if not np.array_equal(um_scan, um_ideal):
        _fail(failures, "bridge_scan_vs_ideal")
    if not np.array_equal(um_scan, um_cover):
        _fail(failures, "bridge_scan_vs_cover")
    return Report(name=f"ideal-lattice properties [{R.origin}]",
                  passed=not failures, failures=failures,
                  info={"right_ideals": len(lattice)})


# --------------------------------------------------------------- pair-classify


def check_pair_properties(R: FiniteRing) -> Report:
    failures = []
    n = R.order
    fm, um, om = pairs.free_mask(R), pairs.uni_mask(R), pairs.outlier_mask(R)
    am = pairs.admissible_mask(R)

    if (am & ~um).any():
        _fail(failures, "admissible_implies_unimodular")
    if (um & ~fm).any():
        _fail(failures, "unimodular_implies_free")
    if (om & um).any():
        _fail(failures, "outlier_implies_non_unimodular")
    if R.order <= EXACT_CAP and not np.array_equal(pairs.admissible_mask(R, False), um):
        _fail(failures, "honest_admissible_vs_unimodular_shortcut")

    # left zero divisor r forces r*(x, y) torsion
    for r in range(n):
        if not core.is_left_zero_divisor(R, r):
            continue
        row = R.mul_table[r]
        if fm[np.ix_(row, row)].any():
            _fail(failures, "left_zero_divisor_image_free", R.labels[r])
            break

    # a free pair lies only in free submodules: torsion images stay torsion
    torsion = np.flatnonzero(~fm.ravel())
    qa, qb = np.divmod(torsion, n)
    ia = R.mul_table[:, qa]
    ib = R.mul_table[:, qb]
    if fm[ia, ib].any():
        _fail(failures, "free_pair_inside_torsion_submodule")

    # non-principal generated ideal (plus non-unimodular) forces outlier
    ids, gen_ideals = pairs.pair_ideal_classes(R)
    principal_flags = np.array([ideals.is_principal(R, i)[0] for i in gen_ideals])
    bad = ~principal_flags[ids] & ~um & ~om
    if bad.any():
        a, b = np.argwhere(bad)[0]
        _fail(failures, "non_principal_sum_but_not_outlier", R.labels[a], R.labels[b])

    # Dedekind-finite rings: a submodule never has both unimodular and
    # non-unimodular free generators
    cano = pairs.cano_gen_flat(R)
    flat_free = np.flatnonzero(fm.ravel())
    if (um.ravel()[flat_free] != um.ravel()[cano[flat_free]]).any():
        _fail(failures, "unimodular_submodule_with_non_unimodular_generator")

    # |R(a, b)| = |R| exactly for free pairs
    sizes = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        flat = R.mul_table[:, a].astype(np.int64)[:, None] * n + R.mul_table
        # column b of flat enumerates r*(a, b); count distinct per column
        srt = np.sort(flat, axis=0)
        sizes[a] = 1 + (np.diff(srt, axis=0) != 0).sum(axis=0)
    if not np.array_equal(sizes == n, fm):
        _fail(failures, "submodule_size_iff_free")

    local, maximal = core.is_local(R)
    if local:
        rep = check_local_line(R)
        if not rep.passed:
            failures.extend(rep.failures)
        if (fm & ~um).any():
            _fail(failures, "local_free_pair_not_unimodular")
    return Report(name=f"pair-classify properties [{R.origin}]",
                  passed=not failures, failures=failures)


def check_local_line(R: FiniteRing) -> Report:
    """Local rings: the projective line is {R(1, x)} plus {R(d, 1), d in the
    maximal ideal}, with |R| + |maximal ideal| points."""
    failures = []
    local, maximal = core.is_local(R)
    if not local:
        return Report(name=f"local line [{R.origin}]", passed=False,
                      failures=[("not_local", ())])
    line = {s.points for s in pairs.projective_line(R)}
    expect = {pairs.cyclic_submodule(R, (R.one, x)).points for x in R.elements()}
    expect |= {pairs.cyclic_submodule(R, (d, R.one)).points for d in maximal.members}
    if line != expect:
        _fail(failures, "line_shape")
    if len(line) != R.order + maximal.size:
        _fail(failures, "line_size", len(line), R.order + maximal.size)
    return Report(name=f"local line [{R.origin}]", passed=not failures,
                  failures=failures,
                  info={"points": len(line), "maximal_ideal": maximal.size})


def check_semisimple_free_admissible(R: FiniteRing) -> Report:
    """Semisimple instances: a cyclic submodule is free iff its generator is
    admissible."""
    fm = pairs.free_mask(R)
    am = pairs.admissible_mask(R)
    mismatches = np.argwhere(fm != am)
    failures = [("free_vs_admissible", (R.labels[a], R.labels[b]))
                for a, b in mismatches[:8]]
    return Report(name=f"semisimple free=admissible [{R.origin}]",
                  passed=not failures, failures=failures,
                  info={"pairs": R.order ** 2})


def check_commutative_finite(R: FiniteRing) -> Report:
    """Commutative finite rings: outliers generate no free submodules, and
    free coincides with unimodular pairwise."""
    failures = []
    if not core.is_commutative(R):
        _fail(failures, "not_commutative")
    fm, um, om = pairs.free_mask(R), pairs.uni_mask(R), pairs.outlier_mask(R)
    if (om & fm).any():
        a, b = np.argwhere(om & fm)[0]
        _fail(failures, "outlier_generates_free", R.labels[a], R.labels[b])
    if not np.array_equal(fm, um):
        a, b = np.argwhere(fm != um)[0]
        _fail(failures, "free_vs_unimodular", R.labels[a], R.labels[b])
    return Report(name=f"commutative outliers [{R.origin}]",
                  passed=not failures, failures=failures,
                  info={"outliers": int(om.sum())})


# ---------------------------------------------------------------- orbit-engine


def check_orbit_properties(R: FiniteRing) -> Report:
    failures = []
    n = R.order
    rng = np.random.default_rng(SAMPLE_SEED)
    fm, um = pairs.free_mask(R), pairs.uni_mask(R)

    if n <= EXACT_CAP:
        mats = orbits.enumerate_gl2(R)
        pick = mats[rng.integers(0, len(mats), size=12)]
        invertibles = [tuple(int(x) for x in m) for m in pick]
    else:
        gens = orbits.gl2_generators(R)
        invertibles = []
        for _ in range(12):
            M = orbits.mat2_identity(R)
            for k in rng.integers(0, len(gens), size=4):
                M = orbits.mat2_mul(R, M, gens[int(k)])
            invertibles.append(M)

    ident = orbits.mat2_identity(R)
    probe_pairs = [tuple(map(int, rng.integers(0, n, size=2))) for _ in range(12)]
    for p in probe_pairs:
        if orbits.mat2_apply(R, p, ident) != p:
            _fail(failures, "identity_action", p)
        for M in invertibles[:4]:
            for N in invertibles[4:8]:
                lhs = orbits.mat2_apply(R, orbits.mat2_apply(R, p, M), N)
                rhs = orbits.mat2_apply(R, p, orbits.mat2_mul(R, M, N))
                if lhs != rhs:
                    _fail(failures, "action_composition", p, M, N)

    # generators permute the free and unimodular masks (exhaustive over the
    # generated subgroup); full GL2 exhaustive below the exact-mode cap
    for M in orbits.gl2_generators(R):
        m11, m12, m21, m22 = M
        ia = R.add_table[R.mul_table[:, m11][:, None], R.mul_table[:, m21][None, :]]
        ib = R.add_table[R.mul_table[:, m12][:, None], R.mul_table[:, m22][None, :]]
        if not np.array_equal(fm[ia, ib], fm):
            _fail(failures, "freeness_not_generator_invariant", M)
            break
        if not np.array_equal(um[ia, ib], um):
            _fail(failures, "unimodularity_not_generator_invariant", M)
            break
    if n <= EXACT_CAP:
        for M in map(tuple, orbits.enumerate_gl2(R)):
            m11, m12, m21, m22 = (int(x) for x in M)
            ia = R.add_table[R.mul_table[:, m11][:, None], R.mul_table[:, m21][None, :]]
            ib = R.add_table[R.mul_table[:, m12][:, None], R.mul_table[:, m22][None, :]]
            if not np.array_equal(fm[ia, ib], fm) or not np.array_equal(um[ia, ib], um):
                _fail(failures, "gl2_invariance", M)
                break

    table = orbits.pair_orbits(R, None, "bfs")
    ids, _ = pairs.pair_ideal_classes(R, restrict=fm)
    flat = np.flatnonzero(fm.ravel())
    per_orbit = {}
    for q in flat:
        per_orbit.setdefault(int(table.labels_flat[q]), set()).add(int(ids.ravel()[q]))
    if any(len(v) != 1 for v in per_orbit.values()):
        _fail(failures, "ideal_invariant_not_constant_on_orbit")

    if n <= EXACT_CAP:
        exact = orbits.pair_orbits(R, None, "exact")
        if not np.array_equal(exact.labels_flat, table.labels_flat):
            _fail(failures, "bfs_vs_exact_orbits")
        one_orbit = exact.labels_flat[R.one * n + R.zero]
        member_flat = np.flatnonzero(exact.labels_flat == one_orbit)
        cano = pairs.cano_gen_flat(R)
        got = {int(cano[q]) for q in member_flat}
        line = {pairs.pair_index(R, s.generator) for s in pairs.projective_line(R)}
        line_cano = {int(cano[q]) for q in line}
        if got != line_cano:
            _fail(failures, "projective_line_vs_orbit_of_one_zero")

    # determinant shortcut agrees with the kernel scan on commutative rings
    if core.is_commutative(R) and n <= 8:
        import itertools
        for M in itertools.product(range(n), repeat=4):
            if orbits.is_invertible_mat2(R, M) != (orbits.kernel_vector(R, M) is None):
                _fail(failures, "det_vs_kernel_scan", M)
                break
    return Report(name=f"orbit-engine properties [{R.origin}]",
                  passed=not failures, failures=failures)


# -------------------------------------------------------------------- sweeps


def run_property_suites(rings=None, max_order: int = 64,
                        sampled_tier: bool = True) -> list[Report]:
    """All four suites over the desk catalog (or a supplied ring list).

    Rings up to max_order get the exhaustive treatment; the sampled tier adds
    two order-81 rings whose triple laws were checked by seeded sampling at
    build, exercising every suite beyond the exhaustive cap.
    """
    from .catalog import catalog_build, desk_rings
    if rings is None:
        rings = desk_rings(max_order)
        if sampled_tier:
            rings = rings + [("example31(3)", catalog_build("example31", 3)),
                             ("char_p2(3)", catalog_build("char_p2", 3))]
    reports = []
    for nick, R in rings:
        reports.append(check_ring_core_properties(R))
        reports.append(check_ideal_lattice_properties(R))
        reports.append(check_pair_properties(R))
        reports.append(check_orbit_properties(R))
    return reports
