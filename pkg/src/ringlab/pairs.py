"""Classification of pairs in R^2: unimodular, admissible, free, torsion,
outlier; cyclic submodules and the projective line; structural cross-checks.

Whole-ring analyses are vectorized masks cached per ring. Single-pair
functions recompute honestly from tables so the two routes stay independent
where that matters (e.g. is_unimodular goes through the generated right
ideal, the mask goes through a direct ax+by scan; tests compare them).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import FiniteRing
from .errors import PreconditionViolated, ZeroPair
from .ideals import RightIdealSet, right_ideal_generated
from .reporting import Report

PRODUCT_SAMPLE_CAP = 1 << 16
PRODUCT_SAMPLE_SEED = 0xC0FFEE
HONEST_ADMISSIBLE_CAP = 16


def pair_index(R: FiniteRing, p) -> int:
    return p[0] * R.order + p[1]


def pair_from_index(R: FiniteRing, i: int) -> tuple[int, int]:
    return divmod(int(i), R.order)


@dataclass(frozen=True, eq=False)
class SubmodulePoints:
    """Point set of a cyclic submodule R(a, b) with its designated generator.

    Equality and hashing use the point set only; the generator is bookkeeping.
    """

    generator: tuple[int, int]
    points: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, SubmodulePoints) and self.points == other.points

    def __hash__(self):
        return hash(self.points)


@dataclass
class PairClassification:
    pair: tuple[int, int]
    unimodular: bool
    admissible: bool
    free: bool
    torsion_witness: int | None
    outlier: bool
    generated_right_ideal: RightIdealSet


# -------------------------------------------------------------- cached masks


def principal_membership(R: FiniteRing) -> np.ndarray:
    """(n, n) bool, row e = member mask of the principal right ideal eR."""
    pm = R._cache.get("principal_membership")
    if pm is None:
        n = R.order
        pm = np.zeros((n, n), dtype=bool)
        pm[np.arange(n)[:, None], R.mul_table] = True
        pm.flags.writeable = False
        R._cache["principal_membership"] = pm
    return pm


def free_mask(R: FiniteRing) -> np.ndarray:
    """(n, n) bool: [a, b] = the left annihilator of (a, b) is trivial."""
    fm = R._cache.get("free_mask")
    if fm is None:
        kills = (R.mul_table == R.zero).astype(np.float32)
        kills[R.zero] = 0.0
        fm = (kills.T @ kills) == 0
        fm.flags.writeable = False
        R._cache["free_mask"] = fm
    return fm


def uni_mask(R: FiniteRing) -> np.ndarray:
    """(n, n) bool: [a, b] = some x, y solve ax + by = 1 (direct scan)."""
    um = R._cache.get("uni_mask")
    if um is None:
        pm = principal_membership(R)
        one_minus = R.add_table[R.one, R.neg_table]      # z -> 1 - z
        reach_one = pm[:, one_minus]                      # [a, z] = 1 - z in aR
        um = (reach_one.astype(np.float32) @ pm.astype(np.float32).T) > 0
        um.flags.writeable = False
        R._cache["uni_mask"] = um
    return um


def outlier_mask(R: FiniteRing) -> np.ndarray:
    """(n, n) bool: pairs lying in no submodule generated by a unimodular pair."""
    om = R._cache.get("outlier_mask")
    if om is None:
        ua, ub = np.nonzero(uni_mask(R))
        hull = _backend.hull_fill(R.mul_table, ua.astype(np.int64), ub.astype(np.int64))
        om = ~hull.reshape(R.order, R.order)
        om.flags.writeable = False
        R._cache["outlier_mask"] = om
    return om


def admissible_mask(R: FiniteRing, finite_shortcut: bool | None = None) -> np.ndarray:
    """(n, n) bool admissibility.

    finite_shortcut=None picks the honest 2x2-completion search for orders up
    to HONEST_ADMISSIBLE_CAP and the unimodularity shortcut above (the two
    agree on finite rings; the property suite witnesses that where both run).
    """
    if finite_shortcut is None:
        finite_shortcut = R.order > HONEST_ADMISSIBLE_CAP
    if finite_shortcut:
        return uni_mask(R)
    am = R._cache.get("admissible_mask_exact")
    if am is None:
        from .orbits import enumerate_gl2
        mats = enumerate_gl2(R)
        am = np.zeros((R.order, R.order), dtype=bool)
        am[mats[:, 0], mats[:, 1]] = True
        am.flags.writeable = False
        R._cache["admissible_mask_exact"] = am
    return am


def cano_gen_flat(R: FiniteRing) -> np.ndarray:
    """(n*n,) canonical generator pair index per free pair, -1 elsewhere.

    Two free pairs generate equal submodules iff their entries coincide.
    """
    cano = R._cache.get("cano_gen_flat")
    if cano is None:
        rank = R.label_rank
        rank_key = (rank[:, None] * R.order + rank[None, :]).ravel()
        cano = _backend.canonical_generators(
            R.mul_table, free_mask(R).ravel(), rank_key)
        cano.flags.writeable = False
        R._cache["cano_gen_flat"] = cano
    return cano


def pair_ideal_classes(R: FiniteRing, restrict: np.ndarray | None = None):
    """Identify the right ideal aR + bR for every (restricted) pair.

    Returns (ids, ideals): ids is (n, n) int32 into ideals, -1 outside the
    restriction; ideals is sorted by (size, members). Work is shared across
    pairs through classes of equal principal ideals.
    """
    if restrict is None and "pair_ideal_classes" in R._cache:
        return R._cache["pair_ideal_classes"]
    n = R.order
    pm = principal_membership(R)
    reps, pc = np.unique(pm, axis=0, return_inverse=True)
    pc = pc.ravel().astype(np.int64)
    lo = np.minimum(pc[:, None], pc[None, :])
    hi = np.maximum(pc[:, None], pc[None, :])
    combo_key = lo * len(reps) + hi
    if restrict is not None:
        keys = np.unique(combo_key[restrict])
    else:
        keys = np.unique(combo_key)
    ca = (keys // len(reps)).astype(np.int64)
    cb = (keys % len(reps)).astype(np.int64)

    counts = reps.sum(axis=1)
    moff = np.zeros(len(reps) + 1, dtype=np.int64)
    moff[1:] = np.cumsum(counts)
    mflat = np.concatenate([np.flatnonzero(reps[c]) for c in range(len(reps))]).astype(np.int64)

    masks = _backend.combo_sumsets(R.add_table, R.neg_table, reps, moff, mflat, ca, cb)
    distinct, inv = np.unique(masks, axis=0, return_inverse=True)
    inv = inv.ravel()
    ideals = [RightIdealSet(R, tuple(int(m) for m in np.flatnonzero(row)))
              for row in distinct]
    order = sorted(range(len(ideals)), key=lambda k: (ideals[k].size, ideals[k].members))
    rank_of = np.empty(len(ideals), dtype=np.int64)
    rank_of[order] = np.arange(len(ideals))
    ideals = [ideals[k] for k in order]

    key_to_id = dict(zip(keys.tolist(), rank_of[inv].tolist()))
    ids = np.full((n, n), -1, dtype=np.int32)
    where = restrict if restrict is not None else np.ones((n, n), dtype=bool)
    flat = combo_key[where]
    ids[where] = np.array([key_to_id[k] for k in flat.tolist()], dtype=np.int32)
    if restrict is None:
        ids.flags.writeable = False
        R._cache["pair_ideal_classes"] = (ids, ideals)
    return ids, ideals


# -------------------------------------------------------- single-pair reads


def cyclic_submodule(R: FiniteRing, p) -> SubmodulePoints:
    """R(a, b) = {(ra, rb) : r in R}, points sorted by pair index."""
    a, b = p
    flat = np.unique(R.mul_table[:, a].astype(np.int64) * R.order + R.mul_table[:, b])
    return SubmodulePoints((int(a), int(b)),
                           tuple(pair_from_index(R, q) for q in flat))


def torsion_witness(R: FiniteRing, p) -> int | None:
    """Smallest (by label order) nonzero r with r*(a, b) = (0, 0)."""
    a, b = p
    ann = (R.mul_table[:, a] == R.zero) & (R.mul_table[:, b] == R.zero)
    ann[R.zero] = False
    hits = np.flatnonzero(ann)
    if hits.size == 0:
        return None
    return int(hits[np.argmin(R.label_rank[hits])])


def is_free(R: FiniteRing, p) -> bool:
    return torsion_witness(R, p) is None


def is_unimodular(R: FiniteRing, p) -> bool:
    """Via the generated right ideal: (a, b) unimodular iff 1 in aR + bR."""
    return R.one in right_ideal_generated(R, [p[0], p[1]])


def unimodular_witness(R: FiniteRing, p):
    """Some (x, y) with ax + by = 1, smallest by label order, else None."""
    a, b = p
    total = R.add_table[R.mul_table[a][:, None], R.mul_table[b][None, :]]
    hits = np.argwhere(total == R.one)
    if hits.size == 0:
        return None
    keys = R.label_rank[hits[:, 0]] * R.order + R.label_rank[hits[:, 1]]
    x, y = hits[np.argmin(keys)]
    return int(x), int(y)


def is_admissible(R: FiniteRing, p, finite_shortcut: bool | None = None) -> bool:
    return bool(admissible_mask(R, finite_shortcut)[p[0], p[1]])


def submodule_contains(R: FiniteRing, host, member) -> int | None:
    """Some r with r*host = member (smallest by label order), else None."""
    hits = np.flatnonzero((R.mul_table[:, host[0]] == member[0])
                          & (R.mul_table[:, host[1]] == member[1]))
    if hits.size == 0:
        return None
    return int(hits[np.argmin(R.label_rank[hits])])


def submodule_equal(R: FiniteRing, p, q) -> bool:
    """R(p) = R(q); mutual generator containment when both are free."""
    if is_free(R, p) and is_free(R, q):
        return submodule_contains(R, p, q) is not None \
            and submodule_contains(R, q, p) is not None
    return cyclic_submodule(R, p).points == cyclic_submodule(R, q).points


def is_outlier(R: FiniteRing, p) -> bool:
    return bool(outlier_mask(R)[p[0], p[1]])


def unimodular_hull(R: FiniteRing) -> set[tuple[int, int]]:
    """Union of R(x, y) over all unimodular (x, y); outliers are the rest."""
    keep = ~outlier_mask(R)
    return {(int(a), int(b)) for a, b in zip(*np.nonzero(keep))}


# ------------------------------------------------------------- whole-ring


def classify_all_pairs(R: FiniteRing, finite_shortcut: bool | None = None):
    """Classify every pair in R^2; returns (rows, summary).

    Rows are in pair-index order. The summary carries the headline counts:
    unimodular / free / outlier totals, how outliers split into free and
    torsion generators, and how many distinct free submodules the
    free-generating outliers produce.
    """
    n = R.order
    um, fm, om = uni_mask(R), free_mask(R), outlier_mask(R)
    am = admissible_mask(R, finite_shortcut)
    ids, ideals = pair_ideal_classes(R)
    cano = cano_gen_flat(R)
    rows = []
    for a in range(n):
        for b in range(n):
            rows.append(PairClassification(
                pair=(a, b),
                unimodular=bool(um[a, b]),
                admissible=bool(am[a, b]),
                free=bool(fm[a, b]),
                torsion_witness=None if fm[a, b] else torsion_witness(R, (a, b)),
                outlier=bool(om[a, b]),
                generated_right_ideal=ideals[ids[a, b]],
            ))
    out_free = om & fm
    cells = {}
    for u in (False, True):
        for f in (False, True):
            for o in (False, True):
                cells[(u, f, o)] = int(((um == u) & (fm == f) & (om == o)).sum())
    summary = {
        "total_pairs": n * n,
        "unimodular": int(um.sum()),
        "admissible": int(am.sum()),
        "free": int(fm.sum()),
        "torsion": int((~fm).sum()),
        "outliers": int(om.sum()),
        "outliers_free": int(out_free.sum()),
        "outliers_torsion": int((om & ~fm).sum()),
        "free_submodules_from_outliers": len(np.unique(cano[out_free.ravel()])),
        "cells": cells,
    }
    return rows, summary


def projective_line(R: FiniteRing, finite_shortcut: bool | None = None) -> list[SubmodulePoints]:
    """Deduplicated submodules generated by admissible pairs, in canonical
    generator order."""
    am = admissible_mask(R, finite_shortcut)
    cano = cano_gen_flat(R)
    keys = np.unique(cano[am.ravel()])
    return [cyclic_submodule(R, pair_from_index(R, k)) for k in keys]


# ------------------------------------------------------------ theorem checks


def check_factor_proposition(R: FiniteRing, x: int, y: int) -> Report:
    """For every r and (a, b) = r(x, y): r right invertible iff (a, b)
    unimodular, and r left invertible iff R(x, y) = R(a, b)."""
    if not is_unimodular(R, (x, y)):
        raise PreconditionViolated(f"({R.labels[x]}, {R.labels[y]}) is not unimodular")
    n = R.order
    um = uni_mask(R)
    right_inv = (R.mul_table == R.one).any(axis=1)
    left_inv = (R.mul_table == R.one).any(axis=0)
    base_size = cyclic_submodule(R, (x, y)).size
    failures = []
    for r in range(n):
        a, b = int(R.mul_table[r, x]), int(R.mul_table[r, y])
        if bool(right_inv[r]) != bool(um[a, b]):
            failures.append(("right_invertible_vs_unimodular", R.labels[r]))
        same = cyclic_submodule(R, (a, b)).size == base_size  # R(a,b) <= R(x,y) always
        if bool(left_inv[r]) != same:
            failures.append(("left_invertible_vs_equal_submodule", R.labels[r]))
    return Report(name=f"factor proposition on ({R.labels[x]}, {R.labels[y]})",
                  passed=not failures, failures=failures,
                  info={"ring": R.origin, "scanned": n})


def check_theorem_idg(R: FiniteRing) -> Report:
    """Two consequences of every-element-unit-or-zero-divisor: pairs inside a
    proper principal ideal are torsion, and non-unimodular free pairs are
    outliers. Exhaustive over R^2."""
    from .core import check_condition_F
    if not check_condition_F(R):
        raise PreconditionViolated("ring does not satisfy the unit-or-zero-divisor condition")
    fm, um, om = free_mask(R), uni_mask(R), outlier_mask(R)
    pm = principal_membership(R)
    failures = []
    reps, _ = np.unique(pm, axis=0, return_inverse=True)
    for row in reps:
        members = np.flatnonzero(row)
        if members.size == R.order:
            continue
        bad = np.argwhere(fm[np.ix_(members, members)])
        for i, j in bad:
            failures.append(("principal_proper_but_free",
                             (R.labels[members[i]], R.labels[members[j]])))
    bad = np.argwhere(~um & fm & ~om)
    for a, b in bad:
        failures.append(("non_unimodular_free_but_not_outlier", (R.labels[a], R.labels[b])))
    return Report(name="torsion/outlier consequences", passed=not failures,
                  failures=failures, info={"ring": R.origin})


def check_product_theorem(P: FiniteRing, sample_cap: int = PRODUCT_SAMPLE_CAP,
                          seed: int = PRODUCT_SAMPLE_SEED) -> Report:
    """Componentwise laws on a direct product: unimodular, admissible and
    free hold iff they hold in every component; outlier iff in some
    component. Exhaustive up to sample_cap pairs, seeded sample above."""
    from .core import product_digits
    if P.factors is None:
        raise PreconditionViolated("ring was not built as a direct product")
    n = P.order
    total = n * n
    if total <= sample_cap:
        flat = np.arange(total)
        mode = "exhaustive"
    else:
        rng = np.random.default_rng(seed)
        flat = rng.integers(0, total, size=sample_cap)
        mode = "sampled"
    a, b = np.divmod(flat, n)
    da = product_digits(P, a)
    db = product_digits(P, b)

    got = {
        "unimodular": uni_mask(P)[a, b],
        "admissible": admissible_mask(P)[a, b],
        "free": free_mask(P)[a, b],
        "outlier": outlier_mask(P)[a, b],
    }
    want = {}
    um_parts = [uni_mask(F) for F in P.factors]
    fm_parts = [free_mask(F) for F in P.factors]
    om_parts = [outlier_mask(F) for F in P.factors]
    am_parts = [admissible_mask(F) for F in P.factors]
    want["unimodular"] = np.logical_and.reduce([m[x, y] for m, x, y in zip(um_parts, da, db)])
    want["free"] = np.logical_and.reduce([m[x, y] for m, x, y in zip(fm_parts, da, db)])
    want["admissible"] = np.logical_and.reduce([m[x, y] for m, x, y in zip(am_parts, da, db)])
    want["outlier"] = np.logical_or.reduce([m[x, y] for m, x, y in zip(om_parts, da, db)])

    failures = []
    for law in ("unimodular", "admissible", "free", "outlier"):
        bad = np.flatnonzero(got[law] != want[law])
        for k in bad[:8]:
            failures.append((law, (P.labels[a[k]], P.labels[b[k]])))
        if bad.size > 8:
            failures.append((law, f"... {bad.size} mismatches total"))
    return Report(name="direct product componentwise laws", passed=not failures,
                  failures=failures,
                  info={"ring": P.origin, "mode": mode, "pairs_checked": len(flat)})


def pid_decompose(a: int, b: int) -> tuple[int, int, int]:
    """Write (a, b) = d*(r1, r2) with d = gcd(a, b) > 0 and gcd(r1, r2) = 1,
    exhibiting the integer pair inside the submodule of a unimodular pair."""
    if a == 0 and b == 0:
        raise ZeroPair("(0, 0) has no gcd decomposition")
    d = math.gcd(a, b)
    return d, a // d, b // d
