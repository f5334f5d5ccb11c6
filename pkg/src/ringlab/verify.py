"""The claim suite: every headline quantitative statement the package is
built to reproduce, replayed end to end with exact expected values.

Claims are independent, deterministic, and budget-aware: each carries a
static per-backend cost estimate, and a claim only runs while the sum of
estimates of already-executed claims stays within the budget. Skips are
therefore reproducible for a given backend and budget, never timing noise.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

import numpy as np

from . import _backend, checks, ideals, orbits, pairs
from .catalog import catalog_build, four_rings_report, named_elements_example31
from .core import direct_product, opposite_ring
from .errors import BudgetExceeded, UnknownName
from .reporting import VerifyResult

DEFAULT_BUDGET_SECONDS = 120.0
BUDGET_ENV = "RINGLAB_BUDGET_SECONDS"


@dataclass
class Claim:
    id: str
    description: str
    expected: str
    estimate: dict          # backend name -> seconds, static
    run: callable           # () -> (ok: bool, computed: str)


def _fmt_failures(report) -> str:
    head = "; ".join(str(f) for f in report.failures[:3])
    more = f" (+{len(report.failures) - 3} more)" if len(report.failures) > 3 else ""
    return head + more


# ------------------------------------------------------------ claim functions


def _claim_ex31_ideals():
    R = catalog_build("example31", 2)
    nps = ideals.non_principal_right_ideals(R)
    sizes = sorted(i.size for i in nps)
    ok = len(nps) == 2 and sizes == [4, 8]
    return ok, f"{len(nps)} non-principal right ideals, sizes {sizes}"


def _claim_ex31_outliers():
    R = catalog_build("example31", 2)
    om, fm = pairs.outlier_mask(R), pairs.free_mask(R)
    outliers = int(om.sum())
    free_out = int((om & fm).sum())
    torsion_out = int((om & ~fm).sum())
    submods = len(np.unique(pairs.cano_gen_flat(R)[(om & fm).ravel()]))
    ok = (outliers, free_out, submods, torsion_out) == (30, 24, 6, 6)
    return ok, (f"outliers={outliers}, generating free submodules={free_out}, "
                f"distinct free submodules={submods}, torsion outliers={torsion_out}")


def _claim_ex31_named():
    R = catalog_build("example31", 2)
    named = named_elements_example31(R)
    I, J, K, A, B, D = (named[x] for x in "IJKABD")
    i2 = next(i for i in ideals.non_principal_right_ideals(R) if i.size == 8)
    gen_ok = all(ideals.right_ideal_generated(R, g).members == i2.members
                 for g in ((I, A), (K, A), (A, D), (A, B)))
    i1 = ideals.right_ideal_generated(R, [I, J])
    i1_ok = set(i1.members) == {named["0"], I, J, K}
    principal_8 = [i for i in ideals.all_right_ideals(R)
                   if i.size == 8 and all(x in i for x in (I, J, K))
                   and ideals.is_principal(R, i)[0]]
    i3_ok = len(principal_8) == 1 and set(i1.members) < set(principal_8[0].members)
    six = [(I, J), (J, I), (I, K), (K, I), (K, J), (J, K)]
    six_ok = all(pairs.is_outlier(R, p) and not pairs.is_free(R, p) for p in six)
    ok = gen_ok and i1_ok and i3_ok and six_ok
    return ok, (f"gen equalities={gen_ok}, IR+JR={{0,I,J,K}}={i1_ok}, "
                f"unique principal 8-element ideal over it={i3_ok}, "
                f"six torsion outlier pairs={six_ok}")


def _claim_ternion_orbits():
    parts = []
    ok = True
    for q in (2, 3):
        rep = orbits.verify_ternions(q)
        ok &= rep.passed
        parts.append(f"GF({q}): {rep.info['submodule_orbits']} orbits"
                     + ("" if rep.passed else f" FAIL {_fmt_failures(rep)}"))
    return ok, "; ".join(parts)


def _claim_t3_orbits():
    rep = orbits.verify_t3(2)
    computed = (f"pair orbits={rep.info['pair_orbits']}, "
                f"submodule orbits={rep.info['submodule_orbits']}, "
                f"certified={rep.info['certified']}")
    if not rep.passed:
        computed += f"; {_fmt_failures(rep)}"
    return rep.passed, computed


def _claim_t3_invariant():
    R = catalog_build("t3", 2)
    fm = pairs.free_mask(R)
    table = orbits.pair_orbits(R, None, "bfs")
    ids, _ = pairs.pair_ideal_classes(R, restrict=fm)
    flat = np.flatnonzero(fm.ravel())
    orbit_ids = table.labels_flat[flat]
    ideal_ids = ids.ravel()[flat]
    combos = set(zip(orbit_ids.tolist(), ideal_ids.tolist()))
    n_orbits = len(set(orbit_ids.tolist()))
    n_ideals = len(set(ideal_ids.tolist()))
    ok = len(combos) == n_orbits == n_ideals
    return ok, (f"free pairs={len(flat)}, orbits={n_orbits}, ideal values={n_ideals}, "
                f"orbit/ideal combinations={len(combos)}")


def _claim_t3_gf3():
    budget = _current_budget()
    rep = orbits.verify_t3(3, budget_seconds=budget)
    computed = (f"pair orbits={rep.info['pair_orbits']}, "
                f"submodule orbits={rep.info['submodule_orbits']}, "
                f"certified={rep.info['certified']}")
    if not rep.passed:
        computed += f"; {_fmt_failures(rep)}"
    return rep.passed, computed


def _comm_finite_family():
    family = [(f"modint({n})", catalog_build("modint", n)) for n in range(2, 17)]
    multisets = []

    def grow(start, prod, acc):
        for k in range(start, 9):
            if prod * k > 16:
                break
            multisets.append(acc + [k])
            grow(k, prod * k, acc + [k])

    grow(2, 1, [])
    for ms in multisets:
        if len(ms) < 2:
            continue
        ring = direct_product([catalog_build("modint", k) for k in ms])
        family.append(("x".join(f"modint({k})" for k in ms), ring))
    return family


def _claim_comm_finite():
    bad = []
    count = 0
    for nick, R in _comm_finite_family():
        count += 1
        rep = checks.check_commutative_finite(R)
        if not rep.passed:
            bad.append(f"{nick}: {_fmt_failures(rep)}")
    return not bad, f"{count} commutative rings swept" + (f"; FAIL {bad}" if bad else "")


def _claim_charp2():
    parts = []
    ok = True
    for p in (2, 3):
        # worth the exhaustive law check even at order 81: it doubles as the
        # structure-constants validation for the only non-matrix catalog ring
        R = catalog_build("char_p2", p, law_check_cap=p ** 4)
        v = (R.index_of_coords((1, p - 1, p - 1)), R.index_of_coords((0, 1, 0)))
        uni = pairs.is_unimodular(R, v)
        free = pairs.is_free(R, v)
        out = pairs.is_outlier(R, v)
        ok &= (not uni) and free and out
        parts.append(f"p={p}: unimodular={uni}, free={free}, outlier={out}")
    return ok, "; ".join(parts)


def _claim_asymmetry():
    parts = []
    ok = True
    for p in (2, 3):
        R = catalog_build("example31", p)
        v = (R.index_of_coords((0, 1, 1, 0)), R.index_of_coords((1, 1, 1, 0)))
        left_free = pairs.is_free(R, v)
        left_out = pairs.is_outlier(R, v)
        O = opposite_ring(R)
        right_free = pairs.is_free(O, v)
        right_out = pairs.is_outlier(O, v)
        ok &= left_free and left_out and (not right_free) and (not right_out)
        parts.append(f"p={p}: left free={left_free} outlier={left_out}, "
                     f"right torsion={not right_free} non-outlier={not right_out}")
    return ok, "; ".join(parts)


def _semisimple_instances():
    return [
        ("gf(2)xgf(3)", direct_product([catalog_build("gf", 2), catalog_build("gf", 3)])),
        ("gf(2)xgf(2)", direct_product([catalog_build("gf", 2), catalog_build("gf", 2)])),
        ("mat2(2)", catalog_build("matn", 2, k=2)),
    ]


def _claim_semisimple():
    bad = []
    for nick, R in _semisimple_instances():
        rep = checks.check_semisimple_free_admissible(R)
        if not rep.passed:
            bad.append(f"{nick}: {_fmt_failures(rep)}")
    return not bad, "free=admissible on 3 semisimple instances" + (f"; FAIL {bad}" if bad else "")


def _claim_product_laws():
    products = [
        direct_product([catalog_build("ternions", 2), catalog_build("gf", 2)]),
        direct_product([catalog_build("modint", 4), catalog_build("gf", 3)]),
    ]
    bad = []
    checked = 0
    for P in products:
        rep = pairs.check_product_theorem(P)
        checked += rep.info["pairs_checked"]
        if not rep.passed:
            bad.append(f"{P.origin}: {_fmt_failures(rep)}")
    return not bad, f"{checked} pairs checked componentwise" + (f"; FAIL {bad}" if bad else "")


def _claim_local_line():
    instances = [catalog_build("modint", 4), catalog_build("modint", 8),
                 catalog_build("modint", 9)] + [catalog_build("gf", p)
                                                for p in (2, 3, 5, 7)]
    bad = []
    sizes = []
    for R in instances:
        rep = checks.check_local_line(R)
        sizes.append(rep.info.get("points"))
        if not rep.passed:
            bad.append(f"{R.origin}: {_fmt_failures(rep)}")
    return not bad, f"line sizes {sizes}" + (f"; FAIL {bad}" if bad else "")


def _claim_property_suites():
    reports = checks.run_property_suites()
    bad = [f"{r.name}: {_fmt_failures(r)}" for r in reports if not r.passed]
    return not bad, f"{len(reports)} property reports" + (f"; FAIL {bad[:3]}" if bad else "")


def _claim_four_rings():
    rep = four_rings_report(2)
    counts = {k: v["free_outlier_submodules"] for k, v in rep.info.items()}
    ok = rep.passed and counts.get("example31") == 6
    return ok, f"free-outlier submodule counts {counts}"


CLAIMS: list[Claim] = [
    Claim("EX31-IDEALS",
          "the order-16 shape ring over GF(2) has exactly two non-principal right ideals",
          "2 non-principal right ideals, sizes [4, 8]",
          {"numba": 1, "numpy": 1}, _claim_ex31_ideals),
    Claim("EX31-OUTLIERS",
          "outlier census of the order-16 shape ring over GF(2)",
          "outliers=30, generating free submodules=24, distinct free submodules=6, "
          "torsion outliers=6",
          {"numba": 1, "numpy": 1}, _claim_ex31_outliers),
    Claim("EX31-NAMED",
          "named-element identities among the eight displayed matrices",
          "gen equalities, IR+JR={0,I,J,K} strictly inside the unique principal "
          "8-element ideal, six torsion outlier pairs",
          {"numba": 1, "numpy": 1}, _claim_ex31_named),
    Claim("TERNION-ORBITS",
          "ternion free cyclic submodules form two orbits (projective line + outliers)",
          "GF(2): 2 orbits; GF(3): 2 orbits",
          {"numba": 2, "numpy": 4}, _claim_ternion_orbits),
    Claim("T3-ORBITS",
          "lower triangular 3x3 over GF(2): orbit census of free submodules",
          "pair orbits=6, submodule orbits=5, certified=True",
          {"numba": 4, "numpy": 12}, _claim_t3_orbits),
    Claim("T3-INVARIANT",
          "same orbit iff same generated right ideal, exhaustive at GF(2)",
          "orbit/ideal partitions coincide on all free pairs",
          {"numba": 3, "numpy": 10}, _claim_t3_invariant),
    Claim("T3-GF3",
          "lower triangular 3x3 over GF(3): orbit census (budgeted)",
          "pair orbits=7, submodule orbits=5, certified=True",
          {"numba": 30, "numpy": 150}, _claim_t3_gf3),
    Claim("COMM-FINITE",
          "commutative rings of order <= 16: outliers generate nothing free; free=unimodular",
          "all rings pass",
          {"numba": 4, "numpy": 4}, _claim_comm_finite),
    Claim("CHARP2",
          "characteristic-p^2 ring: the pair (1-t-y, t) is non-unimodular, free, outlier",
          "holds at p=2 and p=3",
          {"numba": 3, "numpy": 3}, _claim_charp2),
    Claim("ASYMMETRY",
          "the pair (I, A) is free+outlier on the left, torsion+non-outlier on the right",
          "holds at p=2 and p=3",
          {"numba": 3, "numpy": 4}, _claim_asymmetry),
    Claim("SEMISIMPLE",
          "semisimple instances: free iff admissible for every pair",
          "no mismatches on gf(2)xgf(3), gf(2)xgf(2), mat2(2)",
          {"numba": 2, "numpy": 2}, _claim_semisimple),
    Claim("PRODUCT-LAWS",
          "direct products: componentwise unimodular/admissible/free/outlier laws",
          "no counterexamples on ternions(2)xgf(2) and modint(4)xgf(3)",
          {"numba": 3, "numpy": 3}, _claim_product_laws),
    Claim("LOCAL-LINE",
          "local rings: projective line is {R(1,x)} + {R(d,1)} with |R|+|I| points",
          "holds on modint(4), modint(8), modint(9), gf(2), gf(3), gf(5), gf(7)",
          {"numba": 2, "numpy": 2}, _claim_local_line),
    Claim("PROPERTY-SUITES",
          "module property suites over the whole desk catalog",
          "all reports pass",
          {"numba": 10, "numpy": 20}, _claim_property_suites),
    Claim("FOUR-RINGS",
          "each of the four listed noncommutative rings has free outlier submodules",
          "positive counts, example31 contributing exactly 6",
          {"numba": 3, "numpy": 3}, _claim_four_rings),
]


# ---------------------------------------------------------------- the harness

_BUDGET_STACK: list[float] = []


def _current_budget() -> float | None:
    return _BUDGET_STACK[-1] if _BUDGET_STACK else None


def select_claims(claim_ids=None) -> list[Claim]:
    """Filter by exact id or prefix (EX31 selects all EX31-* claims)."""
    if not claim_ids:
        return list(CLAIMS)
    tokens = [t.strip().upper() for t in claim_ids if t.strip()]
    selected = [c for c in CLAIMS if any(c.id == t or c.id.startswith(t) for t in tokens)]
    matched = {t for t in tokens for c in CLAIMS if c.id == t or c.id.startswith(t)}
    unknown = set(tokens) - matched
    if unknown:
        raise UnknownName(f"no claims match {sorted(unknown)}")
    return selected


def run_verify(claim_ids=None, budget_seconds: float | None = None) -> list[VerifyResult]:
    """Replay claims in registry order under the budget; returns one result
    per selected claim, in execution order."""
    if budget_seconds is None:
        budget_seconds = float(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET_SECONDS))
    backend = _backend.active_backend()
    results = []
    spent_estimate = 0.0
    for claim in select_claims(claim_ids):
        est = claim.estimate.get(backend, max(claim.estimate.values()))
        if spent_estimate + est > budget_seconds:
            results.append(VerifyResult(
                claim=claim.id, description=claim.description,
                expected=claim.expected, computed="", status="skipped",
                reason=(f"static estimate {est:.0f}s on {backend} exceeds the "
                        f"remaining budget ({budget_seconds - spent_estimate:.0f}s left)")))
            continue
        spent_estimate += est
        _BUDGET_STACK.append(budget_seconds - spent_estimate + est)
        t0 = time.perf_counter()
        try:
            ok, computed = claim.run()
            status, reason = ("pass", "") if ok else ("fail", "")
        except BudgetExceeded as e:
            status, computed, reason = "skipped", "", str(e)
        finally:
            _BUDGET_STACK.pop()
        results.append(VerifyResult(
            claim=claim.id, description=claim.description, expected=claim.expected,
            computed=computed, status=status, reason=reason,
            seconds=time.perf_counter() - t0))
    return results


def run_claim(claim_id: str, budget_seconds: float | None = None) -> VerifyResult:
    results = run_verify([claim_id], budget_seconds=budget_seconds)
    if len(results) != 1:
        raise UnknownName(f"{claim_id} selects {len(results)} claims")
    return results[0]
