"""Named ring constructors, the ring-spec text format, and the desk catalog.

Catalog entries cover the concrete rings the claim suite runs on: the
16-element shape ring over GF(p) ("example31"), ternions (upper triangular
2x2), lower triangular 3x3 ("t3"), the characteristic-p^2 ring with basis
{1, t, y}, a second order-p^4 matrix shape, plus the generic families
modint / gf / matn.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FiniteRing, RingSpec, build_ring
from .errors import NonPrime, ParseError, SpecError, UnknownName, WrongRing


def _is_prime(p) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass
class CatalogEntry:
    name: str
    order_formula: str
    description: str
    make_spec: callable


def _example31_spec(p, **_):
    return RingSpec("matrix_shape", {
        "p": p, "size": 3,
        "pattern": [["a", 0, 0], ["b", "a", 0], ["c", 0, "d"]]})


def _ternions_spec(p, **_):
    return RingSpec("matrix_shape", {
        "p": p, "size": 2,
        "pattern": [["a", "b"], [0, "c"]]})


def _t3_spec(p, **_):
    return RingSpec("matrix_shape", {
        "p": p, "size": 3,
        "pattern": [["a", 0, 0], ["b", "c", 0], ["d", "e", "f"]]})


def _char_p2_spec(p, **_):
    return RingSpec("structure_constants", {
        "char_orders": [p * p, p, p],
        "basis": ["1", "t", "y"],
        "mul": {"1*1": "1", "1*t": "t", "1*y": "y",
                "t*1": "t", "y*1": "y",
                "t*t": "0", "t*y": "0", "y*y": "y", "y*t": "t"}})


def _p4_second_spec(p, **_):
    return RingSpec("matrix_shape", {
        "p": p, "size": 3,
        "pattern": [["a", "c", "d"], [0, "b", 0], [0, 0, "b"]]})


def _modint_spec(n, **_):
    return RingSpec("modint", {"n": n})


def _gf_spec(p, **_):
    return RingSpec("modint", {"n": p})


_LETTERS = "abcdefghijklmnopqrstuvwxy"


def _matn_spec(p, k=2, **_):
    if not isinstance(k, int) or not 1 <= k * k <= len(_LETTERS):
        raise SpecError(f"matn size k must be a small positive integer, got {k!r}")
    pattern = [[_LETTERS[r * k + c] for c in range(k)] for r in range(k)]
    return RingSpec("matrix_shape", {"p": p, "size": k, "pattern": pattern})


CATALOG: dict[str, CatalogEntry] = {
    "example31": CatalogEntry(
        "example31", "p^4",
        "3x3 matrices [[a,0,0],[b,a,0],[c,0,d]] over GF(p); two non-principal "
        "right ideals, outliers of both the free and the torsion kind",
        _example31_spec),
    "ternions": CatalogEntry(
        "ternions", "p^3",
        "upper triangular 2x2 matrices over GF(p); free cyclic submodules "
        "split into the projective line and one outlier-generated orbit",
        _ternions_spec),
    "t3": CatalogEntry(
        "t3", "p^6",
        "lower triangular 3x3 matrices over GF(p); free cyclic submodules "
        "fall into 5 orbits, free-generating pairs into 4+p",
        _t3_spec),
    "char_p2": CatalogEntry(
        "char_p2", "p^4",
        "characteristic p^2 ring on Z_{p^2} (+) Z_p (+) Z_p with basis "
        "{1, t, y}: t*t=0, y*y=y, t*y=0, y*t=t",
        _char_p2_spec),
    "p4_second": CatalogEntry(
        "p4_second", "p^4",
        "3x3 matrices [[a,c,d],[0,b,0],[0,0,b]] over GF(p); the second "
        "characteristic-p shape of order p^4 with free outlier submodules",
        _p4_second_spec),
    "modint": CatalogEntry(
        "modint", "n",
        "integers modulo n",
        _modint_spec),
    "gf": CatalogEntry(
        "gf", "p",
        "prime field GF(p)",
        _gf_spec),
    "matn": CatalogEntry(
        "matn", "p^(k*k)",
        "full k x k matrices over GF(p) (k defaults to 2)",
        _matn_spec),
}

_PRIME_PARAM = {"example31", "ternions", "t3", "char_p2", "p4_second", "gf", "matn"}


def catalog_build(name: str, p: int, law_check_cap: int | None = None, **kw) -> FiniteRing:
    """Build a named catalog ring over GF(p) (or modulus n for modint)."""
    entry = CATALOG.get(name)
    if entry is None:
        raise UnknownName(f"no catalog ring named {name!r}")
    if name in _PRIME_PARAM and not _is_prime(p):
        raise NonPrime(f"{name} requires a prime parameter, got {p!r}")
    ring = build_ring(entry.make_spec(p, **kw), law_check_cap=law_check_cap)
    ring.origin = f"catalog:{name}:{p}" + (f":{kw['k']}" if "k" in kw else "")
    ring.meta["catalog_name"] = name
    ring.meta["catalog_p"] = p
    return ring


_EXAMPLE31_COORDS = {
    "A": (1, 1, 1, 0), "B": (1, 1, 0, 0), "C": (1, 0, 1, 0), "D": (1, 0, 0, 0),
    "I": (0, 1, 1, 0), "J": (0, 1, 0, 0), "K": (0, 0, 1, 0), "0": (0, 0, 0, 0),
}


def named_elements_example31(R: FiniteRing) -> dict[str, int]:
    """The eight displayed matrices of the order-16 shape ring at p = 2,
    keyed by their customary one-letter names."""
    if R.meta.get("catalog_name") != "example31" or R.meta.get("catalog_p") != 2:
        raise WrongRing("named elements are defined for catalog example31 at p = 2")
    return {name: R.index_of_coords(coords)
            for name, coords in _EXAMPLE31_COORDS.items()}


# ----------------------------------------------------------- spec text format


def _field(obj, key, types, path):
    if key not in obj:
        raise ParseError(f"{path}.{key}", "missing field")
    val = obj[key]
    if not isinstance(val, types):
        raise ParseError(f"{path}.{key}", f"expected {types}, got {type(val).__name__}")
    return val


def _validate_spec(obj, path="$") -> RingSpec:
    if not isinstance(obj, dict):
        raise ParseError(path, "ring spec must be an object")
    kind = _field(obj, "kind", str, path)
    if kind == "modint":
        return RingSpec("modint", {"n": _field(obj, "n", int, path)})
    if kind == "matrix_shape":
        pattern = _field(obj, "pattern", list, path)
        for r, row in enumerate(pattern):
            if not isinstance(row, list):
                raise ParseError(f"{path}.pattern[{r}]", "expected a row list")
            for c, entry in enumerate(row):
                if not (entry == 0 or isinstance(entry, str)):
                    raise ParseError(f"{path}.pattern[{r}][{c}]",
                                     "entries are 0 or a letter")
        return RingSpec("matrix_shape", {
            "p": _field(obj, "p", int, path),
            "size": _field(obj, "size", int, path),
            "pattern": pattern})
    if kind == "structure_constants":
        return RingSpec("structure_constants", {
            "char_orders": _field(obj, "char_orders", list, path),
            "basis": _field(obj, "basis", list, path),
            "mul": _field(obj, "mul", dict, path)})
    if kind == "product":
        factors = _field(obj, "factors", list, path)
        if not factors:
            raise ParseError(f"{path}.factors", "must be non-empty")
        return RingSpec("product", {
            "factors": [_validate_spec(f, f"{path}.factors[{i}]")
                        for i, f in enumerate(factors)]})
    if kind == "catalog":
        params = {"name": _field(obj, "name", str, path),
                  "p": _field(obj, "p", int, path)}
        if "k" in obj:
            params["k"] = _field(obj, "k", int, path)
        return RingSpec("catalog", params)
    raise ParseError(f"{path}.kind", f"unknown kind {kind!r}")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse the one-ring-per-document text format; errors carry a char
    offset (syntax) or a field path (validation)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.pos, e.msg) from None
    return _validate_spec(obj)


def emit_structure_spec(R: FiniteRing) -> dict:
    """Express a built ring as a structure-constants document that parses
    and rebuilds to the same tables."""
    if not R.basis or not R.char_orders:
        raise SpecError(f"{R.origin} carries no additive coordinate data")
    k = len(R.char_orders)
    names = R.meta.get("basis_labels")
    if not names or len(set(names)) != k:
        names = tuple(f"e{i}" for i in range(k))
    mul = {}
    for i in range(k):
        for j in range(k):
            prod = int(R.mul_table[R.basis[i], R.basis[j]])
            coords = R.coords_of(prod)
            terms = [f"{c}*{names[m]}" for m, c in enumerate(coords) if c]
            mul[f"{names[i]}*{names[j]}"] = "+".join(terms) if terms else "0"
    return {"kind": "structure_constants",
            "char_orders": list(R.char_orders),
            "basis": list(names),
            "mul": mul}


def four_rings_report(p: int):
    """The four noncommutative rings of order up to p^4 that carry outliers
    generating free cyclic submodules: existence check per ring.

    Existence only; that the list is complete is a classification fact this
    package does not re-derive.
    """
    import numpy as np

    from .core import is_commutative
    from .errors import BudgetExceeded
    from .pairs import cano_gen_flat, free_mask, outlier_mask
    from .reporting import Report
    if p not in (2, 3):
        raise BudgetExceeded("four-rings report is desk-scale: p must be 2 or 3")
    failures = []
    info = {}
    for name in ("ternions", "example31", "p4_second", "char_p2"):
        R = catalog_build(name, p)
        if is_commutative(R):
            failures.append(("unexpectedly_commutative", name))
        free_outliers = outlier_mask(R) & free_mask(R)
        count = int(free_outliers.sum())
        submodules = len(np.unique(cano_gen_flat(R)[free_outliers.ravel()]))
        info[name] = {"order": R.order, "free_outlier_pairs": count,
                      "free_outlier_submodules": submodules}
        if count == 0:
            failures.append(("no_free_outlier_submodule", name))
    return Report(name=f"four noncommutative rings at p={p}",
                  passed=not failures, failures=failures, info=info)


# ------------------------------------------------------------- desk fixtures


def desk_rings(max_order: int = 64) -> list[tuple[str, FiniteRing]]:
    """The fixed ring list the property suites sweep, capped by order."""
    makers = [
        ("modint(2)", lambda: catalog_build("modint", 2)),
        ("modint(3)", lambda: catalog_build("modint", 3)),
        ("modint(4)", lambda: catalog_build("modint", 4)),
        ("modint(6)", lambda: catalog_build("modint", 6)),
        ("modint(8)", lambda: catalog_build("modint", 8)),
        ("modint(9)", lambda: catalog_build("modint", 9)),
        ("modint(12)", lambda: catalog_build("modint", 12)),
        ("gf(5)", lambda: catalog_build("gf", 5)),
        ("gf(7)", lambda: catalog_build("gf", 7)),
        ("example31(2)", lambda: catalog_build("example31", 2)),
        ("ternions(2)", lambda: catalog_build("ternions", 2)),
        ("ternions(3)", lambda: catalog_build("ternions", 3)),
        ("t3(2)", lambda: catalog_build("t3", 2)),
        ("char_p2(2)", lambda: catalog_build("char_p2", 2)),
        ("p4_second(2)", lambda: catalog_build("p4_second", 2)),
        ("mat2(2)", lambda: catalog_build("matn", 2, k=2)),
        ("gf(2)xgf(3)", lambda: build_ring(RingSpec("product", {
            "factors": [_gf_spec(2), _gf_spec(3)]}))),
        ("modint(4)xgf(2)", lambda: build_ring(RingSpec("product", {
            "factors": [_modint_spec(4), _gf_spec(2)]}))),
        ("ternions(2)xgf(2)", lambda: build_ring(RingSpec("product", {
            "factors": [_ternions_spec(2), _gf_spec(2)]}))),
    ]
    out = []
    for nick, make in makers:
        ring = make()
        if ring.order <= max_order:
            out.append((nick, ring))
    return out
