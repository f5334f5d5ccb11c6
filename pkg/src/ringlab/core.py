"""Finite rings with unity as dense Cayley tables.

A ring of order n is two n x n int32 tables plus distinguished zero and one.
Construction always runs the law suite (group laws, associativity of both
operations, distributivity, identities): exhaustively over all triples up to
order LAW_EXHAUSTIVE_CAP, by seeded random sampling above that. Rings are
immutable after construction; every function in this module is a pure read.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AxiomViolation, SpecError

LAW_EXHAUSTIVE_CAP = 64
LAW_SAMPLE_TRIPLES = 100_000
LAW_SAMPLE_SEED = 0x5EED


@dataclass(eq=False)
class RingSpec:
    """A constructive ring description; see parse_ring_spec for the text form."""

    kind: str
    params: dict


@dataclass(eq=False)
class FiniteRing:
    """A finite associative ring with 1 (1 != 0), given by element tables.

    char_orders/basis describe the additive group as a direct sum of cyclic
    groups: element index i decomposes into mixed-radix digits over
    char_orders, and basis[k] is the element with digit 1 in slot k. Every
    constructor in this package enumerates elements in that digit order.
    """

    order: int
    add_table: np.ndarray
    mul_table: np.ndarray
    zero: int
    one: int
    labels: tuple[str, ...]
    origin: str
    char_orders: tuple[int, ...]
    basis: tuple[int, ...]
    factors: tuple["FiniteRing", ...] | None = None
    meta: dict = field(default_factory=dict, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.add_table = np.ascontiguousarray(self.add_table, dtype=np.int32)
        self.mul_table = np.ascontiguousarray(self.mul_table, dtype=np.int32)
        self.add_table.flags.writeable = False
        self.mul_table.flags.writeable = False

    # -- element arithmetic (plain table lookups)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def label(self, a: int) -> str:
        return self.labels[a]

    def elements(self) -> range:
        return range(self.order)

    @property
    def neg_table(self) -> np.ndarray:
        tab = self._cache.get("neg")
        if tab is None:
            tab = np.argmax(self.add_table == self.zero, axis=1).astype(np.int32)
            tab.flags.writeable = False
            self._cache["neg"] = tab
        return tab

    @property
    def label_rank(self) -> np.ndarray:
        """Position of each element's label in sorted label order (tie-break key)."""
        rank = self._cache.get("label_rank")
        if rank is None:
            order = sorted(range(self.order), key=lambda i: self.labels[i])
            rank = np.empty(self.order, dtype=np.int64)
            rank[order] = np.arange(self.order)
            rank.flags.writeable = False
            self._cache["label_rank"] = rank
        return rank

    def coords_of(self, a: int) -> tuple[int, ...]:
        """Mixed-radix digits of element a over char_orders."""
        digits = []
        for radix in reversed(self.char_orders):
            a, d = divmod(a, radix)
            digits.append(d)
        return tuple(reversed(digits))

    def index_of_coords(self, coords) -> int:
        idx = 0
        for d, radix in zip(coords, self.char_orders):
            idx = idx * radix + d % radix
        return idx

    def characteristic(self) -> int:
        """Additive order of 1."""
        k, acc = 1, self.one
        while acc != self.zero:
            acc = self.add(acc, self.one)
            k += 1
        return k

    def __repr__(self):
        return f"FiniteRing(order={self.order}, origin={self.origin!r})"


# ---------------------------------------------------------------------- laws


def _witness(labels, *idxs):
    return tuple(labels[int(i)] for i in idxs)


def check_ring_axioms(add, mul, zero, one, labels, cap=LAW_EXHAUSTIVE_CAP,
                      samples=LAW_SAMPLE_TRIPLES, seed=LAW_SAMPLE_SEED):
    """Raise AxiomViolation on the first failed ring law.

    Pairwise laws are always exhaustive. Triple laws (associativity,
    distributivity) are exhaustive for order <= cap and sampled above.
    """
    n = add.shape[0]
    for name, tab in (("add", add), ("mul", mul)):
        if tab.shape != (n, n):
            raise SpecError(f"{name} table must be square of order {n}")
        if tab.min() < 0 or tab.max() >= n:
            raise SpecError(f"{name} table entry out of range")
    if zero == one:
        raise AxiomViolation("one_not_zero", (labels[zero],))
    if not np.array_equal(add[zero], np.arange(n)):
        a = int(np.flatnonzero(add[zero] != np.arange(n))[0])
        raise AxiomViolation("additive_identity", _witness(labels, a))
    if not np.array_equal(add, add.T):
        a, b = np.argwhere(add != add.T)[0]
        raise AxiomViolation("additive_commutativity", _witness(labels, a, b))
    has_inverse = (add == zero).any(axis=1)
    if not has_inverse.all():
        a = int(np.flatnonzero(~has_inverse)[0])
        raise AxiomViolation("additive_inverse", _witness(labels, a))
    if not (np.array_equal(mul[one], np.arange(n)) and np.array_equal(mul[:, one], np.arange(n))):
        raise AxiomViolation("multiplicative_identity", (labels[one],))

    exhaustive = n <= cap
    if exhaustive:
        i = np.arange(n)
        a, b, c = i[:, None, None], i[None, :, None], i[None, None, :]
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))

    triple_laws = (
        ("additive_associativity", lambda: add[add[a, b], c] == add[a, add[b, c]]),
        ("multiplicative_associativity", lambda: mul[mul[a, b], c] == mul[a, mul[b, c]]),
        ("left_distributivity", lambda: mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]),
        ("right_distributivity", lambda: mul[add[a, b], c] == add[mul[a, c], mul[b, c]]),
    )
    for law, pred in triple_laws:
        ok = pred()
        if not ok.all():
            if exhaustive:
                wa, wb, wc = np.argwhere(~ok)[0]
            else:
                k = np.flatnonzero(~ok)[0]
                wa, wb, wc = a[k], b[k], c[k]
            raise AxiomViolation(law, _witness(labels, wa, wb, wc))


# ------------------------------------------------------------------ builders


def build_ring(spec: RingSpec, law_check_cap: int | None = None) -> FiniteRing:
    """Construct and fully validate a ring from a RingSpec."""
    if not isinstance(spec, RingSpec):
        raise SpecError(f"expected RingSpec, got {type(spec).__name__}")
    builders = {
        "modint": _build_modint,
        "matrix_shape": _build_matrix_shape,
        "structure_constants": _build_structure_constants,
        "product": _build_product,
        "catalog": _build_catalog,
    }
    if spec.kind not in builders:
        raise SpecError(f"unknown ring spec kind {spec.kind!r}")
    ring = builders[spec.kind](spec.params)
    cap = LAW_EXHAUSTIVE_CAP if law_check_cap is None else law_check_cap
    check_ring_axioms(ring.add_table, ring.mul_table, ring.zero, ring.one,
                      ring.labels, cap=cap)
    if len(set(ring.labels)) != ring.order:
        raise SpecError(f"duplicate element labels in {ring.origin}")
    return ring


def _require_prime(p):
    if not isinstance(p, int) or p < 2 or any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
        raise SpecError(f"p must be a prime, got {p!r}")


def _build_modint(params):
    n = params.get("n")
    if not isinstance(n, int) or n < 2:
        raise SpecError(f"modint requires integer n >= 2, got {n!r}")
    i = np.arange(n)
    return FiniteRing(
        order=n,
        add_table=np.add.outer(i, i) % n,
        mul_table=np.multiply.outer(i, i) % n,
        zero=0,
        one=1,
        labels=tuple(str(k) for k in range(n)),
        origin=f"modint({n})",
        char_orders=(n,),
        basis=(1,),
    )


def _matrix_label(mat):
    return "[" + ",".join("[" + ",".join(str(int(v)) for v in row) + "]" for row in mat) + "]"


def _build_matrix_shape(params):
    p, size, pattern = params.get("p"), params.get("size"), params.get("pattern")
    _require_prime(p)
    if not isinstance(pattern, (list, tuple)) or len(pattern) != size \
            or any(len(row) != size for row in pattern):
        raise SpecError(f"pattern must be a {size}x{size} grid")
    letters = []
    cells = {}
    for r, row in enumerate(pattern):
        for c, entry in enumerate(row):
            if entry == 0:
                continue
            if not isinstance(entry, str) or len(entry) != 1 or not entry.isalpha():
                raise SpecError(f"pattern[{r}][{c}] must be 0 or a single letter")
            if entry not in cells:
                cells[entry] = []
                letters.append(entry)
            cells[entry].append((r, c))
    if not letters:
        raise SpecError("pattern has no free entries")

    L = len(letters)
    n = p ** L
    coords = np.array(list(itertools.product(range(p), repeat=L)), dtype=np.int32)
    mats = np.zeros((n, size, size), dtype=np.int32)
    for k, letter in enumerate(letters):
        for (r, c) in cells[letter]:
            mats[:, r, c] = coords[:, k]

    strides = np.array([p ** (L - 1 - k) for k in range(L)], dtype=np.int64)
    first_cell = [cells[letter][0] for letter in letters]

    def decode(ms):
        # ms: (..., size, size) -> element indices; raises if not in the shape
        got = np.stack([ms[..., r, c] for (r, c) in first_cell], axis=-1)
        idx = (got.astype(np.int64) * strides).sum(axis=-1)
        rebuilt = mats[idx]
        bad = np.argwhere((rebuilt != ms).any(axis=(-2, -1)))
        if bad.size:
            return idx, tuple(bad[0])
        return idx, None

    add_idx = ((coords[:, None, :] + coords[None, :, :]) % p).astype(np.int64) @ strides
    prod = np.einsum("aij,bjk->abik", mats, mats) % p
    mul_idx, offender = decode(prod)
    if offender is not None:
        i, j = offender
        raise AxiomViolation("mul_closure", (_matrix_label(mats[i]), _matrix_label(mats[j])))

    labels = tuple(_matrix_label(m) for m in mats)
    one_mat = np.eye(size, dtype=np.int32)
    one_idx, offender = decode(one_mat[None])
    if offender is not None:
        raise AxiomViolation("multiplicative_identity", ("identity matrix not in shape",))
    return FiniteRing(
        order=n,
        add_table=add_idx,
        mul_table=mul_idx,
        zero=0,
        one=int(one_idx[0]),
        labels=labels,
        origin=f"matrix_shape(p={p}, size={size}, letters={''.join(letters)})",
        char_orders=(p,) * L,
        basis=tuple(int(p ** (L - 1 - k)) for k in range(L)),
        meta={"pattern": pattern, "p": p, "size": size,
              "letters": letters, "matrices": mats},
    )


def _parse_combo(expr, basis_labels, where):
    """Parse '0' or a +-sum of [int*]basis_label terms into a coefficient vector."""
    vec = [0] * len(basis_labels)
    expr = expr.strip()
    if expr == "0":
        return vec
    for term in expr.split("+"):
        term = term.strip()
        if "*" in term:
            coef_s, _, label = term.partition("*")
            try:
                coef = int(coef_s)
            except ValueError:
                raise SpecError(f"{where}: bad coefficient {coef_s!r}")
        else:
            coef, label = 1, term
        label = label.strip()
        if label not in basis_labels:
            raise SpecError(f"{where}: unknown basis element {label!r}")
        vec[basis_labels.index(label)] += coef
    return vec


def _build_structure_constants(params):
    char_orders = params.get("char_orders")
    basis_labels = params.get("basis")
    mul_spec = params.get("mul")
    if not char_orders or any(not isinstance(c, int) or c < 2 for c in char_orders):
        raise SpecError("char_orders must be integers >= 2")
    if not basis_labels or len(basis_labels) != len(char_orders):
        raise SpecError("basis must name one element per char_orders entry")
    if "0" in basis_labels or len(set(basis_labels)) != len(basis_labels):
        raise SpecError("basis labels must be distinct and not '0'")
    k = len(basis_labels)
    v = np.zeros((k, k, k), dtype=np.int64)
    for i, bi in enumerate(basis_labels):
        for j, bj in enumerate(basis_labels):
            key = f"{bi}*{bj}"
            if not isinstance(mul_spec, dict) or key not in mul_spec:
                raise SpecError(f"missing basis product {key!r}")
            v[i, j] = _parse_combo(mul_spec[key], basis_labels, key)
    orders = np.array(char_orders, dtype=np.int64)
    v %= orders[None, None, :]
    # bi-additivity: c_i * v[i,j,m] and c_j * v[i,j,m] must vanish mod c_m
    for i in range(k):
        for j in range(k):
            for m in range(k):
                if (orders[i] * v[i, j, m]) % orders[m] or (orders[j] * v[i, j, m]) % orders[m]:
                    raise SpecError(
                        f"product {basis_labels[i]}*{basis_labels[j]} is not "
                        f"bi-additive in coordinate {basis_labels[m]}")

    n = int(np.prod(orders))
    coords = np.array(list(itertools.product(*(range(c) for c in char_orders))),
                      dtype=np.int64)
    strides = np.array([int(np.prod(orders[t + 1:])) for t in range(k)], dtype=np.int64)
    add_idx = (((coords[:, None, :] + coords[None, :, :]) % orders) * strides).sum(axis=2)
    prod_coords = np.einsum("xi,yj,ijm->xym", coords, coords, v) % orders
    mul_idx = (prod_coords * strides).sum(axis=2)

    ones = (mul_idx == np.arange(n)[None, :]).all(axis=1) \
        & (mul_idx == np.arange(n)[:, None]).all(axis=0)
    if not ones.any():
        raise AxiomViolation("multiplicative_identity", None)
    one = int(np.flatnonzero(ones)[0])

    def fmt(cs):
        terms = []
        for t, c in enumerate(cs):
            if c == 0:
                continue
            if basis_labels[t] == "1":
                terms.append(str(c))
            else:
                terms.append(basis_labels[t] if c == 1 else f"{c}{basis_labels[t]}")
        return "+".join(terms) if terms else "0"

    labels = tuple(fmt(cs) for cs in coords)
    return FiniteRing(
        order=n,
        add_table=add_idx,
        mul_table=mul_idx,
        zero=0,
        one=one,
        labels=labels,
        origin=f"structure_constants(orders={tuple(char_orders)}, basis={tuple(basis_labels)})",
        char_orders=tuple(char_orders),
        basis=tuple(int(s) for s in strides),
        meta={"basis_labels": tuple(basis_labels)},
    )


def _build_product(params):
    factor_specs = params.get("factors")
    if not factor_specs:
        raise SpecError("product requires a non-empty factor list")
    factors = []
    for fs in factor_specs:
        if isinstance(fs, FiniteRing):
            factors.append(fs)
        elif isinstance(fs, RingSpec):
            factors.append(build_ring(fs))
        else:
            raise SpecError("product factors must be RingSpec or FiniteRing")
    return direct_product(factors)


def _build_catalog(params):
    from . import catalog  # deferred: catalog builds on top of this module
    kwargs = {key: val for key, val in params.items() if key not in ("name", "p")}
    return catalog.catalog_build(params.get("name"), params.get("p"), **kwargs)


def direct_product(rings) -> FiniteRing:
    """Componentwise product ring; retains factor projections in .factors."""
    rings = list(rings)
    if not rings:
        raise SpecError("direct_product of an empty list")
    if len(rings) == 1:
        return rings[0]
    n = int(np.prod([R.order for R in rings]))
    strides = []
    s = n
    for R in rings:
        s //= R.order
        strides.append(s)
    digits = [(np.arange(n) // s) % R.order for R, s in zip(rings, strides)]

    add_idx = np.zeros((n, n), dtype=np.int64)
    mul_idx = np.zeros((n, n), dtype=np.int64)
    for R, s, d in zip(rings, strides, digits):
        add_idx += R.add_table[np.ix_(d, d)].astype(np.int64) * s
        mul_idx += R.mul_table[np.ix_(d, d)].astype(np.int64) * s
    zero = sum(R.zero * s for R, s in zip(rings, strides))
    one = sum(R.one * s for R, s in zip(rings, strides))
    labels = tuple("(" + ",".join(R.labels[d[i]] for R, d in zip(rings, digits)) + ")"
                   for i in range(n))
    char_orders = tuple(c for R in rings for c in R.char_orders)
    basis = []
    for k, (R, s) in enumerate(zip(rings, strides)):
        pad = int(zero) - R.zero * s
        basis.extend(pad + b * s for b in R.basis)
    return FiniteRing(
        order=n,
        add_table=add_idx,
        mul_table=mul_idx,
        zero=int(zero),
        one=int(one),
        labels=labels,
        origin="product(" + ", ".join(R.origin for R in rings) + ")",
        char_orders=char_orders,
        basis=tuple(int(b) for b in basis),
        factors=tuple(rings),
        meta={"strides": tuple(strides)},
    )


def product_digits(P: FiniteRing, idx) -> list[np.ndarray]:
    """Component indices of composite elements idx, one array per factor."""
    if P.factors is None:
        raise SpecError("ring was not built as a direct product")
    strides = P.meta["strides"]
    idx = np.asarray(idx)
    return [(idx // s) % R.order for R, s in zip(P.factors, strides)]


def opposite_ring(R: FiniteRing) -> FiniteRing:
    """Same additive structure, multiplication reversed."""
    return FiniteRing(
        order=R.order,
        add_table=R.add_table,
        mul_table=R.mul_table.T.copy(),
        zero=R.zero,
        one=R.one,
        labels=R.labels,
        origin=f"opposite({R.origin})",
        char_orders=R.char_orders,
        basis=R.basis,
        meta={"opposite_of": R.origin},
    )


# ------------------------------------------------------- element-level reads


def units(R: FiniteRing) -> set[int]:
    """Two-sided invertible elements; inverses are cached alongside."""
    cached = R._cache.get("units")
    if cached is None:
        both = (R.mul_table == R.one) & (R.mul_table.T == R.one)
        mask = both.any(axis=1)
        inv = np.where(mask, both.argmax(axis=1), -1)
        cached = (frozenset(int(u) for u in np.flatnonzero(mask)), inv)
        R._cache["units"] = cached
    return set(cached[0])


def inverse_of(R: FiniteRing, u: int) -> int:
    units(R)
    inv = int(R._cache["units"][1][u])
    if inv < 0:
        raise SpecError(f"{R.labels[u]} is not a unit")
    return inv


def is_left_zero_divisor(R: FiniteRing, a: int) -> bool:
    """True iff a*b = 0 for some nonzero b. Zero itself counts (order >= 2)."""
    row = R.mul_table[a] == R.zero
    row = row.copy()
    row[R.zero] = False
    return bool(row.any())


def is_right_zero_divisor(R: FiniteRing, a: int) -> bool:
    col = R.mul_table[:, a] == R.zero
    col = col.copy()
    col[R.zero] = False
    return bool(col.any())


def check_condition_F(R: FiniteRing) -> bool:
    """Every element is a unit or a (left or right) zero divisor."""
    us = units(R)
    return all(a in us or is_left_zero_divisor(R, a) or is_right_zero_divisor(R, a)
               for a in R.elements())


def is_dedekind_finite(R: FiniteRing) -> bool:
    """ab = 1 implies ba = 1, checked over all pairs."""
    fwd = R.mul_table == R.one
    return bool((fwd == fwd.T).all())


def is_commutative(R: FiniteRing) -> bool:
    return bool(np.array_equal(R.mul_table, R.mul_table.T))


def is_local(R: FiniteRing):
    """(True, maximal ideal) iff the non-units are closed under addition."""
    from .ideals import RightIdealSet
    us = units(R)
    non_units = np.array(sorted(set(R.elements()) - us), dtype=np.int64)
    in_nu = np.zeros(R.order, dtype=bool)
    in_nu[non_units] = True
    sums = R.add_table[np.ix_(non_units, non_units)]
    if not in_nu[sums].all():
        return False, None
    return True, RightIdealSet(R, tuple(int(a) for a in non_units))
