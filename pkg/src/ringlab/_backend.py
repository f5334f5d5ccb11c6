"""Hot kernels with two interchangeable backends.

Every kernel has a pure-numpy implementation and, when numba is importable,
an @njit twin. The active backend is chosen once at import from the
RINGLAB_BACKEND environment variable: "numba", "numpy", or "auto" (default,
meaning numba if available). `python -m ringlab.bench` times both paths.

All kernels work on flat pair indices p = a * n + b over a ring of order n.
Tables are C-contiguous int32; masks are plain bool arrays.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import SpecError

_ENV_FLAG = "RINGLAB_BACKEND"


def _resolve_backend() -> str:
    choice = os.environ.get(_ENV_FLAG, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise SpecError(f"{_ENV_FLAG} must be auto, numba or numpy, got {choice!r}")
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise SpecError(f"{_ENV_FLAG}=numba but numba is not installed")
        return "numpy"
    return "numba"


BACKEND = _resolve_backend()


def active_backend() -> str:
    return BACKEND


# ---------------------------------------------------------------- numpy paths

def hull_fill_numpy(mul, ua, ub):
    """Mark every pair r*(x,y) for the unimodular pairs (ua[i], ub[i])."""
    n = mul.shape[0]
    hull = np.zeros(n * n, dtype=bool)
    chunk = max(1, (1 << 22) // n)
    for s in range(0, len(ua), chunk):
        ia = mul[:, ua[s:s + chunk]].astype(np.int64)
        ib = mul[:, ub[s:s + chunk]]
        hull[(ia * n + ib).ravel()] = True
    return hull


def bfs_components_numpy(add, mul, gens, mask, comp):
    """Connected components of masked pairs under the generator action.

    comp must come in filled with -1; labels are assigned in ascending order
    of the seed pair index. Returns (src, dst) for the first edge that leaves
    the mask, or (-1, -1) when the mask is action-closed.
    """
    n = add.shape[0]
    label = 0
    for s in np.flatnonzero(mask):
        if comp[s] >= 0:
            continue
        comp[s] = label
        frontier = np.array([s], dtype=np.int64)
        while frontier.size:
            a, b = np.divmod(frontier, n)
            grown = []
            for g in range(gens.shape[0]):
                m11, m12, m21, m22 = gens[g]
                q = add[mul[a, m11], mul[b, m21]].astype(np.int64) * n \
                    + add[mul[a, m12], mul[b, m22]]
                fresh = q[comp[q] < 0]
                if fresh.size:
                    bad = fresh[~mask[fresh]]
                    if bad.size:
                        src = frontier[comp[q] < 0][~mask[fresh]][0]
                        return int(src), int(bad[0])
                    comp[fresh] = label
                    grown.append(fresh)
            frontier = np.unique(np.concatenate(grown)) if grown else np.empty(0, np.int64)
        label += 1
    return -1, -1


def canonical_generators_numpy(mul, free_flat, rank_key):
    """For each free pair p, the free pair r*p with least label rank.

    Two free pairs generate the same cyclic submodule exactly when they share
    this canonical generator, so the result doubles as a submodule identity.
    """
    n = mul.shape[0]
    cano = np.full(n * n, -1, dtype=np.int64)
    pairs = np.flatnonzero(free_flat)
    chunk = max(1, (1 << 22) // n)
    big = np.int64(1) << 62
    for s in range(0, len(pairs), chunk):
        blk = pairs[s:s + chunk]
        a, b = np.divmod(blk, n)
        q = mul[:, a].astype(np.int64) * n + mul[:, b]      # (n, blk): r*p per row r
        key = np.where(free_flat[q], rank_key[q], big)
        cano[blk] = np.take_along_axis(q, key.argmin(axis=0)[None, :], axis=0)[0]
    return cano


def combo_sumsets_numpy(add, neg, pmask, moff, mflat, ca, cb):
    """Membership masks of the ideal sums I_a + I_b for principal-class combos.

    pmask[c] is the member mask of principal class c; (moff, mflat) is the CSR
    member layout. Row k of the result is the mask of class ca[k] + class cb[k].
    """
    n = add.shape[0]
    out = np.zeros((len(ca), n), dtype=bool)
    for k in range(len(ca)):
        members = mflat[moff[ca[k]]:moff[ca[k] + 1]]
        out[k] = pmask[cb[k]][add[neg[members], :]].any(axis=0)
    return out


# ---------------------------------------------------------------- numba paths

if BACKEND == "numba":
    from numba import njit

    @njit(cache=True)
    def _hull_fill_nb(mul, ua, ub, hull):
        n = mul.shape[0]
        for k in range(ua.shape[0]):
            x = ua[k]
            y = ub[k]
            for r in range(n):
                hull[mul[r, x] * n + mul[r, y]] = True

    def hull_fill_numba(mul, ua, ub):
        n = mul.shape[0]
        hull = np.zeros(n * n, dtype=np.bool_)
        _hull_fill_nb(mul, ua, ub, hull)
        return hull

    @njit(cache=True)
    def _bfs_nb(add, mul, gens, mask, comp):
        n = add.shape[0]
        big = n * n
        stack = np.empty(big, np.int64)
        label = 0
        for s in range(big):
            if not mask[s] or comp[s] >= 0:
                continue
            comp[s] = label
            stack[0] = s
            top = 1
            while top > 0:
                top -= 1
                p = stack[top]
                a = p // n
                b = p - a * n
                for g in range(gens.shape[0]):
                    na = add[mul[a, gens[g, 0]], mul[b, gens[g, 2]]]
                    nb = add[mul[a, gens[g, 1]], mul[b, gens[g, 3]]]
                    q = na * n + nb
                    if comp[q] < 0:
                        if not mask[q]:
                            return p, q
                        comp[q] = label
                        stack[top] = q
                        top += 1
            label += 1
        return -1, -1

    def bfs_components_numba(add, mul, gens, mask, comp):
        src, dst = _bfs_nb(add, mul, gens, mask, comp)
        return int(src), int(dst)

    @njit(cache=True)
    def _cano_nb(mul, free_flat, rank_key, cano):
        n = mul.shape[0]
        for a in range(n):
            base = a * n
            for b in range(n):
                p = base + b
                if not free_flat[p]:
                    continue
                best = -1
                best_key = np.int64(1) << 62
                for r in range(n):
                    q = mul[r, a] * n + mul[r, b]
                    if free_flat[q] and rank_key[q] < best_key:
                        best_key = rank_key[q]
                        best = q
                cano[p] = best

    def canonical_generators_numba(mul, free_flat, rank_key):
        n = mul.shape[0]
        cano = np.full(n * n, -1, dtype=np.int64)
        _cano_nb(mul, free_flat, rank_key, cano)
        return cano

    @njit(cache=True)
    def _combo_sumsets_nb(add, neg, pmask, moff, mflat, ca, cb, out):
        n = add.shape[0]
        for k in range(ca.shape[0]):
            row = pmask[cb[k]]
            for ii in range(moff[ca[k]], moff[ca[k] + 1]):
                t = add[neg[mflat[ii]]]
                for z in range(n):
                    if not out[k, z] and row[t[z]]:
                        out[k, z] = True

    def combo_sumsets_numba(add, neg, pmask, moff, mflat, ca, cb):
        n = add.shape[0]
        out = np.zeros((len(ca), n), dtype=np.bool_)
        _combo_sumsets_nb(add, neg, pmask, moff, mflat, ca, cb, out)
        return out


_IMPLS = {
    "numpy": {
        "hull_fill": hull_fill_numpy,
        "bfs_components": bfs_components_numpy,
        "canonical_generators": canonical_generators_numpy,
        "combo_sumsets": combo_sumsets_numpy,
    },
}
if BACKEND == "numba":
    _IMPLS["numba"] = {
        "hull_fill": hull_fill_numba,
        "bfs_components": bfs_components_numba,
        "canonical_generators": canonical_generators_numba,
        "combo_sumsets": combo_sumsets_numba,
    }


def impl(name, backend=None):
    """Fetch a kernel by name, optionally pinning the backend (for the bench)."""
    return _IMPLS[backend or BACKEND][name]


hull_fill = impl("hull_fill")
bfs_components = impl("bfs_components")
canonical_generators = impl("canonical_generators")
combo_sumsets = impl("combo_sumsets")
