"""Benchmark the numba kernels against their pure-numpy fallbacks.

    python -m ringlab.bench [--ring catalog:t3:2] [--repeat 3] [--big]

Times the four hot kernels (unimodular-hull fill, orbit BFS, canonical
generator scan, ideal sumsets) on the same inputs under both backends.
--big adds the order-729 ring, the case the numba path exists for.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from . import _backend
from .catalog import catalog_build
from .cli import load_ring
from .orbits import gl2_generators
from .pairs import free_mask, principal_membership, uni_mask


def _kernel_inputs(R):
    n = R.order
    um = uni_mask(R)
    ua, ub = (x.astype(np.int64) for x in np.nonzero(um))
    gens = np.array(gl2_generators(R), dtype=np.int32)
    mask = free_mask(R).ravel()
    rank = R.label_rank
    rank_key = (rank[:, None] * n + rank[None, :]).ravel()

    pm = principal_membership(R)
    reps, pc = np.unique(pm, axis=0, return_inverse=True)
    pc = pc.ravel()
    lo = np.minimum(pc[:, None], pc[None, :])
    hi = np.maximum(pc[:, None], pc[None, :])
    keys = np.unique((lo * len(reps) + hi)[free_mask(R)])
    ca = (keys // len(reps)).astype(np.int64)
    cb = (keys % len(reps)).astype(np.int64)
    counts = reps.sum(axis=1)
    moff = np.zeros(len(reps) + 1, dtype=np.int64)
    moff[1:] = np.cumsum(counts)
    mflat = np.concatenate([np.flatnonzero(reps[c]) for c in range(len(reps))]).astype(np.int64)

    return {
        "hull_fill": (R.mul_table, ua, ub),
        "bfs_components": (R.add_table, R.mul_table, gens, mask),
        "canonical_generators": (R.mul_table, mask, rank_key),
        "combo_sumsets": (R.add_table, R.neg_table, reps, moff, mflat, ca, cb),
    }


def _call(name, backend, inputs):
    fn = _backend.impl(name, backend)
    if name == "bfs_components":
        add, mul, gens, mask = inputs
        comp = np.full(mask.size, -1, dtype=np.int64)
        return fn(add, mul, gens, mask, comp)
    return fn(*inputs)


def bench_ring(R, repeat: int, backends) -> list[tuple]:
    rows = []
    inputs = _kernel_inputs(R)
    for name, args in inputs.items():
        timings = {}
        for backend in backends:
            _call(name, backend, args)  # warm-up (jit compile, cache touch)
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                _call(name, backend, args)
                best = min(best, time.perf_counter() - t0)
            timings[backend] = best
        if "numba" in timings and "numpy" in timings:
            speedup = timings["numpy"] / timings["numba"]
        else:
            speedup = float("nan")
        rows.append((R.origin, name,
                     timings.get("numba", float("nan")),
                     timings.get("numpy", float("nan")),
                     speedup))
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="python -m ringlab.bench")
    parser.add_argument("--ring", action="append",
                        help="ring reference; repeatable (default: catalog:t3:2 "
                             "and catalog:ternions:3)")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--big", action="store_true",
                        help="also run the order-729 ring catalog:t3:3")
    args = parser.parse_args(argv)

    backends = ["numba", "numpy"] if "numba" in _backend._IMPLS else ["numpy"]
    refs = args.ring or ["catalog:t3:2", "catalog:ternions:3"]
    if args.big:
        refs.append("catalog:t3:3")

    print(f"active backend: {_backend.active_backend()}  "
          f"(RINGLAB_BACKEND overrides)")
    header = f"{'ring':<18} {'kernel':<22} {'numba':>10} {'numpy':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for ref in refs:
        R = load_ring(ref) if ":" in ref else catalog_build(ref, 2)
        for origin, name, tn, tp, speed in bench_ring(R, args.repeat, backends):
            print(f"{origin:<18} {name:<22} {tn:>9.4f}s {tp:>9.4f}s {speed:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
