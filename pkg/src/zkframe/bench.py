"""Backend benchmark: pure-Python kernels vs the compiled extension.

Run as `python -m zkframe.bench`.  Workloads mirror the hot paths of a
real classification run (echelon forms, orthogonality graphs, clique
search, norm-vector enumeration, membership filtering).  Inputs are
generated from a fixed seed, and each workload's outputs are checked for
agreement between backends before timing is reported.
"""
from __future__ import annotations

import random
import time

from . import _kernels_py
from .lattices import E8, LatticeClass, standard_lattice

try:
    from . import _kernels
except ImportError:
    _kernels = None

SEED = 20240917


def _workloads():
    rng = random.Random(SEED)
    mats = [
        [[rng.randrange(12) for _ in range(6)] for _ in range(6)]
        for _ in range(2000)
    ]

    def run_howell(mod):
        return [mod.howell_core([list(r) for r in m], 12, 6) for m in mats]

    e8 = standard_lattice(LatticeClass(E8, 8))
    raw = _kernels_py.norm_vectors(8, 4 * e8.scale)
    members = _kernels_py.filter_members(raw, e8._adj, e8._det)
    verts = sorted({v if v > tuple(-x for x in v) else tuple(-x for x in v) for v in members})

    def run_norms(mod):
        return mod.norm_vectors(8, 4 * e8.scale)

    def run_filter(mod):
        return mod.filter_members(raw, e8._adj, e8._det)

    def run_orth(mod):
        return mod.orth_bitsets(verts)

    # full frame search on the root system: every set of 8 pairwise
    # orthogonal root classes (sizes beyond the roots blow up the output,
    # so this is the largest clique workload that stays list-sized)
    roots = _kernels_py.filter_members(
        _kernels_py.norm_vectors(8, 2 * e8.scale), e8._adj, e8._det
    )
    root_verts = sorted(
        {v if v > tuple(-x for x in v) else tuple(-x for x in v) for v in roots}
    )
    root_adj = _kernels_py.orth_bitsets(root_verts)

    def run_cliques(mod):
        return mod.cliques_fixed_size(root_adj, 8)

    return [
        ("howell_core: 2000 6x6 over Z_12", run_howell),
        ("norm_vectors: rank 8, norm 16", run_norms),
        ("filter_members: rank-8 membership", run_filter),
        (f"orth_bitsets: {len(verts)} vectors", run_orth),
        (f"cliques_fixed_size: size 8 of {len(root_verts)}", run_cliques),
    ]


def _time(fn, mod) -> tuple[float, object]:
    best = None
    result = None
    for _ in range(3):
        t0 = time.perf_counter()
        result = fn(mod)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main() -> int:
    print(f"compiled backend available: {_kernels is not None}")
    print(f"{'workload':44s}  {'pure':>9s}  {'compiled':>9s}  {'speedup':>7s}")
    for name, fn in _workloads():
        t_py, r_py = _time(fn, _kernels_py)
        if _kernels is None:
            print(f"{name:44s}  {t_py:8.4f}s  {'-':>9s}  {'-':>7s}")
            continue
        t_c, r_c = _time(fn, _kernels)
        if r_py != r_c:
            raise AssertionError(f"backend outputs disagree on: {name}")
        print(f"{name:44s}  {t_py:8.4f}s  {t_c:8.4f}s  {t_py / t_c:6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
