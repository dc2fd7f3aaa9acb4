"""Classification driver: from lattices to deduplicated self-dual codes.

A cell of the classification is a triple (k, n, lattice class).  For each
cell the driver walks a covering set of k-frames of the lattice, projects
each frame to a self-dual code, and deduplicates the projections up to
monomial equivalence.  Each surviving representative is verified to be
self-dual and to lift back (via the standard lifted-lattice construction)
to the lattice class it came from, so a bug anywhere in the pipeline
surfaces as a hard failure rather than a wrong count.

Cells are independent, which is what the process pool in the table
drivers exploits; results are merged in a fixed cell order so the output
is identical for any job count.
"""
from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass

from .codes import (
    BudgetExceededError,
    CodeType,
    ZkCode,
    allowed_length,
    brute_force_classify,
    code_type,
    is_self_dual,
)
from .equivalence import canonical_rows
from .kernels import howell_core
from .lattices import (
    E8,
    E8Z,
    ZN,
    LatticeClass,
    construction_a,
    identify_class,
    lattice_classes_for_length,
    standard_lattice,
)
from .frames import covering_frames, project_frame
from .ring_linalg import K_MAX, zk_matrix

STANDARD_MAX_N = 7
MAX_N = 9


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome for one cell: representatives and their type split."""

    k: int
    n: int
    lattice: LatticeClass
    representatives: tuple[ZkCode, ...]
    type_counts: tuple[int, int]
    timing: float

    @property
    def count(self) -> int:
        return len(self.representatives)

    def __post_init__(self) -> None:
        if sum(self.type_counts) != len(self.representatives):
            raise ValueError("type counts must sum to the class count")
        if self.type_counts[1] and (self.k % 2 or self.n % 8):
            raise ValueError("Type II codes need k even and length divisible by 8")


class _Deadline:
    """Wall-clock budget shared across one classify call."""

    def __init__(self, budget_seconds: float | None):
        self.limit = (
            None if budget_seconds is None else time.monotonic() + budget_seconds
        )

    def check(self) -> None:
        if self.limit is not None and time.monotonic() > self.limit:
            raise BudgetExceededError("classification budget exhausted")


def _empty_result(k: int, n: int, lattice: LatticeClass, t0: float) -> ClassificationResult:
    return ClassificationResult(k, n, lattice, (), (0, 0), time.monotonic() - t0)


def classify(
    k: int,
    n: int,
    lattice: LatticeClass,
    budget_seconds: float | None = None,
) -> ClassificationResult:
    """Classify self-dual Z_k-codes of length n arising from one lattice class.

    Raises BudgetExceededError when the budget runs out; partial work is
    never reported as a result.
    """
    if not 2 <= k <= K_MAX:
        raise ValueError(f"modulus must be in 2..{K_MAX}")
    if not 1 <= n <= MAX_N:
        raise ValueError(f"length must be in 1..{MAX_N}")
    if lattice.n != n:
        raise ValueError("lattice class length mismatch")
    t0 = time.monotonic()
    if not allowed_length(k, n):
        return _empty_result(k, n, lattice, t0)
    if lattice.tag == E8 and k % 2 == 1:
        # codes projected from an even unimodular lattice are Type II,
        # and Type II forces k even; no search needed
        return _empty_result(k, n, lattice, t0)
    deadline = _Deadline(budget_seconds)
    lat = standard_lattice(lattice)
    seen_raw: set[tuple] = set()
    classes: set[tuple] = set()
    for frame in covering_frames(lat, k):
        deadline.check()
        code = project_frame(lat, frame)
        raw = code.gen.entries
        if raw in seen_raw:
            continue
        seen_raw.add(raw)
        classes.add(canonical_rows(raw, k, n))
    reps = tuple(
        ZkCode(k, n, zk_matrix(k, rows, cols=n)) for rows in sorted(classes)
    )
    n_ii = 0
    for c in reps:
        assert is_self_dual(c), "projected representative is not self-dual"
        back = identify_class(construction_a(c))
        assert back == lattice, "representative lifts to a different lattice"
        if code_type(c) == CodeType.TYPE_II:
            n_ii += 1
    return ClassificationResult(
        k, n, lattice, reps, (len(reps) - n_ii, n_ii), time.monotonic() - t0
    )


def classify_length(
    k: int,
    n: int,
    budget_seconds: float | None = None,
) -> list[ClassificationResult]:
    """All cells of length n for one modulus, in table column order."""
    return [
        classify(k, n, cls, budget_seconds=budget_seconds)
        for cls in lattice_classes_for_length(n)
    ]


def _classify_cell(args) -> ClassificationResult:
    k, n, tag, budget_seconds = args
    return classify(k, n, LatticeClass(tag, n), budget_seconds=budget_seconds)


def run_cells(
    cells,
    jobs: int = 1,
    budget_seconds: float | None = None,
) -> list[ClassificationResult]:
    """Classify many (k, n, lattice tag) cells, optionally in parallel.

    The output order follows the input cell order regardless of jobs, so
    callers get byte-identical reports for any parallelism level.
    """
    work = [(k, n, tag, budget_seconds) for (k, n, tag) in cells]
    if jobs <= 1 or len(work) <= 1:
        return [_classify_cell(w) for w in work]
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(_classify_cell, work)


def cells_for_table_n4(k_min: int, k_max: int):
    """(k, 4, zn) cells for the length-4 modulus table."""
    return [(k, 4, ZN) for k in range(k_min, k_max + 1)]


def table_n4(
    k_min: int,
    k_max: int,
    jobs: int = 1,
    budget_seconds: float | None = None,
) -> dict[int, int]:
    """Number of length-4 classes per modulus over an inclusive range."""
    if k_min < 2:
        raise ValueError("moduli start at 2")
    results = run_cells(
        cells_for_table_n4(k_min, k_max), jobs=jobs, budget_seconds=budget_seconds
    )
    return {r.k: r.count for r in results}


def cells_for_table_small(k_max: int, max_n: int):
    """Cells for the small-length table: k = 2..k_max, n = 1..max_n."""
    out = []
    for k in range(2, k_max + 1):
        for n in range(1, max_n + 1):
            for cls in lattice_classes_for_length(n):
                out.append((k, n, cls.tag))
    return out


def length8_type_split(results) -> dict[int, tuple[int, int]]:
    """Per-modulus (Type I, Type II) totals over length-8 cells."""
    split: dict[int, list[int]] = {}
    for r in results:
        if r.n != 8:
            continue
        acc = split.setdefault(r.k, [0, 0])
        acc[0] += r.type_counts[0]
        acc[1] += r.type_counts[1]
    return {k: (v[0], v[1]) for k, v in sorted(split.items())}


def monitor_type_conjecture(split: dict[int, tuple[int, int]]) -> list[str]:
    """Check the expected Type I / Type II ordering at length 8.

    For even k >= 4 the Type I count is expected to exceed the Type II
    count strictly; at k = 2 the two are expected to tie.  Returns a list
    of violation messages (empty means every computed modulus conforms).
    """
    violations = []
    for k, (n_i, n_ii) in sorted(split.items()):
        if k % 2 == 1:
            continue
        if k == 2:
            if n_i != n_ii:
                violations.append(
                    f"length 8, k=2: expected Type I == Type II, got {n_i} vs {n_ii}"
                )
        elif not n_i > n_ii:
            violations.append(
                f"length 8, k={k}: expected Type I > Type II, got {n_i} vs {n_ii}"
            )
    return violations


def oracle_classify(k: int, n: int) -> list[ZkCode]:
    """Exhaustive reference classification (small parameters only).

    Independent of the frame pipeline: enumerates self-dual codes directly
    and deduplicates by full orbit minimum.
    """
    return brute_force_classify(k, n)


def _orbit_min(c: ZkCode) -> tuple:
    """Row-major minimum Howell form over the full monomial orbit.

    Exhaustive and key-compatible with the oracle's representatives, so it
    serves as a common class label when comparing the two routes.
    """
    k, n = c.k, c.n
    best = None
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            img = [
                [(signs[j] * row[perm[j]]) % k for j in range(n)]
                for row in c.gen.entries
            ]
            form = tuple(tuple(r) for r in howell_core(img, k, n))
            if best is None or form < best:
                best = form
    return best


def cross_check(k: int, n: int, budget_seconds: float | None = None) -> bool:
    """True when pipeline and exhaustive oracle agree exactly on a cell.

    Both routes are reduced to exhaustive orbit-minimum labels before
    comparing, so agreement means the same classes with no splits or
    merges, independent of either route's internal representative choice.
    """
    frame_side = []
    for cls in lattice_classes_for_length(n):
        frame_side.extend(classify(k, n, cls, budget_seconds=budget_seconds).representatives)
    oracle_side = oracle_classify(k, n)
    return sorted(_orbit_min(c) for c in frame_side) == sorted(
        _orbit_min(c) for c in oracle_side
    )
