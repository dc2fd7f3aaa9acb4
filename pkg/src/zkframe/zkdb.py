"""Plain-text result database, format tag "zkdb v1".

Layout (UTF-8, LF line endings):

    # zkdb v1
    record k=<K> n=<N> lattice=<zn|e8|e8z> type=<I|II> index=<i>
    <one line per generator row: space-separated integers in [0, k-1]>
    end
    ...

One record per representative, rows in Howell form.  Records are sorted
by (k, n, lattice in table order zn < e8 < e8z, generator matrix), and
index counts 1-based within each (k, n, lattice) cell.  Writing is
deterministic, so export -> read -> export reproduces the file byte for
byte.  Files are written to a temporary path and renamed into place, so
a crash never leaves a truncated database behind.
"""
from __future__ import annotations

import json
import os
import re
import tempfile
from pathlib import Path

from .classify import ClassificationResult
from .codes import CodeType, code_from_rows, code_type, is_self_dual
from .lattices import E8, E8Z, ZN, LatticeClass
from .ring_linalg import K_MAX

HEADER = "# zkdb v1"
LATTICE_ORDER = {ZN: 0, E8: 1, E8Z: 2}

_RECORD_RE = re.compile(
    r"record k=(\d+) n=(\d+) lattice=(zn|e8|e8z) type=(I|II) index=(\d+)\Z"
)


class FormatError(ValueError):
    """Raised when a database file does not follow the format."""


def _cell_key(result) -> tuple[int, int, int]:
    return (result.k, result.n, LATTICE_ORDER[result.lattice.tag])


def render_db(results) -> str:
    """The database text for a list of ClassificationResults."""
    cells = sorted(results, key=_cell_key)
    keys = [_cell_key(r) for r in cells]
    if len(set(keys)) != len(keys):
        raise ValueError("duplicate (k, n, lattice) cell in results")
    lines = [HEADER]
    for r in cells:
        reps = sorted(r.representatives, key=lambda c: c.gen.entries)
        for i, c in enumerate(reps, start=1):
            tag = code_type(c)
            if tag == CodeType.NOT_SELF_DUAL:
                raise ValueError("refusing to export a non-self-dual code")
            lines.append(
                f"record k={r.k} n={r.n} lattice={r.lattice.tag} "
                f"type={tag.value} index={i}"
            )
            for row in c.gen.entries:
                lines.append(" ".join(str(x) for x in row))
            lines.append("end")
    return "\n".join(lines) + "\n"


def export_db(results, destination) -> None:
    """Write results to a database file (atomic replace on completion)."""
    _atomic_write(Path(destination), render_db(results))


def export_json(results, destination) -> None:
    """JSON mirror of the database, for downstream tooling."""
    cells = sorted(results, key=_cell_key)
    payload = {
        "format": "zkdb-json v1",
        "cells": [
            {
                "k": r.k,
                "n": r.n,
                "lattice": r.lattice.tag,
                "count": r.count,
                "type_counts": list(r.type_counts),
                "representatives": [
                    [list(row) for row in c.gen.entries] for c in r.representatives
                ],
            }
            for r in cells
        ],
    }
    _atomic_write(Path(destination), json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=str(path.parent) or ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def parse_db(text: str):
    """Parse database text into ClassificationResults (timing zeroed).

    Raises FormatError on any structural violation: bad header, malformed
    record lines, out-of-range entries, wrong sort order, or index gaps.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    else:
        raise FormatError("missing trailing newline")
    if not lines or lines[0] != HEADER:
        raise FormatError("missing 'zkdb v1' header")
    records = []
    i = 1
    while i < len(lines):
        m = _RECORD_RE.match(lines[i])
        if not m:
            raise FormatError(f"line {i + 1}: expected a record header")
        k, n = int(m.group(1)), int(m.group(2))
        tag, typ, index = m.group(3), m.group(4), int(m.group(5))
        if not 2 <= k <= K_MAX:
            raise FormatError(f"line {i + 1}: modulus out of range")
        if not 1 <= n <= 9:
            raise FormatError(f"line {i + 1}: length out of range")
        i += 1
        rows = []
        while i < len(lines) and lines[i] != "end":
            try:
                row = tuple(int(x) for x in lines[i].split())
            except ValueError as exc:
                raise FormatError(f"line {i + 1}: non-integer entry") from exc
            if len(row) != n or any(not 0 <= x < k for x in row):
                raise FormatError(f"line {i + 1}: bad generator row")
            rows.append(row)
            i += 1
        if i == len(lines):
            raise FormatError("record not terminated by 'end'")
        if len(rows) > n:
            raise FormatError("more generator rows than the length allows")
        i += 1
        records.append((k, n, tag, typ, index, tuple(rows)))

    results = []
    prev_key = None
    cell: list = []

    def flush() -> None:
        if not cell:
            return
        k, n, tag = prev_key
        reps = []
        n_ii = 0
        for idx, (want, typ, rows) in enumerate(cell, start=1):
            if want != idx:
                raise FormatError(f"cell k={k} n={n} {tag}: index gap at {want}")
            # reduce to the canonical generators; a file whose literal rows
            # were not already canonical is caught by check_db's rendering
            # comparison, not treated as a parse failure
            reps.append(code_from_rows(k, n, rows))
            n_ii += typ == "II"
        if [c.gen.entries for c in reps] != sorted(c.gen.entries for c in reps):
            raise FormatError(f"cell k={k} n={n} {tag}: representatives out of order")
        try:
            results.append(
                ClassificationResult(
                    k,
                    n,
                    LatticeClass(tag, n),
                    tuple(reps),
                    (len(reps) - n_ii, n_ii),
                    0.0,
                )
            )
        except ValueError as exc:
            raise FormatError(str(exc)) from exc

    for k, n, tag, typ, index, rows in records:
        key = (k, n, tag)
        if key != prev_key:
            if prev_key is not None and (
                (k, n, LATTICE_ORDER[tag]) <= (prev_key[0], prev_key[1], LATTICE_ORDER[prev_key[2]])
            ):
                raise FormatError("records out of sort order")
            flush()
            prev_key = key
            cell = []
        cell.append((index, typ, rows))
    flush()
    return results


def read_db(source):
    """Load a database file written by export_db."""
    text = Path(source).read_text(encoding="utf-8")
    return parse_db(text)


def check_db(source) -> list[str]:
    """Verify a database file; returns a list of problems (empty = good).

    Beyond re-parsing, every stored code must be self-dual, carry the type
    its entries actually have, and the file must be byte-identical to the
    canonical rendering of its own contents (which forces Howell-form rows);
    a file that fails any of these was not produced by a healthy export.
    """
    try:
        text = Path(source).read_text(encoding="utf-8")
        results = parse_db(text)
    except (FormatError, OSError) as exc:
        return [f"unreadable: {exc}"]
    problems = []
    for r in results:
        n_ii = 0
        for i, c in enumerate(r.representatives, start=1):
            where = f"k={r.k} n={r.n} {r.lattice.tag} index={i}"
            if not is_self_dual(c):
                problems.append(f"{where}: code is not self-dual")
            n_ii += code_type(c) == CodeType.TYPE_II
        if r.type_counts != (r.count - n_ii, n_ii):
            problems.append(
                f"k={r.k} n={r.n} {r.lattice.tag}: stored type tags disagree "
                f"with the codes"
            )
    try:
        if render_db(results) != text:
            problems.append("file is not the canonical rendering of its contents")
    except ValueError:
        pass  # rendering refused; the cause is already reported above
    return problems
