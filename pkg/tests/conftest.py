"""Shared helpers: exhaustive span oracles used to validate normal forms."""
import itertools
import random

import pytest


def span_set(k: int, rows, n: int) -> frozenset:
    """Element set of the row span over Z_k, by exhaustive combination."""
    out = {tuple([0] * n)}
    for row in rows:
        new = set()
        for a in range(k):
            shifted = tuple((a * x) % k for x in row)
            for w in out:
                new.add(tuple((u + v) % k for u, v in zip(w, shifted)))
        out = new
    return frozenset(out)


def random_matrix(rng: random.Random, k: int, nrows: int, ncols: int):
    return [[rng.randrange(k) for _ in range(ncols)] for _ in range(nrows)]


def scramble_rows(rng: random.Random, k: int, rows, n: int):
    """Row operations that preserve the span: swaps, unit scalings, adds."""
    rows = [list(r) for r in rows]
    units = [u for u in range(1, k) if _gcd(u, k) == 1]
    for _ in range(12):
        op = rng.randrange(3)
        if not rows:
            break
        i = rng.randrange(len(rows))
        j = rng.randrange(len(rows))
        if op == 0 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif op == 1:
            u = rng.choice(units)
            rows[i] = [(u * x) % k for x in rows[i]]
        elif i != j:
            a = rng.randrange(k)
            rows[i] = [(x + a * y) % k for x, y in zip(rows[i], rows[j])]
    rows.append([0] * n)
    return rows


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@pytest.fixture
def rng():
    return random.Random(4105)


def all_vectors(k: int, n: int):
    return itertools.product(range(k), repeat=n)
