"""Exhaustive and randomized generation of small seminearrings, with canonical forms."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .core import FLAGS, FiniteSeminearring, classify, make_seminearring
from .tables import OpTable

MAX_EXHAUSTIVE_ORDER = 5

Predicate = Callable[[FiniteSeminearring], bool]


@dataclass(frozen=True)
class EnumSpec:
    order: int
    up_to_iso: bool = False
    filters: tuple[str, ...] = ()
    limit: int | None = None

    def __post_init__(self):
        if not isinstance(self.order, int) or not 1 <= self.order <= MAX_EXHAUSTIVE_ORDER:
            raise ValueError(f"order must be in 1..{MAX_EXHAUSTIVE_ORDER}, got {self.order!r}")
        unknown = [f for f in self.filters if f not in FLAGS]
        if unknown:
            raise ValueError(f"unknown filter flags: {unknown}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be non-negative")
        object.__setattr__(self, "filters", tuple(self.filters))


def _check_order(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise ValueError(f"order must be in 1..{MAX_EXHAUSTIVE_ORDER}, got {n!r}")


def _assoc_ok(t: list[int], n: int, pos: int) -> bool:
    """Check every associativity triple touching cell ``pos`` whose cells are all filled.

    Cells are filled in row-major order, so a cell is known iff its index <= pos.
    """
    i, j = divmod(pos, n)

    def triple(x, y, z):
        xy, yz = x * n + y, y * n + z
        if xy > pos or yz > pos:
            return True
        left, right = t[xy] * n + z, x * n + t[yz]
        if left > pos or right > pos:
            return True
        return t[left] == t[right]

    for z in range(n):  # cell as x o y
        if not triple(i, j, z):
            return False
    for x in range(n):  # cell as y o z
        if not triple(x, i, j):
            return False
    for q in range(pos + 1):
        if t[q] == i:  # cell as (x o y) o z
            x, y = divmod(q, n)
            if not triple(x, y, j):
                return False
        if t[q] == j:  # cell as x o (y o z)
            y, z = divmod(q, n)
            if not triple(i, y, z):
                return False
    return True


def _semigroup_search(n: int, choose: Callable[[int], Sequence[int]]) -> Iterator[list[int]]:
    t = [-1] * (n * n)

    def rec(pos: int):
        if pos == n * n:
            yield list(t)
            return
        for v in choose(pos):
            t[pos] = v
            if _assoc_ok(t, n, pos):
                yield from rec(pos + 1)
        t[pos] = -1

    yield from rec(0)


def enumerate_semigroups(n: int) -> Iterator[OpTable]:
    """All associative tables on n labeled elements, in lexicographic order."""
    _check_order(n)
    values = list(range(n))
    for flat in _semigroup_search(n, lambda pos: values):
        yield OpTable(np.array(flat).reshape(n, n))


@lru_cache(maxsize=8)
def semigroup_tables(n: int) -> np.ndarray:
    """Stacked (k, n, n) array of every associative table of order n."""
    return np.array([t.entries for t in enumerate_semigroups(n)], dtype=np.int64)


def random_semigroup(n: int, rng: random.Random, max_nodes: int = 300) -> OpTable:
    """A random associative table (depth-first search with shuffled values; not uniform)."""
    if n < 1:
        raise ValueError("order must be positive")
    while True:
        budget = [max_nodes]

        def choose(pos):
            budget[0] -= 1
            if budget[0] < 0:
                return []
            vals = list(range(n))
            rng.shuffle(vals)
            return vals

        for flat in _semigroup_search(n, choose):
            return OpTable(np.array(flat).reshape(n, n))


def additive_endomorphisms(add: OpTable) -> list[tuple[int, ...]]:
    """All maps f with f(i + j) = f(i) + f(j), as value tuples, in lexicographic order."""
    n = add.order
    a = add.entries
    maps = np.array(list(product(range(n), repeat=n)), dtype=np.int64)
    lhs = maps[:, a]                               # f(i + j)
    rhs = a[maps[:, :, None], maps[:, None, :]]    # f(i) + f(j)
    ok = (lhs == rhs).all(axis=(1, 2))
    return [tuple(m) for m in maps[ok].tolist()]


def right_distributive_multiplications(add: OpTable) -> Iterator[OpTable]:
    """Every associative mul table right-distributing over ``add``.

    Right distributivity says each column x -> x k is an additive endomorphism,
    so columns are drawn from End(S, +) and pruned by associativity
    (x y) z = x (y z), i.e. col_z o col_y = col_{y z}.
    """
    n = add.order
    ends = additive_endomorphisms(add)
    cols: list[tuple[int, ...] | None] = [None] * n

    def consistent(k: int) -> bool:
        for y in range(k + 1):
            for z in range(k + 1):
                if y != k and z != k:
                    continue
                cy, cz = cols[y], cols[z]
                w = cz[y]
                cw = cols[w]
                if cw is None:
                    continue
                if any(cz[cy[x]] != cw[x] for x in range(n)):
                    return False
        # previously placed pairs whose product column just became known
        for y in range(k):
            for z in range(k):
                if cols[z][y] == k:
                    cy, cz, cw = cols[y], cols[z], cols[k]
                    if any(cz[cy[x]] != cw[x] for x in range(n)):
                        return False
        return True

    def rec(k: int):
        if k == n:
            yield OpTable(np.array(cols).T)
            return
        for f in ends:
            cols[k] = f
            if consistent(k):
                yield from rec(k + 1)
        cols[k] = None

    yield from rec(0)


def _passes(S: FiniteSeminearring, filters: Sequence[str]) -> bool:
    if not filters:
        return True
    c = classify(S)
    return all(getattr(c, f) for f in filters)


def enumerate_seminearrings(spec: EnumSpec) -> Iterator[FiniteSeminearring]:
    n = spec.order
    seen: set[bytes] = set()
    emitted = 0
    if spec.limit == 0:
        return
    for add in enumerate_semigroups(n):
        for mul in right_distributive_multiplications(add):
            S = make_seminearring(add, mul)
            if spec.up_to_iso:
                key = canonical_form(S)
                if key in seen:
                    continue
                seen.add(key)
            if not _passes(S, spec.filters):
                continue
            yield S
            emitted += 1
            if spec.limit is not None and emitted >= spec.limit:
                return


def relabel(S: FiniteSeminearring, perm: Sequence[int]) -> FiniteSeminearring:
    """Image of S under the bijection i -> perm[i]."""
    pi = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(pi)

    def move(t: OpTable) -> OpTable:
        return OpTable(pi[t.entries[np.ix_(inv, inv)]])

    names = tuple(S.names[i] for i in inv) if S.names else None
    return FiniteSeminearring(move(S.add), move(S.mul), names)


@lru_cache(maxsize=8)
def _perm_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    return perms, np.argsort(perms, axis=1)


def canonical_form(S: FiniteSeminearring) -> bytes:
    """Least serialization of (add, mul) over all relabelings; equal iff isomorphic."""
    n = S.order
    perms, invs = _perm_arrays(n)
    rows = invs[:, :, None]
    cols = invs[:, None, :]
    add = np.take_along_axis(perms, S.add.entries[rows, cols].reshape(len(perms), -1), axis=1)
    mul = np.take_along_axis(perms, S.mul.entries[rows, cols].reshape(len(perms), -1), axis=1)
    images = np.concatenate([add, mul], axis=1)
    best = images[np.lexsort(images.T[::-1])[0]]
    return bytes([n]) + bytes(best.astype(np.uint8).tolist())


def random_seminearrings(n: int, count: int, seed: int = 0) -> Iterator[FiniteSeminearring]:
    """Random labeled seminearrings of order n (labeled non-uniform).

    Draws an associative addition from the full list of order-n semigroup tables,
    then a multiplication uniformly among the associative tables that right-distribute over it.
    """
    rng = np.random.default_rng(seed)
    tables = semigroup_tables(n)
    compatible: dict[int, np.ndarray] = {}
    produced = 0
    while produced < count:
        ai = int(rng.integers(len(tables)))
        if ai not in compatible:
            a = tables[ai]
            m = tables
            lhs = m[:, a, :]
            rhs = a[m[:, :, None, :], m[:, None, :, :]]
            compatible[ai] = np.flatnonzero((lhs == rhs).all(axis=(1, 2, 3)))
        choices = compatible[ai]
        mi = int(choices[rng.integers(len(choices))])
        yield make_seminearring(OpTable(tables[ai]), OpTable(tables[mi]))
        produced += 1


def search_counterexamples(
    spec: EnumSpec,
    hypothesis: Predicate,
    conclusion: Predicate,
    extra: Iterable[FiniteSeminearring] = (),
) -> list[FiniteSeminearring]:
    """Structures satisfying ``hypothesis`` but not ``conclusion``; ``extra`` is searched first."""
    found: list[FiniteSeminearring] = []
    stream = enumerate_seminearrings(EnumSpec(spec.order, spec.up_to_iso, spec.filters))
    for S in _chain(extra, stream):
        if hypothesis(S) and not conclusion(S):
            found.append(S)
            if spec.limit is not None and len(found) >= spec.limit:
                break
    return found


def _chain(*streams):
    for s in streams:
        yield from s
