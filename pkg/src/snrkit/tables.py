"""Cayley tables of finite binary operations and their pointwise axioms.

Convention: ``t.entries[i, j]`` is ``i o j`` with ``i`` the left operand.
Every witness is the lexicographically first violating tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

WITNESS_KINDS = (
    "associativity",
    "commutativity",
    "right-distributivity",
    "left-distributivity",
    "closure",
)


class TableError(ValueError):
    """Raised for malformed tables or tables violating a required axiom."""

    def __init__(self, message: str, witness: "Witness | None" = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Witness:
    kind: str
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")


class Check(NamedTuple):
    """A predicate outcome; truthy iff the property holds."""

    holds: bool
    witness: object = None

    def __bool__(self) -> bool:
        return bool(self.holds)


class OpTable:
    """Immutable n x n operation table over element indices ``0..n-1``."""

    __slots__ = ("_entries", "_key")

    def __init__(self, entries: np.ndarray):
        arr = np.array(entries, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise TableError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = tuple(int(x) for x in np.argwhere((arr < 0) | (arr >= n))[0])
            raise TableError(f"entry at {bad} out of range for order {n}")
        arr.setflags(write=False)
        self._entries = arr
        self._key = arr.tobytes()

    @property
    def order(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def __call__(self, i: int, j: int) -> int:
        return int(self._entries[i, j])

    def rows(self) -> list[list[int]]:
        return self._entries.tolist()

    def flat(self) -> list[int]:
        return self._entries.ravel().tolist()

    def restrict(self, elements: Sequence[int]) -> "OpTable":
        """Table of the operation restricted to ``elements``, reindexed locally.

        The subset must be closed; raises ``TableError`` with a closure witness otherwise.
        """
        idx = np.asarray(elements, dtype=np.int64)
        sub = self._entries[np.ix_(idx, idx)]
        local = np.full(self.order, -1, dtype=np.int64)
        local[idx] = np.arange(len(idx))
        out = local[sub]
        if (out < 0).any():
            i, j = np.argwhere(out < 0)[0]
            w = Witness("closure", (int(idx[i]), int(idx[j])))
            raise TableError(f"subset not closed: {w.elements}", w)
        return OpTable(out)

    def __eq__(self, other):
        return isinstance(other, OpTable) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"OpTable(order={self.order}, rows={self.rows()})"


def make_table(order: int, entries: Sequence) -> OpTable:
    """Build a table from a flat row-major list of ``order**2`` indices."""
    if not isinstance(order, (int, np.integer)) or order < 1:
        raise TableError(f"order must be a positive integer, got {order!r}")
    flat = np.asarray(entries, dtype=np.int64).ravel()
    if flat.size != order * order:
        raise TableError(f"expected {order * order} entries for order {order}, got {flat.size}")
    return OpTable(flat.reshape(order, order))


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in hits[0])


def is_associative(t: OpTable) -> Check:
    e = t.entries
    left = e[e, :]      # [i, j, k] -> (i o j) o k
    right = e[:, e]     # [i, j, k] -> i o (j o k)
    bad = _first(left != right)
    if bad is None:
        return Check(True)
    return Check(False, Witness("associativity", bad))


def is_commutative(t: OpTable) -> Check:
    e = t.entries
    bad = _first(np.triu(e != e.T))
    if bad is None:
        return Check(True)
    return Check(False, Witness("commutativity", bad))


def idempotents(t: OpTable) -> frozenset[int]:
    e = t.entries
    return frozenset(int(i) for i in np.flatnonzero(e[np.arange(t.order), np.arange(t.order)] == np.arange(t.order)))


def _same_order(add: OpTable, mul: OpTable) -> None:
    if add.order != mul.order:
        raise TableError(f"order mismatch: {add.order} vs {mul.order}")


def is_right_distributive(add: OpTable, mul: OpTable) -> Check:
    """(i+j)k = ik + jk for all i, j, k; witness is (i, j, k)."""
    _same_order(add, mul)
    a, m = add.entries, mul.entries
    lhs = m[a, :]                       # [i, j, k] -> (i+j)k
    rhs = a[m[:, None, :], m[None, :, :]]  # [i, j, k] -> ik + jk
    bad = _first(lhs != rhs)
    if bad is None:
        return Check(True)
    return Check(False, Witness("right-distributivity", bad))


def is_left_distributive(add: OpTable, mul: OpTable) -> Check:
    """k(i+j) = ki + kj for all k, i, j; witness is (k, i, j)."""
    _same_order(add, mul)
    a, m = add.entries, mul.entries
    lhs = m[:, a]                       # [k, i, j] -> k(i+j)
    rhs = a[m[:, :, None], m[:, None, :]]  # [k, i, j] -> ki + kj
    bad = _first(lhs != rhs)
    if bad is None:
        return Check(True)
    return Check(False, Witness("left-distributivity", bad))
