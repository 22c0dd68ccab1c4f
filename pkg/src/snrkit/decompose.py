"""H+-class decomposition of a seminearring into near-ring components."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import greens as gr
from .core import FiniteSeminearring
from .tables import Check, OpTable

FLAG_ORDER = ("regular", "inverse", "completely_regular", "clifford", "zero_symmetric")


@dataclass(frozen=True)
class NearRingFlags:
    regular: bool
    inverse: bool
    completely_regular: bool
    clifford: bool
    zero_symmetric: bool
    witnesses: dict

    def as_dict(self) -> dict[str, bool]:
        return {f: getattr(self, f) for f in FLAG_ORDER}


@dataclass(frozen=True)
class Component:
    """One H+-class; ``add``/``mul``/``zero`` use local indices into ``elements``."""

    elements: tuple[int, ...]
    is_near_ring: bool
    add: OpTable | None = None
    mul: OpTable | None = None
    zero: int | None = None
    flags: NearRingFlags | None = None
    failure_witness: tuple[int, ...] | None = None

    def has(self, flag: str) -> bool:
        return self.is_near_ring and bool(getattr(self.flags, flag))


def _closed(t: np.ndarray, idx: np.ndarray) -> tuple[int, int] | None:
    block = t[np.ix_(idx, idx)]
    outside = ~np.isin(block, idx)
    if outside.any():
        i, j = np.argwhere(outside)[0]
        return int(idx[i]), int(idx[j])
    return None


def is_near_ring(S: FiniteSeminearring, cls: Iterable[int]) -> Check:
    """Closed under both operations with (cls, +) a group.

    Witnesses are parent-index tuples: a non-closed pair, or the element
    blocking the group property.
    """
    idx = np.asarray(sorted(set(cls)), dtype=np.int64)
    if len(idx) == 0:
        return Check(False, ())
    for t in (S.add.entries, S.mul.entries):
        bad = _closed(t, idx)
        if bad is not None:
            return Check(False, bad)
    block = S.add.entries[np.ix_(idx, idx)]
    for i, row in enumerate(block.tolist()):
        if len(set(row)) != len(idx) or len(set(block[:, i].tolist())) != len(idx):
            return Check(False, (int(idx[i]),))
    return Check(True)


def near_ring_flags(S: FiniteSeminearring, cls: Iterable[int]) -> NearRingFlags:
    """Multiplicative regularity flags of a near-ring class; witnesses are parent indices."""
    elements = tuple(sorted(set(cls)))
    check = is_near_ring(S, elements)
    if not check:
        raise ValueError(f"class {elements} is not a near-ring (witness {check.witness})")
    add = S.add.restrict(elements)
    mul = S.mul.restrict(elements)
    glob = lambda local: tuple(elements[i] for i in local)  # noqa: E731
    witnesses: dict[str, tuple[int, ...]] = {}

    regular = gr.is_regular_semigroup(mul)
    commute = gr.idempotents_commute(mul)
    cr = gr.completely_regular_check(mul)
    inverse = bool(regular) and bool(commute)
    clifford = bool(cr) and bool(commute)
    if not regular:
        witnesses["regular"] = glob(regular.witness)
    if not inverse:
        witnesses["inverse"] = glob(regular.witness if not regular else commute.witness)
    if not cr:
        witnesses["completely_regular"] = glob(cr.witness)
    if not clifford:
        witnesses["clifford"] = glob(cr.witness if not cr else commute.witness)

    zero = _local_zero(add)
    m = mul.entries
    if (m[zero, :] != zero).any():
        # 0n = (0+0)n = 0n + 0n forces 0n = 0 in a right near-ring
        raise RuntimeError(f"left zero law fails in near-ring class {elements}")
    bad = np.flatnonzero(m[:, zero] != zero)
    zero_symmetric = len(bad) == 0
    if not zero_symmetric:
        witnesses["zero_symmetric"] = (elements[int(bad[0])],)

    return NearRingFlags(
        regular=bool(regular),
        inverse=inverse,
        completely_regular=bool(cr),
        clifford=clifford,
        zero_symmetric=zero_symmetric,
        witnesses=witnesses,
    )


def _local_zero(add: OpTable) -> int:
    e = add.entries
    return int(np.flatnonzero(e[np.arange(add.order), np.arange(add.order)] == np.arange(add.order))[0])


def analyse_class(S: FiniteSeminearring, cls: Iterable[int]) -> Component:
    elements = tuple(sorted(set(cls)))
    check = is_near_ring(S, elements)
    if not check:
        return Component(elements, False, failure_witness=tuple(check.witness))
    flags = near_ring_flags(S, elements)
    add = S.add.restrict(elements)
    failure = next((flags.witnesses[f] for f in FLAG_ORDER if f in flags.witnesses), None)
    return Component(
        elements=elements,
        is_near_ring=True,
        add=add,
        mul=S.mul.restrict(elements),
        zero=_local_zero(add),
        flags=flags,
        failure_witness=failure,
    )


def h_plus_decomposition(S: FiniteSeminearring) -> list[Component]:
    key = "components"
    if key not in S._memo:
        S._memo[key] = [analyse_class(S, c) for c in S.greens.classes["H"]]
    return S._memo[key]


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def near_ring_partitions(S: FiniteSeminearring, max_order: int = 6) -> Iterator[list[tuple[int, ...]]]:
    """Every partition of the carrier whose blocks are all near-rings (brute force)."""
    if S.order > max_order:
        raise ValueError(f"partition search limited to order <= {max_order}")
    cache: dict[tuple[int, ...], bool] = {}
    for part in _set_partitions(list(range(S.order))):
        blocks = sorted(tuple(sorted(b)) for b in part)
        ok = True
        for b in blocks:
            if b not in cache:
                cache[b] = bool(is_near_ring(S, b))
            if not cache[b]:
                ok = False
                break
        if ok:
            yield blocks
