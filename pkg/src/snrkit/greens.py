"""Green's relations of a finite semigroup and the regularity classes built on them."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tables import Check, OpTable, TableError, idempotents, is_associative

RELATIONS = ("L", "R", "H", "J")


def _check_element(t: OpTable, a: int) -> None:
    if not 0 <= a < t.order:
        raise IndexError(f"element {a} out of range for order {t.order}")


def _left_ideals(t: OpTable) -> np.ndarray:
    """Row a: membership vector of S^1 a."""
    n = t.order
    m = np.zeros((n, n), dtype=bool)
    m[np.arange(n)[None, :], t.entries] = True  # column a of the table lands in row a
    m[np.arange(n), np.arange(n)] = True
    return m


def _right_ideals(t: OpTable) -> np.ndarray:
    """Row a: membership vector of a S^1."""
    n = t.order
    m = np.zeros((n, n), dtype=bool)
    m[np.arange(n)[:, None], t.entries] = True
    m[np.arange(n), np.arange(n)] = True
    return m


def _two_sided_ideals(t: OpTable) -> np.ndarray:
    # reflexive-transitive closure of x -> s o x, x o s
    step = (_left_ideals(t) | _right_ideals(t)).astype(np.int64)
    reach = step > 0
    while True:
        nxt = (reach.astype(np.int64) @ step) > 0
        nxt |= reach
        if (nxt == reach).all():
            return reach
        reach = nxt


def principal_ideals(t: OpTable, a: int) -> tuple[frozenset, frozenset, frozenset]:
    """(S^1 a, a S^1, S^1 a S^1) as element sets."""
    _check_element(t, a)
    e = t.entries
    left = {a} | {int(x) for x in e[:, a]}
    right = {a} | {int(x) for x in e[a, :]}
    two = {a}
    frontier = [a]
    while frontier:
        x = frontier.pop()
        for y in np.concatenate([e[:, x], e[x, :]]).tolist():
            if y not in two:
                two.add(y)
                frontier.append(y)
    return frozenset(left), frozenset(right), frozenset(two)


def _partition(keys: list) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    ids: dict = {}
    cls: list[int] = []
    for k in keys:
        cls.append(ids.setdefault(k, len(ids)))
    members: list[list[int]] = [[] for _ in ids]
    for a, c in enumerate(cls):
        members[c].append(a)
    return tuple(cls), tuple(tuple(m) for m in members)


@dataclass(frozen=True)
class GreensData:
    order: int
    l_class: tuple[int, ...]
    r_class: tuple[int, ...]
    h_class: tuple[int, ...]
    j_class: tuple[int, ...]
    classes: dict

    def class_map(self, relation: str) -> tuple[int, ...]:
        return {"L": self.l_class, "R": self.r_class, "H": self.h_class, "J": self.j_class}[relation]

    def class_of(self, relation: str, a: int) -> tuple[int, ...]:
        return self.classes[relation][self.class_map(relation)[a]]

    def related(self, relation: str, a: int, b: int) -> bool:
        m = self.class_map(relation)
        return m[a] == m[b]


def greens_relations(t: OpTable) -> GreensData:
    if not is_associative(t):
        raise TableError("Green's relations need an associative table")
    left, right, two = _left_ideals(t), _right_ideals(t), _two_sided_ideals(t)
    l_keys = [row.tobytes() for row in left]
    r_keys = [row.tobytes() for row in right]
    l_class, l_members = _partition(l_keys)
    r_class, r_members = _partition(r_keys)
    h_class, h_members = _partition(list(zip(l_class, r_class)))
    j_class, j_members = _partition([row.tobytes() for row in two])
    return GreensData(
        order=t.order,
        l_class=l_class,
        r_class=r_class,
        h_class=h_class,
        j_class=j_class,
        classes={"L": l_members, "R": r_members, "H": h_members, "J": j_members},
    )


def _is_group(t: OpTable, members) -> bool:
    idx = np.asarray(sorted(members), dtype=np.int64)
    block = t.entries[np.ix_(idx, idx)]
    if not np.isin(block, idx).all():
        return False
    # a finite associative quasigroup is a group
    k = len(idx)
    return all(len(set(r)) == k for r in block.tolist()) and all(
        len(set(c)) == k for c in block.T.tolist()
    )


def is_group_h_class(t: OpTable, cls) -> bool:
    g = greens_relations(t)
    members = tuple(sorted(cls))
    if not members or g.class_of("H", members[0]) != members:
        raise ValueError(f"{members} is not an H-class")
    return _is_group(t, members)


def every_h_class_is_group(t: OpTable) -> bool:
    g = greens_relations(t)
    return all(_is_group(t, c) for c in g.classes["H"])


def _sandwich(t: OpTable) -> np.ndarray:
    """[a, x] -> a o x o a."""
    e = t.entries
    return e[e, np.arange(t.order)[:, None]]


def inner_inverses(t: OpTable, a: int) -> list[int]:
    """All x with a o x o a = a."""
    e = t.entries
    return [int(x) for x in np.flatnonzero(e[e[a, :], a] == a)]


def is_regular_semigroup(t: OpTable) -> Check:
    ok = (_sandwich(t) == np.arange(t.order)[:, None]).any(axis=1)
    if ok.all():
        return Check(True)
    return Check(False, (int(np.flatnonzero(~ok)[0]),))


def idempotents_commute(t: OpTable) -> Check:
    e = t.entries
    es = sorted(idempotents(t))
    for i, f in enumerate(es):
        for g in es[i + 1:]:
            if e[f, g] != e[g, f]:
                return Check(False, (f, g))
    return Check(True)


def is_inverse_semigroup(t: OpTable) -> bool:
    return bool(is_regular_semigroup(t)) and bool(idempotents_commute(t))


def completely_regular_check(t: OpTable) -> Check:
    e = t.entries
    # e == e.T compares a o x with x o a for each pair (a, x)
    ok = (_sandwich(t) == np.arange(t.order)[:, None]) & (e == e.T)
    good = ok.any(axis=1)
    if good.all():
        return Check(True)
    return Check(False, (int(np.flatnonzero(~good)[0]),))


def is_completely_regular_semigroup(t: OpTable) -> bool:
    return bool(completely_regular_check(t))


def is_clifford_semigroup(t: OpTable) -> bool:
    return is_completely_regular_semigroup(t) and bool(idempotents_commute(t))
