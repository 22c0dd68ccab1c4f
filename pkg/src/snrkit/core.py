"""Finite seminearrings (right distributive) and their classification predicates."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import greens as gr
from .tables import (
    Check,
    OpTable,
    TableError,
    idempotents,
    is_associative,
    is_right_distributive,
)


class AxiomError(TableError):
    """A pair of tables fails the seminearring axioms."""


class NotGLCRError(ValueError):
    """An operation needing a GLCR seminearring was called on one that is not."""


@dataclass(frozen=True, eq=False)
class FiniteSeminearring:
    add: OpTable
    mul: OpTable
    names: tuple[str, ...] | None = None
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.add.order

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    @cached_property
    def greens(self) -> gr.GreensData:
        """Green's relations of the additive reduct."""
        return gr.greens_relations(self.add)

    def h_class(self, a: int) -> tuple[int, ...]:
        return self.greens.class_of("H", a)

    def key(self) -> bytes:
        return self.add.entries.tobytes() + self.mul.entries.tobytes()

    def __eq__(self, other):
        return isinstance(other, FiniteSeminearring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def make_seminearring(add: OpTable, mul: OpTable, names: Sequence[str] | None = None) -> FiniteSeminearring:
    if add.order != mul.order:
        raise AxiomError(f"order mismatch: add {add.order}, mul {mul.order}")
    if names is not None:
        names = tuple(names)
        if len(names) != add.order or len(set(names)) != len(names):
            raise AxiomError("names must be distinct and one per element")
    for label, check in (
        ("add is not associative", is_associative(add)),
        ("mul is not associative", is_associative(mul)),
        ("right distributivity fails", is_right_distributive(add, mul)),
    ):
        if not check:
            raise AxiomError(f"{label}: witness {check.witness.elements}", check.witness)
    return FiniteSeminearring(add, mul, names)


def additive_idempotents(S: FiniteSeminearring) -> frozenset[int]:
    return idempotents(S.add)


def weak_commuting_inverses(S: FiniteSeminearring, a: int) -> frozenset[int]:
    """{x : a + x + a = a and a + x = x + a}."""
    p = S.add.entries
    xs = np.arange(S.order)
    ok = (p[p[a, xs], a] == a) & (p[a, xs] == p[xs, a])
    return frozenset(int(x) for x in np.flatnonzero(ok))


def _memo(S: FiniteSeminearring, key, fn):
    if key not in S._memo:
        S._memo[key] = fn()
    return S._memo[key]


def additively_completely_regular(S: FiniteSeminearring) -> Check:
    return _memo(S, "add_cr", lambda: gr.completely_regular_check(S.add))


def class_zero(S: FiniteSeminearring, a: int) -> int:
    """The additive identity of the group H+_a."""
    h = S.h_class(a)
    p = S.add.entries
    zeros = [e for e in h if p[e, e] == e]
    if len(zeros) != 1 or not gr._is_group(S.add, h):
        raise ValueError(f"H+ class of {S.name(a)} is not a group")
    return zeros[0]


def star(S: FiniteSeminearring, a: int) -> int:
    """The element a* of H+_a: a + a* + a = a, a + a* = a* + a, (a + a*)a = a + a*."""
    if not is_glcr(S):
        raise NotGLCRError("a* is only defined in a GLCR seminearring")
    p, m = S.add.entries, S.mul.entries
    zero = class_zero(S, a)
    inv = [y for y in S.h_class(a) if p[a, y] == zero and p[y, a] == zero]
    if len(inv) != 1:
        raise AssertionError(f"no unique additive inverse of {S.name(a)} in its H+ class")
    y = inv[0]
    matching = [
        x for x in S.h_class(a)
        if p[p[a, x], a] == a and p[a, x] == p[x, a] and m[p[a, x], a] == p[a, x]
    ]
    if matching != [y]:
        raise AssertionError(
            f"a* identities fail at {S.name(a)}: group inverse {y}, identity solutions {matching}"
        )
    return y


def _completely_regular_side(S: FiniteSeminearring, left: bool) -> Check:
    cr = additively_completely_regular(S)
    if not cr:
        return Check(False, cr.witness)
    p, m = S.add.entries, S.mul.entries
    for a in range(S.order):
        found = False
        for x in sorted(weak_commuting_inverses(S, a)):
            s = p[a, x]
            prod = m[s, a] if left else m[a, s]
            if prod == s:
                found = True
                break
        if not found:
            return Check(False, (a,))
    return Check(True)


def is_glcr(S: FiniteSeminearring) -> Check:
    """Additively completely regular with (a + x_a)a = a + x_a for some x_a."""
    return _memo(S, "glcr", lambda: _completely_regular_side(S, left=True))


def is_grcr(S: FiniteSeminearring) -> Check:
    """Additively completely regular with a(a + x_a) = a + x_a for some x_a."""
    return _memo(S, "grcr", lambda: _completely_regular_side(S, left=False))


def _j_condition(S: FiniteSeminearring) -> Check:
    m = S.mul.entries
    j = S.greens.j_class
    for b in range(S.order):
        for e in sorted(additive_idempotents(S)):
            if j[m[b, e]] != j[m[e, b]]:
                return Check(False, (b, e))
    return Check(True)


def is_lcr(S: FiniteSeminearring) -> Check:
    base = is_glcr(S)
    if not base:
        return base
    return _j_condition(S)


def is_rcr(S: FiniteSeminearring) -> Check:
    base = is_grcr(S)
    if not base:
        return base
    return _j_condition(S)


FLAGS = (
    "additively_regular",
    "additively_inverse",
    "additively_completely_regular",
    "additively_clifford",
    "multiplicatively_regular",
    "multiplicatively_inverse",
    "multiplicatively_completely_regular",
    "multiplicatively_clifford",
    "glcr",
    "grcr",
    "lcr",
    "rcr",
)


@dataclass(frozen=True)
class Classification:
    additively_regular: bool
    additively_inverse: bool
    additively_completely_regular: bool
    additively_clifford: bool
    multiplicatively_regular: bool
    multiplicatively_inverse: bool
    multiplicatively_completely_regular: bool
    multiplicatively_clifford: bool
    glcr: bool
    grcr: bool
    lcr: bool
    rcr: bool
    witnesses: dict

    def flags(self) -> dict[str, bool]:
        return {f: getattr(self, f) for f in FLAGS}


def _reduct_checks(t: OpTable) -> dict[str, Check]:
    regular = gr.is_regular_semigroup(t)
    commute = gr.idempotents_commute(t)
    cr = gr.completely_regular_check(t)
    return {
        "regular": regular,
        "inverse": regular if not regular else commute,
        "completely_regular": cr,
        "clifford": cr if not cr else commute,
    }


def classify(S: FiniteSeminearring) -> Classification:
    def compute():
        checks: dict[str, Check] = {}
        for prefix, t in (("additively", S.add), ("multiplicatively", S.mul)):
            for k, c in _reduct_checks(t).items():
                checks[f"{prefix}_{k}"] = c
        checks["glcr"] = is_glcr(S)
        checks["grcr"] = is_grcr(S)
        checks["lcr"] = is_lcr(S)
        checks["rcr"] = is_rcr(S)
        witnesses = {f: tuple(checks[f].witness) for f in FLAGS if not checks[f]}
        return Classification(**{f: bool(checks[f]) for f in FLAGS}, witnesses=witnesses)

    return _memo(S, "classification", compute)
