"""Statement-by-statement evaluation of the union-of-near-rings structure theorems.

Each report evaluates every statement literally on one finite instance and
records whether they agree. Statements about a union of near-rings are
decided on the H+ decomposition, since any decomposition of a GLCR
seminearring into near-rings is the H+ partition.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import greens as gr
from .core import FiniteSeminearring, NotGLCRError, is_glcr, is_grcr, star
from .decompose import h_plus_decomposition
from .tables import Check

THEOREM_IDS = (
    "mult_reg",
    "mult_reg_zs",
    "mult_inv",
    "mult_inv_zs",
    "compl_reg",
    "compl_reg_zs",
    "clifford",
)


@dataclass(frozen=True)
class Statement:
    label: str
    holds: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    statements: tuple[Statement, ...]

    @property
    def equivalent(self) -> bool:
        return len({s.holds for s in self.statements}) <= 1


def condition_A(S: FiniteSeminearring, a: int) -> int | None:
    """Least b with aba = a, bab = b and (a + a*)b, b(a + a*) in H+ of ba."""
    if not is_glcr(S):
        raise NotGLCRError("condition A needs a GLCR seminearring")
    m, p = S.mul.entries, S.add.entries
    h = np.asarray(S.greens.h_class)
    z = p[a, star(S, a)]
    bs = np.arange(S.order)
    target = h[m[bs, a]]
    ok = (
        (m[m[a, bs], a] == a)
        & (m[m[bs, a], bs] == bs)
        & (h[m[z, bs]] == target)
        & (h[m[bs, z]] == target)
    )
    hits = np.flatnonzero(ok)
    return int(hits[0]) if len(hits) else None


def _check(ok: bool, witness=None) -> Check:
    return Check(True) if ok else Check(False, tuple(witness) if witness is not None else None)


def _one_sided(S: FiniteSeminearring, zero_symmetric: bool) -> Check:
    g = is_glcr(S)
    if not g:
        return g
    if zero_symmetric:
        r = is_grcr(S)
        if not r:
            return r
    return Check(True)


def _stmt(label: str, check: Check) -> Statement:
    w = check.witness
    return Statement(label, bool(check), tuple(w) if w is not None else None)


def _every_class(S: FiniteSeminearring, flags: tuple[str, ...]) -> Check:
    for comp in h_plus_decomposition(S):
        if not comp.is_near_ring:
            return _check(False, comp.failure_witness)
        for f in flags:
            if not getattr(comp.flags, f):
                return _check(False, comp.flags.witnesses[f])
    return Check(True)


def _union_of(S: FiniteSeminearring, flags: tuple[str, ...]) -> Check:
    comps = h_plus_decomposition(S)
    covered = sorted(x for c in comps for x in c.elements)
    if covered != list(range(S.order)):
        raise AssertionError("H+ classes do not partition the carrier")
    bad = [c for c in comps if not c.is_near_ring]
    if bad:
        return _check(False, bad[0].failure_witness)
    for f in flags:
        for c in comps:
            if not getattr(c.flags, f):
                return _check(False, c.flags.witnesses[f])
    return Check(True)


def _adjective(kind: str, zero_symmetric: bool) -> str:
    return f"zero-symmetric {kind}" if zero_symmetric else kind


def _head(zero_symmetric: bool) -> str:
    return "GLCR and GRCR" if zero_symmetric else "GLCR"


def verify_mult_reg(S: FiniteSeminearring, zero_symmetric: bool = False) -> TheoremReport:
    base = _one_sided(S, zero_symmetric)
    if base:
        missing = [a for a in range(S.order) if condition_A(S, a) is None]
        first = _check(not missing, missing[:1])
    else:
        first = base
    flags = ("regular", "zero_symmetric") if zero_symmetric else ("regular",)
    adj = _adjective("regular", zero_symmetric)
    return TheoremReport(
        "mult_reg_zs" if zero_symmetric else "mult_reg",
        (
            _stmt(f"(1) {_head(zero_symmetric)} with condition A at every element", first),
            _stmt(f"(2) every H+-class is a {adj} near-ring", _every_class(S, flags)),
            _stmt(f"(3) union of {adj} near-rings", _union_of(S, flags)),
        ),
    )


def _reduct_theorem(S, theorem_id, zero_symmetric, kind, flag, reduct_check) -> TheoremReport:
    base = _one_sided(S, zero_symmetric)
    first = base if not base else reduct_check(S.mul)
    flags = (flag, "zero_symmetric") if zero_symmetric else (flag,)
    adj = _adjective(kind, zero_symmetric)
    return TheoremReport(
        theorem_id + ("_zs" if zero_symmetric else ""),
        (
            _stmt(f"(1) {_head(zero_symmetric)} and multiplicatively {kind}", first),
            _stmt(f"(2) every H+-class is a {adj} near-ring", _every_class(S, flags)),
            _stmt(f"(3) union of {adj} near-rings", _union_of(S, flags)),
        ),
    )


def _inverse_check(t) -> Check:
    reg = gr.is_regular_semigroup(t)
    return reg if not reg else gr.idempotents_commute(t)


def _clifford_check(t) -> Check:
    cr = gr.completely_regular_check(t)
    return cr if not cr else gr.idempotents_commute(t)


def verify_mult_inverse(S: FiniteSeminearring, zero_symmetric: bool = False) -> TheoremReport:
    return _reduct_theorem(S, "mult_inv", zero_symmetric, "inverse", "inverse", _inverse_check)


def verify_compl_reg(S: FiniteSeminearring, zero_symmetric: bool = False) -> TheoremReport:
    return _reduct_theorem(
        S, "compl_reg", zero_symmetric, "completely regular", "completely_regular",
        gr.completely_regular_check,
    )


def verify_clifford(S: FiniteSeminearring) -> TheoremReport:
    glcr = _one_sided(S, False)
    both = _one_sided(S, True)
    return TheoremReport(
        "clifford",
        (
            _stmt("(1) GLCR and multiplicatively Clifford",
                  glcr if not glcr else _clifford_check(S.mul)),
            _stmt("(2) GLCR, GRCR and multiplicatively Clifford",
                  both if not both else _clifford_check(S.mul)),
            _stmt("(3) every H+-class is a Clifford near-ring", _every_class(S, ("clifford",))),
            _stmt("(4) union of Clifford near-rings", _union_of(S, ("clifford",))),
        ),
    )


def verify_all(S: FiniteSeminearring) -> list[TheoremReport]:
    return [
        verify_mult_reg(S),
        verify_mult_reg(S, zero_symmetric=True),
        verify_mult_inverse(S),
        verify_mult_inverse(S, zero_symmetric=True),
        verify_compl_reg(S),
        verify_compl_reg(S, zero_symmetric=True),
        verify_clifford(S),
    ]
