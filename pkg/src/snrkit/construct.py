"""Builders: the two small worked seminearrings, 2x2 matrices over F_p, products and substructures."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

import numpy as np

from .core import FiniteSeminearring, make_seminearring
from .tables import OpTable, TableError, Witness, make_table

T_NAMES = ("u", "a", "b", "c")
T_ADD = [
    0, 1, 2, 3,
    1, 1, 1, 1,
    2, 2, 2, 2,
    3, 2, 1, 0,
]
L_NAMES = ("alpha", "beta")
L_ADD = [0, 1, 1, 1]


def _is_prime(p: int) -> bool:
    return isinstance(p, (int, np.integer)) and p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _left_zero(n: int) -> OpTable:
    return OpTable(np.repeat(np.arange(n)[:, None], n, axis=1))


def left_zero_T() -> FiniteSeminearring:
    """(T, +, *) on {u, a, b, c} with x * y = x."""
    return make_seminearring(make_table(4, T_ADD), _left_zero(4), T_NAMES)


def two_semilattice_L() -> FiniteSeminearring:
    """Two-element semilattice with x * y = x."""
    return make_seminearring(make_table(2, L_ADD), _left_zero(2), L_NAMES)


def prime_field(p: int) -> FiniteSeminearring:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = np.arange(p)
    return make_seminearring(
        OpTable((r[:, None] + r[None, :]) % p),
        OpTable((r[:, None] * r[None, :]) % p),
        tuple(str(i) for i in range(p)),
    )


@dataclass(frozen=True)
class MatrixRingSpec:
    p: int
    dim: int = 2

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.dim != 2:
            raise ValueError("only 2x2 matrices are supported")

    @property
    def size(self) -> int:
        return self.p**4


def matrix_entries(spec: MatrixRingSpec) -> np.ndarray:
    """Row i: the row-major entries (a, b, c, d) of matrix i; index 0 is the zero matrix."""
    return np.array(list(product(range(spec.p), repeat=4)), dtype=np.int64)


def matrix_index(spec: MatrixRingSpec, rows: Sequence[Sequence[int]]) -> int:
    (a, b), (c, d) = rows
    p = spec.p
    return ((a % p) * p**3) + ((b % p) * p**2) + ((c % p) * p) + (d % p)


def matrix_of(spec: MatrixRingSpec, index: int) -> list[list[int]]:
    a, b, c, d = matrix_entries(spec)[index].tolist()
    return [[a, b], [c, d]]


def matrix_ring(spec: MatrixRingSpec) -> FiniteSeminearring:
    p = spec.p
    m = matrix_entries(spec)
    weights = np.array([p**3, p**2, p, 1])
    add = ((m[:, None, :] + m[None, :, :]) % p) @ weights
    x, y = m[:, None, :], m[None, :, :]
    prod = np.stack(
        [
            x[..., 0] * y[..., 0] + x[..., 1] * y[..., 2],
            x[..., 0] * y[..., 1] + x[..., 1] * y[..., 3],
            x[..., 2] * y[..., 0] + x[..., 3] * y[..., 2],
            x[..., 2] * y[..., 1] + x[..., 3] * y[..., 3],
        ],
        axis=-1,
    ) % p
    names = tuple("_".join(str(v) for v in row) for row in m.tolist())
    return make_seminearring(OpTable(add), OpTable(prod @ weights), names)


def upper_row_right_ideal(spec: MatrixRingSpec) -> list[int]:
    """Indices of the matrices whose second row is zero, ascending."""
    m = matrix_entries(spec)
    return [int(i) for i in np.flatnonzero((m[:, 2] == 0) & (m[:, 3] == 0))]


def direct_product(S1: FiniteSeminearring, S2: FiniteSeminearring) -> FiniteSeminearring:
    """Componentwise operations; element (i, j) has index i * |S2| + j."""
    n2 = S2.order

    def combine(t1: OpTable, t2: OpTable) -> OpTable:
        e1, e2 = t1.entries, t2.entries
        big = e1[:, None, :, None] * n2 + e2[None, :, None, :]
        n = t1.order * n2
        return OpTable(big.reshape(n, n))

    names = tuple(f"{S1.name(i)}_{S2.name(j)}" for i in range(S1.order) for j in range(n2))
    return make_seminearring(combine(S1.add, S2.add), combine(S1.mul, S2.mul), names)


class Substructure(NamedTuple):
    structure: FiniteSeminearring
    parent_index: tuple[int, ...]


def sub_seminearring(S: FiniteSeminearring, subset: Sequence[int]) -> Substructure:
    """Restrict S to ``subset`` (kept in the given order)."""
    elements = [int(x) for x in subset]
    if len(set(elements)) != len(elements) or not elements:
        raise ValueError("subset must be non-empty without repeats")
    try:
        add = S.add.restrict(elements)
        mul = S.mul.restrict(elements)
    except TableError as exc:
        raise TableError(f"subset is not closed: pair {exc.witness.elements}",
                         Witness("closure", exc.witness.elements)) from None
    names = tuple(S.name(i) for i in elements) if S.names else None
    return Substructure(make_seminearring(add, mul, names), tuple(elements))


def _product_block(left: Sequence[int], right: Sequence[int], n2: int) -> list[int]:
    return [i * n2 + j for i in left for j in right]


def example_S(p: int = 2) -> FiniteSeminearring:
    """({u,c} x I) u ({a} x M) u ({b} x M) inside T x M_2(F_p); order 2p^2 + 2p^4."""
    spec = MatrixRingSpec(p)
    M = matrix_ring(spec)
    ideal = upper_row_right_ideal(spec)
    full = list(range(M.order))
    P = direct_product(left_zero_T(), M)
    u, a, b, c = range(4)
    subset = (
        _product_block([u, c], ideal, M.order)
        + _product_block([a], full, M.order)
        + _product_block([b], full, M.order)
    )
    return sub_seminearring(P, subset).structure


def example_L(p: int = 2) -> FiniteSeminearring:
    """({alpha} x I) u ({beta} x M) inside L x M_2(F_p); order p^2 + p^4."""
    spec = MatrixRingSpec(p)
    M = matrix_ring(spec)
    ideal = upper_row_right_ideal(spec)
    P = direct_product(two_semilattice_L(), M)
    subset = _product_block([0], ideal, M.order) + _product_block([1], range(M.order), M.order)
    return sub_seminearring(P, subset).structure


def parse_product_name(name: str) -> tuple[str, list[list[int]]]:
    """Split a product element name such as ``u_0_1_0_0`` into (label, matrix)."""
    head, *rest = name.split("_")
    a, b, c, d = (int(v) for v in rest)
    return head, [[a, b], [c, d]]


EXAMPLES = {
    "T": lambda p: left_zero_T(),
    "L": lambda p: two_semilattice_L(),
    "S": example_S,
    "L-matrix": example_L,
}
