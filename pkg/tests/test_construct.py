import pytest

from oracles import naive_associative, naive_regular, naive_right_distributive
from snrkit.construct import (
    MatrixRingSpec,
    direct_product,
    example_L,
    example_S,
    left_zero_T,
    matrix_index,
    matrix_of,
    matrix_ring,
    sub_seminearring,
    two_semilattice_L,
    upper_row_right_ideal,
)
from snrkit.core import classify
from snrkit.greens import is_completely_regular_semigroup, is_regular_semigroup
from snrkit.tables import TableError, is_commutative, idempotents


def test_T_and_L():
    T = left_zero_T()
    assert T.order == 4 and classify(T).glcr
    assert T.greens.classes["H"] == ((0, 3), (1,), (2,))
    L = two_semilattice_L()
    assert L.order == 2
    assert is_commutative(L.add) and idempotents(L.add) == {0, 1}
    assert classify(L).glcr and classify(L).grcr


def test_matrix_ring_p2():
    spec = MatrixRingSpec(2)
    M = matrix_ring(spec)
    assert M.order == 16
    assert matrix_of(spec, 0) == [[0, 0], [0, 0]]
    assert matrix_index(spec, [[0, 1], [0, 0]]) == 4
    assert is_regular_semigroup(M.mul)
    assert naive_regular(M.mul.rows())
    assert len(M.greens.classes["H"]) == 1


@pytest.mark.parametrize("p", [2, 3])
def test_matrix_ring_regular_and_multiplication(p):
    spec = MatrixRingSpec(p)
    M = matrix_ring(spec)
    assert M.order == p**4
    assert is_regular_semigroup(M.mul)
    X, Y = [[1, 1], [0, 1]], [[0, 1], [1, 1]]
    prod = [[sum(X[i][k] * Y[k][j] for k in range(2)) % p for j in range(2)] for i in range(2)]
    assert M.mul(matrix_index(spec, X), matrix_index(spec, Y)) == matrix_index(spec, prod)


@pytest.mark.parametrize("p", [1, 4, 9])
def test_non_prime_rejected(p):
    with pytest.raises(ValueError):
        MatrixRingSpec(p)
    with pytest.raises(ValueError):
        example_S(p)


def test_upper_row_right_ideal():
    spec = MatrixRingSpec(2)
    M = matrix_ring(spec)
    ideal = upper_row_right_ideal(spec)
    assert len(ideal) == 4 and 0 in ideal
    assert all(M.mul(i, m) in ideal for i in ideal for m in range(M.order))


def test_direct_product():
    T = left_zero_T()
    M = matrix_ring(MatrixRingSpec(2))
    P = direct_product(T, M)
    assert P.order == 64
    assert naive_associative(P.add.rows()) and naive_associative(P.mul.rows())
    assert naive_right_distributive(P.add.rows(), P.mul.rows())
    assert is_completely_regular_semigroup(P.add)
    # H+ class of (u, 0): {u, c} x M
    h = P.h_class(0 * 16 + 0)
    assert h == tuple(sorted([0 * 16 + j for j in range(16)] + [3 * 16 + j for j in range(16)]))


def test_sub_seminearring():
    T = left_zero_T()
    M = matrix_ring(MatrixRingSpec(2))
    P = direct_product(T, M)
    full = sub_seminearring(P, range(P.order))
    assert full.parent_index == tuple(range(64))
    assert full.structure == P
    with pytest.raises(TableError) as err:
        # {u} x {[[0,1],[0,0]]}: C + C = 0 leaves the subset
        sub_seminearring(P, [4])
    assert err.value.witness.kind == "closure"


@pytest.mark.parametrize("p, order", [(2, 40), (3, 180)])
def test_example_S(p, order):
    S = example_S(p)
    assert S.order == order
    c = classify(S)
    assert c.glcr and c.multiplicatively_regular
    names = [S.name(i) for i in range(S.order)]
    assert [n[0] for n in names] == ["u"] * p**2 + ["c"] * p**2 + ["a"] * p**4 + ["b"] * p**4


def test_example_S_closure_scan():
    S = example_S(2)
    assert naive_associative(S.add.rows()) and naive_associative(S.mul.rows())
    assert naive_right_distributive(S.add.rows(), S.mul.rows())


@pytest.mark.parametrize("p, order", [(2, 20), (3, 90)])
def test_example_L(p, order):
    S = example_L(p)
    assert S.order == order
    c = classify(S)
    assert c.additively_completely_regular and c.multiplicatively_regular
    assert is_commutative(S.add)
