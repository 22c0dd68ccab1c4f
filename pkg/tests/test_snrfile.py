from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from snrkit.construct import T_ADD
from snrkit.snrfile import (
    SnrDimensionError,
    SnrDocument,
    SnrRangeError,
    SnrSyntaxError,
    parse_documents,
    parse_snr,
    serialize_snr,
)
from snrkit.tables import make_table

T_TEXT = (Path(__file__).parent / "data" / "T.snr").read_text()


def test_parse_T():
    doc = parse_snr(T_TEXT)
    assert doc.name == "T" and doc.order == 4
    assert doc.names == ("u", "a", "b", "c")
    assert doc.add == make_table(4, T_ADD)
    S = doc.to_seminearring()
    assert S.order == 4


def test_empty_input():
    with pytest.raises(SnrSyntaxError):
        parse_snr("")
    with pytest.raises(SnrSyntaxError):
        parse_snr("# only a comment\n\n")


def test_row_too_long():
    text = T_TEXT.replace("1 1 1 1\n", "1 1 1 1 1\n", 1)
    with pytest.raises(SnrDimensionError) as err:
        parse_snr(text)
    assert err.value.line == 7 and err.value.column == 9


def test_index_out_of_range():
    text = T_TEXT.replace("3 2 1 0", "3 2 1 4")
    with pytest.raises(SnrRangeError) as err:
        parse_snr(text)
    assert err.value.line == 9 and err.value.column == 7


@pytest.mark.parametrize(
    "mutate",
    [
        lambda t: t.replace("seminearring T", "seminearring T-1"),
        lambda t: t.replace("order 4", "order four"),
        lambda t: t.replace("mul\n", "mult\n"),
        lambda t: t.replace("end\n", ""),
        lambda t: t + "extra\n",
        lambda t: t.replace("elements u a b c", "elements u a a c"),
    ],
)
def test_syntax_errors(mutate):
    with pytest.raises(SnrSyntaxError):
        parse_snr(mutate(T_TEXT))


def test_element_count_mismatch():
    with pytest.raises(SnrDimensionError):
        parse_snr(T_TEXT.replace("elements u a b c", "elements u a b"))


def test_invalid_algebra_still_parses():
    text = "seminearring bad\norder 2\nadd\n1 0\n0 0\nmul\n0 0\n0 0\nend\n"
    doc = parse_snr(text)
    assert doc.add.rows() == [[1, 0], [0, 0]]


def test_serialize_normalizes():
    out = serialize_snr(parse_snr(T_TEXT))
    assert out.splitlines()[:4] == ["seminearring T", "order 4", "elements u a b c", "add"]
    assert "#" not in out and out.endswith("end\n")
    assert serialize_snr(parse_snr(out)) == out


def test_multiple_documents():
    doc = parse_snr(T_TEXT)
    text = serialize_snr(doc) + serialize_snr(SnrDocument("U", 1, None, make_table(1, [0]), make_table(1, [0])))
    docs = parse_documents(text)
    assert [d.name for d in docs] == ["T", "U"]
    with pytest.raises(SnrSyntaxError):
        parse_snr(text)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n),
    st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n),
    st.booleans(),
)))
def test_round_trip(case):
    n, a, m, named = case
    names = tuple(f"x{i}" for i in range(n)) if named else None
    doc = SnrDocument("doc_1", n, names, make_table(n, a), make_table(n, m))
    text = serialize_snr(doc)
    assert parse_snr(text) == doc
    assert serialize_snr(parse_snr(text)) == text
