"""Reader and writer for the line-oriented ``.snr`` seminearring format.

    seminearring <name>
    order <n>
    elements <n names>      # optional
    add
    <n lines of n indices>
    mul
    <n lines of n indices>
    end

``#`` starts a comment; indices are 0-based. Parsing does not check axioms.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FiniteSeminearring, make_seminearring
from .tables import OpTable, make_table

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_TOKEN = re.compile(r"\S+")


class SnrError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SnrSyntaxError(SnrError):
    pass


class SnrDimensionError(SnrError):
    pass


class SnrRangeError(SnrError):
    pass


@dataclass(frozen=True)
class SnrDocument:
    name: str
    order: int
    names: tuple[str, ...] | None
    add: OpTable
    mul: OpTable

    def to_seminearring(self) -> FiniteSeminearring:
        return make_seminearring(self.add, self.mul, self.names)

    @classmethod
    def from_seminearring(cls, name: str, S: FiniteSeminearring) -> "SnrDocument":
        return cls(name, S.order, S.names, S.add, S.mul)


def _lines(text: str):
    for number, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if tokens:
            yield number, tokens


class _Reader:
    def __init__(self, text: str):
        self.lines = list(_lines(text))
        self.pos = 0
        self.last_line = text.count("\n") + 1

    def peek(self):
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def next(self, expected: str):
        item = self.peek()
        if item is None:
            raise SnrSyntaxError(f"unexpected end of input, expected {expected}", self.last_line)
        self.pos += 1
        return item

    def keyword(self, word: str, arity: int):
        number, tokens = self.next(f"'{word}'")
        head, col = tokens[0]
        if head != word:
            raise SnrSyntaxError(f"expected '{word}', found {head!r}", number, col)
        if arity >= 0 and len(tokens) != arity + 1:
            tok, c = tokens[min(len(tokens) - 1, arity + 1)]
            raise SnrSyntaxError(f"'{word}' takes {arity} argument(s)", number, c)
        return number, tokens[1:]


def _int(token: str, number: int, col: int) -> int:
    if not token.isdigit():
        raise SnrSyntaxError(f"expected a non-negative integer, found {token!r}", number, col)
    return int(token)


def _table(r: _Reader, word: str, n: int) -> OpTable:
    r.keyword(word, 0)
    flat: list[int] = []
    for _ in range(n):
        number, tokens = r.next(f"a row of the {word} table")
        if len(tokens) != n:
            col = tokens[n][1] if len(tokens) > n else tokens[-1][1]
            raise SnrDimensionError(f"{word} row has {len(tokens)} entries, expected {n}", number, col)
        for tok, col in tokens:
            v = _int(tok, number, col)
            if v >= n:
                raise SnrRangeError(f"index {v} out of range for order {n}", number, col)
            flat.append(v)
    return make_table(n, flat)


def _document(r: _Reader) -> SnrDocument:
    number, args = r.keyword("seminearring", 1)
    name, col = args[0]
    if not NAME_RE.match(name):
        raise SnrSyntaxError(f"invalid name {name!r}", number, col)
    number, args = r.keyword("order", 1)
    n = _int(args[0][0], number, args[0][1])
    if n < 1:
        raise SnrRangeError("order must be positive", number, args[0][1])
    names = None
    item = r.peek()
    if item is not None and item[1][0][0] == "elements":
        number, args = r.keyword("elements", -1)
        if len(args) != n:
            col = args[n][1] if len(args) > n else item[1][-1][1]
            raise SnrDimensionError(f"expected {n} element names, got {len(args)}", number, col)
        for tok, c in args:
            if not NAME_RE.match(tok):
                raise SnrSyntaxError(f"invalid element name {tok!r}", number, c)
        names = tuple(t for t, _ in args)
        if len(set(names)) != n:
            raise SnrSyntaxError("element names must be distinct", number, args[0][1])
    add = _table(r, "add", n)
    mul = _table(r, "mul", n)
    r.keyword("end", 0)
    return SnrDocument(name, n, names, add, mul)


def parse_documents(text: str) -> list[SnrDocument]:
    r = _Reader(text)
    docs = []
    while r.peek() is not None:
        docs.append(_document(r))
    if not docs:
        raise SnrSyntaxError("empty input, expected 'seminearring'", 1)
    return docs


def parse_snr(text: str) -> SnrDocument:
    r = _Reader(text)
    if r.peek() is None:
        raise SnrSyntaxError("empty input, expected 'seminearring'", 1)
    doc = _document(r)
    extra = r.peek()
    if extra is not None:
        raise SnrSyntaxError("trailing content after 'end'", extra[0], extra[1][0][1])
    return doc


def serialize_snr(doc: SnrDocument) -> str:
    out = [f"seminearring {doc.name}", f"order {doc.order}"]
    if doc.names:
        out.append("elements " + " ".join(doc.names))
    for word, t in (("add", doc.add), ("mul", doc.mul)):
        out.append(word)
        out.extend(" ".join(str(v) for v in row) for row in t.rows())
    out.append("end")
    return "\n".join(out) + "\n"
