"""Minimal s-expression reader that keeps source positions."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class Atom:
    text: str
    pos: tuple[int, int]


@dataclass(frozen=True)
class SList:
    items: tuple
    pos: tuple[int, int]

    def head(self):
        if self.items and isinstance(self.items[0], Atom):
            return self.items[0].text
        return None


def _tokens(text: str):
    line, col = 1, 1
    i = 0
    while i < len(text):
        c = text[i]
        if c == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if c == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if c.isspace():
            i, col = i + 1, col + 1
            continue
        if c in "()":
            yield c, (line, col)
            i, col = i + 1, col + 1
            continue
        start = (line, col)
        j = i
        while j < len(text) and not text[j].isspace() and text[j] not in "();":
            j += 1
        yield text[i:j], start
        col += j - i
        i = j


def read_all(text: str) -> list:
    """Parse every top-level expression in ``text``."""
    stack = [[]]
    opens = []
    for tok, pos in _tokens(text):
        if tok == "(":
            stack.append([])
            opens.append(pos)
        elif tok == ")":
            if not opens:
                raise ParseError("unbalanced ')'", pos)
            items = stack.pop()
            stack[-1].append(SList(tuple(items), opens.pop()))
        else:
            stack[-1].append(Atom(tok, pos))
    if opens:
        raise ParseError("unclosed '('", opens[-1])
    return stack[0]


def read(text: str):
    exprs = read_all(text)
    if not exprs:
        raise ParseError("empty input", (1, 1))
    if len(exprs) > 1:
        raise ParseError("trailing input after expression", exprs[1].pos)
    return exprs[0]
