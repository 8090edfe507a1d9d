"""Text syntax for every kind of term.

::

    cardinals   0 1 2 ... w w1 w2 ...
    types       1  (ord w1)  (finsets w1)  (prod T ...)  (wprod (2 w1) (w w) ...)
    orders      (fin 3)  (ord w1)  (rev X)  (sum X Y ...)  (lexsum w1 X)
    trees       (tree TRUNK (branch MULT SUBTREE) ...)
    ptrees      (ptree TRUNK (branch MULT SUBTREE) ...)
    catalog     (free w1)  (fincofin w)  (adfamily w2 (mus w w1))
    pairs       ((w w1) (1 1) ...)        for realize interval
    card lists  (w w1 2 (2 w1) ...)       for realize weakprod
"""
from __future__ import annotations

from . import catalog, orders, tukey
from .cardinals import parse_card
from .errors import DomainError, ParseError
from .pseudotrees import PTreeTerm
from .sexpr import Atom, SList, read
from .trees import TreeTerm


def _card(x):
    if not isinstance(x, Atom):
        raise ParseError("expected a cardinal", x.pos)
    return parse_card(x.text, x.pos)


def _expect(x, head, arity=None):
    if not isinstance(x, SList) or x.head() != head:
        raise ParseError(f"expected ({head} ...)", x.pos)
    if arity is not None and len(x.items) - 1 != arity:
        raise ParseError(f"({head} ...) takes {arity} argument(s)", x.pos)
    return x.items[1:]


def _located(pos, fn, *args):
    try:
        return fn(*args)
    except DomainError as e:
        raise DomainError(f"{pos[0]}:{pos[1]}: {e}") from None


# ---------------------------------------------------------------- types

def type_from_sexpr(x) -> tukey.TypeTerm:
    if isinstance(x, Atom):
        c = _card(x)
        return _located(x.pos, tukey.card_term, c)
    head = x.head()
    args = x.items[1:]
    if head == "ord":
        (a,) = _expect(x, "ord", 1)
        return _located(x.pos, tukey.Ord, _card(a))
    if head == "finsets":
        (a,) = _expect(x, "finsets", 1)
        return _located(x.pos, tukey.FinSets, _card(a))
    if head == "prod":
        return tukey.Prod(*[type_from_sexpr(a) for a in args])
    if head == "wprod":
        entries = []
        for a in args:
            if not isinstance(a, SList) or len(a.items) != 2:
                raise ParseError("expected (base mult)", a.pos)
            entries.append((_card(a.items[0]), _card(a.items[1])))
        return tukey.WeakProd(*entries)
    raise ParseError(f"unknown type constructor {head!r}", x.pos)


def parse_type(text: str) -> tukey.TypeTerm:
    return type_from_sexpr(read(text))


# ---------------------------------------------------------------- orders

def order_from_sexpr(x) -> orders.OrderTerm:
    if not isinstance(x, SList) or x.head() is None:
        raise ParseError("expected an order term such as (ord w)", x.pos)
    head = x.head()
    if head == "fin":
        (a,) = _expect(x, "fin", 1)
        c = _card(a)
        if c.infinite:
            raise ParseError("(fin n) needs a finite n", a.pos)
        return _located(x.pos, orders.Fin, c.index)
    if head == "ord":
        (a,) = _expect(x, "ord", 1)
        return _located(x.pos, orders.Ord, _card(a))
    if head == "rev":
        (a,) = _expect(x, "rev", 1)
        return orders.Rev(order_from_sexpr(a))
    if head == "sum":
        parts = [order_from_sexpr(a) for a in x.items[1:]]
        return _located(x.pos, orders.Sum, *parts)
    if head == "lexsum":
        k, inner = _expect(x, "lexsum", 2)
        return _located(x.pos, orders.LexSum, _card(k), order_from_sexpr(inner))
    raise ParseError(f"unknown order constructor {head!r}", x.pos)


def parse_order(text: str) -> orders.OrderTerm:
    return order_from_sexpr(read(text))


def order_to_text(t: orders.OrderTerm) -> str:
    if isinstance(t, orders.Fin):
        return f"(fin {t.n})"
    if isinstance(t, orders.Ord):
        return f"(ord {t.card})"
    if isinstance(t, orders.Rev):
        return f"(rev {order_to_text(t.inner)})"
    if isinstance(t, orders.Sum):
        return "(sum " + " ".join(order_to_text(p) for p in t.parts) + ")"
    if isinstance(t, orders.LexSum):
        return f"(lexsum {t.card} {order_to_text(t.inner)})"
    raise TypeError(t)


# ---------------------------------------------------------------- trees

def _branchy(x, head, cls):
    if not isinstance(x, SList) or x.head() != head or len(x.items) < 2:
        raise ParseError(f"expected ({head} TRUNK (branch MULT SUB) ...)", x.pos)
    trunk = order_from_sexpr(x.items[1])
    branches = []
    for b in x.items[2:]:
        mult, sub = _expect(b, "branch", 2)
        branches.append((_card(mult), _branchy(sub, head, cls)))
    return _located(x.pos, cls, trunk, tuple(branches))


def parse_tree(text: str) -> TreeTerm:
    return _branchy(read(text), "tree", TreeTerm)


def parse_ptree(text: str) -> PTreeTerm:
    return _branchy(read(text), "ptree", PTreeTerm)


def tree_to_text(t) -> str:
    head = "tree" if isinstance(t, TreeTerm) else "ptree"
    parts = [head, order_to_text(t.trunk)]
    parts += [f"(branch {m} {tree_to_text(sub)})" for m, sub in t.branches]
    return "(" + " ".join(parts) + ")"


# ---------------------------------------------------------------- catalog

def parse_catalog(text: str) -> catalog.CatalogSpec:
    x = read(text)
    head = x.head() if isinstance(x, SList) else None
    if head in ("free", "fincofin"):
        (a,) = _expect(x, head, 1)
        cls = catalog.Free if head == "free" else catalog.FinCofin
        return _located(x.pos, cls, _card(a))
    if head == "adfamily":
        if len(x.items) not in (2, 3):
            raise ParseError("expected (adfamily K (mus ...))", x.pos)
        mus = []
        if len(x.items) == 3:
            mus = [_card(m) for m in _expect(x.items[2], "mus")]
        return _located(x.pos, catalog.ADFamily, _card(x.items[1]), frozenset(mus))
    raise ParseError("expected (free K), (fincofin K) or (adfamily K (mus ...))", x.pos)


# ---------------------------------------------------------------- realizer inputs

def parse_pairs(text: str) -> list:
    x = read(text)
    if not isinstance(x, SList):
        raise ParseError("expected a list of pairs", x.pos)
    out = []
    for p in x.items:
        if not isinstance(p, SList) or len(p.items) != 2:
            raise ParseError("expected (k mu)", p.pos)
        out.append((_card(p.items[0]), _card(p.items[1])))
    return out


def parse_card_list(text: str) -> list:
    x = read(text)
    if not isinstance(x, SList):
        raise ParseError("expected a list of cardinals", x.pos)
    out = []
    for c in x.items:
        if isinstance(c, SList):
            if len(c.items) != 2:
                raise ParseError("expected (card mult)", c.pos)
            out.append((_card(c.items[0]), _card(c.items[1])))
        else:
            out.append(_card(c))
    return out
