"""Symbolic pseudo-trees, fans of approximate successors, and their spectra.

A :class:`PTreeTerm` is like a tree term except the trunk may be any order
term (reversed blocks allowed).  The top-level trunk gets a fresh bottom
point, which is the single root.

Above an initial chain C the approximate immediate successors split into
incomparable classes, each a decreasing chain of coinitiality theta (1 or
infinite regular).  :class:`Fan` records those classes as (mult, theta)
pairs.  The ultrafilter of C then has type

    cf(C) x weak product over the fan of (1 + theta)

where 1 + theta is 2 for theta = 1 and theta otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cardinals import ONE, TWO, ZERO, Card, card_sum
from .errors import DomainError
from .orders import Fin, Ord, OrderTerm, Rev, order_attrs, proper_cuts, with_bottom
from .trees import TreeTerm
from .tukey import Prod, TukeyType, WeakProd, card_term, normalize


@dataclass(frozen=True)
class PTreeTerm:
    trunk: OrderTerm
    branches: tuple[tuple[Card, "PTreeTerm"], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        for mult, sub in self.branches:
            if mult.finite and mult.index < 1:
                raise DomainError("branch multiplicity must be at least 1")
            if not isinstance(sub, PTreeTerm):
                raise DomainError("ptree branches must hold ptree terms")


def embed(t: TreeTerm) -> PTreeTerm:
    """A tree read as a pseudo-tree."""
    return PTreeTerm(t.trunk, tuple((m, embed(sub)) for m, sub in t.branches))


@dataclass(frozen=True)
class Fan:
    """Classes of a fan as sorted (mult, theta) pairs, equal thetas merged."""
    classes: tuple[tuple[Card, Card], ...] = ()

    @classmethod
    def of(cls, entries) -> "Fan":
        merged = {}
        for mult, theta in entries:
            if theta != ONE and not theta.infinite:
                raise DomainError(f"theta must be 1 or infinite, got {theta}")
            merged.setdefault(theta, []).append((ONE, mult))
        return cls(tuple(sorted((card_sum(v), th) for th, v in merged.items())))

    @property
    def lam(self) -> Card:
        if not self.classes:
            return ZERO
        return card_sum((ONE, m) for m, _ in self.classes)

    def invariant(self):
        return (self.lam, self.classes)

    def weak_factors(self) -> list[tuple[Card, Card]]:
        return [(TWO if th == ONE else th, m) for m, th in self.classes]

    def __str__(self):
        body = ", ".join(f"{m}x{th}" for m, th in self.classes)
        return f"fan[{body}] lambda={self.lam}"


@dataclass(frozen=True)
class ChainHandle:
    """Locates a chain class: branch indices from the top, then the cut.

    ``cut`` is the (cf, ci) pair of a proper trunk cut, or None for the
    class whose chain is the whole trunk at ``path``.
    """
    path: tuple[int, ...] = ()
    cut: Optional[tuple[Card, Card]] = None


@dataclass(frozen=True)
class PTreeClass:
    cf: Card
    fan: Fan
    tukey: TukeyType
    handle: ChainHandle = field(default=ChainHandle(), compare=False)

    def __str__(self):
        return f"cf={self.cf} {self.fan} type={self.tukey}"


def _trunk(t: PTreeTerm, top: bool) -> OrderTerm:
    return with_bottom(t.trunk) if top else t.trunk


def _fan_whole(t: PTreeTerm) -> Fan:
    return Fan.of((m, order_attrs(sub.trunk)[1]) for m, sub in t.branches)


def class_type(cf: Card, fan: Fan) -> TukeyType:
    factors = fan.weak_factors()
    if not factors:
        return normalize(card_term(cf))
    return normalize(Prod(card_term(cf), WeakProd(factors)))


def _resolve(t: PTreeTerm, handle: ChainHandle) -> tuple[PTreeTerm, bool]:
    node, top = t, True
    for i in handle.path:
        if not 0 <= i < len(node.branches):
            raise DomainError(f"stale handle: no branch {i} at {handle.path}")
        node, top = node.branches[i][1], False
    return node, top


def fan_at(t: PTreeTerm, handle: ChainHandle) -> Fan:
    node, top = _resolve(t, handle)
    if handle.cut is None:
        return _fan_whole(node)
    if handle.cut not in proper_cuts(_trunk(node, top)):
        raise DomainError(f"stale handle: no cut {handle.cut} at {handle.path}")
    # the rest of a linear trunk is one compatibility class
    return Fan.of([(ONE, handle.cut[1])])


def chain_handles(t: PTreeTerm, path: tuple[int, ...] = ()) -> list[ChainHandle]:
    node, top = _resolve(t, ChainHandle(path))
    trunk = _trunk(node, top)
    out = [ChainHandle(path, cut) for cut in sorted(proper_cuts(trunk))]
    out.append(ChainHandle(path, None))
    for i in range(len(node.branches)):
        out += chain_handles(t, path + (i,))
    return out


def ptree_chain_classes(t: PTreeTerm) -> frozenset:
    classes = set()
    for h in chain_handles(t):
        node, top = _resolve(t, h)
        cf = h.cut[0] if h.cut is not None else order_attrs(_trunk(node, top))[0]
        fan = fan_at(t, h)
        classes.add(PTreeClass(cf, fan, class_type(cf, fan), h))
    return frozenset(classes)


def ptree_spectrum(t: PTreeTerm) -> frozenset:
    return frozenset(c.tukey for c in ptree_chain_classes(t))


def root_class(t: PTreeTerm) -> PTreeClass:
    """The class of the chain made of the whole top-level trunk."""
    h = ChainHandle((), None)
    cf = order_attrs(_trunk(t, True))[0]
    fan = fan_at(t, h)
    return PTreeClass(cf, fan, class_type(cf, fan), h)


def epsilon_and_character(c: PTreeClass) -> tuple[Card, Card]:
    """(least size of a set of approximate successors, character) of a class."""
    if not c.fan.classes:
        return ZERO, c.cf
    eps = card_sum((th, m) for m, th in c.fan.classes)
    return eps, max(eps, c.cf)


def realize_weak_product(cards) -> PTreeTerm:
    """A pseudo-tree whose root class has the weak product of ``cards`` as type.

    Items are cardinals (2 or infinite) or (cardinal, multiplicity) pairs.
    An infinite k becomes a branch that is an upside-down copy of k; a 2
    becomes a single leaf.
    """
    cards = list(cards)
    if not cards:
        raise DomainError("realize_weak_product needs at least one cardinal")
    branches = []
    for item in cards:
        k, mult = item if isinstance(item, tuple) else (item, ONE)
        if k == TWO:
            branches.append((mult, PTreeTerm(Fin(1))))
        elif k.infinite:
            branches.append((mult, PTreeTerm(Rev(Ord(k)))))
        else:
            raise DomainError(f"{k}: each cardinal must be 2 or infinite")
    return PTreeTerm(Fin(1), tuple(branches))
