"""Symbolic linear orders and the Tukey spectra of their interval algebras.

Order terms::

    Fin(n)          n-element chain, n >= 1
    Ord(k)          the well-order k, k infinite regular
    Rev(L)          L upside down
    Sum(A, B, ...)  A followed by B followed by ...
    LexSum(k, L)    k copies of L, lexicographically

A top-level term always gets a fresh least point prepended, so the initial
segment consisting of that point alone is available as a cut.

An ultrafilter of the interval algebra corresponds to a non-empty initial
segment C; its type is ``cf(C) x ci(L - C)`` (cofinality of C times
coinitiality of the rest), or just ``cf(C)`` when C is everything.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .cardinals import ONE, Card, card_sum, regulars_below
from .errors import DomainError
from .tukey import Prod, TukeyType, card_term, normalize


class OrderTerm:
    __slots__ = ()


@dataclass(frozen=True)
class Fin(OrderTerm):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"(fin {self.n}): a chain needs at least one point")


@dataclass(frozen=True)
class Ord(OrderTerm):
    card: Card

    def __post_init__(self):
        if not self.card.infinite:
            raise DomainError(f"(ord {self.card}): use (fin n) for finite chains")


@dataclass(frozen=True)
class Rev(OrderTerm):
    inner: OrderTerm


@dataclass(frozen=True)
class Sum(OrderTerm):
    parts: tuple[OrderTerm, ...]

    def __init__(self, *parts):
        if len(parts) == 1 and isinstance(parts[0], (list, tuple)):
            parts = parts[0]
        if not parts:
            raise DomainError("(sum): needs at least one summand")
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class LexSum(OrderTerm):
    card: Card
    inner: OrderTerm

    def __post_init__(self):
        if not self.card.infinite:
            raise DomainError(f"(lexsum {self.card} ...): index must be infinite")


@dataclass(frozen=True)
class ChainClass:
    """A class of initial chains: cofinality, coinitiality of the rest, type.

    ``ci`` is None when the chain is the whole order.
    """
    cf: Card
    ci: Optional[Card]
    tukey: TukeyType

    @property
    def pair(self):
        return (self.cf, self.ci)

    def __str__(self):
        rest = "empty" if self.ci is None else str(self.ci)
        return f"cf={self.cf} ci={rest} type={self.tukey}"


def with_bottom(t: OrderTerm) -> OrderTerm:
    return Sum(Fin(1), t)


@lru_cache(maxsize=None)
def order_attrs(t: OrderTerm) -> tuple[Card, Card]:
    """(cofinality, coinitiality) of the order denoted by ``t``."""
    if isinstance(t, Fin):
        return (ONE, ONE)
    if isinstance(t, Ord):
        return (t.card, ONE)
    if isinstance(t, Rev):
        cf, ci = order_attrs(t.inner)
        return (ci, cf)
    if isinstance(t, Sum):
        return (order_attrs(t.parts[-1])[0], order_attrs(t.parts[0])[1])
    if isinstance(t, LexSum):
        return (t.card, order_attrs(t.inner)[1])
    raise TypeError(f"not an order term: {t!r}")


@lru_cache(maxsize=None)
def proper_cuts(t: OrderTerm) -> frozenset:
    """(cf A, ci B) over all splits t = A + B with A and B non-empty."""
    if isinstance(t, Fin):
        return frozenset({(ONE, ONE)}) if t.n >= 2 else frozenset()
    if isinstance(t, Ord):
        return frozenset({(ONE, ONE)} | {(lam, ONE) for lam in regulars_below(t.card)})
    if isinstance(t, Rev):
        return frozenset((ci, cf) for cf, ci in proper_cuts(t.inner))
    if isinstance(t, Sum):
        out = set(proper_cuts(t.parts[0]))
        for left, right in zip(t.parts, t.parts[1:]):
            # everything so far versus the start of `right`
            out.add((order_attrs(left)[0], order_attrs(right)[1]))
            out |= proper_cuts(right)
        return frozenset(out)
    if isinstance(t, LexSum):
        cf, ci = order_attrs(t.inner)
        out = set(proper_cuts(t.inner))
        out.add((cf, ci))
        out |= {(lam, ci) for lam in regulars_below(t.card)}
        return frozenset(out)
    raise TypeError(f"not an order term: {t!r}")


def chain_class(cf: Card, ci: Optional[Card]) -> ChainClass:
    if ci is None:
        return ChainClass(cf, None, normalize(card_term(cf)))
    return ChainClass(cf, ci, normalize(Prod(card_term(cf), card_term(ci))))


def classify_cuts(t: OrderTerm) -> frozenset:
    """Every class of initial chains of ``t`` (with its bottom point added)."""
    full = with_bottom(t)
    classes = {chain_class(cf, ci) for cf, ci in proper_cuts(full)}
    classes.add(chain_class(order_attrs(full)[0], None))
    return frozenset(classes)


def intalg_spectrum(t: OrderTerm) -> frozenset:
    return frozenset(c.tukey for c in classify_cuts(t))


def _block(k: Card) -> OrderTerm:
    return Fin(1) if k == ONE else Ord(k)


def _rev_block(k: Card) -> OrderTerm:
    return Fin(1) if k == ONE else Rev(Ord(k))


def realize_interval(pairs) -> OrderTerm:
    """An order whose interval algebra has ``k x mu`` in its spectrum for each pair.

    Each pair contributes a block of type ``k`` followed by a reversed block
    of type ``mu``; the cut between them has exactly that cofinality and
    coinitiality.
    """
    pairs = sorted(set(pairs))
    if not pairs:
        raise DomainError("realize_interval needs at least one pair")
    parts = []
    for k, mu in pairs:
        for c in (k, mu):
            if c != ONE and not c.infinite:
                raise DomainError(f"{c}: entries must be 1 or infinite")
        parts += [_block(k), _rev_block(mu)]
    return Sum(*parts)


def is_well_ordered(t: OrderTerm) -> bool:
    if isinstance(t, (Fin, Ord)):
        return True
    if isinstance(t, Rev):
        return False
    if isinstance(t, Sum):
        return all(is_well_ordered(p) for p in t.parts)
    if isinstance(t, LexSum):
        return is_well_ordered(t.inner)
    raise TypeError(f"not an order term: {t!r}")


def order_size(t: OrderTerm) -> Card:
    if isinstance(t, Fin):
        return Card(False, t.n)
    if isinstance(t, Ord):
        return t.card
    if isinstance(t, Rev):
        return order_size(t.inner)
    if isinstance(t, Sum):
        return card_sum((order_size(p), ONE) for p in t.parts)
    if isinstance(t, LexSum):
        return card_sum([(order_size(t.inner), t.card)])
    raise TypeError(f"not an order term: {t!r}")


def finite_points(t: OrderTerm) -> int:
    """Number of points of a term built from Fin, Rev and Sum only."""
    if isinstance(t, Fin):
        return t.n
    if isinstance(t, Rev):
        return finite_points(t.inner)
    if isinstance(t, Sum):
        return sum(finite_points(p) for p in t.parts)
    raise DomainError(f"{t!r} is not finite")
