"""Symbolic trees and the Tukey spectra of their tree algebras.

A :class:`TreeTerm` is a well-ordered trunk with, for each branch entry,
``mult``-many incomparable copies of a subtree attached above the whole
trunk.  The least point of the trunk is the root.

The ultrafilter of an initial chain C has type ``cf(C) x weak product of
|imm(C)|-many 2's``, where imm(C) is the set of immediate successors.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cardinals import ONE, TWO, ZERO, Card, card_sum
from .errors import DomainError
from .orders import Fin, OrderTerm, is_well_ordered, order_attrs, order_size, proper_cuts
from .tukey import Prod, TukeyType, WeakProd, card_term, normalize


@dataclass(frozen=True)
class TreeTerm:
    trunk: OrderTerm
    branches: tuple[tuple[Card, "TreeTerm"], ...] = ()

    def __post_init__(self):
        if not is_well_ordered(self.trunk):
            raise DomainError("not a tree: trunk contains rev")
        object.__setattr__(self, "branches", tuple(self.branches))
        for mult, sub in self.branches:
            if mult.finite and mult.index < 1:
                raise DomainError("branch multiplicity must be at least 1")
            if not isinstance(sub, TreeTerm):
                raise DomainError("tree branches must hold tree terms")


def leaf() -> TreeTerm:
    return TreeTerm(Fin(1))


def star(k: Card) -> TreeTerm:
    """A root with ``k`` leaves directly above it."""
    return TreeTerm(Fin(1), ((k, leaf()),))


@dataclass(frozen=True)
class TreeClass:
    cf: Card
    succ_count: Card
    tukey: TukeyType

    def __str__(self):
        return f"cf={self.cf} succ={self.succ_count} type={self.tukey}"


def succ_count(t: TreeTerm) -> Card:
    if not t.branches:
        return ZERO
    return card_sum((ONE, m) for m, _ in t.branches)


def tree_chain_classes(t: TreeTerm) -> frozenset:
    classes = set()
    # inside the trunk the rest always has a least point: one successor
    for cf, _ in proper_cuts(t.trunk):
        classes.add(TreeClass(cf, ONE, normalize(card_term(cf))))
    cf = order_attrs(t.trunk)[0]
    n = succ_count(t)
    if n == ZERO:
        classes.add(TreeClass(cf, ZERO, normalize(card_term(cf))))
    else:
        tukey = normalize(Prod(card_term(cf), WeakProd((TWO, n))))
        classes.add(TreeClass(cf, n, tukey))
    for _, sub in t.branches:
        classes |= tree_chain_classes(sub)
    return frozenset(classes)


def tree_spectrum(t: TreeTerm) -> frozenset:
    return frozenset(c.tukey for c in tree_chain_classes(t))


def tree_size(t: TreeTerm) -> Card:
    parts = [(order_size(t.trunk), ONE)]
    parts += [(tree_size(sub), m) for m, sub in t.branches]
    return card_sum(parts)


def tree_has_max_type(t: TreeTerm, k: Card = None) -> bool:
    """Does the tree algebra of ``t`` (of size ``k``) have an ultrafilter of type [k]^<w?

    Uncountable ``k``: some initial chain has ``k`` immediate successors.
    ``k`` = w: some ultrafilter has type w.
    """
    if k is None:
        k = tree_size(t)
    if not k.infinite:
        return False
    if k.index == 0:
        return normalize(card_term(k)) in tree_spectrum(t)
    return any(c.succ_count == k for c in tree_chain_classes(t))
