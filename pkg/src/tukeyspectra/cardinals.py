"""Symbolic regular cardinals.

A :class:`Card` is either a natural number ``n`` or ``aleph_i`` for a finite
index ``i``.  Every aleph is treated as regular; singular cardinals cannot be
written down.  Text syntax: ``0``, ``1``, ``2``, ..., ``w`` (aleph_0),
``w1``, ``w2``, ...
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, ParseError

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass(frozen=True, order=True)
class Card:
    # field order gives the total order: every finite card sorts below every aleph
    infinite: bool
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise DomainError(f"negative cardinal index {self.index}")

    @property
    def finite(self) -> bool:
        return not self.infinite

    @property
    def uncountable(self) -> bool:
        return self.infinite and self.index > 0

    def __str__(self):
        if not self.infinite:
            return str(self.index)
        return "w" if self.index == 0 else f"w{self.index}"

    def __repr__(self):
        return f"aleph({self.index})" if self.infinite else f"fin({self.index})"

    def pretty(self) -> str:
        if not self.infinite:
            return str(self.index)
        return "ω" if self.index == 0 else "ω" + str(self.index).translate(_SUBSCRIPTS)


def fin(n: int) -> Card:
    return Card(False, n)


def aleph(i: int) -> Card:
    return Card(True, i)


ZERO, ONE, TWO = fin(0), fin(1), fin(2)
OMEGA = aleph(0)


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


def compare_cards(a: Card, b: Card) -> Ordering:
    if a < b:
        return Ordering.LT
    if a > b:
        return Ordering.GT
    return Ordering.EQ


def card_sum(parts: Iterable[tuple[Card, Card]]) -> Card:
    """Sum of ``mult``-many copies of each ``card`` in ``parts``.

    Finite input is added up; once anything is infinite the sum is the
    largest infinite ingredient (summands with a nonzero infinite
    multiplicity count their multiplicity too).
    """
    parts = list(parts)
    if not parts:
        raise DomainError("empty sum")
    total = 0
    best = None
    for card, mult in parts:
        if mult.finite and mult.index < 1:
            raise DomainError(f"multiplicity must be at least 1, got {mult}")
        if card == ZERO:
            continue
        if card.finite and mult.finite:
            total += card.index * mult.index
            continue
        for c in (card, mult):
            if c.infinite and (best is None or c > best):
                best = c
    return best if best is not None else fin(total)


def card_max(*cards: Card) -> Card:
    return max(cards)


def regulars_below(k: Card) -> list[Card]:
    """Infinite regular cardinals strictly below ``k``."""
    if not k.infinite:
        return []
    return [aleph(i) for i in range(k.index)]


_CARD_RE = re.compile(r"(?:(\d+)|w(\d*))\Z")


def parse_card(text: str, pos=None) -> Card:
    m = _CARD_RE.match(text)
    if m is None:
        if text.startswith("w") and "w" in text[1:] or text in ("womega", "w_w"):
            raise ParseError(f"singular cardinal {text!r} is not supported", pos)
        raise ParseError(f"bad cardinal {text!r}", pos)
    if m.group(1) is not None:
        return fin(int(m.group(1)))
    return aleph(int(m.group(2)) if m.group(2) else 0)
