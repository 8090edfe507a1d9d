"""Closed-form spectra of some named families of Boolean algebras."""
from __future__ import annotations

from dataclasses import dataclass

from .cardinals import OMEGA, Card
from .errors import DomainError
from .tukey import ONE_TYPE, FinSets, normalize


class CatalogSpec:
    __slots__ = ()


def _need_infinite(k, what):
    if not k.infinite:
        raise DomainError(f"({what} {k}): needs an infinite cardinal")


@dataclass(frozen=True)
class Free(CatalogSpec):
    """Free algebra on ``card`` generators (clopens of the Cantor cube)."""
    card: Card

    def __post_init__(self):
        _need_infinite(self.card, "free")


@dataclass(frozen=True)
class FinCofin(CatalogSpec):
    """Finite-cofinite algebra on a set of size ``card``."""
    card: Card

    def __post_init__(self):
        _need_infinite(self.card, "fincofin")


@dataclass(frozen=True)
class ADFamily(CatalogSpec):
    """Algebra generated by an almost disjoint family of size ``card``.

    ``mus`` lists the cardinals mu for which [mu]^<w is realized.  Whether
    a mu below ``card`` occurs depends on the family itself, so it is an
    input here rather than something computed.
    """
    card: Card
    mus: frozenset = frozenset()

    def __post_init__(self):
        _need_infinite(self.card, "adfamily")
        object.__setattr__(self, "mus", frozenset(self.mus))
        for mu in self.mus:
            if mu < OMEGA:
                raise DomainError(f"mu = {mu} must be infinite")
            if mu > self.card:
                raise DomainError(f"mu = {mu} exceeds the family size {self.card}")


def catalog_spectrum(s: CatalogSpec) -> frozenset:
    if isinstance(s, Free):
        return frozenset({normalize(FinSets(s.card))})
    if isinstance(s, FinCofin):
        return frozenset({ONE_TYPE, normalize(FinSets(s.card))})
    if isinstance(s, ADFamily):
        out = {ONE_TYPE, normalize(FinSets(s.card))}
        out |= {normalize(FinSets(mu)) for mu in s.mus}
        return frozenset(out)
    raise TypeError(f"not a catalog spec: {s!r}")
