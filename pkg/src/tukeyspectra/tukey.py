"""Tukey-type terms, their normal form, and a three-valued comparator.

Types are built from ``One``, ``Ord(k)`` = (k, <=), ``FinSets(k)`` =
([k]^<w, subset), finite products ``Prod`` and weak products ``WeakProd``
(all but finitely many coordinates zero).  :func:`normalize` rewrites a term
to a :class:`TukeyType` of the shape ``[F]^<w x k_1 x ... x k_n`` and records
the id of every rule it fired; the rules are listed in :data:`RULES` and
documented in ``docs/rules.md``.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional

from .cardinals import OMEGA, ONE, TWO, Card, aleph
from .errors import DomainError


@dataclass(frozen=True)
class Rule:
    id: str
    source: str  # "published", "derived" or "external"
    statement: str


RULES = {r.id: r for r in [
    Rule("R-one", "published", "a one-point factor is dropped"),
    Rule("R-idem", "published", "k^n == k for infinite k and finite n >= 1"),
    Rule("R-2fin", "published", "finitely many finite factors (chains with a top) are dropped"),
    Rule("R-2inf", "published", "weak product of mu-many 2's == [mu]^<w"),
    Rule("R-day", "published", "[w]^<w == w"),
    Rule("R-absorb", "derived", "a factor of size <= mu next to [mu]^<w is absorbed"),
    Rule("R-finsets-max", "derived", "[k]^<w x [mu]^<w == [max(k, mu)]^<w"),
    Rule("R-wfold", "derived", "weak product of mu-many k's with 2 <= k <= mu == [mu]^<w"),
    Rule("R-wsplit", "derived", "weak product of mu-many k's with mu < k == k x [mu]^<w"),
    Rule("C-refl", "published", "equal normal forms are equivalent"),
    Rule("C-min", "published", "1 lies below every type, strictly below any type without a top"),
    Rule("C1", "published", "a directed set of size <= k is below [k]^<w"),
    Rule("C2", "published", "(k, <=) is strictly below [k]^<w for uncountable k"),
    Rule("C3", "published", "a product lies above each of its factors (projection)"),
    Rule("C-mono", "published", "a monotone map with cofinal image is cofinal; applied coordinatewise, "
                            "a product whose components each lie below X lies below X"),
    Rule("C4", "external", "distinct infinite regulars are incomparable; a factor k lies below "
                           "a product only if k is a factor or k <= its [mu]^<w part"),
]}

NORMALIZE_RULES = ("R-one", "R-idem", "R-2fin", "R-2inf", "R-day", "R-absorb",
                   "R-finsets-max", "R-wfold", "R-wsplit")


# ---------------------------------------------------------------- terms

class TypeTerm:
    __slots__ = ()


@dataclass(frozen=True)
class One(TypeTerm):
    pass


@dataclass(frozen=True)
class Ord(TypeTerm):
    card: Card

    def __post_init__(self):
        if not self.card.infinite:
            raise DomainError(f"(ord {self.card}): ord needs an infinite cardinal")


@dataclass(frozen=True)
class FinSets(TypeTerm):
    card: Card

    def __post_init__(self):
        if not self.card.infinite:
            raise DomainError(f"(finsets {self.card}): finsets needs an infinite cardinal")


@dataclass(frozen=True)
class Prod(TypeTerm):
    items: tuple[TypeTerm, ...]

    def __init__(self, *items):
        if len(items) == 1 and isinstance(items[0], (list, tuple)):
            items = items[0]
        object.__setattr__(self, "items", tuple(items))


@dataclass(frozen=True)
class WeakProd(TypeTerm):
    """Weak product with ``mult``-many copies of each ``base`` (as a chain)."""
    entries: tuple[tuple[Card, Card], ...]

    def __init__(self, *entries):
        if len(entries) == 1 and isinstance(entries[0], list):
            entries = entries[0]
        object.__setattr__(self, "entries", tuple((b, m) for b, m in entries))


def card_term(c: Card) -> TypeTerm:
    """The chain ``(c, <=)`` as a term; finite chains have a top, hence type 1."""
    if c.infinite:
        return Ord(c)
    if c.index == 0:
        raise DomainError("empty factor")
    return One() if c == ONE else WeakProd((c, ONE))


# ---------------------------------------------------------------- normal form

@dataclass(frozen=True)
class TukeyType:
    """Canonical type ``[finsets]^<w x prod(factors)``.

    ``finsets`` is ``None`` or uncountable; ``factors`` is a sorted tuple of
    distinct infinite cardinals, all above ``finsets``.  The empty type is 1.
    """
    finsets: Optional[Card] = None
    factors: tuple[Card, ...] = ()

    @property
    def is_one(self) -> bool:
        return self.finsets is None and not self.factors

    def components(self) -> list[TypeTerm]:
        out = [FinSets(self.finsets)] if self.finsets is not None else []
        return out + [Ord(k) for k in self.factors]

    def sort_key(self):
        return (type_size(self), self.finsets is not None, len(self.factors),
                self.finsets or ONE, self.factors)

    def __str__(self):
        if self.is_one:
            return "1"
        parts = [f"[{self.finsets}]^<w"] if self.finsets is not None else []
        return " x ".join(parts + [str(k) for k in self.factors])

    def pretty(self) -> str:
        if self.is_one:
            return "1"
        parts = [f"[{self.finsets.pretty()}]^<ω"] if self.finsets is not None else []
        return "×".join(parts + [k.pretty() for k in self.factors])

    def render(self) -> str:
        """Type-term text that normalizes back to this type."""
        comps = [f"(finsets {self.finsets})"] if self.finsets is not None else []
        comps += [f"(ord {k})" for k in self.factors]
        if not comps:
            return "1"
        if len(comps) == 1:
            return comps[0]
        return "(prod " + " ".join(comps) + ")"


ONE_TYPE = TukeyType()


def ord_type(k: Card) -> TukeyType:
    return normalize(card_term(k))


def finsets_type(k: Card) -> TukeyType:
    return normalize(FinSets(k))


# Atoms of the flattened product: ("w", base, mult) is a weak product of
# mult-many copies of the chain base, ("f", k) is [k]^<w.

def _flatten(t: TypeTerm, out: list) -> list:
    if isinstance(t, One):
        out.append(("w", ONE, ONE))
    elif isinstance(t, Ord):
        out.append(("w", t.card, ONE))
    elif isinstance(t, FinSets):
        out.append(("f", t.card))
    elif isinstance(t, Prod):
        for item in t.items:
            _flatten(item, out)
    elif isinstance(t, WeakProd):
        if not t.entries:
            raise DomainError("empty factor")
        for base, mult in t.entries:
            if base.index == 0 and base.finite or mult.index == 0 and mult.finite:
                raise DomainError("empty factor")
            out.append(("w", base, mult))
    else:
        raise TypeError(f"not a type term: {t!r}")
    return out


def _finsets(atoms):
    return [a[1] for a in atoms if a[0] == "f"]


def _redexes(rule: str, atoms: list) -> list:
    """All one-step rewrites of ``atoms`` by ``rule``, as (index, replacement)."""
    found = []
    fs = _finsets(atoms)
    for i, a in enumerate(atoms):
        if a[0] == "w":
            _, b, m = a
            if rule == "R-one" and b == ONE:
                found.append(((i,), []))
            elif rule == "R-idem" and b.infinite and m.finite and m.index >= 2:
                found.append(((i,), [("w", b, ONE)]))
            elif rule == "R-2fin" and b.finite and b.index >= 2 and m.finite:
                found.append(((i,), []))
            elif rule == "R-2inf" and b == TWO and m.infinite:
                found.append(((i,), [("f", m)]))
            elif rule == "R-wfold" and m.infinite and b >= TWO and b <= m:
                found.append(((i,), [("f", m)]))
            elif rule == "R-wsplit" and b.infinite and m.infinite and m < b:
                found.append(((i,), [("w", b, ONE), ("f", m)]))
            elif rule == "R-absorb" and any(b <= k and (m.finite or m <= k) for k in fs):
                found.append(((i,), []))
        else:
            if rule == "R-day" and a[1] == OMEGA:
                found.append(((i,), [("w", OMEGA, ONE)]))
    if rule == "R-idem":
        for i, a in enumerate(atoms):
            for j in range(i + 1, len(atoms)):
                if a[0] == "w" and a[1].infinite and atoms[j] == a:
                    found.append(((j,), []))
    if rule == "R-finsets-max":
        idx = [i for i, a in enumerate(atoms) if a[0] == "f"]
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                i, j = idx[x], idx[y]
                found.append(((i, j), [("f", max(atoms[i][1], atoms[j][1]))]))
    return found


def _apply(atoms, where, replacement):
    kept = [a for i, a in enumerate(atoms) if i not in where]
    return kept + replacement


@dataclass(frozen=True)
class Normalized:
    type: TukeyType
    trace: tuple[str, ...]


def normalize_traced(t: TypeTerm, rng: Optional[random.Random] = None) -> Normalized:
    """Normalize ``t``, returning the type and the ids of the rules applied.

    Without ``rng`` rules fire in the fixed order of
    :data:`NORMALIZE_RULES`; with ``rng`` both the rule and the redex are
    picked at random at every step.
    """
    atoms = _flatten(t, [])
    trace = []
    while True:
        order = list(NORMALIZE_RULES)
        if rng is not None:
            rng.shuffle(order)
        for rule in order:
            redexes = _redexes(rule, atoms)
            if redexes:
                where, repl = rng.choice(redexes) if rng is not None else redexes[0]
                atoms = _apply(atoms, where, repl)
                trace.append(rule)
                break
        else:
            break
    return Normalized(_assemble(atoms), tuple(trace))


def _assemble(atoms) -> TukeyType:
    fs = _finsets(atoms)
    assert len(fs) <= 1 and OMEGA not in fs, atoms
    factors = []
    for a in atoms:
        if a[0] == "w":
            _, b, m = a
            assert b.infinite and m == ONE and b not in factors, atoms
            factors.append(b)
    return TukeyType(fs[0] if fs else None, tuple(sorted(factors)))


def normalize(t: TypeTerm) -> TukeyType:
    return normalize_traced(t).type


def type_size(t: TukeyType) -> Card:
    """Cardinality of the underlying directed set."""
    cards = list(t.factors) + ([t.finsets] if t.finsets is not None else [])
    return max(cards) if cards else ONE


# ---------------------------------------------------------------- comparison

class Verdict(enum.Enum):
    LE = "LE"
    GE = "GE"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    mode: str
    trace: tuple[str, ...] = ()
    # True when the LE/GE is known to be strict
    proper: bool = False

    def __str__(self):
        s = f"{self.verdict.value} ({self.mode})"
        if self.proper:
            s += " proper"
        if self.trace:
            s += " | trace: [" + ", ".join(self.trace) + "]"
        return s


def _le_trace(a: TukeyType, b: TukeyType) -> Optional[list[str]]:
    """Rule trace deriving a <=_T b, or None if the rules give nothing."""
    if a.is_one:
        return ["C-min"]
    if a == b:
        return ["C-refl"]
    trace = []
    if a.finsets is not None:
        if b.finsets is None or a.finsets > b.finsets:
            return None
        trace += ["C1", "C3"]
    for k in a.factors:
        if k in b.factors:
            trace.append("C3")
        elif b.finsets is not None and k <= b.finsets:
            trace += ["C1", "C3"]
        else:
            return None
    if len(a.components()) > 1:
        trace.append("C-mono")
    return list(dict.fromkeys(trace))


def _proper_trace(a: TukeyType, b: TukeyType) -> Optional[list[str]]:
    """Published-rule reason why a <=_T b cannot be reversed, if any."""
    if a.is_one and not b.is_one:
        return ["C-min"]
    if len(a.factors) == 1 and a.finsets is None:
        k = a.factors[0]
        if k.uncountable and b.finsets is not None and b.finsets >= k:
            return ["C2"]
    return None


def compare_types(a: TukeyType, b: TukeyType, mode: str = "strict") -> Comparison:
    if mode not in ("strict", "extended"):
        raise DomainError(f"unknown mode {mode!r}")
    ab, ba = _le_trace(a, b), _le_trace(b, a)
    if ab is not None and ba is not None:
        return Comparison(Verdict.EQ, mode, tuple(dict.fromkeys(ab + ba)))
    if ab is None and ba is None:
        if mode == "strict":
            return Comparison(Verdict.UNKNOWN, mode)
        return Comparison(Verdict.INCOMPARABLE, mode, ("C4",))
    verdict = Verdict.LE if ab is not None else Verdict.GE
    lo, hi, trace = (a, b, ab) if ab is not None else (b, a, ba)
    why = _proper_trace(lo, hi)
    if why is not None:
        return Comparison(verdict, mode, tuple(dict.fromkeys(trace + why)), True)
    if mode == "extended":
        return Comparison(verdict, mode, tuple(trace + ["C4"]), True)
    return Comparison(verdict, mode, tuple(trace))


def universe(max_index: int) -> list[TukeyType]:
    """Every canonical type whose cardinals lie in aleph_0 .. aleph_max_index."""
    cards = [aleph(i) for i in range(max_index + 1)]
    out = []
    for f in [None] + cards[1:]:
        above = [k for k in cards if f is None or k > f]
        for mask in range(1 << len(above)):
            chosen = tuple(k for i, k in enumerate(above) if mask >> i & 1)
            out.append(TukeyType(f, chosen))
    return out
