"""Explicit finite pseudo-trees and exhaustive oracles.

Everything here is brute force over small instances: initial chains, sets
of approximate immediate successors, the fan-extraction procedure, and the
correspondence between ultrafilters of the algebra generated by cones and
initial chains.  Finite instances only ever produce theta = 1, so the fan
oracle checks the grouping of successors into compatibility classes and the
surrounding machinery, not infinite coinitialities.

Poset text format: first line ``n``, then one ``a < b`` per line.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, ParseError
from .tukey import ONE_TYPE

DEFAULT_BOUND = 7


class FinitePoset:
    """Elements 0..n-1 with ``leq[a, b]`` meaning a <= b."""

    def __init__(self, leq, require_pseudotree=True):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise DomainError("relation must be a square matrix")
        self.n = leq.shape[0]
        self.leq = leq
        self.leq.setflags(write=False)
        if not self.is_partial_order():
            raise DomainError("relation is not a partial order")
        if require_pseudotree:
            if not self.is_pseudotree():
                raise DomainError("not a pseudo-tree: some down-set is not a chain")
            if len(self.roots()) != 1:
                raise DomainError(f"expected a single root, found {len(self.roots())}")

    @classmethod
    def from_pairs(cls, n, pairs, **kw):
        """Reflexive-transitive closure of the given ``a < b`` pairs."""
        m = np.eye(n, dtype=bool)
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise DomainError(f"element out of range in {a} < {b}")
            m[a, b] = True
        for k in range(n):
            m |= m[:, [k]] & m[[k], :]
        return cls(m, **kw)

    @classmethod
    def from_parents(cls, parents):
        """Rooted tree from a parent list; the root has parent -1."""
        return cls.from_pairs(len(parents), [(p, c) for c, p in enumerate(parents) if p >= 0])

    @classmethod
    def chain(cls, n):
        return cls.from_parents([-1] + list(range(n - 1)))

    @classmethod
    def parse(cls, text):
        lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
        lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
        if not lines:
            raise ParseError("empty poset description", (1, 1))
        lineno, head = lines[0]
        try:
            n = int(head)
        except ValueError:
            raise ParseError(f"expected element count, got {head!r}", (lineno, 1)) from None
        pairs = []
        for lineno, ln in lines[1:]:
            parts = ln.split("<")
            if len(parts) != 2:
                raise ParseError(f"expected 'a < b', got {ln!r}", (lineno, 1))
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError(f"expected integers in {ln!r}", (lineno, 1)) from None
        return cls.from_pairs(n, pairs)

    def to_text(self):
        lines = [str(self.n)]
        lines += [f"{a} < {b}" for a, b in self.covers()]
        return "\n".join(lines) + "\n"

    # -- structure

    def is_partial_order(self):
        m = self.leq
        if not m.diagonal().all():
            return False
        if (m & m.T & ~np.eye(self.n, dtype=bool)).any():
            return False
        composed = (m.astype(np.int32) @ m.astype(np.int32)) > 0
        return not (composed & ~m).any()

    def comparable(self, a, b):
        return bool(self.leq[a, b] or self.leq[b, a])

    def is_chain(self, elems):
        return all(self.comparable(a, b) for a, b in itertools.combinations(elems, 2))

    def down(self, t):
        return frozenset(np.flatnonzero(self.leq[:, t]).tolist())

    def up(self, t):
        return frozenset(np.flatnonzero(self.leq[t, :]).tolist())

    def is_pseudotree(self):
        return all(self.is_chain(self.down(t)) for t in range(self.n))

    def roots(self):
        return [t for t in range(self.n) if self.down(t) == {t}]

    def covers(self):
        out = []
        for a in range(self.n):
            for b in range(self.n):
                if a != b and self.leq[a, b]:
                    if not any(c not in (a, b) and self.leq[a, c] and self.leq[c, b]
                               for c in range(self.n)):
                        out.append((a, b))
        return out

    def children(self, t):
        return sorted(b for a, b in self.covers() if a == t)

    def above(self, chain):
        """Elements strictly above every element of ``chain``."""
        return frozenset(t for t in range(self.n)
                         if all(self.leq[c, t] and c != t for c in chain))

    def canonical_form(self):
        """Canonical string of a rooted tree (isomorphism invariant)."""
        kids = {t: [] for t in range(self.n)}
        for a, b in self.covers():
            kids[a].append(b)

        def enc(t):
            return "(" + "".join(sorted(enc(c) for c in kids[t])) + ")"
        return "".join(sorted(enc(r) for r in self.roots()))

    def __repr__(self):
        return f"FinitePoset({self.n}, covers={self.covers()})"


def _subsets(elems):
    elems = sorted(elems)
    for r in range(len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            yield frozenset(combo)


# ---------------------------------------------------------------- generation

def rooted_trees(n: int) -> list[FinitePoset]:
    """All rooted trees with ``n`` nodes up to isomorphism.

    Grows every tree on n - 1 nodes by one leaf in every position and keeps
    one representative per canonical form.
    """
    if n < 1:
        return []
    level = {"()": [-1]}
    for _ in range(n - 1):
        nxt = {}
        for parents in level.values():
            for p in range(len(parents)):
                cand = parents + [p]
                key = FinitePoset.from_parents(cand).canonical_form()
                nxt.setdefault(key, cand)
        level = nxt
    return [FinitePoset.from_parents(level[k]) for k in sorted(level)]


def pseudotrees_up_to(max_n: int) -> list[FinitePoset]:
    return [p for n in range(1, max_n + 1) for p in rooted_trees(n)]


# ---------------------------------------------------------------- chains and fans

def initial_chains(P: FinitePoset) -> list[frozenset]:
    """Non-empty downward-closed chains, by exhaustive search over subsets."""
    out = []
    for s in _subsets(range(P.n)):
        if not s or not P.is_chain(s):
            continue
        if all(P.down(c) <= s for c in s):
            out.append(s)
    return out


def is_approx_successor_set(P: FinitePoset, C, R) -> bool:
    over = P.above(C)
    if not R <= over:
        return False
    return all(any(P.leq[r, s] for r in R) for s in over)


def approx_successor_sets(P: FinitePoset, C) -> list[frozenset]:
    return [R for R in _subsets(P.above(C)) if is_approx_successor_set(P, C, R)]


def _coinitiality(P: FinitePoset, elems) -> int:
    # a finite non-empty chain has a least element
    least = [a for a in elems if all(P.leq[a, b] for b in elems)]
    if not least:
        raise DomainError("chain without a least element")
    return 1


@dataclass(frozen=True)
class FiniteFan:
    classes: tuple[frozenset, ...]
    lam: int
    thetas: tuple[int, ...]

    def invariant(self):
        return (self.lam, self.thetas)


def lambda_fan_finite(P: FinitePoset, C, S) -> FiniteFan:
    """Group a set of approximate successors of C into its fan.

    Index S as s_0, s_1, ...; for each s_d let g(d) be the least index whose
    part above C meets the part of s_d above C.  Elements with the same g
    form one class; each class contributes the coinitiality of the part of
    s_g above C.
    """
    C, S = frozenset(C), frozenset(S)
    if not is_approx_successor_set(P, C, S):
        raise DomainError(f"{sorted(S)} is not a set of approximate successors of {sorted(C)}")
    seq = sorted(S)
    tails = [P.down(s) - C for s in seq]
    gamma = [min(g for g in range(len(seq)) if tails[g] & tails[d]) for d in range(len(seq))]
    groups = {}
    for d, g in enumerate(gamma):
        groups.setdefault(g, set()).add(seq[d])
    classes = tuple(frozenset(groups[g]) for g in sorted(groups))
    thetas = tuple(sorted(_coinitiality(P, tails[g]) for g in groups))
    return FiniteFan(classes, len(classes), thetas)


def minimal_above(P: FinitePoset, C) -> frozenset:
    over = P.above(C)
    return frozenset(t for t in over if not any(s != t and P.leq[s, t] for s in over))


# ---------------------------------------------------------------- oracles

@dataclass
class FanOracleReport:
    max_n: int
    posets: int = 0
    chains: int = 0
    successor_sets: int = 0
    violations: list = field(default_factory=list)

    header = ("finite pseudo-trees only realize theta = 1; this checks the grouping "
              "of approximate successors into fan classes")

    def summary(self):
        return (f"{self.header}\n"
                f"max_n={self.max_n} posets={self.posets} chains={self.chains} "
                f"successor_sets={self.successor_sets}\n"
                f"{len(self.violations)} violations")

    def to_json(self):
        d = asdict(self)
        d["header"] = self.header
        return d


def _fan_check(P: FinitePoset):
    chains = initial_chains(P)
    n_sets = 0
    bad = []
    for C in chains:
        seen = set()
        for S in approx_successor_sets(P, C):
            n_sets += 1
            seen.add(lambda_fan_finite(P, C, S).invariant())
        if len(seen) != 1:
            bad.append({"poset": P.to_text(), "chain": sorted(C),
                        "invariants": sorted(map(str, seen))})
    return len(chains), n_sets, bad


def fan_invariance_oracle(max_n: int, bound: int = DEFAULT_BOUND, workers: int = 1) -> FanOracleReport:
    """Every approximate-successor set of every chain gives the same fan invariant."""
    if max_n > bound:
        raise DomainError(f"max_n={max_n} exceeds the configured bound {bound}")
    posets = pseudotrees_up_to(max_n)
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_fan_check, posets))
    else:
        results = [_fan_check(P) for P in posets]
    report = FanOracleReport(max_n, posets=len(posets))
    for n_chains, n_sets, bad in results:
        report.chains += n_chains
        report.successor_sets += n_sets
        report.violations += bad
    return report


class SetAlgebra:
    """Boolean algebra of subsets of range(n) (as bitmasks) generated by sets."""

    def __init__(self, n, generators):
        self.n = n
        self.top = (1 << n) - 1
        elems = {0, self.top}
        frontier = set(generators) | {self.top ^ g for g in generators}
        while frontier:
            elems |= frontier
            new = set()
            for a in frontier:
                for b in list(elems):
                    for c in (a & b, a | b):
                        if c not in elems:
                            new.add(c)
                if self.top ^ a not in elems:
                    new.add(self.top ^ a)
            frontier = new
        self.elements = frozenset(elems)

    def atoms(self):
        nonzero = [a for a in self.elements if a]
        return sorted(a for a in nonzero if not any(b != a and b & a == b for b in nonzero))

    def is_ultrafilter(self, U) -> bool:
        if 0 in U or self.top not in U:
            return False
        for a in U:
            for b in self.elements:
                if a & b == a and b not in U:
                    return False
            for b in U:
                if a & b not in U:
                    return False
        return all((a in U) != ((self.top ^ a) in U) for a in self.elements)

    def generated_filter(self, gens):
        meets = {self.top} | set(gens)
        frontier = set(meets)
        while frontier:
            new = {a & b for a in frontier for b in meets} - meets
            meets |= new
            frontier = new
        return frozenset(b for b in self.elements if any(m & b == m for m in meets))


def _mask(elems):
    out = 0
    for e in elems:
        out |= 1 << e
    return out


def cone_algebra(P: FinitePoset) -> SetAlgebra:
    return SetAlgebra(P.n, [_mask(P.up(t)) for t in range(P.n)])


def ultrafilters(A: SetAlgebra) -> list[frozenset]:
    """Ultrafilters of a finite algebra, one per atom."""
    return [frozenset(b for b in A.elements if a & b == a) for a in A.atoms()]


def h_generators(P: FinitePoset, C) -> set:
    """Cones over C minus finitely many cones over antichains above C."""
    over = sorted(P.above(C))
    antichains = [S for S in _subsets(over)
                  if all(not P.comparable(a, b) for a, b in itertools.combinations(S, 2))]
    gens = set()
    for t in C:
        for S in antichains:
            gens.add(_mask(P.up(t)) & ~_mask(set().union(*[P.up(s) for s in S])))
    return gens


@dataclass
class StoneReport:
    posets: int = 0
    ultrafilters: int = 0
    chains: int = 0
    failures: list = field(default_factory=list)

    def summary(self):
        return (f"posets={self.posets} ultrafilters={self.ultrafilters} chains={self.chains}\n"
                f"{len(self.failures)} failures")

    def to_json(self):
        return asdict(self)


def stone_correspondence_oracle(P: FinitePoset) -> StoneReport:
    """Check ultrafilters <-> initial chains and the H_C generators on one poset."""
    A = cone_algebra(P)
    report = StoneReport(posets=1)
    chains = initial_chains(P)
    ufs = ultrafilters(A)
    report.ultrafilters, report.chains = len(ufs), len(chains)

    def fail(msg):
        report.failures.append({"poset": P.to_text(), "problem": msg})

    for U in ufs:
        if not A.is_ultrafilter(U):
            fail("atom filter is not an ultrafilter")
    if not len(ufs) == len(chains) == P.n:
        fail(f"counts differ: {len(ufs)} ultrafilters, {len(chains)} chains, {P.n} points")
    cones = [_mask(P.up(t)) for t in range(P.n)]
    phi = {}
    for U in ufs:
        phi[U] = frozenset(t for t in range(P.n) if cones[t] in U)
    images = list(phi.values())
    if len(set(images)) != len(images):
        fail("phi is not injective")
    if set(images) != set(chains):
        fail("phi is not onto the initial chains")
    inverse = {C: U for U, C in phi.items()}
    for C in chains:
        gens = h_generators(P, C)
        if any(a & b not in gens for a in gens for b in gens):
            fail(f"H_C not closed under meets for C={sorted(C)}")
        if C in inverse and A.generated_filter(gens) != inverse[C]:
            fail(f"<H_C> differs from phi^-1(C) for C={sorted(C)}")
    return report


def stone_oracle_sweep(max_n: int) -> StoneReport:
    total = StoneReport()
    for P in pseudotrees_up_to(max_n):
        r = stone_correspondence_oracle(P)
        total.posets += 1
        total.ultrafilters += r.ultrafilters
        total.chains += r.chains
        total.failures += r.failures
    return total


def finite_spectrum(P: FinitePoset) -> frozenset:
    """Tukey types of the ultrafilters of the cone algebra of ``P``.

    Every ultrafilter of a finite algebra contains an atom, which is then
    its least element, so every type is 1.
    """
    A = cone_algebra(P)
    out = set()
    for U in ultrafilters(A):
        least = [a for a in U if all(a & b == a for b in U)]
        if not least:
            raise AssertionError("ultrafilter of a finite algebra without a least element")
        out.add(ONE_TYPE)
    return frozenset(out)
