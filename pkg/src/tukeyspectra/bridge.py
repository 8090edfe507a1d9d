"""Lowering finite symbolic terms to explicit posets, and cross-checks.

A term built only from finite blocks with finite multiplicities denotes an
actual finite pseudo-tree.  Lowering it lets the symbolic class computation
be compared with brute force on the explicit object.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field

from . import finite, gen
from .errors import DomainError
from .cardinals import ONE
from .orders import Fin, finite_points
from .pseudotrees import PTreeTerm, embed, ptree_chain_classes, ptree_spectrum
from .syntax import tree_to_text
from .trees import TreeTerm, tree_chain_classes, tree_spectrum
from .tukey import ONE_TYPE


def _lower(t, parent, parents, extra_bottom):
    k = finite_points(t.trunk) + (1 if extra_bottom else 0)
    for _ in range(k):
        parents.append(parent)
        parent = len(parents) - 1
    for mult, sub in t.branches:
        if mult.infinite:
            raise DomainError("cannot lower an infinite multiplicity")
        for _ in range(mult.index):
            _lower(sub, parent, parents, False)


def lower(t) -> finite.FinitePoset:
    """Explicit poset of a finite tree or pseudo-tree term.

    Pseudo-tree terms get their bottom point, tree terms do not.
    """
    parents = []
    _lower(t, -1, parents, isinstance(t, PTreeTerm))
    return finite.FinitePoset.from_parents(parents)


def term_of(P: finite.FinitePoset, root: int = None) -> TreeTerm:
    """Tree term of a finite rooted tree, one branch per child."""
    if root is None:
        (root,) = P.roots()
    return TreeTerm(Fin(1), tuple((ONE, term_of(P, c)) for c in sorted(P.children(root))))


def explicit_fans(P: finite.FinitePoset) -> set:
    """(lambda, thetas) of the fan above every initial chain of P."""
    out = set()
    for C in finite.initial_chains(P):
        out.add(finite.lambda_fan_finite(P, C, finite.minimal_above(P, C)).invariant())
    return out


def symbolic_fans(t: PTreeTerm) -> set:
    out = set()
    for c in ptree_chain_classes(t):
        assert c.cf.index == 1 and not c.cf.infinite
        thetas = []
        for mult, th in c.fan.classes:
            thetas += [th.index] * mult.index
        out.add((c.fan.lam.index, tuple(sorted(thetas))))
    return out


def symbolic_tree_fans(t: TreeTerm) -> set:
    return {(c.succ_count.index, (1,) * c.succ_count.index) for c in tree_chain_classes(t)}


def check_finite_tree(t: TreeTerm) -> list[str]:
    """Problems found comparing a finite tree term with its explicit poset."""
    problems = []
    pt = embed(t)
    P, Q = lower(t), lower(pt)
    if tree_spectrum(t) != {ONE_TYPE}:
        problems.append(f"tree spectrum {sorted(map(str, tree_spectrum(t)))} != {{1}}")
    if ptree_spectrum(pt) != {ONE_TYPE}:
        problems.append("ptree spectrum != {1}")
    if finite.finite_spectrum(P) != {ONE_TYPE}:
        problems.append("explicit spectrum != {1}")
    if symbolic_tree_fans(t) != explicit_fans(P):
        problems.append(f"tree fans {symbolic_tree_fans(t)} != explicit {explicit_fans(P)}")
    if symbolic_fans(pt) != explicit_fans(Q):
        problems.append(f"ptree fans {symbolic_fans(pt)} != explicit {explicit_fans(Q)}")
    return problems


def check_finite_ptree(t: PTreeTerm) -> list[str]:
    Q = lower(t)
    problems = []
    if ptree_spectrum(t) != finite.finite_spectrum(Q):
        problems.append("ptree spectrum differs from the explicit one")
    if symbolic_fans(t) != explicit_fans(Q):
        problems.append(f"ptree fans {symbolic_fans(t)} != explicit {explicit_fans(Q)}")
    return problems


@dataclass
class BridgeReport:
    samples: int
    finite_samples: int = 0
    shapes: int = 0
    failures: list = field(default_factory=list)

    def summary(self):
        return (f"samples={self.samples} finite_samples={self.finite_samples} "
                f"shapes={self.shapes}\n"
                f"{len(self.failures)} failures")

    def to_json(self):
        return asdict(self)


def bridge_oracle(samples: int = 1000, seed: int = 0, max_points: int = 9,
                  shapes_up_to: int = 6) -> BridgeReport:
    """Random tree terms: tree and pseudo-tree spectra agree; finite ones match brute force.

    Every finite tree shape with at most ``shapes_up_to`` points is checked too.
    """
    rng = random.Random(seed)
    report = BridgeReport(samples)
    for _ in range(samples):
        t = gen.random_tree(rng)
        if tree_spectrum(t) != ptree_spectrum(embed(t)):
            report.failures.append({"term": tree_to_text(t), "problem": "tree != ptree spectrum"})
    done = 0
    while done < samples // 10 or done == 0:
        t = gen.random_tree(rng, depth=2, finite=True)
        if lower(t).n > max_points:
            continue
        done += 1
        for p in check_finite_tree(t):
            report.failures.append({"term": tree_to_text(t), "problem": p})
    report.finite_samples = done
    for P in finite.pseudotrees_up_to(shapes_up_to):
        t = term_of(P)
        report.shapes += 1
        problems = check_finite_tree(t)
        if lower(t).canonical_form() != P.canonical_form():
            problems.append("lowering does not give back the shape")
        report.failures += [{"term": tree_to_text(t), "problem": p} for p in problems]
    return report
