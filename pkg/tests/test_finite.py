import itertools
import json

import numpy as np
import pytest

from tukeyspectra import finite
from tukeyspectra.errors import DomainError, ParseError
from tukeyspectra.finite import (FinitePoset, SetAlgebra, approx_successor_sets, cone_algebra,
                                 fan_invariance_oracle, initial_chains, lambda_fan_finite,
                                 minimal_above, rooted_trees, stone_correspondence_oracle,
                                 ultrafilters)
from tukeyspectra.tukey import ONE_TYPE

# rooted unlabeled trees, OEIS A000081
A000081 = [1, 1, 2, 4, 9, 20, 48]

R, A, B, C, D = range(5)


def shape(parents, v=0):
    return tuple(sorted(shape(parents, c) for c, p in enumerate(parents) if p == v and c != v))


def increasing_trees(n):
    # every rooted shape has a labelling where parents precede children
    for ps in itertools.product(*[range(i) for i in range(1, n)]):
        yield [-1] + list(ps)


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_counts(n):
    assert len(rooted_trees(n)) == A000081[n - 1]
    assert len({shape(p) for p in increasing_trees(n)}) == A000081[n - 1]


@pytest.mark.parametrize("n", range(1, 5))
def test_tree_counts_by_brute_force(n):
    # all reflexive relations on n points, filtered by the pseudo-tree checks
    off = [(a, b) for a in range(n) for b in range(n) if a != b]
    forms = set()
    for bits in itertools.product([False, True], repeat=len(off)):
        m = np.eye(n, dtype=bool)
        for (a, b), on in zip(off, bits):
            m[a, b] = on
        try:
            P = FinitePoset(m)
        except DomainError:
            continue
        forms.add(P.canonical_form())
    assert len(forms) == A000081[n - 1]


def test_rejects_non_pseudotrees():
    with pytest.raises(DomainError, match="pseudo-tree"):
        FinitePoset.from_pairs(3, [(0, 2), (1, 2)])
    with pytest.raises(DomainError, match="single root"):
        FinitePoset.from_pairs(2, [])
    with pytest.raises(DomainError, match="partial order"):
        FinitePoset(np.ones((2, 2), dtype=bool))
    FinitePoset.from_pairs(2, [], require_pseudotree=False)


def test_parse_roundtrip(five):
    P = FinitePoset.parse(five.to_text())
    assert (P.leq == five.leq).all()
    assert FinitePoset.parse("3\n0 < 1\n# comment\n1 < 2\n").is_chain(range(3))


@pytest.mark.parametrize("text,line", [("", 1), ("x", 1), ("3\n0 < 1\n1 - 2", 3), ("2\na < b", 2)])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as e:
        FinitePoset.parse(text)
    assert str(e.value).startswith(f"{line}:")


def test_initial_chains(five):
    assert len(initial_chains(five)) == 5
    assert len(initial_chains(FinitePoset.chain(1))) == 1
    assert len(initial_chains(FinitePoset.chain(3))) == 3


def test_approx_successors(five):
    got = set(approx_successor_sets(five, {R}))
    assert got == {frozenset({A, B}) | frozenset(x) for x in [(), (C,), (D,), (C, D)]}
    assert approx_successor_sets(five, {R, A, C}) == [frozenset()]
    chain = FinitePoset.chain(3)
    assert set(approx_successor_sets(chain, {0})) == {frozenset({1}), frozenset({1, 2})}


def test_lambda_fan(five):
    fan = lambda_fan_finite(five, {R}, {A, B, C})
    assert (fan.lam, set(fan.classes), fan.thetas) == (2, {frozenset({A, C}), frozenset({B})}, (1, 1))
    assert lambda_fan_finite(five, {R, B}, set()).lam == 0
    with pytest.raises(DomainError):
        lambda_fan_finite(five, {R}, {C, D})


def test_minimal_above_is_a_fan(five):
    for P in finite.pseudotrees_up_to(5):
        for ch in initial_chains(P):
            S = minimal_above(P, ch)
            fan = lambda_fan_finite(P, ch, S)
            assert fan.lam == len(S) and set(fan.thetas) <= {1}


@pytest.mark.parametrize("max_n", [1, 5])
def test_fan_oracle(max_n):
    r = fan_invariance_oracle(max_n)
    assert r.violations == []
    assert r.summary().endswith("0 violations")
    assert r.posets == sum(A000081[:max_n])
    json.dumps(r.to_json())


def test_fan_oracle_bound():
    with pytest.raises(DomainError):
        fan_invariance_oracle(8)


def test_fan_oracle_workers():
    assert fan_invariance_oracle(5, workers=2).to_json() == fan_invariance_oracle(5).to_json()


@pytest.mark.parametrize("P,n", [
    (FinitePoset.from_pairs(5, [(R, A), (R, B), (A, C), (A, D)]), 5),
    (FinitePoset.chain(1), 1),
    (FinitePoset.chain(3), 3),
])
def test_stone(P, n):
    r = stone_correspondence_oracle(P)
    assert (r.ultrafilters, r.chains, r.failures) == (n, n, [])


def test_set_algebra():
    S = SetAlgebra(3, [0b001, 0b011])
    assert sorted(S.atoms()) == [0b001, 0b010, 0b100]
    assert len(ultrafilters(S)) == 3
    assert S.generated_filter([0b011]) == frozenset(x for x in S.elements if x & 0b011 == 0b011)


def test_cone_algebra_atoms_are_points(five):
    A_ = cone_algebra(five)
    assert sorted(A_.atoms()) == [1 << i for i in range(5)]
    assert finite.finite_spectrum(five) == {ONE_TYPE}
