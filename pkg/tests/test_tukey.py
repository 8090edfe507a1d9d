import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tukeyspectra import gen, syntax
from tukeyspectra.cardinals import OMEGA, ONE, TWO, aleph, fin
from tukeyspectra.errors import DomainError
from tukeyspectra.tukey import (NORMALIZE_RULES, ONE_TYPE, RULES, FinSets, One, Ord, Prod,
                                TukeyType, Verdict, WeakProd, compare_types, finsets_type,
                                normalize, normalize_traced, ord_type, type_size, universe)

W1, W2 = aleph(1), aleph(2)


def denote(t):
    """Reduced form (F, K) by structural recursion, independent of the rewriter."""
    if isinstance(t, One):
        return reduce(None, set())
    if isinstance(t, Ord):
        return reduce(None, {t.card})
    if isinstance(t, FinSets):
        return reduce(t.card, set())
    if isinstance(t, Prod):
        parts = [(d.finsets, set(d.factors)) for d in map(denote, t.items)]
    else:
        parts = []
        for b, m in t.entries:
            if m.finite:
                parts.append((None, {b} if b.infinite else set()))
            elif b == ONE:
                parts.append((None, set()))
            else:
                parts.append((m, {b} if b.infinite else set()))
    fs = [f for f, _ in parts if f is not None]
    return reduce(max(fs) if fs else None, set().union(*[k for _, k in parts]))


def reduce(f, ks):
    if f == OMEGA:
        f, ks = None, ks | {OMEGA}
    if f is not None:
        ks = {k for k in ks if k > f}
    return TukeyType(f, tuple(sorted(ks)))


@pytest.mark.parametrize("term,want", [
    (Prod(Ord(OMEGA), Ord(OMEGA)), ord_type(OMEGA)),
    (WeakProd((TWO, W1)), finsets_type(W1)),
    (Prod(One(), Ord(W1)), ord_type(W1)),
    (WeakProd((OMEGA, OMEGA)), ord_type(OMEGA)),
    (FinSets(OMEGA), ord_type(OMEGA)),
    (WeakProd((TWO, fin(5))), ONE_TYPE),
    (WeakProd((W2, OMEGA)), TukeyType(None, (OMEGA, W2))),
    (WeakProd((OMEGA, W1)), finsets_type(W1)),
    (Prod(FinSets(W1), Ord(OMEGA), Ord(W2)), TukeyType(W1, (W2,))),
])
def test_examples(term, want):
    assert normalize(term) == want
    assert denote(term) == want


def test_traces_use_known_rules():
    n = normalize_traced(WeakProd((TWO, W1)))
    assert n.trace == ("R-2inf",)
    assert normalize_traced(FinSets(OMEGA)).trace == ("R-day",)
    assert set(NORMALIZE_RULES) <= set(RULES)


def test_empty_factor():
    for bad in (WeakProd((TWO, fin(0))), WeakProd((fin(0), OMEGA)), WeakProd()):
        with pytest.raises(DomainError, match="empty factor"):
            normalize(bad)


def test_infinite_terms_require_infinite_cards():
    with pytest.raises(DomainError):
        Ord(fin(3))
    with pytest.raises(DomainError):
        FinSets(fin(3))


@pytest.mark.parametrize("i", range(6))
def test_weak_power_of_two(i):
    want = ord_type(OMEGA) if i == 0 else finsets_type(aleph(i))
    assert normalize(WeakProd((TWO, aleph(i)))) == want


@pytest.mark.parametrize("n", [1, 2, 5])
def test_power_collapses(n):
    assert normalize(Prod(*[Ord(W2)] * n)) == ord_type(W2)


def test_random_agrees_with_denotation():
    rng = random.Random(7)
    for _ in range(2000):
        t = gen.random_type_term(rng)
        n = normalize(t)
        assert n == denote(t), t
        assert normalize(Prod(*n.components())) == n
        assert all(normalize_traced(t, random.Random(s)).type == n for s in range(3))


def test_size():
    assert type_size(TukeyType(None, (OMEGA, W1))) == W1
    assert type_size(finsets_type(W1)) == W1
    assert type_size(ONE_TYPE) == ONE


def test_render_roundtrip():
    for t in universe(3):
        assert normalize(syntax.parse_type(t.render())) == t


def test_compare_examples():
    c = compare_types(ord_type(W1), finsets_type(W1))
    assert (c.verdict, c.proper) == (Verdict.LE, True)
    assert "C2" in c.trace
    c = compare_types(normalize(Prod(Ord(OMEGA), Ord(W1))), ord_type(OMEGA))
    assert c.verdict is Verdict.GE
    assert compare_types(ord_type(W1), ord_type(W2)).verdict is Verdict.UNKNOWN
    assert compare_types(ord_type(W1), ord_type(W2), "extended").verdict is Verdict.INCOMPARABLE
    assert compare_types(ord_type(OMEGA), normalize(FinSets(OMEGA))).verdict is Verdict.EQ
    c = compare_types(ONE_TYPE, ord_type(OMEGA))
    assert (c.verdict, c.proper, c.trace) == (Verdict.LE, True, ("C-min",))


def test_compare_bad_mode():
    with pytest.raises(DomainError):
        compare_types(ONE_TYPE, ONE_TYPE, "loose")


def test_universe_size():
    # 2^6 types without a finsets part, plus 2^(5-i) for each finsets part w_i, i = 1..5
    assert len(universe(5)) == 64 + 16 + 8 + 4 + 2 + 1


def test_strict_and_extended_agree_when_strict_decides():
    u = universe(3)
    for a in u:
        for b in u:
            s, e = compare_types(a, b), compare_types(a, b, "extended")
            if s.verdict is not Verdict.UNKNOWN:
                assert s.verdict == e.verdict
            if s.proper:
                assert e.proper
            for c in (s, e):
                if c.verdict is not Verdict.UNKNOWN:
                    assert c.trace
                if c.mode == "strict":
                    assert "C4" not in c.trace


cards = st.integers(0, 5).map(aleph)


@given(cards, cards)
@settings(max_examples=100)
def test_chains_compare_by_index(a, b):
    c = compare_types(ord_type(a), ord_type(b), "extended")
    assert c.verdict is (Verdict.EQ if a == b else Verdict.INCOMPARABLE)
