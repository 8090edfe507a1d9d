import random

import pytest

from tukeyspectra import gen
from tukeyspectra.cardinals import OMEGA, ONE, aleph, fin
from tukeyspectra.errors import DomainError
from tukeyspectra.orders import (Fin, LexSum, Ord, Rev, Sum, classify_cuts, finite_points,
                                 intalg_spectrum, order_attrs, proper_cuts, realize_interval)
from tukeyspectra.tukey import ONE_TYPE, TukeyType, ord_type

W1 = aleph(1)


def types(*cards):
    return {TukeyType(None, tuple(sorted(c))) if isinstance(c, tuple) else
            (ONE_TYPE if c == ONE else ord_type(c)) for c in cards}


@pytest.mark.parametrize("t,want", [
    (Ord(W1), (W1, ONE)),
    (Rev(Ord(OMEGA)), (ONE, OMEGA)),
    (LexSum(OMEGA, Fin(2)), (OMEGA, ONE)),
    (Sum(Fin(2), Rev(Ord(W1))), (ONE, ONE)),
    (Sum(Ord(OMEGA), Rev(Ord(W1))), (ONE, ONE)),
    (Sum(Rev(Ord(OMEGA)), Ord(W1)), (W1, OMEGA)),
])
def test_attrs(t, want):
    assert order_attrs(t) == want


def test_cut_examples():
    pairs = {c.pair for c in classify_cuts(Ord(OMEGA))}
    assert pairs == {(ONE, ONE), (OMEGA, None)}
    pairs = {c.pair for c in classify_cuts(Sum(Ord(W1), Rev(Ord(W1))))}
    assert pairs == {(ONE, ONE), (OMEGA, ONE), (W1, W1), (ONE, OMEGA), (ONE, None)}
    assert {c.pair for c in classify_cuts(Fin(3))} == {(ONE, ONE), (ONE, None)}


def test_spectrum_examples():
    assert intalg_spectrum(Sum(Ord(W1), Rev(Ord(W1)))) == types(ONE, OMEGA, W1)
    assert intalg_spectrum(Ord(OMEGA)) == types(ONE, OMEGA)
    assert intalg_spectrum(Fin(5)) == types(ONE)


def test_no_maximal_type_for_uncountable_chains():
    rng = random.Random(3)
    for _ in range(300):
        for t in intalg_spectrum(gen.random_order(rng)):
            assert t.finsets is None


def test_reversal_swaps_cuts():
    rng = random.Random(11)
    for _ in range(300):
        t = gen.random_order(rng)
        assert proper_cuts(Rev(t)) == {(b, a) for a, b in proper_cuts(t)}
        cf, ci = order_attrs(t)
        assert order_attrs(Rev(t)) == (ci, cf)


def test_sum_associative():
    rng = random.Random(12)
    for _ in range(200):
        a, b, c = (gen.random_order(rng, depth=2) for _ in range(3))
        assert proper_cuts(Sum(a, Sum(b, c))) == proper_cuts(Sum(Sum(a, b), c))


def test_finite_orders_match_enumeration():
    # an n-point chain has n-1 proper cuts, each with a last point below and a first point above
    rng = random.Random(13)
    for _ in range(200):
        t = gen.random_order(rng, finite=True)
        n = finite_points(t)
        assert proper_cuts(t) == ({(ONE, ONE)} if n > 1 else set())
        assert intalg_spectrum(t) == {ONE_TYPE}


@pytest.mark.parametrize("pairs,term,spectrum", [
    ([(OMEGA, W1)], Sum(Ord(OMEGA), Rev(Ord(W1))), None),
    ([(W1, W1)], Sum(Ord(W1), Rev(Ord(W1))), types(ONE, OMEGA, W1)),
    ([(ONE, ONE)], Sum(Fin(1), Fin(1)), types(ONE)),
])
def test_realize_examples(pairs, term, spectrum):
    t = realize_interval(pairs)
    assert t == term
    if spectrum is not None:
        assert intalg_spectrum(t) == spectrum
    assert TukeyType(None, (OMEGA, W1)) in intalg_spectrum(realize_interval([(OMEGA, W1)]))


def test_realize_errors():
    with pytest.raises(DomainError):
        realize_interval([])
    with pytest.raises(DomainError):
        realize_interval([(aleph(0), fin(3))])


def test_term_validation():
    with pytest.raises(DomainError):
        Fin(0)
    with pytest.raises(DomainError):
        Ord(ONE)
    with pytest.raises(DomainError):
        Sum()
    with pytest.raises(DomainError):
        LexSum(ONE, Fin(1))


def test_spectrum_shape_and_double_reversal():
    rng = random.Random(14)
    for _ in range(300):
        t = gen.random_order(rng)
        assert classify_cuts(Rev(Rev(t))) == classify_cuts(t)
        for x in intalg_spectrum(t):
            assert x.finsets is None and len(x.factors) <= 2
