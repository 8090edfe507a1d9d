import random

import pytest

from tukeyspectra import gen
from tukeyspectra.cardinals import OMEGA, ONE, TWO, ZERO, aleph
from tukeyspectra.errors import DomainError
from tukeyspectra.orders import Fin, Ord, Rev, Sum
from tukeyspectra.trees import (TreeClass, TreeTerm, leaf, star, tree_chain_classes,
                                tree_has_max_type, tree_size, tree_spectrum)
from tukeyspectra.tukey import ONE_TYPE, finsets_type, ord_type

W1 = aleph(1)


def test_omega_star_classes():
    assert tree_chain_classes(star(OMEGA)) == {
        TreeClass(ONE, OMEGA, ord_type(OMEGA)),
        TreeClass(ONE, ZERO, ONE_TYPE),
    }


def test_long_trunk_classes():
    assert tree_chain_classes(TreeTerm(Ord(W1))) == {
        TreeClass(ONE, ONE, ONE_TYPE),
        TreeClass(OMEGA, ONE, ord_type(OMEGA)),
        TreeClass(W1, ZERO, ord_type(W1)),
    }


def test_binary_tree_is_finite():
    t = TreeTerm(Fin(1), ((TWO, TreeTerm(Fin(1), ((TWO, leaf()),))),))
    for c in tree_chain_classes(t):
        assert c.cf == ONE and c.succ_count.finite and c.tukey == ONE_TYPE


@pytest.mark.parametrize("t,want", [
    (star(OMEGA), {ord_type(OMEGA), ONE_TYPE}),
    (TreeTerm(Ord(W1)), {ONE_TYPE, ord_type(OMEGA), ord_type(W1)}),
    (star(W1), {finsets_type(W1), ONE_TYPE}),
])
def test_spectra(t, want):
    assert tree_spectrum(t) == want


def test_max_type():
    assert tree_has_max_type(star(W1), W1)
    assert not tree_has_max_type(TreeTerm(Ord(W1)), W1)
    assert tree_has_max_type(star(OMEGA), OMEGA)
    assert tree_size(star(W1)) == W1


def test_max_type_matches_spectrum():
    rng = random.Random(5)
    for _ in range(300):
        t = gen.random_tree(rng)
        k = tree_size(t)
        if k.infinite:
            want = (ord_type(OMEGA) if k == OMEGA else finsets_type(k)) in tree_spectrum(t)
            assert tree_has_max_type(t) == want


def test_not_a_tree():
    with pytest.raises(DomainError, match="not a tree"):
        TreeTerm(Sum(Fin(1), Rev(Ord(OMEGA))))
    with pytest.raises(DomainError):
        TreeTerm(Fin(1), ((ZERO, leaf()),))
