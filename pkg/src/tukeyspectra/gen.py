"""Random terms for property tests and oracle sweeps."""
from __future__ import annotations

import random

from . import orders, tukey
from .cardinals import ONE, TWO, Card, aleph, fin
from .pseudotrees import PTreeTerm
from .trees import TreeTerm


def random_infinite(rng: random.Random, max_index: int = 3) -> Card:
    return aleph(rng.randint(0, max_index))


def random_card(rng: random.Random, max_index: int = 3, max_fin: int = 4) -> Card:
    if rng.random() < 0.4:
        return fin(rng.randint(1, max_fin))
    return random_infinite(rng, max_index)


def random_order(rng, depth=3, finite=False, well_ordered=False, max_index=3):
    leaves = ["fin"] if finite else ["fin", "ord"]
    nodes = ["sum"] + ([] if well_ordered else ["rev"]) + ([] if finite else ["lexsum"])
    if depth <= 0 or rng.random() < 0.35:
        if rng.choice(leaves) == "fin":
            return orders.Fin(rng.randint(1, 4))
        return orders.Ord(random_infinite(rng, max_index))
    kind = rng.choice(nodes)
    if kind == "rev":
        return orders.Rev(random_order(rng, depth - 1, finite, well_ordered, max_index))
    if kind == "lexsum":
        return orders.LexSum(random_infinite(rng, max_index),
                             random_order(rng, depth - 1, finite, well_ordered, max_index))
    return orders.Sum(*[random_order(rng, depth - 1, finite, well_ordered, max_index)
                        for _ in range(rng.randint(1, 3))])


def _mult(rng, finite, max_index):
    if finite or rng.random() < 0.5:
        return fin(rng.randint(1, 3))
    return random_infinite(rng, max_index)


def random_tree(rng, depth=3, finite=False, max_index=3) -> TreeTerm:
    trunk = random_order(rng, 2, finite=finite, well_ordered=True, max_index=max_index)
    branches = []
    if depth > 0:
        for _ in range(rng.randint(0, 3)):
            branches.append((_mult(rng, finite, max_index),
                             random_tree(rng, depth - 1, finite, max_index)))
    return TreeTerm(trunk, tuple(branches))


def random_ptree(rng, depth=3, finite=False, max_index=3) -> PTreeTerm:
    trunk = random_order(rng, 2, finite=finite, max_index=max_index)
    branches = []
    if depth > 0:
        for _ in range(rng.randint(0, 3)):
            branches.append((_mult(rng, finite, max_index),
                             random_ptree(rng, depth - 1, finite, max_index)))
    return PTreeTerm(trunk, tuple(branches))


def random_type_term(rng, depth=3, max_index=3) -> tukey.TypeTerm:
    r = rng.random()
    if depth <= 0 or r < 0.3:
        leaf = rng.randrange(4)
        if leaf == 0:
            return tukey.One()
        if leaf == 1:
            return tukey.Ord(random_infinite(rng, max_index))
        if leaf == 2:
            return tukey.FinSets(random_infinite(rng, max_index))
        return tukey.card_term(fin(rng.randint(2, 3)))
    if r < 0.65:
        entries = []
        for _ in range(rng.randint(1, 3)):
            base = rng.choice([ONE, TWO, fin(3), random_infinite(rng, max_index)])
            mult = random_card(rng, max_index)
            entries.append((base, mult))
        return tukey.WeakProd(*entries)
    return tukey.Prod(*[random_type_term(rng, depth - 1, max_index)
                        for _ in range(rng.randint(1, 4))])


def random_pairs(rng, max_index=3, max_len=4) -> list:
    def entry():
        return ONE if rng.random() < 0.3 else random_infinite(rng, max_index)
    return [(entry(), entry()) for _ in range(rng.randint(1, max_len))]


def random_weak_list(rng, max_index=3, max_len=4) -> list:
    out = []
    for _ in range(rng.randint(1, max_len)):
        k = TWO if rng.random() < 0.4 else random_infinite(rng, max_index)
        if rng.random() < 0.3:
            out.append((k, random_card(rng, max_index, 3)))
        else:
            out.append(k)
    return out
