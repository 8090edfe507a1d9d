"""Which Tukey types the ultrafilters of a symbolically described Boolean algebra take."""
from .cardinals import Card, aleph, card_sum, compare_cards, fin, parse_card
from .catalog import ADFamily, FinCofin, Free, catalog_spectrum
from .errors import DomainError, ParseError, TukeyError
from .orders import classify_cuts, intalg_spectrum, order_attrs, realize_interval
from .pseudotrees import (PTreeTerm, embed, epsilon_and_character, fan_at,
                          ptree_chain_classes, ptree_spectrum, realize_weak_product)
from .trees import TreeTerm, tree_chain_classes, tree_has_max_type, tree_spectrum
from .tukey import TukeyType, compare_types, normalize, type_size

__version__ = "0.1.0"

__all__ = [
    "Card",
    "aleph",
    "card_sum",
    "compare_cards",
    "fin",
    "parse_card",
    "ADFamily",
    "FinCofin",
    "Free",
    "catalog_spectrum",
    "DomainError",
    "ParseError",
    "TukeyError",
    "classify_cuts",
    "intalg_spectrum",
    "order_attrs",
    "realize_interval",
    "PTreeTerm",
    "embed",
    "epsilon_and_character",
    "fan_at",
    "ptree_chain_classes",
    "ptree_spectrum",
    "realize_weak_product",
    "TreeTerm",
    "tree_chain_classes",
    "tree_has_max_type",
    "tree_spectrum",
    "TukeyType",
    "compare_types",
    "normalize",
    "type_size",
]
