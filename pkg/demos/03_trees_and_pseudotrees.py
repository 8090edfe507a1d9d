# Tree and pseudo-tree algebras: a chain's type depends on what branches off above it.
from tukeyspectra import syntax
from tukeyspectra.cardinals import OMEGA, aleph
from tukeyspectra.pseudotrees import (epsilon_and_character, ptree_chain_classes, ptree_spectrum,
                                      realize_weak_product)
from tukeyspectra.trees import star, tree_has_max_type, tree_spectrum

for k in (OMEGA, aleph(1)):
    t = star(k)  # a root with k leaves on top
    print(f"star({k}):", sorted(x.pretty() for x in tree_spectrum(t)), "max type:", tree_has_max_type(t))

long = syntax.parse_tree("(tree (ord w1))")
print("w1 as a tree:", sorted(x.pretty() for x in tree_spectrum(long)), tree_has_max_type(long))

# two upside-down chains above a root give the product of their lengths
P = syntax.parse_ptree("(ptree (fin 1) (branch 1 (ptree (rev (ord w)))) (branch 1 (ptree (rev (ord w1)))))")
for c in sorted(ptree_chain_classes(P), key=str):
    eps, chi = epsilon_and_character(c)
    print(f"  {c}  eps={eps} chi={chi}")
print("spectrum:", sorted(x.pretty() for x in ptree_spectrum(P)))

# the same thing built from a list of cardinals
print(syntax.tree_to_text(realize_weak_product([OMEGA, aleph(1)])))

# w1 copies of a reversed w: no theta is 1, but the root is still of top type
Q = syntax.parse_ptree("(ptree (fin 1) (branch w1 (ptree (rev (ord w)))))")
print("w1 x rev(w):", sorted(x.pretty() for x in ptree_spectrum(Q)))
