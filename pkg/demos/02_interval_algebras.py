# Ultrafilter types of interval algebras come from cuts of the chain.
from tukeyspectra import syntax
from tukeyspectra.orders import classify_cuts, intalg_spectrum, realize_interval

L = syntax.parse_order("(sum (ord w1) (rev (ord w1)))")  # w1 followed by a reversed w1
for c in sorted(classify_cuts(L), key=lambda c: str(c.pair)):
    print("cut", c.cf, c.ci, "->", c.tukey.pretty())

spec = intalg_spectrum(L)
print("spectrum:", sorted(t.pretty() for t in spec))
# no cut gives [w1]^<w: a chain never has an ultrafilter of the top type

# ask for a cut of shape (w, w1) and one with a last point
L2 = realize_interval(syntax.parse_pairs("((w w1) (1 1))"))
print(syntax.order_to_text(L2))
print(sorted(t.pretty() for t in intalg_spectrum(L2)))
