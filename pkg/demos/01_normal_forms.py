# Normal forms of Tukey-type terms and how they compare.
from tukeyspectra import syntax
from tukeyspectra.tukey import compare_types, normalize, normalize_traced

terms = [
    "(prod (ord w) (ord w))",       # a power of a chain is the chain
    "(wprod (2 w1))",               # finitely supported 0/1 functions = finite subsets
    "(wprod (w w))",                # folds to [w]^<w, which is just w
    "(wprod (w2 w))",               # splits: w2 x [w]^<w
    "(prod (finsets w1) (ord w))",  # w is swallowed by [w1]^<w
]
for text in terms:
    n = normalize_traced(syntax.parse_type(text))
    print(f"{text:32} -> {n.type.pretty():12} via {', '.join(n.trace)}")

print()
w1, top = normalize(syntax.parse_type("(ord w1)")), normalize(syntax.parse_type("(finsets w1)"))
print("w1 vs [w1]^<w:", compare_types(w1, top))

# two uncountable chains: strict mode will not guess, extended mode commits
a, b = normalize(syntax.parse_type("(ord w1)")), normalize(syntax.parse_type("(ord w2)"))
print("w1 vs w2:", compare_types(a, b))
print("w1 vs w2:", compare_types(a, b, "extended"))
