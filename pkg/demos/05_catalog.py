# Spectra that are known outright: free, finite-cofinite, almost disjoint.
from tukeyspectra import syntax
from tukeyspectra.catalog import catalog_spectrum

for text in ["(free w)", "(free w3)", "(fincofin w1)", "(adfamily w2 (mus w))", "(adfamily w2 (mus w w1))"]:
    spec = catalog_spectrum(syntax.parse_catalog(text))
    print(f"{text:26}", sorted(t.pretty() for t in spec))
