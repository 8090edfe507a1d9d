# Brute force on small finite pseudo-trees.
from tukeyspectra import bridge, finite

P = finite.FinitePoset.parse("""5
0 < 1
0 < 2
1 < 3
1 < 4
""")
print("initial chains:", [sorted(c) for c in finite.initial_chains(P)])
for S in finite.approx_successor_sets(P, {0}):
    fan = finite.lambda_fan_finite(P, {0}, S)
    print("  S =", sorted(S), "classes", [sorted(c) for c in fan.classes], "lambda", fan.lam)

print([len(finite.rooted_trees(n)) for n in range(1, 8)])  # 1 1 2 4 9 20 48
print(finite.fan_invariance_oracle(6).summary())
print(finite.stone_oracle_sweep(5).summary())
print(bridge.bridge_oracle(200, seed=1).summary())
