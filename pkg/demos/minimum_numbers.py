"""When is the minimal number of coincidence points finite?

Run with ``python3 demos/minimum_numbers.py``.  Uses the small catalog of
spheres with m = 2n - 2 and the group pi_22(S^10), whose predecessor vanishes.
"""

import json

from coincidence import NielsenQuery, default_catalog, loads_catalog, mc, mcc

cat = default_catalog()

# For m = 2n - 2 and n = 3, 5, 9 the answer depends on the order of G.
for key in [(4, 3), (8, 5), (16, 9)]:
    G = cat.group(key)
    g = G.generator(0)
    line = []
    for k in (1, 2, 3, 4):
        v = mc(cat, NielsenQuery(*key, k, 0, g, G.zero()))
        line.append(f"#G={k}: MCC={v.mcc} MC={'inf' if not v.mc_finite else v.mc}")
    print(f"pi_{key[0]}(S^{key[1]}) = {G}: ", "; ".join(line))

# pi_21(S^9) = 0, so two different classes can never be made to meet finitely.
G = cat.group((22, 10))
a = G.generator(0)
for f2 in (a, G.zero()):
    v = mc(cat, NielsenQuery(22, 10, 2, 0, a, f2))
    print(f"pi_22(S^10): {G.format(a)} vs {G.format(f2)}: MCC={v.mcc} MC={v.mc}")

# A Kervaire invariant one class in dimension 2n - 2 is an exception to MCC = N_0.
# The invariant itself is not computed; it is passed in.
toy = loads_catalog(json.dumps({
    "groups": [{"m": 30, "n": 16, "factors": [2], "generators": ["theta"]}],
    "homs": [{"kind": "minus_iota", "m": 30, "n": 16, "matrix": [[1]]}],
    "flags": [{"m": 30, "n": 16, "wecken": "no"}],
}))
f = toy.group((30, 16)).generator(0)
for flag in (None, False, True):
    v = mcc(toy, NielsenQuery(30, 16, 2, 0, f, f), kervaire=flag)
    print(f"Kervaire flag {flag!s:>5}: N_0={v.n0} MCC={v.mcc} ({v.rule})")
