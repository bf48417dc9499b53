"""How Nielsen numbers of maps S^16 -> RP(6) are distributed.

Run with ``python3 demos/census_rp6.py``.  Prints the counts of pairs with
N_r = 0, 1, 2 at each suspension level, checks one level by brute force and
lists the loose pairs.
"""

from coincidence.catalog import default_catalog, kernel_sequence
from coincidence.census import (
    census_bruteforce,
    census_table,
    format_rows,
    level_classes_table,
    loose_pairs,
)

cat = default_catalog()
G = cat.group((16, 6))
print(f"pi_16(S^6) = {G}, generated by {', '.join(G.generator_names)}")
print(f"{G.cardinality()} homotopy classes, {G.cardinality() ** 2} pairs\n")

# The kernels of the iterated suspensions grow until the stable range.
print("#Ker E^r for r = 0..8:", kernel_sequence(cat, (16, 6), 8))

# Closed form: only #Ker E^r and the 2-torsion of the image enter.
rows = census_table(cat, 16, 6, k=2)
print("\nRP(6), closed form")
print(format_rows(rows))

# The same numbers by running all pairs through the engine.
brute = census_bruteforce(cat, 16, 6, k=2, r=3)
print(f"\nbrute force at r = 3: {brute.counts}  (closed form {rows[3].counts})")

# Grouping levels by the function N_r they define.
print()
print(level_classes_table(cat, 16, 6))

# With the Wecken condition, N_0 = 0 means the pair can be made coincidence free.
print("\nloose pairs into RP(6):")
for f1, f2 in loose_pairs(cat, 16, 6, 2):
    print("  ", G.format(f1), "and", G.format(f2))
