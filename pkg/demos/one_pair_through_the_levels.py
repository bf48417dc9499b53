"""Follow single pairs of maps S^16 -> RP(6) up the suspension tower.

Run with ``python3 demos/one_pair_through_the_levels.py``.
"""

from coincidence import INFINITE, NielsenQuery, default_catalog, mc, nielsen_number
from coincidence.nielsen import levels

cat = default_catalog()
G = cat.group((16, 6))
zero = G.zero()
nu_sigma, eta_mu, beta = G.generators()


def show(f1, f2):
    values = []
    for r in levels(cat, 16, 6):
        v = nielsen_number(cat, NielsenQuery(16, 6, 2, r, f1, f2))
        values.append(f"{'inf' if r == INFINITE else r}:{v.value}")
    print(f"{G.format(f1):>22} vs {G.format(f2):<12}", "  ".join(values))


# nu6 sigma9 has order 8; its image dies at the fifth suspension.
show(nu_sigma, zero)
# eta6 mu7 and beta1 survive to the stable range.
show(eta_mu, zero)
show(beta, zero)
# Identical maps: N_0 is 1 unless the class has order at most 2.
show(nu_sigma, nu_sigma)
show(4 * nu_sigma, 4 * nu_sigma)

# Minimum numbers only depend on N_0 here (the Wecken condition holds).
v = mc(cat, NielsenQuery(16, 6, 2, 0, nu_sigma, nu_sigma))
print(f"\nMCC = {v.mcc}, MC = {v.mc}  ({v.certainty.value}: {v.rule})")
