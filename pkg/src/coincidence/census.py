"""Counting pairs of homotopy classes by their Nielsen numbers.

For ``Y = RP(n)`` with ``n`` even and ``h' = 0`` on ``pi_m(S^n)`` the number
of pairs with ``N_r = j`` has a closed form in ``#Ker E^r`` and in the number
``Q_r`` of elements of order at most 2 in ``E^r(pi_m(S^n))``.  The brute-force
census walks all pairs through :func:`nielsen_number` and tallies, and the two
routes are meant to be compared.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .abelian import INFINITE, count_two_torsion, image, kernel
from .catalog import Catalog, SphereGroupKey, e_r_h, suspension_power
from .errors import HypothesisViolated, InfiniteSetError, WeckenUnknown
from .nielsen import NielsenQuery, levels, nielsen_number


def _num(x):
    return "inf" if x == INFINITE else x


@dataclass(frozen=True)
class CensusRow:
    """Counts ``#^j_r`` for one level ``r``; ``q`` is ``Q_r`` (``None`` for spheres)."""

    r: int | float
    counts: dict
    ker: int | float
    q: int | float | None = None
    method: str = field(default="closed", compare=False)

    def to_json(self) -> dict:
        return {
            "r": _num(self.r),
            "counts": {str(j): _num(c) for j, c in sorted(self.counts.items())},
            "ker": _num(self.ker),
            "q": None if self.q is None else _num(self.q),
        }

    @property
    def total(self):
        return sum(self.counts.values())


def _finite_group(cat: Catalog, key):
    G = cat.group(key)
    if not G.is_finite():
        raise InfiniteSetError(f"pi_{key[0]}(S^{key[1]}) is infinite; census needs a finite group")
    return G


def census_closed_form(cat: Catalog, m: int, n: int, k: int = 2, r=0) -> CensusRow:
    """``#^0_r, #^1_r, #^2_r`` for ``RP(n)`` from ``#Ker E^r`` and ``Q_r``."""
    key = SphereGroupKey(m, n)
    if k != 2:
        raise HypothesisViolated(f"closed form covers #G = 2 only, got {k}; use sphere_census for #G = 1")
    if n % 2 == 1:
        raise HypothesisViolated(f"closed form needs n even, got n={n}")
    if m == n:
        # pi_n(S^n) = Z: only N(f, -f) and N(0, 0) vanish
        return CensusRow(r, {0: 1, 1: INFINITE, 2: INFINITE}, 1, 1)
    G = _finite_group(cat, key)
    if G.is_trivial():
        return CensusRow(r, {0: 1, 1: 0, 2: 0}, 1, 1)
    if not cat.h_prime_zero(key):
        raise HypothesisViolated(f"closed form needs h' = 0 on pi_{m}(S^{n})")
    E = suspension_power(cat, key, r)
    K = kernel(E).cardinality()
    im = image(E)
    Q = count_two_torsion(im)
    c0 = Q * K * K
    c1 = 2 * (im.cardinality() - Q) * K * K
    c2 = G.cardinality() ** 2 - c0 - c1
    return CensusRow(r, {0: c0, 1: c1, 2: c2}, K, Q)


def sphere_census(cat: Catalog, m: int, n: int, r) -> CensusRow:
    """``#^0_r, #^1_r`` for ``Y = S^n``: ``#^0_r = #pi_m(S^n) * #Ker(E^r o h)``.

    Valid whenever ``N_r(f_1, f_2) = 0`` is a coset condition on ``f_1``:
    ``n`` odd, ``r = 0``, or ``h' = 0``.
    """
    key = SphereGroupKey(m, n)
    if not (n % 2 == 1 or r == 0 or cat.h_prime_zero(key)):
        raise HypothesisViolated(f"sphere census needs n odd, r = 0 or h' = 0 at {tuple(key)}")
    G = _finite_group(cat, key)
    K = kernel(e_r_h(cat, key, r)).cardinality()
    c0 = G.cardinality() * K
    return CensusRow(r, {0: c0, 1: G.cardinality() ** 2 - c0}, K)


def _tally(args):
    cat, m, n, k, r, chunk = args
    G = cat.group((m, n))
    elements = list(G.enumerate())
    counts = Counter()
    for i in chunk:
        f2 = elements[i]
        for f1 in elements:
            counts[nielsen_number(cat, NielsenQuery(m, n, k, r, f1, f2)).value] += 1
    return counts


def census_bruteforce(cat: Catalog, m: int, n: int, k: int, r, workers: int = 1) -> CensusRow:
    """Tally ``N_r`` over all pairs by direct evaluation.

    ``ker`` and ``q`` are recounted by enumeration as well, so nothing here
    goes through kernels or images computed by Smith normal form.
    """
    key = SphereGroupKey(m, n)
    G = _finite_group(cat, key)
    size = G.cardinality()
    if workers > 1:
        chunks = [range(i, size, workers) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally, [(cat, m, n, k, r, c) for c in chunks]))
        counts = sum(parts, Counter())
    else:
        counts = _tally((cat, m, n, k, r, range(size)))

    Eh = e_r_h(cat, key, r)
    ker = sum(1 for f in G.enumerate() if Eh.apply(f).is_zero())
    q = None
    if k == 2:
        E = suspension_power(cat, key, r)
        values = {E.apply(f) for f in G.enumerate()}
        q = sum(1 for v in values if (v + v).is_zero())
    labels = (0, 1) if k == 1 else (0, 1, k) if k > 1 else (0,)
    return CensusRow(r, {j: counts.get(j, 0) for j in labels}, ker, q, method="brute")


def census_table(cat: Catalog, m: int, n: int, k: int = 2, method: str = "closed",
                 rs=None, workers: int = 1) -> list[CensusRow]:
    rs = levels(cat, m, n) if rs is None else rs
    rows = []
    for r in rs:
        if method == "brute":
            rows.append(census_bruteforce(cat, m, n, k, r, workers=workers))
        elif k == 1:
            rows.append(sphere_census(cat, m, n, r))
        else:
            rows.append(census_closed_form(cat, m, n, k, r))
    return rows


def loose_pairs(cat: Catalog, m: int, n: int, k: int) -> list[tuple]:
    """All pairs ``(f_1~, f_2~)`` that can be deformed away from each other.

    With the Wecken condition these are exactly the pairs with ``N_0 = 0``.
    Pairs come in lexicographic order of their coefficient vectors.
    """
    key = SphereGroupKey(m, n)
    if k != 1 and cat.wecken(key) != "yes":
        raise WeckenUnknown(f"Wecken condition is {cat.wecken(key)!r} at {tuple(key)}")
    G = _finite_group(cat, key)
    elements = list(G.enumerate())
    return [(f1, f2) for f1 in elements for f2 in elements
            if nielsen_number(cat, NielsenQuery(m, n, k, 0, f1, f2)).value == 0]


@dataclass
class ProjectionReport:
    passed: bool
    sphere_loose: int
    projective_loose: int
    projecting: int
    mismatches: list = field(default_factory=list)


def projection_consistency(cat: Catalog, m: int, n: int) -> ProjectionReport:
    """Loose pairs into ``S^n`` versus those into ``RP(n)``.

    A loose pair ``(f, g)`` into the sphere stays loose after composing with
    the projection exactly when ``2f = 0``.
    """
    sphere = loose_pairs(cat, m, n, 1)
    projective = set((a.coeffs, b.coeffs) for a, b in loose_pairs(cat, m, n, 2))
    mismatches = []
    projecting = 0
    for f, g in sphere:
        stays = (f.coeffs, g.coeffs) in projective
        projecting += stays
        if stays != (f + f).is_zero():
            mismatches.append((f.coeffs, g.coeffs))
    return ProjectionReport(not mismatches, len(sphere), len(projective), projecting, mismatches)


def rows_to_json(rows: list[CensusRow], **header) -> str:
    return json.dumps({**header, "rows": [row.to_json() for row in rows]}, indent=2, ensure_ascii=False)


def format_rows(rows: list[CensusRow]) -> str:
    """Aligned text table, one line per level."""
    labels = sorted({j for row in rows for j in row.counts})
    head = ["r"] + [f"#{j}" for j in labels] + ["ker", "Q"]
    body = [[str(_num(row.r))] + [str(_num(row.counts.get(j, ""))) for j in labels]
            + [str(_num(row.ker)), "" if row.q is None else str(_num(row.q))] for row in rows]
    return _align([head] + body)


def _align(table: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
    lines = []
    for row in table:
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def level_classes(cat: Catalog, m: int, n: int) -> dict:
    """Counts grouped by the levels on which ``N_r`` is the same function.

    One entry per class of levels: the class label, ``#Ker(E^r o h)``, the
    three ``RP(n)`` counts and the sphere count ``#^0_r``.
    """
    from .nielsen import nielsen_function_profile

    def label(c):
        c = [_num(r) for r in c]
        if len(c) >= 2 and c[-1] == "inf":
            return f"r >= {c[0]}"
        return ", ".join(str(r) for r in c)

    columns = []
    for c in nielsen_function_profile(cat, m, n, 2):
        proj = census_closed_form(cat, m, n, 2, c[0])
        sph = sphere_census(cat, m, n, c[0])
        columns.append({
            "levels": label(c),
            "ker": proj.ker,
            "projective": [proj.counts[j] for j in (0, 1, 2)],
            "sphere": sph.counts[0],
        })
    return {"m": m, "n": n, "columns": columns}


def format_level_classes(data: dict) -> str:
    cols = data["columns"]
    n = data["n"]
    table = [["r"] + [c["levels"] for c in cols],
             ["#Ker(E^r o h)"] + [str(c["ker"]) for c in cols]]
    for j in (0, 1, 2):
        table.append([f"#{j}_r RP({n})"] + [str(c["projective"][j]) for c in cols])
    table.append([f"#0_r S^{n}"] + [str(c["sphere"]) for c in cols])
    return _align(table)


def level_classes_table(cat: Catalog, m: int, n: int) -> str:
    return format_level_classes(level_classes(cat, m, n))


__all__ = [
    "CensusRow", "ProjectionReport", "census_bruteforce", "census_closed_form",
    "census_table", "format_level_classes", "format_rows", "level_classes",
    "level_classes_table", "loose_pairs",
    "projection_consistency", "rows_to_json", "sphere_census",
]
