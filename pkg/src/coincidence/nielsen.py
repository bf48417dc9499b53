"""Nielsen numbers ``N_r(f_1, f_2)`` for maps ``S^m -> S^n/G``.

The value only depends on the liftings ``[f_1~], [f_2~]`` in ``pi_m(S^n)``,
on ``#G`` and on ``r``.  Three regimes are distinguished:

* ``n`` odd: ``#G`` or ``0`` according as ``E^r o h`` separates the lifts;
* ``n`` even, ``G = 0``: ``1`` or ``0``, comparing with ``(-iota) o f_2~``;
* ``n`` even, ``G = Z_2``: ``2``, ``1`` or ``0`` by a three-way split.

For ``r >= 1`` the suspension turns ``(-iota) o`` into negation, so
``minus_iota`` data is only consulted at ``r = 0``.  At ``r = 0`` the
identity component of ``h = (id, h')`` already decides every comparison
(``h'`` is invariant under ``(-iota) o`` for even ``n``), so the Hopf-Hilton
blocks are only evaluated for ``r >= 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .abelian import INFINITE, GroupElement
from .catalog import (
    Catalog,
    SphereGroupKey,
    e_r_h_prime,
    kernel_sequence,
    minus_iota_action,
    suspension_power,
)
from .errors import InvalidQuery, ShapeMismatch


class Clause(enum.Enum):
    INFINITE_PI1 = "INFINITE_PI1"
    TRIVIAL_DOMAIN = "TRIVIAL_DOMAIN"
    N_ODD = "N_ODD"
    N_EVEN_TRIVIAL_G = "N_EVEN_TRIVIAL_G"
    N_EVEN_Z2_CASE_2 = "N_EVEN_Z2_CASE_2"
    N_EVEN_Z2_CASE_1 = "N_EVEN_Z2_CASE_1"
    N_EVEN_Z2_CASE_0 = "N_EVEN_Z2_CASE_0"


@dataclass(frozen=True)
class NielsenQuery:
    m: int
    n: int
    k: int | float
    r: int | float
    f1: GroupElement
    f2: GroupElement

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise InvalidQuery(f"need m, n >= 2, got m={self.m}, n={self.n}")
        if self.k != INFINITE and (int(self.k) != self.k or self.k < 1):
            raise InvalidQuery(f"group order must be a positive integer or INFINITE, got {self.k}")
        if self.r != INFINITE and (int(self.r) != self.r or self.r < 0):
            raise InvalidQuery(f"r must be a non-negative integer or INFINITE, got {self.r}")
        if self.n % 2 == 0 and self.k != INFINITE and self.k > 2:
            raise InvalidQuery(
                f"no group of order {self.k} acts freely on the even sphere S^{self.n}")
        if self.f1.parent != self.f2.parent:
            raise InvalidQuery("the two liftings live in different groups")

    @property
    def key(self) -> SphereGroupKey:
        return SphereGroupKey(self.m, self.n)


@dataclass(frozen=True)
class NielsenVerdict:
    value: int
    clause: Clause
    witness: dict = field(default_factory=dict, compare=False)

    def __int__(self):
        return self.value


def _level(r) -> str:
    return "inf" if r == INFINITE else str(r)


def nielsen_number(cat: Catalog, q: NielsenQuery) -> NielsenVerdict:
    """Evaluate ``N_r(f_1, f_2)`` from the catalog data."""
    if q.k == INFINITE:
        return NielsenVerdict(0, Clause.INFINITE_PI1)
    k = int(q.k)
    G = cat.group(q.key)
    if q.f1.parent != G:
        raise ShapeMismatch(f"liftings are not elements of {q.key}")
    if G.is_trivial():
        return NielsenVerdict(0, Clause.TRIVIAL_DOMAIN)

    E = suspension_power(cat, q.key, q.r)
    e1, e2 = E.apply(q.f1), E.apply(q.f2)
    lvl = _level(q.r)
    witness = {f"E^{lvl}(f1)": e1.coeffs, f"E^{lvl}(f2)": e2.coeffs}

    if q.r == 0:
        h1 = h2 = ()
    else:
        H = e_r_h_prime(cat, q.key, q.r)
        h1, h2 = H.apply(q.f1).coeffs, H.apply(q.f2).coeffs
        witness[f"E^{lvl}h'(f1)"] = h1
        witness[f"E^{lvl}h'(f2)"] = h2

    if q.n % 2 == 1:
        differ = e1 != e2 or h1 != h2
        return NielsenVerdict(k if differ else 0, Clause.N_ODD, witness)

    if q.r == 0:
        e2m = minus_iota_action(cat, q.key).apply(q.f2)
    else:
        e2m = -e2
    witness[f"E^{lvl}((-iota)f2)"] = e2m.coeffs

    if k == 1:
        # h'((-iota) o f) = h'(f) for n even, so only the first block moves.
        differ = e1 != e2m or h1 != h2
        return NielsenVerdict(1 if differ else 0, Clause.N_EVEN_TRIVIAL_G, witness)

    if h1 != h2 or (e1 != e2 and e1 != e2m):
        return NielsenVerdict(2, Clause.N_EVEN_Z2_CASE_2, witness)
    if e2 != e2m:
        return NielsenVerdict(1, Clause.N_EVEN_Z2_CASE_1, witness)
    return NielsenVerdict(0, Clause.N_EVEN_Z2_CASE_0, witness)


def nielsen_value(cat: Catalog, m: int, n: int, k, r, f1: GroupElement, f2: GroupElement) -> int:
    return nielsen_number(cat, NielsenQuery(m, n, k, r, f1, f2)).value


def n0_by_homotopy(cat: Catalog, q: NielsenQuery) -> int:
    """``N_0`` from the homotopy comparison of lifts with ``a o f_2~``.

    Here ``a`` is the antipodal map, of degree ``(-1)^(n+1)``; for odd ``n``
    it is homotopic to the identity.
    """
    if q.k == INFINITE:
        return 0
    k = int(q.k)
    f1, f2 = q.f1, q.f2
    if q.n % 2 == 1:
        return 0 if f1 == f2 else k
    af2 = minus_iota_action(cat, q.key).apply(f2)
    if k == 1:
        return 0 if f1 == af2 else 1
    if f1 != f2 and f1 != af2:
        return 2
    if f2 != af2:
        return 1
    return 0


def levels(cat: Catalog, m: int, n: int) -> list:
    """Suspension levels ``0 .. stable_from`` followed by ``INFINITE``."""
    return list(range(cat.stable_from((m, n)) + 1)) + [INFINITE]


def nielsen_function_profile(cat: Catalog, m: int, n: int, k) -> list[tuple]:
    """Partition of the levels into classes on which ``N_r`` is the same function.

    Consecutive levels agree exactly when ``#Ker(E^r o h)`` does.
    """
    rs = levels(cat, m, n)
    G = cat.group((m, n))
    if k == INFINITE or not G.is_finite():
        return [tuple(rs)]
    kers = kernel_sequence(cat, (m, n))
    classes = [[rs[0]]]
    for prev, r in zip(rs, rs[1:]):
        if r == INFINITE or kers[r] == kers[prev]:
            classes[-1].append(r)
        else:
            classes.append([r])
    return [tuple(c) for c in classes]


@dataclass
class HierarchyReport:
    passed: bool
    values: dict

    def __bool__(self):
        return self.passed


def hierarchy_check(cat: Catalog, m: int, n: int, k, f1: GroupElement, f2: GroupElement) -> HierarchyReport:
    """``N_0 >= N_1 >= ... >= N_inf`` for one pair of lifts."""
    values = {r: nielsen_value(cat, m, n, k, r, f1, f2) for r in levels(cat, m, n)}
    seq = list(values.values())
    return HierarchyReport(all(a >= b for a, b in zip(seq, seq[1:])), values)


__all__ = [
    "Clause", "HierarchyReport", "NielsenQuery", "NielsenVerdict",
    "hierarchy_check", "levels", "n0_by_homotopy", "nielsen_function_profile",
    "nielsen_number", "nielsen_value",
]
