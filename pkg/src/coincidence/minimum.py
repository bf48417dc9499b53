"""Minimum numbers MCC and MC for maps ``S^m -> S^n/G``.

``MCC`` agrees with ``N_0`` whenever the target is a sphere or the Wecken
condition holds at ``(m, n)``.  In the two metastable dimensions
``m = 2n-2`` and ``m = 2n-1`` (``n`` even, ``G = Z_2``) the exceptions are
known exactly, but they depend on Kervaire and mod-4 Hopf invariants that are
not computed here; callers pass them in as flags.

``MC`` is finite exactly when the difference of the lifts lies in
``E(pi_{m-1}(S^{n-1}))`` (``#G <= 2``) or in ``E(Ker total_h')``
(``#G >= 3``); when finite it equals ``MCC``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .abelian import INFINITE, Subgroup, compose, image, kernel, stack
from .catalog import (
    Catalog,
    CheckResult,
    SphereGroupKey,
    hopf_blocks,
    subgroup_of_suspensions,
    suspended_kernel_of_total,
)
from .errors import MissingData
from .nielsen import NielsenQuery, nielsen_number

KERVAIRE_DIMENSIONS = (16, 32, 64)
SPECULATIVE_KERVAIRE_DIMENSIONS = (128,)


class Certainty(enum.Enum):
    PROVED_BY_WECKEN = "PROVED_BY_WECKEN"
    PROVED_BY_EXCEPTION_RULE = "PROVED_BY_EXCEPTION_RULE"
    CONDITIONAL = "CONDITIONAL"


@dataclass(frozen=True)
class Undecided:
    reason: str

    def __str__(self):
        return f"UNDECIDED({self.reason})"


@dataclass(frozen=True)
class MinimumVerdict:
    mcc: int | Undecided
    mc: int | float | Undecided
    certainty: Certainty
    rule: str
    n0: int
    clause: str = ""
    mc_criterion: str = ""
    witness: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if isinstance(self.mc, int) and self.mc != self.mcc:
            raise AssertionError(f"finite MC={self.mc} differs from MCC={self.mcc}")

    @property
    def mc_finite(self) -> bool:
        return not isinstance(self.mc, Undecided) and self.mc != INFINITE


def _at_level0(q: NielsenQuery) -> NielsenQuery:
    return q if q.r == 0 else replace(q, r=0)


def mcc(cat: Catalog, q: NielsenQuery, kervaire: bool | None = None,
        hopf_not_div4: bool | None = None) -> MinimumVerdict:
    """``MCC(f_1, f_2)`` together with the rule that settles it.

    ``kervaire`` is the Kervaire invariant of the lift (``True`` for 1) and
    ``hopf_not_div4`` says whether its Hopf invariant is prime to 4; both
    are only consulted when an exception rule could fire.
    """
    v0 = nielsen_number(cat, _at_level0(q))
    n0 = v0.value
    m, n, k = q.m, q.n, q.k

    def verdict(value, certainty, rule):
        return MinimumVerdict(value, value, certainty, rule, n0, v0.clause.value)

    if k == INFINITE:
        return verdict(0, Certainty.PROVED_BY_WECKEN, "infinite fundamental group")
    if m < n:
        return verdict(0, Certainty.PROVED_BY_WECKEN, "m < n")
    if k == 1:
        return verdict(n0, Certainty.PROVED_BY_WECKEN, "target is a sphere: MCC = N_0")

    wecken = cat.wecken(q.key)
    if wecken == "yes":
        return verdict(n0, Certainty.PROVED_BY_WECKEN, "Wecken condition holds: MCC = N_0")

    if n % 2 == 0 and k == 2 and m in (2 * n - 2, 2 * n - 1):
        selfpair = q.f1 == q.f2 and n0 == 0
        if m == 2 * n - 2:
            dims = KERVAIRE_DIMENSIONS + SPECULATIVE_KERVAIRE_DIMENSIONS
            if selfpair and n in dims:
                if kervaire is None:
                    return verdict(Undecided("KERVAIRE_FLAG_MISSING"), Certainty.CONDITIONAL,
                                   "m = 2n-2 self-pair: needs the Kervaire invariant of the lift")
                if kervaire:
                    certainty = (Certainty.CONDITIONAL if n in SPECULATIVE_KERVAIRE_DIMENSIONS
                                 else Certainty.PROVED_BY_EXCEPTION_RULE)
                    tag = "EXCEPTION_KERVAIRE"
                    if certainty is Certainty.CONDITIONAL:
                        tag += " (SPECULATIVE: n = 128)"
                    return verdict(1, certainty, tag)
            return verdict(n0, Certainty.PROVED_BY_EXCEPTION_RULE,
                           "m = 2n-2: no Kervaire exception applies, MCC = N_0")
        if selfpair and n % 4 == 2 and n >= 6:
            if hopf_not_div4 is None:
                return verdict(Undecided("HOPF_MOD4_FLAG_MISSING"), Certainty.CONDITIONAL,
                               "m = 2n-1 self-pair: needs the Hopf invariant of the lift mod 4")
            if hopf_not_div4:
                return verdict(1, Certainty.PROVED_BY_EXCEPTION_RULE, "EXCEPTION_HOPF_MOD4")
        return verdict(n0, Certainty.PROVED_BY_EXCEPTION_RULE,
                       "m = 2n-1: no Hopf invariant exception applies, MCC = N_0")

    if wecken == "no":
        return verdict(n0, Certainty.CONDITIONAL,
                       "Wecken condition fails: MCC = N_0 is not guaranteed")
    return verdict(Undecided("WECKEN_UNKNOWN"), Certainty.CONDITIONAL,
                   "Wecken condition status unknown")


def mc_finite_subgroup(cat: Catalog, key: SphereGroupKey, k):
    """Subgroup of ``pi_m(S^n)`` whose cosets give finite ``MC``, and its name."""
    if k != INFINITE and k >= 3:
        return suspended_kernel_of_total(cat, key), "E(Ker total_h')"
    return subgroup_of_suspensions(cat, key), "E(pi_{m-1}(S^{n-1}))"


def mc(cat: Catalog, q: NielsenQuery, kervaire: bool | None = None,
       hopf_not_div4: bool | None = None) -> MinimumVerdict:
    """``MC(f_1, f_2)``: ``MCC`` when finite, ``INFINITE`` otherwise."""
    base = mcc(cat, q, kervaire=kervaire, hopf_not_div4=hopf_not_div4)
    if q.k == INFINITE or q.m < q.n:
        return base
    diff = q.f1 - q.f2
    S, name = mc_finite_subgroup(cat, q.key, q.k)
    member = S.contains(diff)
    witness = {"f1 - f2": diff.coeffs, "criterion": name, "member": member}
    if member:
        return replace(base, mc_criterion=f"f1 - f2 in {name}", witness=witness)
    return replace(base, mc=INFINITE, mc_criterion=f"f1 - f2 not in {name}", witness=witness)


def hopf_hilton_values(cat: Catalog, key: SphereGroupKey, f):
    blocks = hopf_blocks(cat, key)
    if not blocks:
        return ()
    return stack(cat.group(key), [h for _, h in blocks]).apply(f).coeffs


def check_mc_against_hopf(cat: Catalog, q: NielsenQuery) -> CheckResult:
    """Consistency of ``MC``-finiteness with ``h'`` and, for odd ``n``, the closed values."""
    name = f"MC finiteness vs h' at {tuple(q.key)}"
    problems = []
    v = mc(cat, q)
    try:
        same_h = hopf_hilton_values(cat, q.key, q.f1) == hopf_hilton_values(cat, q.key, q.f2)
    except MissingData as exc:
        return CheckResult(name, True, [f"skipped: {exc}"])
    if v.mc_finite and not same_h:
        problems.append("MC finite but h'(f1) != h'(f2)")
    if q.n % 2 == 0 and q.m <= 3 * q.n - 4 and same_h and not v.mc_finite:
        problems.append("h'(f1) = h'(f2) but MC infinite (m <= 3n-4)")
    if q.n % 2 == 1 and q.k != INFINITE:
        expected = int(q.k) if q.f1 != q.f2 else 0
        if v.mcc != expected:
            problems.append(f"MCC = {v.mcc}, expected {expected}")
        if v.mc_finite and v.mc != expected:
            problems.append(f"MC = {v.mc}, expected {expected}")
    return CheckResult(name, not problems, problems)


def subgroup_chain_check(cat: Catalog, key) -> CheckResult:
    """``E^2(pi_{m-2}(S^{n-2})) <= E(Ker total_h') <= E(pi_{m-1}(S^{n-1})) <= Ker h'``.

    Needs ``n >= 3``.  Links whose data is missing are skipped and named in
    the details.
    """
    key = SphereGroupKey(*key)
    name = f"suspension subgroup chain at {tuple(key)}"
    if key.n < 3:
        return CheckResult(name, True, ["vacuous: n < 3"])
    G = cat.group(key)
    prev = SphereGroupKey(key.m - 1, key.n - 1)
    prev2 = SphereGroupKey(key.m - 2, key.n - 2)

    def double_suspension():
        if cat.has_group(prev2) and cat.group(prev2).is_trivial():
            return Subgroup(G, ())
        return image(compose(cat.suspension(prev), cat.suspension(prev2)))

    def hopf_kernel():
        blocks = hopf_blocks(cat, key)
        return kernel(stack(G, [h for _, h in blocks])) if blocks else Subgroup.whole(G)

    links = [
        ("E^2", double_suspension),
        ("E(Ker total_h')", lambda: suspended_kernel_of_total(cat, key)),
        ("E", lambda: subgroup_of_suspensions(cat, key)),
        ("Ker h'", hopf_kernel),
    ]
    details, chain = [], []
    for label, build in links:
        try:
            chain.append((label, build()))
        except MissingData as exc:
            details.append(f"skipped {label}: {exc}")
    ok = True
    for (a, A), (b, B) in zip(chain, chain[1:]):
        if not A.issubset(B):
            ok = False
            details.append(f"{a} is not contained in {b}")
    return CheckResult(name, ok, details)


__all__ = [
    "Certainty", "MinimumVerdict", "Undecided", "check_mc_against_hopf", "mc",
    "mc_finite_subgroup", "mcc", "subgroup_chain_check",
]
