"""Exact arithmetic for finitely generated abelian groups.

A group is stored as a list of cyclic factors ``Z/d`` (``d = 0`` meaning
``Z``) together with generator names, exactly as a table of homotopy groups
presents it.  Groups compare equal by presentation, not by isomorphism type.

All integer work is done with Python ints, so nothing can overflow.  Kernels,
images, membership and orders are derived from the Smith normal form of a
suitable relation matrix.

>>> G = FgAbGroup((8, 2, 9), ("a", "b", "c"))
>>> G.cardinality()
144
>>> double = Homomorphism(G, G, [[2, 0, 0], [0, 2, 0], [0, 0, 2]])
>>> kernel(double).cardinality()
4
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import IllDefinedHom, InfiniteSetError, ShapeMismatch

INFINITE = math.inf

Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Sequence[Sequence[int]], ncols: int | None = None):
    """Return ``(U, S, V)`` with ``U @ M @ V == S`` and ``U, V`` unimodular.

    ``S`` is diagonal with non-negative entries ``d_1 | d_2 | ...``.
    ``ncols`` gives the column count when ``M`` has no rows.

    Pivots are chosen as the smallest nonzero absolute value in the
    remaining block, first in row-major order, so the output is
    deterministic.

    >>> U, S, V = smith_normal_form([[2, 4], [6, 8]])
    >>> S
    [[2, 0], [0, 4]]
    """
    rows = len(M)
    cols = len(M[0]) if rows else (ncols or 0)
    S = [[int(v) for v in row] for row in M]
    for row in S:
        if len(row) != cols:
            raise ShapeMismatch("ragged matrix")
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = S[i][j]
                    if v and (pivot is None or abs(v) < abs(S[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = S[t][t]
            clean = True
            for i in range(t + 1, rows):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, cols):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows)
                 for j in range(t + 1, cols) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < rows and t < cols and S[t][t] < 0:
            S[t] = [-v for v in S[t]]
            U[t] = [-v for v in U[t]]
    return U, S, V


def _diagonal(S: list[list[int]]) -> list[int]:
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of ``{x in Z^ncols : A x = 0}`` as a list of vectors."""
    U, S, V = smith_normal_form(A, ncols)
    rank = sum(1 for d in _diagonal(S) if d)
    return [[V[i][j] for i in range(ncols)] for j in range(rank, ncols)]


def integer_solve(A: Sequence[Sequence[int]], ncols: int, b: Sequence[int]):
    """One integer solution of ``A x = b``, or ``None`` if there is none."""
    U, S, V = smith_normal_form(A, ncols)
    y = [sum(u * v for u, v in zip(row, b)) for row in U]
    diag = _diagonal(S)
    z = [0] * ncols
    for i, yi in enumerate(y):
        d = diag[i] if i < len(diag) else 0
        if d:
            if yi % d:
                return None
            z[i] = yi // d
        elif yi:
            return None
    return [sum(V[i][j] * z[j] for j in range(ncols)) for i in range(ncols)]


def _cyclic_invariants(relations: list[list[int]], dim: int) -> tuple[int, ...]:
    """Invariant factors of ``Z^dim / span(relations)`` (0 marks a free factor)."""
    if dim == 0:
        return ()
    if not relations:
        return (0,) * dim
    cols = [list(r) for r in relations]
    A = [[c[i] for c in cols] for i in range(dim)]
    _, S, _ = smith_normal_form(A)
    diag = _diagonal(S)
    diag += [0] * (dim - len(diag))
    return tuple(d for d in diag if d != 1)


def _order_of(invariants: Iterable[int]):
    total = 1
    for d in invariants:
        if d == 0:
            return INFINITE
        total *= d
    return total


# ---------------------------------------------------------------------------
# Groups and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FgAbGroup:
    """Direct sum of cyclic groups ``Z/factors[i]``; a factor 0 stands for ``Z``."""

    factors: tuple[int, ...]
    generator_names: tuple[str, ...] | None = None

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        names = self.generator_names
        if names is None:
            names = tuple(f"g{i}" for i in range(len(factors)))
        names = tuple(str(n) for n in names)
        if len(names) != len(factors):
            raise ShapeMismatch(
                f"{len(factors)} factors but {len(names)} generator names")
        for d in factors:
            if d < 0 or d == 1:
                raise ValueError(f"invalid cyclic order {d} (use 0 for Z, >= 2 otherwise)")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "generator_names", names)

    @classmethod
    def trivial(cls) -> FgAbGroup:
        return cls((), ())

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z{d}" for d in self.factors)

    def is_finite(self) -> bool:
        return 0 not in self.factors

    def is_trivial(self) -> bool:
        return not self.factors

    def cardinality(self):
        return _order_of(self.factors)

    def canonical(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        if len(coeffs) != len(self.factors):
            raise ShapeMismatch(
                f"element of length {len(coeffs)} in a group with {len(self.factors)} factors")
        return tuple(c % d if d else int(c) for c, d in zip(coeffs, self.factors))

    def element(self, coeffs: Sequence[int]) -> GroupElement:
        return GroupElement(self, self.canonical(coeffs))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.factors))

    def generator(self, i: int) -> GroupElement:
        return self.element([int(i == j) for j in range(len(self.factors))])

    def generators(self) -> list[GroupElement]:
        return [self.generator(i) for i in range(len(self.factors))]

    def enumerate(self) -> Iterator[GroupElement]:
        """All elements, lexicographic in the coefficient vectors."""
        if not self.is_finite():
            raise InfiniteSetError(f"cannot enumerate infinite group {self}")
        for coeffs in itertools.product(*(range(d) for d in self.factors)):
            yield GroupElement(self, coeffs)

    def relation_columns(self) -> list[list[int]]:
        """Columns ``d_i e_i`` spanning the defining relations."""
        n = len(self.factors)
        return [[d if k == i else 0 for k in range(n)]
                for i, d in enumerate(self.factors) if d]

    def format(self, x: GroupElement) -> str:
        terms = []
        for c, name in zip(x.coeffs, self.generator_names):
            if c == 1:
                terms.append(name)
            elif c:
                terms.append(f"{c}{name}")
        return " + ".join(terms) or "0"


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    factors: tuple[int, ...] = ()
    names: tuple[str, ...] = ()
    for G in groups:
        factors += G.factors
        names += G.generator_names
    return FgAbGroup(factors, names)


@dataclass(frozen=True)
class GroupElement:
    """Canonical coefficient vector over the generators of ``parent``."""

    parent: FgAbGroup
    coeffs: tuple[int, ...]

    def _check(self, other: GroupElement):
        if other.parent != self.parent:
            raise ShapeMismatch("elements of different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self.parent.element([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self.parent.element([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> GroupElement:
        return self.parent.element([-a for a in self.coeffs])

    def __rmul__(self, k: int) -> GroupElement:
        return self.parent.element([k * a for a in self.coeffs])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def order(self):
        return element_order(self)

    def __str__(self):
        return self.parent.format(self)


def element_order(x: GroupElement):
    """Least ``k >= 1`` with ``k x = 0``, or ``INFINITE``."""
    order = 1
    for c, d in zip(x.coeffs, x.parent.factors):
        if not c:
            continue
        if d == 0:
            return INFINITE
        order = math.lcm(order, d // math.gcd(c, d))
    return order


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------

def _as_matrix(matrix, rows: int, cols: int) -> Matrix:
    M = tuple(tuple(int(v) for v in row) for row in matrix)
    if len(M) != rows or any(len(row) != cols for row in M):
        raise ShapeMismatch(
            f"matrix shape does not match {rows} target x {cols} source generators")
    return M


@dataclass(frozen=True)
class Homomorphism:
    """Integer matrix; column ``j`` is the image of source generator ``j``."""

    source: FgAbGroup
    target: FgAbGroup
    matrix: Matrix = field(repr=False)

    def __post_init__(self):
        M = _as_matrix(self.matrix, len(self.target), len(self.source))
        # Reduce entries mod finite target orders so equal maps compare equal.
        M = tuple(tuple(v % d if d else v for v in row)
                  for row, d in zip(M, self.target.factors))
        object.__setattr__(self, "matrix", M)
        for j, dj in enumerate(self.source.factors):
            if not dj:
                continue
            for i, ei in enumerate(self.target.factors):
                v = dj * M[i][j]
                if (v % ei if ei else v) != 0:
                    raise IllDefinedHom(
                        f"generator {self.source.generator_names[j]} has order {dj} "
                        f"but {dj} times its image is nonzero in {self.target}")

    @classmethod
    def identity(cls, G: FgAbGroup) -> Homomorphism:
        return cls(G, G, _identity(len(G)))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> Homomorphism:
        return cls(source, target, [[0] * len(source) for _ in target.factors])

    @classmethod
    def scalar(cls, G: FgAbGroup, k: int) -> Homomorphism:
        return cls(G, G, [[k * v for v in row] for row in _identity(len(G))])

    def apply(self, x: GroupElement) -> GroupElement:
        if x.parent != self.source:
            raise ShapeMismatch("element is not in the source group")
        coeffs = x.coeffs
        return GroupElement(self.target, tuple(
            (sum(a * b for a, b in zip(row, coeffs)) % d) if d
            else sum(a * b for a, b in zip(row, coeffs))
            for row, d in zip(self.matrix, self.target.factors)))

    __call__ = apply

    def column(self, j: int) -> GroupElement:
        return GroupElement(self.target, tuple(row[j] for row in self.matrix))

    def kernel(self) -> Subgroup:
        return kernel(self)

    def image(self) -> Subgroup:
        return image(self)

    def is_injective(self) -> bool:
        return kernel(self).cardinality() == 1

    def is_surjective(self) -> bool:
        return image(self).contains_all(self.target.generators())

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __matmul__(self, other: Homomorphism) -> Homomorphism:
        return compose(self, other)


def compose(psi: Homomorphism, phi: Homomorphism) -> Homomorphism:
    """``psi ∘ phi``; the target of ``phi`` must be the source of ``psi``."""
    if phi.target != psi.source:
        raise ShapeMismatch(
            f"cannot compose: {phi.target} is not the source {psi.source}")
    A, B = psi.matrix, phi.matrix
    inner = len(phi.target)
    M = [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(len(phi.source))]
         for i in range(len(psi.target))]
    return Homomorphism(phi.source, psi.target, M)


def stack(source: FgAbGroup, homs: Sequence[Homomorphism]) -> Homomorphism:
    """The map ``x -> (phi_1 x, phi_2 x, ...)`` into the direct sum of targets."""
    for h in homs:
        if h.source != source:
            raise ShapeMismatch("stacked homomorphisms must share a source")
    target = direct_sum(*(h.target for h in homs))
    rows = [row for h in homs for row in h.matrix]
    return Homomorphism(source, target, rows)


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``ambient`` generated by ``generators``."""

    ambient: FgAbGroup
    generators: tuple[GroupElement, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.parent != self.ambient:
                raise ShapeMismatch("subgroup generator outside the ambient group")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def whole(cls, G: FgAbGroup) -> Subgroup:
        return cls(G, tuple(G.generators()))

    def _generator_columns(self) -> list[list[int]]:
        return [list(g.coeffs) for g in self.generators]

    def _system(self) -> tuple[list[list[int]], int]:
        cols = self._generator_columns() + self.ambient.relation_columns()
        n = len(self.ambient)
        return [[c[i] for c in cols] for i in range(n)], len(cols)

    def invariants(self) -> tuple[int, ...]:
        """Invariant factors ``d_1 | d_2 | ...`` of the subgroup (0 for ``Z``)."""
        p = len(self.generators)
        A, ncols = self._system()
        relations = [v[:p] for v in integer_kernel(A, ncols)]
        return _cyclic_invariants(relations, p)

    def is_finite(self) -> bool:
        return 0 not in self.invariants()

    def cardinality(self):
        return _order_of(self.invariants())

    def contains(self, x: GroupElement) -> bool:
        if x.parent != self.ambient:
            raise ShapeMismatch("element outside the ambient group")
        if x.is_zero():
            return True
        A, ncols = self._system()
        return integer_solve(A, ncols, x.coeffs) is not None

    __contains__ = contains

    def contains_all(self, xs: Iterable[GroupElement]) -> bool:
        return all(self.contains(x) for x in xs)

    def issubset(self, other: Subgroup) -> bool:
        return other.contains_all(self.generators)

    def elements(self) -> Iterator[GroupElement]:
        """All elements of a finite subgroup, lexicographic in coefficients."""
        if not self.is_finite():
            raise InfiniteSetError("cannot enumerate an infinite subgroup")
        if self.ambient.is_finite():
            for x in self.ambient.enumerate():
                if self.contains(x):
                    yield x
            return
        seen = {self.ambient.zero()}
        frontier = list(seen)
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = x + g
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        yield from sorted(seen, key=lambda e: e.coeffs)

    def count_two_torsion(self) -> int:
        return count_two_torsion(self)

    def intersection(self, other: Subgroup) -> Subgroup:
        if other.ambient != self.ambient:
            raise ShapeMismatch("subgroups of different groups")
        # Solve sum a_i g_i - sum b_j h_j = 0 modulo the relations.
        p = len(self.generators)
        cols = (self._generator_columns()
                + [[-c for c in col] for col in other._generator_columns()]
                + self.ambient.relation_columns())
        n = len(self.ambient)
        A = [[c[i] for c in cols] for i in range(n)]
        gens = []
        for v in integer_kernel(A, len(cols)):
            coeffs = [sum(v[k] * self.generators[k].coeffs[i] for k in range(p))
                      for i in range(n)]
            gens.append(self.ambient.element(coeffs))
        return Subgroup(self.ambient, tuple(gens))


def kernel(phi: Homomorphism) -> Subgroup:
    """Generators of ``{x : phi(x) = 0}``."""
    s = len(phi.source)
    rel = phi.target.relation_columns()
    cols = [list(phi.column(j).coeffs) for j in range(s)] + rel
    t = len(phi.target)
    A = [[c[i] for c in cols] for i in range(t)]
    if t == 0:
        return Subgroup.whole(phi.source)
    gens = []
    for v in integer_kernel(A, len(cols)):
        x = phi.source.element(v[:s])
        if not x.is_zero():
            gens.append(x)
    return Subgroup(phi.source, tuple(gens))


def image(phi: Homomorphism) -> Subgroup:
    """Generators of ``phi(source)``: the images of the source generators."""
    return Subgroup(phi.target, tuple(
        c for c in (phi.column(j) for j in range(len(phi.source))) if not c.is_zero()))


def count_two_torsion(S: Subgroup) -> int:
    """Number of elements ``a`` of the finite subgroup ``S`` with ``2a = 0``."""
    inv = S.invariants()
    if 0 in inv:
        raise InfiniteSetError("two-torsion count requested on an infinite subgroup")
    return math.prod(math.gcd(2, d) for d in inv)
