"""Leibniz algebras by structure constants.

An algebra is a dimension, a field, and the bracket table [e_i, e_j] stored
as vectors. The identity [x,[y,z]] = [[x,y],z] - [[x,z],y] is checked on all
basis triples, which suffices by trilinearity. Ideals, the ideal generated by
all squares [x,x], and products of subspaces live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .fields import Field, Scalar
from .linalg import (
    Subspace,
    Vector,
    basis_vector,
    contains,
    full_subspace,
    is_subspace_of,
    span,
    subspace_intersect,
    subspace_sum,
    zero_subspace,
    zero_vector,
)


@dataclass(frozen=True)
class AlgebraDef:
    """Bilinear bracket on field^dim, given by [e_i, e_j] = table[i-1][j-1]."""

    name: str
    field: Field
    dim: int
    table: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        if len(self.table) != self.dim or any(len(row) != self.dim for row in self.table):
            raise ValueError("bracket table shape does not match dim")
        for row in self.table:
            for v in row:
                if v.field != self.field or len(v.coords) != self.dim:
                    raise ValueError("bracket table entry does not conform to the algebra")

    def basis_vector(self, i: int) -> Vector:
        return basis_vector(self.field, self.dim, i)

    def full_space(self) -> Subspace:
        return full_subspace(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return zero_subspace(self.field, self.dim)

    def __repr__(self) -> str:
        return f"AlgebraDef({self.name!r}, dim {self.dim} over {self.field!r})"


def algebra_from_constants(name: str, dim: int, field: Field,
                           constants: Iterable[tuple[int, int, int, Scalar]]) -> AlgebraDef:
    """Build an algebra from sparse (i, j, k, value) structure constants, 1-based.

    Explicit zeros and repeated (i, j, k) positions are rejected rather than
    merged; sparse input is expected to be canonical.
    """
    table = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
    seen: set[tuple[int, int, int]] = set()
    for (i, j, k, value) in constants:
        for idx in (i, j, k):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 1 <= idx <= dim:
                raise ValueError(f"structure-constant index out of range 1..{dim}: ({i},{j},{k})")
        if (i, j, k) in seen:
            raise ValueError(f"duplicate structure constant at ({i},{j},{k})")
        seen.add((i, j, k))
        if value == field.zero:
            raise ValueError(f"explicit zero structure constant at ({i},{j},{k})")
        table[i - 1][j - 1][k - 1] = value
    rows = tuple(tuple(Vector(field, tuple(cell)) for cell in row) for row in table)
    return AlgebraDef(name, field, dim, rows)


def bracket(x: Vector, y: Vector, alg: AlgebraDef) -> Vector:
    """[x, y] by bilinear expansion through the structure constants."""
    if x.field != alg.field or y.field != alg.field:
        raise ValueError("vector field does not match the algebra")
    if len(x.coords) != alg.dim or len(y.coords) != alg.dim:
        raise ValueError("vector length does not match the algebra dimension")
    f = alg.field
    acc = zero_vector(f, alg.dim)
    for i, xi in enumerate(x.coords):
        if xi == f.zero:
            continue
        for j, yj in enumerate(y.coords):
            if yj == f.zero:
                continue
            base = alg.table[i][j]
            if not base.is_zero():
                acc = acc + base.scale(f.mul(xi, yj))
    return acc


@dataclass(frozen=True)
class IdentityFailure:
    triple: tuple[int, int, int]
    lhs: Vector
    rhs: Vector


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    failures: tuple[IdentityFailure, ...]
    derived_failures: tuple[IdentityFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures and not self.derived_failures


def verify_right_leibniz(alg: AlgebraDef) -> VerificationReport:
    """Check [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples.

    The consequences [y,[x,x]] = 0 and [z,[x,y]] + [z,[y,x]] = 0 are checked
    on basis triples as a redundant cross-check; they never fail when the main
    identity holds.
    """
    e = [alg.basis_vector(i) for i in range(1, alg.dim + 1)]
    failures = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                lhs = bracket(e[i], bracket(e[j], e[k], alg), alg)
                rhs = bracket(bracket(e[i], e[j], alg), e[k], alg) - \
                    bracket(bracket(e[i], e[k], alg), e[j], alg)
                if lhs != rhs:
                    failures.append(IdentityFailure((i + 1, j + 1, k + 1), lhs, rhs))
    derived = []
    zero = zero_vector(alg.field, alg.dim)
    for i in range(alg.dim):
        for j in range(alg.dim):
            sq = bracket(e[i], e[i], alg)
            if bracket(e[j], sq, alg) != zero:
                derived.append(IdentityFailure((j + 1, i + 1, i + 1),
                                               bracket(e[j], sq, alg), zero))
            for k in range(alg.dim):
                s = bracket(e[k], bracket(e[i], e[j], alg), alg) + \
                    bracket(e[k], bracket(e[j], e[i], alg), alg)
                if s != zero:
                    derived.append(IdentityFailure((k + 1, i + 1, j + 1), s, zero))
    return VerificationReport("right", tuple(failures), tuple(derived))


def is_right_leibniz(alg: AlgebraDef) -> bool:
    """Fast boolean form of verify_right_leibniz, bailing at the first failure."""
    e = [alg.basis_vector(i) for i in range(1, alg.dim + 1)]
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                lhs = bracket(e[i], bracket(e[j], e[k], alg), alg)
                rhs = bracket(bracket(e[i], e[j], alg), e[k], alg) - \
                    bracket(bracket(e[i], e[k], alg), e[j], alg)
                if lhs != rhs:
                    return False
    return True


def verify_left_leibniz(alg: AlgebraDef) -> VerificationReport:
    """Check [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples."""
    e = [alg.basis_vector(i) for i in range(1, alg.dim + 1)]
    failures = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                lhs = bracket(e[i], bracket(e[j], e[k], alg), alg)
                rhs = bracket(bracket(e[i], e[j], alg), e[k], alg) + \
                    bracket(e[j], bracket(e[i], e[k], alg), alg)
                if lhs != rhs:
                    failures.append(IdentityFailure((i + 1, j + 1, k + 1), lhs, rhs))
    return VerificationReport("left", tuple(failures))


def is_antisymmetric(alg: AlgebraDef) -> bool:
    """True when [e_i, e_j] = -[e_j, e_i] and [e_i, e_i] = 0 throughout."""
    for i in range(alg.dim):
        if not alg.table[i][i].is_zero():
            return False
        for j in range(alg.dim):
            if alg.table[i][j] != -alg.table[j][i]:
                return False
    return True


def subspace_product(u: Subspace, v: Subspace, alg: AlgebraDef) -> Subspace:
    """Span of [x, y] over basis pairs; sufficient by bilinearity."""
    if u.ambient_dim != alg.dim or v.ambient_dim != alg.dim:
        raise ValueError("ambient mismatch with the algebra")
    if u.is_zero() or v.is_zero():
        return alg.zero_space()
    products = [bracket(x, y, alg)
                for x in u.basis_vectors() for y in v.basis_vectors()]
    return span(products, alg.dim, alg.field)


def ideal_closure(s: Subspace, alg: AlgebraDef) -> "IdealHandle":
    """Smallest two-sided ideal containing s, by fixpoint iteration.

    Dimensions strictly increase until stable, so at most dim(alg)+1 rounds
    are ever needed.
    """
    full = alg.full_space()
    current = s
    for _ in range(alg.dim + 1):
        grown = subspace_sum(current, subspace_product(current, full, alg))
        grown = subspace_sum(grown, subspace_product(full, current, alg))
        if grown == current:
            return IdealHandle(alg, current)
        assert grown.dim > current.dim
        current = grown
    raise AssertionError("ideal closure failed to stabilize within dim+1 rounds")


@dataclass(frozen=True)
class IdealHandle:
    """A verified two-sided ideal of an algebra."""

    algebra: AlgebraDef
    space: Subspace

    def __post_init__(self) -> None:
        full = self.algebra.full_space()
        if self.space.ambient_dim != self.algebra.dim or self.space.field != self.algebra.field:
            raise ValueError("subspace does not live in the algebra")
        if not is_subspace_of(subspace_product(self.space, full, self.algebra), self.space):
            raise ValueError("subspace is not a right ideal")
        if not is_subspace_of(subspace_product(full, self.space, self.algebra), self.space):
            raise ValueError("subspace is not a left ideal")

    @property
    def dim(self) -> int:
        return self.space.dim


def full_ideal(alg: AlgebraDef) -> IdealHandle:
    return IdealHandle(alg, alg.full_space())


@lru_cache(maxsize=None)
def squares_ideal(alg: AlgebraDef) -> IdealHandle:
    """Ideal generated by all squares [x, x].

    By bilinearity the squares of e_i and e_i + e_j (i < j) generate every
    [x, x]; char 2 is excluded at field construction, matching the theory
    this targets.
    """
    e = [alg.basis_vector(i) for i in range(1, alg.dim + 1)]
    gens = [bracket(x, x, alg) for x in e]
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            s = e[i] + e[j]
            gens.append(bracket(s, s, alg))
    return ideal_closure(span(gens, alg.dim, alg.field), alg)


def es_of(b: IdealHandle) -> Subspace:
    """Intersection of the ideal with the squares ideal of its algebra."""
    return subspace_intersect(b.space, squares_ideal(b.algebra).space)
