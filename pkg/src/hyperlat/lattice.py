"""Hyperbolic lattices and the positive cone."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import linalg as la
from .errors import (BadReferenceError, DegenerateFormError, DomainError,
                     NotHyperbolicError, ShapeError)


class ConePosition(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Lattice:
    """Z^r with an integral form of signature (1, r-1).

    ``cone_ref`` is a vector of positive square that selects which of the
    two components of {x : x.x > 0} counts as the positive cone.
    """

    gram: tuple
    cone_ref: tuple
    name: str | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.gram)


def new_lattice(gram: Sequence[Sequence[int]], cone_ref: Sequence[int], name: str | None = None) -> Lattice:
    g = la.as_matrix(gram)
    if not la.is_square(g) or not la.is_symmetric(g):
        raise ShapeError("gram matrix must be square and symmetric")
    if any(not isinstance(x, int) for row in g for x in row):
        raise ShapeError("gram entries must be integers")
    ref = tuple(cone_ref)
    if len(ref) != len(g):
        raise ShapeError(f"cone_ref has length {len(ref)}, rank is {len(g)}")
    if any(not isinstance(x, int) for x in ref):
        raise ShapeError("cone_ref entries must be integers")
    if la.det(g) == 0:
        raise DegenerateFormError("gram matrix is degenerate")
    sig = la.signature(g)
    if sig != (1, len(g) - 1, 0):
        raise NotHyperbolicError(f"signature {sig[:2]} is not (1, {len(g) - 1})")
    if la.bilinear(g, ref, ref) <= 0:
        raise BadReferenceError("cone_ref must have positive square")
    return Lattice(g, ref, name)


def pairing(lat: Lattice, u: Sequence, v: Sequence):
    if len(u) != lat.rank or len(v) != lat.rank:
        raise ShapeError("vector length does not match lattice rank")
    return la.bilinear(lat.gram, u, v)


def square(lat: Lattice, v: Sequence):
    return pairing(lat, v, v)


def cone_position(lat: Lattice, v: Sequence) -> ConePosition:
    if len(v) != lat.rank:
        raise ShapeError("vector length does not match lattice rank")
    if all(x == 0 for x in v):
        raise DomainError("zero vector has no cone position")
    sq = square(lat, v)
    side = pairing(lat, v, lat.cone_ref)
    if side > 0 and sq > 0:
        return ConePosition.INTERIOR
    if side > 0 and sq == 0:
        return ConePosition.BOUNDARY
    return ConePosition.OUTSIDE


def primitive(v: Sequence, lat: Lattice) -> tuple:
    """Primitive integer vector on the line of ``v``, oriented into the positive side.

    Accepts rational input.  The sign makes the pairing with ``cone_ref``
    positive; when that pairing vanishes the first nonzero entry is positive.
    """
    if all(x == 0 for x in v):
        raise DomainError("zero vector has no primitive representative")
    w = la.normalize_int([Fraction(x) for x in v])
    side = pairing(lat, w, lat.cone_ref)
    if side < 0 or (side == 0 and next(x for x in w if x) < 0):
        w = tuple(-x for x in w)
    return w


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


# --- common fixtures --------------------------------------------------------

def u_plane() -> Lattice:
    return new_lattice([[0, 1], [1, 0]], [1, 1], "U")


def pell_plane() -> Lattice:
    return new_lattice([[1, 0], [0, -2]], [1, 0], "P")


def e8_gram(sign: int = 1) -> tuple:
    """Cartan matrix of E8 (Bourbaki labels: chain 1-3-4-5-6-7-8, node 2 on 4), times ``sign``."""
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
    m = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for a, b in edges:
        m[a - 1][b - 1] = m[b - 1][a - 1] = -1
    return tuple(tuple(sign * x for x in row) for row in m)


def orthogonal_sum(*grams: Sequence[Sequence[int]]) -> tuple:
    n = sum(len(g) for g in grams)
    out = [[0] * n for _ in range(n)]
    k = 0
    for g in grams:
        for i, row in enumerate(g):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(g)
    return tuple(tuple(r) for r in out)


E8_HIGHEST_ROOT = (2, 3, 4, 6, 5, 4, 3, 2)


def u_plus_e8() -> Lattice:
    """U + E8(-1), the even unimodular hyperbolic lattice of rank 10."""
    gram = orthogonal_sum([[0, 1], [1, 0]], e8_gram(-1))
    return new_lattice(gram, (1, 1) + (0,) * 8, "U_E8m")


def e10_simple_roots() -> list[tuple]:
    """Ten (-2)-roots of U + E8(-1) whose Dynkin diagram is T(2,3,7).

    With U spanned by isotropic e, f (e.f = 1) and theta the highest root of
    E8(-1): e - f, f - theta, then the E8 simple roots from the node next to
    the affine one (Bourbaki label 8) down the long arm.
    """
    def vec(u_part, e8_part):
        return tuple(u_part) + tuple(e8_part)

    unit = [tuple(1 if i == j else 0 for i in range(8)) for j in range(8)]
    roots = [vec((1, -1), (0,) * 8), vec((0, 1), tuple(-x for x in E8_HIGHEST_ROOT))]
    for label in (8, 7, 6, 5, 4, 2, 3, 1):
        roots.append(vec((0, 0), unit[label - 1]))
    return roots
