"""Isometries in O(L)': validation, group operations and dynamics of one element."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Sequence

from . import linalg as la
from . import poly as P
from .algebraic import (DEFAULT_WIDTH, ONE, AlgebraicNumber, NumberField,
                        SpectralKind, alg_equal, compare, field_kernel,
                        log_interval, salem_test)
from .errors import (DomainError, LatticeMismatchError, MalformedError,
                     NotInOPrimeError, NotIsometryError, NotUnimodularError,
                     ShapeError)
from .lattice import ConePosition, Lattice, pairing


@dataclass(frozen=True)
class Isometry:
    lat: Lattice
    m: tuple

    @property
    def rank(self) -> int:
        return self.lat.rank

    @cached_property
    def charpoly(self) -> tuple:
        return la.char_poly(self.m)

    def __matmul__(self, other: Isometry) -> Isometry:
        return compose(self, other)


def new_isometry(lat: Lattice, m: Sequence[Sequence[int]]) -> Isometry:
    mat = la.as_matrix(m)
    if la.shape(mat) != (lat.rank, lat.rank):
        raise ShapeError(f"matrix is {len(mat)}x{len(mat[0])}, lattice rank is {lat.rank}")
    if any(not isinstance(x, int) for row in mat for x in row):
        raise ShapeError("matrix entries must be integers")
    if la.mat_mul(la.mat_mul(la.transpose(mat), lat.gram), mat) != lat.gram:
        raise NotIsometryError("matrix does not preserve the form")
    if la.det(mat) not in (1, -1):
        raise NotUnimodularError("determinant is not +-1")
    image = la.mat_vec(mat, lat.cone_ref)
    if pairing(lat, image, lat.cone_ref) <= 0:
        raise NotInOPrimeError("matrix swaps the two components of the positive cone")
    return Isometry(lat, mat)


def _same_lattice(g: Isometry, h: Isometry) -> None:
    if g.lat != h.lat:
        raise LatticeMismatchError("isometries act on different lattices")


def identity(lat: Lattice) -> Isometry:
    return Isometry(lat, la.identity(lat.rank))


def compose(g: Isometry, h: Isometry) -> Isometry:
    """``g`` after ``h``."""
    _same_lattice(g, h)
    return Isometry(g.lat, la.mat_mul(g.m, h.m))


def inverse(g: Isometry) -> Isometry:
    # g^-1 = G^-1 g^T G for an isometry of the form G
    gram = g.lat.gram
    inv = la.mat_mul(la.mat_mul(la.inverse(gram), la.transpose(g.m)), gram)
    if any(x.denominator != 1 for row in inv for x in row):
        raise MalformedError("inverse of an isometry is not integral")
    return Isometry(g.lat, tuple(tuple(int(x) for x in row) for row in inv))


def power(g: Isometry, k: int) -> Isometry:
    if k < 0:
        return power(inverse(g), -k)
    return Isometry(g.lat, la.mat_pow(g.m, k))


def is_identity(g: Isometry) -> bool:
    return g.m == la.identity(g.rank)


# --- vectors over Q(alpha) ------------------------------------------------------

@dataclass(frozen=True)
class RealVector:
    """A vector whose coordinates are elements of ``field``."""

    field: NumberField
    coords: tuple

    @classmethod
    def rational(cls, v: Sequence) -> RealVector:
        k = NumberField.rationals()
        return cls(k, k.embed_rational_vector(v))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for x in self.coords)

    def is_rational(self) -> bool:
        return all(self.field.is_rational_element(x) for x in self.coords)

    def rational_coords(self) -> tuple:
        if not self.is_rational():
            raise DomainError("vector has irrational coordinates")
        return tuple(x[0] for x in self.coords)

    def approx(self) -> tuple:
        return tuple(float(sum(self.field.enclosure(x, Fraction(1, 2**50))) / 2) for x in self.coords)


def as_real_vector(v) -> RealVector:
    return v if isinstance(v, RealVector) else RealVector.rational([Fraction(x) for x in v])


def apply(m: Sequence[Sequence[int]], v: RealVector) -> RealVector:
    k = v.field
    out = []
    for row in m:
        acc = k.zero()
        for a, x in zip(row, v.coords):
            if a:
                acc = k.add(acc, k.scale(a, x))
        out.append(acc)
    return RealVector(k, tuple(out))


def field_pairing(lat: Lattice, u: RealVector, v: RealVector) -> tuple:
    if u.field is not v.field and u.field != v.field:
        raise DomainError("vectors live in different number fields")
    k = u.field
    gv = apply(lat.gram, v)
    acc = k.zero()
    for x, y in zip(u.coords, gv.coords):
        acc = k.add(acc, k.mul(x, y))
    return acc


def real_cone_position(lat: Lattice, v: RealVector) -> ConePosition:
    if v.dim != lat.rank:
        raise ShapeError("vector length does not match lattice rank")
    if v.is_zero():
        raise DomainError("zero vector has no cone position")
    k = v.field
    sq = k.sign(field_pairing(lat, v, v))
    side = k.sign(field_pairing(lat, v, RealVector(k, k.embed_rational_vector(lat.cone_ref))))
    if side > 0 and sq > 0:
        return ConePosition.INTERIOR
    if side > 0 and sq == 0:
        return ConePosition.BOUNDARY
    return ConePosition.OUTSIDE


def scaling_factor(m: Sequence[Sequence[int]], v: RealVector):
    """The field element ``lam`` with ``m v = lam v``, or None when ``m v`` leaves the line."""
    k = v.field
    w = apply(m, v)
    i = next(i for i, x in enumerate(v.coords) if not k.is_zero(x))
    lam = k.div(w.coords[i], v.coords[i])
    for x, y in zip(w.coords, v.coords):
        if not k.equal(x, k.mul(lam, y)):
            return None
    return lam


def same_ray(u: RealVector, v: RealVector) -> bool:
    """Positive proportionality of two vectors over a common field."""
    k = u.field
    if not (k is v.field or k == v.field):
        raise DomainError("vectors live in different number fields")
    i = next((i for i, x in enumerate(u.coords) if not k.is_zero(x)), None)
    if i is None or k.is_zero(v.coords[i]):
        return False
    ratio = k.div(v.coords[i], u.coords[i])
    if k.sign(ratio) <= 0:
        return False
    return all(k.equal(y, k.mul(ratio, x)) for x, y in zip(u.coords, v.coords))


# --- classification ---------------------------------------------------------------

@dataclass(frozen=True)
class IsometryClass:
    """``kind`` is ``"elliptic"``, ``"parabolic"`` or ``"loxodromic"``."""

    kind: str
    order: int | None = None
    rho: AlgebraicNumber | None = None

    @property
    def is_loxodromic(self) -> bool:
        return self.kind == "loxodromic"


def spectral_radius(g: Isometry) -> AlgebraicNumber:
    kind = salem_test(g.charpoly)
    return ONE if kind.rho is None else kind.rho


def entropy(g: Isometry, width=DEFAULT_WIDTH) -> tuple:
    """Certified enclosure of log(rho(g)); exactly (0, 0) for null entropy."""
    return log_interval(spectral_radius(g), width)


def _is_semisimple(g: Isometry) -> bool:
    q = P.square_free_part(g.charpoly)
    n = g.rank
    acc = la.zeros(n, n)
    for c in reversed(q):  # Horner: acc = acc*m + c*I
        acc = la.mat_add(la.mat_mul(acc, g.m), la.mat_scale(c, la.identity(n)))
    return all(x == 0 for row in acc for x in row)


def classify(g: Isometry) -> IsometryClass:
    cp = g.charpoly
    if not P.is_quasi_unipotent_poly(cp):
        return IsometryClass("loxodromic", rho=spectral_radius(g))
    if not _is_semisimple(g):
        return IsometryClass("parabolic")
    _, indices = P.strip_cyclotomic(cp)
    order = 1
    for n in indices:
        order = lcm(order, n)
    if not is_identity(power(g, order)):
        raise MalformedError(f"semisimple quasi-unipotent isometry fails order check {order}")
    for d in range(1, order):
        if order % d == 0 and is_identity(power(g, d)):
            raise MalformedError(f"computed order {order} is not minimal")
    return IsometryClass("elliptic", order=order)


def salem_kind(g: Isometry) -> SpectralKind:
    kind = salem_test(g.charpoly)
    if kind.rho is None:
        raise DomainError("salem_kind needs a loxodromic isometry")
    return kind


# --- Perron ray and polarization ------------------------------------------------------

@dataclass(frozen=True)
class PerronData:
    rho: AlgebraicNumber
    ray: RealVector
    position: ConePosition

    @property
    def field(self) -> NumberField:
        return self.ray.field


def perron_ray(g: Isometry) -> PerronData:
    """Exact eigenvector for rho(g) over Q(rho), oriented into the closed positive cone.

    The first nonzero coordinate is +1 or -1, whichever puts the vector on
    the positive side of ``cone_ref``.
    """
    cls = classify(g)
    if not cls.is_loxodromic:
        raise DomainError("perron_ray needs a loxodromic isometry")
    rho = cls.rho
    k = NumberField(rho)
    x = k.gen()
    rows = []
    for i, row in enumerate(g.m):
        rows.append(tuple(k.sub(k.const(a), x) if i == j else k.const(a) for j, a in enumerate(row)))
    basis = field_kernel(k, rows)
    if len(basis) != 1:
        raise MalformedError(f"rho-eigenspace has dimension {len(basis)}, expected 1")
    v = RealVector(k, basis[0])
    ref = RealVector(k, k.embed_rational_vector(g.lat.cone_ref))
    if k.sign(field_pairing(g.lat, v, ref)) < 0:
        v = RealVector(k, tuple(k.neg(c) for c in v.coords))
    w = apply(g.m, v)
    if not all(k.equal(a, k.mul(x, b)) for a, b in zip(w.coords, v.coords)):
        raise MalformedError("kernel vector is not a rho-eigenvector")
    pos = real_cone_position(g.lat, v)
    if pos is ConePosition.OUTSIDE:
        raise MalformedError("Perron vector lies outside the closed positive cone")
    return PerronData(rho, v, pos)


@dataclass(frozen=True)
class Polarization:
    """``kind`` is ``"fixed"``, ``"scaled"`` or ``"not_eigen"``."""

    kind: str
    lam: AlgebraicNumber | None = None
    lam_element: tuple | None = None


def check_polarized(g: Isometry, d) -> Polarization:
    d = as_real_vector(d)
    if d.is_zero():
        raise DomainError("polarizing vector must be nonzero")
    if real_cone_position(g.lat, d) is ConePosition.OUTSIDE:
        raise DomainError("polarizing vector lies outside the closed positive cone")
    k = d.field
    lam = scaling_factor(g.m, d)
    if lam is None:
        return Polarization("not_eigen")
    if k.equal(lam, k.one()):
        return Polarization("fixed", ONE, lam)
    value = k.to_algebraic(lam)
    rho = spectral_radius(g)
    top = value if compare(value, ONE) > 0 else k.to_algebraic(k.inverse(lam))
    if not alg_equal(top, rho):
        raise MalformedError("scaling factor of a cone vector is not rho(g)^(+-1)")
    return Polarization("scaled", value, lam)


def reflection(lat: Lattice, root: Sequence[int]) -> Isometry:
    """x -> x - 2 (x, r) / (r, r) r for a root with (r, r) < 0 dividing 2 (x, r)."""
    rr = pairing(lat, root, root)
    if rr >= 0:
        raise DomainError("reflection root must have negative square")
    n = lat.rank
    gr = la.mat_vec(lat.gram, root)
    cols = []
    for j in range(n):
        c = Fraction(-2 * gr[j], rr)
        if c.denominator != 1:
            raise NotIsometryError("reflection is not integral on the lattice")
        cols.append(int(c))
    m = tuple(tuple((1 if i == j else 0) + cols[j] * root[i] for j in range(n)) for i in range(n))
    return new_isometry(lat, m)


def coxeter_element(lat: Lattice, roots: Sequence[Sequence[int]]) -> Isometry:
    g = identity(lat)
    for r in roots:
        g = compose(g, reflection(lat, r))
    return g
