"""Finitely generated subgroups of O(L)'.

Words are sequences of letters: letter ``i >= 0`` is generator ``i`` and
letter ``~i`` (that is ``-i - 1``) is its inverse.  A word is evaluated left
to right, so ``[0, ~1]`` means ``g0 * g1^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterator, Sequence

from . import linalg as la
from . import poly as P
from .algebraic import ONE, AlgebraicNumber, log_interval
from .errors import (DomainError, LatticeMismatchError, MalformedError,
                     NotPolarizedError)
from .isometry import (Isometry, as_real_vector, check_polarized, classify,
                       inverse, power, real_cone_position, scaling_factor)
from .lattice import ConePosition, Lattice, pairing, primitive

DEFAULT_WORD_BOUND = 8
DEFAULT_EXPONENT_BOUND = 64
DEFAULT_PIGEONHOLE_BOUND = 4096


@dataclass(frozen=True)
class GroupSpec:
    lat: Lattice
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise DomainError("a group needs at least one generator")
        if any(g.lat != self.lat for g in self.generators):
            raise LatticeMismatchError("generators act on different lattices")


def new_group(lat: Lattice, generators: Sequence[Isometry]) -> GroupSpec:
    return GroupSpec(lat, tuple(generators))


def letter_matrix(group: GroupSpec, letter: int) -> tuple:
    if letter >= 0:
        return group.generators[letter].m
    return inverse(group.generators[~letter]).m


def word_element(group: GroupSpec, word: Sequence[int]) -> Isometry:
    m = la.identity(group.lat.rank)
    for letter in word:
        m = la.mat_mul(m, letter_matrix(group, letter))
    return Isometry(group.lat, m)


def _letters(group: GroupSpec) -> list[tuple[int, tuple]]:
    out = []
    for i, g in enumerate(group.generators):
        out.append((i, g.m))
        out.append((~i, inverse(g).m))
    return out


@dataclass
class Ball:
    """Distinct elements of word length at most ``radius``, in BFS order."""

    words: dict = field(default_factory=dict)  # matrix -> shortest word
    radius: int = 0
    closed: bool = False  # True when the last layer added nothing: the group is finite


def iter_ball(group: GroupSpec, radius: int) -> Iterator[tuple[tuple, tuple]]:
    """Yield ``(matrix, word)`` for each new element, shortest words first."""
    letters = _letters(group)
    ident = la.identity(group.lat.rank)
    seen = {ident}
    yield ident, ()
    frontier = [(ident, ())]
    for _ in range(radius):
        nxt = []
        for m, w in frontier:
            for letter, lm in letters:
                if w and letter == ~w[-1]:
                    continue
                prod = la.mat_mul(m, lm)
                if prod not in seen:
                    seen.add(prod)
                    word = w + (letter,)
                    nxt.append((prod, word))
                    yield prod, word
        if not nxt:
            return
        frontier = nxt


def ball(group: GroupSpec, radius: int) -> Ball:
    out = Ball(radius=radius)
    letters = _letters(group)
    for m, w in iter_ball(group, radius):
        out.words[m] = w
    # closed iff every product of a ball element with a letter stays in the ball
    out.closed = all(la.mat_mul(m, lm) in out.words for m in out.words for _, lm in letters)
    return out


def _is_loxodromic_matrix(m: tuple) -> bool:
    return not P.is_quasi_unipotent_poly(la.char_poly(m))


# --- invariant rays ---------------------------------------------------------------------

@dataclass(frozen=True)
class RayReport:
    ray: tuple  # primitive integer vector
    position: ConePosition
    lambdas: tuple  # one AlgebraicNumber per generator
    fixed_dimension: int = 0
    radical_dimension: int = 0


def common_fixed_subspace(group: GroupSpec) -> list[tuple]:
    n = group.lat.rank
    rows = []
    for g in group.generators:
        rows.extend(la.mat_sub(g.m, la.identity(n)))
    return la.kernel_basis(tuple(rows))


def common_fixed_ray(group: GroupSpec) -> RayReport | None:
    """A cone vector fixed by every generator, computed over Q.

    If the common fixed space F contains a positive vector, the G-orthogonal
    projection of ``cone_ref`` onto F is returned (it is interior).  If the
    form on F is negative semidefinite with a one-dimensional radical, the
    radical is the unique fixed isotropic ray.
    """
    lat = group.lat
    basis = common_fixed_subspace(group)
    if not basis:
        return None
    k = len(basis)
    restricted = tuple(tuple(pairing(lat, u, v) for v in basis) for u in basis)
    plus, _, _ = la.signature(restricted)
    ones = tuple(ONE for _ in group.generators)
    if plus:
        rhs = [pairing(lat, u, lat.cone_ref) for u in basis]
        coeffs = la.mat_vec(la.inverse(restricted), rhs)
        proj = tuple(sum(c * u[i] for c, u in zip(coeffs, basis)) for i in range(lat.rank))
        ray = primitive(proj, lat)
        if pairing(lat, ray, ray) <= 0:
            raise MalformedError("projection of cone_ref onto the fixed space is not positive")
        return RayReport(ray, ConePosition.INTERIOR, ones, k, 0)
    radical = la.kernel_basis(restricted)
    if not radical:
        return None
    if len(radical) > 1:
        raise MalformedError("fixed space has a radical of dimension > 1 in a hyperbolic lattice")
    vec = tuple(sum(c * u[i] for c, u in zip(radical[0], basis)) for i in range(lat.rank))
    ray = primitive(vec, lat)
    if pairing(lat, ray, ray) != 0 or pairing(lat, ray, lat.cone_ref) <= 0:
        raise MalformedError("radical vector is not a boundary vector")
    return RayReport(ray, ConePosition.BOUNDARY, ones, k, 1)


@dataclass(frozen=True)
class FibrationClass:
    vector: tuple | None
    note: str | None = None


def invariant_fibration_class(group: GroupSpec) -> FibrationClass:
    """Primitive isotropic class fixed by the whole group, if there is one."""
    report = common_fixed_ray(group)
    if report is None:
        return FibrationClass(None)
    if report.position is ConePosition.INTERIOR:
        return FibrationClass(
            None, f"fixed vector {list(report.ray)} is interior: the action on L is finite, not a fibration")
    return FibrationClass(report.ray)


# --- null entropy --------------------------------------------------------------------------

@dataclass(frozen=True)
class NullVerdict:
    """``kind`` is ``"yes_fixed_ray"``, ``"yes_finite"``, ``"no"`` or ``"inconclusive"``."""

    kind: str
    ray: RayReport | None = None
    orbit_size: int | None = None
    witness: tuple | None = None
    word_bound: int | None = None


def unipotent_test(g: Isometry) -> bool:
    n = g.rank
    d = la.mat_sub(g.m, la.identity(n))
    return all(x == 0 for row in la.mat_pow(d, n) for x in row)


def null_entropy_decide(group: GroupSpec, word_bound: int = DEFAULT_WORD_BOUND) -> NullVerdict:
    if word_bound < 1:
        raise DomainError("word_bound must be at least 1")
    for i, g in enumerate(group.generators):
        if classify(g).is_loxodromic:
            return NullVerdict("no", witness=(i,))
    report = common_fixed_ray(group)
    if report is not None:
        return NullVerdict("yes_fixed_ray", ray=report)
    b = ball(group, word_bound)
    if b.closed:
        return NullVerdict("yes_finite", orbit_size=len(b.words))
    for m, w in b.words.items():
        if _is_loxodromic_matrix(m):
            return NullVerdict("no", witness=w)
    return NullVerdict("inconclusive", word_bound=word_bound)


def null_subset_enumerate(group: GroupSpec, word_bound: int = DEFAULT_WORD_BOUND) -> tuple:
    """Distinct non-loxodromic elements of word length <= ``word_bound``, as (word, Isometry) pairs."""
    if word_bound < 1:
        raise DomainError("word_bound must be at least 1")
    out = []
    for m, w in iter_ball(group, word_bound):
        if not _is_loxodromic_matrix(m):
            out.append((w, Isometry(group.lat, m)))
    return tuple(out)


# --- the eigenvalue homomorphism ---------------------------------------------------------

@dataclass(frozen=True)
class PhiResult:
    lambdas: tuple  # AlgebraicNumber per generator
    image_generator: AlgebraicNumber | None  # None stands for the trivial image {1}
    exponents: tuple | None  # lambda_i = image_generator ** exponents[i]
    is_discrete_cyclic: bool
    exponent_bound: int


def _log_enclosure(k, element) -> tuple:
    return log_interval(k.to_algebraic(element), Fraction(1, 10**15))


def _find_relation(k, base, mu, bound: int):
    """Smallest coprime (a, b) <= bound with base**a == mu**b, both > 1."""
    lb = _log_enclosure(k, base)
    lm = _log_enclosure(k, mu)
    for b in range(1, bound + 1):
        # a * log(base) = b * log(mu)
        lo = b * lm[0] / lb[1]
        hi = b * lm[1] / lb[0]
        for a in range(max(1, ceil(lo)), min(bound, floor(hi)) + 1):
            if gcd(a, b) == 1 and k.equal(k.pow(base, a), k.pow(mu, b)):
                return a, b
    return None


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(u, v) with u*b + v*a == 1 for coprime a, b."""
    old_r, r = b, a
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_s, old_t


def phi_map(group: GroupSpec, ray, exponent_bound: int = DEFAULT_EXPONENT_BOUND) -> PhiResult:
    """Scaling factors of the generators on a common ray, and the image of log."""
    v = as_real_vector(ray)
    if v.is_zero() or real_cone_position(group.lat, v) is ConePosition.OUTSIDE:
        raise DomainError("ray must be a nonzero vector of the closed positive cone")
    k = v.field
    elements = []
    for i, g in enumerate(group.generators):
        lam = scaling_factor(g.m, v)
        if lam is None:
            raise NotPolarizedError(f"generator {i} does not scale the ray")
        elements.append(lam)
    values = tuple(k.to_algebraic(lam) for lam in elements)
    one = k.one()
    if all(k.equal(lam, one) for lam in elements):
        return PhiResult(values, None, tuple(0 for _ in elements), True, exponent_bound)

    base = None
    exps = [0] * len(elements)
    for i, lam in enumerate(elements):
        if k.equal(lam, one):
            continue
        s = k.sign(k.sub(lam, one))
        mu = lam if s > 0 else k.inverse(lam)
        if base is None:
            base, exps[i] = mu, s
            continue
        rel = _find_relation(k, base, mu, exponent_bound)
        if rel is None:
            return PhiResult(values, None, None, False, exponent_bound)
        a, b = rel
        u, w = _bezout(a, b)
        base = k.mul(k.pow(base, u), k.pow(mu, w))
        exps = [e * b for e in exps]
        exps[i] = s * a
    for lam, e in zip(elements, exps):
        if not k.equal(lam, k.pow(base, e)):
            raise MalformedError("phi exponents fail exact verification")
    return PhiResult(values, k.to_algebraic(base), tuple(exps), True, exponent_bound)


# --- equality up to powers --------------------------------------------------------------

@dataclass(frozen=True)
class PowersResult:
    """``kind`` is ``"found"``, ``"not_found"`` or ``"not_compatible"``."""

    kind: str
    t1: int | None = None
    t2: int | None = None
    reason: str | None = None
    exponent_bound: int | None = None
    pigeonhole_bound: int | None = None


def _pigeonhole(g1: Isometry, g2: Isometry, a: int, b: int, bound: int):
    """First repeat among d_k = g1^(a k) g2^(-b k); returns (m, n) with m < n."""
    step1 = power(g1, a).m
    step2 = power(g2, -b).m
    p1, p2 = step1, step2
    seen = {}
    for k in range(1, bound + 1):
        d = la.mat_mul(p1, p2)
        if d in seen:
            return seen[d], k
        seen[d] = k
        p1 = la.mat_mul(p1, step1)
        p2 = la.mat_mul(p2, step2)
    return None


def equal_up_to_powers(g1: Isometry, g2: Isometry,
                       exponent_bound: int = DEFAULT_EXPONENT_BOUND,
                       pigeonhole_bound: int = DEFAULT_PIGEONHOLE_BOUND) -> PowersResult:
    """Search for nonzero t1, t2 with g1^t1 == g2^t2, given a common polarizing ray."""
    from .isometry import perron_ray

    if g1.lat != g2.lat:
        raise LatticeMismatchError("isometries act on different lattices")
    if not classify(g1).is_loxodromic or not classify(g2).is_loxodromic:
        raise DomainError("equal_up_to_powers needs two loxodromic isometries")
    bounds = dict(exponent_bound=exponent_bound, pigeonhole_bound=pigeonhole_bound)
    pd = perron_ray(g1)
    pol = check_polarized(g2, pd.ray)
    if pol.kind != "scaled":
        return PowersResult("not_compatible", reason="no common polarizing ray", **bounds)
    k = pd.field
    sign = 1
    lam = pol.lam_element
    if k.sign(k.sub(lam, k.one())) < 0:
        g2, lam, sign = inverse(g2), k.inverse(lam), -1
    rho1 = k.gen()
    l1 = log_interval(pd.rho, Fraction(1, 10**15))
    l2 = log_interval(k.to_algebraic(lam), Fraction(1, 10**15))
    for a in range(1, exponent_bound + 1):
        for b in range(1, exponent_bound + 1):
            if a * l1[1] < b * l2[0] or b * l2[1] < a * l1[0]:
                continue
            if not k.equal(k.pow(rho1, a), k.pow(lam, b)):
                continue
            rep = _pigeonhole(g1, g2, a, b, pigeonhole_bound)
            if rep is None:
                continue
            m, n = rep
            t1, t2 = a * (n - m), b * (n - m)
            if power(g1, t1).m != power(g2, t2).m:
                raise MalformedError("pigeonhole repeat does not give equal powers")
            return PowersResult("found", t1, sign * t2, **bounds)
    return PowersResult("not_found", **bounds)
