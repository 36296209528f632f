"""Certified real algebraic numbers and arithmetic in the field they generate.

An ``AlgebraicNumber`` is a square-free integer polynomial together with a
closed rational interval holding exactly one of its real roots.  The
polynomial need not be irreducible: equality is decided through gcds and
Sturm counts, never by comparing defining polynomials.

``NumberField`` does arithmetic on polynomial expressions in a fixed
algebraic number ``alpha``.  Elements are coefficient tuples reduced modulo
the defining polynomial; two elements are equal when they take the same
value at ``alpha``, which is tested exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from mpmath import iv
from mpmath.libmp import to_rational

from . import poly as P
from .errors import DomainError, MalformedError
from .linalg import char_poly

DEFAULT_WIDTH = Fraction(1, 10**12)


# --- rational interval arithmetic --------------------------------------------

Interval = tuple  # (lo: Fraction, hi: Fraction)


def iv_add(a: Interval, b: Interval) -> Interval:
    return a[0] + b[0], a[1] + b[1]


def iv_mul(a: Interval, b: Interval) -> Interval:
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


def iv_poly(p: Sequence, x: Interval) -> Interval:
    """Enclosure of ``p`` over ``x`` by interval Horner evaluation."""
    acc: Interval = (Fraction(0), Fraction(0))
    for c in reversed(p):
        acc = iv_mul(acc, x)
        acc = (acc[0] + c, acc[1] + c)
    return acc


# --- algebraic numbers ---------------------------------------------------------

@dataclass(frozen=True)
class AlgebraicNumber:
    min_poly: tuple
    lo: Fraction
    hi: Fraction

    @classmethod
    def rational(cls, q) -> AlgebraicNumber:
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q)

    @classmethod
    def from_poly(cls, p: Sequence, lo, hi) -> AlgebraicNumber:
        """Square-free part of ``p`` with an interval already known to isolate one root."""
        q = P.square_free_part(p)
        lo, hi = Fraction(lo), Fraction(hi)
        if P.count_roots(q, lo, hi) != 1:
            raise DomainError("interval does not isolate exactly one root")
        return cls(q, lo, hi)

    @property
    def degree(self) -> int:
        return P.degree(self.min_poly)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def interval(self) -> Interval:
        return self.lo, self.hi

    def is_rational(self) -> bool:
        return self.lo == self.hi or self.degree == 1

    def as_fraction(self) -> Fraction:
        if self.lo == self.hi:
            return self.lo
        if self.degree == 1:
            return Fraction(-self.min_poly[0], self.min_poly[1])
        raise DomainError("not a rational number")

    def __float__(self) -> float:
        a = refine(self, Fraction(1, 2**60))
        return float((a.lo + a.hi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicNumber(min_poly={list(self.min_poly)}, ~{float(self):.12g})"


ONE = AlgebraicNumber.rational(1)


def refine(a: AlgebraicNumber, width=DEFAULT_WIDTH) -> AlgebraicNumber:
    """Same root, isolating interval no wider than ``width`` and inside the old one."""
    width = Fraction(width)
    if width <= 0:
        raise DomainError("width must be positive")
    if a.width <= width:
        return a
    if a.degree == 1:
        q = a.as_fraction()
        return AlgebraicNumber(a.min_poly, q, q)
    lo, hi = P.refine_interval(a.min_poly, a.lo, a.hi, width)
    return AlgebraicNumber(a.min_poly, lo, hi)


def alg_equal(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    if a.hi < b.lo or b.hi < a.lo:
        return False
    g = P.gcd_poly(a.min_poly, b.min_poly)
    if P.degree(g) <= 0:
        return False
    if P.count_roots(g, a.lo, a.hi) == 0 or P.count_roots(g, b.lo, b.hi) == 0:
        return False
    # each interval holds exactly one root of g; they coincide iff the overlap holds one
    return P.count_roots(g, max(a.lo, b.lo), min(a.hi, b.hi)) > 0


def compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    if alg_equal(a, b):
        return 0
    w = max(a.width, b.width, Fraction(1, 2**20))
    while not (a.hi < b.lo or b.hi < a.lo):
        w /= 4
        a, b = refine(a, w), refine(b, w)
    return -1 if a.hi < b.lo else 1


def evaluate_at(alpha: AlgebraicNumber, q: Sequence) -> AlgebraicNumber:
    """The algebraic number ``q(alpha)`` for a rational polynomial ``q``.

    Its defining polynomial is the characteristic polynomial of
    multiplication by ``q`` on Q[x]/(min_poly), which has every ``q(beta)``
    as a root; the interval comes from interval evaluation on a refined
    enclosure of ``alpha``.
    """
    p = alpha.min_poly
    q = P.rem(q, p) if P.degree(p) > 0 else P.norm(q)
    if alpha.is_rational():
        return AlgebraicNumber.rational(P.evaluate(q, alpha.as_fraction()))
    if P.degree(q) <= 0:
        return AlgebraicNumber.rational(q[0] if q else 0)
    mult = multiplication_matrix(p, q)
    r = P.square_free_part(char_poly(mult))
    seq = P.sturm_sequence(r)
    w = max(alpha.width, Fraction(1, 2**16))
    a = alpha
    while True:
        lo, hi = iv_poly(q, a.interval)
        if P.count_roots(r, lo, hi, seq) == 1:
            return AlgebraicNumber(r, lo, hi)
        w /= 16
        a = refine(a, w)


def multiplication_matrix(p: Sequence, q: Sequence) -> tuple:
    """Matrix of ``f -> q*f`` on Q[x]/(p) in the monomial basis."""
    n = P.degree(p)
    cols = []
    for j in range(n):
        c = P.rem(P.mul(q, P.power(P.X, j)), p)
        cols.append([c[i] if i < len(c) else 0 for i in range(n)])
    return tuple(tuple(Fraction(cols[j][i]) for j in range(n)) for i in range(n))


def alg_power(a: AlgebraicNumber, s: int) -> AlgebraicNumber:
    if s < 0:
        raise DomainError("negative exponent")
    if a.is_rational():
        return AlgebraicNumber.rational(a.as_fraction() ** s)
    return evaluate_at(a, P.power(P.X, s))


def alg_pow_equal(a: AlgebraicNumber, s: int, b: AlgebraicNumber, t: int) -> bool:
    """Exact test of ``a**s == b**t`` for positive integers ``s``, ``t``."""
    if s < 1 or t < 1:
        raise DomainError("exponents must be positive")
    return alg_equal(alg_power(a, s), alg_power(b, t))


# --- logarithms ----------------------------------------------------------------

def _mpf_to_fraction(raw) -> Fraction:
    return Fraction(*to_rational(raw))


def log_interval(a: AlgebraicNumber, width=DEFAULT_WIDTH) -> Interval:
    """Certified enclosure of ``log(a)`` for ``a > 0``, no wider than ``width``.

    Exactly ``(0, 0)`` when ``a`` is one.
    """
    width = Fraction(width)
    if alg_equal(a, ONE):
        return Fraction(0), Fraction(0)
    if compare(a, AlgebraicNumber.rational(0)) <= 0:
        raise DomainError("log of a non-positive number")
    bits = max(64, width.denominator.bit_length() - width.numerator.bit_length() + 32)
    w = width / 4
    old = iv.prec
    try:
        while True:
            a = refine(a, w)
            if a.lo <= 0:
                w /= 4
                continue
            iv.prec = bits
            lo = iv.mpf(a.lo.numerator) / iv.mpf(a.lo.denominator)
            hi = iv.mpf(a.hi.numerator) / iv.mpf(a.hi.denominator)
            enclosure = iv.log(iv.mpf([lo.a, hi.b]))
            out_lo, out_hi = (_mpf_to_fraction(x) for x in enclosure._mpi_)
            if out_hi - out_lo <= width:
                return out_lo, out_hi
            w /= 4
            bits += 16
    finally:
        iv.prec = old


# --- Salem / quadratic recognition ----------------------------------------------

@dataclass(frozen=True)
class SpectralKind:
    """``kind`` is ``"rho_one"``, ``"quadratic"`` or ``"salem"``."""

    kind: str
    rho: AlgebraicNumber | None = None


RHO_ONE = SpectralKind("rho_one")


def carrier(p: Sequence) -> tuple:
    """Square-free, cyclotomic-free part of an integer polynomial."""
    cofactor, _ = P.strip_cyclotomic(p)
    if P.degree(cofactor) <= 0:
        return P.ONE
    return P.square_free_part(cofactor)


def salem_test(p: Sequence) -> SpectralKind:
    """Classify the top root of a monic reciprocal-type integer polynomial.

    A palindromic q of degree 2d is x^d T(x + 1/x).  Roots of q on the unit
    circle match roots of T in (-2, 2) and the pair rho, 1/rho matches a
    root of T above 2, so the Salem pattern is equivalent to T having d
    distinct real roots with exactly one above 2 and the rest in (-2, 2).
    All of this is counted with Sturm sequences.
    """
    if not P.is_monic(p):
        raise DomainError("salem_test needs a monic polynomial")
    if abs(P.norm(p)[0]) != 1:
        raise MalformedError("constant term is not a unit; not a reciprocal-type polynomial")
    q = carrier(p)
    if P.degree(q) == 0:
        return RHO_ONE
    if P.degree(q) % 2 or not P.is_palindromic(q):
        raise MalformedError(f"carrier {list(q)} is not palindromic of even degree")
    t = P.trace_polynomial(q)
    d = P.degree(t)
    roots = P.isolate_real_roots(t)
    if len(roots) != d or P.evaluate(t, 2) == 0 or P.evaluate(t, -2) == 0:
        raise MalformedError(f"carrier {list(q)} has roots off the unit circle besides rho^{{+-1}}")
    above = P.count_roots(t, 2, P.root_bound(t))
    inside = P.count_roots(t, -2, 2)
    if above != 1 or inside != d - 1:
        raise MalformedError(f"carrier {list(q)} does not have the Salem root pattern")
    lo, hi = P.isolate_real_roots(q)[-1]
    rho = AlgebraicNumber(q, lo, hi)
    while rho.lo <= 1:
        rho = refine(rho, rho.width / 2)
    return SpectralKind("quadratic" if d == 1 else "salem", rho)


# --- arithmetic in Q(alpha) -------------------------------------------------------

class NumberField:
    """Polynomial expressions in ``alpha``, reduced modulo its defining polynomial."""

    def __init__(self, alpha: AlgebraicNumber):
        self.alpha = alpha
        self.modulus = alpha.min_poly
        self.degree = max(P.degree(self.modulus), 1)
        self._seq = None

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and (
            self.modulus == other.modulus and alg_equal(self.alpha, other.alpha))

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"NumberField({self.alpha!r})"

    @classmethod
    def rationals(cls) -> NumberField:
        return cls(AlgebraicNumber.rational(0))

    def element(self, coeffs: Iterable) -> tuple:
        c = P.norm([Fraction(x) for x in coeffs])
        if P.degree(self.modulus) >= 1 and len(c) > P.degree(self.modulus):
            c = P.rem(c, self.modulus)
        return self._pad(c)

    def _pad(self, c: Sequence) -> tuple:
        c = [Fraction(x) for x in c]
        if P.degree(self.modulus) == 1:
            # Q itself: fold the polynomial to its value at the rational alpha
            return (Fraction(P.evaluate(c, self.alpha.as_fraction())),)
        return tuple(c + [Fraction(0)] * (self.degree - len(c)))

    def const(self, q) -> tuple:
        return self._pad([Fraction(q)])

    def gen(self) -> tuple:
        return self.element(P.X)

    def zero(self) -> tuple:
        return self.const(0)

    def one(self) -> tuple:
        return self.const(1)

    def add(self, a: Sequence, b: Sequence) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Sequence, b: Sequence) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Sequence) -> tuple:
        return tuple(-x for x in a)

    def mul(self, a: Sequence, b: Sequence) -> tuple:
        return self.element(P.mul(P.norm(a), P.norm(b)))

    def scale(self, c, a: Sequence) -> tuple:
        return tuple(c * x for x in a)

    def pow(self, a: Sequence, k: int) -> tuple:
        if k < 0:
            a, k = self.inverse(a), -k
        result = self.one()
        while k:
            if k & 1:
                result = self.mul(result, a)
            k >>= 1
            if k:
                a = self.mul(a, a)
        return result

    def is_zero(self, a: Sequence) -> bool:
        a = P.norm(a)
        if not a:
            return True
        if P.degree(a) == 0:
            return False
        g = P.gcd_poly(a, self.modulus)
        return P.degree(g) > 0 and P.count_roots(g, self.alpha.lo, self.alpha.hi) > 0

    def equal(self, a: Sequence, b: Sequence) -> bool:
        return self.is_zero(self.sub(a, b))

    def inverse(self, a: Sequence) -> tuple:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in number field")
        a = P.norm(a)
        if P.degree(a) == 0:
            return self.const(1 / Fraction(a[0]))
        # alpha is a root of modulus/g but not of g, so invert modulo the cofactor
        g = P.gcd_poly(a, self.modulus)
        m = P.exact_div(self.modulus, g) if P.degree(g) > 0 else self.modulus
        h, s, _ = P.ext_gcd(a, m)
        if P.degree(h) != 0:
            raise MalformedError("element not invertible modulo reduced modulus")
        return self.element(s)

    def div(self, a: Sequence, b: Sequence) -> tuple:
        return self.mul(a, self.inverse(b))

    def sign(self, a: Sequence) -> int:
        if self.is_zero(a):
            return 0
        alpha = self.alpha
        w = max(alpha.width, Fraction(1, 2**16))
        while True:
            lo, hi = iv_poly(P.norm(a), alpha.interval)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            w /= 16
            alpha = refine(alpha, w)

    def enclosure(self, a: Sequence, width=DEFAULT_WIDTH) -> Interval:
        """Rational interval containing the value of ``a`` and no wider than ``width``."""
        width = Fraction(width)
        alpha = self.alpha
        w = max(alpha.width, Fraction(1, 2**16))
        while True:
            lo, hi = iv_poly(P.norm(a), alpha.interval)
            if hi - lo <= width:
                return lo, hi
            w /= 16
            alpha = refine(alpha, w)

    def to_algebraic(self, a: Sequence) -> AlgebraicNumber:
        return evaluate_at(self.alpha, P.norm(a))

    def is_rational_element(self, a: Sequence) -> bool:
        return all(x == 0 for x in a[1:])

    def embed_rational_vector(self, v: Sequence) -> tuple:
        return tuple(self.const(x) for x in v)


def field_kernel(field: NumberField, rows: Sequence[Sequence[tuple]]) -> list[tuple]:
    """Right kernel of a matrix with entries in ``field``.

    Basis vectors come out of a reduced echelon form, so each has leading
    coordinate one.
    """
    a = [list(r) for r in rows]
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if not field.is_zero(a[i][c])), None)
        if piv is None:
            for i in range(r, nrows):
                a[i][c] = field.zero()
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inverse(a[r][c])
        a[r] = [field.mul(x, inv) for x in a[r]]
        for i in range(nrows):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
            elif i != r:
                a[i][c] = field.zero()
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero()] * ncols
        v[f] = field.one()
        for row, p in zip(a, pivots):
            v[p] = field.neg(row[f])
        basis.append(v)
    # leading coordinate 1
    out = []
    for v in basis:
        lead = next(x for x in v if not field.is_zero(x))
        inv = field.inverse(lead)
        out.append(tuple(field.mul(x, inv) if not field.is_zero(x) else field.zero() for x in v))
    return out
