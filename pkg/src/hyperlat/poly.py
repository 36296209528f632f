"""Univariate polynomials with integer or rational coefficients.

A polynomial is a tuple of coefficients in ascending degree order with no
trailing zeros; ``()`` is the zero polynomial.  Functions accept lists too.

Besides plain arithmetic this module holds the pieces the rest of the
package needs from integer polynomials: square-free parts, cyclotomic
stripping (Kronecker's finite list of candidates), Sturm-sequence root
counting and certified real-root isolation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

from .errors import DomainError

Poly = tuple

X = (0, 1)
ONE = (1,)


def norm(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Sequence) -> int:
    p = norm(p)
    return len(p) - 1  # -1 for zero


def lead(p: Poly):
    return p[-1]


def add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return norm([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return norm([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def scale(c, p: Sequence) -> Poly:
    return norm([c * x for x in p])


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return norm(out)


def power(p: Sequence, k: int) -> Poly:
    result: Poly = ONE
    base = norm(p)
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def divmod_poly(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    """Quotient and remainder over Q (Fractions appear only if needed)."""
    p, q = norm(p), norm(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    lc = q[-1]
    if len(rem) - 1 < dq:
        return (), p
    quo = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c:
            if isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
                c //= lc
            else:
                c = Fraction(c) / lc
            quo[k] = c
            for i, b in enumerate(q):
                rem[k + i] -= c * b
    return norm(_tidy(quo)), norm(_tidy(rem[:dq]))


def _tidy(coeffs):
    return [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in coeffs]


def rem(p: Sequence, q: Sequence) -> Poly:
    return divmod_poly(p, q)[1]


def exact_div(p: Sequence, q: Sequence) -> Poly:
    quo, r = divmod_poly(p, q)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return quo


def divides(q: Sequence, p: Sequence) -> bool:
    return not rem(p, q)


def derivative(p: Sequence) -> Poly:
    return norm([i * c for i, c in enumerate(p)][1:])


def content(p: Sequence) -> Fraction:
    """Rational content: ``p / content(p)`` is primitive with integer coefficients."""
    p = norm(p)
    if not p:
        return Fraction(0)
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    g = 0
    for c in p:
        g = gcd(g, int(Fraction(c) * den))
    return Fraction(g, den)


def primitive(p: Sequence) -> Poly:
    """Primitive integer polynomial with positive leading coefficient."""
    p = norm(p)
    if not p:
        return ()
    c = content(p)
    q = [int(Fraction(x) / c) for x in p]
    if q[-1] < 0:
        q = [-x for x in q]
    return tuple(q)


def monic(p: Sequence) -> Poly:
    p = norm(p)
    lc = p[-1]
    return tuple(Fraction(c) / lc for c in p)


def gcd_poly(p: Sequence, q: Sequence) -> Poly:
    """Greatest common divisor as a primitive integer polynomial."""
    a, b = norm(p), norm(q)
    while b:
        a, b = b, primitive(rem(a, b))
    return primitive(a) if a else ()


def ext_gcd(p: Sequence, q: Sequence) -> tuple[Poly, Poly, Poly]:
    """``(g, s, t)`` with ``s*p + t*q = g`` and ``g`` monic over Q."""
    r0, r1 = norm(p), norm(q)
    s0, s1 = ONE, ()
    t0, t1 = (), ONE
    while r1:
        quo, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), s0, t0
    lc = Fraction(r0[-1])
    return (scale(1 / lc, r0), scale(1 / lc, s0), scale(1 / lc, t0))


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign(x) -> int:
    return (x > 0) - (x < 0)


def is_monic(p: Sequence) -> bool:
    p = norm(p)
    return bool(p) and p[-1] == 1


def square_free_part(p: Sequence) -> Poly:
    p = norm(p)
    if not p:
        raise DomainError("square-free part of the zero polynomial")
    g = gcd_poly(p, derivative(p))
    return primitive(exact_div(p, g)) if degree(g) > 0 else primitive(p)


def is_palindromic(p: Sequence) -> bool:
    p = norm(p)
    return tuple(p) == tuple(reversed(p))


# --- cyclotomic polynomials -------------------------------------------------

def euler_phi(n: int) -> int:
    result, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    if n < 1:
        raise DomainError("cyclotomic index must be positive")
    p: Poly = sub(power(X, n), ONE)
    for d in range(1, n):
        if n % d == 0:
            p = exact_div(p, cyclotomic(d))
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def cyclotomic_indices(max_degree: int) -> tuple[int, ...]:
    """All n with phi(n) <= max_degree.

    phi(n) >= sqrt(n/2) for every n, so the search can stop at 2*d^2.
    """
    bound = max(2, 2 * max_degree * max_degree)
    return tuple(n for n in range(1, bound + 1) if euler_phi(n) <= max_degree)


def strip_cyclotomic(p: Sequence) -> tuple[Poly, dict[int, int]]:
    """Divide out every cyclotomic factor.

    Returns the cofactor (primitive, positive leading coefficient) and the
    multiplicity of each Phi_n removed.
    """
    p = primitive(p)
    found: dict[int, int] = {}
    for n in cyclotomic_indices(max(degree(p), 1)):
        phi = cyclotomic(n)
        if degree(phi) > degree(p):
            continue
        while degree(p) >= degree(phi):
            quo, r = divmod_poly(p, phi)
            if r:
                break
            p = primitive(quo)
            found[n] = found.get(n, 0) + 1
    return p, found


def is_quasi_unipotent_poly(p: Sequence) -> bool:
    """True iff every complex root of the monic integer polynomial is a root of unity."""
    if not is_monic(p):
        raise DomainError("quasi-unipotence test needs a monic polynomial")
    cofactor, _ = strip_cyclotomic(p)
    return degree(cofactor) == 0


# --- real roots ---------------------------------------------------------------

def sturm_sequence(p: Sequence) -> list[Poly]:
    p = norm(p)
    seq = [p, derivative(p)]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        # any positive rescaling keeps the sign pattern
        seq.append(scale(-1 / content(r), r))
    return [s for s in seq if s]


def _variations(seq: list[Poly], x) -> int:
    signs = [sign(evaluate(s, x)) for s in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p: Sequence) -> Fraction:
    """Cauchy bound: every root has modulus strictly below the returned value."""
    p = norm(p)
    lc = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lc for c in p[:-1]), default=Fraction(0))


def count_roots(p: Sequence, lo, hi, seq: list[Poly] | None = None) -> int:
    """Number of distinct real roots in the closed interval ``[lo, hi]``."""
    p = norm(p)
    if not p:
        raise DomainError("root count of the zero polynomial")
    if degree(p) == 0:
        return 0
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        return 0
    seq = seq or sturm_sequence(p)
    n = _variations(seq, lo) - _variations(seq, hi)
    return n + (1 if evaluate(p, lo) == 0 else 0)


def _splitting_point(p: Poly, a: Fraction, b: Fraction) -> Fraction:
    for num, den in ((1, 2), (1, 3), (2, 3), (2, 5), (3, 5), (3, 7), (4, 7)):
        m = a + (b - a) * num / den
        if evaluate(p, m) != 0:
            return m
    k = 11
    while True:  # finitely many roots, so this terminates
        m = a + (b - a) * Fraction(k // 2, k)
        if evaluate(p, m) != 0:
            return m
        k += 2


def isolate_real_roots(p: Sequence) -> list[tuple[Fraction, Fraction]]:
    """Disjoint closed rational intervals, one per distinct real root, ascending.

    Endpoints are never roots, so each interval holds its root in its interior
    and the sign of the square-free part differs at the two ends.
    """
    p = norm(p)
    if not p:
        raise DomainError("cannot isolate the roots of the zero polynomial")
    if degree(p) == 0:
        return []
    q = square_free_part(p)
    seq = sturm_sequence(q)
    b = root_bound(q)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-b, b, _variations(seq, -b) - _variations(seq, b))]
    while stack:
        a, c, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, c))
            continue
        m = _splitting_point(q, a, c)
        vm = _variations(seq, m)
        stack.append((a, m, _variations(seq, a) - vm))
        stack.append((m, c, vm - _variations(seq, c)))
    out.sort()
    # neighbours may share a (non-root) split point; shrink the left one off it
    for i in range(len(out) - 1):
        a, c = out[i]
        while c == out[i + 1][0]:
            a, c = refine_interval(q, a, c, (c - a) / 2)
        out[i] = (a, c)
    return out


def refine_interval(p: Sequence, lo: Fraction, hi: Fraction, width) -> tuple[Fraction, Fraction]:
    """Bisect ``[lo, hi]`` (holding exactly one root of square-free ``p``) to ``width``."""
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    if lo == hi:
        return lo, hi
    slo = sign(evaluate(p, lo))
    if slo == 0:
        return lo, lo
    if evaluate(p, hi) == 0:
        return hi, hi
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = sign(evaluate(p, m))
        if sm == 0:
            return m, m
        if sm == slo:
            lo = m
        else:
            hi = m
    return lo, hi


def trace_polynomial(p: Sequence) -> Poly:
    """For palindromic ``p`` of even degree 2d, the T of degree d with p(x) = x^d T(x + 1/x)."""
    p = norm(p)
    if not is_palindromic(p) or degree(p) % 2:
        raise DomainError("trace polynomial needs an even-degree palindromic polynomial")
    d = degree(p) // 2
    # x^k + x^-k as polynomials in y = x + 1/x
    v_prev, v_cur = (2,), X
    t = scale(1, (p[d],))
    for k in range(1, d + 1):
        t = add(t, scale(p[d + k], v_cur))
        v_prev, v_cur = v_cur, sub(mul(X, v_cur), v_prev)
    return t
