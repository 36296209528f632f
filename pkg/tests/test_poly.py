from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hyperlat import poly as P
from hyperlat.errors import DomainError
from oracles import cauchy_bound, descartes_count, numeric_roots

LEHMER = (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)
X = sympy.Symbol("x")


def to_sympy(p):
    return sympy.Poly(list(reversed(p)), X)


int_polys = st.lists(st.integers(-6, 6), min_size=2, max_size=7).map(P.norm).filter(lambda p: P.degree(p) >= 1)


class TestArithmetic:
    @given(int_polys, int_polys)
    def test_divmod(self, p, q):
        quo, r = P.divmod_poly(p, q)
        assert P.add(P.mul(quo, q), r) == P.norm(p)
        assert P.degree(r) < P.degree(q)

    @given(int_polys, int_polys)
    def test_gcd_matches_sympy(self, p, q):
        g = P.gcd_poly(p, q)
        expected = sympy.gcd(to_sympy(p), to_sympy(q)).monic()
        assert P.monic(g) == P.norm(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())))

    @given(int_polys, int_polys)
    def test_ext_gcd_bezout(self, p, q):
        g, s, t = P.ext_gcd(p, q)
        assert P.add(P.mul(s, p), P.mul(t, q)) == g

    def test_square_free_part(self):
        p = P.mul(P.power((-1, 1), 3), (1, 0, 1))
        assert P.monic(P.square_free_part(p)) == P.monic(P.mul((-1, 1), (1, 0, 1)))

    @given(int_polys)
    def test_square_free_part_roots(self, p):
        sf = P.square_free_part(p)
        assert P.degree(P.gcd_poly(sf, P.derivative(sf))) == 0
        assert P.degree(sf) == to_sympy(p).sqf_part().degree()
        assert P.divides(sf, p)


class TestCyclotomic:
    def test_small(self):
        assert P.cyclotomic(1) == (-1, 1)
        assert P.cyclotomic(4) == (1, 0, 1)
        assert P.cyclotomic(6) == (1, -1, 1)

    @pytest.mark.parametrize("n", range(1, 40))
    def test_against_sympy(self, n):
        expected = tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()))
        assert P.cyclotomic(n) == expected
        assert P.degree(P.cyclotomic(n)) == P.euler_phi(n)

    def test_strip(self):
        p = P.mul(P.power(P.cyclotomic(1), 2), P.mul(P.cyclotomic(6), (1, -6, 1)))
        cof, mult = P.strip_cyclotomic(p)
        assert cof == (1, -6, 1)
        assert mult == {1: 2, 6: 1}


class TestQuasiUnipotent:
    def test_examples(self):
        assert P.is_quasi_unipotent_poly((1, -2, 1))
        assert P.is_quasi_unipotent_poly((-1, 0, 1))
        assert not P.is_quasi_unipotent_poly((1, -6, 1))

    def test_non_monic(self):
        with pytest.raises(DomainError):
            P.is_quasi_unipotent_poly((1, 2))

    @given(st.lists(st.integers(1, 30), min_size=1, max_size=4))
    def test_products_of_cyclotomics(self, ns):
        p = (1,)
        for n in ns:
            p = P.mul(p, P.cyclotomic(n))
        assert P.is_quasi_unipotent_poly(p)
        # only possible real roots are +1 and -1
        for lo, hi in P.isolate_real_roots(p):
            assert P.evaluate(p, 1) == 0 and lo <= 1 <= hi or P.evaluate(p, -1) == 0 and lo <= -1 <= hi

    @given(int_polys.map(lambda p: P.add(p, (0,) * (len(p)) + (1,))))
    @settings(max_examples=100)
    def test_real_roots_are_units(self, p):
        # monic by construction
        if P.is_quasi_unipotent_poly(p):
            for r in numeric_roots(p):
                assert abs(abs(r) - 1) < 1e-6


class TestRootIsolation:
    def test_lehmer_two_real_roots(self):
        # Descartes bisection on the Cauchy box as independent count
        b = cauchy_bound(LEHMER)
        assert descartes_count(LEHMER, -b, b) == 2
        assert P.count_roots(LEHMER, -P.root_bound(LEHMER), P.root_bound(LEHMER)) == 2
        assert len(P.isolate_real_roots(LEHMER)) == 2

    def test_pell_roots(self):
        assert descartes_count((1, -6, 1), -10, 10) == 2
        (a, b), (c, d) = P.isolate_real_roots((1, -6, 1))
        assert a <= Fraction(17157, 100000) <= b
        assert c <= Fraction(58284, 10000) <= d

    def test_closed_interval_counts_endpoints(self):
        assert P.count_roots((-1, 1), 1, 2) == 1
        assert P.count_roots((-1, 1), 0, 1) == 1
        assert P.count_roots((-4, 0, 1), -2, 2) == 2

    @given(int_polys)
    @settings(max_examples=150, deadline=None)
    def test_isolation_against_oracles(self, p):
        sf = P.primitive(P.square_free_part(p))
        ivs = P.isolate_real_roots(p)
        b = cauchy_bound(sf)
        n_desc = descartes_count(sf, -b, b)
        n_sympy = len(to_sympy(sf).real_roots(multiple=True))
        assert len(ivs) == n_desc == n_sympy
        for (a, c), (d, _) in zip(ivs, ivs[1:]):
            assert c < d
        for a, c in ivs:
            assert P.count_roots(sf, a, c) == 1

    @given(int_polys, st.integers(1, 40))
    @settings(max_examples=80, deadline=None)
    def test_refine_containment(self, p, k):
        w = Fraction(1, 2**k)
        sf = P.square_free_part(p)
        for lo, hi in P.isolate_real_roots(p):
            a, b = P.refine_interval(sf, lo, hi, w)
            assert lo <= a <= b <= hi
            assert b - a <= w
            assert P.count_roots(sf, a, b) == 1


class TestTracePolynomial:
    def test_lehmer_trace(self):
        t = P.trace_polynomial(LEHMER)
        assert P.degree(t) == 5
        # x^5 T(x + 1/x) reproduces the palindromic input
        num = (0,)
        for k, c in enumerate(t):
            term = P.scale(c, P.mul(P.power((1, 0, 1), k), P.power(P.X, 5 - k)))
            num = P.add(num, term)
        assert num == LEHMER

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4))
    def test_palindromic_roundtrip(self, half):
        t = P.norm(tuple(half) + (1,))
        d = P.degree(t)
        q = (0,)
        for k, c in enumerate(t):
            q = P.add(q, P.scale(c, P.mul(P.power((1, 0, 1), k), P.power(P.X, d - k))))
        assume(P.degree(q) == 2 * d)
        assert P.is_palindromic(q)
        assert P.trace_polynomial(q) == t
