from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlat import linalg as la
from hyperlat.errors import NotUnimodularError, ShapeError
from hyperlat.lattice import e8_gram
from oracles import float_signature, leibniz_char_poly

M_PELL = ((3, 4), (2, 3))
M_SWAP = ((0, 1), (1, 0))
M_PARA = ((1, 2, 2), (0, 1, 0), (0, 2, 1))


def square_matrices(max_n=4, lo=-4, hi=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


@st.composite
def unimodular(draw, n):
    """Products of elementary integer matrices and sign flips."""
    m = la.identity(n)
    for _ in range(draw(st.integers(0, 6))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        e = [list(r) for r in la.identity(n)]
        if i == j:
            e[i][i] = -1
        else:
            e[i][j] = draw(st.integers(-2, 2))
        m = la.mat_mul(m, tuple(tuple(r) for r in e))
    return m


@st.composite
def symmetric(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s[i][j] = s[j][i] = draw(st.integers(-3, 3))
    return tuple(tuple(r) for r in s)


class TestCharPoly:
    def test_identity(self):
        assert la.char_poly(la.identity(2)) == (1, -2, 1)

    def test_pell_against_leibniz(self):
        assert leibniz_char_poly(M_PELL) == (1, -6, 1)
        assert la.char_poly(M_PELL) == (1, -6, 1)

    def test_swap(self):
        assert la.char_poly(M_SWAP) == (-1, 0, 1)

    def test_non_square(self):
        with pytest.raises(ShapeError):
            la.char_poly(((1, 2, 3), (4, 5, 6)))

    @given(square_matrices())
    def test_matches_leibniz(self, m):
        assert la.char_poly(la.as_matrix(m)) == leibniz_char_poly(m)

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(square_matrices(n, -3, 3).filter(lambda m: len(m) == n),
                                                         unimodular(n))))
    @settings(max_examples=50)
    def test_similarity_invariance(self, pair):
        m, p = pair
        m = la.as_matrix(m)
        conj = la.mat_mul(la.mat_mul(la.integer_inverse(p), m), p)
        assert la.char_poly(conj) == la.char_poly(m)


class TestKernel:
    def test_zero_matrix(self):
        assert la.kernel_basis(la.zeros(2, 2)) == [(1, 0), (0, 1)]

    def test_para_minus_identity(self):
        assert la.kernel_basis(la.mat_sub(M_PARA, la.identity(3))) == [(1, 0, 0)]

    def test_pell_minus_identity_trivial(self):
        d = la.mat_sub(M_PELL, la.identity(2))
        assert la.det(d) == (3 - 1) * (3 - 1) - 4 * 2  # -4, nonzero
        assert la.kernel_basis(d) == []

    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    def test_kernel_vectors_annihilated(self, r, c, data):
        m = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c), min_size=r, max_size=r))
        m = la.as_matrix(m)
        basis = la.kernel_basis(m)
        assert len(basis) == c - la.rank(m)
        for v in basis:
            assert all(x == 0 for x in la.mat_vec(m, v))
            assert next(x for x in v if x != 0) == 1


class TestSignature:
    def test_u(self):
        assert la.signature(((0, 1), (1, 0))) == (1, 1, 0)

    def test_p(self):
        assert la.signature(((1, 0), (0, -2))) == (1, 1, 0)

    def test_e8_negative(self):
        assert float_signature(e8_gram(-1)) == (0, 8, 0)
        assert la.signature(e8_gram(-1)) == (0, 8, 0)

    def test_non_symmetric(self):
        with pytest.raises(ShapeError):
            la.signature(((1, 2), (3, 4)))

    @given(symmetric())
    def test_matches_float_oracle(self, s):
        assert la.signature(s) == float_signature(s)

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(symmetric(n).filter(lambda s: len(s) == n), unimodular(n))))
    @settings(max_examples=60)
    def test_congruence_invariance(self, pair):
        s, a = pair
        conj = la.mat_mul(la.mat_mul(la.transpose(a), s), a)
        assert la.signature(conj) == la.signature(s)


class TestMatPow:
    def test_swap_squared(self):
        assert la.mat_pow(M_SWAP, 2) == la.identity(2)

    def test_zero_power(self):
        assert la.mat_pow(M_PARA, 0) == la.identity(3)

    def test_pell_inverse(self):
        inv = la.mat_pow(M_PELL, -1)
        assert inv == ((3, -4), (-2, 3))
        assert la.mat_mul(M_PELL, inv) == la.identity(2)

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodularError):
            la.mat_pow(((2, 0), (0, 1)), -1)

    @given(st.integers(-4, 4), st.integers(-4, 4))
    def test_additive(self, k1, k2):
        for m in (M_PELL, M_SWAP, M_PARA):
            assert la.mat_mul(la.mat_pow(m, k1), la.mat_pow(m, k2)) == la.mat_pow(m, k1 + k2)


def test_inverse_rational():
    inv = la.inverse(((2, 1), (1, 1)))
    assert inv == ((Fraction(1), Fraction(-1)), (Fraction(-1), Fraction(2)))
    with pytest.raises(ShapeError):
        la.inverse(((1, 2), (2, 4)))
