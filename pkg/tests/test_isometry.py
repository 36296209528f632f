from fractions import Fraction

import pytest
from hypothesis import given, settings

from hyperlat import linalg as la
from hyperlat.algebraic import NumberField, alg_equal, alg_power
from hyperlat.errors import DomainError, NotIsometryError, NotInOPrimeError
from hyperlat.formats import load
from hyperlat.isometry import (RealVector, apply, check_polarized, classify,
                               coxeter_element, entropy, inverse,
                               new_isometry, perron_ray, power, same_ray,
                               spectral_radius)
from hyperlat.lattice import ConePosition, e10_simple_roots, u_plus_e8
from helpers import isometries

LOG_PELL = Fraction("1.762747174039086050465219")
LEHMER = (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)


class TestNewIsometry:
    def test_accepts_pell(self, lat_p):
        assert new_isometry(lat_p, [[3, 4], [2, 3]]).rank == 2

    def test_rejects_non_isometry(self, lat_u):
        with pytest.raises(NotIsometryError):
            new_isometry(lat_u, [[1, 1], [0, 1]])

    def test_rejects_cone_swap(self, lat_p):
        with pytest.raises(NotInOPrimeError):
            new_isometry(lat_p, [[-3, -4], [-2, -3]])

    def test_inverse(self, pell):
        assert inverse(pell).m == ((3, -4), (-2, 3))


class TestClassify:
    def test_examples(self, pell, swap, para):
        c = classify(pell)
        assert c.kind == "loxodromic"
        assert abs(float(c.rho) - 5.828427124746190) < 1e-12
        assert classify(swap).kind == "elliptic" and classify(swap).order == 2
        assert classify(para).kind == "parabolic"

    def test_identity_is_elliptic_order_one(self, lat_u):
        c = classify(new_isometry(lat_u, [[1, 0], [0, 1]]))
        assert c.kind == "elliptic" and c.order == 1

    def test_entropy(self, pell, swap, para):
        lo, hi = entropy(pell, Fraction(1, 10**12))
        assert hi - lo <= Fraction(1, 10**12) and lo <= LOG_PELL <= hi
        assert entropy(swap) == (0, 0)
        assert entropy(para) == (0, 0)

    @given(isometries())
    @settings(max_examples=60)
    def test_elliptic_order_minimal(self, g):
        c = classify(g)
        if c.kind == "elliptic":
            assert la.mat_pow(g.m, c.order) == la.identity(g.rank)
            assert all(la.mat_pow(g.m, d) != la.identity(g.rank) for d in range(1, c.order))

    @given(isometries())
    @settings(max_examples=60)
    def test_trichotomy_exclusive(self, g):
        c = classify(g)
        assert c.kind in ("elliptic", "parabolic", "loxodromic")
        finite = any(la.mat_pow(g.m, d) == la.identity(g.rank) for d in range(1, 31))
        assert (c.kind == "elliptic") == finite
        if c.kind == "parabolic":
            # unbounded growth but eigenvalues on the unit circle
            assert spectral_radius(g).as_fraction() == 1

    @given(isometries(), isometries())
    @settings(max_examples=60)
    def test_conjugation_invariance(self, g, h):
        if g.lat != h.lat:
            return
        conj = inverse(h) @ g @ h
        a, b = classify(g), classify(conj)
        assert a.kind == b.kind and a.order == b.order
        if a.is_loxodromic:
            assert alg_equal(a.rho, b.rho)

    @given(isometries())
    @settings(max_examples=40)
    def test_rho_inverse_and_powers(self, g):
        rho = spectral_radius(g)
        assert alg_equal(rho, spectral_radius(inverse(g)))
        for k in (2, 3):
            assert alg_equal(spectral_radius(power(g, k)), alg_power(rho, k))


class TestPerron:
    def test_pell_ray(self, pell):
        pd = perron_ray(pell)
        assert pd.position is ConePosition.BOUNDARY
        k = pd.field
        x, y = pd.ray.coords
        assert k.equal(x, k.one())
        # y = sqrt2/2, so y^2 = 1/2 and y > 0
        assert k.equal(k.mul(y, y), k.const(Fraction(1, 2))) and k.sign(y) > 0

    def test_inverse_ray(self, pell):
        pd = perron_ray(inverse(pell))
        k = pd.field
        x, y = pd.ray.coords
        assert k.equal(x, k.one()) and k.sign(y) < 0
        assert k.equal(k.mul(y, y), k.const(Fraction(1, 2)))

    def test_not_loxodromic(self, swap):
        with pytest.raises(DomainError):
            perron_ray(swap)

    @given(isometries())
    @settings(max_examples=40)
    def test_eigen_and_cone(self, g):
        if not classify(g).is_loxodromic:
            return
        pd = perron_ray(g)
        k = pd.field
        w = apply(g.m, pd.ray)
        assert all(k.equal(a, k.mul(k.gen(), b)) for a, b in zip(w.coords, pd.ray.coords))
        assert pd.position is ConePosition.BOUNDARY
        # polarization by the Perron ray reports exactly rho
        pol = check_polarized(g, pd.ray)
        assert pol.kind == "scaled" and alg_equal(pol.lam, pd.rho)


class TestPolarized:
    def test_fixed(self, para):
        assert check_polarized(para, (1, 0, 0)).kind == "fixed"

    def test_not_eigen(self, pell):
        assert check_polarized(pell, (1, 0)).kind == "not_eigen"

    def test_outside(self, pell):
        with pytest.raises(DomainError):
            check_polarized(pell, (0, 1))
        with pytest.raises(DomainError):
            check_polarized(pell, (0, 0))

    def test_inverse_scaled_down(self, pell):
        ray = perron_ray(pell).ray
        pol = check_polarized(inverse(pell), ray)
        assert pol.kind == "scaled" and float(pol.lam) < 1

    def test_boundary_ray_unique(self, pell):
        # P has two boundary rays; only the Perron ray is scaled by rho > 1
        up, down = perron_ray(pell).ray, perron_ray(inverse(pell)).ray
        k = up.field
        assert not same_ray(up, RealVector(k, tuple(k.element(c) for c in down.coords)))
        assert float(check_polarized(pell, up).lam) > 1
        assert float(check_polarized(pell, down).lam) < 1


class TestLehmer:
    def test_rebuilt_from_reflections(self):
        lat = u_plus_e8()
        g = coxeter_element(lat, e10_simple_roots())
        assert g.charpoly == LEHMER
        stored = load(_fixture("lehmer_coxeter.json")).isometry
        assert stored.m == g.m

    def test_classify_and_ray(self):
        g = load(_fixture("lehmer_coxeter.json")).isometry
        c = classify(g)
        assert c.kind == "loxodromic"
        assert abs(float(c.rho) - 1.176280818259916) < 1e-12
        pd = perron_ray(g)
        assert pd.position is ConePosition.BOUNDARY
        assert isinstance(pd.field, NumberField) and pd.field.degree == 10


def _fixture(name):
    from hyperlat.formats import fixtures_dir

    return fixtures_dir() / name
