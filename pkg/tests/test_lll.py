"""Orbital norms and the exact Slater-to-Fock map."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import slater_expansions
from fqhent import (
    Amplitude,
    FockVector,
    MultiPoly,
    PiScalar,
    SlaterExpansion,
    ZeroStateError,
    amplitude_pattern,
    laughlin,
    orbital_norm_sq,
    slater_coefficient_magnitudes,
    slater_project,
    to_fock,
    vandermonde_power,
)


class TestOrbitalNorm:
    @pytest.mark.parametrize("i,expected", [(0, 2), (1, 4), (3, 96)])
    def test_examples(self, i, expected):
        assert orbital_norm_sq(i) == PiScalar(Fraction(expected), 1)

    def test_closed_form(self):
        for i in range(8):
            assert orbital_norm_sq(i).rational == 2 ** (i + 1) * math.factorial(i)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            orbital_norm_sq(-1)


class TestAmplitude:
    def test_validation(self):
        with pytest.raises(ValueError):
            Amplitude(0, Fraction(1, 2))
        with pytest.raises(ValueError):
            Amplitude(1, Fraction(-1, 2))

    def test_product_exact_when_square(self):
        a = Amplitude(1, Fraction(1, 4))
        b = Amplitude(-1, Fraction(9, 4))
        assert a.product(b) == Fraction(-3, 4)
        assert isinstance(a.product(b), Fraction)

    def test_product_float_fallback(self):
        a = Amplitude(1, Fraction(1, 2))
        b = Amplitude(1, Fraction(1, 1))
        got = a.product(b)
        assert isinstance(got, float)
        assert got == pytest.approx(math.sqrt(0.5))

    def test_as_float(self):
        assert Amplitude(-1, Fraction(1, 4)).as_float == -0.5


class TestToFock:
    def test_cube(self):
        s = slater_project(vandermonde_power(2, 3))
        v = to_fock(s)
        assert {c: a.magnitude_sq for c, a in v.items()} == {
            (0, 3): Fraction(1, 4),
            (1, 2): Fraction(3, 4),
        }
        assert v.dim == 4

    def test_degree_five_product(self):
        # (z1 - z2)^3 (z1^2 + z2^2): determinant coefficients 1, -3, 4 on
        # orbitals {0,5}, {1,4}, {2,3}
        s = SlaterExpansion(2, {(5, 0): 1, (4, 1): -3, (3, 2): 4})
        v = to_fock(s)
        assert {c: a.magnitude_sq for c, a in v.items()} == {
            (0, 5): Fraction(5, 22),
            (1, 4): Fraction(9, 22),
            (2, 3): Fraction(4, 11),
        }

    def test_single_determinant(self):
        v = to_fock(slater_project(vandermonde_power(2, 1)))
        assert {c: a.magnitude_sq for c, a in v.items()} == {(0, 1): Fraction(1)}

    def test_zero_raises(self):
        with pytest.raises(ZeroStateError):
            to_fock(SlaterExpansion(2))

    @given(slater_expansions())
    @settings(max_examples=50, deadline=None)
    def test_exact_normalization_and_dim(self, expansion):
        v = to_fock(expansion)
        assert sum(a.magnitude_sq for _, a in v.items()) == 1
        max_orbital = max(c[-1] for c in v.terms)
        assert v.dim == max_orbital + 1

    @pytest.mark.parametrize("m", [1, 3, 5, 7, 9, 11, 13])
    def test_binomial_closure(self, m):
        v = to_fock(slater_project(vandermonde_power(2, m)))
        expected = {
            (k, m - k): Fraction(math.comb(m, k), 2 ** (m - 1))
            for k in range((m - 1) // 2 + 1)
        }
        assert {c: a.magnitude_sq for c, a in v.items()} == expected

    @pytest.mark.parametrize("nvars,power", [(2, 3), (3, 3), (2, 5), (4, 3)])
    def test_homogeneity_carries_over(self, nvars, power):
        v = to_fock(slater_project(vandermonde_power(nvars, power)))
        degree = power * nvars * (nvars - 1) // 2
        assert v.is_homogeneous()
        assert {sum(c) for c in v.terms} == {degree}


class TestFockVectorValidation:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            FockVector(2, 4, {(0, 1): Amplitude(1, Fraction(1, 2))})

    def test_rejects_bad_configs(self):
        amp = Amplitude(1, Fraction(1))
        with pytest.raises(ValueError):
            FockVector(2, 4, {(1, 0): amp})
        with pytest.raises(ValueError):
            FockVector(2, 4, {(0, 4): amp})
        with pytest.raises(ValueError):
            FockVector(2, 4, {(0, 1, 2): amp})

    def test_from_rational_amplitudes(self):
        v = FockVector.from_rational_amplitudes(
            2, 4, {(0, 1): Fraction(3), (2, 3): Fraction(-4)}
        )
        assert v.terms[(0, 1)].magnitude_sq == Fraction(9, 25)
        assert v.terms[(2, 3)].sign == -1
        with pytest.raises(ZeroStateError):
            FockVector.from_rational_amplitudes(2, 4, {(0, 1): Fraction(0)})

    def test_occupations_sum_to_n(self):
        v = laughlin(2, 5)
        occ = v.occupations()
        assert sum(occ.values()) == 2
        assert occ[0] == Fraction(1, 16)
        assert occ[2] == Fraction(10, 16)


class TestAmplitudePattern:
    def test_laughlin_2_5(self):
        assert amplitude_pattern(laughlin(2, 5)) == [
            ((0, 5), 1),
            ((1, 4), 5),
            ((2, 3), 10),
        ]

    def test_single_config(self):
        assert amplitude_pattern(laughlin(2, 1)) == [((0, 1), 1)]

    def test_ratios_have_no_common_factor(self):
        ratios = [r for _, r in amplitude_pattern(laughlin(3, 3))]
        assert math.gcd(*ratios) == 1


class TestSlaterCoefficientMagnitudes:
    def test_laughlin_3_3(self):
        s = slater_project(vandermonde_power(3, 3))
        assert slater_coefficient_magnitudes(s) == [
            ((0, 3, 6), 1),
            ((0, 4, 5), 3),
            ((1, 2, 6), 3),
            ((1, 3, 5), 6),
            ((2, 3, 4), 15),
        ]


def test_equality_of_normalized_states_from_scaled_inputs():
    # global integer scaling of the polynomial does not change the state
    base = slater_project(vandermonde_power(2, 3))
    scaled = SlaterExpansion(2, {lam: 7 * c for lam, c in base.terms.items()})
    assert to_fock(base) == to_fock(scaled)


def test_sign_convention_reversal_parity():
    # single positive determinant: overall sign is the parity of reversing
    # the decreasing tuple, (-1)^(N(N-1)/2)
    pair = to_fock(SlaterExpansion(2, {(1, 0): 1}))
    assert pair.terms[(0, 1)].sign == -1
    triple = to_fock(SlaterExpansion(3, {(2, 1, 0): 1}))
    assert triple.terms[(0, 1, 2)].sign == -1
    quad = to_fock(SlaterExpansion(4, {(3, 2, 1, 0): 1}))
    assert quad.terms[(0, 1, 2, 3)].sign == 1


def test_multipoly_round_trip_through_fock_ratios():
    # the degree-five product state built two ways gives identical vectors
    z1 = MultiPoly.variable(2, 0)
    z2 = MultiPoly.variable(2, 1)
    poly = (z1 - z2) ** 3 * (z1**2 + z2**2)
    assert to_fock(slater_project(poly)) == to_fock(
        SlaterExpansion(2, {(5, 0): 1, (4, 1): -3, (3, 2): 4})
    )
