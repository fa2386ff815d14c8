"""Shared hypothesis strategies for the test suite."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from fqhent import FockVector, MultiPoly, SlaterExpansion


@st.composite
def multi_polys(
    draw,
    nvars: int | None = None,
    max_nvars: int = 3,
    max_exp: int = 4,
    max_terms: int = 5,
):
    if nvars is None:
        nvars = draw(st.integers(1, max_nvars))
    keys = draw(
        st.lists(
            st.tuples(*[st.integers(0, max_exp)] * nvars),
            min_size=0,
            max_size=max_terms,
            unique=True,
        )
    )
    coeffs = draw(
        st.lists(
            st.integers(-9, 9).filter(bool),
            min_size=len(keys),
            max_size=len(keys),
        )
    )
    return MultiPoly(nvars, dict(zip(keys, coeffs)))


@st.composite
def slater_expansions(draw, max_nvars: int = 3, max_orbital: int = 7):
    nvars = draw(st.integers(2, max_nvars))
    lams = draw(
        st.lists(
            st.lists(
                st.integers(0, max_orbital),
                min_size=nvars,
                max_size=nvars,
                unique=True,
            ).map(lambda xs: tuple(sorted(xs, reverse=True))),
            min_size=1,
            max_size=4,
            unique=True,
        )
    )
    coeffs = draw(
        st.lists(
            st.integers(-9, 9).filter(bool),
            min_size=len(lams),
            max_size=len(lams),
        )
    )
    return SlaterExpansion(nvars, dict(zip(lams, coeffs)))


@st.composite
def dim4_two_fermion_states(draw):
    """Random two-fermion states over four orbitals with rational amplitudes."""
    configs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    picked = draw(
        st.lists(st.sampled_from(configs), min_size=1, max_size=6, unique=True)
    )
    numerators = draw(
        st.lists(
            st.integers(-9, 9).filter(bool),
            min_size=len(picked),
            max_size=len(picked),
        )
    )
    amps = {c: Fraction(v) for c, v in zip(picked, numerators)}
    return FockVector.from_rational_amplitudes(2, 4, amps)
