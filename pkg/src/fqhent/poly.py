"""Exact sparse polynomials in the electron coordinates z_1 .. z_N.

A polynomial is stored as a map from exponent tuples to arbitrary-precision
integer coefficients: in two variables, {(3, 0): 1, (2, 1): -3} stands for
z1^3 - 3*z1^2*z2.  All arithmetic is exact, zero coefficients are never
stored, and the canonical term order is lexicographically descending in the
exponent tuple, which makes iteration and printing deterministic.

Antisymmetric polynomials admit a second exact representation: a sum of
monomial determinants det(z_i^{lam_j}) over strictly decreasing exponent
tuples lam_1 > lam_2 > ... > lam_N >= 0.  :func:`slater_project` converts to
that basis and :meth:`SlaterExpansion.expand` converts back, both losslessly.
"""

from __future__ import annotations

import itertools
import math
import operator
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

Exponents = tuple[int, ...]
TermsLike = Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]]


class NotAntisymmetricError(ValueError):
    """A Slater projection was requested for a non-antisymmetric polynomial."""


def _perm_sign(perm: Sequence[int]) -> int:
    """Parity of a permutation given as a sequence of distinct integers."""
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


class MultiPoly:
    """Immutable sparse multivariate polynomial with integer coefficients."""

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: TermsLike = ()) -> None:
        nvars = operator.index(nvars)
        if nvars < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[Exponents, int] = {}
        for exponents, coeff in items:
            key = tuple(operator.index(e) for e in exponents)
            if len(key) != nvars:
                raise ValueError(f"exponent tuple {key} does not have {nvars} entries")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            coeff = operator.index(coeff)
            if coeff:
                store[key] = store.get(key, 0) + coeff
                if not store[key]:
                    del store[key]
        object.__setattr__(self, "_nvars", nvars)
        object.__setattr__(self, "_terms", store)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, value: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        """The polynomial z_{index+1} (0-based index)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    # -- basic queries -----------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponents, int]:
        """Read-only view of the term map."""
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Exponents, int]]:
        """Terms in canonical order: lexicographically descending exponents."""
        for key in sorted(self._terms, reverse=True):
            yield key, self._terms[key]

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def degrees(self) -> set[int]:
        """Set of total degrees present (empty for the zero polynomial)."""
        return {sum(key) for key in self._terms}

    def total_degree(self) -> int:
        """Largest total degree; 0 for the zero polynomial."""
        return max((sum(key) for key in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def max_single_degree(self) -> int:
        """Largest exponent of any single variable; 0 for the zero polynomial."""
        return max((max(key) for key in self._terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self._nvars, {k: -c for k, c in self._terms.items()})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            out[key] = out.get(key, 0) + coeff
        return MultiPoly(self._nvars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(self._nvars, {k: c * other for k, c in self._terms.items()})
        self._check_compatible(other)
        out: dict[Exponents, int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                out[key] = out.get(key, 0) + ca * cb
        return MultiPoly(self._nvars, out)

    def __rmul__(self, other: int) -> "MultiPoly":
        return self * other

    def __pow__(self, power: int) -> "MultiPoly":
        if power < 0:
            raise ValueError("negative power")
        out = MultiPoly.one(self._nvars)
        for _ in range(power):
            out = out * self
        return out

    def _check_compatible(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if self._nvars != other._nvars:
            raise ValueError(f"variable count mismatch: {self._nvars} vs {other._nvars}")

    # -- variable permutations and symmetry --------------------------------

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Relabel variables: the result's exponent of z_i is the source's of z_{perm[i]}."""
        if sorted(perm) != list(range(self._nvars)):
            raise ValueError(f"{perm} is not a permutation of 0..{self._nvars - 1}")
        return MultiPoly(
            self._nvars,
            {tuple(key[p] for p in perm): coeff for key, coeff in self._terms.items()},
        )

    def swap(self, i: int, j: int) -> "MultiPoly":
        perm = list(range(self._nvars))
        perm[i], perm[j] = perm[j], perm[i]
        return self.permute(perm)

    def is_antisymmetric(self) -> bool:
        """True iff swapping any pair of variables negates the polynomial exactly."""
        for i in range(self._nvars):
            for j in range(i + 1, self._nvars):
                if self.swap(i, j) != -self:
                    return False
        return True

    def is_symmetric(self) -> bool:
        for i in range(self._nvars):
            for j in range(i + 1, self._nvars):
                if self.swap(i, j) != self:
                    return False
        return True

    # -- evaluation and printing -------------------------------------------

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        if len(values) != self._nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for key, coeff in self._terms.items():
            term = Fraction(coeff)
            for exp, val in zip(key, values):
                if exp:
                    term *= Fraction(val) ** exp
            total += term
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for key, coeff in self.items():
            factors = [
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}"
                for i, e in enumerate(key)
                if e
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {dict(self.items())!r})"


class SlaterExpansion:
    """An antisymmetric polynomial in the monomial-determinant basis.

    Terms map a strictly decreasing exponent tuple lam to the integer
    coefficient of det(z_i^{lam_j}).  The overall sign is kept exactly as
    computed; no canonicalization is applied.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: TermsLike = ()) -> None:
        nvars = operator.index(nvars)
        if nvars < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[Exponents, int] = {}
        for exponents, coeff in items:
            key = tuple(operator.index(e) for e in exponents)
            if len(key) != nvars:
                raise ValueError(f"tuple {key} does not have {nvars} entries")
            if any(key[i] <= key[i + 1] for i in range(len(key) - 1)) or key[-1] < 0:
                raise ValueError(f"{key} is not strictly decreasing and non-negative")
            coeff = operator.index(coeff)
            if coeff:
                store[key] = coeff
        object.__setattr__(self, "_nvars", nvars)
        object.__setattr__(self, "_terms", store)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SlaterExpansion is immutable")

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Exponents, int]]:
        for key in sorted(self._terms, reverse=True):
            yield key, self._terms[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SlaterExpansion):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def expand(self) -> MultiPoly:
        """Reconstruct the source polynomial as sum_lam c_lam det(z_i^{lam_j})."""
        n = self._nvars
        out: dict[Exponents, int] = {}
        for lam, coeff in self._terms.items():
            for perm in itertools.permutations(range(n)):
                key = tuple(lam[p] for p in perm)
                out[key] = out.get(key, 0) + coeff * _perm_sign(perm)
        return MultiPoly(n, out)

    def __repr__(self) -> str:
        return f"SlaterExpansion({self._nvars}, {dict(self.items())!r})"


def vandermonde_power(nvars: int, power: int) -> MultiPoly:
    """Expand prod_{j<k} (z_j - z_k)^power exactly.

    Each pair factor is expanded by the binomial theorem before multiplying,
    so the cost is one sparse product per variable pair.  The result is
    homogeneous of degree power * nvars * (nvars - 1) / 2 and, for odd power,
    antisymmetric.  With a single variable the product is empty and the
    result is the constant 1.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if power < 1:
        raise ValueError("power must be positive")
    result = MultiPoly.one(nvars)
    for j in range(nvars):
        for k in range(j + 1, nvars):
            result = result * _pair_power(nvars, j, k, power)
    return result


def _pair_power(nvars: int, j: int, k: int, power: int) -> MultiPoly:
    # (z_j - z_k)^power via the binomial theorem
    terms: dict[Exponents, int] = {}
    for i in range(power + 1):
        exps = [0] * nvars
        exps[j] = power - i
        exps[k] = i
        terms[tuple(exps)] = (-1) ** i * math.comb(power, i)
    return MultiPoly(nvars, terms)


def elementary_symmetric(nvars: int, k: int) -> MultiPoly:
    """e_k(z_1 .. z_n): the sum of all squarefree monomials of degree k."""
    if not 0 <= k <= nvars:
        raise ValueError(f"k={k} out of range 0..{nvars}")
    terms: dict[Exponents, int] = {}
    for combo in itertools.combinations(range(nvars), k):
        exps = [0] * nvars
        for i in combo:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return MultiPoly(nvars, terms)


def slater_project(poly: MultiPoly) -> SlaterExpansion:
    """Project an antisymmetric polynomial onto monomial determinants.

    The coefficient of det(z_i^{lam_j}) is read off as the coefficient in
    `poly` of the monomial whose exponents are already strictly decreasing;
    the other terms of `poly` are signed permutations of those monomials and
    carry no further information.

    Raises NotAntisymmetricError when `poly` fails the pair-swap test.
    """
    if not poly.is_antisymmetric():
        raise NotAntisymmetricError("polynomial is not antisymmetric under variable swaps")
    decreasing = {
        key: coeff
        for key, coeff in poly.terms.items()
        if all(key[i] > key[i + 1] for i in range(len(key) - 1))
    }
    return SlaterExpansion(poly.nvars, decreasing)
