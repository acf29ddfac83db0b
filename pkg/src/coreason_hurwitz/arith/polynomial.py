# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""Exact multivariate polynomials and quasi-polynomials with rational coefficients."""

import itertools
import math
import threading
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from typing import Any, Union

from coreason_hurwitz.exceptions import DomainError

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


def format_rational(value: Scalar) -> str:
    """Serializes an exact rational as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parses the "p/q" or "p" form produced by format_rational."""
    text = text.strip()
    if not text or any(ch in text for ch in ".eE "):
        raise DomainError(f"Not an exact rational string: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"Not an exact rational string: {text!r}") from e


def grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    return (sum(exp), exp)


class MultiPolynomial:
    """
    Polynomial in a fixed number of variables x_0..x_{n-1} with Fraction coefficients.
    Zero coefficients are never stored; instances are treated as immutable.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None) -> None:
        if nvars < 0:
            raise DomainError(f"Variable count must be non-negative, got {nvars}")
        self.nvars = nvars
        self._hash: int | None = None
        clean: dict[Exponent, Fraction] = {}
        for exp, coef in (terms or {}).items():
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise DomainError(f"Exponent {exp} does not fit {nvars} variables")
            if coef:
                clean[tuple(exp)] = Fraction(coef)
        self._terms = clean

    # Construction

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "MultiPolynomial":
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly._hash = None
        poly._terms = {e: c for e, c in terms.items() if c}
        return poly

    @classmethod
    def zero(cls, nvars: int) -> "MultiPolynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, value: Scalar, nvars: int) -> "MultiPolynomial":
        return cls._raw(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPolynomial":
        if not 0 <= index < nvars:
            raise DomainError(f"Variable index {index} outside 0..{nvars - 1}")
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(nvars, {exp: Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: Scalar = 1) -> "MultiPolynomial":
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def univariate(cls, coefficients: Sequence[Scalar]) -> "MultiPolynomial":
        """Builds c_0 + c_1 x + c_2 x^2 + ... in one variable."""
        return cls(1, {(k,): c for k, c in enumerate(coefficients)})

    # Inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=-1)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise DomainError("The zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def variables_used(self) -> set[int]:
        return {i for exp in self._terms for i, e in enumerate(exp) if e}

    # Arithmetic

    def _coerce(self, other: Any) -> "MultiPolynomial | None":
        if isinstance(other, MultiPolynomial):
            if other.nvars != self.nvars:
                raise DomainError(f"Variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPolynomial.constant(other, self.nvars)
        return None

    def __add__(self, other: Any) -> "MultiPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, coef in rhs._terms.items():
            out[exp] = out.get(exp, 0) + coef
        return MultiPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Any) -> "MultiPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "MultiPolynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "MultiPolynomial":
        if isinstance(other, (int, Fraction)):
            return MultiPolynomial._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2, strict=True))
                out[exp] = out.get(exp, 0) + c1 * c2
        return MultiPolynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MultiPolynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, power: int) -> "MultiPolynomial":
        if power < 0:
            raise DomainError("Negative powers are not polynomials")
        result = MultiPolynomial.constant(1, self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPolynomial.constant(other, self.nvars)
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return f"MultiPolynomial({self.nvars}, 0)"
        parts = [f"{format_rational(c)}*x^{list(e)}" for e, c in self.sorted_terms()]
        return f"MultiPolynomial({self.nvars}, {' + '.join(parts)})"

    # Evaluation and substitution

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise DomainError(f"Point {tuple(point)} does not fit {self.nvars} variables")
        total = Fraction(0)
        for exp, coef in self._terms.items():
            term = coef
            for value, e in zip(point, exp, strict=True):
                if e:
                    term *= value**e
            total += term
        return total

    __call__ = evaluate

    def compose(self, subs: Sequence["MultiPolynomial"]) -> "MultiPolynomial":
        """Substitutes subs[i] for x_i; all substitutes share one variable count."""
        if len(subs) != self.nvars:
            raise DomainError(f"Need {self.nvars} substitutes, got {len(subs)}")
        if not subs:
            return self
        target = subs[0].nvars
        if any(s.nvars != target for s in subs):
            raise DomainError("Substitutes must share a variable count")
        powers: list[list[MultiPolynomial]] = [[MultiPolynomial.constant(1, target)] for _ in subs]
        result = MultiPolynomial.zero(target)
        for exp, coef in self._terms.items():
            term = MultiPolynomial.constant(coef, target)
            for i, e in enumerate(exp):
                if e:
                    cache = powers[i]
                    while len(cache) <= e:
                        cache.append(cache[-1] * subs[i])
                    term = term * cache[e]
            result = result + term
        return result

    def split_by_variable(self, index: int) -> dict[int, "MultiPolynomial"]:
        """Maps k to the coefficient polynomial of x_index^k (with x_index removed from it)."""
        groups: dict[int, dict[Exponent, Fraction]] = {}
        for exp, coef in self._terms.items():
            k = exp[index]
            rest = exp[:index] + (0,) + exp[index + 1 :]
            groups.setdefault(k, {})[rest] = coef
        return {k: MultiPolynomial._raw(self.nvars, terms) for k, terms in groups.items()}

    def divmod(self, divisor: "MultiPolynomial") -> tuple["MultiPolynomial", "MultiPolynomial"]:
        """Multivariate division by one polynomial in graded-lex order; returns (quotient, remainder)."""
        if divisor.nvars != self.nvars:
            raise DomainError(f"Variable count mismatch: {self.nvars} vs {divisor.nvars}")
        lead_exp, lead_coef = divisor.leading_term()
        quotient: dict[Exponent, Fraction] = {}
        remainder: dict[Exponent, Fraction] = {}
        work = MultiPolynomial._raw(self.nvars, dict(self._terms))
        while not work.is_zero():
            exp, coef = work.leading_term()
            if all(a >= b for a, b in zip(exp, lead_exp, strict=True)):
                shift = tuple(a - b for a, b in zip(exp, lead_exp, strict=True))
                factor = coef / lead_coef
                quotient[shift] = quotient.get(shift, 0) + factor
                work = work - divisor * MultiPolynomial._raw(self.nvars, {shift: factor})
            else:
                remainder[exp] = coef
                work = work - MultiPolynomial._raw(self.nvars, {exp: coef})
        return MultiPolynomial._raw(self.nvars, quotient), MultiPolynomial._raw(self.nvars, remainder)

    def is_symmetric(self) -> bool:
        return all(
            self.coefficient(perm) == coef for exp, coef in self._terms.items() for perm in itertools.permutations(exp)
        )


class QuasiPolynomial:
    """A function that is polynomial on each residue class of its arguments modulo `modulus`."""

    def __init__(self, modulus: int, nvars: int, branches: Mapping[Exponent, MultiPolynomial] | None = None) -> None:
        if modulus < 1:
            raise DomainError(f"Modulus must be positive, got {modulus}")
        self.modulus = modulus
        self.nvars = nvars
        self.branches: dict[Exponent, MultiPolynomial] = {}
        for residue, poly in (branches or {}).items():
            if len(residue) != nvars or any(not 0 <= r < modulus for r in residue):
                raise DomainError(f"Residue class {residue} invalid for modulus {modulus}")
            if poly.nvars != nvars:
                raise DomainError("Branch polynomial has the wrong variable count")
            if not poly.is_zero():
                self.branches[tuple(residue)] = poly

    def branch(self, residue: Sequence[int]) -> MultiPolynomial:
        return self.branches.get(tuple(residue), MultiPolynomial.zero(self.nvars))

    def evaluate(self, point: Sequence[int]) -> Fraction:
        residue = tuple(p % self.modulus for p in point)
        return self.branch(residue).evaluate(point)

    __call__ = evaluate

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return (self.modulus, self.nvars, self.branches) == (other.modulus, other.nvars, other.branches)

    def __hash__(self) -> int:
        return hash((self.modulus, self.nvars, frozenset(self.branches.items())))


# Symmetric building blocks


def monomial_symmetric(partition: Sequence[int], nvars: int) -> MultiPolynomial:
    """The monomial symmetric polynomial m_partition in nvars variables."""
    parts = [p for p in partition if p > 0]
    if len(parts) > nvars:
        return MultiPolynomial.zero(nvars)
    base = tuple(sorted(parts, reverse=True)) + (0,) * (nvars - len(parts))
    return MultiPolynomial(nvars, {perm: 1 for perm in set(itertools.permutations(base))})


def product_of_variables(nvars: int) -> MultiPolynomial:
    return MultiPolynomial.monomial((1,) * nvars)


def linear_form(coefficients: Sequence[Scalar], constant: Scalar = 0) -> MultiPolynomial:
    """constant + sum_i coefficients[i] * x_i."""
    nvars = len(coefficients)
    poly = MultiPolynomial.constant(constant, nvars)
    for i, c in enumerate(coefficients):
        poly = poly + MultiPolynomial.variable(i, nvars) * c
    return poly


# Discrete summation

_POWER_SUMS: list[MultiPolynomial] = []
_POWER_SUMS_LOCK = threading.Lock()


def power_sum_polynomial(k: int) -> MultiPolynomial:
    """S_k(x) = sum_{v=1}^{x} v^k as a univariate polynomial."""
    if k < 0:
        raise DomainError(f"Power-sum exponent {k} is negative")
    if k < len(_POWER_SUMS):
        return _POWER_SUMS[k]
    with _POWER_SUMS_LOCK:
        x_plus_one = MultiPolynomial.univariate([1, 1])
        while len(_POWER_SUMS) <= k:
            j = len(_POWER_SUMS)
            # (x+1)^{j+1} - 1 = sum_{i=0}^{j} C(j+1, i) S_i(x)
            acc = x_plus_one ** (j + 1) - 1
            for i in range(j):
                acc = acc - _POWER_SUMS[i] * math.comb(j + 1, i)
            _POWER_SUMS.append(acc / (j + 1))
    return _POWER_SUMS[k]


def definite_sum(poly: MultiPolynomial, index: int, upper: MultiPolynomial) -> MultiPolynomial:
    """
    Sum of poly over x_index = 1..upper, as a polynomial.
    `upper` may involve any variable; the result agrees with the true sum wherever upper >= 0.
    """
    if upper.nvars != poly.nvars:
        raise DomainError("Upper limit must share the summand's variable count")
    result = MultiPolynomial.zero(poly.nvars)
    for k, coef in poly.split_by_variable(index).items():
        result = result + coef * power_sum_polynomial(k).compose([upper])
    return result


def discrete_antiderivative(poly: MultiPolynomial) -> MultiPolynomial:
    """P(x) = sum_{a=1}^{x} p(a), so that P(0) = 0 and P(x) - P(x-1) = p(x)."""
    if poly.nvars != 1:
        raise DomainError(f"discrete_antiderivative needs a univariate polynomial, got {poly.nvars} variables")
    return definite_sum(poly, 0, MultiPolynomial.variable(0, 1))


def shift(poly: MultiPolynomial, index: int, amount: Scalar) -> MultiPolynomial:
    """poly with x_index replaced by x_index + amount."""
    subs = [MultiPolynomial.variable(i, poly.nvars) for i in range(poly.nvars)]
    subs[index] = subs[index] + amount
    return poly.compose(subs)


# Serialization


def polynomial_to_json(poly: MultiPolynomial) -> list[dict[str, Any]]:
    return [{"exp": list(exp), "coef": format_rational(coef)} for exp, coef in poly.sorted_terms()]


def polynomial_from_json(data: Iterable[Mapping[str, Any]], nvars: int) -> MultiPolynomial:
    terms: dict[Exponent, Fraction] = {}
    for record in data:
        exp = tuple(int(e) for e in record["exp"])
        terms[exp] = terms.get(exp, Fraction(0)) + parse_rational(str(record["coef"]))
    return MultiPolynomial(nvars, terms)


def quasipolynomial_to_json(quasi: QuasiPolynomial) -> dict[str, Any]:
    return {
        "modulus": quasi.modulus,
        "nvars": quasi.nvars,
        "branches": [
            {"residue": list(residue), "terms": polynomial_to_json(quasi.branches[residue])}
            for residue in sorted(quasi.branches)
        ],
    }
