"""Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero Fractions, tagged with
the VariableBlock it lives on.  Zero is the empty map.  Operations between
polynomials require identical blocks; mixing blocks raises
BlockMismatchError instead of guessing an embedding.

The text format is a signed sum of terms `c*x0^a*x1^b` with rational
coefficients written `num/den`; `^1` and a unit coefficient may be omitted.
The JSON term format is `[["num/den", [e0, e1, ...]], ...]`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from ..errors import BlockMismatchError, ParseError
from .orders import GREVLEX, Exponents, MonomialOrder

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class VariableBlock:
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if not self.names:
            raise ValueError("a block needs at least one variable")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    def extended(self, extra: Sequence[str]) -> "VariableBlock":
        """New block with this block as the leading segment."""
        return VariableBlock(self.names + tuple(extra))


PLANE = VariableBlock(("x0", "x1", "x2"))


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents | None:
    """Exponents of a/b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_divides(b: Exponents, a: Exponents) -> bool:
    return all(x >= y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Exponents) -> int:
    return sum(a)


class Polynomial:
    __slots__ = ("block", "terms")

    def __init__(self, block: VariableBlock, terms: Mapping[Exponents, Scalar]):
        clean: dict[Exponents, Fraction] = {}
        arity = block.arity
        for exps, coeff in terms.items():
            if len(exps) != arity:
                raise ValueError(
                    f"exponent tuple {exps} does not match block arity {arity}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(coeff)
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "block", block)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, block: VariableBlock) -> "Polynomial":
        return cls(block, {})

    @classmethod
    def constant(cls, block: VariableBlock, c: Scalar) -> "Polynomial":
        return cls(block, {(0,) * block.arity: c})

    @classmethod
    def variable(cls, block: VariableBlock, i: int) -> "Polynomial":
        exps = [0] * block.arity
        exps[i] = 1
        return cls(block, {tuple(exps): 1})

    @classmethod
    def monomial(
        cls, block: VariableBlock, exps: Sequence[int], coeff: Scalar = 1
    ) -> "Polynomial":
        return cls(block, {tuple(exps): coeff})

    @classmethod
    def linear_form(cls, block: VariableBlock, coeffs: Sequence[Scalar]) -> "Polynomial":
        if len(coeffs) != block.arity:
            raise ValueError("coefficient count must match block arity")
        terms: dict[Exponents, Scalar] = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * block.arity
                exps[i] = 1
                terms[tuple(exps)] = c
        return cls(block, terms)

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key())

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self / lc

    # -- arithmetic --------------------------------------------------------

    def _check_block(self, other: "Polynomial") -> None:
        if self.block != other.block:
            raise BlockMismatchError(
                f"blocks differ: {self.block.names} vs {other.block.names}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_block(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            v = terms.get(exps, 0) + c
            if v:
                terms[exps] = v
            else:
                terms.pop(exps, None)
        return Polynomial(self.block, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.block, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.block)
            return Polynomial(
                self.block, {e: c * other for e, c in self.terms.items()}
            )
        self._check_block(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return Polynomial(self.block, terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Polynomial":
        return Polynomial(
            self.block, {e: c / Fraction(scalar) for e, c in self.terms.items()}
        )

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.block, 1)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.block == other.block and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.block, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- substitution ------------------------------------------------------

    def evaluate(self, coords: Sequence[Scalar]) -> Fraction:
        if len(coords) != self.block.arity:
            raise ValueError("coordinate count must match block arity")
        values = [Fraction(c) for c in coords]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(values, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def scale_variables(self, factors: Sequence[Scalar]) -> "Polynomial":
        """Substitute x_i -> factors[i] * x_i."""
        if len(factors) != self.block.arity:
            raise ValueError("factor count must match block arity")
        fs = [Fraction(f) for f in factors]
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            v = coeff
            for f, e in zip(fs, exps):
                if e:
                    v *= f**e
            if v:
                terms[exps] = v
        return Polynomial(self.block, terms)

    def embed(self, target: VariableBlock, offset: int) -> "Polynomial":
        """Positional embedding: variable i becomes target variable offset+i."""
        arity = self.block.arity
        if offset < 0 or offset + arity > target.arity:
            raise ValueError("embedding does not fit in target block")
        pre = (0,) * offset
        post = (0,) * (target.arity - offset - arity)
        return Polynomial(
            target, {pre + e + post: c for e, c in self.terms.items()}
        )

    def restrict_front(self, target: VariableBlock) -> "Polynomial":
        """Inverse of embed at offset 0; trailing exponents must vanish."""
        k = target.arity
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            if any(exps[k:]):
                raise ValueError("polynomial involves variables beyond the front block")
            terms[exps[:k]] = coeff
        return Polynomial(target, terms)

    # -- text and JSON -----------------------------------------------------

    _FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")
    _RATIONAL_RE = re.compile(r"^\d+(?:/\d+)?$")

    @classmethod
    def from_string(cls, block: VariableBlock, text: str) -> "Polynomial":
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial text")
        if s == "0":
            return cls.zero(block)
        s = s.replace("-", "+-")
        parts = [p for p in s.split("+") if p]
        if not parts:
            raise ParseError(f"cannot parse polynomial {text!r}")
        terms: dict[Exponents, Fraction] = {}
        for part in parts:
            sign = 1
            if part.startswith("-"):
                sign = -1
                part = part[1:]
            if not part:
                raise ParseError(f"dangling sign in {text!r}")
            coeff = Fraction(sign)
            exps = [0] * block.arity
            for factor in part.split("*"):
                if not factor:
                    raise ParseError(f"empty factor in {text!r}")
                if cls._RATIONAL_RE.match(factor):
                    coeff *= Fraction(factor)
                    continue
                m = cls._FACTOR_RE.match(factor)
                if not m:
                    raise ParseError(f"cannot parse factor {factor!r} in {text!r}")
                i = block.index(m.group(1))
                exps[i] += int(m.group(2) or 1)
            key = tuple(exps)
            v = terms.get(key, Fraction(0)) + coeff
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        return cls(block, terms)

    def _sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        key = GREVLEX.key()
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self._sorted_terms():
            factors = []
            for name, e in zip(self.block.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def to_json_terms(self) -> list:
        out = []
        for exps, coeff in self._sorted_terms():
            out.append([format_rational(coeff), list(exps)])
        return out

    @classmethod
    def from_json_terms(cls, block: VariableBlock, data) -> "Polynomial":
        if isinstance(data, str):
            return cls.from_string(block, data)
        if not isinstance(data, list):
            raise ParseError(f"polynomial JSON must be a string or list, got {data!r}")
        terms: dict[Exponents, Fraction] = {}
        for item in data:
            try:
                coeff_text, exps = item
                coeff = Fraction(coeff_text)
                key = tuple(int(e) for e in exps)
            except (TypeError, ValueError) as exc:
                raise ParseError(f"bad polynomial term {item!r}") from exc
            if len(key) != block.arity:
                raise ParseError(f"term {item!r} does not match block arity")
            v = terms.get(key, Fraction(0)) + coeff
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        return cls(block, terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r})"


def variables(block: VariableBlock) -> tuple[Polynomial, ...]:
    """Generator polynomials x_0, ..., x_{n-1} of the block."""
    return tuple(Polynomial.variable(block, i) for i in range(block.arity))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def monomials_of_degree(block: VariableBlock, degree: int) -> Iterator[Exponents]:
    """All exponent tuples of the given total degree, deterministic order."""

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> Iterator[Exponents]:
        if slots == 1:
            yield prefix + (remaining,)
            return
        for e in range(remaining, -1, -1):
            yield from rec(prefix + (e,), remaining - e, slots - 1)

    if degree < 0:
        return iter(())
    return rec((), degree, block.arity)
