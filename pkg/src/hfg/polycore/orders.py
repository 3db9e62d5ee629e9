"""Monomial orders as sort keys on exponent tuples.

An order is used exclusively through its key function: monomial a precedes
monomial b exactly when key(a) < key(b) as Python tuples.  Three kinds are
supported:

* graded reverse lexicographic (the default everywhere),
* lexicographic,
* block elimination: the variables are split into a front segment of size
  `front` (the retained block) and a tail segment (the variables to
  eliminate); the tail is compared first, each segment by grevlex.  Any
  monomial involving a tail variable then dominates every monomial in the
  front segment alone, which is the elimination property.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

Exponents = tuple[int, ...]
OrderKey = Callable[[Exponents], tuple]


def _grevlex_key(exps: Exponents) -> tuple:
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _lex_key(exps: Exponents) -> tuple:
    return exps


@dataclass(frozen=True)
class MonomialOrder:
    kind: str  # "grevlex" | "lex" | "elim"
    front: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.kind == "elim" and self.front <= 0:
            raise ValueError("elimination order needs a positive front block")

    def key(self) -> OrderKey:
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "lex":
            return _lex_key
        front = self.front

        def elim_key(exps: Exponents) -> tuple:
            return (_grevlex_key(exps[front:]), _grevlex_key(exps[:front]))

        return elim_key


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(front: int) -> MonomialOrder:
    """Order that eliminates every variable past the first `front` ones."""
    return MonomialOrder("elim", front)
