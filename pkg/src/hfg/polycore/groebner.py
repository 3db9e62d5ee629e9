"""Buchberger's algorithm with Gebauer-Moeller pair handling.

The public entry points work on Polynomial (Fraction coefficients); the
engine itself runs on content-free integer polynomials with positive leading
coefficient, which keeps the inner loop in machine-int / bigint arithmetic.
Pairs are selected by lowest lcm degree, ties broken by the monomial order
key of the lcm and then by pair index, so runs are deterministic.  The
returned basis is the reduced monic basis, sorted by leading monomial, and
is therefore a canonical form of the ideal for the given order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from ..errors import BlockMismatchError
from .orders import GREVLEX, Exponents, MonomialOrder
from .poly import (
    Polynomial,
    VariableBlock,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

IntPoly = dict[Exponents, int]


class _Row:
    __slots__ = ("terms", "lm", "lc", "key")

    def __init__(self, terms: IntPoly, keyf: Callable[[Exponents], tuple]):
        self.terms = terms
        self.lm = max(terms, key=keyf)
        self.lc = terms[self.lm]
        self.key = keyf(self.lm)


def _memoized(keyf: Callable[[Exponents], tuple]) -> Callable[[Exponents], tuple]:
    cache: dict[Exponents, tuple] = {}

    def key(m: Exponents) -> tuple:
        v = cache.get(m)
        if v is None:
            v = cache[m] = keyf(m)
        return v

    return key


def _content(p: IntPoly) -> int:
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(p: IntPoly, keyf) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    if not p:
        return p
    g = _content(p)
    if p[max(p, key=keyf)] < 0:
        g = -g
    if g != 1:
        p = {e: c // g for e, c in p.items()}
    return p


def _to_int_poly(p: Polynomial, keyf) -> IntPoly:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in p.terms.items()}
    return _primitive(ints, keyf)


def _reduce_int(f: IntPoly, rows: Sequence[_Row], keyf) -> IntPoly:
    """Full normal form, fraction-free; remainder is primitive."""
    rem: IntPoly = {}
    work = dict(f)
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        reducer = None
        for row in rows:
            if monomial_divides(row.lm, m):
                reducer = row
                break
        if reducer is None:
            rem[m] = c
            continue
        d = gcd(c, reducer.lc)
        a = reducer.lc // d
        b = c // d
        if a != 1:
            for k in work:
                work[k] *= a
            for k in rem:
                rem[k] *= a
        q = tuple(x - y for x, y in zip(m, reducer.lm))
        glm = reducer.lm
        for gm, gc in reducer.terms.items():
            if gm == glm:
                continue
            mm = monomial_mul(gm, q)
            nv = work.get(mm, 0) - b * gc
            if nv:
                work[mm] = nv
            else:
                work.pop(mm, None)
    return _primitive(rem, keyf)


def _spoly(r1: _Row, r2: _Row) -> IntPoly:
    L = monomial_lcm(r1.lm, r2.lm)
    u = tuple(x - y for x, y in zip(L, r1.lm))
    v = tuple(x - y for x, y in zip(L, r2.lm))
    d = gcd(r1.lc, r2.lc)
    a = r2.lc // d
    b = r1.lc // d
    res: IntPoly = {}
    for m, c in r1.terms.items():
        res[monomial_mul(m, u)] = c * a
    for m, c in r2.terms.items():
        k = monomial_mul(m, v)
        nv = res.get(k, 0) - c * b
        if nv:
            res[k] = nv
        else:
            res.pop(k, None)
    return res


# a pair is (i, j, lcm, degree, key-of-lcm)
_Pair = tuple[int, int, Exponents, int, tuple]


def _update(
    G: list[_Row], P: list[_Pair], row: _Row, keyf
) -> list[_Pair]:
    """Gebauer-Moeller update of the pair set when appending `row` to G."""
    t = len(G)
    lmf = row.lm
    kept: list[_Pair] = []
    for pair in P:
        i, j, L, _, _ = pair
        # chain criterion: the new element makes this pair redundant unless
        # one of its own pairs has the same lcm
        if (
            monomial_divides(lmf, L)
            and monomial_lcm(G[i].lm, lmf) != L
            and monomial_lcm(G[j].lm, lmf) != L
        ):
            continue
        kept.append(pair)
    candidates = [(i, monomial_lcm(G[i].lm, lmf)) for i in range(t)]
    minimal: list[tuple[int, Exponents]] = []
    for i, L in candidates:
        dominated = False
        for _, L2 in candidates:
            if L2 != L and monomial_divides(L2, L):
                dominated = True
                break
        if not dominated:
            minimal.append((i, L))
    groups: dict[Exponents, list[int]] = {}
    for i, L in minimal:
        groups.setdefault(L, []).append(i)
    for L in sorted(groups):
        idxs = groups[L]
        # product criterion: coprime leading monomials reduce to zero
        if any(monomial_mul(G[i].lm, lmf) == L for i in idxs):
            continue
        kept.append((min(idxs), t, L, sum(L), keyf(L)))
    G.append(row)
    return kept


def _interreduce(G: list[_Row], keyf) -> list[_Row]:
    rows = sorted(G, key=lambda r: r.key)
    minimal: list[_Row] = []
    for r in rows:
        if not any(monomial_divides(m.lm, r.lm) for m in minimal):
            minimal.append(r)
    final: list[_Row] = []
    for idx, r in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        red = _reduce_int(dict(r.terms), others, keyf)
        final.append(_Row(red, keyf))
    final.sort(key=lambda r: r.key)
    return final


def _buchberger(polys: list[IntPoly], keyf) -> list[_Row]:
    G: list[_Row] = []
    P: list[_Pair] = []
    for f in polys:
        r = _reduce_int(f, G, keyf)
        if r:
            P = _update(G, P, _Row(r, keyf), keyf)
    while P:
        best = min(P, key=lambda p: (p[3], p[4], p[0], p[1]))
        P.remove(best)
        i, j, _, _, _ = best
        s = _spoly(G[i], G[j])
        r = _reduce_int(s, G, keyf)
        if r:
            P = _update(G, P, _Row(r, keyf), keyf)
    return _interreduce(G, keyf)


def _common_block(polys: Sequence[Polynomial]) -> VariableBlock:
    block = polys[0].block
    for p in polys[1:]:
        if p.block != block:
            raise BlockMismatchError("generators live on different blocks")
    return block


def groebner_basis(
    gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX
) -> tuple[Polynomial, ...]:
    """Reduced monic Groebner basis, sorted by leading monomial."""
    nonzero = [g for g in gens if not g.is_zero]
    if not nonzero:
        return ()
    block = _common_block(nonzero)
    keyf = _memoized(order.key())
    rows = _buchberger([_to_int_poly(g, keyf) for g in nonzero], keyf)
    out = []
    for row in rows:
        lc = row.lc
        out.append(
            Polynomial(block, {e: Fraction(c, lc) for e, c in row.terms.items()})
        )
    return tuple(out)


def normal_form(
    f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX
) -> Polynomial:
    """Remainder of f under division by `basis` (unique if basis is a GB)."""
    if f.is_zero:
        return f
    nonzero = [g for g in basis if not g.is_zero]
    if nonzero:
        _common_block([f] + nonzero)
    keyf = _memoized(order.key())
    prepared = []
    for g in nonzero:
        lm = max(g.terms, key=keyf)
        prepared.append((g.terms, lm, g.terms[lm]))
    work = dict(f.terms)
    rem: dict[Exponents, Fraction] = {}
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        hit = None
        for terms, lm, lc in prepared:
            if monomial_divides(lm, m):
                hit = (terms, lm, lc)
                break
        if hit is None:
            rem[m] = c
            continue
        terms, lm, lc = hit
        factor = c / lc
        q = tuple(x - y for x, y in zip(m, lm))
        for gm, gc in terms.items():
            if gm == lm:
                continue
            mm = monomial_mul(gm, q)
            nv = work.get(mm, Fraction(0)) - factor * gc
            if nv:
                work[mm] = nv
            else:
                work.pop(mm, None)
    return Polynomial(f.block, rem)
