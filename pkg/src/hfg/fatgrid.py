"""Hadamard fat grids built from two weighted collinear point sets.

A grid is the fat-point scheme supported on the pairwise Hadamard products
``P_i * Q_j`` of two collinear point sets with multiplicity vectors M and N,
where the point ``P_i * Q_j`` carries multiplicity ``m_i + n_j - 1``.  The
support is a complete intersection of ``r`` horizontal and ``s`` vertical
lines; construction validates that structure exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .budget import Budget, DEFAULT_BUDGET
from .errors import DomainError, GridError, ParseError
from .polycore import (
    PLANE,
    IdealPresentation,
    Polynomial,
    ideal_intersection,
    ideal_power,
)
from .projective import (
    Line,
    Point,
    delta_index,
    hadamard_line_point,
    hadamard_point,
    is_collinear,
    line_through,
    point_ideal,
)


@dataclass(frozen=True)
class WeightedPointSet:
    """Pairwise-distinct collinear points, each with a positive multiplicity.

    Multiplicities are kept sorted non-decreasingly; ``make`` permutes the
    points in tandem so the pairing is preserved.
    """

    points: tuple[Point, ...]
    multiplicities: tuple[int, ...]

    @classmethod
    def make(cls, points, multiplicities) -> WeightedPointSet:
        pts = tuple(points)
        mults = tuple(int(m) for m in multiplicities)
        if not pts:
            raise GridError("a weighted point set needs at least one point")
        if len(pts) != len(mults):
            raise GridError(
                "got %d points but %d multiplicities" % (len(pts), len(mults))
            )
        if any(m < 1 for m in mults):
            raise GridError("multiplicities must be positive integers")
        if len(set(pts)) != len(pts):
            raise GridError("points must be pairwise distinct")
        for p in pts:
            if delta_index(p) < 2:
                raise GridError(
                    "point %s has a zero coordinate" % p.to_string()
                )
        if not is_collinear(list(pts)):
            raise GridError("points must be collinear")
        order = sorted(range(len(pts)), key=lambda i: (mults[i], i))
        return cls(
            tuple(pts[i] for i in order), tuple(mults[i] for i in order)
        )

    @property
    def size(self) -> int:
        return len(self.points)


# Support line of a singleton set {P}: the image under P of a fixed axis line.
# Both templates contain [1:1:1], so the image line always passes through P.
_ROW_TEMPLATE = Line((Fraction(1), Fraction(-1), Fraction(0)))  # x0 - x1
_COL_TEMPLATE = Line((Fraction(1), Fraction(0), Fraction(-1)))  # x0 - x2


def _support_candidates(ws: WeightedPointSet) -> list[Line]:
    if ws.size >= 2:
        return [line_through(ws.points[0], ws.points[1])]
    point = ws.points[0]
    candidates = [
        hadamard_line_point(_ROW_TEMPLATE, point),
        hadamard_line_point(_COL_TEMPLATE, point),
    ]
    return [l for i, l in enumerate(candidates) if l not in candidates[:i]]


@dataclass(frozen=True)
class FatGrid:
    """An r-by-s grid of fat points with its horizontal and vertical lines.

    ``grid_points[i][j]`` is ``P_{i+1} * Q_{j+1}`` and carries multiplicity
    ``mult[i][j] = m_{i+1} + n_{j+1} - 1``.  Lines are indexed so that
    ``h_lines[i]`` is the image of the column support line under the row
    point of largest remaining multiplicity: ``h_lines[i]`` contains grid row
    ``r - 1 - i`` and ``v_lines[j]`` contains grid column ``s - 1 - j``.
    """

    row_set: WeightedPointSet
    col_set: WeightedPointSet
    row_line: Line
    col_line: Line
    grid_points: tuple[tuple[Point, ...], ...]
    mult: tuple[tuple[int, ...], ...]
    h_lines: tuple[Line, ...]
    v_lines: tuple[Line, ...]
    swapped: bool = field(default=False, compare=False)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.row_set.size, self.col_set.size)

    @property
    def row_multiplicities(self) -> tuple[int, ...]:
        return self.row_set.multiplicities

    @property
    def col_multiplicities(self) -> tuple[int, ...]:
        return self.col_set.multiplicities

    @property
    def total_multiplicity(self) -> int:
        return sum(sum(row) for row in self.mult)

    def scheme_degree(self) -> int:
        """Sum of C(m_ij + 1, 2) over all grid points."""
        return sum(m * (m + 1) // 2 for row in self.mult for m in row)


def build_grid(row_set: WeightedPointSet, col_set: WeightedPointSet) -> FatGrid:
    """Assemble and validate the grid of a pair of weighted point sets.

    The larger set always plays the column role; when the inputs arrive the
    other way around they are exchanged and the ``swapped`` flag records it.
    A singleton set does not determine its support line, so both template
    transports are tried and the first non-degenerate assembly wins.
    """
    swapped = False
    if row_set.size > col_set.size:
        row_set, col_set = col_set, row_set
        swapped = True

    last_error: GridError | None = None
    for row_line in _support_candidates(row_set):
        for col_line in _support_candidates(col_set):
            try:
                return _assemble(row_set, col_set, row_line, col_line, swapped)
            except GridError as exc:
                last_error = exc
    assert last_error is not None
    raise last_error


def _assemble(
    row_set: WeightedPointSet,
    col_set: WeightedPointSet,
    row_line: Line,
    col_line: Line,
    swapped: bool,
) -> FatGrid:
    r, s = row_set.size, col_set.size
    for p in row_set.points:
        if not row_line.contains(p):
            raise GridError("row support line misses %s" % p.to_string())
    for q in col_set.points:
        if not col_line.contains(q):
            raise GridError("column support line misses %s" % q.to_string())

    seen: dict[Point, tuple[int, int]] = {}
    rows: list[tuple[Point, ...]] = []
    for i, p in enumerate(row_set.points):
        row: list[Point] = []
        for j, q in enumerate(col_set.points):
            g = hadamard_point(p, q)
            if g is None:
                raise GridError(
                    "Hadamard product of %s and %s is undefined"
                    % (p.to_string(), q.to_string())
                )
            if g in seen:
                raise GridError(
                    "duplicate grid point %s at (%d,%d) and (%d,%d)"
                    % (g.to_string(), *seen[g], i, j)
                )
            seen[g] = (i, j)
            row.append(g)
        rows.append(tuple(row))
    grid_points = tuple(rows)

    mult = tuple(
        tuple(mi + nj - 1 for nj in col_set.multiplicities)
        for mi in row_set.multiplicities
    )

    h_lines = tuple(
        hadamard_line_point(col_line, row_set.points[r - 1 - i])
        for i in range(r)
    )
    v_lines = tuple(
        hadamard_line_point(row_line, col_set.points[s - 1 - j])
        for j in range(s)
    )

    for hline in h_lines:
        if hline in v_lines:
            raise GridError(
                "grid is degenerate: %s is both a horizontal and a vertical line"
                % hline
            )

    for i in range(r):
        for j in range(s):
            g = grid_points[i][j]
            for i0, hline in enumerate(h_lines):
                if hline.contains(g) != (i0 == r - 1 - i):
                    raise GridError(
                        "grid is degenerate: point %s and horizontal line %d"
                        % (g.to_string(), i0)
                    )
            for j0, vline in enumerate(v_lines):
                if vline.contains(g) != (j0 == s - 1 - j):
                    raise GridError(
                        "grid is degenerate: point %s and vertical line %d"
                        % (g.to_string(), j0)
                    )

    return FatGrid(
        row_set=row_set,
        col_set=col_set,
        row_line=row_line,
        col_line=col_line,
        grid_points=grid_points,
        mult=mult,
        h_lines=h_lines,
        v_lines=v_lines,
        swapped=swapped,
    )


def abstract_grid(row_multiplicities, col_multiplicities) -> FatGrid:
    """Grid on default collinear point sets, determined by (M, N) alone.

    Rows use ``P_i = [1:1:i+1]`` on ``x0 - x1 = 0`` and columns use
    ``Q_j = [1:j+1:1]`` on ``x0 - x2 = 0``; all products are pairwise
    distinct, so the construction never degenerates.
    """
    M = tuple(int(m) for m in row_multiplicities)
    N = tuple(int(n) for n in col_multiplicities)
    row_points = [
        Point((Fraction(1), Fraction(1), Fraction(i + 2)))
        for i in range(len(M))
    ]
    col_points = [
        Point((Fraction(1), Fraction(j + 2), Fraction(1)))
        for j in range(len(N))
    ]
    return build_grid(
        WeightedPointSet.make(row_points, M),
        WeightedPointSet.make(col_points, N),
    )


def symbolic_grid(g: FatGrid, t: int) -> FatGrid:
    """Grid of the t-th symbolic power: M' = t*m - (t-1), N' = t*n.

    Every multiplicity-matrix entry scales by exactly t.
    """
    t = int(t)
    if t < 1:
        raise DomainError("symbolic power index must be a positive integer")
    new_m = [t * m - (t - 1) for m in g.row_set.multiplicities]
    new_n = [t * n for n in g.col_set.multiplicities]
    return build_grid(
        WeightedPointSet.make(g.row_set.points, new_m),
        WeightedPointSet.make(g.col_set.points, new_n),
    )


def grid_ideal_intersection(
    g: FatGrid, budget: Budget = DEFAULT_BUDGET
) -> IdealPresentation:
    """Oracle ideal of the grid: intersect the point-ideal powers directly."""
    budget.check_grid(g.total_multiplicity)
    r, s = g.shape
    factors = [
        ideal_power(point_ideal(g.grid_points[i][j]), g.mult[i][j])
        for i in range(r)
        for j in range(s)
    ]
    return reduce(ideal_intersection, factors)


@dataclass(frozen=True)
class GeneratorPattern:
    """Exponent pattern of one minimal generator: a product of grid lines.

    The generator is ``prod H_i^{h_exponents[i-1]} * prod V_j^{v_exponents[j-1]}``
    with exponents ``(a_i - k)_+`` and ``(b_j + k)_+`` already clipped at zero.
    """

    k: int
    h_exponents: tuple[int, ...]
    v_exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.h_exponents) + sum(self.v_exponents)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "h_exponents": list(self.h_exponents),
            "v_exponents": list(self.v_exponents),
            "degree": self.degree,
        }


def expand_pattern(g: FatGrid, pattern: GeneratorPattern) -> Polynomial:
    """Multiply out a pattern's powers of the grid's line forms."""
    r, s = g.shape
    if len(pattern.h_exponents) != r or len(pattern.v_exponents) != s:
        raise GridError("pattern shape does not match the grid")
    if any(e < 0 for e in pattern.h_exponents + pattern.v_exponents):
        raise GridError("pattern exponents must be non-negative")
    f = Polynomial.constant(PLANE, Fraction(1))
    for e, hline in zip(pattern.h_exponents, g.h_lines):
        if e:
            f = f * hline.form() ** e
    for e, vline in zip(pattern.v_exponents, g.v_lines):
        if e:
            f = f * vline.form() ** e
    return f


def grid_to_json(g: FatGrid) -> dict:
    return {
        "P": [p.to_json() for p in g.row_set.points],
        "M": list(g.row_set.multiplicities),
        "Q": [q.to_json() for q in g.col_set.points],
        "N": list(g.col_set.multiplicities),
    }


def grid_from_json(data) -> FatGrid:
    """Build a grid from a JSON object (or its text).

    Two shapes are accepted: ``{"P", "M", "Q", "N"}`` with explicit point
    coordinates, and the abstract form ``{"M", "N"}`` which uses the default
    point sets.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid grid JSON: %s" % exc) from exc
    if not isinstance(data, dict):
        raise ParseError("grid JSON must be an object")
    if "M" not in data or "N" not in data:
        raise ParseError("grid JSON needs multiplicity lists 'M' and 'N'")
    try:
        M = [int(m) for m in data["M"]]
        N = [int(n) for n in data["N"]]
    except (TypeError, ValueError) as exc:
        raise ParseError("multiplicity lists must hold integers") from exc
    has_p, has_q = "P" in data, "Q" in data
    if has_p != has_q:
        raise ParseError("grid JSON needs both 'P' and 'Q' or neither")
    if not has_p:
        return abstract_grid(M, N)
    try:
        row_points = [Point.from_json(p) for p in data["P"]]
        col_points = [Point.from_json(q) for q in data["Q"]]
    except (TypeError, KeyError) as exc:
        raise ParseError("invalid point coordinates in grid JSON") from exc
    return build_grid(
        WeightedPointSet.make(row_points, M),
        WeightedPointSet.make(col_points, N),
    )
