"""
The polytope {I : <I, e_t> >= -1 for every ray e_t} and its lattice points.

Boundedness is certified by exact linear programming: for every coordinate
the maximum and minimum over the polytope are solved with a rational simplex
method using Bland's rule, so there is no cycling and no rounding.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor
from typing import List, Sequence, Tuple

from .exact_linalg import dot
from .fan import Fan


class UnboundedError(ValueError):
    pass


@dataclass(frozen=True)
class HalfspaceSystem:
    """Rows <x, normal> >= rhs; rhs is -1 throughout for a fan polytope."""

    dim: int
    normals: Tuple[Tuple[int, ...], ...]
    rhs: int = -1

    def contains(self, point: Sequence[int]) -> bool:
        return all(dot(point, a) >= self.rhs for a in self.normals)

    def restrict(self, indices: Sequence[int]) -> "HalfspaceSystem":
        return HalfspaceSystem(self.dim, tuple(self.normals[i] for i in indices), self.rhs)


@dataclass(frozen=True)
class BoundingBox:
    lo: Tuple[int, ...]
    hi: Tuple[int, ...]

    def inflate(self, margin: int) -> "BoundingBox":
        return BoundingBox(tuple(a - margin for a in self.lo),
                           tuple(b + margin for b in self.hi))

    def points(self):
        """Every integer point of the box in lexicographic order."""
        return product(*[range(a, b + 1) for a, b in zip(self.lo, self.hi)])

    def size(self) -> int:
        out = 1
        for a, b in zip(self.lo, self.hi):
            out *= b - a + 1
        return out


@dataclass(frozen=True)
class LatticePointSet:
    points: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self._members


def simplex_max(c: Sequence, a: Sequence[Sequence], b: Sequence):
    """Maximize c.y subject to a y <= b, y >= 0, with b >= 0.

    The slack basis is feasible from the start, so no first phase is needed.
    Returns (optimum, y). Raises UnboundedError.
    """
    m, nv = len(a), len(c)
    if any(Fraction(x) < 0 for x in b):
        raise ValueError("simplex_max needs a nonnegative right-hand side")
    width = nv + m
    tab = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(bi)]
           for i, (row, bi) in enumerate(zip(a, b))]
    cost = [Fraction(x) for x in c] + [Fraction(0)] * m
    basis = list(range(nv, nv + m))
    while True:
        # reduced costs c_j - c_B B^-1 A_j
        red = [cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(m))
               for j in range(width)]
        enter = next((j for j in range(width) if red[j] > 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise UnboundedError("linear program is unbounded")
        r = best[1]
        piv = tab[r][enter]
        tab[r] = [x / piv for x in tab[r]]
        for i in range(m):
            if i != r and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
        basis[r] = enter
    y = [Fraction(0)] * width
    for i, j in enumerate(basis):
        y[j] = tab[i][-1]
    return sum(cost[j] * y[j] for j in range(nv)), y[:nv]


def optimize_coordinate(hs: HalfspaceSystem, j: int, sense: int) -> Fraction:
    """max (sense=+1) or min (sense=-1) of x_j over the polytope.

    Free variables are split as x = p - q; the rows <x, a> >= -1 become
    -a.p + a.q <= 1, feasible at the origin.
    """
    n = hs.dim
    a = [[-x for x in row] + list(row) for row in hs.normals]
    b = [-hs.rhs] * len(hs.normals)
    c = [0] * (2 * n)
    c[j] = sense
    c[n + j] = -sense
    value, _ = simplex_max(c, a, b)
    return sense * value


def build_halfspaces(fan: Fan) -> HalfspaceSystem:
    return HalfspaceSystem(fan.dim, tuple(fan.rays), -1)


def bounding_box(hs: HalfspaceSystem) -> BoundingBox:
    lo, hi = [], []
    for j in range(hs.dim):
        try:
            upper = optimize_coordinate(hs, j, +1)
            lower = optimize_coordinate(hs, j, -1)
        except UnboundedError:
            raise UnboundedError("polytope unbounded: fan not complete") from None
        # outward rounding keeps the whole real polytope inside the box
        lo.append(floor(lower))
        hi.append(ceil(upper))
    return BoundingBox(tuple(lo), tuple(hi))


def enumerate_lattice_points(hs: HalfspaceSystem, box: BoundingBox) -> LatticePointSet:
    pts = [p for p in box.points() if hs.contains(p)]
    return LatticePointSet(tuple(sorted(pts)))


def lattice_points(fan: Fan) -> LatticePointSet:
    hs = build_halfspaces(fan)
    return enumerate_lattice_points(hs, bounding_box(hs))


def cone_lattice_points(fan: Fan, c: int, box: BoundingBox) -> List[Tuple[int, ...]]:
    """Points of the box satisfying only the inequalities of one maximal cone."""
    hs = build_halfspaces(fan).restrict(fan.max_cones[c])
    return [p for p in box.points() if hs.contains(p)]
