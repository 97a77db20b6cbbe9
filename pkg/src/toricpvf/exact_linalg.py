"""
Exact rational linear algebra and exterior algebra over Q^n.

Scalars are ``fractions.Fraction`` (or plain ``int``); nothing in this module
ever touches floating point. Multivectors are stored sparsely, keyed by
strictly increasing tuples of 0-based coordinate indices.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, gcd
from typing import Dict, Iterable, List, Sequence, Tuple

MAX_DIM = 16


class LinalgError(ValueError):
    pass


def _check_dim(n: int) -> None:
    if n > MAX_DIM:
        raise LinalgError(f"ambient dimension {n} exceeds hard cap {MAX_DIM}")


def primitive(v: Sequence[int]) -> Tuple[int, ...]:
    g = 0
    for c in v:
        g = gcd(g, int(c))
    if g == 0:
        raise LinalgError("zero ray")
    return tuple(int(c) // g for c in v)


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for c in v:
        g = gcd(g, int(c))
    return g == 1


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    """Scale each row by the lcm of its denominators so all entries are ints."""
    out = []
    for row in rows:
        den = 1
        for a in row:
            d = Fraction(a).denominator
            den = den * d // gcd(den, d)
        out.append([int(Fraction(a) * den) for a in row])
    return out


def _row_lengths(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise LinalgError("rows of mismatched length")
    return n


def echelon(rows: Sequence[Sequence]) -> List[List[int]]:
    """Fraction-free row echelon form; returns only the nonzero rows.

    Rows are kept content-free (gcd 1) to stop coefficient growth.
    """
    ncols = _row_lengths(rows)
    m = _integer_rows(rows)
    pivot_row = 0
    for col in range(ncols):
        piv = None
        for r in range(pivot_row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        p = m[pivot_row]
        for r in range(pivot_row + 1, len(m)):
            a = m[r][col]
            if a == 0:
                continue
            row = [p[col] * x - a * y for x, y in zip(m[r], p)]
            g = 0
            for x in row:
                g = gcd(g, x)
            m[r] = [x // g for x in row] if g > 1 else row
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [r for r in m[:pivot_row] if any(r)]


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows))


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant of a square integer matrix."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise LinalgError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [[int(x) for x in r] for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse over Q."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise LinalgError("inverse of a non-square matrix")
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise LinalgError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [r[n:] for r in a]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[list]:
    return [[sum(x * y for x, y in zip(row, colv)) for colv in zip(*b)]
            for row in a]


def transpose(a: Sequence[Sequence]) -> List[list]:
    return [list(c) for c in zip(*a)]


def extend_to_basis(independent: Sequence[Sequence[int]],
                    n: int = None) -> List[Tuple[int, ...]]:
    """Complete an independent family to a basis of Q^n with standard vectors.

    Standard basis vectors are tried in index order and kept whenever they
    raise the rank, so the completion is deterministic.
    """
    if n is None:
        if not independent:
            raise LinalgError("ambient dimension required for empty input")
        n = len(independent[0])
    rows = [list(v) for v in independent]
    if any(len(r) != n for r in rows):
        raise LinalgError("dimension mismatch")
    r = rank(rows)
    if r != len(rows):
        raise LinalgError("input vectors are linearly dependent")
    out = []
    for j in range(n):
        if r == n:
            break
        e = tuple(int(i == j) for i in range(n))
        if rank(rows + [list(e)]) > r:
            rows.append(list(e))
            out.append(e)
            r += 1
    return out


def greedy_independent(vectors: Sequence[Sequence]) -> List[int]:
    """Indices of the first maximal independent subfamily (smallest first)."""
    chosen: List[int] = []
    rows: List[list] = []
    for idx, v in enumerate(vectors):
        if rank(rows + [list(v)]) > len(rows):
            rows.append(list(v))
            chosen.append(idx)
    return chosen


def subsets(n: int, k: int) -> List[Tuple[int, ...]]:
    """All k-subsets of range(n) in lexicographic order."""
    return list(combinations(range(n), k))


def _merge_sign(s: Tuple[int, ...], j: int) -> Tuple[int, Tuple[int, ...]]:
    """Sign and sorted key of e_s ^ e_j; sign 0 if j already in s."""
    if j in s:
        return 0, s
    pos = sum(1 for a in s if a > j)
    key = tuple(sorted(s + (j,)))
    return (-1) ** pos, key


@dataclass(frozen=True)
class Multivector:
    """Element of the k-th exterior power of Q^n.

    ``coeffs`` maps increasing 0-based index tuples to nonzero scalars. The
    grade-0 element is stored under the empty tuple.
    """

    n: int
    grade: int
    coeffs: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.grade <= self.n:
            raise LinalgError(f"grade {self.grade} out of range for n={self.n}")
        clean = {}
        for key, c in self.coeffs.items():
            key = tuple(key)
            if len(key) != self.grade or list(key) != sorted(set(key)):
                raise LinalgError(f"bad basis key {key}")
            if key and not 0 <= key[-1] < self.n:
                raise LinalgError(f"bad basis key {key}")
            if c != 0:
                clean[key] = Fraction(c)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def scalar(cls, n: int, c=1) -> "Multivector":
        return cls(n, 0, {(): c})

    @classmethod
    def basis(cls, n: int, key: Iterable[int]) -> "Multivector":
        key = tuple(key)
        return cls(n, len(key), {key: 1})

    @classmethod
    def from_vector(cls, v: Sequence) -> "Multivector":
        return cls(len(v), 1, {(j,): c for j, c in enumerate(v)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Multivector") -> "Multivector":
        if (self.n, self.grade) != (other.n, other.grade):
            raise LinalgError("cannot add multivectors of different shape")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return Multivector(self.n, self.grade, out)

    def scale(self, c) -> "Multivector":
        return Multivector(self.n, self.grade,
                           {k: v * c for k, v in self.coeffs.items()})

    def wedge(self, v: Sequence) -> "Multivector":
        return wedge(self, v)

    def vector(self) -> List[Fraction]:
        """Dense coordinates in the lexicographic basis of the grade."""
        return [self.coeffs.get(s, Fraction(0))
                for s in subsets(self.n, self.grade)]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def to_json(self) -> Dict[str, object]:
        """1-based comma-joined subset labels; integers stay integers."""
        out = {}
        for key, c in self.coeffs.items():
            label = ",".join(str(i + 1) for i in key)
            out[label] = int(c) if c.denominator == 1 else str(c)
        return out

    @classmethod
    def from_json(cls, n: int, grade: int, data: Dict[str, object]) -> "Multivector":
        coeffs = {}
        for label, c in data.items():
            key = tuple(int(s) - 1 for s in label.split(",")) if label else ()
            coeffs[key] = Fraction(c)
        return cls(n, grade, coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for key, c in self.coeffs.items():
            basis = "^".join(f"e{i + 1}" for i in key) or "1"
            terms.append(f"{c}*{basis}")
        return " + ".join(terms)


def wedge(x: Multivector, v: Sequence) -> Multivector:
    if len(v) != x.n:
        raise LinalgError("dimension mismatch")
    if x.grade >= x.n:
        raise LinalgError("grade overflow: cannot wedge a top-degree element")
    out: Dict[Tuple[int, ...], Fraction] = {}
    for s, c in x.coeffs.items():
        for j, a in enumerate(v):
            if a == 0:
                continue
            sgn, key = _merge_sign(s, j)
            if sgn:
                out[key] = out.get(key, 0) + sgn * c * a
    return Multivector(x.n, x.grade + 1, out)


def wedge_all(n: int, vectors: Sequence[Sequence]) -> Multivector:
    x = Multivector.scalar(n)
    for v in vectors:
        x = wedge(x, v)
    return x


def wedge_matrix(n: int, k: int, v: Sequence) -> List[List]:
    """Matrix of x -> x ^ v from grade k to grade k+1 (rows: (k+1)-subsets)."""
    rows_idx = {s: i for i, s in enumerate(subsets(n, k + 1))}
    cols = subsets(n, k)
    m = [[0] * len(cols) for _ in rows_idx]
    for c, s in enumerate(cols):
        for j, a in enumerate(v):
            if a == 0:
                continue
            sgn, key = _merge_sign(s, j)
            if sgn:
                m[rows_idx[key]][c] += sgn * a
    return m


def kernel_dim_of_wedge_maps(k: int, vectors: Sequence[Sequence], n: int = None) -> int:
    """dim of {x in grade k : x ^ v = 0 for all v}."""
    if n is None:
        if not vectors:
            raise LinalgError("ambient dimension required for empty input")
        n = len(vectors[0])
    _check_dim(n)
    if any(len(v) != n for v in vectors):
        raise LinalgError("dimension mismatch")
    if not 0 <= k <= n:
        raise LinalgError(f"grade {k} out of range")
    total = comb(n, k)
    if k == n or not vectors:
        return total
    stacked: List[list] = []
    for v in vectors:
        stacked.extend(wedge_matrix(n, k, v))
    return total - rank(stacked)


def minor(matrix: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]):
    """Exact minor; entries may be Fractions."""
    sub = [[Fraction(matrix[r][c]) for c in cols] for r in rows]
    if not sub:
        return Fraction(1)
    dens = 1
    for row in sub:
        for a in row:
            dens = dens * a.denominator // gcd(dens, a.denominator)
    scaled = [[int(a * dens) for a in row] for row in sub]
    return Fraction(det(scaled), dens ** len(sub))
