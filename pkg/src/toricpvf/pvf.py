"""
Holomorphic k-vector fields on a smooth complete toric variety.

A weight I in S_k contributes the fields chi^I * rho(x) where x runs over
wedge(basis of the tight rays) ^ (k - i further vectors). Weights are reported
as I; the torus acts on that summand through the character -I.
"""

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

from .classify import PointClass, Stratification, s_k, stratify
from .exact_linalg import Multivector, subsets, wedge, wedge_all
from .fan import Fan, require_valid
from .polytope import lattice_points


@dataclass
class WeightSpaceBasis:
    weight: Tuple[int, ...]
    grade: int
    rank: int
    generators: List[Multivector]

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def character(self) -> Tuple[int, ...]:
        return tuple(-a for a in self.weight)

    def to_json(self) -> Dict[str, object]:
        return {"I": list(self.weight), "rank": self.rank, "dim": self.dim,
                "generators": [g.to_json() for g in self.generators]}


@dataclass
class DimensionTable:
    dim: int
    entries: Dict[int, int]
    # k -> [(i, count, binomial, product)]
    breakdown: Dict[int, List[Tuple[int, int, int, int]]] = field(default_factory=dict)

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    def as_list(self) -> List[int]:
        return [self.entries[k] for k in sorted(self.entries)]

    def to_json(self) -> Dict[str, object]:
        return {
            "dim_table": {str(k): v for k, v in sorted(self.entries.items())},
            "breakdown": {
                str(k): [{"i": i, "count": c, "binomial": b, "product": p}
                         for i, c, b, p in rows]
                for k, rows in sorted(self.breakdown.items())
            },
        }


def normal_wedge(fan: Fan, pc: PointClass) -> Multivector:
    """Wedge of the chosen tight rays, coefficient +1; scalar 1 when none."""
    return wedge_all(fan.dim, [fan.rays[t] for t in pc.basis_idx])


def weight_space(fan: Fan, pc: PointClass, k: int) -> WeightSpaceBasis:
    n, i = fan.dim, pc.rank
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    if i > k:
        return WeightSpaceBasis(pc.point, k, i, [])
    if i == 0:
        gens = [Multivector.basis(n, s) for s in subsets(n, k)]
        return WeightSpaceBasis(pc.point, k, i, gens)
    base = normal_wedge(fan, pc)
    gens = []
    for s in subsets(len(pc.complement), k - i):
        x = base
        for j in s:
            x = wedge(x, pc.complement[j])
        gens.append(x)
    return WeightSpaceBasis(pc.point, k, i, gens)


def dims_by_face_formula(strat: Stratification, k: int) -> Tuple[int, List[Tuple[int, int, int, int]]]:
    """Sum over strata i <= k of C(n-i, k-i) * |S(i)|, with the per-stratum terms.

    The stratum count is taken face by face from the tight-set groups, so the
    sum literally runs over faces of each codimension.
    """
    n = strat.dim
    rows = []
    for i in range(k + 1):
        count = sum(len(pts) for pts in strat.faces_of_rank(i).values())
        b = comb(n - i, k - i)
        rows.append((i, count, b, b * count))
    return sum(r[3] for r in rows), rows


def stratification(fan: Fan) -> Stratification:
    require_valid(fan)
    return stratify(fan, lattice_points(fan))


def dimension_table(fan: Fan, strat: Stratification = None) -> DimensionTable:
    if strat is None:
        strat = stratification(fan)
    entries, breakdown = {}, {}
    for k in range(fan.dim + 1):
        entries[k], breakdown[k] = dims_by_face_formula(strat, k)
    return DimensionTable(fan.dim, entries, breakdown)


def decomposition(fan: Fan, k: int, strat: Stratification = None) -> List[WeightSpaceBasis]:
    if strat is None:
        strat = stratification(fan)
    return [weight_space(fan, pc, k) for pc in s_k(strat, k)]


def decomposition_to_json(fan: Fan, k: int, spaces: List[WeightSpaceBasis]) -> Dict[str, object]:
    return {
        "k": k,
        "convention": "field chi^I * rho(x); the torus acts on it by the character -I",
        "total": sum(w.dim for w in spaces),
        "weights": [w.to_json() for w in spaces],
    }
