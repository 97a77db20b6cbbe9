"""
Independent checks of the weight-space dimensions.

Three routes, none of which looks at the face structure of the polytope:

* kernel: dim of {x : x ^ e = 0 for every globally tight ray e};
* charts: per maximal cone, read I in the dual basis, reject if some
  coordinate is below -1 or too many equal -1, then stack the per-chart wedge
  constraints into one system;
* Laurent: per maximal cone, expand x in the basis of wedges of the cone's
  rays and require every monomial coefficient of chi^I * rho(x) to have
  nonnegative exponents. This is the holomorphicity condition itself.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .classify import PointClass, stratify
from .exact_linalg import (LinalgError, Multivector, dot, inverse,
                           kernel_dim_of_wedge_maps, minor, rank, subsets,
                           wedge_matrix)
from .fan import Fan, require_valid
from .polytope import bounding_box, build_halfspaces, enumerate_lattice_points
from .pvf import weight_space


@dataclass(frozen=True)
class ChartData:
    cone_index: int
    cone: Tuple[int, ...]
    rays: Tuple[Tuple[int, ...], ...]
    dual_basis: Tuple[Tuple[int, ...], ...]

    def coords(self, point: Sequence[int]) -> Tuple[int, ...]:
        """Exponents m_t = <I, e_t> so that chi^I = prod z_t^m_t."""
        return tuple(dot(point, r) for r in self.rays)

    def in_s_k(self, point: Sequence[int], k: int) -> bool:
        m = self.coords(point)
        return min(m) >= -1 and sum(1 for a in m if a == -1) <= k


def chart_data(fan: Fan, cone_index: int) -> ChartData:
    cone = fan.max_cones[cone_index]
    rays = tuple(fan.rays[i] for i in cone)
    try:
        # columns are rays, so rows of the inverse pair to the identity
        inv = inverse([list(col) for col in zip(*rays)])
    except LinalgError:
        raise LinalgError(f"cone {cone_index} has a singular ray matrix") from None
    dual = []
    for row in inv:
        if any(a.denominator != 1 for a in row):
            raise LinalgError(f"cone {cone_index} is not unimodular")
        dual.append(tuple(int(a) for a in row))
    return ChartData(cone_index, cone, rays, tuple(dual))


def charts(fan: Fan) -> List[ChartData]:
    return [chart_data(fan, c) for c in range(len(fan.max_cones))]


def chart_expansion(x: Multivector, chart: ChartData) -> Dict[Tuple[int, ...], Fraction]:
    """Coefficients c_S with x = sum_S c_S * wedge(chart rays in S).

    c_S is the pairing of x with the wedge of dual vectors in S, i.e. a sum of
    k x k minors of the dual-basis matrix.
    """
    out = {}
    for s in subsets(len(chart.rays), x.grade):
        c = sum((coef * minor(chart.dual_basis, s, t) for t, coef in x.coeffs.items()),
                Fraction(0))
        if c != 0:
            out[s] = c
    return out


def laurent_exponents(point: Sequence[int], x: Multivector,
                      chart: ChartData) -> Dict[Tuple[int, ...], Tuple[Tuple[int, ...], Fraction]]:
    """For each nonzero d/dz_S term: (exponent vector m + 1_S, coefficient)."""
    m = chart.coords(point)
    table = {}
    for s, c in chart_expansion(x, chart).items():
        exps = tuple(a + (1 if t in s else 0) for t, a in enumerate(m))
        table[s] = (exps, c)
    return table


def is_holomorphic_on_chart(point: Sequence[int], x: Multivector, chart: ChartData) -> bool:
    return all(min(e) >= 0 for e, _ in laurent_exponents(point, x, chart).values())


def weight_space_dim_by_kernel(fan: Fan, pc: PointClass, k: int) -> int:
    return kernel_dim_of_wedge_maps(k, [fan.rays[t] for t in pc.active], n=fan.dim)


def weight_space_dim_by_charts(fan: Fan, point: Sequence[int], k: int,
                               chart_list: List[ChartData] = None) -> int:
    n = fan.dim
    if chart_list is None:
        chart_list = charts(fan)
    tight = []
    for ch in chart_list:
        if not ch.in_s_k(point, k):
            return 0
        m = ch.coords(point)
        tight.extend(ch.rays[t] for t in range(n) if m[t] == -1)
    if k == n or not tight:
        return comb(n, k)
    stacked = []
    for v in tight:
        stacked.extend(wedge_matrix(n, k, v))
    return comb(n, k) - rank(stacked)


def _chart_minor_table(chart: ChartData, k: int):
    n = len(chart.rays)
    cols = subsets(n, k)
    return {s: [minor(chart.dual_basis, s, t) for t in cols] for s in subsets(n, k)}


def weight_space_dim_by_laurent(fan: Fan, point: Sequence[int], k: int,
                                chart_list: List[ChartData] = None, _minors=None) -> int:
    """dim of {x : chi^I * rho(x) has only nonnegative exponents on every chart}."""
    n = fan.dim
    if chart_list is None:
        chart_list = charts(fan)
    rows = []
    for idx, ch in enumerate(chart_list):
        m = ch.coords(point)
        if min(m) <= -2:
            return 0
        minors = _minors[idx] if _minors is not None else _chart_minor_table(ch, k)
        poles = {t for t in range(n) if m[t] == -1}
        for s in subsets(n, k):
            if not poles <= set(s):
                rows.append(minors[s])
    return comb(n, k) - rank(rows) if rows else comb(n, k)


@dataclass
class CrosscheckReport:
    fan_id: str
    k: int
    margin: int
    totals: Dict[str, int]
    failures: List[Dict[str, object]] = field(default_factory=list)
    points_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, object]:
        return {"fan_id": self.fan_id, "k": self.k, "margin": self.margin,
                "passed": self.passed, "points_checked": self.points_checked,
                "totals": self.totals, "failures": self.failures}


def crosscheck(fan: Fan, k: int, margin: int = 2, fan_id: str = "") -> CrosscheckReport:
    if margin < 1:
        raise ValueError("margin must be at least 1")
    require_valid(fan)
    n = fan.dim
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    hs = build_halfspaces(fan)
    box = bounding_box(hs)
    pts = enumerate_lattice_points(hs, box)
    strat = stratify(fan, pts)
    classes = {pc.point: pc for pc in strat.all_points()}
    chart_list = charts(fan)
    minors = [_chart_minor_table(ch, k) for ch in chart_list]

    totals = {"formula": 0, "kernel": 0, "charts": 0, "laurent": 0}
    failures: List[Dict[str, object]] = []
    checked = 0
    for p in box.inflate(margin).points():
        checked += 1
        pc = classes.get(p)
        formula = 0
        if pc is not None and pc.rank <= k:
            formula = comb(n - pc.rank, k - pc.rank)
        kernel = weight_space_dim_by_kernel(fan, pc, k) if pc is not None else 0
        by_charts = weight_space_dim_by_charts(fan, p, k, chart_list)
        by_laurent = weight_space_dim_by_laurent(fan, p, k, chart_list, minors)
        totals["formula"] += formula
        totals["kernel"] += kernel
        totals["charts"] += by_charts
        totals["laurent"] += by_laurent
        if not formula == kernel == by_charts == by_laurent:
            failures.append({"I": list(p), "formula": formula, "kernel": kernel,
                             "charts": by_charts, "laurent": by_laurent})
        if pc is None or pc.rank > k:
            continue
        ws = weight_space(fan, pc, k)
        if ws.dim != formula:
            failures.append({"I": list(p), "reason": "generator count differs from formula",
                             "generators": ws.dim, "formula": formula})
        if rank([g.vector() for g in ws.generators]) != ws.dim:
            failures.append({"I": list(p), "reason": "generators linearly dependent"})
        for g in ws.generators:
            for ch in chart_list:
                if not is_holomorphic_on_chart(p, g, ch):
                    failures.append({"I": list(p), "reason": "generator has a pole",
                                     "cone": ch.cone_index, "generator": g.to_json()})
    return CrosscheckReport(fan_id, k, margin, totals, failures, checked)


def tight_mutation(fan: Fan, pc: PointClass) -> Tuple[Tuple[int, ...], int]:
    """Push I one step across a tight facet.

    Picks the first tight ray e and a chart containing it; subtracting the
    matching dual vector lowers <I, e> from -1 to -2. Returns the new weight
    and the cone index of that chart.
    """
    if not pc.active:
        raise ValueError("point has no tight ray")
    t = pc.active[0]
    c = next(c for c, cone in enumerate(fan.max_cones) if t in cone)
    ch = chart_data(fan, c)
    pos = ch.cone.index(t)
    new = tuple(a - b for a, b in zip(pc.point, ch.dual_basis[pos]))
    return new, c
