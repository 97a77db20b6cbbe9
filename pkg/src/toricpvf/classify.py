"""Tight-ray classification of lattice points and the rank strata S(i), S_k."""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .exact_linalg import dot, extend_to_basis, greedy_independent, rank
from .fan import Fan
from .polytope import LatticePointSet


class NotInPolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class PointClass:
    """A lattice point together with the rays tight at it.

    ``basis_idx`` is the greedily chosen independent subset of ``active``
    whose wedge fixes the normal-space generator; ``complement`` completes
    those rays to a basis of Q^n with standard vectors.
    """

    point: Tuple[int, ...]
    active: Tuple[int, ...]
    rank: int
    basis_idx: Tuple[int, ...]
    complement: Tuple[Tuple[int, ...], ...]


def classify_point(fan: Fan, point: Sequence[int]) -> PointClass:
    point = tuple(point)
    if len(point) != fan.dim:
        raise ValueError("dimension mismatch")
    pairings = [dot(point, r) for r in fan.rays]
    bad = [t for t, p in enumerate(pairings) if p < -1]
    if bad:
        raise NotInPolytopeError(f"{list(point)} not in P_Delta: pairing with ray {bad[0]} is {pairings[bad[0]]}")
    active = tuple(t for t, p in enumerate(pairings) if p == -1)
    active_rays = [fan.rays[t] for t in active]
    chosen = greedy_independent(active_rays)
    basis_idx = tuple(active[j] for j in chosen)
    basis_rays = [fan.rays[t] for t in basis_idx]
    complement = tuple(extend_to_basis(basis_rays, fan.dim))
    return PointClass(point, active, len(basis_idx), basis_idx, complement)


@dataclass
class Stratification:
    dim: int
    by_rank: Dict[int, List[PointClass]]
    face_groups: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = field(default_factory=dict)

    def counts(self) -> List[int]:
        return [len(self.by_rank.get(i, [])) for i in range(self.dim + 1)]

    def all_points(self) -> List[PointClass]:
        return sorted((pc for group in self.by_rank.values() for pc in group),
                      key=lambda pc: pc.point)

    def faces_of_rank(self, i: int) -> Dict[Tuple[int, ...], List[Tuple[int, ...]]]:
        """Face groups (tight-ray set -> points) of codimension i."""
        ranks = {pc.active: pc.rank for pc in self.all_points()}
        return {a: pts for a, pts in self.face_groups.items() if ranks[a] == i}


def stratify(fan: Fan, pts: LatticePointSet) -> Stratification:
    by_rank: Dict[int, List[PointClass]] = {i: [] for i in range(fan.dim + 1)}
    groups: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for p in sorted(pts):
        pc = classify_point(fan, p)
        by_rank[pc.rank].append(pc)
        groups.setdefault(pc.active, []).append(pc.point)
    return Stratification(fan.dim, by_rank, dict(sorted(groups.items())))


def s_k(strat: Stratification, k: int) -> List[PointClass]:
    """Points in strata 0..k, lexicographically sorted."""
    if not 0 <= k <= strat.dim:
        raise ValueError(f"k={k} out of range 0..{strat.dim}")
    out = [pc for i in range(k + 1) for pc in strat.by_rank.get(i, [])]
    return sorted(out, key=lambda pc: pc.point)


def active_rank(fan: Fan, active: Sequence[int]) -> int:
    return rank([fan.rays[t] for t in active])
