"""Standard smooth complete fans used for tests and demos."""

from itertools import combinations, product
from typing import List, Sequence

from .fan import Fan


def projective_space(n: int) -> Fan:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple([-1] * n))
    cones = list(combinations(range(n + 1), n))
    return Fan(n, tuple(rays), tuple(cones))


def product_fan(factors: Sequence[Fan]) -> Fan:
    if not factors:
        raise ValueError("product of an empty list of fans")
    dim = sum(f.dim for f in factors)
    rays: List[tuple] = []
    offsets = []
    shift = 0
    for f in factors:
        offsets.append(len(rays))
        for r in f.rays:
            rays.append((0,) * shift + r + (0,) * (dim - shift - f.dim))
        shift += f.dim
    cones = []
    for choice in product(*[f.max_cones for f in factors]):
        cones.append(tuple(off + i for off, cone in zip(offsets, choice) for i in cone))
    return Fan(dim, tuple(rays), tuple(cones))


def product_projective(dims: Sequence[int]) -> Fan:
    if not dims:
        raise ValueError("product_projective needs at least one factor")
    return product_fan([projective_space(d) for d in dims])


def hirzebruch(a: int) -> Fan:
    if a < 0:
        raise ValueError("Hirzebruch parameter must be >= 0")
    rays = ((1, 0), (0, 1), (-1, a), (0, -1))
    return Fan(2, rays, ((0, 1), (1, 2), (2, 3), (3, 0)))


FAMILIES = {
    "projective": lambda args: projective_space(*args),
    "product": lambda args: product_projective(args),
    "hirzebruch": lambda args: hirzebruch(*args),
}


def from_family(spec: str) -> Fan:
    """Build a fan from ``name:int[,int...]``, e.g. ``product:1,1``."""
    name, _, params = spec.partition(":")
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    try:
        args = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise ValueError(f"bad family parameters {params!r}") from None
    if name != "product" and len(args) != 1:
        raise ValueError(f"family {name!r} takes exactly one integer parameter")
    return FAMILIES[name](args)
