"""Smooth complete fans: data model, validation and the JSON file format."""

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .exact_linalg import det, inverse, is_primitive, primitive, LinalgError


class FanError(ValueError):
    """Structurally malformed fan or fan document."""


class FanValidationError(ValueError):
    """Well-formed fan that is not smooth or not complete."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(d["reason"] for d in report.diagnostics)
                         or "fan failed validation")


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: Tuple[Tuple[int, ...], ...]
    max_cones: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rays = tuple(tuple(int(c) for c in r) for r in self.rays)
        cones = tuple(tuple(int(i) for i in c) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        n = self.dim
        if not isinstance(n, int) or n < 1:
            raise FanError(f"dimension must be a positive integer, got {n!r}")
        for t, r in enumerate(rays):
            if len(r) != n:
                raise FanError(f"ray {t} has length {len(r)}, expected {n}")
            if not any(r):
                raise FanError(f"ray {t}: zero ray")
            if not is_primitive(r):
                raise FanError(f"ray {t} {list(r)}: non-primitive ray")
        if len(set(rays)) != len(rays):
            raise FanError("duplicate rays")
        if not cones:
            raise FanError("fan has no maximal cones")
        for c, cone in enumerate(cones):
            if len(cone) != n:
                raise FanError(f"cone {c} has {len(cone)} rays, expected {n}")
            if len(set(cone)) != n:
                raise FanError(f"cone {c} has repeated ray indices")
            for i in cone:
                if not 0 <= i < len(rays):
                    raise FanError(f"cone {c} references missing ray {i}")
        if len({frozenset(c) for c in cones}) != len(cones):
            raise FanError("duplicate maximal cones")

    @property
    def n(self) -> int:
        return self.dim

    def cone_rays(self, c: int) -> List[Tuple[int, ...]]:
        return [self.rays[i] for i in self.max_cones[c]]

    def transform(self, u: Sequence[Sequence[int]]) -> "Fan":
        """Apply a lattice automorphism (rows of ``u`` act on column rays)."""
        rays = [tuple(sum(a * b for a, b in zip(row, r)) for row in u)
                for r in self.rays]
        return Fan(self.dim, tuple(rays), self.max_cones)


@dataclass
class ValidationReport:
    smooth: bool
    complete: bool
    diagnostics: List[Dict[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.smooth and self.complete

    def to_json(self) -> Dict[str, object]:
        return {"smooth": self.smooth, "complete": self.complete,
                "diagnostics": self.diagnostics}


def validate_smooth(fan: Fan) -> Tuple[bool, List[Dict[str, object]]]:
    diags = []
    for c in range(len(fan.max_cones)):
        d = det(fan.cone_rays(c))
        if abs(d) != 1:
            diags.append({"cone": c, "reason": f"cone {c} not smooth: |det| = {abs(d)}"})
    return not diags, diags


def _generic_point(fan: Fan, inverses) -> Tuple[int, ...]:
    # moment-curve candidates miss any fixed finite set of hyperplanes eventually
    n = fan.dim
    for base in range(2, 10_000):
        w = tuple(base ** j for j in range(n))
        if all(all(sum(inv[i][j] * w[j] for j in range(n)) != 0 for i in range(n))
               for inv in inverses):
            return w
    raise RuntimeError("no generic point found")


def validate_complete(fan: Fan) -> Tuple[bool, List[Dict[str, object]]]:
    """Ridge pairing plus connectivity of the dual graph.

    Two geometric checks guard against cone complexes that pass the
    combinatorial test yet wrap around several times or fold back: the two
    cones on a ridge must lie on opposite sides of it, and a generic point
    must lie in exactly one cone.
    """
    n = fan.dim
    cones = fan.max_cones
    diags: List[Dict[str, object]] = []
    if n == 1:
        ok = set(fan.rays) == {(1,), (-1,)} and len(cones) == 2
        if not ok:
            diags.append({"cone": None, "reason": "a complete 1-dimensional fan has rays +1 and -1"})
        return ok, diags

    ridges: Dict[Tuple[int, ...], List[int]] = {}
    for c, cone in enumerate(cones):
        for r in combinations(sorted(cone), n - 1):
            ridges.setdefault(r, []).append(c)
    for r, owners in sorted(ridges.items()):
        if len(owners) == 1:
            diags.append({"cone": owners[0],
                          "reason": f"ridge in one cone: {list(r)} lies on the boundary"})
        elif len(owners) > 2:
            diags.append({"cone": owners[0],
                          "reason": f"ridge in {len(owners)} cones: {list(r)}"})
    if diags:
        return False, diags

    adj: Dict[int, List[int]] = {c: [] for c in range(len(cones))}
    for owners in ridges.values():
        a, b = owners
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        c = stack.pop()
        for d in adj[c]:
            if d not in seen:
                seen.add(d)
                stack.append(d)
    if len(seen) != len(cones):
        diags.append({"cone": min(set(range(len(cones))) - seen),
                      "reason": "dual graph of maximal cones is disconnected"})
        return False, diags

    try:
        inverses = [inverse([list(col) for col in zip(*fan.cone_rays(c))])
                    for c in range(len(cones))]
    except LinalgError:
        diags.append({"cone": None, "reason": "degenerate cone"})
        return False, diags

    for r, (a, b) in sorted(ridges.items()):
        apex_a = next(i for i in cones[a] if i not in r)
        apex_b = next(i for i in cones[b] if i not in r)
        d_a = det([fan.rays[i] for i in r] + [fan.rays[apex_a]])
        d_b = det([fan.rays[i] for i in r] + [fan.rays[apex_b]])
        if d_a * d_b >= 0:
            diags.append({"cone": a, "reason": f"cones {a} and {b} overlap across ridge {list(r)}"})
    if diags:
        return False, diags

    w = _generic_point(fan, inverses)
    hits = sum(1 for inv in inverses
               if all(sum(inv[i][j] * w[j] for j in range(n)) > 0 for i in range(n)))
    if hits != 1:
        diags.append({"cone": None,
                      "reason": f"generic point covered by {hits} cones (support is not a single copy of R^n)"})
        return False, diags
    return True, diags


def validate(fan: Fan) -> ValidationReport:
    smooth, d1 = validate_smooth(fan)
    # completeness tests assume simplicial full-dimensional cones
    if any(det(fan.cone_rays(c)) == 0 for c in range(len(fan.max_cones))):
        return ValidationReport(smooth, False, d1 + [
            {"cone": None, "reason": "degenerate cone; completeness not checked"}])
    complete, d2 = validate_complete(fan)
    return ValidationReport(smooth, complete, d1 + d2)


def require_valid(fan: Fan) -> Fan:
    report = validate(fan)
    if not report.ok:
        raise FanValidationError(report)
    return fan


def fan_to_dict(fan: Fan) -> Dict[str, object]:
    return {"dim": fan.dim,
            "rays": [list(r) for r in fan.rays],
            "max_cones": [list(c) for c in fan.max_cones]}


def parse_fan(text, normalize: bool = False) -> Fan:
    """Parse the JSON fan document.

    Non-primitive rays are rejected unless ``normalize`` is set, either by the
    caller or by the document's own ``normalize`` field.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FanError(f"malformed document: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict):
        raise FanError("malformed document: top level must be an object")
    unknown = set(doc) - {"dim", "rays", "max_cones", "normalize"}
    if unknown:
        raise FanError(f"malformed document: unknown fields {sorted(unknown)}")
    for key in ("dim", "rays", "max_cones"):
        if key not in doc:
            raise FanError(f"malformed document: missing field {key!r}")
    dim, rays, cones = doc["dim"], doc["rays"], doc["max_cones"]
    norm = doc.get("normalize", False)
    if not isinstance(norm, bool):
        raise FanError("malformed document: 'normalize' must be a boolean")
    normalize = normalize or norm

    def _ints(xs, what):
        if not isinstance(xs, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in xs):
            raise FanError(f"malformed document: {what} must be an integer array")
        return xs

    if not isinstance(dim, int) or isinstance(dim, bool):
        raise FanError("malformed document: 'dim' must be an integer")
    if not isinstance(rays, list) or not isinstance(cones, list):
        raise FanError("malformed document: 'rays' and 'max_cones' must be arrays")
    rays = [_ints(r, "ray") for r in rays]
    cones = [_ints(c, "cone") for c in cones]
    for t, r in enumerate(rays):
        if len(r) != dim:
            raise FanError(f"dimension mismatch: ray {t} has length {len(r)}, dim is {dim}")
        if normalize and any(r):
            rays[t] = list(primitive(r))
    return Fan(dim, tuple(map(tuple, rays)), tuple(map(tuple, cones)))


def serialize_fan(fan: Fan) -> bytes:
    return (json.dumps(fan_to_dict(fan), separators=(", ", ": ")) + "\n").encode("utf-8")

