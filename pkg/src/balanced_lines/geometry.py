"""Exact planar primitives for two-colored point sets.

All coordinates are exact rationals and every predicate is computed without
rounding: a single wrong orientation sign would silently corrupt the
combinatorial structure built on top of this module.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CollinearWitnessError, FailsToSeparateError, ParityError


class Color(Enum):
    BLUE = "B"
    RED = "R"

    @property
    def weight(self) -> int:
        """+1 for blue, -1 for red."""
        return 1 if self is Color.BLUE else -1

    @property
    def opposite(self) -> "Color":
        return Color.RED if self is Color.BLUE else Color.BLUE


def _as_fraction(value) -> Fraction:
    # Floats are rejected on purpose: exactness is the whole point.
    if isinstance(value, float):
        raise TypeError("coordinates must be exact rationals, not floats")
    return Fraction(value)


@dataclass(frozen=True)
class ChromaticPoint:
    """A colored point with exact rational coordinates."""

    id: int
    x: Fraction
    y: Fraction
    color: Color

    def __post_init__(self):
        object.__setattr__(self, "x", _as_fraction(self.x))
        object.__setattr__(self, "y", _as_fraction(self.y))


class Instance:
    """An even-sized two-colored point set.

    Colors are canonicalized so the majority color plays the "blue" role:
    when the raw input has more red than blue points, the roles are swapped
    internally and ``swapped`` records this. Raw colors are preserved for
    serialization, so JSON round-trips are bit-exact.
    """

    def __init__(self, points: Iterable[ChromaticPoint]):
        pts = tuple(points)
        n = len(pts)
        if n == 0 or n % 2 != 0:
            raise ParityError(f"instance must have a positive even point count, got {n}")
        if sorted(p.id for p in pts) != list(range(n)):
            raise ValueError("point ids must be 0..n-1 with no gaps or repeats")
        pts = tuple(sorted(pts, key=lambda p: p.id))
        raw_blue = sum(1 for p in pts if p.color is Color.BLUE)
        self.points = pts
        self.n = n
        self.swapped = raw_blue < n - raw_blue
        self._scaled = _scale_to_integers(pts)

    @property
    def b(self) -> int:
        """Canonical blue count (majority color)."""
        raw = sum(1 for p in self.points if p.color is Color.BLUE)
        return self.n - raw if self.swapped else raw

    @property
    def r(self) -> int:
        return self.n - self.b

    @property
    def delta(self) -> int:
        return (self.b - self.r) // 2

    def color_of(self, i: int) -> Color:
        """Canonical color of point i (roles swapped when the raw reds outnumber blues)."""
        c = self.points[i].color
        return c.opposite if self.swapped else c

    def weight(self, i: int) -> int:
        return self.color_of(i).weight

    def colors(self) -> tuple[Color, ...]:
        return tuple(self.color_of(i) for i in range(self.n))

    def scaled_coords(self) -> list[tuple[int, int]]:
        """Integer coordinates after uniform positive scaling.

        Orientation signs and direction parallelism are invariant under
        scaling all coordinates by the common denominator, so predicates may
        run on plain integers.
        """
        return self._scaled


def _scale_to_integers(pts: Sequence[ChromaticPoint]) -> list[tuple[int, int]]:
    denoms = set()
    for p in pts:
        denoms.add(p.x.denominator)
        denoms.add(p.y.denominator)
    lcm = math.lcm(*denoms) if denoms else 1
    return [(int(p.x * lcm), int(p.y * lcm)) for p in pts]


def orientation(p: ChromaticPoint, q: ChromaticPoint, s: ChromaticPoint) -> int:
    """Sign of the cross product (q-p) x (s-p), exactly."""
    det = (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x)
    return (det > 0) - (det < 0)


def _orient_scaled(coords, i: int, j: int, k: int) -> int:
    (xi, yi), (xj, yj), (xk, yk) = coords[i], coords[j], coords[k]
    det = (xj - xi) * (yk - yi) - (yj - yi) * (xk - xi)
    return (det > 0) - (det < 0)


def _primitive_direction(coords, i: int, j: int) -> tuple[int, int]:
    """Reduced integer direction from i to j with canonical sign."""
    dx = coords[j][0] - coords[i][0]
    dy = coords[j][1] - coords[i][1]
    g = math.gcd(dx, dy)
    if g:
        dx //= g
        dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


@dataclass(frozen=True)
class GeneralPositionReport:
    """Every collinear triple, parallel spanned-pair pair, and coincident pair."""

    collinear_triples: tuple[tuple[int, int, int], ...]
    parallel_pair_pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    coincident_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def clean(self) -> bool:
        return not (self.collinear_triples or self.parallel_pair_pairs or self.coincident_pairs)


def validate_general_position(inst: Instance) -> GeneralPositionReport:
    """Report collinear triples and parallel spanned lines.

    Runs in O(n^2) via direction hashing; an empty report certifies both the
    general-position assumption and the no-parallel-spanned-lines assumption.
    """
    coords = inst.scaled_coords()
    n = inst.n

    coincident = set()
    triples = set()
    for a in range(n):
        buckets: dict[tuple[int, int], list[int]] = {}
        for j in range(n):
            if j == a:
                continue
            if coords[j] == coords[a]:
                # Coincident points: every triple through them is degenerate too.
                coincident.add((min(a, j), max(a, j)))
                for k in range(n):
                    if k not in (a, j):
                        triples.add(tuple(sorted((a, j, k))))
                continue
            buckets.setdefault(_primitive_direction(coords, a, j), []).append(j)
        for members in buckets.values():
            if len(members) >= 2:
                for x in range(len(members)):
                    for y in range(x + 1, len(members)):
                        triples.add(tuple(sorted((a, members[x], members[y]))))

    dir_buckets: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if coords[i] == coords[j]:
                continue
            dir_buckets.setdefault(_primitive_direction(coords, i, j), []).append((i, j))
    parallels = []
    for members in dir_buckets.values():
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                a, b = members[x], members[y]
                if not (set(a) & set(b)):  # shared-point cases are collinear triples
                    parallels.append((a, b))
    return GeneralPositionReport(
        collinear_triples=tuple(sorted(triples)),
        parallel_pair_pairs=tuple(sorted(parallels)),
        coincident_pairs=tuple(sorted(coincident)),
    )


def _perturb_scale(inst: Instance) -> Fraction:
    diffs = []
    pts = inst.points
    for i in range(inst.n):
        for j in range(i + 1, inst.n):
            for d in (abs(pts[i].x - pts[j].x), abs(pts[i].y - pts[j].y)):
                if d:
                    diffs.append(d)
    return min(diffs) / 2 if diffs else Fraction(1)


def perturb(inst: Instance, seed: int) -> Instance:
    """Deterministically move each coordinate by < epsilon until the report is empty.

    Epsilon starts at half the smallest nonzero coordinate difference and
    halves on every retry round; clean instances are returned unchanged.
    """
    if validate_general_position(inst).clean:
        return inst
    eps = _perturb_scale(inst)
    rng = random.Random(f"perturb:{seed}")
    grain = 1 << 16
    for _ in range(64):
        moved = []
        for p in inst.points:
            dx = eps * Fraction(rng.randint(-(grain - 1), grain - 1), grain)
            dy = eps * Fraction(rng.randint(-(grain - 1), grain - 1), grain)
            moved.append(ChromaticPoint(p.id, p.x + dx, p.y + dy, p.color))
        candidate = Instance(moved)
        if validate_general_position(candidate).clean:
            return candidate
        eps /= 2
    raise FailsToSeparateError("could not clear degeneracies in 64 rounds")


def halfplane_weights(inst: Instance, i: int, j: int) -> tuple[int, int]:
    """Weight sums on the two open halfplanes of line(i, j).

    Left is the side with positive orientation. Raises CollinearWitnessError
    if a third point sits on the line.
    """
    if i == j:
        raise ValueError("spanning pair must be two distinct points")
    coords = inst.scaled_coords()
    left = right = 0
    for k in range(inst.n):
        if k in (i, j):
            continue
        s = _orient_scaled(coords, i, j, k)
        if s == 0:
            raise CollinearWitnessError(f"point {k} is collinear with ({i}, {j})")
        if s > 0:
            left += inst.weight(k)
        else:
            right += inst.weight(k)
    return left, right


def instance_to_json(inst: Instance) -> str:
    """Canonical JSON with rationals as 'p/q' or integer strings."""
    pts = [
        {"id": p.id, "x": str(p.x), "y": str(p.y), "color": p.color.value}
        for p in inst.points
    ]
    return json.dumps({"points": pts}, separators=(",", ":"))


def instance_from_json(text: str) -> Instance:
    data = json.loads(text)
    pts = [
        ChromaticPoint(
            id=int(p["id"]),
            x=Fraction(p["x"]),
            y=Fraction(p["y"]),
            color=Color(p["color"]),
        )
        for p in data["points"]
    ]
    return Instance(pts)
