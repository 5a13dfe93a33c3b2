"""Seeded point configurations on lines, conics, cubics and line grids.

Randomness comes from :class:`random.Random` (MT19937) seeded with the
string ``"poisekit:<seed>:<attempt>"``, and only its ``random()`` method is
used, whose output stream Python guarantees across versions.  Retries after
a degenerate draw use the next attempt number.

Every generator returns the points together with provenance polynomials that
vanish on all of them; that is asserted before returning.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DegenerateConfiguration, InvalidParams
from .polyspace import Point, PointSet, Poly2

RETRY_BUDGET = 32

KINDS = ("collinear", "conic", "cubic", "grid", "random")
CONIC_VARIANTS = ("parabola", "hyperbola", "two_lines")
CUBIC_VARIANTS = ("graph", "nodal")


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``variant`` selects the conic or cubic shape.  ``params`` fixes curve
    parameter values instead of drawing them.  Grids ignore ``count``.
    """

    kind: str
    count: int = 1
    seed: int = 0
    variant: Optional[str] = None
    r_lines: int = 0
    s_lines: int = 0
    bound: int = 10
    params: Optional[Tuple] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParams(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "grid":
            if self.r_lines < 1 or self.s_lines < 1:
                raise InvalidParams("grid needs r_lines >= 1 and s_lines >= 1")
        elif self.count < 1:
            raise InvalidParams("count must be at least 1")
        if self.kind == "conic" and (self.variant or "parabola") not in CONIC_VARIANTS:
            raise InvalidParams(f"conic variant must be one of {CONIC_VARIANTS}")
        if self.kind == "cubic" and (self.variant or "graph") not in CUBIC_VARIANTS:
            raise InvalidParams(f"cubic variant must be one of {CUBIC_VARIANTS}")
        if self.kind == "random" and (2 * self.bound + 1) ** 2 < self.count:
            raise InvalidParams(f"box of radius {self.bound} holds fewer than {self.count} integer points")


@dataclass(frozen=True)
class Generated:
    points: PointSet
    provenance: Tuple[Poly2, ...]
    description: str = ""
    spec: Optional[GenSpec] = field(default=None, compare=False)


class Draw:
    """Thin helper over ``Random.random()`` with stable derived operations."""

    def __init__(self, seed, attempt: int = 0):
        self.rng = random.Random(f"poisekit:{seed}:{attempt}")

    def integer(self, lo: int, hi: int) -> int:
        return lo + int(self.rng.random() * (hi - lo + 1))

    def distinct(self, count: int, exclude: Iterable = ()) -> List[Fraction]:
        """Distinct small integers, widening the range as needed, then rationals."""
        banned = set(exclude)
        out: List[Fraction] = []
        seen = set()
        radius = count // 2 + 1
        tries = 0
        while len(out) < count:
            tries += 1
            if tries > 50 * count:
                v = Fraction(self.integer(-radius, radius), self.integer(2, 7))
            else:
                v = Fraction(self.integer(-radius, radius))
            if tries % (10 * count) == 0:
                radius += 1
            if v in seen or v in banned:
                continue
            seen.add(v)
            out.append(v)
        return out


def _finish(points: Sequence[Point], provenance: Sequence[Poly2], description: str, spec=None) -> Generated:
    ps = PointSet(points)
    for p in provenance:
        for q in ps:
            assert p(q) == 0, f"provenance {p} does not vanish at {q}"
    return Generated(ps, tuple(provenance), description, spec)


def random_line(draw: Draw) -> Poly2:
    while True:
        a, b = draw.integer(-3, 3), draw.integer(-3, 3)
        if a or b:
            return Poly2.line(a, b, draw.integer(-5, 5))


def points_on_line(line: Poly2, params: Sequence[Fraction]) -> List[Point]:
    """Points of ``a*x + b*y + c = 0`` at the given parameter values."""
    c, a, b = line.coeffs
    if b:
        return [Point(t, -(a * t + c) / b) for t in params]
    return [Point(-c / a, t) for t in params]


def collinear(count: int, seed: int = 0, params=None) -> Generated:
    draw = Draw(seed)
    line = random_line(draw)
    ts = [Fraction(t) for t in params] if params is not None else draw.distinct(count)
    return _finish(points_on_line(line, ts), [line], f"line {line} = 0")


def conic(count: int, variant: str = "parabola", seed: int = 0, params=None) -> Generated:
    draw = Draw(seed)
    if variant == "parabola":
        ts = [Fraction(t) for t in params] if params is not None else draw.distinct(count)
        curve = Poly2.from_terms({(0, 1): 1, (2, 0): -1})
        return _finish([Point(t, t * t) for t in ts], [curve], "parabola y = x^2")
    if variant == "hyperbola":
        ts = [Fraction(t) for t in params] if params is not None else draw.distinct(count, exclude=[0])
        if 0 in ts:
            raise InvalidParams("hyperbola parameter 0 has no point")
        curve = Poly2.from_terms({(1, 1): 1, (0, 0): -1})
        return _finish([Point(t, 1 / t) for t in ts], [curve], "hyperbola x*y = 1")
    if variant == "two_lines":
        for attempt in range(RETRY_BUDGET):
            draw = Draw(seed, attempt)
            first, second = random_line(draw), random_line(draw)
            if _proportional(first, second):
                continue
            k1 = (count + 1) // 2
            pts = points_on_line(first, draw.distinct(k1)) + points_on_line(second, draw.distinct(count - k1))
            if len(set(pts)) == len(pts):
                return _finish(pts, [first * second], f"line pair ({first}) * ({second}) = 0")
        raise DegenerateConfiguration(f"no valid line pair after {RETRY_BUDGET} attempts")
    raise InvalidParams(f"unknown conic variant {variant!r}")


def cubic(count: int, variant: str = "graph", seed: int = 0, params=None) -> Generated:
    draw = Draw(seed)
    if variant == "graph":
        ts = [Fraction(t) for t in params] if params is not None else draw.distinct(count)
        curve = Poly2.from_terms({(0, 1): 1, (3, 0): -1})
        return _finish([Point(t, t**3) for t in ts], [curve], "cubic y = x^3")
    if variant == "nodal":
        # (t^2 - 1, t(t^2 - 1)) on y^2 = x^2 (x + 1); t = 1 and t = -1 both hit the node
        curve = Poly2.from_terms({(0, 2): 1, (3, 0): -1, (2, 0): -1})
        if params is not None:
            ts = [Fraction(t) for t in params]
            if 1 in ts and -1 in ts:
                raise DegenerateConfiguration("parameters 1 and -1 both map to the node")
        else:
            ts = draw.distinct(count, exclude=[-1])
        return _finish([Point(t * t - 1, t * (t * t - 1)) for t in ts], [curve], "nodal cubic y^2 = x^3 + x^2")
    raise InvalidParams(f"unknown cubic variant {variant!r}")


def _proportional(l1: Poly2, l2: Poly2) -> bool:
    c1, a1, b1 = l1.coeffs
    c2, a2, b2 = l2.coeffs
    return a1 * b2 == a2 * b1 and a1 * c2 == a2 * c1 and b1 * c2 == b2 * c1


def _meet(l1: Poly2, l2: Poly2) -> Optional[Point]:
    c1, a1, b1 = l1.coeffs
    c2, a2, b2 = l2.coeffs
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return Point((b1 * c2 - b2 * c1) / det, (a2 * c1 - a1 * c2) / det)


def _product(lines: Sequence[Poly2]) -> Poly2:
    out = Poly2.from_terms({(0, 0): 1})
    for line in lines:
        out = out * line
    return out


def line_grid(first: Sequence[Poly2], second: Sequence[Poly2]) -> Generated:
    """All pairwise intersections of two line families.

    Raises :class:`DegenerateConfiguration` unless there are exactly
    ``len(first) * len(second)`` distinct points, each on exactly one line of
    each family.
    """
    for fam in (first, second):
        if any(_proportional(a, b) for a, b in combinations(fam, 2)):
            raise DegenerateConfiguration("repeated line in a family")
    pts = []
    for a in first:
        for b in second:
            p = _meet(a, b)
            if p is None:
                raise DegenerateConfiguration(f"lines {a} and {b} are parallel")
            pts.append(p)
    if len(set(pts)) != len(pts):
        raise DegenerateConfiguration("grid intersections coincide")
    for p in pts:
        if sum(a(p) == 0 for a in first) != 1 or sum(b(p) == 0 for b in second) != 1:
            raise DegenerateConfiguration(f"three lines concur at {p}")
    return _finish(pts, [_product(first), _product(second)],
                   f"{len(first)}x{len(second)} line grid")


def grid(r_lines: int, s_lines: int, seed: int = 0) -> Generated:
    """Grid of seeded lines, grown one line at a time; a line making it degenerate is redrawn."""
    for attempt in range(RETRY_BUDGET):
        draw = Draw(seed, attempt)
        families: Tuple[List[Poly2], List[Poly2]] = ([], [])
        order = [0] * r_lines + [1] * s_lines
        for fam in order:
            for _ in range(8 * (r_lines + s_lines)):
                families[fam].append(random_line(draw))
                try:
                    line_grid(*families)
                    break
                except DegenerateConfiguration:
                    families[fam].pop()
            else:
                break
        else:
            return line_grid(*families)
    raise DegenerateConfiguration(f"no valid {r_lines}x{s_lines} grid after {RETRY_BUDGET} attempts")


def random_points(count: int, bound: int = 10, seed: int = 0, exclude: Iterable[Point] = ()) -> Generated:
    draw = Draw(seed)
    banned = set(exclude)
    pts: List[Point] = []
    seen = set(banned)
    while len(pts) < count:
        p = Point(Fraction(draw.integer(-bound, bound)), Fraction(draw.integer(-bound, bound)))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return _finish(pts, [], f"random integer points in [-{bound}, {bound}]^2")


def generate(spec: GenSpec) -> Generated:
    if spec.kind == "collinear":
        out = collinear(spec.count, spec.seed, spec.params)
    elif spec.kind == "conic":
        out = conic(spec.count, spec.variant or "parabola", spec.seed, spec.params)
    elif spec.kind == "cubic":
        out = cubic(spec.count, spec.variant or "graph", spec.seed, spec.params)
    elif spec.kind == "grid":
        out = grid(spec.r_lines, spec.s_lines, spec.seed)
    else:
        out = random_points(spec.count, spec.bound, spec.seed)
    return Generated(out.points, out.provenance, out.description, spec)
