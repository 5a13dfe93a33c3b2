"""Curves through point sets: minimal containing degree and intersection tests.

"Some curve of degree < r contains X" is always decided as nontriviality of
the degree r-1 vanishing space, never by enumerating curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .errors import EmptySet, InvalidParams
from .independence import is_essentially_dependent
from .polyspace import Point, Poly2, d_gap, dim_pi, vanishing_dimension, vanishing_space


@dataclass(frozen=True)
class CurveWitness:
    """Basis of all degree-``degree`` curves through a set that lies on no lower-degree curve."""

    degree: int
    basis: List[Poly2]

    def vanishes_on(self, points: Sequence[Point]) -> bool:
        return all(p(q) == 0 for p in self.basis for q in points)

    @property
    def curve(self) -> Poly2:
        """A representative of exact degree ``degree``."""
        for p in self.basis:
            if p.effective_degree == self.degree:
                return p
        raise AssertionError("curve witness without an element of full degree")


def min_containing_degree(points: Sequence[Point], max_r: int) -> Optional[CurveWitness]:
    """Smallest r <= ``max_r`` such that a curve of degree r passes through every point.

    Returns None when no such curve exists within the bound.  Once
    ``dim_pi(r) > len(points)`` a curve always exists.
    """
    if not points:
        raise EmptySet("minimal containing degree of the empty set")
    if max_r < 1:
        raise InvalidParams(f"max_r must be at least 1, got {max_r}")
    for r in range(1, max_r + 1):
        basis = vanishing_space(points, r)
        if basis:
            return CurveWitness(r, basis)
    return None


def lies_on_lower_curve(points: Sequence[Point], r: int) -> bool:
    """Whether some nonzero polynomial of degree < r vanishes on every point."""
    return r > 1 and vanishing_dimension(points, r - 1) > 0


def check_dnk_independence_on_curve(points: Sequence[Point], k: int, n: int) -> bool:
    """Independence of ``d_gap(n, k)`` points on a square-free degree-k curve q.

    Such a set is n-independent iff every degree-n polynomial vanishing on it
    is a multiple of q.  The multiples ``q * Pi_{n-k}`` always vanish on the
    set, so the condition is ``dim(vanishing space) == dim_pi(n - k)``.  The
    caller guarantees the curve hypothesis.
    """
    expected = d_gap(n, k)
    if len(points) != expected:
        raise InvalidParams(f"need exactly d({n},{k}) = {expected} points, got {len(points)}")
    return vanishing_dimension(points, n) == dim_pi(n - k)


def check_intersection_characterization(points: Sequence[Point], r: int, s: int) -> bool:
    """Whether the r*s points are the intersection of a degree-r and a degree-s curve.

    Decided by: essential (r+s-3)-dependence and no curve of degree < r
    through the set.
    """
    if not 1 <= r <= s:
        raise InvalidParams(f"need 1 <= r <= s, got r={r}, s={s}")
    if len(points) != r * s:
        raise InvalidParams(f"need exactly r*s = {r * s} points, got {len(points)}")
    kappa = r + s - 3
    if kappa < 0:
        # r = s = 1: a single point is always the meet of two lines
        return True
    return is_essentially_dependent(points, kappa) and not lies_on_lower_curve(points, r)
