"""Independence, poisedness and fundamental polynomials of point sets.

A point A of X has an n-fundamental polynomial exactly when its row of the
collocation matrix is not a combination of the other rows, i.e. when no
linear relation among the rows puts weight on it.  The batch routines read
this off the left nullspace, or off one elimination of ``[M | I]`` when the
polynomials themselves are wanted.  :func:`fundamental_polynomial` solves
one system per point and is the independent route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import arith
from .arith import RatMatrix, as_rational
from .errors import EmptySet, Inconsistent, InvalidParams, NoFundamental, NotSolvable, TheoremViolation
from .polyspace import Point, Poly2, collocation_matrix, collocation_rank, dim_pi


@dataclass(frozen=True)
class FundamentalResult:
    point_index: int
    polynomial: Optional[Poly2]

    @property
    def exists(self) -> bool:
        return self.polynomial is not None


def _check_degree(n: int) -> None:
    if n < 0:
        raise InvalidParams(f"degree must be nonnegative, got {n}")


def is_independent(points: Sequence[Point], n: int) -> bool:
    _check_degree(n)
    if len(points) > dim_pi(n):
        return False
    return collocation_rank(points, n) == len(points)


def is_poised(points: Sequence[Point], n: int) -> bool:
    return len(points) == dim_pi(n) and is_independent(points, n)


def is_solvable(points: Sequence[Point], n: int) -> bool:
    """Whether every data vector admits an interpolant of degree <= ``n``.

    The row space of the collocation matrix must be all of Q^#X, i.e. the
    matrix has full row rank.
    """
    _check_degree(n)
    return collocation_rank(points, n) == len(points)


def fundamental_polynomial(points: Sequence[Point], index: int, n: int) -> Poly2:
    """Canonical polynomial equal to 1 at ``points[index]`` and 0 at the others.

    Raises :class:`NoFundamental` when the point has none.
    """
    _check_degree(n)
    if not 0 <= index < len(points):
        raise InvalidParams(f"point index {index} out of range for {len(points)} points")
    data = [0] * len(points)
    data[index] = 1
    try:
        coeffs = arith.solve(collocation_matrix(points, n), data)
    except Inconsistent:
        raise NoFundamental(index, n) from None
    return Poly2(n, coeffs)


def fundamental_table(points: Sequence[Point], n: int) -> List[FundamentalResult]:
    """Fundamental polynomial (or its absence) for every point, from one elimination."""
    _check_degree(n)
    k = len(points)
    if k == 0:
        return []
    cols = dim_pi(n)
    augmented = collocation_matrix(points, n).hstack(RatMatrix.identity(k))
    reduced, pivots = arith.rref(augmented)
    model_pivots = [c for c in pivots if c < cols]
    rank = len(model_pivots)
    blocked = set()
    for r in range(rank, k):
        for i in range(k):
            if reduced[r, cols + i]:
                blocked.add(i)
    results = []
    for i in range(k):
        if i in blocked:
            results.append(FundamentalResult(i, None))
            continue
        coeffs = [Fraction(0)] * cols
        for r, c in enumerate(model_pivots):
            coeffs[c] = reduced[r, cols + i]
        results.append(FundamentalResult(i, Poly2(n, tuple(coeffs))))
    return results


def _dependent_support(points: Sequence[Point], n: int) -> set:
    """Indices appearing with nonzero weight in some linear relation among the rows."""
    relations = arith.nullspace(collocation_matrix(points, n).transpose())
    return {i for v in relations for i, c in enumerate(v) if c}


def points_without_fundamental(points: Sequence[Point], n: int) -> List[int]:
    _check_degree(n)
    return sorted(_dependent_support(points, n))


def is_essentially_dependent(points: Sequence[Point], n: int) -> bool:
    """True iff no point of the (nonempty) set has an n-fundamental polynomial."""
    _check_degree(n)
    if not points:
        raise EmptySet("essential dependence is undefined for the empty set")
    return len(_dependent_support(points, n)) == len(points)


def extract_essential_core(points: Sequence[Point], n: int) -> List[int]:
    """Indices of the points lacking n-fundamental polynomials in ``points``.

    One removal pass suffices: the remainder is essentially n-dependent, and
    that is asserted.  Empty exactly when the set is n-independent.
    """
    core = points_without_fundamental(points, n)
    if core:
        sub = [points[i] for i in core]
        if not is_essentially_dependent(sub, n):
            raise TheoremViolation(
                f"core of {len(core)} points left after one pass is not essentially {n}-dependent"
            )
    return core


def interpolate(points: Sequence[Point], data: Sequence, n: int) -> Poly2:
    """Canonical interpolant of degree <= ``n`` (free coefficients zeroed)."""
    _check_degree(n)
    if len(data) != len(points):
        raise InvalidParams(f"{len(data)} data values for {len(points)} points")
    try:
        coeffs = arith.solve(collocation_matrix(points, n), [as_rational(c) for c in data])
    except Inconsistent:
        raise NotSolvable(f"data cannot be interpolated at degree {n}") from None
    return Poly2(n, coeffs)


def lagrange_combination(points: Sequence[Point], data: Sequence, n: int) -> Poly2:
    """``sum(c_i * p_i)`` over canonical fundamental polynomials; needs independence."""
    total = Poly2.zero(n)
    for res, c in zip(fundamental_table(points, n), data):
        if res.polynomial is None:
            raise NoFundamental(res.point_index, n)
        total = total + res.polynomial * as_rational(c)
    return total
