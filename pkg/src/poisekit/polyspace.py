"""Bivariate polynomials of bounded total degree and point sets in the plane.

Coefficient vectors use graded lexicographic order with x first:
``1, x, y, x^2, xy, y^2, x^3, ...``.  Every serialized vector and every
canonical solution depends on this order, so it must never change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from . import arith
from .arith import RatMatrix, as_rational
from .errors import DuplicatePoints, InvalidParams

MONOMIAL_ORDER = "grlex-x-first"


class Monomial(NamedTuple):
    xexp: int
    yexp: int

    @property
    def degree(self) -> int:
        return self.xexp + self.yexp

    def __str__(self) -> str:
        parts = []
        for var, e in (("x", self.xexp), ("y", self.yexp)):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts) or "1"


def dim_pi(n: int) -> int:
    """Dimension of the space of polynomials of total degree at most ``n``."""
    if n < 0:
        raise InvalidParams(f"degree must be nonnegative, got {n}")
    return (n + 1) * (n + 2) // 2


def d_gap(n: int, k: int) -> int:
    """``dim_pi(n) - dim_pi(n - k)`` for ``1 <= k <= n``.

    This is the largest number of n-independent points a square-free curve
    of degree k can carry.
    """
    if not 1 <= k <= n:
        raise InvalidParams(f"d_gap needs 1 <= k <= n, got n={n}, k={k}")
    value = dim_pi(n) - dim_pi(n - k)
    assert 2 * value == k * (2 * n - k + 3)
    return value


@lru_cache(maxsize=None)
def monomials(n: int) -> Tuple[Monomial, ...]:
    if n < 0:
        raise InvalidParams(f"degree must be nonnegative, got {n}")
    return tuple(Monomial(d - j, j) for d in range(n + 1) for j in range(d + 1))


def monomial_index(xexp: int, yexp: int) -> int:
    d = xexp + yexp
    return dim_pi(d - 1) + yexp if d else 0


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(as_rational(x), as_rational(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


class PointSet(Sequence[Point]):
    """Ordered collection of pairwise distinct rational points.

    Subsets are always reported as index lists into this order.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable = ()):
        pts = []
        seen = {}
        for i, p in enumerate(points):
            p = p if isinstance(p, Point) else Point.of(*p)
            if p in seen:
                raise DuplicatePoints(seen[p], i, p)
            seen[p] = i
            pts.append(p)
        self._points = tuple(pts)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PointSet(self._points[i])
        return self._points[i]

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet([{', '.join(str(p) for p in self._points)}])"

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(self._points[i] for i in indices)

    def without(self, index: int) -> "PointSet":
        return PointSet(self._points[:index] + self._points[index + 1:])

    def __add__(self, other: Iterable) -> "PointSet":
        return PointSet(list(self._points) + list(other))


@dataclass(frozen=True)
class Poly2:
    """Polynomial with ``dim_pi(degree_bound)`` graded-lex coefficients."""

    degree_bound: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != dim_pi(self.degree_bound):
            raise InvalidParams(
                f"degree bound {self.degree_bound} needs {dim_pi(self.degree_bound)} "
                f"coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, degree_bound: int, coeffs: Sequence) -> "Poly2":
        return cls(degree_bound, tuple(as_rational(c) for c in coeffs))

    @classmethod
    def from_terms(cls, terms: dict, degree_bound: int | None = None) -> "Poly2":
        """Build from ``{(xexp, yexp): coeff}``."""
        if degree_bound is None:
            degree_bound = max((i + j for i, j in terms), default=0)
        coeffs = [Fraction(0)] * dim_pi(degree_bound)
        for (i, j), c in terms.items():
            if i + j > degree_bound:
                raise InvalidParams(f"term x^{i} y^{j} exceeds degree bound {degree_bound}")
            coeffs[monomial_index(i, j)] += as_rational(c)
        return cls(degree_bound, tuple(coeffs))

    @classmethod
    def zero(cls, degree_bound: int = 0) -> "Poly2":
        return cls(degree_bound, (Fraction(0),) * dim_pi(degree_bound))

    @classmethod
    def line(cls, a, b, c) -> "Poly2":
        """``a*x + b*y + c``."""
        return cls.from_coeffs(1, (c, a, b))

    def terms(self) -> dict:
        return {m: c for m, c in zip(monomials(self.degree_bound), self.coeffs) if c}

    @property
    def effective_degree(self) -> int:
        """Largest total degree with a nonzero coefficient; -1 for zero."""
        return max((m.degree for m in self.terms()), default=-1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x, y=None) -> Fraction:
        if y is None:
            x, y = x
        return eval_poly(self, Point.of(x, y))

    def raised(self, degree_bound: int) -> "Poly2":
        if degree_bound < self.effective_degree:
            raise InvalidParams(
                f"cannot store a degree-{self.effective_degree} polynomial with bound {degree_bound}"
            )
        return Poly2.from_terms(self.terms(), degree_bound)

    def __add__(self, other: "Poly2") -> "Poly2":
        bound = max(self.degree_bound, other.degree_bound)
        terms = dict(self.terms())
        for m, c in other.terms().items():
            terms[m] = terms.get(m, 0) + c
        return Poly2.from_terms(terms, bound)

    def __neg__(self) -> "Poly2":
        return Poly2(self.degree_bound, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other) -> "Poly2":
        if not isinstance(other, Poly2):
            c = as_rational(other)
            return Poly2(self.degree_bound, tuple(c * v for v in self.coeffs))
        terms: dict = {}
        for (i1, j1), a in self.terms().items():
            for (i2, j2), b in other.terms().items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + a * b
        return Poly2.from_terms(terms, self.degree_bound + other.degree_bound)

    __rmul__ = __mul__

    def monic(self) -> "Poly2":
        """Scale so the last nonzero coefficient (graded-lex) equals one."""
        for c in reversed(self.coeffs):
            if c:
                return self * (1 / c)
        return self

    def __str__(self) -> str:
        parts = []
        for m, c in reversed(list(self.terms().items())):
            mono = str(m)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts) or "0"


def eval_poly(p: Poly2, point: Point) -> Fraction:
    x, y = point
    total = Fraction(0)
    for (i, j), c in zip(monomials(p.degree_bound), p.coeffs):
        if c:
            total += c * x**i * y**j
    return total


def _row(point: Point, n: int) -> List[Fraction]:
    x, y = point
    xs = [Fraction(1)]
    ys = [Fraction(1)]
    for _ in range(n):
        xs.append(xs[-1] * x)
        ys.append(ys[-1] * y)
    return [xs[i] * ys[j] for i, j in monomials(n)]


def collocation_matrix(points: Sequence[Point], n: int) -> RatMatrix:
    """Rows are points, columns are the monomials of degree at most ``n``."""
    cols = dim_pi(n)
    return RatMatrix(len(points), cols, tuple(v for p in points for v in _row(p, n)))


def collocation_rank(points: Sequence[Point], n: int) -> int:
    return arith.rank(collocation_matrix(points, n))


def vanishing_space(points: Sequence[Point], n: int) -> List[Poly2]:
    """Canonical basis of all polynomials of degree <= ``n`` vanishing on ``points``."""
    return [Poly2(n, v) for v in arith.nullspace(collocation_matrix(points, n))]


def vanishing_dimension(points: Sequence[Point], n: int) -> int:
    if n < 0:
        return 0
    return dim_pi(n) - collocation_rank(points, n)
