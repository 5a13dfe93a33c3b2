"""Scale criterion for kappa-dependence of at most mn - 1 points.

With kappa = m + n - 3 and m <= n, a set X of at most mn - 1 points is
kappa-dependent iff it contains an essentially kappa-dependent subset Y
lying on a curve of degree r (1 <= r <= m - 1) but on none of lower degree,
with #Y >= r*s where r + s - 3 = kappa.  When #Y = r*s, Y is the full
intersection of a degree-r and a degree-s curve.

:func:`classify` follows the constructive route: strip the points that have
fundamental polynomials, then find the lowest-degree curve through what is
left.  Anything the theory forbids is raised as :class:`TheoremViolation`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .curves import CurveWitness, check_intersection_characterization, lies_on_lower_curve, min_containing_degree
from .errors import InvalidParams, NoFundamental, OutOfScope, TheoremViolation
from .independence import extract_essential_core, fundamental_polynomial, is_independent
from .polyspace import Point, PointSet

log = logging.getLogger(__name__)

COLLINEAR = "CollinearKappaPlus2"
CONIC = "ConicTwoKappaPlus2"
CUBIC_INTERSECTION = "CubicIntersection"
CUBIC_EXCESS = "MoreThan3KappaOnCubic"


WITNESS_CHECKS = (
    "subset-indices",
    "r-range",
    "r+s-3=kappa",
    "size>=rs",
    "essential-dependence",
    "curve-degree",
    "curve-vanishes",
    "minimality",
    "intersection-flag",
    "intersection-characterization",
)


def generic_label(r: int) -> str:
    return f"GenericScaleCase({r})"


@dataclass(frozen=True)
class ScaleParams:
    m: int
    n: int

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise InvalidParams(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if self.kappa < 1:
            raise InvalidParams(f"kappa = m + n - 3 must be at least 1, got {self.kappa}")

    @property
    def kappa(self) -> int:
        return self.m + self.n - 3

    @property
    def max_points(self) -> int:
        return self.m * self.n - 1


@dataclass(frozen=True)
class Witness:
    subset: Tuple[int, ...]
    r: int
    s: int
    curve: CurveWitness
    intersection_case: bool


@dataclass(frozen=True)
class ScaleVerdict:
    params: ScaleParams
    witness: Optional[Witness] = None
    label: Optional[str] = None

    @property
    def dependent(self) -> bool:
        return self.witness is not None

    @property
    def verdict(self) -> str:
        return "dependent" if self.dependent else "independent"


def max_applicable_size(kappa: int) -> int:
    """Largest #X for which some split kappa = m + n - 3, m <= n has #X <= mn."""
    if kappa < 1:
        raise InvalidParams(f"kappa must be at least 1, got {kappa}")
    return (kappa + 3) ** 2 // 4


def _as_pointset(points: Sequence) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet(points)


def classify(points: Sequence[Point], params: ScaleParams) -> ScaleVerdict:
    points = _as_pointset(points)
    kappa, m = params.kappa, params.m
    if len(points) > params.max_points:
        raise OutOfScope(
            f"{len(points)} points exceed mn - 1 = {params.max_points} for m={m}, n={params.n}"
        )
    if is_independent(points, kappa):
        return ScaleVerdict(params)

    core = extract_essential_core(points, kappa)
    if not core:
        raise TheoremViolation(f"dependent set has an empty essential {kappa}-core")
    sub = points.subset(core)
    curve = min_containing_degree(sub, m - 1) if m > 1 else None
    if curve is None:
        raise TheoremViolation(f"essential core of {len(core)} points lies on no curve of degree <= {m - 1}")
    r = curve.degree
    s = kappa - r + 3
    if len(core) < r * s:
        raise TheoremViolation(f"core has {len(core)} points on a degree-{r} curve, fewer than r*s = {r * s}")
    witness = Witness(tuple(core), r, s, curve, len(core) == r * s)
    log.debug("dependent: r=%d s=%d #Y=%d", r, s, len(core))
    return ScaleVerdict(params, witness, special_case_label(witness, params))


def verify_witness(points: Sequence[Point], params: ScaleParams, witness: Witness) -> bool:
    """Recheck every witness property from scratch."""
    return not witness_failures(points, params, witness)


def witness_failures(points: Sequence[Point], params: ScaleParams, witness: Witness) -> list:
    """Names of the witness properties that fail, recomputed independently of classify."""
    kappa, m = params.kappa, params.m
    r, s, idx = witness.r, witness.s, witness.subset
    if not idx or len(set(idx)) != len(idx) or not all(0 <= i < len(points) for i in idx):
        return ["subset-indices"]
    sub = [points[i] for i in idx]
    failures = []
    if not 1 <= r <= m - 1:
        failures.append("r-range")
    if r + s - 3 != kappa:
        failures.append("r+s-3=kappa")
    if len(sub) < r * s:
        failures.append("size>=rs")

    # one linear system per point, not the batched core extraction
    for i in range(len(sub)):
        try:
            fundamental_polynomial(sub, i, kappa)
        except NoFundamental:
            continue
        failures.append("essential-dependence")
        break

    curve = witness.curve
    if (curve.degree != r or not curve.basis
            or any(p.degree_bound != r or p.is_zero() for p in curve.basis)
            or all(p.effective_degree != r for p in curve.basis)):
        failures.append("curve-degree")
    elif not curve.vanishes_on(sub):
        failures.append("curve-vanishes")
    if lies_on_lower_curve(sub, r):
        failures.append("minimality")

    if witness.intersection_case != (len(sub) == r * s):
        failures.append("intersection-flag")
    elif witness.intersection_case and 1 <= r <= s:
        if not check_intersection_characterization(sub, r, s):
            failures.append("intersection-characterization")
    return failures


def special_case_label(witness: Witness, params: ScaleParams) -> str:
    """Name of the low-degree case the witness falls into.

    Degrees 1, 2, 3 get their own labels; higher r (possible only when
    m > 4) is reported generically.
    """
    if params.m == 1:
        raise InvalidParams("no dependent witness exists for m = 1")
    kappa, r, size = params.kappa, witness.r, len(witness.subset)
    if r == 1:
        label, ok = COLLINEAR, size >= kappa + 2
    elif r == 2:
        label, ok = CONIC, size >= 2 * kappa + 2
    elif r == 3 and size == 3 * kappa:
        label, ok = CUBIC_INTERSECTION, True
    elif r == 3:
        label, ok = CUBIC_EXCESS, size > 3 * kappa
    else:
        return generic_label(r)
    if not ok:
        raise TheoremViolation(f"witness with r={r} and #Y={size} fits no case for kappa={kappa}")
    return label
