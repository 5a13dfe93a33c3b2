"""Seeded property suites checking the theorems on generated configurations.

Each ``criterion_*`` function returns a :class:`CriterionResult`; all checks
are exact.  The instance families are shared between criteria so that, for
example, the core checks run on exactly the instances the classifier saw.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from . import generators as gen
from .curves import check_intersection_characterization, min_containing_degree
from .errors import NoFundamental
from .independence import (
    extract_essential_core,
    fundamental_polynomial,
    is_essentially_dependent,
    is_independent,
    is_solvable,
)
from .polyspace import Point, PointSet, d_gap, dim_pi
from .scale import CUBIC_INTERSECTION, ScaleParams, classify, max_applicable_size, witness_failures

SCALE_PAIRS = ((2, 3), (2, 4), (3, 3), (3, 4), (4, 4), (4, 5))
INTERSECTION_GRIDS = ((1, 3), (2, 3), (2, 4), (3, 4), (3, 5))
NOISE_BOUND = 6


@dataclass
class CriterionResult:
    number: int
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] criterion {self.number:2d}: {self.name} ({self.cases} checks"
        if self.failures:
            text += f", {len(self.failures)} failed; first: {self.failures[0]}"
        return text + ")"


@dataclass(frozen=True)
class Instance:
    tag: str
    points: PointSet


def with_noise(core: Sequence[Point], total: int, seed) -> PointSet:
    extra = max(0, total - len(core))
    noise = gen.random_points(extra, NOISE_BOUND, seed=f"noise:{seed}", exclude=core).points if extra else ()
    return PointSet(list(core) + list(noise))


def balanced_cubic(kappa: int, seed) -> PointSet:
    """3*kappa points on y = x^3 whose parameters sum to zero.

    Restricted to the curve, a degree-kappa polynomial becomes a polynomial
    in t of degree 3*kappa with no t^(3*kappa-1) term, so these points are
    exactly the meet of the cubic with a degree-kappa curve.
    """
    draw = gen.Draw(f"balanced:{seed}")
    ts = draw.distinct(3 * kappa - 1, exclude=[])
    last = -sum(ts)
    while last in ts:
        ts = draw.distinct(3 * kappa - 1)
        last = -sum(ts)
    return gen.cubic(3 * kappa, params=ts + [last]).points


def _core_recipes(m: int, n: int) -> List[Tuple[str, Callable]]:
    kappa = m + n - 3
    top = m * n - 1
    recipes: List[Tuple[str, Callable]] = [
        ("random", lambda seed, size: gen.random_points(size, NOISE_BOUND, seed=seed).points),
        ("collinear", lambda seed, size: gen.collinear(kappa + 2, seed=seed).points),
        ("collinear-short", lambda seed, size: gen.collinear(kappa + 1, seed=seed).points),
    ]
    if top >= kappa + 3:
        recipes.append(("collinear-long", lambda seed, size: gen.collinear(kappa + 3, seed=seed).points))
    for r in range(2, m):
        s = kappa + 3 - r
        if r * s <= top:
            recipes.append((f"grid{r}x{s}", lambda seed, size, r=r, s=s: gen.grid(r, s, seed=seed).points))
    if m >= 3:
        for variant in gen.CONIC_VARIANTS:
            recipes.append((f"conic-{variant}",
                            lambda seed, size, v=variant: gen.conic(2 * kappa + 2, v, seed=seed).points))
        recipes.append(("conic-short", lambda seed, size: gen.conic(2 * kappa + 1, "parabola", seed=seed).points))
    if m >= 4:
        recipes.append(("cubic-balanced", lambda seed, size: balanced_cubic(kappa, seed)))
        if 3 * kappa + 1 <= top:
            for variant in gen.CUBIC_VARIANTS:
                recipes.append((f"cubic-{variant}",
                                lambda seed, size, v=variant: gen.cubic(3 * kappa + 1, v, seed=seed).points))
    return recipes


@lru_cache(maxsize=None)
def scale_instances(m: int, n: int, count: int = 100, seed: int = 0) -> Tuple[Instance, ...]:
    """Structured cores (or plain random sets) topped up with integer noise to at most mn - 1 points."""
    top = m * n - 1
    recipes = _core_recipes(m, n)
    out = []
    for i in range(count):
        tag, make = recipes[i % len(recipes)]
        key = f"{seed}:{m}:{n}:{i}"
        draw = gen.Draw(key)
        size = draw.integer(1, top)
        core = make(key, size)
        if tag == "random":
            pts = core
        else:
            pts = with_noise(core, draw.integer(len(core), top), key)
        out.append(Instance(f"{tag}#{i}", pts))
    return tuple(out)


@lru_cache(maxsize=None)
def curve_instances(seed: int = 0, per_kind: int = 3) -> Tuple[Tuple[int, Instance], ...]:
    """(n, instance) pairs exceeding the dependence count on lines, conics and cubics."""
    out = []
    for n in range(2, 7):
        for j in range(per_kind):
            key = f"{seed}:curve:{n}:{j}"
            out.append((n, Instance("collinear", gen.collinear(n + 2, seed=key).points)))
            for v in gen.CONIC_VARIANTS:
                out.append((n, Instance(f"conic-{v}", gen.conic(2 * n + 2, v, seed=key).points)))
            for v in gen.CUBIC_VARIANTS:
                out.append((n, Instance(f"cubic-{v}", gen.cubic(3 * n + 1, v, seed=key).points)))
    return tuple(out)


@lru_cache(maxsize=None)
def intersection_instances(seed: int = 0) -> Tuple[Tuple[int, int, Instance, Tuple], ...]:
    out = []
    for r, s in INTERSECTION_GRIDS:
        g = gen.grid(r, s, seed=f"{seed}:grid:{r}x{s}")
        out.append((r, s, Instance(f"grid{r}x{s}", g.points), g.provenance))
    p = gen.conic(8, "parabola", params=range(8))
    out.append((2, 4, Instance("parabola-8", p.points), p.provenance))
    return tuple(out)


def off_curve_point(provenance: Sequence, avoid: Sequence[Point], seed) -> Point:
    draw = gen.Draw(f"offcurve:{seed}")
    avoid = set(avoid)
    while True:
        p = Point(Fraction(draw.integer(-9, 9)), Fraction(draw.integer(-9, 9)))
        if p not in avoid and all(c(p) != 0 for c in provenance):
            return p


def _has_fundamental_by_solve(points, i, n) -> bool:
    try:
        fundamental_polynomial(points, i, n)
    except NoFundamental:
        return False
    return True


def criterion_1(seed: int = 0, per_degree: int = 200) -> CriterionResult:
    res = CriterionResult(1, "at most n+1 points are always n-independent")
    for n in range(1, 7):
        for i in range(per_degree):
            size = 1 + i % (n + 1)
            key = f"{seed}:c1:{n}:{i}"
            if i % 2:
                pts = gen.collinear(size, seed=key).points
            else:
                pts = gen.random_points(size, NOISE_BOUND, seed=key).points
            res.check(is_independent(pts, n), f"n={n} set #{i} of size {size} reported dependent")
    return res


def criterion_2(seed: int = 0) -> CriterionResult:
    res = CriterionResult(2, "n+2 on a line, 2n+2 on a conic, 3n+1 on a cubic are n-dependent")
    for n, inst in curve_instances(seed):
        res.check(not is_independent(inst.points, n), f"{inst.tag} with n={n} reported independent")
    return res


def criterion_3(seed: int = 0, count: int = 200) -> CriterionResult:
    res = CriterionResult(3, "solvable iff independent")
    for i in range(count):
        key = f"{seed}:c3:{i}"
        draw = gen.Draw(key)
        n = draw.integer(1, 4)
        size = draw.integer(1, dim_pi(n) + 2)
        kind = i % 4
        if kind == 0:
            pts = gen.random_points(size, NOISE_BOUND, seed=key).points
        elif kind == 1:
            pts = with_noise(gen.collinear(min(size, n + 2), seed=key).points, size, key)
        elif kind == 2:
            pts = with_noise(gen.conic(min(size, 2 * n + 2), "parabola", seed=key).points, size, key)
        else:
            pts = with_noise(gen.grid(2, n + 1, seed=key).points, size, key)
        by_definition = all(_has_fundamental_by_solve(pts, j, n) for j in range(len(pts)))
        res.check(is_solvable(pts, n) == by_definition == is_independent(pts, n),
                  f"instance #{i} (n={n}, #X={len(pts)}) disagrees")
    return res


def _core_check(res: CriterionResult, pts, n, what: str) -> None:
    core = extract_essential_core(pts, n)
    sub = pts.subset(core)
    ok = bool(core) and is_essentially_dependent(sub, n)
    # the definition, one system per point, as a second route
    ok = ok and not any(_has_fundamental_by_solve(sub, j, n) for j in range(len(sub)))
    res.check(ok, what)


def criterion_4(seed: int = 0, count: int = 100) -> CriterionResult:
    res = CriterionResult(4, "one removal pass leaves an essentially dependent core")
    for n, inst in curve_instances(seed):
        _core_check(res, inst.points, n, f"{inst.tag} n={n}")
    for m, n in SCALE_PAIRS:
        kappa = m + n - 3
        for inst in scale_instances(m, n, count, seed):
            if not is_independent(inst.points, kappa):
                _core_check(res, inst.points, kappa, f"({m},{n}) {inst.tag}")
    for r, s, inst, _ in intersection_instances(seed):
        _core_check(res, inst.points, r + s - 3, inst.tag)
    return res


def criterion_5(seed: int = 0, count: int = 100) -> CriterionResult:
    res = CriterionResult(5, "scale classifier agrees with the rank test; witnesses verify")
    for m, n in SCALE_PAIRS:
        params = ScaleParams(m, n)
        for inst in scale_instances(m, n, count, seed):
            verdict = classify(inst.points, params)
            direct = not is_independent(inst.points, params.kappa)
            res.check(verdict.dependent == direct, f"({m},{n}) {inst.tag}: verdict disagrees with rank")
            if verdict.dependent:
                bad = witness_failures(inst.points, params, verdict.witness)
                res.check(not bad, f"({m},{n}) {inst.tag}: witness fails {bad}")
    return res


def criterion_6(seed: int = 0) -> CriterionResult:
    res = CriterionResult(6, "grids and parabola-8 are curve intersections; perturbed copies are not")
    for r, s, inst, provenance in intersection_instances(seed):
        pts = inst.points
        res.check(check_intersection_characterization(pts, r, s), f"{inst.tag} not recognized")
        draw = gen.Draw(f"{seed}:c6:{inst.tag}")
        k = draw.integer(0, len(pts) - 1)
        bad = off_curve_point(provenance, pts, f"{seed}:{inst.tag}")
        moved = PointSet([bad if i == k else p for i, p in enumerate(pts)])
        res.check(not check_intersection_characterization(moved, r, s), f"{inst.tag} with point {k} moved accepted")
    return res


def criterion_7(seed: int = 0, count: int = 100) -> CriterionResult:
    res = CriterionResult(7, "m=3 witnesses: kappa+2 collinear or 2kappa+2 on a conic")
    for kappa in (3, 4, 5):
        params = ScaleParams(3, kappa)
        for m, n in SCALE_PAIRS:
            if m + n - 3 != kappa:
                continue
            for inst in scale_instances(m, n, count, seed):
                pts = inst.points
                if len(pts) > 2 * kappa + 2 or is_independent(pts, kappa):
                    continue
                w = classify(pts, params).witness
                size = len(w.subset)
                ok = (w.r == 1 and size >= kappa + 2) or (w.r == 2 and size == 2 * kappa + 2)
                res.check(ok, f"kappa={kappa} ({m},{n}) {inst.tag}: r={w.r}, #Y={size}")
        for j in range(5):
            key = f"{seed}:c7:{kappa}:{j}"
            line = gen.collinear(kappa + 2, seed=key).points
            res.check(classify(line, params).dependent, f"kappa={kappa} collinear #{j} independent")
            for v in gen.CONIC_VARIANTS:
                con = gen.conic(2 * kappa + 2, v, seed=key).points
                res.check(classify(con, params).dependent, f"kappa={kappa} conic-{v} #{j} independent")
    return res


def criterion_8(seed: int = 0, per_kappa: int = 5) -> CriterionResult:
    res = CriterionResult(8, "3 x kappa grids meet a cubic and a degree-kappa curve")
    for kappa in (5, 6):
        params = ScaleParams(4, kappa - 1)
        for j in range(per_kappa):
            pts = gen.grid(3, kappa, seed=f"{seed}:c8:{kappa}:{j}").points
            v = classify(pts, params)
            w = v.witness
            ok = (v.dependent and w.r == 3 and len(w.subset) == 3 * kappa
                  and w.intersection_case and v.label == CUBIC_INTERSECTION)
            res.check(ok, f"kappa={kappa} grid #{j}: {v.verdict}, {w and (w.r, len(w.subset), v.label)}")
    return res


def criterion_9(seed: int = 0, count: int = 100, grid_subsets: int = 20) -> CriterionResult:
    res = CriterionResult(9, "cores lie on curves of degree <= m-1; grid cores have >= rs points")
    for m, n in SCALE_PAIRS:
        kappa = m + n - 3
        for inst in scale_instances(m, n, count, seed):
            core = extract_essential_core(inst.points, kappa)
            if not core:
                continue
            cw = min_containing_degree(inst.points.subset(core), m)
            res.check(cw is not None and cw.degree <= m - 1, f"({m},{n}) {inst.tag}: degree {cw and cw.degree}")
    for r, s in INTERSECTION_GRIDS + ((2, 5), (3, 3), (4, 4)):
        kappa = r + s - 3
        if kappa < 1:
            continue
        for j in range(grid_subsets):
            key = f"{seed}:c9:{r}x{s}:{j}"
            g = gen.grid(r, s, seed=key).points
            draw = gen.Draw(key)
            keep = [i for i in range(len(g)) if draw.rng.random() < 0.85] if j else list(range(len(g)))
            if not keep:
                continue
            core = extract_essential_core(g.subset(keep), kappa)
            res.check(not core or len(core) >= r * s, f"{r}x{s} subset #{j}: core of {len(core)} points")
    return res


def criterion_10(limit: int = 12) -> CriterionResult:
    res = CriterionResult(10, "dimension, d(n,k) and applicability-bound formulas")
    from math import comb

    for n in range(limit + 1):
        res.check(dim_pi(n) == comb(n + 2, 2), f"dim_pi({n})")
        for k in range(1, n + 1):
            direct = dim_pi(n) - dim_pi(n - k)
            res.check(d_gap(n, k) == direct and 2 * direct == k * (2 * n - k + 3)
                      and direct == sum(range(n - k + 2, n + 2)), f"d_gap({n},{k})")
    for kappa in range(1, limit + 1):
        bound = max_applicable_size(kappa)
        best = max(m * (kappa + 3 - m) for m in range(1, (kappa + 3) // 2 + 1))
        res.check(bound == best, f"max_applicable_size({kappa}) = {bound}, exhaustive {best}")
        for size in range(1, bound + 3):
            fits = any(size <= m * (kappa + 3 - m) for m in range(1, kappa + 3) if m <= kappa + 3 - m)
            res.check(fits == (size <= bound), f"kappa={kappa}, #X={size}")
    return res


CRITERIA: Dict[int, Callable[..., CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: lambda seed=0: criterion_10(),
}


def run_all(seed: int = 0, only: Sequence[int] = ()) -> List[CriterionResult]:
    return [CRITERIA[k](seed=seed) for k in sorted(CRITERIA) if not only or k in only]
