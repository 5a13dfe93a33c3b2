from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poisekit import generators as gen
from poisekit.curves import CurveWitness
from poisekit.errors import DuplicatePoints, InvalidParams, OutOfScope
from poisekit.independence import is_independent
from poisekit.polyspace import PointSet, vanishing_space
from poisekit.scale import (
    COLLINEAR,
    CONIC,
    CUBIC_INTERSECTION,
    ScaleParams,
    classify,
    generic_label,
    max_applicable_size,
    special_case_label,
    verify_witness,
    witness_failures,
)

PARABOLA_8 = PointSet([(t, t * t) for t in range(8)])
LINE_PLUS_TWO = PointSet([(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (1, 3), (2, 5)])


@pytest.mark.parametrize("kappa, expected", [(3, 9), (2, 6), (4, 12)])
def test_max_applicable_size(kappa, expected):
    assert max_applicable_size(kappa) == expected


def test_params_validation():
    assert ScaleParams(3, 3).kappa == 3
    for m, n in [(3, 2), (1, 1), (1, 2), (0, 5)]:
        with pytest.raises(InvalidParams):
            ScaleParams(m, n)


def test_parabola_eight():
    params = ScaleParams(3, 3)
    v = classify(PARABOLA_8, params)
    w = v.witness
    assert v.dependent
    assert (w.r, w.s, w.subset, w.intersection_case) == (2, 4, tuple(range(8)), True)
    assert v.label == CONIC
    assert verify_witness(PARABOLA_8, params, w)


def test_five_collinear_with_two_extra():
    params = ScaleParams(2, 4)
    v = classify(LINE_PLUS_TWO, params)
    w = v.witness
    assert (w.r, w.s, w.subset, w.intersection_case) == (1, 5, (0, 1, 2, 3, 4), True)
    assert v.label == COLLINEAR
    assert [p.monic() for p in w.curve.basis] == [vanishing_space(PointSet([(0, 0), (1, 0)]), 1)[0].monic()]


def test_four_generic_points_independent():
    pts = gen.random_points(4, 10, seed=3).points
    v = classify(pts, ScaleParams(2, 3))
    assert not v.dependent and v.witness is None and v.verdict == "independent"


def test_out_of_scope_and_duplicates():
    with pytest.raises(OutOfScope):
        classify(PARABOLA_8, ScaleParams(2, 4))
    with pytest.raises(DuplicatePoints):
        classify([(0, 0), (0, 0)], ScaleParams(2, 3))


def test_grid_witness_tampering_detected():
    g = PointSet([(x, y) for x in (0, 1, 2) for y in range(5)])
    params = ScaleParams(4, 4)
    w = classify(g, params).witness
    assert (w.r, w.s, len(w.subset)) == (3, 5, 15)
    assert verify_witness(g, params, w)

    bumped = replace(w, r=w.r + 1, s=w.s - 1, curve=CurveWitness(w.r + 1, vanishing_space(g, w.r + 1)))
    assert not verify_witness(g, params, bumped)
    assert "minimality" in witness_failures(g, params, bumped)

    dropped = replace(w, subset=w.subset[1:])
    assert not verify_witness(g, params, dropped)
    assert "size>=rs" in witness_failures(g, params, dropped)


def test_labels():
    g = gen.grid(3, 5, seed=11).points
    params = ScaleParams(4, 4)
    v = classify(g, params)
    assert v.label == CUBIC_INTERSECTION
    assert special_case_label(v.witness, params) == CUBIC_INTERSECTION
    with pytest.raises(InvalidParams):
        special_case_label(v.witness, ScaleParams(1, 5))


def test_generic_label_beyond_cubics():
    g = gen.grid(4, 6, seed=2).points
    params = ScaleParams(5, 5)
    v = classify(g, params)
    assert (v.witness.r, v.label) == (4, generic_label(4))
    assert verify_witness(g, params, v.witness)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7), st.data())
def test_m_equal_one_never_dependent(n, data):
    params = ScaleParams(1, n)
    pts = data.draw(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                             min_size=1, max_size=params.max_points, unique=True))
    assert not classify(PointSet(pts), params).dependent
    line = PointSet([(t, t) for t in range(params.max_points)])
    assert not classify(line, params).dependent


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 3), (2, 4), (3, 3), (3, 4), (4, 4)]), st.data())
def test_classify_sound_and_complete(mn, data):
    params = ScaleParams(*mn)
    # a tight box forces plenty of collinearities
    pts = data.draw(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
                             min_size=1, max_size=params.max_points, unique=True))
    X = PointSet(pts)
    v = classify(X, params)
    assert v.dependent == (not is_independent(X, params.kappa))
    if v.dependent:
        assert witness_failures(X, params, v.witness) == []
