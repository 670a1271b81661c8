import math
import warnings
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from kissnum import bounds
from kissnum.bounds import BoundQuery
from kissnum.errors import DomainError

pytestmark = pytest.mark.filterwarnings("ignore::kissnum.bounds.AreaBoundWarning")

L0 = 2 * math.asinh(1)
LONG_GRID = np.linspace(L0, 30, 200)


def q(g, l, **kw):
    return BoundQuery(g, l, **kw)


# reference digits from 30-digit mpmath evaluations of the closed forms
@pytest.mark.parametrize(
    "func, arg, expected",
    [
        (bounds.collar_width, L0, math.asinh(1)),
        (bounds.collar_width, 4, 0.272341468911831553),
        (bounds.systolic_radius, 4 * math.asinh(0.5), math.asinh(1)),
        (bounds.systolic_radius, 2, 0.852456416179006846),
        (bounds.min_angle, 0, math.pi / 6),
        (bounds.min_angle, 4, 0.329983202107899687),
        (bounds.intersection_radius, 4, 1.69306127834050332),
        (bounds.intersection_radius, 200, math.asinh(2)),
    ],
)
def test_closed_forms(func, arg, expected):
    assert func(arg) == pytest.approx(expected, rel=1e-13)


@given(st.floats(0.01, 60), st.floats(0.01, 10))
def test_radii_and_angle_decrease(l, step):
    for f in (bounds.collar_width, bounds.systolic_radius, bounds.intersection_radius, bounds.min_angle):
        assert f(l + step) < f(l)


@given(st.floats(0, 200))
def test_min_angle_definition(l):
    assert math.sin(bounds.min_angle(l)) * 2 * math.cosh(l / 4) == pytest.approx(1, rel=1e-14)


def test_domain_errors():
    for f in (bounds.collar_width, bounds.systolic_radius, bounds.intersection_radius):
        with pytest.raises(DomainError):
            f(0)
    with pytest.raises(DomainError):
        bounds.min_angle(-1)
    with pytest.raises(DomainError):
        BoundQuery(1, 3)
    with pytest.raises(DomainError):
        BoundQuery(3, 3, r_prime=-1.0)


def test_area_bound_warns():
    with pytest.warns(bounds.AreaBoundWarning):
        BoundQuery(2, 10)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        BoundQuery(100, 3)


def test_cover_count():
    assert bounds.cover_count_bound(q(2, 4)) == pytest.approx(93.2133691980759405, rel=1e-13)
    assert bounds.cover_count_bound(q(3, 4.7)) == pytest.approx(2 * bounds.cover_count_bound(q(2, 4.7)), rel=1e-15)


@pytest.mark.parametrize("l", LONG_GRID[::10])
@pytest.mark.parametrize("g", [2, 7, 50])
def test_cover_count_below_closed_estimate(g, l):
    assert bounds.cover_count_bound(q(g, l)) < 16 * (g - 1) * math.exp(l / 2)


@pytest.mark.parametrize("l", LONG_GRID)
def test_area_minorant(l):
    assert 2 * math.pi * (math.cosh(bounds.systolic_radius(l) / 2) - 1) > math.pi / 4 * math.exp(-l / 2)


def test_per_ball_values():
    assert bounds.per_ball_bound(q(2, 4)) == pytest.approx(32.1636611851315417, rel=1e-13)
    assert bounds.per_ball_bound_simplified(q(2, 4)) == pytest.approx(31.0550375501321194, rel=1e-13)


def test_per_ball_growth_rate():
    for l in (20.0, 40.0):
        gap = math.log(bounds.per_ball_bound(q(2, 2 * l))) - math.log(bounds.per_ball_bound(q(2, l)))
        assert gap == pytest.approx(l / 4, rel=0.10)


def test_r_prime_choice_near_optimal():
    # grid search over R' as the independent oracle
    r_grid = np.linspace(0.05, 6, 1200)
    for l in np.linspace(2, 12, 11):
        best = min(bounds.per_ball_bound(q(2, l, r_prime=r)) for r in r_grid)
        assert bounds.per_ball_bound(q(2, l)) <= 1.2 * best


def test_balls_per_systole():
    assert bounds.balls_per_systole(q(2, 4)) == pytest.approx(19.3438353050190695, rel=1e-13)
    assert bounds.balls_per_systole(q(2, L0 + 1e-12)) == pytest.approx(3.71315153567754734, rel=1e-9)
    for l in LONG_GRID:
        assert bounds.balls_per_systole(q(2, l)) * bounds.systolic_radius(l) == pytest.approx(2 * l, rel=1e-15)


def test_kissing_bound_short_regime():
    assert bounds.kissing_bound(q(2, 1)) == 3
    assert bounds.kissing_bound(q(17, L0)) == 48


def test_kissing_bound_long_regime():
    assert bounds.effective_bound(q(10, 4)) == pytest.approx(1662.53762225939630, rel=1e-13)
    assert bounds.composite_bound(q(2, 4)) == pytest.approx(93.2133691980759405 * 32.1636611851315417 / 19.3438353050190695, rel=1e-12)
    assert bounds.composite_bound(q(2, 4)) <= bounds.effective_bound(q(2, 4))
    r = bounds.bound_report(2, 4)
    assert r.kiss_upper == min(r.composite_bound, r.effective_bound)


def test_effective_inequality_crossover():
    # F G / H exceeds the closed form for l below ~2.97548 (independent of g); see README
    for l in np.linspace(2.976, 30, 150):
        for g in (2, 10, 100):
            assert bounds.composite_bound(q(g, l)) <= bounds.effective_bound(q(g, l))
    for l in np.linspace(L0 + 1e-9, 2.975, 20):
        assert bounds.composite_bound(q(2, l)) > bounds.effective_bound(q(2, l))


@given(st.integers(2, 200), st.floats(0.1, 12))
def test_kissing_bound_nondecreasing_in_genus(g, l):
    assert bounds.kissing_bound(q(g + 1, l)) >= bounds.kissing_bound(q(g, l))


def test_report_fields_positive():
    for l in (1.0, 3.0, 9.0):
        r = bounds.bound_report(5, l)
        assert all(v > 0 for k, v in r.as_dict().items() if isinstance(v, float))
        assert r.regime == ("short" if l <= L0 else "long")


def test_corollaries():
    assert bounds.strong_count_lower_exact(2) == Fraction(98, 3)
    assert bounds.strong_count_lower(2) == pytest.approx(98 / 3, rel=1e-15)
    assert bounds.strong_count_lower(2) > 6 * 2**1.5
    # the inequality fails at genus 1
    assert bounds.strong_count_lower_exact(1) == Fraction(8, 3)
    assert bounds.strong_count_lower(1) < 6
    c = bounds.corollary_bounds(10)
    assert c["subquadratic"] == pytest.approx(50 * 10 * 9 / math.log(10))
    assert c["conj_size"] == pytest.approx(4 / 3 * math.log(10))
    assert c["conj_number"] == pytest.approx(10 ** (4 / 3))
    with pytest.raises(DomainError):
        bounds.subquadratic_bound(1)
    with pytest.raises(DomainError):
        bounds.strong_count_lower_exact(3)


def test_subquadratic_is_effective_bound_at_area_limit():
    for g in (3, 20, 1000):
        assert bounds.subquadratic_bound(g) == pytest.approx(bounds.effective_bound(q(g, 2 * math.log(g))), rel=1e-12)


@pytest.mark.parametrize("n", [n for n in range(5, 60) if (n - 3) * (n - 4) % 12 == 0])
def test_strong_count_is_triangle_floor_at_integer_n(n):
    # genus (n-3)(n-4)/12 + 1 inverts to n = (7 + sqrt(48 g - 47)) / 2
    g = (n - 3) * (n - 4) // 12 + 1
    assert bounds.strong_count_lower_exact(g) == Fraction(n * n * (n - 3), 6)


def test_growth_exponent():
    assert bounds.growth_exponent(4 / 3) == pytest.approx(5 / 3)
    assert bounds.growth_exponent(2) == 2
