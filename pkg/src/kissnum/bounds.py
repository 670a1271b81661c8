"""Upper bounds on the number of systoles of a closed hyperbolic surface.

The bound comes from a covering argument: cover the surface by ``F`` balls of
the systolic radius, note that at most ``G`` systoles cross any one ball and
that every systole crosses at least ``H`` balls, so the count is at most
``F * G / H``.  A cruder closed form ``100 (g-1) e^{l/2} / l`` is reported
alongside.
"""

import math
import warnings
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from kissnum import hyptrig
from kissnum.errors import DomainError, RangeError

ASINH_1 = math.asinh(1.0)
# below this systole length systoles are pairwise disjoint (collar lemma)
SHORT_REGIME = 2.0 * ASINH_1
# disk of radius l/2 must fit in area 4 pi (g-1): l <= 2 arccosh(2g-1) < 2 log g + 2 log 4
DEFAULT_SLACK = 2.0 * math.log(4.0)


class AreaBoundWarning(UserWarning):
    """Systole length exceeds what the area of the surface allows."""


@dataclass(frozen=True)
class BoundQuery:
    genus: int
    sys_length: float
    r_prime: float = ASINH_1
    slack: float = DEFAULT_SLACK

    def __post_init__(self):
        if int(self.genus) != self.genus or self.genus < 2:
            raise DomainError(f"genus must be an integer >= 2, got {self.genus!r}")
        hyptrig.check_length(self.sys_length, "sys_length")
        hyptrig.check_length(self.r_prime, "r_prime")
        if self.sys_length > 2.0 * math.log(self.genus) + self.slack:
            warnings.warn(
                f"systole length {self.sys_length:g} exceeds 2 log g + {self.slack:g} for g={self.genus}",
                AreaBoundWarning,
                stacklevel=3,
            )


@dataclass(frozen=True)
class BoundReport:
    genus: int
    sys_length: float
    collar_w: float
    systolic_r: float
    theta_min: float
    intersection_R: float
    cover_F: float
    per_ball_G: float
    per_ball_G_simplified: float
    balls_per_systole_H: float
    composite_bound: float
    effective_bound: float
    kiss_upper: float
    regime: str = field(default="long")

    def as_dict(self):
        return asdict(self)


def collar_width(l):
    """Width arcsinh(1/sinh(l/2)) of the embedded collar around a simple geodesic."""
    l = hyptrig.check_length(l, "l")
    return math.asinh(1.0 / math.sinh(l / 2))


def systolic_radius(l):
    """Half the minimal distance between two disjoint systoles of length ``l``."""
    l = hyptrig.check_length(l, "l")
    return math.asinh(1.0 / (2.0 * math.sinh(l / 4)))


def min_angle(l):
    """Lower bound on the crossing angle of two systoles of length ``l``."""
    l = float(l)
    if not math.isfinite(l) or l < 0.0:
        raise DomainError(f"l must be non-negative, got {l!r}")
    if l > hyptrig.MAX_LENGTH:
        raise RangeError(f"l={l!r} too large")
    return math.asin(1.0 / (2.0 * math.cosh(l / 4)))


def intersection_radius(l):
    """Radius around a ball center within which two crossing systoles meet."""
    l = hyptrig.check_length(l, "l")
    return math.asinh(2.0 / math.tanh(l / 4))


def surface_area(genus):
    return 4.0 * math.pi * (genus - 1)


def cover_count_bound(q):
    """F: area of the surface over the area of a ball of half the systolic radius."""
    return surface_area(q.genus) / hyptrig.disk_area(systolic_radius(q.sys_length) / 2)


def per_ball_bound(q):
    """G: how many systoles can cross one ball of the systolic radius.

    Arc length of the circle of radius R(l) + R' divided by twice the minimal
    spacing 2 arcsinh(sinh R' sin theta_l) of consecutive crossing points.
    """
    r_prime = hyptrig.check_length(q.r_prime, "r_prime")
    theta = min_angle(q.sys_length)
    big_r = intersection_radius(q.sys_length)
    spacing = 2.0 * math.asinh(math.sinh(r_prime) * math.sin(theta))
    return math.pi * math.sinh(big_r + r_prime) / spacing


def per_ball_bound_simplified(q):
    """G with the denominator written as theta_l itself (R' fixed at arcsinh 1)."""
    theta = min_angle(q.sys_length)
    big_r = intersection_radius(q.sys_length)
    return 0.5 * math.pi * math.sinh(big_r + ASINH_1) / theta


def balls_per_systole(q):
    """H = 2 l / r(l), a lower bound on the balls any systole must cross."""
    return 2.0 * q.sys_length / systolic_radius(q.sys_length)


def effective_bound(q):
    return 100.0 * (q.genus - 1) * math.exp(q.sys_length / 2) / q.sys_length


def composite_bound(q):
    return cover_count_bound(q) * per_ball_bound(q) / balls_per_systole(q)


def kissing_bound(q):
    """Upper bound on the number of systoles for the query's genus and systole."""
    if q.sys_length <= SHORT_REGIME:
        return float(3 * q.genus - 3)
    return min(composite_bound(q), effective_bound(q))


def bound_report(genus, sys_length, r_prime=ASINH_1, slack=DEFAULT_SLACK):
    q = BoundQuery(genus, sys_length, r_prime, slack)
    l = q.sys_length
    comp = composite_bound(q)
    eff = effective_bound(q)
    return BoundReport(
        genus=q.genus,
        sys_length=l,
        collar_w=collar_width(l),
        systolic_r=systolic_radius(l),
        theta_min=min_angle(l),
        intersection_R=intersection_radius(l),
        cover_F=cover_count_bound(q),
        per_ball_G=per_ball_bound(q),
        per_ball_G_simplified=per_ball_bound_simplified(q),
        balls_per_systole_H=balls_per_systole(q),
        composite_bound=comp,
        effective_bound=eff,
        kiss_upper=kissing_bound(q),
        regime="short" if l <= SHORT_REGIME else "long",
    )


def subquadratic_bound(g, U=None):
    """Systole count bound valid for every length allowed by the area.

    Without ``U`` this is 100 (g-1) e^{l/2} / l at l = 2 log g, i.e.
    50 g (g-1) / log g; with ``U`` it is U g^2 / log g.
    """
    if int(g) != g or g < 2:
        raise DomainError(f"g must be an integer >= 2, got {g!r}")
    if U is None:
        return 50.0 * g * (g - 1) / math.log(g)
    return U * g * g / math.log(g)


def conjectured_systole_length(g, A=0.0):
    return 4.0 / 3.0 * math.log(g) + A


def conjectured_kissing_number(g, B=1.0):
    return B * g ** (4.0 / 3.0)


def growth_exponent(c):
    """Exponent of g in the count bound when systoles are at most c log g."""
    return c / 2.0 + 1.0


def strong_count_lower(g):
    """Number of systoles produced by the complete graph construction in genus g."""
    if g < 1:
        raise DomainError(f"g must be >= 1, got {g!r}")
    s = math.sqrt(48 * g - 47)
    return g * s + 15 * g + s / 3 - 41.0 / 3.0


def strong_count_lower_exact(g):
    """Exact rational value when 48 g - 47 is a perfect square."""
    if g < 1:
        raise DomainError(f"g must be >= 1, got {g!r}")
    d = 48 * g - 47
    s = math.isqrt(d)
    if s * s != d:
        raise DomainError(f"48*{g}-47 = {d} is not a perfect square")
    return g * s + 15 * g + Fraction(s, 3) - Fraction(41, 3)


def corollary_bounds(g, A=0.0, B=1.0, U=None):
    return {
        "subquadratic": subquadratic_bound(g, U),
        "conj_size": conjectured_systole_length(g, A),
        "conj_number": conjectured_kissing_number(g, B),
        "strong_lower": strong_count_lower(g),
    }
