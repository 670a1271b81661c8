"""Closed-form hyperbolic trigonometry.

Only the handful of solvers needed for the systole estimates live here:
pants distances, right and general triangle sine laws, and disk measures.
Lengths and angles are plain floats (radians for angles).
"""

import math

from kissnum.errors import DomainError, RangeError

# sinh/cosh overflow a double just above 710
MAX_LENGTH = 700.0


def check_length(x, name="length"):
    """Return ``x`` as a float after checking it is a usable positive length."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} must be positive and finite, got {x!r}")
    if x > MAX_LENGTH:
        raise RangeError(f"{name}={x!r} exceeds {MAX_LENGTH}; sinh would overflow")
    return x


def check_angle(theta, name="angle", upper=math.pi, closed_upper=False):
    theta = float(theta)
    ok = 0.0 < theta < upper or (closed_upper and theta == upper)
    if not math.isfinite(theta) or not ok:
        raise DomainError(f"{name} must lie in (0, {upper:g}{']' if closed_upper else ')'}, got {theta!r}")
    return theta


def pants_adjacent_distance(la, lb, lg):
    """Distance between the boundary geodesics of lengths ``la`` and ``lb``
    in the pair of pants with third boundary length ``lg``."""
    la = check_length(la, "la")
    lb = check_length(lb, "lb")
    lg = check_length(lg, "lg")
    # cosh d = (cosh(lg/2) + cosh(la/2) cosh(lb/2)) / (sinh(la/2) sinh(lb/2)),
    # rewritten as cosh d - 1 = 2 sinh(d/2)^2 to avoid cancellation near d = 0
    excess = (math.cosh(lg / 2) + math.cosh((la - lb) / 2)) / (math.sinh(la / 2) * math.sinh(lb / 2))
    return 2.0 * math.asinh(math.sqrt(excess / 2.0))


def right_triangle_opposite(theta, hyp):
    """Side opposite ``theta`` in a right triangle with hypotenuse ``hyp``.

    Uses sinh(side) = sin(theta) sinh(hyp).
    """
    theta = check_angle(theta, "theta", upper=math.pi / 2, closed_upper=True)
    hyp = check_length(hyp, "hyp")
    return math.asinh(math.sin(theta) * math.sinh(hyp))


def triangle_sine_transfer(theta_at, side_opposite, theta_target):
    """Side opposite ``theta_target`` given the side opposite ``theta_at``.

    Law of sines: sin(theta_at)/sinh(side_opposite) = sin(theta_target)/sinh(s).
    """
    theta_at = check_angle(theta_at, "theta_at")
    theta_target = check_angle(theta_target, "theta_target")
    side_opposite = check_length(side_opposite, "side_opposite")
    value = math.sin(theta_at) * math.sinh(side_opposite) / math.sin(theta_target)
    if not math.isfinite(value):
        raise RangeError("sinh of the transferred side overflows")
    return math.asinh(value)


def disk_area(rho):
    """Area 2*pi*(cosh(rho) - 1) of a hyperbolic disk of radius ``rho``."""
    rho = check_length(rho, "rho")
    # cosh(rho) - 1 == 2 sinh(rho/2)**2, no cancellation for tiny radii
    return 4.0 * math.pi * math.sinh(rho / 2) ** 2


def disk_circumference(rho):
    rho = check_length(rho, "rho")
    return 2.0 * math.pi * math.sinh(rho)
