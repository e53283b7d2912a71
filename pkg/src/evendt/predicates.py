"""Exact-decision planar predicates and approximate circle constructions.

``orient2d`` and ``incircle`` never return a wrong sign: a floating-point
evaluation guarded by a static forward error bound (the classic adaptive
precision filter constants) answers the vast majority of calls, and anything
inside the uncertainty band is recomputed in exact rational arithmetic.

``circumcircle`` and ``arc_points`` are floating-point constructions.  They
only generate *candidate* geometry; every accept/reject decision about a
candidate must be re-made with the exact predicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

import numpy as np

from .errors import DegenerateCircleError, InvalidPointError

Point = tuple[float, float]


class Orientation(IntEnum):
    COUNTERCLOCKWISE = 1
    COLLINEAR = 0
    CLOCKWISE = -1


class CirclePosition(IntEnum):
    INSIDE = 1
    ON_CIRCLE = 0
    OUTSIDE = -1


CCW = Orientation.COUNTERCLOCKWISE
CW = Orientation.CLOCKWISE
COLLINEAR = Orientation.COLLINEAR
INSIDE = CirclePosition.INSIDE
OUTSIDE = CirclePosition.OUTSIDE
ON_CIRCLE = CirclePosition.ON_CIRCLE

# Shewchuk's epsilon is half an ulp of 1.0; the A-stage error bounds below are
# valid for the plain floating-point evaluation including the initial
# coordinate subtractions.
_EPS = math.ulp(1.0) / 2.0
_CCW_ERR = (3.0 + 16.0 * _EPS) * _EPS
_ICC_ERR = (10.0 + 96.0 * _EPS) * _EPS
_INF = math.inf

_ORIENT_FROM_SIGN = {1: CCW, 0: COLLINEAR, -1: CW}
_CIRCLE_FROM_SIGN = {1: INSIDE, 0: ON_CIRCLE, -1: OUTSIDE}


def _exact_diff(a: float, b: float) -> Fraction:
    try:
        return Fraction(a) - Fraction(b)
    except (ValueError, OverflowError) as exc:
        raise InvalidPointError(f"non-finite coordinate in predicate input: {a!r}, {b!r}") from exc


def _orient2d_exact(a: Point, b: Point, c: Point) -> int:
    det = _exact_diff(a[0], c[0]) * _exact_diff(b[1], c[1]) \
        - _exact_diff(a[1], c[1]) * _exact_diff(b[0], c[0])
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def _orient2d_sign(a: Point, b: Point, c: Point) -> int:
    """Exact sign of the signed area of triangle abc (+1 CCW, -1 CW, 0 collinear)."""
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    if not (-_INF < det < _INF):
        return _orient2d_exact(a, b, c)

    if detleft > 0.0:
        if detright <= 0.0:
            return 1 if det > 0.0 else (-1 if det < 0.0 else 0)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return 1 if det > 0.0 else (-1 if det < 0.0 else 0)
        detsum = -detleft - detright
    else:
        return 1 if det > 0.0 else (-1 if det < 0.0 else 0)

    errbound = _CCW_ERR * detsum
    if det > errbound:
        return 1
    if det < -errbound:
        return -1
    return _orient2d_exact(a, b, c)


def orient2d(a: Point, b: Point, c: Point) -> Orientation:
    """Exact orientation of the triple (a, b, c).

    Antisymmetric under swapping any two arguments.  Raises
    InvalidPointError on NaN/infinite coordinates.
    """
    return _ORIENT_FROM_SIGN[_orient2d_sign(a, b, c)]


def _incircle_exact_ccw(a: Point, b: Point, c: Point, d: Point) -> int:
    adx = _exact_diff(a[0], d[0])
    ady = _exact_diff(a[1], d[1])
    bdx = _exact_diff(b[0], d[0])
    bdy = _exact_diff(b[1], d[1])
    cdx = _exact_diff(c[0], d[0])
    cdy = _exact_diff(c[1], d[1])
    det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
           + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
           + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def _incircle_sign_ccw(a: Point, b: Point, c: Point, d: Point) -> int:
    """Exact sign of the incircle determinant; (a, b, c) must be in CCW order.

    +1 means d is strictly inside the circumcircle of abc, -1 strictly
    outside, 0 exactly on it.
    """
    adx = a[0] - d[0]
    ady = a[1] - d[1]
    bdx = b[0] - d[0]
    bdy = b[1] - d[1]
    cdx = c[0] - d[0]
    cdy = c[1] - d[1]

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady
    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = ((abs(bdxcdy) + abs(cdxbdy)) * alift
                 + (abs(cdxady) + abs(adxcdy)) * blift
                 + (abs(adxbdy) + abs(bdxady)) * clift)
    if not (-_INF < det < _INF) or not (permanent < _INF):
        return _incircle_exact_ccw(a, b, c, d)
    errbound = _ICC_ERR * permanent
    if det > errbound:
        return 1
    if det < -errbound:
        return -1
    return _incircle_exact_ccw(a, b, c, d)


def incircle(a: Point, b: Point, c: Point, d: Point) -> CirclePosition:
    """Exact position of d relative to the circumcircle of a, b, c.

    The defining triple may be given in either orientation (it is normalized
    internally); a collinear triple raises DegenerateCircleError.  The result
    is invariant under cyclic rotation of a, b, c.
    """
    o = _orient2d_sign(a, b, c)
    if o == 0:
        raise DegenerateCircleError(f"collinear circle triple {a}, {b}, {c}")
    if o < 0:
        b, c = c, b
    return _CIRCLE_FROM_SIGN[_incircle_sign_ccw(a, b, c, d)]


@dataclass(frozen=True)
class Circle:
    """Approximate circle: center and squared radius.

    Used for candidate generation only; exact accept/reject decisions about
    a circle are always re-made through ``incircle`` on its defining points.
    """

    center: Point
    radius_sq: float


def circumcircle(a: Point, b: Point, c: Point) -> Circle:
    """Approximate circumcircle of three non-collinear points."""
    if _orient2d_sign(a, b, c) == 0:
        raise DegenerateCircleError(f"collinear circle triple {a}, {b}, {c}")
    bx = b[0] - a[0]
    by = b[1] - a[1]
    cx = c[0] - a[0]
    cy = c[1] - a[1]
    d = 2.0 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = (a[0] + ux, a[1] + uy)
    if not (math.isfinite(center[0]) and math.isfinite(center[1])):
        raise DegenerateCircleError(f"circumcenter overflow for {a}, {b}, {c}")
    return Circle(center, ux * ux + uy * uy)


_ARC_TOL = 1e-9


def arc_points(circle: Circle, start: Point, end: Point,
               through_side: Orientation, k: int) -> list[Point]:
    """k approximate points strictly between start and end on the circle arc
    lying on ``through_side`` of the directed segment start->end.

    The points are ordered from the arc midpoint outward, alternating toward
    each endpoint.  start and end must lie on the circle within a relative
    tolerance of about 1e-9; the returned samples carry ordinary
    floating-point error and must be validated exactly by the caller.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if through_side == COLLINEAR:
        raise ValueError("through_side must be CLOCKWISE or COUNTERCLOCKWISE")
    if circle.radius_sq <= 0.0:
        raise DegenerateCircleError("zero-radius circle has no arc")
    if start == end:
        raise ValueError("empty arc: start == end")
    cx, cy = circle.center
    r2 = circle.radius_sq
    tol = _ARC_TOL * (r2 + 1.0)
    for p in (start, end):
        d2 = (p[0] - cx) ** 2 + (p[1] - cy) ** 2
        if abs(d2 - r2) > tol + _ARC_TOL * d2:
            raise ValueError(f"point {p} does not lie on the circle")

    th1 = math.atan2(start[1] - cy, start[0] - cx)
    th2 = math.atan2(end[1] - cy, end[0] - cx)
    sweep_ccw = (th2 - th1) % (2.0 * math.pi)
    if sweep_ccw == 0.0:
        raise ValueError("empty arc: endpoints coincide on the circle")
    r = math.sqrt(r2)

    def at(sweep: float, t: float) -> Point:
        th = th1 + sweep * t
        return (cx + r * math.cos(th), cy + r * math.sin(th))

    mid = at(sweep_ccw, 0.5)
    sweep = sweep_ccw if orient2d(start, end, mid) == through_side else sweep_ccw - 2.0 * math.pi

    # fractions (i+1)/(k+1), emitted midpoint-first then alternating outward;
    # |2(i+1)-(k+1)| is an exact integer distance from the middle
    order = sorted(range(k), key=lambda i: (abs(2 * (i + 1) - (k + 1)), i))
    return [at(sweep, (i + 1) / (k + 1)) for i in order]


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Exact test: do closed segments p1p2 and q1q2 share any point other
    than a common endpoint?

    Touching only at a shared endpoint returns False; proper crossings,
    endpoint-in-interior contacts and collinear overlaps return True.
    """
    shared = {p1, p2} & {q1, q2}
    if len(shared) == 2:
        return True  # identical (or reversed) segments overlap fully
    o1 = _orient2d_sign(p1, p2, q1)
    o2 = _orient2d_sign(p1, p2, q2)
    o3 = _orient2d_sign(q1, q2, p1)
    o4 = _orient2d_sign(q1, q2, p2)
    if ((o1 > 0) != (o2 > 0)) and ((o1 < 0) != (o2 < 0)) \
            and ((o3 > 0) != (o4 > 0)) and ((o3 < 0) != (o4 < 0)) \
            and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        return True
    # collinear / touching cases
    for a, b, c in ((p1, p2, q1), (p1, p2, q2), (q1, q2, p1), (q1, q2, p2)):
        if c in shared:
            continue
        if _orient2d_sign(a, b, c) == 0 and _on_segment_collinear(a, b, c):
            return True
    return False


def _on_segment_collinear(a: Point, b: Point, c: Point) -> bool:
    """c is known collinear with ab; is it on the closed segment?"""
    return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))


# ---------------------------------------------------------------------------
# Vectorized determinant evaluation (for the verification oracles and the
# Steiner placement scans).  Each helper returns (det, errbound) arrays; an
# entry is decided only when |det| > errbound, otherwise the caller must
# escalate that entry to the exact scalar predicate.
# ---------------------------------------------------------------------------

def orient2d_dets(ax, ay, bx, by, cx, cy):
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    err = _CCW_ERR * (np.abs(detleft) + np.abs(detright))
    return det, err


def incircle_dets(ax, ay, bx, by, cx, cy, dx, dy):
    adx = ax - dx
    ady = ay - dy
    bdx = bx - dx
    bdy = by - dy
    cdx = cx - dx
    cdy = cy - dy

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady
    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = ((np.abs(bdxcdy) + np.abs(cdxbdy)) * alift
                 + (np.abs(cdxady) + np.abs(adxcdy)) * blift
                 + (np.abs(adxbdy) + np.abs(bdxady)) * clift)
    return det, _ICC_ERR * permanent
