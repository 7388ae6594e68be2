"""Geodesics of hyperbolic elements and indefinite forms, in the upper half
plane and the unit disk.

Half-plane data is exact (rational center and radius squared, quadratic-surd
endpoints); floating point appears only at the disk transform and sampling
boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import GeodesicError
from .modular_group import GroupElement, HYPERBOLIC, classify_element
from .quadratic_forms import INDEFINITE, QuadForm, classify_form, form_of_element

HALF_PLANE = "half_plane"
DISK = "disk"


@dataclass(frozen=True, slots=True)
class Surd:
    """The exact real number p + q*sqrt(d), with rational p, q and a positive
    non-square integer d."""

    p: Fraction
    q: Fraction
    d: int

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(float(self.d))

    def __eq__(self, other) -> bool:
        # d is not required to be squarefree, so compare q^2*d with signs
        if not isinstance(other, Surd):
            return NotImplemented
        return (
            self.p == other.p
            and (self.q > 0) == (other.q > 0)
            and self.q * self.q * self.d == other.q * other.q * other.d
        )

    def __hash__(self):
        return hash((self.p, self.q > 0, self.q * self.q * self.d))


@dataclass(frozen=True, slots=True)
class Geodesic:
    """Half circle in the upper half plane with its feet on the real axis."""

    center: Fraction
    radius_squared: Fraction
    endpoints: tuple[Surd, Surd]  # ordered by value: left, right
    model: str = HALF_PLANE

    @property
    def radius(self) -> float:
        return math.sqrt(float(self.radius_squared))


@dataclass(frozen=True, slots=True)
class DiskGeodesic:
    """Image of a half-plane geodesic in the unit disk: a circular arc
    meeting the boundary circle orthogonally, or a diameter."""

    endpoints: tuple[complex, complex]
    center: Optional[complex]  # None for a diameter
    radius: Optional[float]
    source: Geodesic
    model: str = DISK


def _geodesic_from_triple(a: int, b: int, c: int, d: int) -> Geodesic:
    left = Surd(Fraction(-b, 2 * a), Fraction(-1, 2 * a) if a < 0 else Fraction(1, 2 * a), d)
    right = Surd(Fraction(-b, 2 * a), Fraction(1, 2 * a) if a < 0 else Fraction(-1, 2 * a), d)
    # order by value: the +sqrt branch is larger iff its q > 0
    lo, hi = (right, left) if left.q > 0 else (left, right)
    return Geodesic(Fraction(-b, 2 * a), Fraction(d, 4 * a * a), (lo, hi))


def geodesic_of_element(w: GroupElement) -> Geodesic:
    """The half circle joining the two real fixed points of a hyperbolic
    element: center (p-s)/2r, radius sqrt(tr^2 - 4)/2|r|."""
    if classify_element(w) != HYPERBOLIC:
        raise GeodesicError(
            f"no real geodesic: element is {classify_element(w)}"
        )
    if w.r == 0:
        raise GeodesicError("vertical-line geodesic (r = 0)")
    tr = w.trace
    # fixed points are the roots of r z^2 + (s - p) z - q = 0
    return _geodesic_from_triple(w.r, w.s - w.p, -w.q, tr * tr - 4)


def geodesic_of_form(f: QuadForm) -> Geodesic:
    """Endpoints (-b +- sqrt(D))/(2a), the roots of a z^2 + b z + c."""
    if classify_form(f) != INDEFINITE:
        raise GeodesicError(
            f"no geodesic: form is {classify_form(f)}"
        )
    if f.a == 0:
        raise GeodesicError("vertical geodesic (a = 0)")
    return _geodesic_from_triple(f.a, f.b, f.c, f.discriminant)


def cayley(z: complex) -> complex:
    """Upper half plane to unit disk: z -> (z - i)/(z + i)."""
    return (z - 1j) / (z + 1j)


def cayley_inverse(w: complex) -> complex:
    return 1j * (1 + w) / (1 - w)


def to_disk(obj: Union[complex, Geodesic]) -> Union[complex, DiskGeodesic]:
    """Cayley transform of a point or of a whole geodesic."""
    if isinstance(obj, Geodesic):
        u = cayley(complex(float(obj.endpoints[0])))
        v = cayley(complex(float(obj.endpoints[1])))
        # circle orthogonal to the unit circle through u and v:
        # Re(z0 * conj(u)) = 1 and Re(z0 * conj(v)) = 1
        det = u.real * v.imag - u.imag * v.real
        if abs(det) < 1e-12:
            return DiskGeodesic((u, v), None, None, obj)
        x0 = (v.imag - u.imag) / det
        y0 = (u.real - v.real) / det
        z0 = complex(x0, y0)
        return DiskGeodesic((u, v), z0, math.sqrt(abs(z0) ** 2 - 1), obj)
    return cayley(obj)


def sample_geodesic(g: Union[Geodesic, DiskGeodesic], n: int) -> list[complex]:
    """n points along the arc, monotone in angle, endpoints included."""
    if n < 2:
        raise ValueError("need at least 2 sample points")
    if isinstance(g, DiskGeodesic):
        return [cayley(z) for z in sample_geodesic(g.source, n)]
    cx = float(g.center)
    radius = g.radius
    points = []
    for i in range(n):
        theta = math.pi * (1 - i / (n - 1))
        points.append(complex(cx + radius * math.cos(theta), radius * math.sin(theta)))
    return points
