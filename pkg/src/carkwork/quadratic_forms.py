"""Integral binary quadratic forms, the change-of-variables action, the
element-to-form correspondence, and the reducedness predicates.

Every inequality against sqrt(discriminant) is decided exactly by comparing
squares; no floating point enters any predicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FormClassError, IdentityHasNoForm
from .modular_group import GroupElement

DEGENERATE = "degenerate"
POSITIVE_DEFINITE = "positive_definite"
NEGATIVE_DEFINITE = "negative_definite"
INDEFINITE = "indefinite"


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    root = math.isqrt(n)
    return root * root == n


@dataclass(frozen=True, slots=True)
class QuadForm:
    """The form a*x^2 + b*x*y + c*y^2 with exact integer coefficients.

    No normalization is applied: non-primitive forms are representable and
    primitivity is a queryable predicate.
    """

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __neg__(self) -> "QuadForm":
        return QuadForm(-self.a, -self.b, -self.c)

    def __repr__(self):
        return f"QuadForm({self.a}, {self.b}, {self.c})"


def discriminant(f: QuadForm) -> int:
    return f.discriminant


def evaluate(f: QuadForm, x: int, y: int) -> int:
    return f.evaluate(x, y)


def classify_form(f: QuadForm) -> str:
    d = f.discriminant
    if _is_square(d):
        return DEGENERATE
    if d < 0:
        return POSITIVE_DEFINITE if f.a > 0 else NEGATIVE_DEFINITE
    return INDEFINITE


def is_primitive(f: QuadForm) -> bool:
    return math.gcd(math.gcd(f.a, f.b), f.c) == 1


def require_indefinite(f: QuadForm, context: str) -> None:
    cls = classify_form(f)
    if cls != INDEFINITE:
        raise FormClassError(
            f"{context} is defined for indefinite forms only, got {cls} form "
            f"({f.a},{f.b},{f.c})"
        )


def form_of_element(w: GroupElement) -> QuadForm:
    """The primitive form fixed by w: (r, s-p, -q) divided by its content.

    The projective lift is chosen with r > 0 (p > 0 when r = 0) so that the
    coefficient signs are independent of matrix sign normalization.
    """
    p, q, r, s = w.entries()
    if w.is_identity():
        raise IdentityHasNoForm("identity has no associated form")
    sign = 1
    if r < 0 or (r == 0 and p < 0):
        sign = -1
    a, b, c = sign * r, sign * (s - p), sign * -q
    delta = math.gcd(math.gcd(a, b), c)
    return QuadForm(a // delta, b // delta, c // delta)


def act(m: GroupElement, f: QuadForm) -> QuadForm:
    """Change of variables: the form with matrix m^t * M_f * m.

    Right action: act(m2, act(m1, f)) == act(m1 * m2, f).  The discriminant
    is preserved.
    """
    p, q, r, s = m.entries()
    a, b, c = f.a, f.b, f.c
    return QuadForm(
        a * p * p + b * p * r + c * r * r,
        2 * (a * p * q + c * r * s) + b * (p * s + q * r),
        a * q * q + b * q * s + c * s * s,
    )


def _lt_sqrt(x: int, d: int) -> bool:
    """x < sqrt(d), exactly (d > 0, non-square)."""
    return x < 0 or x * x < d


def _sqrt_lt(d: int, x: int) -> bool:
    """sqrt(d) < x, exactly (d > 0, non-square)."""
    return x > 0 and d < x * x


def is_gauss_reduced(f: QuadForm) -> bool:
    """Gauss: |sqrt(D) - 2|a|| < b < sqrt(D)."""
    require_indefinite(f, "Gauss reducedness")
    d = f.discriminant
    b = f.b
    if not (b > 0 and _lt_sqrt(b, d)):
        return False
    two_a = 2 * abs(f.a)
    # |sqrt(D) - 2|a|| < b  <=>  2|a| - b < sqrt(D) and sqrt(D) < 2|a| + b
    return _lt_sqrt(two_a - b, d) and _sqrt_lt(d, two_a + b)


def is_zagier_reduced(f: QuadForm) -> bool:
    """Zagier: sqrt(D) < b < sqrt(D) + 2a and sqrt(D) < b < sqrt(D) + 2c."""
    require_indefinite(f, "Zagier reducedness")
    d = f.discriminant
    b = f.b
    return (
        _sqrt_lt(d, b)
        and _lt_sqrt(b - 2 * f.a, d)
        and _lt_sqrt(b - 2 * f.c, d)
    )


def is_lagrange_reduced(f: QuadForm) -> bool:
    """Lagrange: |b| <= a <= c, with b >= 0 if a == c or |b| == a."""
    if classify_form(f) != POSITIVE_DEFINITE:
        raise FormClassError(
            "Lagrange reducedness is defined for positive definite forms only"
        )
    a, b, c = f.a, f.b, f.c
    if not (abs(b) <= a <= c):
        return False
    if (a == c or abs(b) == a) and b < 0:
        return False
    return True


def is_on_spine(f: QuadForm) -> bool:
    """Semi-reduced test: the form labels a spine edge iff a*c < 0."""
    require_indefinite(f, "spine membership")
    return f.a * f.c < 0
