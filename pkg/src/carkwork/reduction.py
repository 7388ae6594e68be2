"""Reduction of binary quadratic forms with full path recording.

Three reducers: Gauss's rho-operator iteration for indefinite forms, the
letter-level walk from an off-spine edge down to the spine, and Lagrange
reduction for positive definite forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import FormClassError, StepLimitExceeded
from .modular_group import (
    GEN_L,
    GEN_L2,
    GEN_S,
    GroupElement,
    IDENTITY,
    Word,
    multiply,
    word_to_matrix,
)
from .quadratic_forms import (
    POSITIVE_DEFINITE,
    QuadForm,
    act,
    classify_form,
    is_gauss_reduced,
    is_lagrange_reduced,
    is_on_spine,
    require_indefinite,
)

_LETTER_MATRIX = {"S": GEN_S, "L": GEN_L, "L2": GEN_L2}


@dataclass(frozen=True, slots=True)
class ReductionStep:
    """One recorded step: the matrix applied and the form it produced.

    ``label`` is a generator letter or "rho"; for rho steps ``letters`` spells
    the same matrix as a generator word.
    """

    label: str
    matrix: GroupElement
    letters: tuple[str, ...]
    form_after: QuadForm


@dataclass(frozen=True, slots=True)
class ReductionPath:
    start: QuadForm
    end: QuadForm
    steps: tuple[ReductionStep, ...]
    total_matrix: GroupElement
    negated: bool = False

    def letters(self) -> Word:
        out: list[str] = []
        for step in self.steps:
            out.extend(step.letters)
        return Word(tuple(out)).normalized()

    def verify(self) -> bool:
        return act(self.total_matrix, self.start) == self.end

    def __len__(self) -> int:
        return len(self.steps)


def _empty_path(f: QuadForm) -> ReductionPath:
    return ReductionPath(f, f, (), IDENTITY)


def _step_cap(f: QuadForm) -> int:
    biggest = max(abs(f.a), abs(f.b), abs(f.c), 1)
    return 64 + 4 * biggest.bit_length()


def rho_normalization(f: QuadForm) -> int:
    """The integer s(f) in U(f) = (0 -1; 1 s(f)).

    The new middle coefficient b' = 2*c*s - b is placed in (-|c|, |c|] when
    |c| >= sqrt(D), and in (sqrt(D) - 2|c|, sqrt(D)) otherwise; both windows
    contain exactly one member of the congruence class of -b mod 2|c|.
    """
    require_indefinite(f, "rho operator")
    if f.c == 0:
        raise FormClassError("degenerate direction: c = 0", code="degenerate_direction")
    d = f.discriminant
    b, c = f.b, f.c
    ac = abs(c)
    root = math.isqrt(d)
    if ac * ac > d:
        b_new = ac - (ac + b) % (2 * ac)
    else:
        b_new = root - (root + b) % (2 * ac)
    s, rem = divmod(b_new + b, 2 * c)
    assert rem == 0
    return s


def rho_matrix(s: int) -> GroupElement:
    return GroupElement(0, -1, 1, s)


def rho_letters(s: int) -> tuple[str, ...]:
    """U(f) = S * T^s spelled over {S, L, L2} (T = LS, T^-1 = S L2)."""
    if s >= 0:
        return ("S",) + ("L", "S") * s
    return ("L2",) + ("S", "L2") * (-s - 1)


def rho_step(f: QuadForm) -> tuple[QuadForm, GroupElement]:
    """One application of the reduction operator: (act(U(f), f), U(f))."""
    s = rho_normalization(f)
    u = rho_matrix(s)
    g = act(u, f)
    assert g.a == f.c
    return g, u


def gauss_reduce(f: QuadForm) -> ReductionPath:
    """Iterate rho until the form is Gauss reduced; record every step."""
    require_indefinite(f, "Gauss reduction")
    steps: list[ReductionStep] = []
    total = IDENTITY
    current = f
    trail: list[QuadForm] = [f]
    for _ in range(_step_cap(f)):
        if is_gauss_reduced(current):
            # Along the iteration, three consecutive non-reduced forms force
            # |a| >= 2|c| at the first of them, which is what makes the
            # coefficient sizes halve.  This holds for forms in the image of
            # rho (the raw input form has no normalization to lean on), so
            # the window starts at step 1.
            for i in range(1, len(trail) - 2):
                window = trail[i : i + 3]
                if not any(is_gauss_reduced(g) for g in window):
                    assert abs(window[0].a) >= 2 * abs(window[0].c), window[0]
            return ReductionPath(f, current, tuple(steps), total)
        s = rho_normalization(current)
        u = rho_matrix(s)
        current = act(u, current)
        total = multiply(total, u)
        steps.append(ReductionStep("rho", u, rho_letters(s), current))
        trail.append(current)
    raise StepLimitExceeded(f"Gauss reduction exceeded step cap on {f}")


def cark_reduce_path(f: QuadForm) -> ReductionPath:
    """Walk from the edge of f to the spine (a*c < 0), one letter per step.

    Off-spine forms are pushed along rho steps spelled out as generator
    letters; the walk stops at the first semi-reduced form.  An on-spine
    input yields the empty path.
    """
    require_indefinite(f, "cark reduction")
    if is_on_spine(f):
        return _empty_path(f)
    steps: list[ReductionStep] = []
    total = IDENTITY
    current = f
    for _ in range(_step_cap(f)):
        s = rho_normalization(current)
        for letter in rho_letters(s):
            m = _LETTER_MATRIX[letter]
            current = act(m, current)
            total = multiply(total, m)
            steps.append(ReductionStep(letter, m, (letter,), current))
        if current.a * current.c < 0:
            return ReductionPath(f, current, tuple(steps), total)
    raise StepLimitExceeded(f"cark reduction exceeded step cap on {f}")


def lagrange_reduce(f: QuadForm) -> ReductionPath:
    """Reduce a positive definite form to the unique Lagrange-reduced
    representative of its class."""
    if classify_form(f) != POSITIVE_DEFINITE:
        raise FormClassError(
            "Lagrange reduction is defined for positive definite forms only"
        )
    steps: list[ReductionStep] = []
    total = IDENTITY

    def apply_letters(current: QuadForm, letters: tuple[str, ...], label: str) -> QuadForm:
        nonlocal total
        m = word_to_matrix(letters)
        current = act(m, current)
        total = multiply(total, m)
        steps.append(ReductionStep(label, m, letters, current))
        return current

    current = f
    for _ in range(_step_cap(f)):
        a, b, c = current.coefficients()
        if b > a or b <= -a:
            # translate b into (-a, a]
            k = (a - b) // (2 * a)
            letters = ("L", "S") * k if k > 0 else ("S", "L2") * (-k)
            current = apply_letters(current, letters, f"T^{k}")
            continue
        if a > c:
            current = apply_letters(current, ("S",), "S")
            continue
        if a == c and b < 0:
            current = apply_letters(current, ("S",), "S")
        assert is_lagrange_reduced(current)
        return ReductionPath(f, current, tuple(steps), total)
    raise StepLimitExceeded(f"Lagrange reduction exceeded step cap on {f}")


def reduce_form(f: QuadForm, method: str) -> ReductionPath:
    """Dispatch used by the CLI and service.

    ``lagrange`` additionally accepts negative definite forms by reducing -f
    and negating back; the result carries negated=True.
    """
    if method == "gauss":
        return gauss_reduce(f)
    if method == "cark":
        return cark_reduce_path(f)
    if method == "lagrange":
        if classify_form(f) == "negative_definite":
            path = lagrange_reduce(-f)
            steps = tuple(
                ReductionStep(s.label, s.matrix, s.letters, -s.form_after)
                for s in path.steps
            )
            return ReductionPath(f, -path.end, steps, path.total_matrix, negated=True)
        return lagrange_reduce(f)
    raise ValueError(f"unknown reduction method {method!r}")
