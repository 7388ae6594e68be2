"""The representation problem: given a form f and a nonzero integer n, find
integer pairs with f(x, y) = n.

Indefinite forms are solved by searching the faces of the cark: collect
off-spine neighbors of spinal forms whose values share n's sign, expand them
breadth-first away from the spine pruning coefficients that exceed |n|, and
assemble the path back to the queried edge.  Definite forms are solved by
bounded enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .cark import path_on_spine, revolve_around_spine
from .errors import FormClassError, SolveError
from .modular_group import (
    GEN_L,
    GEN_L2,
    GroupElement,
    Word,
    inverse,
    multiply,
    word_to_matrix,
)
from .quadratic_forms import (
    INDEFINITE,
    NEGATIVE_DEFINITE,
    POSITIVE_DEFINITE,
    QuadForm,
    act,
    classify_form,
    is_on_spine,
    is_primitive,
    require_indefinite,
)
from .reduction import cark_reduce_path

_GENERATION_CAP = 100_000


@dataclass(frozen=True, slots=True)
class Solution:
    x: int
    y: int

    def pair(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True, slots=True)
class SolveResult:
    """Full solver outcome: the seed solution (or None), the path word from
    the found face back to the query edge, and per-generation frontier sizes
    kept as telemetry."""

    solution: Optional[Solution]
    path_letters: Optional[Word]
    frontier_sizes: tuple[int, ...]


def _check_query(f: QuadForm, n: int) -> None:
    if n == 0:
        raise SolveError("query zero not supported", code="query_zero")
    require_indefinite(f, "representation solver")
    if not is_primitive(f):
        raise SolveError("representation solver requires a primitive form")


def solve_form_detailed(f: QuadForm, n: int) -> SolveResult:
    """Solve f(x, y) = n, imprimitive representations included.

    The face search only sees primitive values (faces of the cark are labeled
    by values at primitive vectors), so each square divisor d^2 of n is tried
    against n / d^2 and the winning pair is scaled back up by d.
    """
    _check_query(f, n)
    first: Optional[SolveResult] = None
    for d in range(1, math.isqrt(abs(n)) + 1):
        if n % (d * d):
            continue
        result = _solve_primitive(f, n // (d * d))
        if first is None:
            first = result
        if result.solution is not None:
            sol = Solution(d * result.solution.x, d * result.solution.y)
            assert f.evaluate(sol.x, sol.y) == n
            return SolveResult(sol, result.path_letters, result.frontier_sizes)
    assert first is not None
    return first


def _solve_primitive(f: QuadForm, n: int) -> SolveResult:
    path1 = cark_reduce_path(f)
    entry1 = path1.end
    spine_forms = revolve_around_spine(entry1).forms

    # off-spine neighbors of spinal forms whose two basis values share n's sign
    roots: list[QuadForm] = []
    seen: set[tuple[int, int, int]] = set()
    for g in spine_forms:
        for gen in (GEN_L, GEN_L2):
            cand = act(gen, g)
            if cand.a * cand.c > 0 and cand.a * n > 0:
                key = cand.coefficients()
                if key not in seen:
                    seen.add(key)
                    roots.append(cand)

    frontier = roots
    frontier_sizes: list[int] = []
    found: Optional[QuadForm] = None
    for _ in range(_GENERATION_CAP):
        if not frontier:
            break
        frontier_sizes.append(len(frontier))
        nxt: list[QuadForm] = []
        nxt_seen: set[tuple[int, int, int]] = set()
        for form in frontier:
            if form.a == n or form.c == n:
                found = form
                break
            for gen in (GEN_L, GEN_L2):
                child = act(gen, act_s(form))
                # prune any face whose basis values already exceed |n|; values
                # equal to |n| must survive to reach the membership check
                if abs(child.a) <= abs(n) and abs(child.c) <= abs(n):
                    key = child.coefficients()
                    if key not in nxt_seen:
                        nxt_seen.add(key)
                        nxt.append(child)
        if found is not None:
            break
        frontier = nxt
    else:
        raise SolveError("face search exceeded generation cap")

    if found is None:
        return SolveResult(None, None, tuple(frontier_sizes))

    basis_index = 0 if found.a == n else 1
    path2 = cark_reduce_path(found)
    entry2 = path2.end
    path3 = path_on_spine(entry2, entry1)
    # matrix taking the found edge to the queried edge
    m = multiply(
        multiply(path2.total_matrix, word_to_matrix(path3)),
        inverse(path1.total_matrix),
    )
    path_letters = (path2.letters() * path3 * path1.letters().inverse()).normalized()

    # act(m, found) == f, so f(m_inv * e_i) == found(e_i) == n
    m_inv = inverse(m)
    candidates = [
        Solution(m_inv.p, m_inv.r),  # m_inv applied to e1
        Solution(m_inv.q, m_inv.s),  # m_inv applied to e2
    ]
    preferred = [candidates[basis_index], candidates[1 - basis_index]]
    for sol in preferred:
        if f.evaluate(sol.x, sol.y) == n:
            return SolveResult(sol, path_letters, tuple(frontier_sizes))
    raise AssertionError(
        f"internal error: neither basis image solves {f} = {n} "
        f"(candidates {candidates})"
    )


def act_s(form: QuadForm) -> QuadForm:
    # S swaps the outer coefficients and negates the middle one
    return QuadForm(form.c, -form.b, form.a)


def solve_form(f: QuadForm, n: int) -> Optional[Solution]:
    """One integer pair with f(x, y) = n, or None when the face search
    exhausts without finding a face labeled n."""
    return solve_form_detailed(f, n).solution


def automorph(f: QuadForm) -> GroupElement:
    """A nonidentity element fixing f: the full spine revolution at f's
    spine edge, conjugated back along the reduction path when f is
    off-spine."""
    require_indefinite(f, "automorph")
    if is_on_spine(f):
        a = word_to_matrix(path_on_spine(f, f))
    else:
        path = cark_reduce_path(f)
        base = word_to_matrix(path_on_spine(path.end, path.end))
        m = path.total_matrix
        a = multiply(multiply(m, base), inverse(m))
    assert not a.is_identity()
    assert act(a, f) == f
    return a


def apply_automorph(a: GroupElement, sol: Solution) -> Solution:
    """Transport a solution along the automorph (column action)."""
    return Solution(a.p * sol.x + a.q * sol.y, a.r * sol.x + a.s * sol.y)


def enumerate_solutions(f: QuadForm, n: int, count: int) -> list[Solution]:
    """``count`` distinct pairs from the automorph orbit of a seed solution;
    empty when no solution exists."""
    if count < 1:
        raise ValueError("count must be positive")
    seed = solve_form(f, n)
    if seed is None:
        return []
    a = automorph(f)
    out = [seed]
    seen = {seed.pair()}
    current = seed
    while len(out) < count:
        current = apply_automorph(a, current)
        assert f.evaluate(current.x, current.y) == n
        if current.pair() in seen:
            raise AssertionError("automorph orbit unexpectedly cycled")
        seen.add(current.pair())
        out.append(current)
    return out


def solve_definite(f: QuadForm, n: int) -> list[Solution]:
    """The complete, finite solution list for a definite form, by bounded
    enumeration of y with exact root extraction for x."""
    if n == 0:
        raise SolveError("query zero not supported", code="query_zero")
    cls = classify_form(f)
    if cls not in (POSITIVE_DEFINITE, NEGATIVE_DEFINITE):
        raise FormClassError("solve_definite requires a definite form")
    if cls == NEGATIVE_DEFINITE:
        return solve_definite(-f, -n)
    if n < 0:
        return []
    a, b, c = f.coefficients()
    d = -f.discriminant  # positive
    solutions: list[Solution] = []
    y_bound = math.isqrt(4 * a * n // d)
    for y in range(-y_bound, y_bound + 1):
        # a x^2 + (b y) x + (c y^2 - n) = 0
        disc = b * b * y * y - 4 * a * (c * y * y - n)
        if disc < 0:
            continue
        root = math.isqrt(disc)
        if root * root != disc:
            continue
        for sign in ((root, -root) if root else (0,)):
            num = -b * y + sign
            if num % (2 * a) == 0:
                solutions.append(Solution(num // (2 * a), y))
    for sol in solutions:
        assert f.evaluate(sol.x, sol.y) == n
    return solutions
