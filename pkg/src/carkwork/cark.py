"""Spine enumeration, spine signatures, paths on the spine, and expansion of
a cark graph for visualization.

The spine of an indefinite form's cark carries exactly the semi-reduced
(a*c < 0) members of its class.  Walking the spine alternates an S move
across a degree-2 vertex with an L or L2 turn at a degree-3 vertex; both
intermediate forms are semi-reduced and both are collected, so one turn of
the loop contributes two forms and one signature letter.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .errors import SpineError, StepLimitExceeded
from .modular_group import GEN_L, GEN_L2, GEN_S, GroupElement, Word, word_to_matrix
from .quadratic_forms import QuadForm, act, is_on_spine, require_indefinite
from .reduction import cark_reduce_path

_SPINE_STEP_CAP = 1_000_000


@dataclass(frozen=True, slots=True)
class SpineCycle:
    """All semi-reduced forms of a class in cyclic walk order, starting at
    the queried form, plus the L/L2 turn letters (one per degree-3 vertex)."""

    forms: tuple[QuadForm, ...]
    signature: Word
    base_index: int = 0

    def __len__(self) -> int:
        return len(self.forms)


def revolve_around_spine(f: QuadForm) -> SpineCycle:
    """Travel once around the spine of f's cark, collecting every
    semi-reduced form encountered."""
    if not is_on_spine(f):
        raise SpineError(f"form ({f.a},{f.b},{f.c}) is not on the spine")
    forms: list[QuadForm] = [f]
    turns: list[str] = []
    current = f
    for _ in range(_SPINE_STEP_CAP):
        current = _spine_move(current, turns)
        if current == f:
            return SpineCycle(tuple(forms), Word(tuple(turns)))
        forms.append(current)
    raise StepLimitExceeded(f"spine walk did not close on {f}")


def _spine_move(current: QuadForm, turns: list[str]) -> QuadForm:
    """One oriented step along the spine.

    Every move flips the sign of the leading coefficient, so the sign of a
    picks the move type: a > 0 crosses the degree-2 vertex (S), a < 0 turns
    at the degree-3 vertex (L, or L2 when L leaves the spine).  Keying the
    phase to the form itself makes the travel direction independent of the
    entry point, which is what keeps signatures rotation-comparable.
    """
    if current.a > 0:
        return act(GEN_S, current)
    current = act(GEN_L, current)
    if current.a * current.c > 0:
        current = act(GEN_L, current)
        turns.append("L2")
    else:
        turns.append("L")
    return current


def _least_rotation(letters: tuple[str, ...]) -> tuple[str, ...]:
    if not letters:
        return letters
    candidates = [letters[i:] + letters[:i] for i in range(len(letters))]
    return min(candidates)


def spine_signature(cycle: SpineCycle) -> Word:
    """The turn sequence canonicalized to its lexicographically least
    rotation (L sorts before L2), making it independent of the entry form."""
    return Word(_least_rotation(cycle.signature.letters))


def path_on_spine(f_from: QuadForm, f_to: QuadForm) -> Word:
    """A word w with act(word_to_matrix(w), f_from) == f_to, found by walking
    the spine; f_from == f_to yields a full revolution (an automorph word).

    Raises after one full revolution if f_to is not on f_from's spine.
    """
    if not is_on_spine(f_from):
        raise SpineError(f"form ({f_from.a},{f_from.b},{f_from.c}) is not on the spine")
    letters: list[str] = []
    current = f_from
    for _ in range(_SPINE_STEP_CAP):
        turns: list[str] = []
        nxt = _spine_move(current, turns)
        letters.extend(turns if turns else ["S"])
        current = nxt
        if current == f_to:
            return Word(tuple(letters))
        if current == f_from:
            raise SpineError(
                f"form ({f_to.a},{f_to.b},{f_to.c}) is not on the spine of "
                f"({f_from.a},{f_from.b},{f_from.c})"
            )
    raise StepLimitExceeded("spine path walk did not terminate")


def reverse_path(w: Word) -> Word:
    """Word of the inverse element: reversed letters with S<->S, L<->L2."""
    return w.inverse()


@dataclass(frozen=True, slots=True)
class CarkNode:
    id: str
    kind: str  # "circ" (valency <= 2) or "bullet" (valency <= 3)


@dataclass(frozen=True, slots=True)
class CarkEdge:
    id: str
    node_from: str
    node_to: str
    form: QuadForm
    on_spine: bool
    depth: int
    marked: bool


@dataclass(frozen=True, slots=True)
class CarkGraph:
    nodes: tuple[CarkNode, ...]
    edges: tuple[CarkEdge, ...]
    signature: Word


def expand_cark(f: QuadForm, depth: int) -> CarkGraph:
    """The full spine of f's class plus Farey-component trees expanded to
    ``depth`` edges off each spine degree-3 vertex.

    The edge carrying f is marked; if f is off-spine and its edge lies beyond
    the expansion, the spine edge where its reduction path lands is marked
    instead.
    """
    require_indefinite(f, "cark expansion")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if is_on_spine(f):
        base = f
    else:
        base = cark_reduce_path(f).end
    cycle = revolve_around_spine(base)
    forms = cycle.forms
    n = len(forms)

    nodes: list[CarkNode] = []
    edges: list[CarkEdge] = []
    # Spine vertices: v[i] sits between forms[i] and forms[i+1]; the move
    # across v[i] is S (circ vertex) when forms[i].a > 0, an L/L2 turn
    # (bullet vertex) otherwise.
    for i in range(n):
        kind = "circ" if forms[i].a > 0 else "bullet"
        nodes.append(CarkNode(f"v{i}", kind))
    for i in range(n):
        edges.append(
            CarkEdge(
                f"e{i}",
                f"v{(i - 1) % n}",
                f"v{i}",
                forms[i],
                True,
                0,
                forms[i] == f,
            )
        )

    counter = [0]

    def fresh_node(kind: str) -> CarkNode:
        node = CarkNode(f"t{counter[0]}", kind)
        counter[0] += 1
        nodes.append(node)
        return node

    def fresh_edge(parent: str, child: str, form: QuadForm, d: int) -> None:
        edges.append(
            CarkEdge(
                f"f{len(edges)}", parent, child, form, False, d, form == f
            )
        )

    def grow(node_id: str, form: QuadForm, d: int, at_bullet: bool) -> None:
        """Extend the tree hanging below the edge ``form`` whose far endpoint
        is ``node_id``; at a circ vertex the single continuation is an S
        move, at a bullet vertex the two continuations are L and L2 turns."""
        if d > depth:
            return
        if at_bullet:
            for gen in (GEN_L, GEN_L2):
                child_form = act(gen, form)
                child = fresh_node("circ")
                fresh_edge(node_id, child.id, child_form, d)
                grow(child.id, child_form, d + 1, at_bullet=False)
        else:
            child_form = act(GEN_S, form)
            child = fresh_node("bullet")
            fresh_edge(node_id, child.id, child_form, d)
            grow(child.id, child_form, d + 1, at_bullet=True)

    if depth >= 1:
        # Free slot at each bullet vertex: the three edges there are
        # forms[i], the next spine form act(L or L2, forms[i]), and the
        # remaining rotation.  Turn moves are every other move, so the turn
        # taken at v[i] is signature letter i // 2 for either phase.
        for i in range(n):
            g = forms[i]
            if g.a > 0:
                continue
            turn = cycle.signature.letters[i // 2]
            other = GEN_L2 if turn == "L" else GEN_L
            root_form = act(other, g)
            child = fresh_node("circ")
            fresh_edge(f"v{i}", child.id, root_form, 1)
            grow(child.id, root_form, 2, at_bullet=False)

    if not any(e.marked for e in edges):
        # off-spine query whose own edge lies beyond the expansion: mark the
        # spine edge where its reduction path lands
        edges[0] = replace(edges[0], marked=True)

    return CarkGraph(tuple(nodes), tuple(edges), spine_signature(cycle))
