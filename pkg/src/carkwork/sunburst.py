"""The slit-disk (sunburst) cell model of PSL2(Z).

Cells are words: annulus 0 holds I, L, L2 as three equal sectors; an
S-ending cell spawns the children WL and WL2 (its interval split in half),
any other cell spawns the single child WS.  Angular intervals are exact
fractions of a turn, so adjacency is decided without floating point.

The disk is slit along the three radial lines bounding the I, L and L2
principal sectors: cells never touch across a slit, which is what makes the
word-length neighbor laws hold uniformly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import tau
from typing import Optional

from .errors import DepthError
from .modular_group import EMPTY_WORD, Word

DEFAULT_MAX_DEPTH = 12
BASE_RADIUS = 1.0
ANNULUS_THICKNESS = 1.0

_SLITS = (Fraction(0), Fraction(1, 3), Fraction(2, 3))


def max_depth() -> int:
    override = os.environ.get("CARKWORK_MAX_DEPTH")
    return int(override) if override else DEFAULT_MAX_DEPTH


@dataclass(frozen=True, slots=True)
class SunburstCell:
    """One cell: its position word, displayed word (differs after a
    recentering), annulus index, angular interval in turns, and the index of
    its parent cell in the layout."""

    word: Word
    display: Word
    annulus: int
    t0: Fraction
    t1: Fraction
    parent: Optional[int]


@dataclass(frozen=True, slots=True)
class SunburstLayout:
    cells: tuple[SunburstCell, ...]
    depth: int
    center: Word

    def index_of(self, word: Word) -> int:
        for i, cell in enumerate(self.cells):
            if cell.word == word:
                return i
        raise KeyError(f"cell {word.to_string()!r} not in layout")


def enumerate_cells(depth: int, center: Word = EMPTY_WORD) -> SunburstLayout:
    """All cells in annuli 0..depth; each displays center * position."""
    if depth < 0:
        raise DepthError("depth must be non-negative")
    if depth > max_depth():
        raise DepthError(f"depth {depth} exceeds the configured maximum {max_depth()}")

    cells: list[SunburstCell] = []

    def add(word: Word, annulus: int, t0: Fraction, t1: Fraction, parent: Optional[int]) -> int:
        cells.append(SunburstCell(word, center * word, annulus, t0, t1, parent))
        return len(cells) - 1

    ring = [
        add(Word(()), 0, Fraction(0), Fraction(1, 3), None),
        add(Word(("L",)), 0, Fraction(1, 3), Fraction(2, 3), None),
        add(Word(("L2",)), 0, Fraction(2, 3), Fraction(1), None),
    ]
    for annulus in range(1, depth + 1):
        nxt: list[int] = []
        for idx in ring:
            cell = cells[idx]
            word = cell.word
            if word.letters and word.letters[-1] == "S":
                mid = (cell.t0 + cell.t1) / 2
                nxt.append(add(Word(word.letters + ("L",)), annulus, cell.t0, mid, idx))
                nxt.append(add(Word(word.letters + ("L2",)), annulus, mid, cell.t1, idx))
            else:
                nxt.append(add(Word(word.letters + ("S",)), annulus, cell.t0, cell.t1, idx))
        ring = nxt
    return SunburstLayout(tuple(cells), depth, center)


def recenter(center_word: Word, depth: int) -> SunburstLayout:
    """Layout whose cell at position V displays the element center * V."""
    return enumerate_cells(depth, center=center_word.normalized())


def neighbors(cell: SunburstCell, layout: SunburstLayout) -> list[SunburstCell]:
    """Cells sharing a positive-length boundary with ``cell``: parent,
    children, and same-annulus cells across non-slit radial lines."""
    idx = layout.index_of(cell.word)
    out: list[SunburstCell] = []
    for i, other in enumerate(layout.cells):
        if i == idx:
            continue
        if other.parent == idx or cell.parent == i:
            out.append(other)
        elif other.annulus == cell.annulus:
            for boundary in (cell.t0, cell.t1):
                if boundary in _SLITS:
                    continue
                if other.t0 == boundary or other.t1 == boundary:
                    out.append(other)
                    break
    return out


def path_to_root(cell: SunburstCell, layout: SunburstLayout) -> list[SunburstCell]:
    """Ancestor chain from the cell to its annulus-0 ancestor."""
    chain = [cell]
    current = cell
    while current.parent is not None:
        current = layout.cells[current.parent]
        chain.append(current)
    return chain


def cell_geometry(cell: SunburstCell) -> tuple[tuple[float, float], tuple[float, float]]:
    """((inner radius, outer radius), (start angle, end angle)) in radians."""
    inner = BASE_RADIUS + cell.annulus * ANNULUS_THICKNESS
    return (
        (inner, inner + ANNULUS_THICKNESS),
        (float(cell.t0) * tau, float(cell.t1) * tau),
    )
