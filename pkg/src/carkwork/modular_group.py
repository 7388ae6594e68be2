"""Exact arithmetic on PSL2(Z): matrices, words over {S, L, L2}, and their
correspondence.

Matrices are kept as canonical representatives of {M, -M}: the first nonzero
entry of (p, q, r, s) is positive.  The generators follow the convention
L = (1 -1; 1 0), S = (0 -1; 1 0), of orders 3 and 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

ELLIPTIC = "elliptic"
PARABOLIC = "parabolic"
HYPERBOLIC = "hyperbolic"

# Letter tokens.  "L2" stands for L squared and counts as a single letter.
LETTERS = ("S", "L", "L2")


@dataclass(frozen=True, slots=True)
class GroupElement:
    """An element of PSL2(Z), stored as the sign-normalized integral matrix
    (p q; r s) with determinant one."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        p, q, r, s = self.p, self.q, self.r, self.s
        if p * s - q * r != 1:
            raise ValueError(f"determinant is {p * s - q * r}, expected 1")
        for entry in (p, q, r, s):
            if entry > 0:
                break
            if entry < 0:
                object.__setattr__(self, "p", -p)
                object.__setattr__(self, "q", -q)
                object.__setattr__(self, "r", -r)
                object.__setattr__(self, "s", -s)
                break

    @property
    def trace(self) -> int:
        return self.p + self.s

    def entries(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def is_identity(self) -> bool:
        return self.p == 1 and self.q == 0 and self.r == 0 and self.s == 1

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __repr__(self):
        return f"GroupElement({self.p}, {self.q}, {self.r}, {self.s})"


IDENTITY = GroupElement(1, 0, 0, 1)
GEN_S = GroupElement(0, -1, 1, 0)
GEN_L = GroupElement(1, -1, 1, 0)
GEN_L2 = GroupElement(0, -1, 1, -1)
GEN_T = GroupElement(1, 1, 0, 1)  # T = L*S, used internally for decomposition

_GENERATOR = {"S": GEN_S, "L": GEN_L, "L2": GEN_L2}


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """Sign-normalized product a*b."""
    return GroupElement(
        a.p * b.p + a.q * b.r,
        a.p * b.q + a.q * b.s,
        a.r * b.p + a.s * b.r,
        a.r * b.q + a.s * b.s,
    )


def inverse(a: GroupElement) -> GroupElement:
    return GroupElement(a.s, -a.q, -a.r, a.p)


def classify_element(w: GroupElement) -> str:
    """Trace classification: elliptic (|tr|<2), parabolic (=2), hyperbolic (>2)."""
    t = abs(w.trace)
    if t < 2:
        return ELLIPTIC
    if t == 2:
        return PARABOLIC
    return HYPERBOLIC


def _invert_letter(letter: str) -> str:
    if letter == "L":
        return "L2"
    if letter == "L2":
        return "L"
    return "S"


def _reduce_letters(letters: Iterable[str]) -> tuple[str, ...]:
    """Free-product reduction in Z/2 * Z/3.

    Adjacent S letters cancel; adjacent L-type letters combine mod 3.  The
    result is the unique normal form of the product.
    """
    stack: list[str] = []
    for letter in letters:
        if letter not in LETTERS:
            raise ValueError(f"unknown letter {letter!r}")
        stack.append(letter)
        while len(stack) >= 2:
            x, y = stack[-2], stack[-1]
            if x == "S" and y == "S":
                del stack[-2:]
            elif x != "S" and y != "S":
                # L^a * L^b with a, b in {1, 2}
                exp = (1 if x == "L" else 2) + (1 if y == "L" else 2)
                del stack[-2:]
                if exp % 3 == 1:
                    stack.append("L")
                elif exp % 3 == 2:
                    stack.append("L2")
            else:
                break
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class Word:
    """A sequence of letters over {S, L, L2}.

    Normal form (guaranteed by the constructors used throughout) means S and
    L-type letters strictly alternate; ``normalized`` reduces an arbitrary
    sequence to it.  Raw letter streams (e.g. spine signatures) are allowed.
    """

    letters: tuple[str, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter not in LETTERS:
                raise ValueError(f"unknown letter {letter!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def is_normal(self) -> bool:
        prev = None
        for letter in self.letters:
            if prev is not None:
                if prev == "S" and letter == "S":
                    return False
                if prev != "S" and letter != "S":
                    return False
            prev = letter
        return True

    def normalized(self) -> "Word":
        return Word(_reduce_letters(self.letters))

    def __mul__(self, other: "Word") -> "Word":
        """Group product: concatenation followed by free reduction."""
        return Word(_reduce_letters(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple(_invert_letter(l) for l in reversed(self.letters)))

    def to_string(self) -> str:
        """Wire encoding: letters joined with no separator, "LL" for L2."""
        return "".join("LL" if l == "L2" else l for l in self.letters)

    @staticmethod
    def from_string(text: str) -> "Word":
        letters: list[str] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "S":
                letters.append("S")
                i += 1
            elif ch == "L":
                if i + 1 < len(text) and text[i + 1] == "L":
                    letters.append("L2")
                    i += 2
                else:
                    letters.append("L")
                    i += 1
            else:
                raise ValueError(f"unknown character {ch!r} in word")
        return Word(tuple(letters))

    def __repr__(self):
        return f"Word({self.to_string()!r})"


EMPTY_WORD = Word()


def word_to_matrix(w: Word | Iterable[str]) -> GroupElement:
    """Product of generator matrices in letter order, sign-normalized.

    Accepts non-normal-form sequences; multiplies left to right.
    """
    m = IDENTITY
    letters = w.letters if isinstance(w, Word) else tuple(w)
    for letter in letters:
        m = multiply(m, _GENERATOR[letter])
    return m


def matrix_to_word(m: GroupElement) -> Word:
    """The unique normal-form (hence minimal-length) word equal to m.

    Peels continued-fraction factors T^k S off the left until the matrix is
    upper triangular, then rewrites T = LS and T^-1 = S L2 and reduces the
    letter stream in the free product.
    """
    p, q, r, s = m.entries()
    letters: list[str] = []

    def emit_t_power(k: int) -> None:
        if k > 0:
            letters.extend(("L", "S") * k)
        elif k < 0:
            letters.extend(("S", "L2") * (-k))

    while r != 0:
        k = p // r
        emit_t_power(k)
        letters.append("S")
        # m <- S^-1 T^-k m
        p, q, r, s = r, s, -(p - k * r), -(q - k * s)
    # now m = +-(1, n; 0, 1) = T^(+-n)
    emit_t_power(q if p == 1 else -q)
    return Word(_reduce_letters(letters))


def word_meet(w: Word, w2: Word) -> Word:
    """Longest common prefix of two normal-form words."""
    out: list[str] = []
    for a, b in zip(w.letters, w2.letters):
        if a != b:
            break
        out.append(a)
    return Word(tuple(out))


def word_length(w: Word) -> int:
    return len(w.letters)
