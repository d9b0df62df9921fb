"""Words over the alphabet {1, 2}.

Basis vectors of a permutative representation are eventually periodic
one-sided infinite words: a finite prefix followed by a rotation of a
fixed period repeated forever.  The canonical form absorbs any prefix
letter that the periodic tail would supply anyway, so two words denote
the same infinite sequence exactly when their canonical forms coincide.

The tail-1 family ("period (1)") additionally carries the integer codec
idx(empty) = 1, idx(i . w) = 2*(idx(w) - 1) + i, identifying its basis
with the standard basis of l2(N).
"""

from __future__ import annotations

from typing import Iterable

Letters = tuple[int, ...]


def parse_letters(text: str) -> Letters:
    """Parse a string like "122" into a letter tuple."""
    out = []
    for ch in text:
        if ch not in "12":
            raise ValueError(f"invalid letter {ch!r}; alphabet is {{1,2}}")
        out.append(int(ch))
    return tuple(out)


def render_letters(letters: Iterable[int]) -> str:
    return "".join(str(i) for i in letters)


def _validate(letters) -> Letters:
    letters = tuple(letters)
    for i in letters:
        if i not in (1, 2):
            raise ValueError(f"invalid letter {i!r}; alphabet is {{1,2}}")
    return letters


def _primitive_len(period: Letters) -> int:
    k = len(period)
    for r in range(1, k + 1):
        if k % r == 0 and period == period[:r] * (k // r):
            return r
    return k  # unreachable


class TailWord:
    """Canonical eventually periodic infinite word: prefix . rot(period)^inf."""

    __slots__ = ("prefix", "period", "phase", "rot", "_hash")

    def __init__(self, prefix=(), period=(1,), phase: int = 0):
        prefix = _validate(prefix)
        period = _validate(period)
        if not period:
            raise ValueError("period must be nonempty")
        r = _primitive_len(period)
        prim = period[:r]
        phase %= r
        p = list(prefix)
        # absorb prefix letters already supplied by the periodic tail
        while p and p[-1] == prim[(phase - 1) % r]:
            p.pop()
            phase = (phase - 1) % r
        self.prefix = tuple(p)
        self.period = period
        self.phase = phase
        self.rot = tuple(prim[(phase + i) % r] for i in range(r))
        self._hash = hash((self.prefix, self.rot))

    # the infinite word is determined by (prefix, rot)
    def __eq__(self, other) -> bool:
        if not isinstance(other, TailWord):
            return NotImplemented
        return self.prefix == other.prefix and self.rot == other.rot

    def __hash__(self) -> int:
        return self._hash

    @property
    def depth(self) -> int:
        return len(self.prefix)

    def letter_at(self, j: int) -> int:
        if j < len(self.prefix):
            return self.prefix[j]
        return self.rot[(j - len(self.prefix)) % len(self.rot)]

    @property
    def first(self) -> int:
        return self.letter_at(0)

    def prepend(self, i: int) -> "TailWord":
        if i not in (1, 2):
            raise ValueError(f"invalid letter {i!r}")
        return TailWord((i,) + self.prefix, self.period, self.phase)

    def behead(self, i: int) -> "TailWord | None":
        """Remove a leading letter i; None if the word does not start with i."""
        if i not in (1, 2):
            raise ValueError(f"invalid letter {i!r}")
        if self.first != i:
            return None
        if self.prefix:
            return TailWord(self.prefix[1:], self.period, self.phase)
        return TailWord((), self.period, self.phase + 1)

    def render(self) -> str:
        return f"{render_letters(self.prefix)}({render_letters(self.rot)})"

    def __repr__(self) -> str:
        return self.render()

    def sort_key(self) -> tuple:
        return (len(self.prefix), self.prefix, self.rot)

    def to_json(self) -> dict:
        return {
            "prefix": render_letters(self.prefix),
            "period": render_letters(self.period),
            "phase": self.phase,
        }

    @staticmethod
    def from_json(data: dict) -> "TailWord":
        return TailWord(
            parse_letters(data["prefix"]),
            parse_letters(data["period"]),
            data.get("phase", 0),
        )


def pure(period, phase: int = 0) -> TailWord:
    return TailWord((), period, phase)


def flip(w: TailWord) -> TailWord:
    """Swap the letters 1 <-> 2 throughout."""
    swap = {1: 2, 2: 1}
    return TailWord(
        tuple(swap[i] for i in w.prefix),
        tuple(swap[i] for i in w.period),
        w.phase,
    )


def leading_block(w: TailWord) -> "tuple[int, TailWord] | None":
    """Split w = 2^(m-1) 1 . v and return (m, v); None when the word is 2^inf.

    Every word over {1,2} other than 2^inf has a unique such split, which
    is what makes infinite sums over these blocks collapse to one summand.
    """
    bound = w.depth + len(w.rot)
    j = 0
    while j <= bound and w.letter_at(j) == 2:
        j += 1
    if j > bound:
        return None
    rest = w
    for k in range(j + 1):
        rest = rest.behead(rest.first)
    return j + 1, rest


def word_to_index(w: TailWord) -> int:
    """Position of a tail-1 word in the l2(N) basis."""
    if w.rot != (1,):
        raise ValueError(f"{w} is not a tail-1 word")
    n = 1
    for i in reversed(w.prefix):
        n = 2 * (n - 1) + i
    return n


def index_to_word(n: int) -> TailWord:
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    out = []
    while n > 1:
        if n % 2 == 0:
            out.append(2)
            n //= 2
        else:
            out.append(1)
            n = (n + 1) // 2
    return TailWord(tuple(out), (1,), 0)
