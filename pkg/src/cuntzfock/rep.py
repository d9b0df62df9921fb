"""States and generator actions for permutative representations.

A representation space is labelled by a nonempty word J; its basis is the
set of canonical tail words whose periodic part is a rotation of J, and
its GP vector is the pure word J^inf (fixed by the operator word t_J).
The two isometries act by prepending a letter; their adjoints remove a
matching leading letter and annihilate otherwise.  The countable family
s_m = t_2^(m-1) t_1 embeds the infinite Cuntz family.

Operator expressions form a small symbolic algebra so the endomorphisms
rho(x) = sum_m s_m x s_m* and zeta(y) = t_1 y t_1* - t_2 y t_2* can act on
operators before states.  The rho sum needs no truncation: on a basis
word at most the single summand picked out by the leading block survives.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .radical import ONE, RadicalScalar, promote
from .words import TailWord, leading_block, parse_letters, render_letters


class SpaceMismatchError(ValueError):
    """Raised when vectors from different representation spaces are mixed."""


class RepSpace:
    """The representation class determined by a cycle word J."""

    __slots__ = ("period",)

    def __init__(self, period):
        if isinstance(period, str):
            period = parse_letters(period)
        period = tuple(period)
        if not period:
            raise ValueError("the defining word J must be nonempty")
        for i in period:
            if i not in (1, 2):
                raise ValueError(f"invalid letter {i!r} in J")
        self.period = period

    def __eq__(self, other) -> bool:
        return isinstance(other, RepSpace) and self.period == other.period

    def __hash__(self) -> int:
        return hash(("RepSpace", self.period))

    @property
    def label(self) -> str:
        return f"P2({render_letters(self.period)})"

    def __repr__(self) -> str:
        return self.label

    def word(self, prefix=(), phase: int = 0) -> TailWord:
        return TailWord(prefix, self.period, phase)

    def gp_word(self) -> TailWord:
        return TailWord((), self.period, 0)

    def flip(self) -> "RepSpace":
        swap = {1: 2, 2: 1}
        return RepSpace(tuple(swap[i] for i in self.period))

    def basis_words(self, max_depth: int) -> Iterator[TailWord]:
        """All canonical basis words with prefix length <= max_depth."""
        rot0 = self.gp_word().rot
        r = len(rot0)
        for phase in range(r):
            yield TailWord((), self.period, phase)
        for depth in range(1, max_depth + 1):
            for phase in range(r):
                blocked = rot0[(phase - 1) % r]
                for code in range(2 ** (depth - 1)):
                    prefix = []
                    c = code
                    for _ in range(depth - 1):
                        prefix.append(1 + (c & 1))
                        c >>= 1
                    prefix.append(1 if blocked == 2 else 2)
                    yield TailWord(tuple(prefix), self.period, phase)


class State:
    """A finite linear combination of basis words of one space."""

    __slots__ = ("space", "_terms")

    def __init__(self, space: RepSpace, terms=None):
        self.space = space
        clean: dict[TailWord, RadicalScalar] = {}
        if terms:
            for w, c in dict(terms).items():
                if w.period != space.period:
                    raise SpaceMismatchError(
                        f"word {w} does not belong to {space.label}"
                    )
                c = promote(c)
                if c:
                    clean[w] = c
        self._terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(space: RepSpace) -> "State":
        return State(space)

    @staticmethod
    def basis(space: RepSpace, word: TailWord, coeff=ONE) -> "State":
        return State(space, {word: coeff})

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[TailWord, RadicalScalar]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coeff(self, word: TailWord) -> RadicalScalar:
        return self._terms.get(word, RadicalScalar.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return self.space.period == other.space.period and self._terms == other._terms

    def __hash__(self):
        raise TypeError("states are not hashable")

    # -- linear structure ----------------------------------------------

    def _check(self, other: "State") -> None:
        if self.space.period != other.space.period:
            raise SpaceMismatchError(
                f"cannot combine vectors of {self.space.label} and {other.space.label}"
            )

    def __add__(self, other: "State") -> "State":
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            s = acc.get(w)
            s = c if s is None else s + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return _wrap(self.space, acc)

    def __neg__(self) -> "State":
        return _wrap(self.space, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "State") -> "State":
        return self + (-other)

    def __mul__(self, scalar) -> "State":
        scalar = promote(scalar)
        if not scalar:
            return State.zero(self.space)
        return _wrap(self.space, {w: c * scalar for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "State":
        return self * (ONE / promote(scalar))

    def inner(self, other: "State") -> RadicalScalar:
        """Inner product; the basis words are orthonormal."""
        self._check(other)
        acc = RadicalScalar.zero()
        small, big = self._terms, other._terms
        if len(big) < len(small):
            small, big = big, small
        for w, c in small.items():
            d = big.get(w)
            if d is not None:
                acc = acc + c * d
        return acc

    def norm2(self) -> RadicalScalar:
        return self.inner(self)

    # -- output -----------------------------------------------------------

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.sorted_items():
            parts.append(f"[{c.render()}] {w.render()}")
        return "  +  ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.space.label}: {self.render()}>"

    def to_json(self) -> dict:
        return {
            "space": self.space.label,
            "terms": [
                {"word": w.to_json(), "coeff": c.to_json()}
                for w, c in self.sorted_items()
            ],
        }


def _wrap(space: RepSpace, terms: dict) -> State:
    out = State.__new__(State)
    out.space = space
    out._terms = terms
    return out


def map_basis(state: State, fn: Callable[[TailWord], object]) -> State:
    """Linear extension of a basis map.

    fn returns None (annihilation), a (coeff, word) pair, or a list of
    such pairs.
    """
    acc: dict[TailWord, RadicalScalar] = {}
    for w, c in state.items():
        r = fn(w)
        if r is None:
            continue
        pairs = r if isinstance(r, list) else [r]
        for cc, ww in pairs:
            s = acc.get(ww)
            s = c * cc if s is None else s + c * cc
            if s:
                acc[ww] = s
            else:
                acc.pop(ww, None)
    return _wrap(state.space, acc)


# -- generator actions ------------------------------------------------------


def gp_vector(space: RepSpace) -> State:
    """The distinguished cyclic vector, fixed by the operator word t_J."""
    return State.basis(space, space.gp_word())


def apply_t(i: int, state: State) -> State:
    return map_basis(state, lambda w: (ONE, w.prepend(i)))


def apply_t_star(i: int, state: State) -> State:
    def f(w):
        v = w.behead(i)
        return None if v is None else (ONE, v)

    return map_basis(state, f)


def apply_t_word(letters, state: State) -> State:
    """Operator word t_J: the rightmost letter acts first."""
    if isinstance(letters, str):
        letters = parse_letters(letters)
    for i in reversed(tuple(letters)):
        state = apply_t(i, state)
    return state


def apply_t_word_star(letters, state: State) -> State:
    """Adjoint of apply_t_word."""
    if isinstance(letters, str):
        letters = parse_letters(letters)
    for i in tuple(letters):
        state = apply_t_star(i, state)
    return state


def apply_s(m: int, state: State) -> State:
    """The embedded generator s_m = t_2^(m-1) t_1."""
    if m < 1:
        raise ValueError(f"generator index must be >= 1, got {m}")
    state = apply_t(1, state)
    for _ in range(m - 1):
        state = apply_t(2, state)
    return state


def apply_s_star(m: int, state: State) -> State:
    if m < 1:
        raise ValueError(f"generator index must be >= 1, got {m}")
    for _ in range(m - 1):
        state = apply_t_star(2, state)
    return apply_t_star(1, state)


# -- symbolic operator expressions -----------------------------------------


class Operator:
    """Base class for symbolic operator expressions."""

    def apply(self, state: State) -> State:
        raise NotImplementedError

    def adjoint(self) -> "Operator":
        raise NotImplementedError

    def __call__(self, state: State) -> State:
        return self.apply(state)


class Identity(Operator):
    def apply(self, state: State) -> State:
        return state

    def adjoint(self) -> Operator:
        return self

    def __repr__(self):
        return "I"


class T(Operator):
    def __init__(self, i: int, star: bool = False):
        if i not in (1, 2):
            raise ValueError(f"invalid generator index {i}")
        self.i = i
        self.star = star

    def apply(self, state: State) -> State:
        return apply_t_star(self.i, state) if self.star else apply_t(self.i, state)

    def adjoint(self) -> Operator:
        return T(self.i, not self.star)

    def __repr__(self):
        return f"t{self.i}{'*' if self.star else ''}"


class SGen(Operator):
    def __init__(self, m: int, star: bool = False):
        self.m = m
        self.star = star

    def apply(self, state: State) -> State:
        return apply_s_star(self.m, state) if self.star else apply_s(self.m, state)

    def adjoint(self) -> Operator:
        return SGen(self.m, not self.star)

    def __repr__(self):
        return f"s{self.m}{'*' if self.star else ''}"


class Compose(Operator):
    """Operator product; the rightmost factor acts first."""

    def __init__(self, *ops: Operator):
        self.ops = ops

    def apply(self, state: State) -> State:
        for op in reversed(self.ops):
            state = op.apply(state)
        return state

    def adjoint(self) -> Operator:
        return Compose(*(op.adjoint() for op in reversed(self.ops)))

    def __repr__(self):
        return " ".join(repr(op) for op in self.ops)


class Scale(Operator):
    def __init__(self, coeff, op: Operator):
        self.coeff = promote(coeff)
        self.op = op

    def apply(self, state: State) -> State:
        return self.op.apply(state) * self.coeff

    def adjoint(self) -> Operator:
        return Scale(self.coeff, self.op.adjoint())

    def __repr__(self):
        return f"({self.coeff}) {self.op!r}"


class Add(Operator):
    def __init__(self, *ops: Operator):
        self.ops = ops

    def apply(self, state: State) -> State:
        acc = State.zero(state.space)
        for op in self.ops:
            acc = acc + op.apply(state)
        return acc

    def adjoint(self) -> Operator:
        return Add(*(op.adjoint() for op in self.ops))

    def __repr__(self):
        return " + ".join(repr(op) for op in self.ops)


class Rho(Operator):
    """The shift endomorphism x -> sum_m s_m x s_m*, evaluated lazily.

    For a basis word u only the m given by the leading block of u has
    s_m* u != 0, so the sum contributes at most one term per basis word.
    """

    def __init__(self, op: Operator):
        self.op = op

    def apply(self, state: State) -> State:
        acc = State.zero(state.space)
        for w, c in state.items():
            lb = leading_block(w)
            if lb is None:
                continue
            m, rest = lb
            inner = self.op.apply(State.basis(state.space, rest, c))
            acc = acc + apply_s(m, inner)
        return acc

    def adjoint(self) -> Operator:
        return Rho(self.op.adjoint())

    def __repr__(self):
        return f"rho({self.op!r})"


class Zeta(Operator):
    """The twisted shift y -> t_1 y t_1* - t_2 y t_2*."""

    def __init__(self, op: Operator):
        self.op = op

    def apply(self, state: State) -> State:
        plus = apply_t(1, self.op.apply(apply_t_star(1, state)))
        minus = apply_t(2, self.op.apply(apply_t_star(2, state)))
        return plus - minus

    def adjoint(self) -> Operator:
        return Zeta(self.op.adjoint())

    def __repr__(self):
        return f"zeta({self.op!r})"


def apply_rho(op: Operator, state: State) -> State:
    return Rho(op).apply(state)


def apply_zeta(op: Operator, state: State) -> State:
    return Zeta(op).apply(state)
