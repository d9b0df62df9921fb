"""The transfer unitary between the boson and fermion Fock bases.

Both monomial bases are realized on the same tail-1 representation space,
so transferring a boson monomial amounts to rewriting its basis word as a
fermion monomial.  Combinatorially: each boson factor (b*_n)^k becomes a
run of k consecutive fermion modes, and earlier runs shift the start of
later ones by their total size,

    (b*_{n_1})^{k_1} ... (b*_{n_m})^{k_m}
        |->  sqrt(k_1! ... k_m!) . a*_{S_1} ... a*_{S_m},
    S_j = {n_j + K, ..., n_j + K + k_j - 1},   K = k_1 + ... + k_{j-1}.

Consecutive runs land with gaps >= 2, so they are exactly the blocks of
the image set and the map inverts block by block: a block of length l+1
starting at x comes from mode x minus the combined size of the earlier
blocks, with multiplicity l+1 and norm factor 1/sqrt((l+1)!).

`forward` is the pure index combinatorics; `forward_operational` reroutes
through the representation space (iterated creations, then reading the
word back) and must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .ladder import (
    DEFAULT_MAX_PARTICLES,
    BosonMonomial,
    FermionSubset,
    _check_particles,
    boson_state_iterated,
    parse_fermion_word,
)
from .radical import ONE, RadicalScalar, sqrt_factorial


class EngineError(RuntimeError):
    """An internal consistency check failed; indicates an engine bug."""


@dataclass(frozen=True)
class Block:
    """A maximal run {start, ..., start + length - 1} of consecutive modes."""

    start: int
    length: int

    def __post_init__(self):
        if self.start < 1 or self.length < 1:
            raise ValueError("blocks need start >= 1 and length >= 1")

    @property
    def stop(self) -> int:
        return self.start + self.length - 1

    def modes(self) -> range:
        return range(self.start, self.start + self.length)


def block_decompose(S: FermionSubset) -> list[Block]:
    """Split a mode set into maximal consecutive runs (gaps >= 2 between)."""
    blocks: list[Block] = []
    start = None
    prev = None
    for s in S.elements:
        if start is None:
            start = prev = s
        elif s == prev + 1:
            prev = s
        else:
            blocks.append(Block(start, prev - start + 1))
            start = prev = s
    if start is not None:
        blocks.append(Block(start, prev - start + 1))
    return blocks


@dataclass(frozen=True)
class CorrespondencePair:
    """A matched boson/fermion monomial pair with its exact norm factor."""

    boson: BosonMonomial
    fermion: FermionSubset
    coeff: RadicalScalar

    def to_json(self) -> dict:
        return {
            "boson": self.boson.to_json(),
            "fermion": self.fermion.to_json(),
            "coeff": self.coeff.to_json(),
        }

    def render(self) -> str:
        return (
            f"b[{self.boson}]  ->  a[{self.fermion}]  "
            f"coeff {self.coeff.render()} ({self.coeff.render_decimal()})"
        )


def particle_number(x) -> int:
    """Total particle count of a monomial of either kind."""
    if isinstance(x, (BosonMonomial, FermionSubset)):
        return x.particle_number
    raise TypeError(f"expected a monomial, got {type(x).__name__}")


def forward(
    M: BosonMonomial, *, max_particles: int = DEFAULT_MAX_PARTICLES
) -> CorrespondencePair:
    """Transfer a boson monomial to its fermion image, block by block."""
    _check_particles(M.particle_number, max_particles)
    modes: list[int] = []
    shift = 0
    coeff = ONE
    for n, k in M.factors:
        start = n + shift
        modes.extend(range(start, start + k))
        shift += k
        coeff = coeff * sqrt_factorial(k)
    return CorrespondencePair(M, FermionSubset(tuple(modes)), coeff)


def inverse(
    S: FermionSubset, *, max_particles: int = DEFAULT_MAX_PARTICLES
) -> CorrespondencePair:
    """Transfer a fermion monomial back to its boson preimage.

    The j-th block, of length l_j + 1 starting at x_j, becomes the mode
    x_j - sum_{i<j} (l_i + 1) with multiplicity l_j + 1; the norm factor
    is the reciprocal of the forward one.
    """
    _check_particles(S.particle_number, max_particles)
    factors: list[tuple[int, int]] = []
    used = 0
    norm = ONE
    for b in block_decompose(S):
        mode = b.start - used
        if factors and mode <= factors[-1][0]:
            raise EngineError("block starts out of order")  # cannot occur
        factors.append((mode, b.length))
        used += b.length
        norm = norm * sqrt_factorial(b.length)
    return CorrespondencePair(
        BosonMonomial(tuple(factors)), S, ONE / norm if S.elements else ONE
    )


def forward_operational(
    M: BosonMonomial, *, max_particles: int = DEFAULT_MAX_PARTICLES
) -> CorrespondencePair:
    """Transfer through the representation space instead of index algebra.

    Applies the creations to the GP vector and reads the resulting basis
    word back as a fermion monomial.  The intermediate state must be a
    single basis term; anything else is an engine bug.
    """
    state = boson_state_iterated(M, max_particles=max_particles)
    if len(state) != 1:
        raise EngineError(f"creation monomial did not yield a single word: {state!r}")
    ((word, coeff),) = state.items()
    S = parse_fermion_word(word)
    if S is None:
        raise EngineError(f"word {word} is not a fermion monomial word")
    return CorrespondencePair(M, S, coeff)


def enumerate_grade(
    n: int, max_mode: int, *, max_particles: int = DEFAULT_MAX_PARTICLES
) -> list[CorrespondencePair]:
    """All n-particle pairs with boson modes <= max_mode, in lex order."""
    if n < 0:
        raise ValueError("particle count must be >= 0")
    _check_particles(n, max_particles)
    if n == 0:
        return [CorrespondencePair(BosonMonomial(), FermionSubset(), ONE)]
    out = []
    for modes in combinations_with_replacement(range(1, max_mode + 1), n):
        out.append(forward(BosonMonomial.from_modes(modes)))
    out.sort(key=lambda pair: _mode_multiset(pair.boson))
    return out


def _mode_multiset(M: BosonMonomial) -> tuple[int, ...]:
    return tuple(n for n, k in M.factors for _ in range(k))


def grade_table_tsv(pairs: list[CorrespondencePair]) -> str:
    lines = ["boson\tfermion\tcoeff\tcoeff_decimal"]
    for p in pairs:
        lines.append(
            f"{p.boson}\t{p.fermion}\t{p.coeff.render()}\t{p.coeff.render_decimal()}"
        )
    return "\n".join(lines) + "\n"
