"""Alexander polynomial of (colored) braid closures.

Two pipelines compute the invariant:

* :func:`alexander_poly` builds the braid morphism from colored
  crossings and closes all strands but one by a weighted partial
  supertrace;
* :func:`alexander_via_cut_moy` builds the cut-open closure as a Morse
  diagram with cups and caps, expands every crossing into merge/split
  ladders and evaluates the resulting sum.

:func:`burau_oracle` is an unrelated classical computation (reduced
Burau representation) used to validate both up to units ``±q^j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .ladder import colored_crossing
from .laurent import LaurentPoly, exact_div
from .morse import Generator, MorseDiagram, evaluate_sum, expand_crossings
from .relations import RelationReport
from .rep import Strand, closure_weights, identity
from .superlin import Morphism, NotScalar, compose, partial_supertrace, tensor_all

__all__ = [
    "BraidWord",
    "InvariantResult",
    "IndexOutOfRange",
    "BraidParseError",
    "parse_braid_word",
    "braid_morphism",
    "alexander_poly",
    "alexander_via_cut_moy",
    "burau_oracle",
    "skein_check",
    "normalize",
    "equal_up_to_units",
    "random_braid",
    "NotScalar",
]

Q = LaurentPoly.q()


class IndexOutOfRange(IndexError):
    """A braid generator index outside ``1..n-1``."""


class BraidParseError(ValueError):
    pass


def parse_braid_word(text: str) -> tuple[int, ...]:
    """Whitespace-separated signed integers, ``-i`` meaning ``σ_i^-1``."""
    out = []
    for tok in text.replace(",", " ").split():
        try:
            v = int(tok)
        except ValueError:
            raise BraidParseError(f"not an integer generator: {tok!r}") from None
        if v == 0:
            raise BraidParseError("generator 0 does not exist; use 1..n-1 or their negatives")
        out.append(v)
    return tuple(out)


def _permutation(n: int, word: Sequence[int]) -> list[int]:
    """``perm[p]`` is the bottom position of the strand ending at top position ``p``."""
    perm = list(range(n))
    for g in word:
        i = abs(g)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...] = ()
    colors: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "word", tuple(self.word))
        colors = (1,) * self.strands if self.colors is None else tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.strands:
            raise ValueError(f"{len(colors)} colors given for {self.strands} strands")
        if any(c < 0 for c in colors):
            raise ValueError("colors must be nonnegative")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise IndexOutOfRange(f"generator {g} out of range for {self.strands} strands")
        perm = _permutation(self.strands, self.word)
        if any(colors[perm[p]] != colors[p] for p in range(self.strands)):
            raise ValueError("colors must be constant on each component of the closure")

    @classmethod
    def parse(cls, strands: int, word: str, colors: str | None = None) -> BraidWord:
        cols = None
        if colors is not None:
            try:
                cols = tuple(int(c) for c in colors.replace(",", " ").split())
            except ValueError:
                raise BraidParseError(f"bad colors {colors!r}") from None
        return cls(strands, parse_braid_word(word), cols)

    def components(self) -> int:
        perm = _permutation(self.strands, self.word)
        seen, count = set(), 0
        for p in range(self.strands):
            if p not in seen:
                count += 1
                while p not in seen:
                    seen.add(p)
                    p = perm[p]
        return count

    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.word)

    def with_word(self, word: Sequence[int], strands: int | None = None) -> BraidWord:
        n = self.strands if strands is None else strands
        colors = self.colors + (self.colors[-1],) * (n - self.strands)
        return BraidWord(n, tuple(word), colors[:n])

    def __str__(self) -> str:
        return " ".join(map(str, self.word)) or "(empty)"


@dataclass(frozen=True)
class InvariantResult:
    delta: LaurentPoly
    normalized: LaurentPoly
    traced_slots: tuple[int, ...] = field(default_factory=tuple)


def _crossing_layer(colors: Sequence[int], g: int) -> Morphism:
    i = abs(g)
    cross = colored_crossing(colors[i - 1], colors[i], 1 if g > 0 else -1)
    return tensor_all([identity(colors[: i - 1]), cross, identity(colors[i + 1 :])])


def braid_morphism(b: BraidWord) -> Morphism:
    """Composite of the crossings, first generator at the bottom."""
    colors = list(b.colors)
    result = identity(colors)
    for g in b.word:
        result = compose(_crossing_layer(colors, g), result)
        i = abs(g)
        colors[i - 1], colors[i] = colors[i], colors[i - 1]
    return result


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Multiply by ``±q^j`` to center the exponents, leading coefficient positive."""
    if p.is_zero():
        return p
    lo, hi = p.min_degree(), p.max_degree()
    shifted = p.shift(-((lo + hi) // 2))
    return -shifted if shifted.coeff(shifted.max_degree()) < 0 else shifted


def equal_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    return normalize(a) == normalize(b)


def alexander_poly(
    b: BraidWord, side: str = "right", framing: LaurentPoly | int = 1
) -> InvariantResult:
    """Close all strands but one and read off the scalar.

    ``side="right"`` closes slots ``2..n`` with the weights ``q^k``;
    ``side="left"`` closes slots ``1..n-1`` with ``q^-k``.  ``framing``
    multiplies the result by ``framing^writhe`` and should stay 1.
    """
    f = braid_morphism(b)
    n = b.strands
    if side == "right":
        slots = list(range(n - 1, 0, -1))
    elif side == "left":
        slots = [0] * (n - 1)
    else:
        raise ValueError(f"unknown closure side {side!r}")
    colors = list(b.colors)
    for slot in slots:
        f = partial_supertrace(f, slot, closure_weights(colors.pop(slot), side))
    framing = LaurentPoly._coerce(framing)
    delta = f.scalar() * framing ** b.writhe()
    traced = tuple(range(2, n + 1)) if side == "right" else tuple(range(1, n))
    return InvariantResult(delta, normalize(delta), traced)


def _cut_diagram(b: BraidWord) -> MorseDiagram:
    """Strand 1 left open; strands ``2..n`` closed by nested cups and caps on the right."""
    n, colors = b.strands, list(b.colors)
    ids = lambda word: tuple(Generator.id(s.k, s.dual) for s in word)  # noqa: E731
    word: list[Strand] = [Strand(colors[0])]
    slices = []
    for j in range(1, n):
        # open strand j next to its dual, inside the previous pair
        left, right = word[:j], word[j:]
        slices.append(ids(left) + (Generator.cup(colors[j], 1),) + ids(right))
        word = left + [Strand(colors[j]), Strand(colors[j], True)] + right
    for g in b.word:
        i = abs(g)
        c = [s.k for s in word[:n]]
        slices.append(
            ids(word[: i - 1]) + (Generator.cross(c[i - 1], c[i], 1 if g > 0 else -1),) + ids(word[i + 1 :])
        )
        word[i - 1], word[i] = word[i], word[i - 1]
    for j in range(n - 1, 0, -1):
        left, right = word[:j], word[j + 2 :]
        slices.append(ids(left) + (Generator.cap(word[j].k, 1),) + ids(right))
        word = left + right
    return MorseDiagram(tuple(slices), (Strand(colors[0]),))


def alexander_via_cut_moy(b: BraidWord) -> InvariantResult:
    """Evaluate the cut-open closure after expanding every crossing."""
    diagram = _cut_diagram(b)
    expanded = expand_crossings(diagram)
    delta = evaluate_sum(expanded).scalar()
    return InvariantResult(delta, normalize(delta), tuple(range(2, b.strands + 1)))


# -- classical oracle ----------------------------------------------------

T = LaurentPoly.q()  # the Burau variable; q is reused as t here


def _burau_generator(n: int, i: int, inverse: bool) -> list[list[LaurentPoly]]:
    """Reduced Burau matrix of ``σ_i^{±1}`` on ``n`` strands, size ``n-1``."""
    size = n - 1
    m = [[LaurentPoly.const(int(r == c)) for c in range(size)] for r in range(size)]
    ti = T**-1
    r = i - 1  # row/column of the generator itself
    if not inverse:
        m[r][r] = -T
        if r > 0:
            m[r - 1][r] = T
        if r < size - 1:
            m[r + 1][r] = LaurentPoly.ONE
    else:
        m[r][r] = -ti
        if r > 0:
            m[r - 1][r] = LaurentPoly.ONE
        if r < size - 1:
            m[r + 1][r] = ti
    return m


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][j] * b[j][c] for j in range(k)), LaurentPoly.ZERO) for c in range(m)] for i in range(n)]


def _laplace_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    if not m:
        return LaurentPoly.ONE
    if len(m) == 1:
        return m[0][0]
    total = LaurentPoly.ZERO
    for c, v in enumerate(m[0]):
        if v:
            minor = [row[:c] + row[c + 1 :] for row in m[1:]]
            total = total + (v if c % 2 == 0 else -v) * _laplace_det(minor)
    return total


def burau_oracle(b: BraidWord) -> LaurentPoly:
    """``det(I - ρ(b)) / (1 + t + ... + t^(n-1))`` with ``t = q^2``."""
    if any(c != 1 for c in b.colors):
        raise ValueError("the Burau oracle only covers uncolored braids")
    n = b.strands
    size = n - 1
    rho = [[LaurentPoly.const(int(r == c)) for c in range(size)] for r in range(size)]
    for g in b.word:
        rho = _matmul(rho, _burau_generator(n, abs(g), g < 0))
    diff = [[LaurentPoly.const(int(r == c)) - rho[r][c] for c in range(size)] for r in range(size)]
    det = _laplace_det(diff)
    delta_t = exact_div(det, LaurentPoly({e: 1 for e in range(n)}))
    return delta_t.substitute_power(2)


# -- properties ------------------------------------------------------------


def skein_check(b: BraidWord, position: int, generator: int = 1, perturb: int = 0) -> RelationReport:
    """``Δ(L+) - Δ(L-) = (q - q^-1) Δ(L0)`` by inserting ``σ_generator^{±1}``.

    ``perturb`` adds ``perturb · Δ(L0)`` to the difference (negative control).
    """
    w = list(b.word)
    plus = b.with_word(w[:position] + [generator] + w[position:])
    minus = b.with_word(w[:position] + [-generator] + w[position:])
    d_plus = alexander_poly(plus).delta
    d_minus = alexander_poly(minus).delta
    d_zero = alexander_poly(b).delta
    diff = d_plus - d_minus - (Q - Q**-1) * d_zero + perturb * d_zero
    unit = identity(()).domain
    entries = {(0, 0): diff} if diff else {}
    report = Morphism._make(unit, unit, entries)
    return RelationReport("skein", (str(b), position, generator), diff.is_zero(), report)


def random_braid(rng: random.Random, max_strands: int = 3, max_length: int = 6) -> BraidWord:
    n = rng.randint(2, max_strands)
    length = rng.randint(0, max_length)
    word = [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)]
    return BraidWord(n, tuple(word))
