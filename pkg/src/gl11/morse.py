"""MOY diagrams in Morse position: slices of elementary generators.

A diagram is read bottom to top.  Each slice is a row of generators
placed side by side; the boundary word under a slice is the
concatenation of the generators' sources, the word above it the
concatenation of their targets.

Generators and their text tokens:

==================  =====================  ==========================
token               boundary               map
==================  =====================  ==========================
``id:k``            ``k -> k``             identity
``id:k*``           ``k* -> k*``           identity on the dual
``merge:k,l``       ``k l -> k+l``         wedge product
``split:k,l``       ``k+l -> k l``         coproduct
``cup:+k``          ``() -> k k*``         ``coev``
``cup:-k``          ``() -> k* k``         ``hat_coev``
``cap:+k``          ``k k* -> ()``         ``hat_ev``
``cap:-k``          ``k* k -> ()``         ``ev``
``cross:k,l,+``     ``k l -> l k``         positive crossing
``cross:k,l,-``     ``k l -> l k``         negative crossing
==================  =====================  ==========================

Crossings are expanded into sums of merge/split ladders (rungs
``E^(s) F^(r)``), so every diagram is ultimately a combination of the
trivalent generators, cups and caps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .laurent import LaurentPoly
from .ladder import Ladder, crossing_terms, shift_weight
from .rep import Strand, coev, ev, hat_coev, hat_ev, identity, merge, split
from .superlin import GradedBasis, Morphism, compose, tensor_all

__all__ = [
    "Generator",
    "MorseDiagram",
    "MorseSum",
    "BoundaryMismatch",
    "MorseParseError",
    "evaluate_morse",
    "evaluate_sum",
    "crossing_expansion",
    "expand_crossings",
    "ladder_to_morse",
    "rung_slices",
    "parse_morse",
    "boundary_basis",
]

Word = tuple[Strand, ...]


class BoundaryMismatch(ValueError):
    """Adjacent slices do not agree on the boundary word between them."""

    def __init__(self, slice_index: int, below: Word, above: Word):
        super().__init__(
            f"slice {slice_index}: expects {_fmt_word(above)} but receives {_fmt_word(below)}"
        )
        self.slice_index = slice_index


class MorseParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _fmt_word(word: Word) -> str:
    return "(" + " ".join(map(str, word)) + ")"


KINDS = ("id", "merge", "split", "cup", "cap", "cross")


@dataclass(frozen=True)
class Generator:
    """One elementary piece of a slice.

    ``colors`` holds one color for ``id``/``cup``/``cap``, two for
    ``merge``/``split``/``cross``.  ``variant`` is ``+1``/``-1`` for
    cups, caps and crossings, and for ``id`` it is ``-1`` on a dual strand.
    """

    kind: str
    colors: tuple[int, ...]
    variant: int = 1

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        arity = 2 if self.kind in ("merge", "split", "cross") else 1
        if len(self.colors) != arity:
            raise ValueError(f"{self.kind} takes {arity} color(s), got {self.colors}")
        if any(c < 0 for c in self.colors):
            raise ValueError(f"negative color in {self.kind}{self.colors}")
        if self.variant not in (1, -1):
            raise ValueError("variant must be +1 or -1")
        if self.kind in ("merge", "split") and self.variant != 1:
            raise ValueError(f"{self.kind} has no variants")

    # -- convenience constructors ---------------------------------------
    @classmethod
    def id(cls, k: int, dual: bool = False) -> Generator:
        return cls("id", (k,), -1 if dual else 1)

    @classmethod
    def merge(cls, k: int, l: int) -> Generator:
        return cls("merge", (k, l))

    @classmethod
    def split(cls, k: int, l: int) -> Generator:
        return cls("split", (k, l))

    @classmethod
    def cup(cls, k: int, variant: int = 1) -> Generator:
        return cls("cup", (k,), variant)

    @classmethod
    def cap(cls, k: int, variant: int = 1) -> Generator:
        return cls("cap", (k,), variant)

    @classmethod
    def cross(cls, k: int, l: int, sign: int = 1) -> Generator:
        return cls("cross", (k, l), sign)

    # -- boundaries -----------------------------------------------------
    @property
    def source(self) -> Word:
        c, v = self.colors, self.variant
        if self.kind == "id":
            return (Strand(c[0], v < 0),)
        if self.kind in ("merge", "cross"):
            return (Strand(c[0]), Strand(c[1]))
        if self.kind == "split":
            return (Strand(c[0] + c[1]),)
        if self.kind == "cup":
            return ()
        return _pair(c[0], v)

    @property
    def target(self) -> Word:
        c, v = self.colors, self.variant
        if self.kind == "id":
            return (Strand(c[0], v < 0),)
        if self.kind == "merge":
            return (Strand(c[0] + c[1]),)
        if self.kind == "split":
            return (Strand(c[0]), Strand(c[1]))
        if self.kind == "cross":
            return (Strand(c[1]), Strand(c[0]))
        if self.kind == "cap":
            return ()
        return _pair(c[0], v)

    def matrix(self) -> Morphism:
        return _generator_matrix(self)

    def __str__(self) -> str:
        c, v = self.colors, self.variant
        if self.kind == "id":
            return f"id:{c[0]}" + ("*" if v < 0 else "")
        if self.kind in ("merge", "split"):
            return f"{self.kind}:{c[0]},{c[1]}"
        if self.kind == "cross":
            return f"cross:{c[0]},{c[1]}," + ("+" if v > 0 else "-")
        return f"{self.kind}:" + ("+" if v > 0 else "-") + str(c[0])


def _pair(k: int, variant: int) -> Word:
    # "+" puts the undualled strand on the left
    return (Strand(k), Strand(k, True)) if variant > 0 else (Strand(k, True), Strand(k))


@lru_cache(maxsize=None)
def _generator_matrix(g: Generator) -> Morphism:
    k = g.colors[0]
    if g.kind == "id":
        return identity(g.source)
    if g.kind == "merge":
        return merge(*g.colors)
    if g.kind == "split":
        return split(*g.colors)
    if g.kind == "cup":
        return coev(k) if g.variant > 0 else hat_coev(k)
    if g.kind == "cap":
        return hat_ev(k) if g.variant > 0 else ev(k)
    return evaluate_sum(crossing_expansion(g.colors[0], g.colors[1], g.variant))


def boundary_basis(word: Word) -> GradedBasis:
    return identity(word).domain


Slice = tuple[Generator, ...]


def _slice_source(s: Slice) -> Word:
    return tuple(x for g in s for x in g.source)


def _slice_target(s: Slice) -> Word:
    return tuple(x for g in s for x in g.target)


@dataclass(frozen=True)
class MorseDiagram:
    """Slices listed bottom to top.

    ``input`` is only needed for a diagram with no slices; otherwise it
    is inferred from the first slice (and checked if given).  After
    construction it always holds the source word.
    """

    slices: tuple[Slice, ...] = ()
    input: Word | None = None

    def __post_init__(self):
        slices = tuple(tuple(s) for s in self.slices)
        object.__setattr__(self, "slices", slices)
        if self.input is not None:
            word = tuple(Strand.parse(s) for s in self.input)
        else:
            word = _slice_source(slices[0]) if slices else ()
        object.__setattr__(self, "input", word)
        self.check()

    @classmethod
    def identity_on(cls, word: Iterable) -> MorseDiagram:
        return cls((), tuple(Strand.parse(s) for s in word))

    @property
    def source(self) -> Word:
        return self.input

    @property
    def target(self) -> Word:
        if not self.slices:
            return self.source
        return _slice_target(self.slices[-1])

    def check(self) -> None:
        below = self.source
        for n, s in enumerate(self.slices):
            if _slice_source(s) != below:
                raise BoundaryMismatch(n, below, _slice_source(s))
            below = _slice_target(s)

    def then(self, other: MorseDiagram) -> MorseDiagram:
        """Stack ``other`` on top of ``self``."""
        if other.source != self.target:
            raise BoundaryMismatch(len(self.slices), self.target, other.source)
        return MorseDiagram(self.slices + other.slices, self.source)

    def beside(self, other: MorseDiagram) -> MorseDiagram:
        """Place ``other`` to the right, padding the shorter one with identities."""
        a, b = _pad(self, other.depth), _pad(other, self.depth)
        if not a.slices:
            return MorseDiagram((), a.source + b.source)
        return MorseDiagram(tuple(x + y for x, y in zip(a.slices, b.slices)))

    @property
    def depth(self) -> int:
        return len(self.slices)

    def padded(self, left: Iterable = (), right: Iterable = ()) -> MorseDiagram:
        """Add identity strands on either side of every slice."""
        lw = tuple(Strand.parse(s) for s in left)
        rw = tuple(Strand.parse(s) for s in right)
        ids_l = tuple(Generator.id(s.k, s.dual) for s in lw)
        ids_r = tuple(Generator.id(s.k, s.dual) for s in rw)
        if not self.slices:
            return MorseDiagram((), lw + self.source + rw)
        return MorseDiagram(tuple(ids_l + s + ids_r for s in self.slices))

    def to_text(self) -> str:
        lines = []
        if not self.slices or not self.source:
            lines.append("in: " + " ".join(map(str, self.source)))
        lines += [" ".join(map(str, s)) for s in self.slices]
        return "\n".join(lines) + "\n"


def _pad(d: MorseDiagram, depth: int) -> MorseDiagram:
    ids = tuple(Generator.id(s.k, s.dual) for s in d.target)
    extra = tuple(ids for _ in range(depth - d.depth))
    if not extra:
        return d
    return MorseDiagram(d.slices + extra, d.source)


def evaluate_morse(d: MorseDiagram) -> Morphism:
    """Tensor the generators in each slice, compose slices bottom to top."""
    result = Morphism.identity(boundary_basis(d.source))
    for s in d.slices:
        result = compose(tensor_all([g.matrix() for g in s]), result)
    return result


# -- linear combinations -------------------------------------------------


@dataclass(frozen=True)
class MorseSum:
    """A formal ``Σ coeff · diagram`` with common boundary."""

    terms: tuple[tuple[LaurentPoly, MorseDiagram], ...] = field(default_factory=tuple)
    source: Word = ()
    target: Word = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for _, d in self.terms:
            if d.source != self.source or d.target != self.target:
                raise BoundaryMismatch(0, self.source + self.target, d.source + d.target)

    @classmethod
    def of(cls, *terms: tuple[LaurentPoly | int, MorseDiagram]) -> MorseSum:
        if not terms:
            raise ValueError("use MorseSum(source=..., target=...) for an empty sum")
        d0 = terms[0][1]
        return cls(tuple((LaurentPoly._coerce(c), d) for c, d in terms), d0.source, d0.target)

    def __add__(self, other: MorseSum) -> MorseSum:
        return MorseSum(self.terms + other.terms, self.source, self.target)

    def scale(self, c: LaurentPoly | int) -> MorseSum:
        c = LaurentPoly._coerce(c)
        return MorseSum(tuple((c * a, d) for a, d in self.terms), self.source, self.target)

    def __neg__(self) -> MorseSum:
        return self.scale(-1)

    def __sub__(self, other: MorseSum) -> MorseSum:
        return self + (-other)

    def then(self, other: MorseSum) -> MorseSum:
        """Bilinear vertical stacking."""
        terms = tuple(
            (a * b, d.then(e)) for a, d in self.terms for b, e in other.terms if a * b
        )
        return MorseSum(terms, self.source, other.target)


def evaluate_sum(s: MorseSum) -> Morphism:
    total = Morphism.zero(boundary_basis(s.source), boundary_basis(s.target))
    for c, d in s.terms:
        if c:
            total = total + evaluate_morse(d).scale(c)
    return total


# -- ladders as Morse diagrams -------------------------------------------


def rung_slices(kind: str, i: int, r: int, k: Sequence[int]) -> tuple[Slice, ...]:
    """The two slices of a rung ``E_i^(r)`` or ``F_i^(r)`` on weight ``k``.

    Returns ``()`` for ``r = 0``.  The caller must make sure the weights
    before and after are nonnegative.
    """
    if r == 0:
        return ()
    a, b = k[i - 1], k[i]
    left = tuple(Generator.id(v) for v in k[: i - 1])
    right = tuple(Generator.id(v) for v in k[i + 1 :])
    if kind == "F":
        lower = (Generator.split(a - r, r), Generator.id(b))
        upper = (Generator.id(a - r), Generator.merge(r, b))
    else:
        lower = (Generator.id(a), Generator.split(r, b - r))
        upper = (Generator.merge(a, r), Generator.id(b - r))
    return (left + lower + right, left + upper + right)


def ladder_to_morse(ladder: Ladder) -> MorseDiagram | None:
    """Morse form of an admissible ladder; ``None`` if some weight is negative."""
    if not ladder.admissible():
        return None
    slices: tuple[Slice, ...] = ()
    for rung, k in zip(ladder.rungs, ladder.weights()):
        slices += rung_slices(rung.kind, rung.index, rung.power, k)
    return MorseDiagram(slices, tuple(Strand(v) for v in ladder.input))


@lru_cache(maxsize=None)
def crossing_expansion(k1: int, k2: int, sign: int = 1) -> MorseSum:
    """A crossing ``k1 k2 -> k2 k1`` as a sum of ``E^(s) F^(r)`` ladders."""
    terms = []
    for coeff, r, s in crossing_terms(k1, k2, sign):
        mid = shift_weight((k1, k2), 1, "F", r)
        slices = rung_slices("F", 1, r, (k1, k2)) + rung_slices("E", 1, s, mid)
        terms.append((coeff, MorseDiagram(slices, (Strand(k1), Strand(k2)))))
    return MorseSum(tuple(terms), (Strand(k1), Strand(k2)), (Strand(k2), Strand(k1)))


def _expand_slice(s: Slice) -> MorseSum:
    """Replace the crossings of one slice by their expansions."""
    partial = [(LaurentPoly.ONE, MorseDiagram((), ()))]
    for g in s:
        if g.kind == "cross":
            pieces = [(c, d) for c, d in crossing_expansion(*g.colors, g.variant).terms]
        else:
            pieces = [(LaurentPoly.ONE, MorseDiagram(((g,),), g.source))]
        partial = [(a * c, d.beside(e)) for a, d in partial for c, e in pieces]
    return MorseSum(tuple(partial), _slice_source(s), _slice_target(s))


def expand_crossings(d: MorseDiagram) -> MorseSum:
    """Fully expand every crossing; the result has only MOY generators."""
    total = MorseSum(((LaurentPoly.ONE, MorseDiagram((), d.source)),), d.source, d.source)
    for s in d.slices:
        total = total.then(_expand_slice(s))
    return total


# -- text format ---------------------------------------------------------

_TOKEN = re.compile(
    r"""^(?:
        id:(?P<id>\d+)(?P<dual>\*)?
      | (?P<vert>merge|split):(?P<a>\d+),(?P<b>\d+)
      | (?P<cc>cup|cap):(?P<ccs>[+-])(?P<cck>\d+)
      | cross:(?P<x1>\d+),(?P<x2>\d+),(?P<xs>[+-])
    )$""",
    re.VERBOSE,
)


def parse_generator(token: str) -> Generator:
    m = _TOKEN.match(token)
    if m is None:
        raise ValueError(f"unknown generator {token!r}")
    if m["id"] is not None:
        return Generator.id(int(m["id"]), bool(m["dual"]))
    if m["vert"] is not None:
        return Generator(m["vert"], (int(m["a"]), int(m["b"])))
    if m["cc"] is not None:
        return Generator(m["cc"], (int(m["cck"]),), 1 if m["ccs"] == "+" else -1)
    return Generator.cross(int(m["x1"]), int(m["x2"]), 1 if m["xs"] == "+" else -1)


def parse_morse(text: str) -> MorseDiagram:
    """Parse one slice per line (bottom first); ``#`` starts a comment.

    An optional first line ``in: <strands>`` fixes the input boundary,
    which is required when the diagram has no slices.
    """
    declared: Word | None = None
    slices: list[Slice] = []
    below: Word | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("in:"):
            if slices or declared is not None:
                raise MorseParseError(lineno, "'in:' must come before all slices")
            try:
                declared = tuple(Strand.parse(t) for t in line[3:].split())
            except ValueError:
                raise MorseParseError(lineno, f"bad boundary {line[3:].strip()!r}") from None
            if any(s.k < 0 for s in declared):
                raise MorseParseError(lineno, "negative color in boundary")
            below = declared
            continue
        try:
            gens = tuple(parse_generator(t) for t in line.split())
        except ValueError as exc:
            raise MorseParseError(lineno, str(exc)) from None
        src = _slice_source(gens)
        if below is not None and src != below:
            raise MorseParseError(
                lineno, f"slice expects {_fmt_word(src)} but receives {_fmt_word(below)}"
            )
        slices.append(gens)
        below = _slice_target(gens)
    if declared is None and not slices:
        raise MorseParseError(0, "empty diagram without an 'in:' line")
    return MorseDiagram(tuple(slices), declared)
