"""Ladders: words in divided powers ``E_i^(r)``, ``F_i^(r)`` of gl(m).

A weight ``(k_1, ..., k_m)`` is sent to the word ``⋀^{k_1} ⊗ ... ⊗ ⋀^{k_m}``
and a rung acts through merge/split on two neighbouring uprights:

* ``F_i^(r)``: ``(k_i, k_{i+1}) -> (k_i - r, k_{i+1} + r)``, the map
  ``id ⊗ merge(r, k_{i+1})`` after ``split(k_i - r, r) ⊗ id``;
* ``E_i^(r)``: ``(k_i, k_{i+1}) -> (k_i + r, k_{i+1} - r)``, the map
  ``merge(k_i, r) ⊗ id`` after ``id ⊗ split(r, k_{i+1} - r)``.

Weights with a negative entry are killed: they are sent to the
zero-dimensional space, so any ladder passing through one evaluates to 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .laurent import LaurentPoly
from .rep import Strand, identity, merge, split
from .superlin import GradedBasis, Morphism, compose, invert, tensor

__all__ = [
    "Weight",
    "Rung",
    "Ladder",
    "LadderParseError",
    "weight_basis",
    "rung_matrix",
    "evaluate_ladder",
    "t_element",
    "crossing_terms",
    "colored_crossing",
    "NotInvertible",
    "parse_ladder",
]

Weight = tuple[int, ...]

# the killed object: a single factor with no basis vectors
ZERO_SPACE = GradedBasis(((),))


class NotInvertible(ArithmeticError):
    """A braiding failed to invert over the Laurent ring."""


class LadderParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def weight_basis(k: Sequence[int]) -> GradedBasis:
    if any(v < 0 for v in k):
        return ZERO_SPACE
    return identity(tuple(Strand(v) for v in k)).domain


@dataclass(frozen=True)
class Rung:
    index: int  # 1-based: connects uprights index and index+1
    kind: str  # "E" or "F"
    power: int = 1

    def __post_init__(self):
        if self.kind not in ("E", "F"):
            raise ValueError(f"rung kind must be E or F, not {self.kind!r}")
        if self.power < 1:
            raise ValueError("rung power must be >= 1")
        if self.index < 1:
            raise ValueError("rung index must be >= 1")

    def act(self, k: Sequence[int]) -> Weight:
        return shift_weight(k, self.index, self.kind, self.power)

    def __str__(self) -> str:
        return f"{self.kind} {self.index} {self.power}"


def shift_weight(k: Sequence[int], i: int, kind: str, r: int) -> Weight:
    d = r if kind == "E" else -r
    out = list(k)
    out[i - 1] += d
    out[i] -= d
    return tuple(out)


@dataclass(frozen=True)
class Ladder:
    m: int
    input: Weight
    rungs: tuple[Rung, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "input", tuple(self.input))
        object.__setattr__(self, "rungs", tuple(self.rungs))
        if self.m < 1 or len(self.input) != self.m:
            raise ValueError(f"weight {self.input} does not have m={self.m} entries")
        for rung in self.rungs:
            if rung.index >= self.m:
                raise ValueError(f"rung {rung} needs uprights {rung.index},{rung.index + 1}")

    def weights(self) -> list[Weight]:
        """The input weight followed by the weight after each rung."""
        out = [self.input]
        for rung in self.rungs:
            out.append(rung.act(out[-1]))
        return out

    @property
    def output(self) -> Weight:
        return self.weights()[-1]

    def admissible(self) -> bool:
        return all(v >= 0 for w in self.weights() for v in w)

    def then(self, *rungs: Rung) -> Ladder:
        return Ladder(self.m, self.input, self.rungs + rungs)

    def to_text(self) -> str:
        head = f"m={self.m} weight=" + ",".join(map(str, self.input))
        return "\n".join([head] + [str(r) for r in self.rungs]) + "\n"


@lru_cache(maxsize=None)
def rung_matrix(kind: str, i: int, r: int, k: Weight) -> Morphism:
    """Matrix of ``E_i^(r) 1_k`` or ``F_i^(r) 1_k`` (``r >= 0``)."""
    out = shift_weight(k, i, kind, r)
    dom, cod = weight_basis(k), weight_basis(out)
    if dom is ZERO_SPACE or cod is ZERO_SPACE:
        return Morphism.zero(dom, cod)
    if r == 0:
        return Morphism.identity(dom)
    left = tuple(Strand(v) for v in k[: i - 1])
    right = tuple(Strand(v) for v in k[i + 1 :])
    a, b = k[i - 1], k[i]
    if kind == "F":
        local = compose(
            tensor(identity([a - r]), merge(r, b)), tensor(split(a - r, r), identity([b]))
        )
    else:
        local = compose(
            tensor(merge(a, r), identity([b - r])), tensor(identity([a]), split(r, b - r))
        )
    return tensor(tensor(identity(left), local), identity(right))


def evaluate_ladder(ladder: Ladder) -> Morphism:
    """Evaluate a ladder, rungs applied bottom (first) to top (last)."""
    weights = ladder.weights()
    dom, cod = weight_basis(weights[0]), weight_basis(weights[-1])
    if not ladder.admissible():
        return Morphism.zero(dom, cod)
    result = Morphism.identity(dom)
    for rung, k in zip(ladder.rungs, weights):
        result = compose(rung_matrix(rung.kind, rung.index, rung.power, k), result)
    return result


def word(k: Weight, *rungs: tuple[str, int, int]) -> Morphism:
    """Shorthand: ``word((1, 1), ("F", 1, 1), ("E", 1, 1))`` is ``E F 1_(1,1)``."""
    return evaluate_ladder(Ladder(len(k), tuple(k), tuple(Rung(i, kind, r) for kind, i, r in rungs)))


def crossing_terms(k1: int, k2: int, sign: int = 1) -> list[tuple[LaurentPoly, int, int]]:
    """Ladder expansion of a crossing on weight ``(k1, k2)``.

    Returns ``(coeff, r, s)`` meaning ``coeff · E^(s) F^(r) 1_(k1,k2)``.
    The positive crossing uses ``(-1)^(k1 k2) (-q)^(k2-s)``; the negative
    one is its bar image, ``(-1)^(k1 k2) (-q^-1)^(k2-s)``.
    """
    overall = -1 if (k1 * k2) % 2 else 1
    terms = []
    for r in range(0, k1 + 1):
        s = r - (k1 - k2)
        if s < 0:
            continue
        n = (k2 - s) * sign
        terms.append((LaurentPoly.monomial(n, overall * (-1 if n % 2 else 1)), r, s))
    return terms


@lru_cache(maxsize=None)
def t_element(i: int, k: Weight, sign: int = 1) -> Morphism:
    """The braiding element ``T_i 1_k : 1_k -> 1_{s_i(k)}``.

    ``(-1)^(k_i k_{i+1}) Σ_{r-s = k_i-k_{i+1}} (-q)^(k_{i+1}-s) E_i^(s) F_i^(r) 1_k``
    with ``r`` running up to ``k_i`` (larger ``r`` is killed).  ``sign=-1``
    gives the bar-conjugate sum, which is the inverse braiding
    ``1_k -> 1_{s_i(k)}``.
    """
    k = tuple(k)
    if any(v < 0 for v in k):
        raise ValueError(f"t_element needs a nonnegative weight, got {k}")
    a, b = k[i - 1], k[i]
    target = list(k)
    target[i - 1], target[i] = b, a
    total = Morphism.zero(weight_basis(k), weight_basis(target))
    for coeff, r, s in crossing_terms(a, b, sign):
        mid = shift_weight(k, i, "F", r)
        term = compose(rung_matrix("E", i, s, mid), rung_matrix("F", i, r, k))
        total = total + term.scale(coeff)
    return total


@lru_cache(maxsize=None)
def colored_crossing(k1: int, k2: int, sign: int = 1) -> Morphism:
    """Braiding ``⋀^{k1} ⊗ ⋀^{k2} -> ⋀^{k2} ⊗ ⋀^{k1}``.

    ``sign=+1`` is ``T_1 1_(k1,k2)``; ``sign=-1`` is the inverse of the
    positive crossing ``(k2, k1) -> (k1, k2)``.
    """
    if sign not in (1, -1):
        raise ValueError("crossing sign must be +1 or -1")
    if sign > 0:
        return t_element(1, (k1, k2))
    try:
        return invert(t_element(1, (k2, k1)))
    except (ArithmeticError, ZeroDivisionError) as exc:
        raise NotInvertible(f"crossing ({k2},{k1}) is not invertible: {exc}") from exc


def parse_ladder(text: str) -> Ladder:
    """Parse ``m=<int> weight=<ints>`` followed by ``F i r`` / ``E i r`` lines."""
    header = None
    rungs: list[Rung] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            fields = dict(part.split("=", 1) for part in line.split() if "=" in part)
            if set(fields) != {"m", "weight"} or len(line.split()) != 2:
                raise LadderParseError(lineno, "expected header 'm=<int> weight=<ints>'")
            try:
                m = int(fields["m"])
                weight = tuple(int(v) for v in fields["weight"].split(",") if v != "")
            except ValueError as exc:
                raise LadderParseError(lineno, f"bad header: {exc}") from None
            if m < 1 or len(weight) != m:
                raise LadderParseError(lineno, f"weight has {len(weight)} entries, m={m}")
            if any(v < 0 for v in weight):
                raise LadderParseError(lineno, "input weight must be nonnegative")
            header = (m, weight)
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("E", "F"):
            raise LadderParseError(lineno, f"expected 'E i r' or 'F i r', got {line!r}")
        try:
            i, r = int(parts[1]), int(parts[2])
        except ValueError:
            raise LadderParseError(lineno, f"non-integer rung in {line!r}") from None
        if not 1 <= i < header[0]:
            raise LadderParseError(lineno, f"rung index {i} out of range for m={header[0]}")
        if r < 1:
            raise LadderParseError(lineno, "rung power must be >= 1")
        rungs.append(Rung(i, parts[0], r))
    if header is None:
        raise LadderParseError(0, "missing header")
    return Ladder(header[0], header[1], tuple(rungs))
