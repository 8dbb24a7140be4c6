"""Matrix models of the wedge powers of the standard U_q(gl(1|1)) module.

``⋀^k`` (``k >= 1``) is two dimensional with basis

* ``u_k = v∧w^(k-1)``, parity ``k-1``
* ``x_k = w^k``, parity ``k``

and ``⋀^0`` is the trivial module spanned by ``x_0 = 1``.  Duals carry
the labels ``u_k*``, ``x_k*`` with the same parities.  All structure
maps below are even morphisms between word bases built from these
factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from .laurent import LaurentPoly, quantum_binomial, quantum_integer
from .superlin import GradedBasis, Morphism, tensor, tensor_all

__all__ = [
    "Strand",
    "RepObject",
    "UnsupportedDual",
    "as_object",
    "identity",
    "merge",
    "split",
    "ev",
    "coev",
    "hat_ev",
    "hat_coev",
    "generator_action",
    "r_matrix_standard",
    "r_inverse_standard",
    "closure_weights",
]

Q = LaurentPoly.q()
ONE = LaurentPoly.ONE


def qpow(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(n)


def neg_qpow(n: int) -> LaurentPoly:
    """``(-q)^n``."""
    return LaurentPoly.monomial(n, -1 if n % 2 else 1)


def sign(n: int) -> int:
    return -1 if n % 2 else 1


class UnsupportedDual(ValueError):
    """Generator actions are only modelled on words without dual factors."""


class Strand(NamedTuple):
    k: int
    dual: bool = False

    def __str__(self) -> str:
        return f"{self.k}*" if self.dual else str(self.k)

    @classmethod
    def parse(cls, token: str | int | Strand) -> Strand:
        if isinstance(token, Strand):
            return token
        if isinstance(token, int):
            return cls(token)
        t = token.strip()
        dual = t.endswith("*")
        k = int(t[:-1] if dual else t)
        return cls(k, dual)


def u(k: int, dual: bool = False) -> str:
    return f"u{k}*" if dual else f"u{k}"


def x(k: int, dual: bool = False) -> str:
    return f"x{k}*" if dual else f"x{k}"


@lru_cache(maxsize=None)
def factor_basis(strand: Strand):
    k, dual = strand
    if k < 0:
        raise ValueError(f"negative color {k}")
    if k == 0:
        return ((x(0, dual), 0),)
    return ((u(k, dual), (k - 1) % 2), (x(k, dual), k % 2))


@dataclass(frozen=True)
class RepObject:
    """A tensor word ``⋀^{k1} ⊗ ... ⊗ ⋀^{km}``, entries possibly dual."""

    factors: tuple[Strand, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(Strand.parse(s) for s in self.factors))
        for s in self.factors:
            if s.k < 0:
                raise ValueError(f"negative color in {self}")

    @classmethod
    def parse(cls, text: str) -> RepObject:
        return cls(tuple(Strand.parse(t) for t in text.replace(",", " ").split()))

    @property
    def basis(self) -> GradedBasis:
        return _word_basis(self.factors)

    @property
    def has_dual(self) -> bool:
        return any(s.dual for s in self.factors)

    def __add__(self, other: RepObject) -> RepObject:
        return RepObject(self.factors + as_object(other).factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.factors)) + ")"


ObjectLike = Union[RepObject, Iterable[Union[int, str, Strand]]]


def as_object(obj: ObjectLike) -> RepObject:
    if isinstance(obj, RepObject):
        return obj
    return RepObject(tuple(Strand.parse(s) for s in obj))


@lru_cache(maxsize=None)
def _word_basis(factors: tuple[Strand, ...]) -> GradedBasis:
    return GradedBasis(tuple(factor_basis(s) for s in factors))


@lru_cache(maxsize=None)
def _identity(factors: tuple[Strand, ...]) -> Morphism:
    return Morphism.identity(_word_basis(factors))


def identity(obj: ObjectLike) -> Morphism:
    return _identity(as_object(obj).factors)


def _check_color(*ks: int) -> None:
    for k in ks:
        if k < 0:
            raise ValueError(f"negative color {k}")


@lru_cache(maxsize=None)
def merge(k: int, l: int) -> Morphism:
    """The wedge product ``⋀^k ⊗ ⋀^l -> ⋀^(k+l)``."""
    _check_color(k, l)
    dom = _word_basis((Strand(k), Strand(l)))
    cod = _word_basis((Strand(k + l),))
    images: dict = {(x(k), x(l)): {(x(k + l),): 1}}
    if k >= 1:
        images[(u(k), x(l))] = {(u(k + l),): 1}
    if l >= 1:
        images[(x(k), u(l))] = {(u(k + l),): neg_qpow(k)}
    return Morphism.from_images(dom, cod, images)


@lru_cache(maxsize=None)
def split(k: int, l: int) -> Morphism:
    """The coproduct ``⋀^(k+l) -> ⋀^k ⊗ ⋀^l``."""
    _check_color(k, l)
    dom = _word_basis((Strand(k + l),))
    cod = _word_basis((Strand(k), Strand(l)))
    images: dict = {(x(k + l),): {(x(k), x(l)): quantum_binomial(k + l, k)}}
    if k + l >= 1:
        image = {}
        c1 = qpow(-l) * quantum_binomial(k + l - 1, l)
        c2 = sign(k) * quantum_binomial(k + l - 1, k)
        # a coefficient whose target vector does not exist must vanish
        if k >= 1:
            image[(u(k), x(l))] = c1
        elif c1:
            raise AssertionError("split: nonzero coefficient on missing u_0")
        if l >= 1:
            image[(x(k), u(l))] = c2
        elif c2:
            raise AssertionError("split: nonzero coefficient on missing u_0")
        images[(u(k + l),)] = image
    return Morphism.from_images(dom, cod, images)


@lru_cache(maxsize=None)
def coev(i: int) -> Morphism:
    """``1 -> ⋀^i ⊗ (⋀^i)*``."""
    _check_color(i)
    cod = _word_basis((Strand(i), Strand(i, True)))
    image = {(x(i), x(i, True)): 1}
    if i >= 1:
        image[(u(i), u(i, True))] = 1
    return Morphism.from_images(GradedBasis.unit(), cod, {(): image})


@lru_cache(maxsize=None)
def hat_coev(i: int) -> Morphism:
    """``1 -> (⋀^i)* ⊗ ⋀^i``."""
    _check_color(i)
    cod = _word_basis((Strand(i, True), Strand(i)))
    s = sign(i - 1)
    image = {(x(i, True), x(i)): -s * qpow(-i)}
    if i >= 1:
        image[(u(i, True), u(i))] = s * qpow(-i)
    return Morphism.from_images(GradedBasis.unit(), cod, {(): image})


@lru_cache(maxsize=None)
def ev(i: int) -> Morphism:
    """``(⋀^i)* ⊗ ⋀^i -> 1``."""
    _check_color(i)
    dom = _word_basis((Strand(i, True), Strand(i)))
    images: dict = {(x(i, True), x(i)): {(): 1}}
    if i >= 1:
        images[(u(i, True), u(i))] = {(): 1}
    return Morphism.from_images(dom, GradedBasis.unit(), images)


@lru_cache(maxsize=None)
def hat_ev(i: int) -> Morphism:
    """``⋀^i ⊗ (⋀^i)* -> 1``."""
    _check_color(i)
    dom = _word_basis((Strand(i), Strand(i, True)))
    images: dict = {(x(i), x(i, True)): {(): neg_qpow(i)}}
    if i >= 1:
        images[(u(i), u(i, True))] = {(): sign(i - 1) * qpow(i)}
    return Morphism.from_images(dom, GradedBasis.unit(), images)


def closure_weights(k: int, side: str = "right") -> dict[str, LaurentPoly]:
    """Per-basis-vector weights for closing a strand of color ``k``.

    ``right`` uses the K-eigenvalue ``q^k`` (the hatted cap), ``left``
    uses ``q^-k`` (the hatted cup).  The parity sign is applied by the
    supertrace itself.
    """
    e = k if side == "right" else -k
    if side not in ("right", "left"):
        raise ValueError(f"unknown closure side {side!r}")
    return {lab: qpow(e) for lab, _ in factor_basis(Strand(k))}


# -- U_q(gl(1|1)) generator actions ------------------------------------

GENERATORS = ("E", "F", "L1", "L2", "K", "Kinv")


@lru_cache(maxsize=None)
def _factor_action(g: str, k: int) -> Morphism:
    basis = _word_basis((Strand(k),))
    if g == "E":
        images = {(x(k),): {(u(k),): quantum_integer(k)}} if k >= 1 else {}
        return Morphism.from_images(basis, basis, images, degree=1)
    if g == "F":
        images = {(u(k),): {(x(k),): 1}} if k >= 1 else {}
        return Morphism.from_images(basis, basis, images, degree=1)
    eig = {
        "L1": (qpow(1), ONE),
        "L2": (qpow(k - 1), qpow(k)),
        "K": (qpow(k), qpow(k)),
        "Kinv": (qpow(-k), qpow(-k)),
    }[g]
    images = {(x(k),): {(x(k),): eig[1]}}
    if k >= 1:
        images[(u(k),)] = {(u(k),): eig[0]}
    return Morphism.from_images(basis, basis, images)


@lru_cache(maxsize=None)
def _word_action(g: str, ks: tuple[int, ...]) -> Morphism:
    if g in ("L1", "L2", "K", "Kinv"):
        return tensor_all([_factor_action(g, k) for k in ks])
    basis = _word_basis(tuple(Strand(k) for k in ks))
    total = Morphism.zero(basis, basis, degree=1)
    # Δ(E) = E⊗K^-1 + 1⊗E and Δ(F) = F⊗1 + K⊗F, iterated
    for j in range(len(ks)):
        if g == "E":
            parts = [_identity((Strand(k),)) for k in ks[:j]]
            parts.append(_factor_action("E", ks[j]))
            parts += [_factor_action("Kinv", k) for k in ks[j + 1 :]]
        else:
            parts = [_factor_action("K", k) for k in ks[:j]]
            parts.append(_factor_action("F", ks[j]))
            parts += [_identity((Strand(k),)) for k in ks[j + 1 :]]
        total = total + tensor_all(parts)
    return total


def generator_action(g: str, obj: ObjectLike) -> Morphism:
    """Action matrix of ``g`` in ``E, F, L1, L2, K, Kinv`` on a word."""
    obj = as_object(obj)
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}; expected one of {GENERATORS}")
    if obj.has_dual:
        raise UnsupportedDual(f"generator actions on dual factors are not modelled: {obj}")
    return _word_action(g, tuple(s.k for s in obj.factors))


# -- R-matrix on the standard module -----------------------------------

_V, _W = u(1), x(1)


@lru_cache(maxsize=None)
def r_matrix_standard() -> Morphism:
    """The braiding on ``C^{1|1} ⊗ C^{1|1}`` (flip already included)."""
    b = _word_basis((Strand(1), Strand(1)))
    return Morphism.from_images(
        b,
        b,
        {
            (_W, _W): {(_W, _W): -qpow(-1)},
            (_V, _W): {(_V, _W): Q - qpow(-1), (_W, _V): 1},
            (_W, _V): {(_V, _W): 1},
            (_V, _V): {(_V, _V): Q},
        },
    )


@lru_cache(maxsize=None)
def r_inverse_standard() -> Morphism:
    b = _word_basis((Strand(1), Strand(1)))
    return Morphism.from_images(
        b,
        b,
        {
            (_W, _W): {(_W, _W): -Q},
            (_V, _W): {(_W, _V): 1},
            (_W, _V): {(_W, _V): qpow(-1) - Q, (_V, _W): 1},
            (_V, _V): {(_V, _V): qpow(-1)},
        },
    )


def on_slots(f: Morphism, left: ObjectLike, right: ObjectLike) -> Morphism:
    """``id_left ⊗ f ⊗ id_right``."""
    return tensor(tensor(identity(left), f), identity(right))
