"""Exact Laurent polynomials in ``q`` with integer coefficients.

Everything else in the package is a matrix over this ring.  Values are
immutable and hashable; arithmetic never leaves ``Z[q, q^-1]``.
Division is only offered in its exact form (:func:`exact_div`), which is
what divided powers ``F^(r) = F^r / [r]!`` need.

>>> q = LaurentPoly.q()
>>> str((q + q**-1) * (q + q**-1))
'q^-2 + 2 + q^2'
>>> str(quantum_binomial(4, 2))
'q^-4 + q^-2 + 2 + q^2 + q^4'
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "NotDivisible",
    "add",
    "mul",
    "exact_div",
    "quantum_integer",
    "quantum_factorial",
    "quantum_binomial",
    "parse",
]


class NotDivisible(ArithmeticError):
    """Raised when a Laurent polynomial division has no Laurent quotient."""


Scalar = Union["LaurentPoly", int]


class LaurentPoly:
    """An element of ``Z[q, q^-1]``.

    Stored as a mapping ``exponent -> nonzero coefficient``.  Construct
    with a mapping, an iterable of ``(exponent, coeff)`` pairs, or use
    the helpers :meth:`q`, :meth:`const`, :meth:`monomial`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # terms must already be pruned and sorted
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for ``±q^j``, the units of the ring."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def evaluate(self, x):
        """Substitute a number (or anything supporting ``**`` and ``+``)."""
        total = 0
        for e, c in self._terms.items():
            total = total + c * x**e
        return total

    def bar(self) -> LaurentPoly:
        """The bar involution ``q -> q^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """Return ``p(q^k)``."""
        return LaurentPoly({k * e: c for e, c in self._terms.items()})

    def shift(self, j: int) -> LaurentPoly:
        """Multiply by ``q^j``."""
        return LaurentPoly._raw({e + j: c for e, c in self._terms.items()})

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}) if other else _ZERO
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        acc = dict(self._terms)
        for e, c in o._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return _ZERO
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise NotDivisible(f"{self} is not a unit")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: c ** (-n)})
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __floordiv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return exact_div(self, o)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self._terms.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)


_ZERO = LaurentPoly._raw({})
_ONE = LaurentPoly._raw({0: 1})
LaurentPoly.ZERO = _ZERO
LaurentPoly.ONE = _ONE


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def exact_div(a: Scalar, b: Scalar) -> LaurentPoly:
    """Return ``c`` with ``b * c == a``; raise :class:`NotDivisible` otherwise."""
    a = LaurentPoly._coerce(a)
    b = LaurentPoly._coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if a.is_zero():
        return _ZERO
    # Strip the unit q^valuation from both, then long-divide ordinary
    # polynomials from the top degree down.
    va, vb = a.min_degree(), b.min_degree()
    num = {e - va: c for e, c in a._terms.items()}
    den = [(e - vb, c) for e, c in b._terms.items()]
    dtop, dlead = den[-1]
    quot: dict[int, int] = {}
    while num:
        top = max(num)
        if top < dtop:
            raise NotDivisible(f"({a}) / ({b})")
        c, r = divmod(num[top], dlead)
        if r:
            raise NotDivisible(f"({a}) / ({b})")
        shift = top - dtop
        quot[shift] = c
        for e, dc in den:
            k = e + shift
            v = num.get(k, 0) - c * dc
            if v:
                num[k] = v
            else:
                num.pop(k, None)
    return LaurentPoly({e + va - vb: c for e, c in quot.items()})


@lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentPoly:
    """``[n] = (q^n - q^-n) / (q - q^-1)``, defined for every integer ``n``."""
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly({n - 1 - 2 * j: 1 for j in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    result = _ONE
    for j in range(1, n + 1):
        result = result * quantum_integer(j)
    return result


@lru_cache(maxsize=None)
def quantum_binomial(a: int, t: int) -> LaurentPoly:
    """``[a choose t]`` via the falling product ``[a][a-1]...[a-t+1] / [t]!``.

    The top argument may be negative; ``t`` may not.
    """
    if t < 0:
        raise ValueError("quantum binomial needs t >= 0")
    num = _ONE
    for j in range(t):
        num = num * quantum_integer(a - j)
    return exact_div(num, quantum_factorial(t))


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+)\s*\*?\s*)?
        (q(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?
        \s*""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)``; also accepts ``2*q^3`` and ``q^(-1)``."""
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
        sign, digits, mono, exp = m.groups()
        if digits is None and mono is None:
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        e = 0 if mono is None else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)
