"""Super-graded linear algebra over :class:`~gl11.laurent.LaurentPoly`.

A :class:`GradedBasis` is always a tensor word of *factor* bases; each
factor is an ordered list of ``(label, parity)`` pairs.  Vector labels of
the word are tuples of factor labels, so tensoring two bases is plain
tuple concatenation and the tensor product is strictly associative, with
the empty word as a strict unit.

Signs follow the Koszul rule

    (f ⊗ g)(x ⊗ y) = (-1)^(|g|·|x|) f(x) ⊗ g(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .laurent import LaurentPoly, exact_div

__all__ = [
    "BasisMismatch",
    "NotEndomorphism",
    "NotScalar",
    "GradedBasis",
    "Morphism",
    "compose",
    "tensor",
    "partial_supertrace",
    "determinant",
    "invert",
]

Label = Hashable
Factor = tuple[tuple[Label, int], ...]

ZERO = LaurentPoly.ZERO
ONE = LaurentPoly.ONE


class BasisMismatch(ValueError):
    """Composition or addition of morphisms whose bases disagree."""


class NotEndomorphism(ValueError):
    pass


class NotScalar(ValueError):
    """A morphism expected to be a multiple of the identity is not."""


class GradedBasis:
    """Ordered graded basis of a tensor word of factor spaces.

    Instances are interned, so equal bases are usually identical objects.
    """

    __slots__ = ("factors", "vectors", "index", "__weakref__")

    def __new__(cls, factors: Iterable[Factor]):
        return _intern(tuple(tuple((lab, p % 2) for lab, p in f) for f in factors))

    @classmethod
    def _build(cls, factors: tuple[Factor, ...]) -> GradedBasis:
        obj = object.__new__(cls)
        obj.factors = factors
        vecs = []
        for combo in product(*factors):
            vecs.append((tuple(lab for lab, _ in combo), sum(p for _, p in combo) % 2))
        obj.vectors = tuple(vecs)
        obj.index = {lab: i for i, (lab, _) in enumerate(vecs)}
        if len(obj.index) != len(vecs):
            raise ValueError("basis labels must be pairwise distinct")
        return obj

    @classmethod
    def single(cls, vectors: Sequence[tuple[Label, int]]) -> GradedBasis:
        """A one-factor basis."""
        return cls((tuple(vectors),))

    @classmethod
    def unit(cls) -> GradedBasis:
        """The empty word: one even vector labelled ``()``."""
        return cls(())

    def tensor(self, other: GradedBasis) -> GradedBasis:
        return GradedBasis(self.factors + other.factors)

    def __len__(self) -> int:
        return len(self.vectors)

    def parity(self, i: int) -> int:
        return self.vectors[i][1]

    def label(self, i: int):
        return self.vectors[i][0]

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, GradedBasis):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        words = ["{" + ",".join(f"{lab}:{p}" for lab, p in f) + "}" for f in self.factors]
        return "GradedBasis(" + " ⊗ ".join(words) + ")"


@lru_cache(maxsize=None)
def _intern(factors: tuple[Factor, ...]) -> GradedBasis:
    return GradedBasis._build(factors)


def _fmt_label(label) -> str:
    return "⊗".join(str(x) for x in label) if label else "1"


@dataclass(frozen=True, eq=False)
class Morphism:
    """A homogeneous linear map between graded bases.

    ``entries`` maps ``(row, col)`` indices to nonzero Laurent polynomials.
    """

    domain: GradedBasis
    codomain: GradedBasis
    entries: Mapping[tuple[int, int], LaurentPoly]
    degree: int = 0

    def __post_init__(self):
        object.__setattr__(self, "degree", self.degree % 2)
        for (r, c), v in self.entries.items():
            if not v:
                raise ValueError("stored entries must be nonzero")
            if (self.codomain.parity(r) - self.domain.parity(c) - self.degree) % 2:
                raise ValueError(
                    f"entry {_fmt_label(self.codomain.label(r))} <- "
                    f"{_fmt_label(self.domain.label(c))} violates degree {self.degree}"
                )

    # -- constructors ---------------------------------------------------
    @classmethod
    def _make(cls, domain, codomain, entries, degree=0) -> Morphism:
        # skips the parity check; callers guarantee it by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "domain", domain)
        object.__setattr__(obj, "codomain", codomain)
        object.__setattr__(obj, "entries", entries)
        object.__setattr__(obj, "degree", degree % 2)
        return obj

    @classmethod
    def identity(cls, basis: GradedBasis) -> Morphism:
        return cls._make(basis, basis, {(i, i): ONE for i in range(len(basis))})

    @classmethod
    def zero(cls, domain: GradedBasis, codomain: GradedBasis, degree: int = 0) -> Morphism:
        return cls._make(domain, codomain, {}, degree)

    @classmethod
    def from_images(
        cls,
        domain: GradedBasis,
        codomain: GradedBasis,
        images: Mapping[Label, Mapping[Label, LaurentPoly | int]],
        degree: int = 0,
    ) -> Morphism:
        """Build from ``{domain_label: {codomain_label: coeff}}``."""
        entries: dict[tuple[int, int], LaurentPoly] = {}
        for src, image in images.items():
            c = domain.index[src]
            for dst, coeff in image.items():
                coeff = LaurentPoly._coerce(coeff)
                if coeff:
                    r = codomain.index[dst]
                    entries[(r, c)] = entries.get((r, c), ZERO) + coeff
        return cls(domain, codomain, {k: v for k, v in entries.items() if v}, degree)

    # -- queries --------------------------------------------------------
    def entry(self, row_label, col_label) -> LaurentPoly:
        return self.entries.get(
            (self.codomain.index[row_label], self.domain.index[col_label]), ZERO
        )

    def image(self, col_label) -> dict:
        """The image of one basis vector as ``{codomain_label: coeff}``."""
        c = self.domain.index[col_label]
        return {self.codomain.label(r): v for (r, cc), v in self.entries.items() if cc == c}

    def is_zero(self) -> bool:
        return not self.entries

    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    def scalar(self) -> LaurentPoly:
        """Return ``c`` if this map equals ``c · identity``; else raise NotScalar."""
        if not self.is_endomorphism() or self.degree:
            raise NotScalar("not an even endomorphism")
        n = len(self.domain)
        if any(r != c for r, c in self.entries):
            raise NotScalar("off-diagonal entries present")
        vals = {self.entries.get((i, i), ZERO) for i in range(n)}
        if len(vals) != 1:
            raise NotScalar("diagonal is not constant: " + ", ".join(sorted(map(str, vals))))
        return vals.pop() if n else ZERO

    # -- algebra --------------------------------------------------------
    def _check_same_shape(self, other: Morphism) -> None:
        if self.domain != other.domain or self.codomain != other.codomain:
            raise BasisMismatch("morphisms have different domain or codomain")
        if self.degree != other.degree and self.entries and other.entries:
            raise BasisMismatch("cannot add morphisms of different degree")

    def __add__(self, other: Morphism) -> Morphism:
        if not isinstance(other, Morphism):
            return NotImplemented
        self._check_same_shape(other)
        acc = dict(self.entries)
        for k, v in other.entries.items():
            s = acc.get(k, ZERO) + v
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        deg = self.degree if self.entries else other.degree
        return Morphism._make(self.domain, self.codomain, acc, deg)

    def __neg__(self) -> Morphism:
        return Morphism._make(
            self.domain, self.codomain, {k: -v for k, v in self.entries.items()}, self.degree
        )

    def __sub__(self, other: Morphism) -> Morphism:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> Morphism:
        c = LaurentPoly._coerce(c)
        if not c:
            return Morphism._make(self.domain, self.codomain, {}, self.degree)
        return Morphism._make(
            self.domain, self.codomain, {k: c * v for k, v in self.entries.items()}, self.degree
        )

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    def __matmul__(self, other: Morphism) -> Morphism:
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        if self.domain != other.domain or self.codomain != other.codomain:
            return False
        if self.entries != other.entries:
            return False
        return not self.entries or self.degree == other.degree

    __hash__ = None

    def map_entries(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> Morphism:
        return Morphism(
            self.domain,
            self.codomain,
            {k: v2 for k, v in self.entries.items() if (v2 := fn(v))},
            self.degree,
        )

    def render(self) -> str:
        """Labelled matrix, rows = codomain, columns = domain, with parities."""
        cols = [f"{_fmt_label(l)}|{p}" for l, p in self.domain.vectors]
        rows = [f"{_fmt_label(l)}|{p}" for l, p in self.codomain.vectors]
        cells = [
            [str(self.entries.get((r, c), "0")) for c in range(len(cols))]
            for r in range(len(rows))
        ]
        w0 = max([len(r) for r in rows] + [0])
        widths = [
            max([len(cols[c])] + [len(cells[r][c]) for r in range(len(rows))])
            for c in range(len(cols))
        ]
        lines = [" " * w0 + " | " + "  ".join(h.rjust(w) for h, w in zip(cols, widths))]
        lines.append("-" * len(lines[0]))
        for r, name in enumerate(rows):
            lines.append(
                name.rjust(w0) + " | " + "  ".join(x.rjust(w) for x, w in zip(cells[r], widths))
            )
        return "\n".join(lines)

    def __repr__(self) -> str:
        return (
            f"Morphism({len(self.domain)}->{len(self.codomain)}, "
            f"degree={self.degree}, nnz={len(self.entries)})"
        )


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g ∘ f``: apply ``f`` first."""
    if g.domain != f.codomain:
        raise BasisMismatch(f"cannot compose: {g.domain!r} != {f.codomain!r}")
    by_row: dict[int, list[tuple[int, LaurentPoly]]] = {}
    for (r, c), v in f.entries.items():
        by_row.setdefault(r, []).append((c, v))
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (r, k), gv in g.entries.items():
        for c, fv in by_row.get(k, ()):
            key = (r, c)
            acc[key] = acc.get(key, ZERO) + gv * fv
    return Morphism._make(
        f.domain, g.codomain, {k: v for k, v in acc.items() if v}, g.degree + f.degree
    )


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """``f ⊗ g`` with the Koszul sign ``(-1)^(|g|·|x|)`` for ``x`` in dom(f)."""
    dom = f.domain.tensor(g.domain)
    cod = f.codomain.tensor(g.codomain)
    n2d, n2c = len(g.domain), len(g.codomain)
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (r1, c1), v1 in f.entries.items():
        sign = -1 if (g.degree and f.domain.parity(c1)) else 1
        for (r2, c2), v2 in g.entries.items():
            v = v1 * v2
            acc[(r1 * n2c + r2, c1 * n2d + c2)] = -v if sign < 0 else v
    return Morphism._make(dom, cod, acc, f.degree + g.degree)


def tensor_all(maps: Sequence[Morphism]) -> Morphism:
    if not maps:
        return Morphism.identity(GradedBasis.unit())
    out = maps[0]
    for m in maps[1:]:
        out = tensor(out, m)
    return out


def partial_supertrace(
    f: Morphism,
    factor: int,
    weights: Mapping[Label, LaurentPoly | int] | Callable[[Label], LaurentPoly | int],
) -> Morphism:
    """Contract tensor slot ``factor`` of the endomorphism ``f``.

    Output entry = Σ_b (-1)^|b| · weights(b) · f[(.., b, ..), (.., b, ..)]
    where ``b`` runs over the basis of the traced slot.
    """
    if not f.is_endomorphism():
        raise NotEndomorphism("partial supertrace needs an endomorphism")
    basis = f.domain
    nf = len(basis.factors)
    if not 0 <= factor < nf:
        raise IndexError(f"slot {factor} out of range for {nf} factors")
    weight = weights if callable(weights) else weights.__getitem__
    slot_parity = dict(basis.factors[factor])
    signed = {
        lab: (-1 if p else 1) * LaurentPoly._coerce(weight(lab)) for lab, p in slot_parity.items()
    }
    rest = GradedBasis(basis.factors[:factor] + basis.factors[factor + 1 :])
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (r, c), v in f.entries.items():
        rl, cl = basis.label(r), basis.label(c)
        b = rl[factor]
        if b != cl[factor]:
            continue
        key = (
            rest.index[rl[:factor] + rl[factor + 1 :]],
            rest.index[cl[:factor] + cl[factor + 1 :]],
        )
        acc[key] = acc.get(key, ZERO) + signed[b] * v
    return Morphism._make(rest, rest, {k: v for k, v in acc.items() if v}, f.degree)


def determinant(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over ``Z[q, q^-1]``."""
    n = len(rows)
    if n == 0:
        return ONE
    a = [[LaurentPoly._coerce(v) for v in row] for row in rows]
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def invert(f: Morphism) -> Morphism:
    """Exact inverse via adjugate / determinant.

    Raises :class:`~gl11.laurent.NotDivisible` when an entry of the
    inverse would leave the Laurent ring, and ``ZeroDivisionError`` when
    ``f`` is singular.
    """
    n, m = len(f.domain), len(f.codomain)
    if n != m:
        raise ValueError("only square morphisms can be inverted")
    dense = [[f.entries.get((r, c), ZERO) for c in range(n)] for r in range(n)]
    det = determinant(dense)
    if not det:
        raise ZeroDivisionError("singular morphism")
    entries: dict[tuple[int, int], LaurentPoly] = {}
    for r in range(n):
        for c in range(n):
            minor = [row[:r] + row[r + 1 :] for i, row in enumerate(dense) if i != c]
            cof = determinant(minor)
            if cof:
                v = exact_div(cof if (r + c) % 2 == 0 else -cof, det)
                entries[(r, c)] = v
    # inverse maps codomain -> domain; entry (r, c) = adj[r][c] / det
    return Morphism(f.codomain, f.domain, entries, f.degree)
