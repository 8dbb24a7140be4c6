"""Exact verification of the relation families over bounded grids.

Every checker builds both sides of an identity, evaluates them to
matrices over ``Z[q, q^-1]`` and reports the difference.  A nonzero
``perturb`` argument deliberately breaks the identity by adding
``perturb`` times a term that is nonzero whenever the check is not
vacuous; those are the negative controls.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .ladder import Ladder, Rung, evaluate_ladder, t_element, weight_basis
from .laurent import LaurentPoly, quantum_binomial, quantum_integer
from .morse import MorseDiagram, MorseSum, evaluate_morse, evaluate_sum, ladder_to_morse, parse_morse
from .rep import Strand, generator_action
from .superlin import Morphism, compose

__all__ = [
    "RelationReport",
    "check_moy_move",
    "check_xi",
    "check_derived_xi",
    "check_ladder_relations",
    "check_commuting_actions",
    "check_braid_relations",
    "moy_grid",
    "xi_grid",
    "FAMILIES",
    "run_family",
]


@dataclass(frozen=True)
class RelationReport:
    family: str
    parameters: tuple
    holds: bool
    lhs_minus_rhs: Morphism

    def __str__(self) -> str:
        status = "ok  " if self.holds else "FAIL"
        params = ",".join(map(str, self.parameters))
        return f"{status} {self.family}({params})"


def _report(family: str, params: tuple, diff: Morphism) -> RelationReport:
    return RelationReport(family, tuple(params), diff.is_zero(), diff)


def _diagram(*rows: str) -> MorseDiagram:
    return parse_morse("\n".join(rows))


def _ident(word: str) -> Morphism:
    return evaluate_morse(parse_morse(f"in: {word}"))


# -- MOY moves -----------------------------------------------------------


def _move0(i: int, orientation: int = 1) -> tuple[Morphism, Morphism, Morphism]:
    o = "+" if orientation > 0 else "-"
    lhs = evaluate_morse(_diagram(f"cup:{o}{i}", f"cap:{o}{i}"))
    rhs = Morphism.zero(lhs.domain, lhs.codomain)
    return lhs, rhs, Morphism.identity(lhs.domain)


def _move1(i: int, j: int, orientation: int = 1) -> tuple[Morphism, Morphism, Morphism]:
    if orientation > 0:
        d = _diagram(
            f"id:{i} cup:+{j}",
            f"merge:{i},{j} id:{j}*",
            f"split:{i},{j} id:{j}*",
            f"id:{i} cap:+{j}",
        )
    else:
        d = _diagram(
            f"cup:-{j} id:{i}",
            f"id:{j}* merge:{j},{i}",
            f"id:{j}* split:{j},{i}",
            f"cap:-{j} id:{i}",
        )
    lhs = evaluate_morse(d)
    c = (-1) ** j * quantum_binomial(i + j - 1, j)
    rhs = _ident(str(i)).scale(c)
    return lhs, rhs, _ident(str(i))


def _move2(i: int, j: int) -> tuple[Morphism, Morphism, Morphism]:
    lhs = evaluate_morse(_diagram(f"split:{i - j},{j}", f"merge:{i - j},{j}"))
    ident = _ident(str(i))
    return lhs, ident.scale(quantum_binomial(i, j)), ident


def _move3(a: int, b: int, c: int, kind: int = 1) -> tuple[Morphism, Morphism, Morphism]:
    if kind > 0:  # coassociativity of split
        lhs = evaluate_morse(_diagram(f"split:{a + b},{c}", f"split:{a},{b} id:{c}"))
        rhs = evaluate_morse(_diagram(f"split:{a},{b + c}", f"id:{a} split:{b},{c}"))
    else:  # associativity of merge
        lhs = evaluate_morse(_diagram(f"merge:{a},{b} id:{c}", f"merge:{a + b},{c}"))
        rhs = evaluate_morse(_diagram(f"id:{a} merge:{b},{c}", f"merge:{a},{b + c}"))
    return lhs, rhs, lhs


def _move4(i: int) -> tuple[Morphism, Morphism, Morphism]:
    j = i - 1
    lhs = evaluate_morse(
        _diagram(
            f"cup:-{i} id:1 id:{i}*",
            f"id:{i}* merge:{i},1 id:{i}*",
            f"id:{i}* split:1,{i} id:{i}*",
            f"id:{i}* id:1 cap:+{i}",
            f"id:{i}* id:1 cup:+{i}",
            f"id:{i}* merge:1,{i} id:{i}*",
            f"id:{i}* split:{i},1 id:{i}*",
            f"cap:-{i} id:1 id:{i}*",
        )
    )
    digon = evaluate_morse(
        _diagram(
            f"cup:-{j} id:1 id:{i}*",
            f"id:{j}* merge:{j},1 id:{i}*",
            f"id:{j}* cap:+{i}",
            f"id:{j}* cup:+{i}",
            f"id:{j}* split:{j},1 id:{i}*",
            f"cap:-{j} id:1 id:{i}*",
        )
    )
    ident = _ident(f"1 {i}*")
    rhs = digon.scale(-quantum_integer(i + 1)) + ident
    return lhs, rhs, ident


def _ladder_sum(m: int, k: tuple, terms: Sequence[tuple[LaurentPoly, Sequence[Rung]]]) -> MorseSum | None:
    """``Σ coeff · ladder`` as Morse diagrams, dropping killed ladders."""
    out = []
    target = None
    for coeff, rungs in terms:
        lad = Ladder(m, k, tuple(rungs))
        target = lad.output
        d = ladder_to_morse(lad)
        if d is not None and coeff:
            out.append((coeff, d))
    src = tuple(Strand(v) for v in k)
    tgt = tuple(Strand(v) for v in target)
    return MorseSum(tuple(out), src, tgt)


def _rungs(*pairs: tuple[str, int]) -> list[Rung]:
    """Rungs on column 1 from ``(kind, power)`` pairs; zero powers are dropped."""
    return [Rung(1, kind, r) for kind, r in pairs if r > 0]


def _move5(k: int, l: int, r: int, s: int, orientation: int = 1) -> tuple[Morphism, Morphism, Morphism]:
    # orientation +1: E^(r) F^(s) 1_(k,l); -1: the mirror F^(r) E^(s) 1_(k,l)
    first, second = ("F", "E") if orientation > 0 else ("E", "F")
    lam = (k - l) if orientation > 0 else (l - k)
    lhs_sum = _ladder_sum(2, (k, l), [(LaurentPoly.ONE, _rungs((first, s), (second, r)))])
    rhs_terms = []
    for t in range(0, min(r, s) + 1):
        c = quantum_binomial(lam + r - s, t)
        rhs_terms.append((c, _rungs((second, r - t), (first, s - t))))
    rhs_sum = _ladder_sum(2, (k, l), rhs_terms)
    lhs, rhs = evaluate_sum(lhs_sum), evaluate_sum(rhs_sum)
    return lhs, rhs, lhs


_MOVES = {0: _move0, 1: _move1, 2: _move2, 3: _move3, 4: _move4, 5: _move5}


def check_moy_move(n: int, params: Sequence[int], perturb: int = 0) -> RelationReport:
    """Check MOY move ``n`` (0..5) at ``params``.

    * 0: ``(i, orientation)`` circle of color ``i`` is zero
    * 1: ``(i, j, orientation)`` bubble on a side loop is ``(-1)^j [i+j-1, j]``
    * 2: ``(i, j)`` digon removal ``[i, j]``
    * 3: ``(a, b, c, kind)`` (co)associativity, ``kind = +1`` split, ``-1`` merge
    * 4: ``(i,)`` square move with dual strands
    * 5: ``(k, l, r, s, orientation)`` square/ladder commutator
    """
    if n not in _MOVES:
        raise ValueError(f"unknown MOY move {n}")
    lhs, rhs, control = _MOVES[n](*params)
    return _report(f"move{n}", tuple(params), lhs - rhs + control.scale(perturb))


def moy_grid(max_color: int = 4, max_power: int = 2) -> Iterator[tuple[int, tuple]]:
    c = range(max_color + 1)
    for i in range(1, max_color + 1):
        for o in (1, -1):
            yield 0, (i, o)
    for i, j in itertools.product(c, c):
        for o in (1, -1):
            yield 1, (i, j, o)
    for i in c:
        for j in range(i + 1):
            yield 2, (i, j)
    for a, b, cc in itertools.product(c, c, c):
        for kind in (1, -1):
            yield 3, (a, b, cc, kind)
    for i in range(1, max_color + 1):
        yield 4, (i,)
    p = range(max_power + 1)
    for k, l, r, s in itertools.product(c, c, p, p):
        for o in (1, -1):
            d = (r - s) if o > 0 else (s - r)
            if k + d >= 0 and l - d >= 0:
                yield 5, (k, l, r, s, o)


# -- the non-MOY relation and its two-upright consequence ---------------


def check_xi(k: int, l: int, t: int, s: int, perturb: int = 0) -> RelationReport:
    """``[k,t][l,s] D1 - [l,s] D2 - [k,t] D3 + D4 = 0`` on the word ``(k, l)``."""
    if not (k >= 2 and l >= 2 and 1 <= t <= k - 1 and 1 <= s <= l - 1):
        raise ValueError(f"xi needs k,l >= 2, 1 <= t < k, 1 <= s < l; got {(k, l, t, s)}")
    a, b = k - t, l - s
    base = [f"split:{a},{t} split:{s},{b}", f"id:{a} merge:{t},{s} id:{b}", f"id:{a} split:{t},{s} id:{b}"]
    left = [f"merge:{a},{t} id:{s} id:{b}", f"split:{a},{t} id:{s} id:{b}"]
    right = [f"id:{a} id:{t} merge:{s},{b}", f"id:{a} id:{t} split:{s},{b}"]
    both = [f"merge:{a},{t} merge:{s},{b}", f"split:{a},{t} split:{s},{b}"]
    d1 = evaluate_morse(_diagram(*base))
    d2 = evaluate_morse(_diagram(*base, *left))
    d3 = evaluate_morse(_diagram(*base, *right))
    d4 = evaluate_morse(_diagram(*base, *both))
    bk, bl = quantum_binomial(k, t), quantum_binomial(l, s)
    total = d1.scale(bk * bl + perturb) - d2.scale(bl) - d3.scale(bk) + d4
    return _report("xi", (k, l, t, s), total)


def xi_grid(max_color: int = 4) -> Iterator[tuple[int, int, int, int]]:
    for k, l in itertools.product(range(2, max_color + 1), repeat=2):
        for t in range(1, k):
            for s in range(1, l):
                yield k, l, t, s


def check_derived_xi(k: int, l: int, perturb: int = 0) -> RelationReport:
    """``[k+1][k][l][l-1] 1 - [2][k+1][l-1] F E + [2]^2 F^(2) E^(2) = 0`` on ``(k, l)``."""
    if k < 0 or l < 2:
        raise ValueError("derived xi needs k >= 0 and l >= 2")
    qi = quantum_integer
    terms = [
        (qi(k + 1) * qi(k) * qi(l) * qi(l - 1) + perturb, []),
        (-qi(2) * qi(k + 1) * qi(l - 1), _rungs(("E", 1), ("F", 1))),
        (qi(2) * qi(2), _rungs(("E", 2), ("F", 2))),
    ]
    total = evaluate_sum(_ladder_sum(2, (k, l), terms))
    return _report("derived_xi", (k, l), total)


# -- ladder relations ----------------------------------------------------


def _lad(m: int, k: tuple, *rungs: tuple[str, int, int]) -> Morphism:
    return evaluate_ladder(Ladder(m, k, tuple(Rung(i, kind, r) for kind, i, r in rungs if r > 0)))


def _weights(m: int, max_entry: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(max_entry + 1), repeat=m)


def _ladder_instances(m: int, max_entry: int, max_power: int) -> Iterator[tuple[str, tuple, Morphism, Morphism]]:
    """Yield ``(family, params, lhs, rhs)`` for every relation of the grid."""
    powers = range(1, max_power + 1)
    other = {"E": "F", "F": "E"}
    for k in _weights(m, max_entry):
        for i in range(1, m):
            for r, s in itertools.product(powers, powers):
                if i + 1 < m:
                    # F_i with E_{i+1}, then E_i with F_{i+1}
                    lhs = _lad(m, k, ("E", i + 1, s), ("F", i, r))
                    rhs = _lad(m, k, ("F", i, r), ("E", i + 1, s))
                    yield "ef_adjacent_1", (m, k, i, r, s), lhs, rhs
                    lhs = _lad(m, k, ("F", i + 1, s), ("E", i, r))
                    rhs = _lad(m, k, ("E", i, r), ("F", i + 1, s))
                    yield "ef_adjacent_2", (m, k, i, r, s), lhs, rhs
                for kind in ("E", "F"):
                    lhs = _lad(m, k, (kind, i, s), (kind, i, r))
                    rhs = _lad(m, k, (kind, i, r + s)).scale(quantum_binomial(r + s, s))
                    yield "divided_" + kind, (m, k, i, r, s), lhs, rhs
                for first in ("F", "E"):
                    # X^(r) Y^(s) with Y applied first
                    second = other[first]
                    lam = k[i - 1] - k[i] if second == "E" else k[i] - k[i - 1]
                    lhs = _lad(m, k, (first, i, s), (second, i, r))
                    rhs = Morphism.zero(lhs.domain, lhs.codomain)
                    for t in range(min(r, s) + 1):
                        c = quantum_binomial(lam + r - s, t)
                        rhs = rhs + _lad(m, k, (second, i, r - t), (first, i, s - t)).scale(c)
                    yield "commutator_" + second + first, (m, k, i, r, s), lhs, rhs
            for j in (i - 1, i + 1):
                if not 1 <= j < m:
                    continue
                for kind in ("E", "F"):
                    # X_i X_j X_j - [2] X_j X_i X_j + X_j X_j X_i = 0 (rightmost first)
                    a = _lad(m, k, (kind, j, 1), (kind, j, 1), (kind, i, 1))
                    b = _lad(m, k, (kind, j, 1), (kind, i, 1), (kind, j, 1))
                    c = _lad(m, k, (kind, i, 1), (kind, j, 1), (kind, j, 1))
                    lhs = a - b.scale(quantum_integer(2)) + c
                    yield "serre_" + kind, (m, k, i, j), lhs, Morphism.zero(lhs.domain, lhs.codomain)
            for j in range(i + 2, m):
                for x, y in itertools.product("EF", repeat=2):
                    for r, s in itertools.product(powers, powers):
                        lhs = _lad(m, k, (y, j, s), (x, i, r))
                        rhs = _lad(m, k, (x, i, r), (y, j, s))
                        yield "far_" + x + y, (m, k, i, j, r, s), lhs, rhs


def check_ladder_relations(
    m: int, max_entry: int, max_power: int, perturb: int = 0
) -> list[RelationReport]:
    """All ladder relation families on weights in ``{0..max_entry}^m``.

    With ``perturb`` the left side is scaled by ``1 + perturb``, which
    breaks every instance whose two sides are nonzero.
    """
    out = []
    for family, params, lhs, rhs in _ladder_instances(m, max_entry, max_power):
        if perturb and family.startswith("serre"):
            # a zero-sum relation: perturb by one of its nonzero summands
            i, j = params[2], params[3]
            kind = family[-1]
            lhs = lhs + _lad(m, params[1], (kind, i, 1), (kind, j, 1), (kind, j, 1)).scale(perturb)
            out.append(_report(family, params, lhs - rhs))
        else:
            out.append(_report(family, params, lhs.scale(1 + perturb) - rhs))
    return out


# -- commuting actions and braid relations --------------------------------


def check_commuting_actions(m: int, max_entry: int, perturb: int = 0) -> list[RelationReport]:
    """Every rung commutes with the gl(1|1) generators ``E, F, L1, L2``."""
    out = []
    for k in _weights(m, max_entry):
        for i in range(1, m):
            for kind in ("E", "F"):
                for r in range(1, max_entry + 1):
                    rung = _lad(m, k, (kind, i, r))
                    cod = Ladder(m, k, (Rung(i, kind, r),)).output
                    if any(v < 0 for v in cod):
                        continue
                    for g in ("E", "F", "L1", "L2"):
                        a = compose(rung, generator_action(g, k))
                        b = compose(generator_action(g, cod), rung)
                        out.append(_report("commutant", (m, k, kind, i, r, g), a.scale(1 + perturb) - b))
    return out


def _t_word(k: tuple, indices: Sequence[int], signs: Sequence[int] | None = None) -> Morphism:
    """``T_{i_n} ... T_{i_1} 1_k`` applied left to right through ``indices``."""
    result = Morphism.identity(weight_basis(k))
    cur = tuple(k)
    for n, i in enumerate(indices):
        sg = signs[n] if signs else 1
        result = compose(t_element(i, cur, sg), result)
        cur = list(cur)
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        cur = tuple(cur)
    return result


def check_braid_relations(m: int, max_entry: int, perturb: int = 0) -> list[RelationReport]:
    """``T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}`` and far commutation."""
    out = []
    for k in _weights(m, max_entry):
        for i in range(1, m - 1):
            lhs = _t_word(k, (i, i + 1, i))
            rhs = _t_word(k, (i + 1, i, i + 1))
            out.append(_report("braid", (m, k, i), lhs.scale(1 + perturb) - rhs))
        for i in range(1, m):
            for j in range(i + 2, m):
                lhs = _t_word(k, (i, j))
                rhs = _t_word(k, (j, i))
                out.append(_report("braid_far", (m, k, i, j), lhs.scale(1 + perturb) - rhs))
    return out


# -- grid runners used by the CLI -----------------------------------------


def _run_moves(max_color: int, max_m: int) -> Iterator[RelationReport]:
    for n, params in moy_grid(max_color):
        yield check_moy_move(n, params)


def _run_xi(max_color: int, max_m: int) -> Iterator[RelationReport]:
    for params in xi_grid(max_color):
        yield check_xi(*params)
    for k in range(max_color + 1):
        for l in range(2, max_color + 1):
            yield check_derived_xi(k, l)


def _run_ladders(max_color: int, max_m: int) -> Iterator[RelationReport]:
    for m in range(2, max_m + 1):
        yield from check_ladder_relations(m, min(max_color, 3), 2)


def _run_braid(max_color: int, max_m: int) -> Iterator[RelationReport]:
    if max_m >= 3:
        yield from check_braid_relations(3, min(max_color, 2))
    if max_m >= 4:
        yield from check_braid_relations(4, 1)


def _run_commutant(max_color: int, max_m: int) -> Iterator[RelationReport]:
    for m in range(2, min(max_m, 3) + 1):
        yield from check_commuting_actions(m, min(max_color, 3))


FAMILIES = {
    "moves": _run_moves,
    "xi": _run_xi,
    "ladders": _run_ladders,
    "braid": _run_braid,
    "commutant": _run_commutant,
}


def run_family(name: str, max_color: int = 4, max_m: int = 4) -> Iterator[RelationReport]:
    if name == "all":
        for fam in FAMILIES.values():
            yield from fam(max_color, max_m)
        return
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    yield from FAMILIES[name](max_color, max_m)
