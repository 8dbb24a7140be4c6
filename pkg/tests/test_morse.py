import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gl11.ladder import Ladder, Rung, colored_crossing, evaluate_ladder
from gl11.laurent import LaurentPoly, quantum_integer
from gl11.morse import (
    BoundaryMismatch,
    Generator,
    MorseDiagram,
    MorseParseError,
    MorseSum,
    crossing_expansion,
    evaluate_morse,
    evaluate_sum,
    expand_crossings,
    ladder_to_morse,
    parse_morse,
)
from gl11.rep import Strand, identity, merge, split
from gl11.superlin import compose

q = LaurentPoly.q()


@pytest.mark.parametrize("i", range(1, 6))
@pytest.mark.parametrize("o", "+-")
def test_closed_circle_is_zero(i, o):
    d = parse_morse(f"cup:{o}{i}\ncap:{o}{i}")
    assert d.source == () and d.target == ()
    assert evaluate_morse(d).is_zero()


@pytest.mark.parametrize("k", range(1, 5))
def test_move1_digon_is_minus_quantum_integer(k):
    d = parse_morse(f"id:{k} cup:+1\nmerge:{k},1 id:1*\nsplit:{k},1 id:1*\nid:{k} cap:+1")
    assert evaluate_morse(d) == identity([k]).scale(-quantum_integer(k))


def test_identity_only_diagram():
    d = parse_morse("id:2 id:1*\nid:2 id:1*")
    assert evaluate_morse(d) == identity([2, "1*"])
    assert evaluate_morse(MorseDiagram.identity_on([3])) == identity([3])


def test_standard_crossing_expands_through_color_two():
    terms = crossing_expansion(1, 1, 1)
    assert evaluate_sum(terms) == identity([1, 1]).scale(q) - compose(split(1, 1), merge(1, 1))


@pytest.mark.parametrize("a,b", list(itertools.product(range(4), repeat=2)))
@pytest.mark.parametrize("sign", [1, -1])
def test_crossing_generator_matches_colored_crossing(a, b, sign):
    d = MorseDiagram(((Generator.cross(a, b, sign),),))
    assert evaluate_morse(d) == colored_crossing(a, b, sign)


def test_expanded_diagram_has_no_crossings_and_same_value():
    d = parse_morse("cross:1,2,+ id:1\nid:2 cross:1,1,-\ncross:2,1,+ id:1")
    expanded = expand_crossings(d)
    assert all(g.kind != "cross" for _, e in expanded.terms for s in e.slices for g in s)
    assert evaluate_sum(expanded) == evaluate_morse(d)


def test_boundary_mismatch():
    with pytest.raises(BoundaryMismatch) as info:
        MorseDiagram(((Generator.id(1), Generator.id(2)), (Generator.merge(2, 1),)))
    assert info.value.slice_index == 1
    a = MorseDiagram(((Generator.split(1, 1),),))
    with pytest.raises(BoundaryMismatch):
        a.then(a)


def test_stacking_and_padding():
    s = MorseDiagram(((Generator.split(1, 1),),))
    m = MorseDiagram(((Generator.merge(1, 1),),))
    assert evaluate_morse(s.then(m)) == identity([2]).scale(quantum_integer(2))
    padded = s.padded(left=["1*"], right=[0])
    assert padded.source == (Strand(1, True), Strand(2), Strand(0))
    side = s.beside(MorseDiagram.identity_on([3]))
    assert side.target == (Strand(1), Strand(1), Strand(3))


def test_text_round_trip():
    text = "cup:-2 id:1\nid:2* merge:2,1\nid:2* split:1,2\nid:2* cross:1,2,- \n"
    d = parse_morse(text)
    assert parse_morse(d.to_text()) == d
    empty = MorseDiagram.identity_on([1, "2*"])
    assert parse_morse(empty.to_text()) == empty
    cups = parse_morse("cup:+1\ncap:+1")
    assert parse_morse(cups.to_text()) == cups


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("id:1 id:2\nmerge:2,1\n", 2),
        ("id:1 frob:2\n", 1),
        ("# comment\n\nid:1\nid:2\n", 4),
        ("id:1\nin: 1\n", 2),
        ("", 0),
        ("cross:1,2,*\n", 1),
    ],
)
def test_parse_errors_have_line_numbers(text, lineno):
    with pytest.raises(MorseParseError) as info:
        parse_morse(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator("merge", (1,))
    with pytest.raises(ValueError):
        Generator("cup", (-1,))
    with pytest.raises(ValueError):
        Generator("merge", (1, 1), -1)
    assert str(Generator.cup(3, -1)) == "cup:-3"
    assert str(Generator.cross(1, 2, -1)) == "cross:1,2,-"


def test_morse_sum_algebra():
    d = MorseDiagram.identity_on([1])
    s = MorseSum.of((q, d), (1, d))
    assert evaluate_sum(s - s).is_zero()
    assert evaluate_sum(s.scale(2)) == identity([1]).scale(2 * q + 2)
    assert evaluate_sum(s.then(s)) == identity([1]).scale((q + 1) * (q + 1))


rung_lists = st.lists(
    st.tuples(st.sampled_from("EF"), st.integers(1, 2), st.integers(1, 2)), max_size=4
)


@settings(max_examples=80, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), rung_lists)
def test_ladder_and_morse_evaluations_agree(k, rs):
    lad = Ladder(3, k, tuple(Rung(i, kind, r) for kind, i, r in rs))
    d = ladder_to_morse(lad)
    if d is None:
        assert evaluate_ladder(lad).is_zero()
    else:
        assert evaluate_morse(d) == evaluate_ladder(lad)
