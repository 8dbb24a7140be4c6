import pytest
from hypothesis import given, settings, strategies as st

from gl11.alexander import (
    BraidParseError,
    BraidWord,
    IndexOutOfRange,
    alexander_poly,
    alexander_via_cut_moy,
    braid_morphism,
    burau_oracle,
    equal_up_to_units,
    normalize,
    parse_braid_word,
    skein_check,
)
from gl11.laurent import LaurentPoly, parse
from gl11.rep import identity, r_matrix_standard
from gl11.superlin import NotScalar

q = LaurentPoly.q()
TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))


def test_braid_morphism_examples():
    assert braid_morphism(BraidWord(1)) == identity([1])
    assert braid_morphism(BraidWord(2, (1,))) == r_matrix_standard()
    assert braid_morphism(BraidWord(2, (1, -1))) == identity([1, 1])


def test_parse_braid_word():
    assert parse_braid_word("1 -2  1") == (1, -2, 1)
    assert parse_braid_word("") == ()
    with pytest.raises(BraidParseError):
        parse_braid_word("1 a")
    with pytest.raises(BraidParseError):
        parse_braid_word("0")


def test_braid_validation():
    with pytest.raises(IndexOutOfRange):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(2, (1,), (1, 2))  # one component, two colors
    BraidWord(2, (1, 1), (1, 2))  # Hopf link, one color per component
    with pytest.raises(ValueError):
        BraidWord(0)
    assert BraidWord(3, (1, 2)).components() == 1
    assert BraidWord(3, ()).components() == 3


def test_unknot_and_unlink():
    assert alexander_poly(BraidWord(1)).delta == 1
    assert alexander_poly(BraidWord(2)).delta == 0
    assert alexander_poly(BraidWord(2, (1,))).delta == 1
    assert alexander_poly(BraidWord(3, (1, -2))).delta == 1


def test_trefoil_and_figure_eight_values():
    assert alexander_poly(TREFOIL).normalized == parse("q^-2 - 1 + q^2")
    assert alexander_poly(FIGURE_EIGHT).normalized == parse("q^-2 - 3 + q^2")


@pytest.mark.parametrize(
    "braid",
    [
        TREFOIL,
        FIGURE_EIGHT,
        BraidWord(2, (1, 1)),
        BraidWord(2, (1,) * 5),
        BraidWord(3, (1, 2) * 3),
        BraidWord(3, (1, 1, 2, -1, 2)),
        BraidWord(4, (1, 2, 3, -1, 2, -3)),
    ],
)
def test_oracle_and_pipeline_agreement(braid):
    a = alexander_poly(braid)
    assert equal_up_to_units(a.delta, burau_oracle(braid))
    assert alexander_via_cut_moy(braid).delta == a.delta
    assert alexander_poly(braid, side="left").delta == a.delta


def test_burau_oracle_values():
    t2 = q**2
    assert normalize(burau_oracle(TREFOIL)) == normalize(1 - t2 + t2 * t2)
    assert burau_oracle(BraidWord(2, (1,))) == 1
    assert normalize(burau_oracle(FIGURE_EIGHT)) == normalize(-(t2**2) + 3 * t2 - 1)
    with pytest.raises(ValueError):
        burau_oracle(BraidWord(2, (1,), (2, 2)))


def test_normalize():
    assert normalize(q**5 - q**7) == q - q**-1
    assert normalize(-(q**3)) == 1
    assert normalize(LaurentPoly.ZERO) == 0
    n = normalize(alexander_poly(FIGURE_EIGHT).delta)
    assert n.bar() == n


def test_traced_slots_recorded():
    assert alexander_poly(FIGURE_EIGHT).traced_slots == (2, 3)
    assert alexander_poly(FIGURE_EIGHT, side="left").traced_slots == (1, 2)
    with pytest.raises(ValueError):
        alexander_poly(TREFOIL, side="middle")


def test_framing_knob_defaults_to_identity():
    assert alexander_poly(TREFOIL, framing=1).delta == alexander_poly(TREFOIL).delta
    shifted = alexander_poly(TREFOIL, framing=q).delta
    assert shifted == alexander_poly(TREFOIL).delta * q**3


def test_skein_examples():
    assert skein_check(BraidWord(2), 0).holds
    assert skein_check(BraidWord(2, (1, 1)), 2).holds
    hopf = alexander_poly(BraidWord(2, (1, 1))).delta
    trefoil = alexander_poly(TREFOIL).delta
    assert trefoil - 1 == (q - q**-1) * hopf


def test_colored_invariants_are_consistent():
    for braid in [BraidWord(2, (1, 1, 1), (2, 2)), BraidWord(2, (1, 1), (1, 2)), BraidWord(3, (1, -2, 1, -2), (2, 2, 2))]:
        a = alexander_poly(braid)
        assert alexander_via_cut_moy(braid).delta == a.delta
        conj = braid.with_word((1,) + braid.word + (-1,))
        assert alexander_poly(conj).delta == a.delta


@pytest.mark.parametrize("k", range(0, 5))
def test_colored_kink_is_a_framing_unit(k):
    # the twist is trivial on the standard module only; on ⋀^k a kink costs q^(∓k(k-1))
    assert alexander_poly(BraidWord(1, (), (k,))).delta == 1
    assert alexander_poly(BraidWord(2, (1,), (k, k))).delta == q ** (-k * (k - 1))
    assert alexander_poly(BraidWord(2, (-1,), (k, k))).delta == q ** (k * (k - 1))


def test_not_scalar_is_raised_for_broken_closure(monkeypatch):
    import gl11.alexander as alex

    monkeypatch.setattr(alex, "closure_weights", lambda k, side: {"u1": 1, "x1": q})
    with pytest.raises(NotScalar):
        alex.alexander_poly(BraidWord(2, (1,)))


words = st.integers(2, 3).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=6),
    )
)


@settings(max_examples=40, deadline=None)
@given(words, st.data())
def test_skein_and_markov_properties(nw, data):
    n, w = nw
    b = BraidWord(n, tuple(w))
    d = alexander_poly(b).delta
    pos = data.draw(st.integers(0, len(w)))
    gen = data.draw(st.integers(1, n - 1))
    assert skein_check(b, pos, gen).holds
    i = data.draw(st.integers(1, n - 1))
    assert alexander_poly(b.with_word((i,) + b.word + (-i,))).delta == d
    sign = data.draw(st.sampled_from([1, -1]))
    assert alexander_poly(b.with_word(b.word + (sign * n,), n + 1)).delta == d
    assert equal_up_to_units(d, burau_oracle(b))
    if b.components() == 1 and d:
        assert normalize(d).bar() == normalize(d)
