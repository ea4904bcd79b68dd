import pytest
from hypothesis import given, strategies as st

from oracle import signed_crossing_lk
from stringlink.diagram import (
    WHITEHEAD_EVENTS,
    Cap,
    Cross,
    Cup,
    SliceWord,
    borromean,
    commutator,
    compose,
    compose_all,
    conjugate,
    delete_components,
    diagram,
    embed,
    hopf,
    invert,
    linking_matrix,
    long_knot,
    random_string_link,
    split_knot,
    trivial,
    validate,
    whitehead,
    wiggle,
)
from stringlink.errors import (
    ClosedComponent,
    EmptySelection,
    PermutedEndpoints,
    WidthMismatch,
    WidthUnderflow,
)

seeds = st.integers(0, 100_000)
widths = st.integers(2, 4)


def test_width_bookkeeping():
    assert SliceWord(2, (Cup(3), Cross(2), Cap(1))).widths() == [2, 4, 4, 2]
    with pytest.raises(WidthUnderflow):
        SliceWord(2, (Cross(2),)).widths()
    with pytest.raises(WidthUnderflow):
        SliceWord(1, (Cup(3),)).widths()
    with pytest.raises(WidthMismatch):
        SliceWord(2, (Cup(1),)).widths()


def test_validation_errors():
    with pytest.raises(PermutedEndpoints):
        diagram(2, [Cross(1)])
    with pytest.raises(PermutedEndpoints):
        diagram(2, [Cap(1), Cup(1)])
    with pytest.raises(ClosedComponent):
        diagram(1, [Cup(2), Cap(2)])


def test_hopf_signs():
    h = hopf()
    assert list(h.crossing_signs.values()) == [1, 1]
    assert linking_matrix(h) == [[0, 1], [1, 0]]
    assert linking_matrix(invert(h)) == [[0, -1], [-1, 0]]


def test_downward_strand_flips_sign():
    # the left cup leg runs down across the rising strand
    d = diagram(1, [Cup(1), Cross(2, 1), Cap(2)])
    assert d.has_downward_segments
    assert d.crossing_signs == {1: -1}
    assert diagram(1, [Cup(1), Cross(2, -1), Cap(2)]).crossing_signs == {1: 1}
    assert not hopf().has_downward_segments


def test_whitehead_locked_word():
    w = whitehead()
    assert w.events == WHITEHEAD_EVENTS
    assert len([e for e in w.events if isinstance(e, Cross)]) == 5
    assert linking_matrix(w) == [[0, 0], [0, 0]]


def test_builders():
    assert long_knot("trefoil").strands == 1
    assert list(long_knot("trefoil").crossing_signs.values()) == [1, 1, 1]
    assert long_knot("figure_eight").strands == 1
    with pytest.raises(ValueError):
        long_knot("unknot7")
    assert borromean().strands == 3
    assert linking_matrix(borromean()) == [[0] * 3 for _ in range(3)]
    s = split_knot(3, 2, "trefoil")
    assert delete_components(s, [2]) == long_knot("trefoil")
    with pytest.raises(IndexError):
        split_knot(2, 3, "trefoil")


def test_trivial():
    assert trivial(3).events == ()
    assert trivial(3) == validate(SliceWord(3, ()))


def test_compose_and_invert():
    h, w = hopf(), whitehead()
    assert compose(h, w).events == h.events + w.events
    assert compose_all([h, w, h]).events == h.events + w.events + h.events
    assert invert(invert(w)) == w
    assert conjugate(h, w).events == h.events + w.events + invert(h).events
    assert commutator(h, w).events == h.events + w.events + invert(h).events + invert(w).events
    with pytest.raises(WidthMismatch):
        compose(h, trivial(3))


def test_delete_components_errors():
    with pytest.raises(EmptySelection):
        delete_components(hopf(), [])
    with pytest.raises(IndexError):
        delete_components(hopf(), [3])


@pytest.mark.parametrize("positions", [[1, 2], [2, 3], [1, 3]])
def test_embed_then_delete_recovers(positions):
    e = embed(whitehead(), 3, positions)
    assert delete_components(e, positions) == whitehead()
    lk = linking_matrix(embed(hopf(), 3, positions))
    i, j = positions
    assert lk[i - 1][j - 1] == 1 and sum(map(sum, lk)) == 2


def test_embed_rejects_bad_positions():
    with pytest.raises(IndexError):
        embed(hopf(), 3, [2, 1])
    with pytest.raises(IndexError):
        embed(hopf(), 3, [1])


def test_wiggle_shapes():
    h = hopf()
    assert wiggle(h, 0, 1).events[:2] == (Cup(2), Cap(1))
    assert wiggle(h, 1, 2, side="left").events[1:3] == (Cup(2), Cap(3))
    with pytest.raises(IndexError):
        wiggle(h, 5, 1)
    with pytest.raises(ValueError):
        wiggle(h, 0, 1, side="up")


@given(widths, seeds)
def test_random_string_links_are_valid(n, seed):
    d = random_string_link(n, 10, seed)
    assert d.strands == n
    assert d == random_string_link(n, 10, seed)
    assert linking_matrix(d) == signed_crossing_lk(d)


@given(widths, seeds, seeds)
def test_linking_is_additive_and_commutators_unlink(n, s1, s2):
    a, b = random_string_link(n, 6, s1), random_string_link(n, 6, s2)
    la, lb = linking_matrix(a), linking_matrix(b)
    assert linking_matrix(compose(a, b)) == [[x + y for x, y in zip(r, t)] for r, t in zip(la, lb)]
    assert linking_matrix(invert(a)) == [[-x for x in r] for r in la]
    assert not any(any(r) for r in linking_matrix(commutator(a, b)))


@given(widths, seeds, st.data())
def test_delete_keeps_sublink_linking(n, seed, data):
    d = random_string_link(n, 10, seed)
    keep = sorted(data.draw(st.sets(st.integers(1, n), min_size=1)))
    sub = linking_matrix(delete_components(d, keep))
    full = linking_matrix(d)
    assert sub == [[full[i - 1][j - 1] for j in keep] for i in keep]
