import pytest
from hypothesis import given, strategies as st

from oracle import oracle_mu
from stringlink.braid import BraidWord, pure_generator_power, random_pure_braid, to_slice_word
from stringlink.diagram import (
    borromean,
    commutator,
    compose,
    conjugate,
    delete_components,
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
from stringlink.errors import TruncationTooLow
from stringlink.magnus import (
    all_mu_up_to_weight,
    delta,
    first_nonvanishing_weight,
    index_sequences,
    longitudes,
    mu,
    mu_bar,
    sato_levine,
)

seeds = st.integers(0, 100_000)


def pure(w):
    return validate(to_slice_word(w))


def table(d, weight=4, q=4):
    return {I: mu(d, I, q) for I in index_sequences(d.strands, weight)}


def test_hopf_linking():
    assert mu(hopf(), (1, 2)) == mu(hopf(), (2, 1)) == 1
    assert mu_bar(hopf(), (1, 2)).as_record() == {"index_sequence": [1, 2], "mu": 1, "delta": 0, "q": 4}
    assert delta(hopf(), (1, 1, 2, 2)) == 1


def test_whitehead_values():
    w = whitehead()
    assert sato_levine(w, 1, 2) == 1
    assert sato_levine(w, 2, 1) == 1
    assert delta(w, (1, 1, 2, 2)) == 0
    assert first_nonvanishing_weight(w, 4) == 4


def test_borromean_values():
    # hand expansion: the longitude of strand 3 is [x2^-1, x1^-1] up to
    # conjugation, whose degree-2 part is X2X1 - X1X2, so mu(123) = -1
    b = borromean()
    assert mu(b, (1, 2, 3)) == -1
    assert mu(b, (2, 3, 1)) == mu(b, (3, 1, 2)) == -1
    assert mu(b, (2, 1, 3)) == 1
    assert first_nonvanishing_weight(b, 4) == 3


def test_trivial_and_knots_vanish():
    for d in (trivial(3), long_knot("trefoil"), long_knot("figure_eight"), split_knot(3, 1, "trefoil")):
        if d.strands == 1:
            assert longitudes(d)[0].to_dict() == {(): 1}
        else:
            assert not any(table(d).values())


def test_full_twist_powers():
    # checked against the word oracle; C(k, 3) and C(k + 1, 3)
    expected = {-3: (-10, -4), -2: (-4, -1), -1: (-1, 0), 1: (0, 0), 2: (0, 1), 3: (1, 4), 4: (4, 10)}
    for k, (m1122, m2211) in expected.items():
        d = pure(pure_generator_power(1, 2, 2, k))
        assert (mu(d, (1, 1, 2, 2)), mu(d, (2, 2, 1, 1))) == (m1122, m2211)
        assert (oracle_mu(d, (1, 1, 2, 2)), oracle_mu(d, (2, 2, 1, 1))) == (m1122, m2211)


def test_truncation_errors():
    with pytest.raises(TruncationTooLow):
        mu(hopf(), (1, 1, 2, 2), q=2)
    with pytest.raises(TruncationTooLow):
        all_mu_up_to_weight(hopf(), 4, q=2)
    with pytest.raises(ValueError):
        sato_levine(hopf(), 1, 1)
    with pytest.raises(IndexError):
        mu(hopf(), (1, 3))
    with pytest.raises(ValueError):
        mu(hopf(), (1,))


def test_table_size():
    assert len(all_mu_up_to_weight(borromean(), 3)) == 9 + 27


@given(st.integers(2, 3), seeds,
       st.lists(st.integers(1, 3), min_size=2, max_size=4))
def test_engine_matches_word_oracle(n, seed, index):
    d = random_string_link(n, 8, seed)
    index = [min(i, n) for i in index]
    assert mu(d, index) == oracle_mu(d, index)


@given(st.integers(2, 3), seeds)
def test_truncation_independence(n, seed):
    d = random_string_link(n, 10, seed)
    assert table(d, 4, q=3) == table(d, 4, q=5)


@given(st.integers(2, 4), seeds)
def test_isotopy_moves(n, seed):
    d = random_string_link(n, 10, seed)
    base = table(d)
    assert table(wiggle(d, len(d.events) // 2, 1, "right")) == base
    # braid relation s1 s2 s1 = s2 s1 s2 inserted mid-word, then removed by its inverse
    if n >= 3:
        pad = to_slice_word(BraidWord.from_ints(n, [1, 2, 1, -2, -1, -2])).events
        k = len(d.events) // 2
        moved = validate(type(d.word)(n, d.events[:k] + pad + d.events[k:]))
        assert table(moved) == base


@given(st.integers(2, 3), seeds)
def test_inverse_is_null(n, seed):
    d = random_string_link(n, 10, seed)
    assert not any(table(compose(d, invert(d))).values())
    assert not any(table(compose(invert(d), d)).values())


@given(st.integers(2, 3), seeds, st.data())
def test_sublinks(n, seed, data):
    d = random_string_link(n, 10, seed)
    keep = sorted(data.draw(st.sets(st.integers(1, n), min_size=2)))
    sub = delete_components(d, keep)
    for I in index_sequences(len(keep), 3):
        assert mu(sub, I) == mu(d, tuple(keep[i - 1] for i in I))


@given(seeds, seeds)
def test_two_strand_commutators_vanish_to_weight_four(s1, s2):
    c = commutator(random_string_link(2, 6, s1), random_string_link(2, 6, s2))
    assert not any(table(c).values())


@given(seeds, seeds)
def test_commutator_sato_levine_three_strands(s1, s2):
    c = commutator(random_string_link(3, 5, s1), random_string_link(3, 5, s2))
    assert not any(mu(c, (i, i, j, j)) for i in range(1, 4) for j in range(1, 4) if i != j)


def falling3(k):
    return k * (k - 1) * (k - 2) // 6


@given(st.integers(2, 4), st.integers(1, 8), seeds)
def test_pure_braid_sato_levine_closed_form(n, length, seed):
    # the (i, j) sublink of a pure braid is the full twist power H^lk, whose
    # longitude z^k x^-k expands to C(k, 3) and C(k + 1, 3) in these slots
    d = pure(random_pure_braid(n, length, seed))
    lk = linking_matrix(d)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            k = lk[i - 1][j - 1]
            assert mu(d, (i, i, j, j)) == falling3(k)
            assert mu(d, (j, j, i, i)) == falling3(k + 1)


@given(st.integers(2, 4), st.integers(1, 8), seeds)
def test_lk_zero_pure_braids_have_no_sato_levine(n, length, seed):
    d = pure(random_pure_braid(n, length, seed, commutator_only=True))
    assert not any(mu(d, (i, i, j, j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)


@given(st.integers(2, 4), seeds, seeds)
def test_conjugation_preserves_sato_levine(n, s1, s2):
    s = random_string_link(n, 6, s1)
    p = pure(random_pure_braid(n, 3, s2))
    c = conjugate(s, p)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                assert mu(c, (i, i, j, j)) == mu(p, (i, i, j, j))


@given(st.integers(2, 3), seeds, st.integers(1, 3))
def test_split_knots_commute(n, seed, i):
    i = min(i, n)
    k = split_knot(n, i, "figure_eight")
    s = random_string_link(n, 6, seed)
    assert table(compose(k, s)) == table(compose(s, k)) == table(s)


@pytest.mark.parametrize("positions", [[1, 2], [1, 3], [2, 3]])
def test_embedded_whitehead(positions):
    e = embed(whitehead(), 3, positions)
    i, j = positions
    assert sato_levine(e, i, j) == 1
    assert not any(v for I, v in table(e, 3).items())
