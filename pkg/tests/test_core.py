import pytest
from hypothesis import given, strategies as st

from coswitch.core import (
    Entry,
    ParseError,
    Partition,
    SkewShape,
    SkewTableau,
    TableauError,
    Word,
    highest_weight_tableau,
    is_ballot,
    is_littlewood_richardson,
    is_reverse_ballot,
    partitions_in_box,
    reading_word,
    semistandard_tableaux,
    standard_tableaux,
    standardize,
    union,
    weight,
)

from fixtures import grid, SWITCH_X, SWITCH_T


def test_partition_normalizes_trailing_zeros():
    assert Partition([3, 2, 0, 0]) == Partition([3, 2])
    assert Partition([]).size() == 0
    assert Partition([3, 2]).length() == 2
    with pytest.raises(TableauError):
        Partition([1, 2])


def test_reading_word_forced():
    t = grid("1 1 3\n2 2\n3 4")
    assert reading_word(t) == Word([3, 4, 2, 2, 1, 1, 3])
    assert reading_word(SkewTableau.empty()) == Word([])


def test_reading_word_switch_figure():
    cells = dict(SWITCH_X.cells)
    cells.update({c: Entry.of(e.value + 2) for c, e in SWITCH_T.cells.items()})
    combined = SkewTableau(SkewShape(SWITCH_T.shape.outer, SWITCH_X.shape.inner), cells)
    # outer entries shifted by 2: red 1,2,3 appear as 3,4,5
    assert reading_word(combined) == Word([1, 4, 5, 2, 2, 5, 1, 2, 3])


def test_standardize_examples():
    assert standardize(Word([1, 1, 2])) == Word([1, 2, 3])
    assert standardize(Word([2, 1, 1])) == Word([3, 1, 2])


def test_standardize_primed_brute_force():
    w = Word.from_string("1 2' 1' 1 2 1'")
    std = standardize(w)
    # brute-force comparator: value asc, primed before unprimed, primed ties
    # right-to-left, unprimed ties left-to-right
    order = sorted(
        range(len(w)),
        key=lambda p: (w[p].value, 0 if w[p].primed else 1, -p if w[p].primed else p),
    )
    expect = [0] * len(w)
    for rank, p in enumerate(order, start=1):
        expect[p] = rank
    assert std.values() == expect


@given(st.lists(st.integers(min_value=1, max_value=4), max_size=8))
def test_standardize_idempotent(vals):
    w = Word(vals)
    once = standardize(w)
    assert standardize(once) == once


def test_weight():
    assert weight(grid("1 1\n2")) == (2, 1)
    assert weight(SkewTableau.empty()) == ()
    t = grid(". . . 1\n. 1 1\n1 2 2")
    assert weight(t) == (4, 2)


def test_union():
    x = grid("1")
    t = grid(". 1\n1")
    u = union(x, t)
    assert u == grid("1 2\n2")
    assert union(SkewTableau.empty(), t) == t


def test_union_semistandard_brute_force():
    # union is semistandard iff both parts are and the glued rows/cols fit
    shapes = [((2, 1), (1,)), ((2, 2), (2, 1)), ((3, 1), (2,))]
    for outer, mid in shapes:
        inner_shape = SkewShape(Partition(mid))
        outer_shape = SkewShape(Partition(outer), Partition(mid))
        for x in semistandard_tableaux(inner_shape, 2):
            for t in semistandard_tableaux(outer_shape, 2):
                u = union(x, t)
                assert u.is_semistandard() == _glue_ok(x, t)


def _glue_ok(x, t):
    if not (x.is_semistandard() and t.is_semistandard()):
        return False
    n = max((e.value for e in x.cells.values()), default=0)
    for (r, c), e in t.cells.items():
        left = x.cells.get((r, c - 1))
        if left is not None and left.value > e.value + n:
            return False
        up = x.cells.get((r - 1, c))
        if up is not None and up.value >= e.value + n:
            return False
    return True


def test_ballot():
    assert is_ballot(Word([1, 1, 2]))
    assert not is_ballot(Word([2, 1]))
    assert is_reverse_ballot(Word([2, 1]))
    t = grid(". . . 1\n. 1 1\n1 2 2")
    assert is_reverse_ballot(reading_word(t))


@given(st.lists(st.integers(min_value=1, max_value=3), max_size=8))
def test_reverse_ballot_is_ballot_of_reversed(vals):
    w = Word(vals)
    assert is_reverse_ballot(w) == is_ballot(Word(list(reversed(vals))))


def test_littlewood_richardson():
    assert not is_littlewood_richardson(grid("2"))
    t = grid(". . . 1\n. 1 1\n1 2 2")
    assert is_littlewood_richardson(t)


def test_highest_weight_tableau():
    assert highest_weight_tableau(Partition([2, 1])) == grid("1 1\n2")
    assert highest_weight_tableau(Partition([])) == SkewTableau.empty()
    for lam in partitions_in_box(3, 3):
        if sum(lam) > 6:
            continue
        t = highest_weight_tableau(Partition(lam))
        assert is_littlewood_richardson(t)
        assert t.shape.inner.size() == 0


def test_grid_round_trip():
    texts = [
        "1 1 3\n2 2\n3 4",
        ". x1 x3 1\nx2 1 1\n1 2 2",
        ". 2' 1\n1 2",
        ". 1 1 1\n1 2 2\n2_2 3_3 3_1",
    ]
    for text in texts:
        t = SkewTableau.from_grid(text)
        assert SkewTableau.from_grid(t.to_grid()) == t
        assert SkewTableau.from_json(t.to_json()) == t


def test_grid_rejects_garbage():
    with pytest.raises(ParseError):
        SkewTableau.from_grid("1 . 1")
    with pytest.raises(ParseError):
        SkewTableau.from_grid("1 q")


def test_union_weight_length():
    x = grid("1 1\n2")
    t = grid(". . 1\n. 1")
    u = union(x, t)
    assert len(weight(u)) == 2 + 1


def test_standard_tableaux_enumeration():
    shape = SkewShape(Partition([2, 1]))
    assert len(standard_tableaux(shape)) == 2
    skew = SkewShape(Partition([2, 1]), Partition([1]))
    assert len(standard_tableaux(skew)) == 2
