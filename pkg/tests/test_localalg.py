import random

import pytest

from coswitch.core import (
    Entry,
    Partition,
    SkewShape,
    SkewTableau,
    TableauError,
    Word,
    is_littlewood_richardson,
    littlewood_richardson_tableaux,
    partitions_in_box,
    reading_word,
    standard_tableaux,
    weight,
)
from coswitch.jdt import evacuate_coplactic, rectify
from coswitch.localalg import (
    TransitionData,
    array_alg,
    coswitch_local,
    crystal_alg,
    evacuate_transition,
    hop,
    hop_tracked,
    is_lambda_dominant,
    mixed_alg,
    pair_from_transition,
    reading_word_from_transition,
    rev_crystal,
    rev_hop,
    transition_word,
)
from coswitch.switching import TableauPair, coswitch, mark_tableau, pesh

import fixtures as fx
from fixtures import grid


def split_marked_grid(t: SkewTableau) -> tuple[SkewTableau, SkewTableau]:
    """Split a combined grid into (marks tableau, numeric tableau)."""
    from coswitch.core import _outer_of

    marks = {c: e for c, e in t.cells.items() if e.is_mark()}
    nums = {c: e for c, e in t.cells.items() if not e.is_mark()}
    mid = _outer_of(marks, t.shape.inner)
    x = SkewTableau(SkewShape(mid, t.shape.inner), marks)
    tt = SkewTableau(SkewShape(t.shape.outer, mid), nums)
    return x, tt


def combined(pair: TableauPair) -> SkewTableau:
    cells = dict(pair.inner.cells)
    cells.update(pair.outer.cells)
    return SkewTableau(pair.combined_shape(), cells)


HOP_X, HOP_T = split_marked_grid(fx.HOP_IN)


def test_hop_paper_example():
    pair, td, trace = hop(HOP_X, HOP_T)
    assert combined(pair) == fx.HOP_OUT
    assert td == fx.HOP_A
    assert len(trace.steps) > 0


def test_hop_empty_x():
    t = grid("1 1\n2")
    empty = SkewTableau.empty()
    pair, td, trace = hop(empty, t)
    assert pair.outer == t and td == [] and trace.steps == []


def test_hop_rejects_non_lr():
    with pytest.raises(TableauError, match="Littlewood-Richardson"):
        hop(grid("x1"), SkewTableau.from_rows([[None, "2"], ["1"]]))


def test_coswitch_local_paper_example():
    out = coswitch_local(HOP_X, HOP_T)
    assert combined(out) == fx.HOP_COSWITCH_OUT
    # the underlying run records the stated transition data
    y = evacuate_coplactic(
        SkewTableau(HOP_X.shape, {c: Entry.of(e.mark) for c, e in HOP_X.cells.items()})
    )
    _, td, _ = hop(y, HOP_T)
    assert td == fx.HOP_COSWITCH_A


def test_crystal_alg_paper_example():
    pair, td = crystal_alg(HOP_X, HOP_T)
    assert combined(pair) == fx.HOP_OUT
    assert td == fx.HOP_A


def test_mixed_alg_paper_example():
    pair, td = mixed_alg(HOP_X, HOP_T)
    assert combined(pair) == fx.HOP_OUT
    assert td == fx.HOP_A


def test_label_tracking_paper_example():
    pair, td, trace, history = hop_tracked(HOP_X, HOP_T)
    assert combined(pair) == fx.HOP_OUT
    # the end-of-phase-1 state carries the subscripts of the figure
    end_phase1 = None
    for step in trace.steps:
        if step.phase == 2:
            break
    # recompute by replaying: simpler to check via the tracked mid grid
    mid = fx.TRACKED_MID
    # run phase 1 only, by checking history right before the first phase-2 step
    idx = next(i for i, s in enumerate(trace.steps) if s.phase == 2)
    snap = history[idx - 1]
    for cell, e in mid.cells.items():
        if e.sub is not None:
            assert snap[e.sub] == cell


def test_array_alg_paper_example():
    td = TransitionData(fx.HOP_A)
    assert evacuate_transition(td).entries == fx.ARRAY_B
    pair, b = array_alg(HOP_X, HOP_T)
    assert combined(pair) == fx.ARRAY_OUT
    assert b == fx.ARRAY_B


def test_transition_word_utilities():
    td = TransitionData([3, 2, 3])
    assert transition_word(td) == Word([3, 2, 3])
    assert reading_word_from_transition(td) == Word([1, 3, 2])
    assert reading_word_from_transition(TransitionData([2])) == Word([1])


def test_monodromy_coswitch_figure():
    out = coswitch_local(fx.MONO_X, fx.MONO_T)
    assert combined(out) == fx.MONO_COSWITCH


def test_rev_hop_round_trip_on_example():
    pair, td, _ = hop(HOP_X, HOP_T)
    back, td2 = rev_hop(pair.inner, pair.outer)
    assert combined(back) == fx.HOP_IN
    assert td2 == td


def test_rev_crystal_round_trip_on_example():
    pair, td = crystal_alg(HOP_X, HOP_T)
    back, td2 = rev_crystal(pair.inner, pair.outer)
    assert combined(back) == fx.HOP_IN
    assert td2 == td


def test_rev_empty():
    t = grid("1 1\n2")
    empty = SkewTableau(SkewShape(t.shape.outer, t.shape.outer), {})
    pair, td = rev_hop(t, empty)
    assert pair.outer == t and td == []


def test_lambda_dominant():
    assert is_lambda_dominant(Word([]), Partition([3, 1]))
    assert is_lambda_dominant(Word([3, 2, 3]), Partition([4, 2]))
    assert not is_lambda_dominant(Word([2]), Partition([]))


def sweep_small(total_max=6, rows=3, cols=3):
    parts = [Partition(p) for p in partitions_in_box(rows, cols)]
    for alpha in parts:
        for sigma in parts:
            if not sigma.contains(alpha):
                continue
            for lam in parts:
                if not lam.contains(sigma):
                    continue
                ishape = SkewShape(sigma, alpha)
                oshape = SkewShape(lam, sigma)
                if ishape.size() == 0 or oshape.size() == 0:
                    continue
                if ishape.size() + oshape.size() > total_max:
                    continue
                lrs = littlewood_richardson_tableaux(oshape)
                if not lrs:
                    continue
                for x in standard_tableaux(ishape):
                    for t in lrs:
                        yield x, t


def as_marks(t: SkewTableau) -> SkewTableau:
    marked, _ = mark_tableau(t)
    return marked


def test_hop_equals_pesh_oracle_small():
    for x, t in sweep_small(5):
        pair, _, _ = hop(x, t)
        oracle = pesh(TableauPair(x, t))
        assert pair.inner == oracle.inner
        assert pair.outer == as_marks(oracle.outer)


def test_variants_agree_small():
    for x, t in sweep_small(5):
        h, a_h, _ = hop(x, t)
        c, a_c = crystal_alg(x, t)
        m, a_m = mixed_alg(x, t)
        assert h == c == m
        assert a_h == a_c == a_m


def test_array_equals_coswitch_small():
    for x, t in sweep_small(5):
        arr, _ = array_alg(x, t)
        loc = coswitch_local(x, t)
        oracle = coswitch(TableauPair(x, t))
        assert arr == loc
        assert arr.inner == oracle.inner
        assert arr.outer == as_marks(oracle.outer)


def test_reverse_round_trips_small():
    for x, t in sweep_small(5):
        pair, td, _ = hop(x, t)
        back, td2 = rev_hop(pair.inner, pair.outer)
        assert back.inner == as_marks(x) and back.outer == t
        assert td2 == td
        back_c, td3 = rev_crystal(pair.inner, pair.outer)
        assert back_c == back and td3 == td


def test_forward_after_reverse_round_trip():
    # hop(rev_hop(T, X)) = (T, X) on reachable states
    for x, t in sweep_small(5):
        pair, _, _ = hop(x, t)
        back, _ = rev_hop(pair.inner, pair.outer)
        again, _, _ = hop(back.inner, back.outer)
        assert again == pair


def test_transition_words_lambda_dominant():
    for x, t in sweep_small(5):
        _, td, _ = hop(x, t)
        lam = Partition(weight(rectify(t)[0]))
        assert is_lambda_dominant(transition_word(td), lam)


def rect_switch_middle_word(x: SkewTableau, t: SkewTableau) -> Word:
    """Reading word of the moved inner boxes after rectifying and switching."""
    from coswitch.core import union, _outer_of
    from coswitch.switching import _switch_cells, standardization_cells

    n = x.size()
    cells = {c: Entry.of(i + 1) for i, c in enumerate(standardization_cells(x))}
    for c, e in t.cells.items():
        cells[c] = Entry.of(e.value + n)
    u = SkewTableau(SkewShape(t.shape.outer, x.shape.inner), cells)
    rect_u, _ = rectify(u)
    order = sorted(
        (c for c, e in rect_u.cells.items() if e.value <= n),
        key=lambda c: rect_u.cells[c].value,
    )
    movable = {c for c, e in rect_u.cells.items() if e.value > n}
    new_cells, placed = _switch_cells(rect_u.cells, order, movable)
    marks = {c: new_cells[c] for c in placed}
    seq = sorted(marks, key=lambda rc: (-rc[0], rc[1]))
    return Word([Entry.of(marks[c].value) for c in seq])


def test_transition_reading_word_matches_oracle():
    # the sorted-array word equals the reading word of the switched inner
    # tableau of the run the data came from (an evacuated inner tableau,
    # since hopping computes the partial shuffle)
    for x, t in sweep_small(5):
        _, td, _ = hop(x, t)
        rw = reading_word_from_transition(td)
        y = evacuate_coplactic(x)
        assert rw == rect_switch_middle_word(y, t)


def test_staggered_phase1_matches():
    rng = random.Random(7)
    for x, t in sweep_small(5):
        base, td, _ = hop(x, t)
        for _ in range(2):
            alt, td2, _ = hop(x, t, staggered_rng=rng)
            assert alt == base and td2 == td


def test_pair_from_transition_round_trip():
    from coswitch.core import union
    from coswitch.crystal import to_highest_weight
    from coswitch.jdt import dual_equivalent

    for x, t in sweep_small(5):
        pair, td, _ = hop(x, t)
        lam = Partition(weight(rectify(t)[0]))
        # the base tableau for the bijection: the LR representative of the class
        u = union(x, t)
        base, _ = to_highest_weight(u)
        rebuilt = pair_from_transition(base, lam, transition_word(td))
        _, td2, _ = hop(rebuilt.inner, rebuilt.outer)
        assert td2 == td
        assert dual_equivalent(union(rebuilt.inner, rebuilt.outer), u)


def test_lambda_dominant_counts_match_pairs():
    # for small mu, the dominant words of weight mu-lam biject with the pairs
    from itertools import product

    from coswitch.core import highest_weight_tableau, union
    from coswitch.jdt import dual_equivalent

    cases = [
        (Partition([1]), Partition([2, 1])),
        (Partition([2]), Partition([2, 2])),
        (Partition([1, 1]), Partition([2, 2])),
    ]
    for lam, mu in cases:
        base = highest_weight_tableau(mu)
        n = mu.size() - lam.size()
        need = tuple(mu[i] - lam[i] for i in range(mu.length()))

        def wt_of(vals):
            got = weight(Word(list(vals)))
            return got + (0,) * (len(need) - len(got))

        words = [
            Word(list(vals))
            for vals in product(range(1, mu.length() + 1), repeat=n)
            if wt_of(vals) == need and is_lambda_dominant(Word(list(vals)), lam)
        ]
        pairs = []
        for x, t in sweep_small(mu.size()):
            if Partition(weight(rectify(t)[0])) != lam:
                continue
            u = union(x, t)
            if dual_equivalent(u, base):
                pairs.append((x, t))
        assert len(words) == len(pairs) > 0
