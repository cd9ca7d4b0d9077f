"""Local (shape-preserving) algorithms for coplactic switching: hopping,
crystal, mixed and array variants, their inverses, transition-data utilities
and dominance of transition words.

All algorithms act on the combined reading word of the pair; cells never
move, only their contents swap.  Marks are encoded internally as negative
codes well below any numeric value so the crystal variants may relabel
numerics through zero without collision.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .core import (
    Entry,
    Partition,
    SkewShape,
    SkewTableau,
    TableauError,
    Word,
    _outer_of,
    highest_weight_tableau,
    is_ballot,
    is_littlewood_richardson,
    reading_word,
    weight,
)
from .jdt import evacuate_coplactic, evacuate_word, rectify, unrectify
from .switching import TableauPair, combine_pair, mark_tableau, standardization_cells

Cell = tuple[int, int]

_MARK_BASE = 1 << 20  # mark i is encoded as -(_MARK_BASE + i)


def _mark_code(i: int) -> int:
    return -(_MARK_BASE + i)


def _is_mark_code(v: int) -> bool:
    return v <= -_MARK_BASE


def _mark_index(v: int) -> int:
    return -v - _MARK_BASE


# ---------------------------------------------------------------------------
# transition data and traces


@dataclass(eq=False)
class TransitionData:
    """Recorded indices a_1..a_n, in recording order (a_1 first)."""

    entries: list[int] = field(default_factory=list)

    def word(self) -> Word:
        """The transition word h(x_n)..h(x_1) = a_1 a_2 ... a_n."""
        return Word([Entry.of(a) for a in self.entries])

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, TransitionData):
            return self.entries == other.entries
        if isinstance(other, (list, tuple)):
            return self.entries == list(other)
        return NotImplemented

    def to_json(self) -> str:
        return json.dumps(self.entries)


@dataclass(frozen=True)
class TraceStep:
    phase: int  # 1 or 2
    mark: int
    event: str  # "switch" | "absorb" | "place" | "raise" | "lower" | "emit"
    cells: tuple[Cell, ...]
    index: int  # the algorithm index j (or operator index)


@dataclass
class HopTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def count(self, *events: str) -> int:
        if not events:
            return len(self.steps)
        return sum(1 for s in self.steps if s.event in events)

    def to_json_obj(self) -> list:
        return [
            {
                "phase": s.phase,
                "mark": s.mark,
                "event": s.event,
                "cells": [list(c) for c in s.cells],
                "index": s.index,
            }
            for s in self.steps
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


# ---------------------------------------------------------------------------
# internal word state


class _State:
    """The combined filling as a word over fixed cells in reading order."""

    __slots__ = ("cells", "vals", "subs", "trace", "observer", "inner")

    def __init__(self, shape: SkewShape, entries: dict[Cell, int]):
        self.cells = sorted(shape.cells(), key=lambda rc: (-rc[0], rc[1]))
        self.vals = [entries[c] for c in self.cells]
        self.subs: list[int | None] = [None] * len(self.cells)
        self.trace = HopTrace()
        self.observer = None
        self.inner = shape.inner

    # -- queries

    def find_first(self, v: int) -> int | None:
        for p, x in enumerate(self.vals):
            if x == v:
                return p
        return None

    def find_before(self, p: int, v: int) -> int | None:
        for q in range(p - 1, -1, -1):
            if self.vals[q] == v:
                return q
        return None

    def index_of_mark(self, i: int) -> int:
        return self.vals.index(_mark_code(i))

    def max_numeric(self) -> int:
        return max((v for v in self.vals if not _is_mark_code(v)), default=0)

    def suffix_counts(self, p: int, a: int, b: int) -> tuple[int, int]:
        ca = cb = 0
        for q in range(p + 1, len(self.vals)):
            v = self.vals[q]
            if v == a:
                ca += 1
            elif v == b:
                cb += 1
        return ca, cb

    def suffix_tied(self, p: int, j: int) -> bool:
        ca, cb = self.suffix_counts(p, j, j + 1)
        return ca == cb

    # -- mutation with tracing

    def swap(self, p: int, q: int, phase: int, mark: int, j: int, event="switch"):
        self.vals[p], self.vals[q] = self.vals[q], self.vals[p]
        self.subs[p], self.subs[q] = self.subs[q], self.subs[p]
        self.step(phase, mark, event, (self.cells[p], self.cells[q]), j)

    def set(self, p: int, v: int, phase: int, mark: int, j: int, event: str, sub=None):
        self.vals[p] = v
        self.subs[p] = sub
        self.step(phase, mark, event, (self.cells[p],), j)

    def step(self, phase, mark, event, cells, j):
        s = TraceStep(phase, mark, event, tuple(cells), j)
        self.trace.steps.append(s)
        if self.observer is not None:
            self.observer(self, s)

    # -- crystal operators over the integer alphabet

    def _bracket(self, j: int) -> tuple[list[int], list[int]]:
        """Unmatched positions for the (j, j+1) pairing: opens are (j+1)'s."""
        open_stack: list[int] = []
        unmatched_close: list[int] = []
        for p, v in enumerate(self.vals):
            if v == j + 1:
                open_stack.append(p)
            elif v == j:
                if open_stack:
                    open_stack.pop()
                else:
                    unmatched_close.append(p)
        return open_stack, unmatched_close

    def raise_op(self, j: int, phase: int, mark: int) -> int | None:
        """E_j: flip the first unmatched j+1 to j; None when undefined."""
        opens, _ = self._bracket(j)
        if not opens:
            return None
        p = opens[0]
        self.set(p, j, phase, mark, j, "raise", sub=self.subs[p])
        return p

    def lower_op(self, j: int, phase: int, mark: int) -> int | None:
        """F_j: flip the last unmatched j to j+1; None when undefined."""
        _, closes = self._bracket(j)
        if not closes:
            return None
        p = closes[-1]
        self.set(p, j + 1, phase, mark, j, "lower", sub=self.subs[p])
        return p

    # -- output

    def to_pair(self, back: dict[int, Entry] | None = None) -> TableauPair:
        nums: dict[Cell, Entry] = {}
        marks: dict[Cell, Entry] = {}
        for p, v in enumerate(self.vals):
            cell = self.cells[p]
            if _is_mark_code(v):
                i = _mark_index(v)
                marks[cell] = back[i] if back is not None else Entry.marked(i)
            else:
                if v <= 0:
                    raise TableauError("non-positive numeric value at end of run")
                e = Entry.of(v)
                if self.subs[p] is not None:
                    e = Entry.tracked(v, self.subs[p])
                nums[cell] = e
        mid = _outer_of(nums, self.inner)
        inner_t = SkewTableau(SkewShape(mid, self.inner), nums)
        outer_shape = _outer_of({**nums, **marks}, self.inner)
        outer_t = SkewTableau(SkewShape(outer_shape, mid), marks)
        return TableauPair(inner_t, outer_t)

    def to_tableau(self) -> SkewTableau:
        cells = {}
        for p, v in enumerate(self.vals):
            if _is_mark_code(v):
                cells[self.cells[p]] = Entry.marked(_mark_index(v))
            else:
                e = Entry.of(v)
                if self.subs[p] is not None:
                    e = Entry.tracked(v, self.subs[p])
                cells[self.cells[p]] = e
        shape = SkewShape(_outer_of(cells, self.inner), self.inner)
        return SkewTableau(shape, cells)


# ---------------------------------------------------------------------------
# input plumbing


def _as_marked(x: SkewTableau) -> tuple[SkewTableau, int]:
    """Normalize the moving tableau to marks x_1..x_n."""
    if x.size() == 0:
        return x, 0
    if all(e.is_mark() for e in x.cells.values()):
        idxs = sorted(e.mark for e in x.cells.values())
        if idxs != list(range(1, len(idxs) + 1)):
            raise TableauError("mark indices must be exactly 1..n")
        return x, len(idxs)
    marked, _ = mark_tableau(x)
    return marked, x.size()


def _combined_state(x: SkewTableau, t: SkewTableau, check_lr=True) -> tuple[_State, int]:
    if t.shape.inner != x.shape.outer:
        raise TableauError("outer tableau does not extend the inner tableau")
    if check_lr and not is_littlewood_richardson(t):
        raise TableauError("outer tableau not Littlewood-Richardson")
    marked, n = _as_marked(x)
    shape = SkewShape(t.shape.outer, x.shape.inner)
    entries: dict[Cell, int] = {}
    for cell, e in marked.cells.items():
        entries[cell] = _mark_code(e.mark)
    for cell, e in t.cells.items():
        if not e.is_numeric() or e.primed:
            raise TableauError("outer tableau must be numeric and unprimed")
        entries[cell] = e.value
    return _State(shape, entries), n


# ---------------------------------------------------------------------------
# phase implementations


def _phase1_hop(st: _State, n: int, tracked: bool = False) -> list[int]:
    a: list[int] = []
    for i in range(n, 0, -1):
        p = st.index_of_mark(i)
        j = 1
        while True:
            q = st.find_before(p, j)
            if q is None:
                a.append(j)
                st.set(p, j, 1, i, j, "absorb", sub=(len(a) if tracked else None))
                break
            st.swap(p, q, 1, i, j)
            p = q
            j += 1
    return a


def _phase1_hop_staggered(st: _State, n: int, rng: random.Random) -> list[int]:
    """Interleaved Phase 1: marks advance one index at a time, the index
    fronts staying nonincreasing from x_n down.  Same result as the
    sequential schedule."""
    front = {i: 0 for i in range(1, n + 1)}  # last index performed
    done: dict[int, int] = {}
    while len(done) < n:
        ready = []
        for i in range(1, n + 1):
            if i in done:
                continue
            nxt = front[i] + 1
            cap = min((front[k] for k in range(i + 1, n + 1) if k not in done), default=nxt)
            if nxt <= cap:
                ready.append((i, nxt))
        i, j = ready[rng.randrange(len(ready))]
        p = st.index_of_mark(i)
        q = st.find_before(p, j)
        if q is None:
            done[i] = j
            st.set(p, j, 1, i, j, "absorb")
        else:
            st.swap(p, q, 1, i, j)
        front[i] = j
    return [done[i] for i in range(n, 0, -1)]


def _phase2_hop(st: _State, n: int, a: list[int], tracked: bool = False) -> None:
    for k in range(1, n + 1):
        m = n - k + 1
        v = a[m - 1]
        d = st.max_numeric()
        p = st.find_first(v)
        if p is None:
            raise TableauError(f"transition value {v} missing in phase 2")
        if tracked:
            ps = next(q for q, s in enumerate(st.subs) if s == m)
            if ps != p:
                raise TableauError("tracked entry is not first in reading order")
        st.set(p, _mark_code(m), 2, m, v, "place")
        j = v
        while j != d + 1:
            if st.suffix_tied(p, j):
                j += 1
                continue
            q = None
            for cand in range(p + 1, len(st.vals)):
                if st.vals[cand] == j and st.suffix_tied(cand, j):
                    q = cand
                    break
            if q is None:
                raise TableauError(
                    "no switch target with a tied suffix; ballot invariant violated"
                )
            st.swap(p, q, 2, m, j)
            p = q
            j += 1


def _phase1_crystal(st: _State, n: int) -> list[int]:
    # relabel marks x_i -> i - n
    for p, v in enumerate(st.vals):
        if _is_mark_code(v):
            st.vals[p] = _mark_index(v) - n
    a: list[int] = []
    for i in range(n, 0, -1):
        j = 0
        while True:
            p = st.find_first(j)
            if p is None or j in st.vals[p + 1 :]:
                raise TableauError("crystal phase 1 lost its singular entry")
            before = any(st.vals[q] == j + 1 for q in range(p))
            if before:
                cnt = st.vals.count(j + 1)
                for _ in range(cnt - 1):
                    if st.raise_op(j, 1, i) is None:
                        raise TableauError("raising operator undefined in phase 1")
                j += 1
            else:
                a.append(j + 1)
                for q, v in enumerate(st.vals):
                    if not _is_mark_code(v) and v < j + 1:
                        st.vals[q] = v + 1
                st.step(1, i, "absorb", (st.cells[p],), j + 1)
                break
    return a


def _phase2_crystal(st: _State, n: int, a: list[int]) -> None:
    for k in range(1, n + 1):
        m = n - k + 1
        v = a[m - 1]
        d = st.max_numeric()
        for j in range(v, d + 1):
            if st.lower_op(j, 2, m) is None:
                raise TableauError("lowering operator undefined in phase 2")
        p = st.find_first(d + 1)
        if p is None:
            raise TableauError("phase 2 did not create a maximal entry")
        st.set(p, _mark_code(m), 2, m, d + 1, "place")


# ---------------------------------------------------------------------------
# public algorithms


def _finish(st: _State, a: list[int]) -> tuple[TableauPair, TransitionData, HopTrace]:
    return st.to_pair(), TransitionData(list(a)), st.trace


def hop(
    x: SkewTableau,
    t: SkewTableau,
    observer=None,
    tracked: bool = False,
    staggered_rng: random.Random | None = None,
) -> tuple[TableauPair, TransitionData, HopTrace]:
    """Hopping algorithm: computes the partial evacuation shuffle of (x, t).

    x is standard (or carries marks x_1..x_n; a semistandard x is processed
    in standardization order), t is Littlewood-Richardson and extends x.
    Returns the switched pair (numeric part, marks part), the transition
    data, and the step trace.
    """
    st, n = _combined_state(x, t)
    st.observer = observer
    if n == 0:
        return TableauPair(SkewTableau(SkewShape(x.shape.outer, x.shape.inner), {}), t), TransitionData([]), st.trace
    if staggered_rng is not None:
        a = _phase1_hop_staggered(st, n, staggered_rng)
    else:
        a = _phase1_hop(st, n, tracked=tracked)
    _phase2_hop(st, n, a, tracked=tracked)
    return _finish(st, a)


def hop_tracked(x: SkewTableau, t: SkewTableau):
    """Hopping with label tracking: absorbed entries keep a subscript that
    identifies the mark re-emitted at the matching step of phase 2.

    Returns (pair, transition data, trace, mark position history).
    """
    history: list[dict[int, Cell]] = []

    def observer(state: _State, step: TraceStep):
        snap: dict[int, Cell] = {}
        for p, v in enumerate(state.vals):
            if _is_mark_code(v):
                snap[_mark_index(v)] = state.cells[p]
            elif state.subs[p] is not None:
                snap[state.subs[p]] = state.cells[p]
        history.append(snap)

    pair, a, trace = hop(x, t, observer=observer, tracked=True)
    return pair, a, trace, history


def crystal_alg(x: SkewTableau, t: SkewTableau) -> tuple[TableauPair, TransitionData]:
    """Crystal-operator formulation of the hopping algorithm."""
    st, n = _combined_state(x, t)
    if n == 0:
        return TableauPair(SkewTableau(SkewShape(x.shape.outer, x.shape.inner), {}), t), TransitionData([])
    a = _phase1_crystal(st, n)
    _phase2_crystal(st, n, a)
    pair, td, _ = _finish(st, a)
    return pair, td


def mixed_alg(x: SkewTableau, t: SkewTableau) -> tuple[TableauPair, TransitionData]:
    """Hopping phase 1 followed by the crystal phase 2."""
    st, n = _combined_state(x, t)
    if n == 0:
        return TableauPair(SkewTableau(SkewShape(x.shape.outer, x.shape.inner), {}), t), TransitionData([])
    a = _phase1_hop(st, n)
    _phase2_crystal(st, n, a)
    pair, td, _ = _finish(st, a)
    return pair, td


def coswitch_local(x: SkewTableau, t: SkewTableau) -> TableauPair:
    """Coplactic switch computed locally: evacuate x, then hop."""
    if x.size() == 0 or t.size() == 0:
        return TableauPair(x, t)
    if all(e.is_mark() for e in x.cells.values()):
        n = x.size()
        numeric = SkewTableau(
            x.shape, {c: Entry.of(e.mark) for c, e in x.cells.items()}
        )
    else:
        numeric = x
    y = evacuate_coplactic(numeric)
    pair, _, _ = hop(y, t)
    return pair


def transition_word(td: TransitionData) -> Word:
    """The transition data viewed as a word (recording order)."""
    return td.word()


def reading_word_from_transition(td: TransitionData) -> Word:
    """Reading word of the switched inner tableau, from transition data only.

    Sort the two-line array [a_k; k] by top entry descending, ties by bottom
    entry ascending; the bottom row is the reading word.
    """
    n = len(td.entries)
    cols = sorted(range(n), key=lambda k: (-td.entries[k], k))
    return Word([Entry.of(k + 1) for k in cols])


def array_alg(x: SkewTableau, t: SkewTableau) -> tuple[TableauPair, TransitionData]:
    """Compute the coplactic switch without evacuating x: run phase 1, then
    evacuate the transition data through a two-line array and run phase 2 on
    the result."""
    st, n = _combined_state(x, t)
    if n == 0:
        return TableauPair(SkewTableau(SkewShape(x.shape.outer, x.shape.inner), {}), t), TransitionData([])
    a = _phase1_hop(st, n)
    b = evacuate_transition(TransitionData(a)).entries
    _phase2_hop(st, n, b)
    pair, _, _ = _finish(st, a)
    return pair, TransitionData(b)


def evacuate_transition(td: TransitionData) -> TransitionData:
    """The two-line array calculation turning the transition data of the
    partial shuffle into the transition data of the coplactic switch."""
    n = len(td.entries)
    if n == 0:
        return TransitionData([])
    cols = sorted(range(n), key=lambda k: (-td.entries[k], k))
    tops = [td.entries[k] for k in cols]
    bottoms = [k + 1 for k in cols]
    evac = evacuate_word(Word([Entry.of(v) for v in bottoms]), alphabet_max=n)
    pairs = sorted(zip(tops, [e.value for e in evac]), key=lambda tb: tb[1])
    return TransitionData([tb[0] for tb in pairs])


# ---------------------------------------------------------------------------
# reverse algorithms


def _reverse_state(t: SkewTableau, x: SkewTableau) -> tuple[_State, int]:
    if x.shape.inner != t.shape.outer:
        raise TableauError("marked tableau must extend the numeric tableau")
    if not is_littlewood_richardson(t):
        raise TableauError("inner tableau not Littlewood-Richardson")
    marked, n = _as_marked(x)
    shape = SkewShape(x.shape.outer if x.size() else t.shape.outer, t.shape.inner)
    entries: dict[Cell, int] = {}
    for cell, e in t.cells.items():
        entries[cell] = e.value
    for cell, e in marked.cells.items():
        entries[cell] = _mark_code(e.mark)
    return _State(shape, entries), n


def _rev_phase1(st: _State, n: int, a: list[int]) -> None:
    for i in range(1, n + 1):
        v = a[n - i]
        p = st.find_first(v)
        if p is None:
            raise TableauError(f"value {v} missing in reverse phase 1")
        st.set(p, _mark_code(i), 1, i, v, "place")
        for j in range(v - 1, 0, -1):
            q = None
            for cand in range(p + 1, len(st.vals)):
                if st.vals[cand] == j:
                    q = cand
                    break
            if q is None:
                raise TableauError("reverse phase 1 found no entry to cross")
            st.swap(p, q, 1, i, j)
            p = q


def rev_hop(t: SkewTableau, x: SkewTableau) -> tuple[TableauPair, TransitionData]:
    """Inverse of the hopping algorithm: t is the inner Littlewood-Richardson
    tableau, x the outer marked (or standard) tableau."""
    st, n = _reverse_state(t, x)
    if n == 0:
        return TableauPair(SkewTableau(SkewShape(t.shape.inner, t.shape.inner), {}), t), TransitionData([])
    a: list[int] = []
    for i in range(1, n + 1):
        p = st.index_of_mark(i)
        j = st.max_numeric() + 1
        while True:
            ca, cb = st.suffix_counts(p, j - 1, j)
            if j >= 1 and ca > cb:
                st.set(p, j, 2, i, j, "absorb")
                a.append(j)
                break
            if j == 1:
                st.set(p, 1, 2, i, 1, "absorb")
                a.append(1)
                break
            # undo the hop performed at index j-1, if any
            ta, tb = st.suffix_counts(p, j - 2, j - 1)
            if ta != tb:
                target = None
                for cand in range(len(st.vals)):
                    if st.vals[cand] != j - 1 or cand == p:
                        continue
                    st.vals[p], st.vals[cand] = st.vals[cand], st.vals[p]
                    xa, xb = st.suffix_counts(cand, j - 2, j - 1)
                    st.vals[p], st.vals[cand] = st.vals[cand], st.vals[p]
                    if xa == xb:
                        target = cand
                if target is None:
                    target = next(
                        cand for cand in range(len(st.vals)) if st.vals[cand] == j - 1
                    )
                st.swap(p, target, 2, i, j - 1)
                p = target
            j -= 1
    _rev_phase1(st, n, a)
    pair = _rev_output(st)
    return pair, TransitionData(a)


def _rev_output(st: _State) -> TableauPair:
    marks: dict[Cell, Entry] = {}
    nums: dict[Cell, Entry] = {}
    for p, v in enumerate(st.vals):
        cell = st.cells[p]
        if _is_mark_code(v):
            marks[cell] = Entry.marked(_mark_index(v))
        else:
            nums[cell] = Entry.of(v)
    mid = _outer_of(marks, st.inner)
    x_t = SkewTableau(SkewShape(mid, st.inner), marks)
    t_t = SkewTableau(SkewShape(_outer_of({**marks, **nums}, st.inner), mid), nums)
    return TableauPair(x_t, t_t)


def rev_crystal(t: SkewTableau, x: SkewTableau) -> tuple[TableauPair, TransitionData]:
    """Inverse of the crystal algorithm: raise each mark down from the top of
    the alphabet, then undo the phase 1 raisings with lowering chains."""
    st, n = _reverse_state(t, x)
    if n == 0:
        return TableauPair(SkewTableau(SkewShape(t.shape.inner, t.shape.inner), {}), t), TransitionData([])
    a: list[int] = []
    for i in range(1, n + 1):
        p = st.index_of_mark(i)
        d = st.max_numeric()
        st.set(p, d + 1, 2, i, d + 1, "absorb")
        j = d + 1
        while j >= 2 and st.raise_op(j - 1, 2, i) is not None:
            j -= 1
        a.append(j)
    for i in range(1, n + 1):
        v = a[n - i]
        if v == 1:
            p = st.find_first(1)
            st.set(p, _mark_code(i), 1, i, 1, "place")
            continue
        for q, val in enumerate(st.vals):
            if not _is_mark_code(val) and val < v:
                st.vals[q] = val - 1
        p = st.find_first(v)
        if p is None:
            raise TableauError(f"value {v} missing in reverse phase 1")
        st.set(p, v - 1, 1, i, v, "place")
        for k in range(v - 2, -1, -1):
            cnt = st.vals.count(k)
            for _ in range(cnt - 1):
                if st.lower_op(k, 1, i) is None:
                    raise TableauError("lowering operator undefined in reverse phase 1")
        p = st.find_first(0)
        if p is None or 0 in st.vals[p + 1 :]:
            raise TableauError("reverse phase 1 did not isolate the mark")
        st.set(p, _mark_code(i), 1, i, 0, "place")
    pair = _rev_output(st)
    return pair, TransitionData(a)


# ---------------------------------------------------------------------------
# dominant words and the transition bijection


def is_lambda_dominant(w: Word, lam: Partition) -> bool:
    """True when prepending the canonical ballot word of weight lam keeps w ballot."""
    for e in w:
        if not e.is_numeric() or e.primed:
            raise TableauError("dominance is defined for numeric unprimed words")
    prefix = [Entry.of(i + 1) for i, part in enumerate(lam) for _ in range(part)]
    return is_ballot(Word(prefix + list(w.letters)))


def pair_from_transition(s: SkewTableau, lam: Partition, w: Word) -> TableauPair:
    """Rebuild the pair (x, t) with combined class of s, inner rectification
    shape lam, and transition word w."""
    if not is_littlewood_richardson(s):
        raise TableauError("base tableau must be Littlewood-Richardson")
    mu = Partition(weight(s))
    if not mu.contains(lam):
        raise TableauError("target shape does not contain the inner shape")
    if not is_lambda_dominant(w, lam):
        raise TableauError("word is not dominant for the inner shape")
    need = tuple(mu[i] - lam[i] for i in range(mu.length()))
    have = weight(w)
    if tuple(have) + (0,) * (len(need) - len(have)) != need:
        raise TableauError("word weight does not match the shape difference")

    rect_s, record = rectify(s)
    t_inner = highest_weight_tableau(lam)
    outer_cells = sorted(
        SkewShape(mu, lam).cells(), key=lambda rc: (-rc[0], rc[1])
    )
    rw = reading_word_from_transition(TransitionData([e.value for e in w]))
    marks = {cell: Entry.marked(e.value) for cell, e in zip(outer_cells, rw)}
    x_outer = SkewTableau(SkewShape(mu, lam), marks)
    rev_pair, td = rev_hop(t_inner, x_outer)
    combined = combine_pair(rev_pair)
    skew = unrectify(combined, record)
    marks_cells = {c: e for c, e in skew.cells.items() if e.is_mark()}
    num_cells = {c: e for c, e in skew.cells.items() if not e.is_mark()}
    mid = _outer_of(marks_cells, skew.shape.inner)
    x_t = SkewTableau(
        SkewShape(mid, skew.shape.inner),
        {c: Entry.of(e.mark) for c, e in marks_cells.items()},
    )
    t_t = SkewTableau(SkewShape(skew.shape.outer, mid), num_cells)
    return TableauPair(x_t, t_t)
