"""Jeu de taquin slides, rectification with replayable records, evacuation,
RSK row insertion, and the slide/dual equivalence predicates.

Marked entries are allowed in slides: they compare below every numeric entry
and among themselves by mark index, so a tableau whose inner part is carried
as marks rectifies exactly like the corresponding union tableau.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import (
    Entry,
    Partition,
    SkewShape,
    SkewTableau,
    TableauError,
    Word,
    highest_weight_tableau,
    reading_word,
)

Cell = tuple[int, int]


def _slide_key(e: Entry) -> tuple:
    # marks sort below all numerics, ordered by index
    if e.is_mark():
        return (0, e.mark)
    return (1, e.value, 0 if e.primed else 1)


def _less(a: Entry, b: Entry) -> bool:
    return _slide_key(a) < _slide_key(b)


# ---------------------------------------------------------------------------
# slide records


@dataclass(frozen=True)
class SlideStep:
    kind: str  # "inner" | "outer"
    start: Cell
    path: tuple[Cell, ...]  # hole positions, start first


@dataclass
class SlideRecord:
    steps: list[SlideStep] = field(default_factory=list)

    def to_json_obj(self) -> list:
        return [
            {"kind": s.kind, "start": list(s.start), "path": [list(c) for c in s.path]}
            for s in self.steps
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @staticmethod
    def from_json(text: str) -> "SlideRecord":
        data = json.loads(text)
        steps = [
            SlideStep(d["kind"], tuple(d["start"]), tuple(tuple(c) for c in d["path"]))
            for d in data
        ]
        return SlideRecord(steps)


# ---------------------------------------------------------------------------
# single slides


def inner_slide(t: SkewTableau, corner: Cell) -> tuple[SkewTableau, tuple[Cell, ...]]:
    """One inner slide into the given inner corner of sh(t).

    Of the entries right of and below the hole the smaller slides in, ties
    slide the one below.  Returns the new tableau and the hole path.
    """
    shape = t.shape
    if corner not in shape.inner_corners():
        raise TableauError(f"{corner} is not an inner corner of {shape}")
    cells = dict(t.cells)
    path = [corner]
    hole = corner
    while True:
        r, c = hole
        right = cells.get((r, c + 1))
        below = cells.get((r + 1, c))
        if right is None and below is None:
            break
        if right is None or (below is not None and not _less(right, below)):
            nxt = (r + 1, c)
        else:
            nxt = (r, c + 1)
        cells[hole] = cells.pop(nxt)
        hole = nxt
        path.append(hole)
    new_inner = list(shape.inner.parts)
    new_inner[corner[0]] -= 1
    new_outer = list(shape.outer.parts)
    new_outer[hole[0]] -= 1
    new_shape = SkewShape(Partition(new_outer), Partition(new_inner))
    return SkewTableau(new_shape, cells), tuple(path)


def outer_slide(t: SkewTableau, cocorner: Cell) -> tuple[SkewTableau, tuple[Cell, ...]]:
    """One outer slide starting from an addable outer cell (inverse of inner).

    Of the entries left of and above the hole the larger slides in, ties
    slide the one above.
    """
    shape = t.shape
    r0, c0 = cocorner
    if c0 != shape.outer[r0] or (r0 > 0 and shape.outer[r0 - 1] < c0 + 1):
        raise TableauError(f"{cocorner} is not an addable outer cell of {shape}")
    cells = dict(t.cells)
    path = [cocorner]
    hole = cocorner
    while True:
        r, c = hole
        left = cells.get((r, c - 1)) if c - 1 >= 0 else None
        above = cells.get((r - 1, c)) if r - 1 >= 0 else None
        if left is None and above is None:
            break
        if above is None or (left is not None and _less(above, left)):
            nxt = (r, c - 1)
        else:
            nxt = (r - 1, c)
        cells[hole] = cells.pop(nxt)
        hole = nxt
        path.append(hole)
    new_outer = list(shape.outer.parts) + [0] * (r0 + 1 - shape.outer.length())
    new_outer[r0] += 1
    new_inner = list(shape.inner.parts) + [0] * (hole[0] + 1 - shape.inner.length())
    new_inner[hole[0]] += 1
    new_shape = SkewShape(Partition(new_outer), Partition(new_inner))
    return SkewTableau(new_shape, cells), tuple(path)


# ---------------------------------------------------------------------------
# rectification


def last_inner_corner(shape: SkewShape) -> Cell | None:
    corners = shape.inner_corners()
    return max(corners) if corners else None


def first_inner_corner(shape: SkewShape) -> Cell | None:
    corners = shape.inner_corners()
    return min(corners) if corners else None


def rectify(t: SkewTableau, corner_policy=last_inner_corner) -> tuple[SkewTableau, SlideRecord]:
    """Apply inner slides until the shape is straight.

    The default policy picks the bottom-most then right-most inner corner;
    by the fundamental theorem of jeu de taquin the result is independent of
    this choice.
    """
    record = SlideRecord()
    cur = t
    while True:
        corner = corner_policy(cur.shape)
        if corner is None:
            return cur, record
        cur, path = inner_slide(cur, corner)
        record.steps.append(SlideStep("inner", corner, path))


def unrectify(t: SkewTableau, record: SlideRecord) -> SkewTableau:
    """Replay a slide record in reverse, with inner and outer slides swapped.

    Each recorded inner slide is undone by an outer slide starting at the
    cell where the inner slide's hole came to rest.  The slides follow the
    jeu de taquin rules on the current tableau, so the record may be replayed
    onto any tableau dual equivalent to the recorded one; on the original
    tableau this inverts rectify exactly.
    """
    cur = t
    try:
        for step in reversed(record.steps):
            if step.kind == "inner":
                cur, _ = outer_slide(cur, step.path[-1])
            else:
                cur, _ = inner_slide(cur, step.path[-1])
    except TableauError as exc:
        raise TableauError(f"slide record does not match tableau: {exc}")
    return cur


# ---------------------------------------------------------------------------
# evacuation


def evacuate_rectified(t: SkewTableau, alphabet_max: int | None = None) -> SkewTableau:
    """Schützenberger evacuation of a straight-shape semistandard tableau.

    Repeatedly delete the top-left entry, rectify the rest, and write
    n+1-i into the vacated corner of the result.
    """
    if t.shape.inner.size() != 0:
        raise TableauError("evacuation requires a straight shape")
    if t.size() == 0:
        return t
    if not t.all_numeric():
        raise TableauError("evacuation requires numeric entries")
    n = alphabet_max if alphabet_max is not None else max(e.value for e in t.cells.values())
    cells = dict(t.cells)
    outer = list(t.shape.outer.parts)
    result: dict[Cell, Entry] = {}
    while cells:
        i = cells.pop((0, 0)).value
        # one slide into (0,0) re-rectifies the remainder
        hole = (0, 0)
        while True:
            r, c = hole
            right = cells.get((r, c + 1))
            below = cells.get((r + 1, c))
            if right is None and below is None:
                break
            if right is None or (below is not None and not _less(right, below)):
                nxt = (r + 1, c)
            else:
                nxt = (r, c + 1)
            cells[hole] = cells.pop(nxt)
            hole = nxt
        result[hole] = Entry.of(n + 1 - i)
        outer[hole[0]] -= 1
    return SkewTableau(t.shape, result)


def evacuate_coplactic(t: SkewTableau, aux: SkewTableau | None = None) -> SkewTableau:
    """Schützenberger involution on a skew tableau.

    Conjugates evacuation by rectification, realized with tableau switching
    through an auxiliary straight tableau on the inner shape; the output does
    not depend on the auxiliary choice.
    """
    from .switching import TableauPair, switch

    if t.shape.inner.size() == 0:
        return evacuate_rectified(t)
    if aux is None:
        aux = highest_weight_tableau(t.shape.inner)
    if aux.shape != SkewShape(t.shape.inner) :
        raise TableauError("auxiliary tableau must be straight of the inner shape")
    rectified = switch(TableauPair(aux, t))
    evacuated = evacuate_rectified(rectified.inner)
    back = switch(TableauPair(evacuated, rectified.outer))
    return back.outer


# ---------------------------------------------------------------------------
# RSK row insertion


def _insert_row(rows: list[list[int]], v: int) -> Cell:
    r = 0
    while True:
        if r == len(rows):
            rows.append([v])
            return (r, 0)
        row = rows[r]
        # bump the leftmost entry strictly greater than v
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] <= v:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(row):
            row.append(v)
            return (r, lo)
        row[lo], v = v, row[lo]
        r += 1


def rsk(w: Word) -> tuple[SkewTableau, SkewTableau]:
    """Row-insertion RSK: returns (insertion tableau, recording tableau)."""
    for e in w:
        if not e.is_numeric() or e.primed:
            raise TableauError("rsk requires a numeric unprimed word")
    rows: list[list[int]] = []
    rec: dict[Cell, Entry] = {}
    for step, e in enumerate(w, start=1):
        cell = _insert_row(rows, e.value)
        rec[cell] = Entry.of(step)
    shape = SkewShape(Partition([len(r) for r in rows]))
    p_cells = {(r, c): Entry.of(v) for r, row in enumerate(rows) for c, v in enumerate(row)}
    return SkewTableau(shape, p_cells), SkewTableau(shape, rec)


def rsk_inverse(p: SkewTableau, q: SkewTableau) -> Word:
    """Recover the word from an (insertion, recording) pair of equal shape."""
    if p.shape != q.shape or p.shape.inner.size() != 0:
        raise TableauError("rsk_inverse requires equal straight shapes")
    rows = [[e.value for e in row] for row in p.rows()]
    order = sorted(q.cells, key=lambda cell: q.cells[cell].value)
    out: list[int] = []
    for cell in reversed(order):
        r, c = cell
        v = rows[r].pop()
        if c != len(rows[r]):
            raise TableauError("recording tableau does not match shape")
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            # reverse bump: rightmost entry strictly smaller than v
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] < v:
                    lo = mid + 1
                else:
                    hi = mid
            row[lo - 1], v = v, row[lo - 1]
        out.append(v)
    if any(rows[r] for r in range(len(rows))):
        raise TableauError("recording tableau does not exhaust the shape")
    return Word([Entry.of(v) for v in reversed(out)])


def evacuate_word(w: Word, alphabet_max: int | None = None) -> Word:
    """Evacuate a word: evacuate its insertion tableau, keep its recording data."""
    if len(w) == 0:
        return w
    p, q = rsk(w)
    return rsk_inverse(evacuate_rectified(p, alphabet_max), q)


# ---------------------------------------------------------------------------
# equivalences


def slide_equivalent(s: SkewTableau, t: SkewTableau) -> bool:
    """Equal insertion tableaux of the reading words."""
    return rsk(reading_word(s))[0] == rsk(reading_word(t))[0]


def dual_equivalent(s: SkewTableau, t: SkewTableau) -> bool:
    """Equal shapes and equal recording tableaux of the reading words."""
    if s.shape != t.shape:
        return False
    return rsk(reading_word(s))[1] == rsk(reading_word(t))[1]
