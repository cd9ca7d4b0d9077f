"""Shifted tableaux: canonical forms, shifted jeu de taquin with the two
diagonal rules, shifted switching oracles, the shifted hopping and coplactic
algorithms, and their inverses.

Letters live in the alphabet 1' < 1 < 2' < 2 < ...; a letter is encoded
internally as an integer code 2v (unprimed v) or 2v-1 (primed v), so the
natural integer order is the alphabet order.  Marks use large negative codes.
Cells are addressed by absolute (row, col) with row r occupying columns
r + inner_r .. r + outer_r - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Entry, ParseError, Partition, TableauError, Word
from .jdt import SlideRecord, SlideStep

Cell = tuple[int, int]

_MARK_BASE = 1 << 20


def mark_code(i: int) -> int:
    return -(_MARK_BASE + i)


def is_mark_code(v: int) -> bool:
    return v <= -_MARK_BASE


def mark_index(v: int) -> int:
    return -v - _MARK_BASE


def code_of(value: int, primed: bool = False) -> int:
    return 2 * value - (1 if primed else 0)


def code_value(c: int) -> int:
    return (c + 1) // 2


def code_primed(c: int) -> bool:
    return c % 2 != 0


def entry_code(e: Entry) -> int:
    if e.is_mark():
        return mark_code(e.mark)
    return code_of(e.value, e.primed)


def code_entry(c: int) -> Entry:
    if is_mark_code(c):
        return Entry.marked(mark_index(c))
    return Entry.of(code_value(c), code_primed(c))


# ---------------------------------------------------------------------------
# shapes and tableaux


class ShiftedShape:
    """Skew shifted shape: strict outer/inner partitions, row r indented r."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition = Partition()):
        if not (outer.is_strict() and inner.is_strict()):
            raise TableauError("shifted shapes need strict partitions")
        if not outer.contains(inner):
            raise TableauError(f"inner {inner} not contained in outer {outer}")
        self.outer = outer
        self.inner = inner

    def cells(self) -> list[Cell]:
        out = []
        for r in range(self.outer.length()):
            for c in range(r + self.inner[r], r + self.outer[r]):
                out.append((r, c))
        return out

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return r >= 0 and r + self.inner[r] <= c < r + self.outer[r]

    def __eq__(self, other) -> bool:
        if isinstance(other, ShiftedShape):
            return self.outer == other.outer and self.inner == other.inner
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"ShiftedShape({list(self.outer.parts)}/{list(self.inner.parts)})"


class ShiftedTableau:
    """A filling of a skew shifted shape."""

    __slots__ = ("shape", "cells")

    def __init__(self, shape: ShiftedShape, cells: dict[Cell, Entry]):
        for cell in cells:
            if cell not in shape:
                raise TableauError(f"cell {cell} outside shape {shape}")
        for cell in shape.cells():
            if cell not in cells:
                raise TableauError(f"shape cell {cell} unfilled")
        self.shape = shape
        self.cells = dict(cells)

    @staticmethod
    def from_grid(text: str) -> "ShiftedTableau":
        rows = [line.split() for line in text.splitlines() if line.strip()]
        cells: dict[Cell, Entry] = {}
        outer, inner = [], []
        for r, row in enumerate(rows):
            filled = []
            for c, tok in enumerate(row):
                if tok == ".":
                    continue
                e = Entry.of(int(tok[:-1]), True) if tok.endswith("'") else None
                from .core import parse_token

                e = parse_token(tok)
                cells[(r, c)] = e
                filled.append(c)
            if filled:
                if filled != list(range(filled[0], filled[-1] + 1)):
                    raise ParseError(f"row {r} not contiguous")
                if filled[0] < r:
                    raise ParseError(f"row {r} starts left of the diagonal")
                inner.append(filled[0] - r)
                outer.append(filled[-1] + 1 - r)
            else:
                inner.append(None)
                outer.append(None)
        while outer and outer[-1] is None:
            outer.pop()
            inner.pop()
        for r in range(len(outer) - 1, -1, -1):
            if outer[r] is None:
                outer[r] = inner[r] = outer[r + 1] + 1 if r + 1 < len(outer) else 0
        try:
            shape = ShiftedShape(Partition(outer), Partition(inner))
        except TableauError as exc:
            raise ParseError(f"rows do not form a shifted shape: {exc}")
        return ShiftedTableau(shape, cells)

    def to_grid(self) -> str:
        lines = []
        for r in range(self.shape.outer.length()):
            toks = []
            for c in range(r + self.shape.outer[r]):
                e = self.cells.get((r, c))
                toks.append("." if e is None else e.token())
            lines.append(" ".join(toks))
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        rows = []
        for r in range(self.shape.outer.length()):
            row = []
            for c in range(r + self.shape.outer[r]):
                e = self.cells.get((r, c))
                if e is None:
                    row.append(None)
                elif e.is_numeric() and not e.primed:
                    row.append(e.value)
                else:
                    row.append(e.token())
            rows.append(row)
        return {"rows": rows}

    def size(self) -> int:
        return len(self.cells)

    def reading_cells(self) -> list[Cell]:
        return sorted(self.cells, key=lambda rc: (-rc[0], rc[1]))

    def reading_word(self) -> Word:
        return Word([self.cells[c] for c in self.reading_cells()])

    def all_numeric(self) -> bool:
        return all(e.is_numeric() for e in self.cells.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, ShiftedTableau):
            return self.shape == other.shape and self.cells == other.cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.shape, tuple(sorted(self.cells.items(), key=lambda kv: kv[0]))))

    def __repr__(self) -> str:
        return "ShiftedTableau:\n" + self.to_grid()

    def is_semistandard(self) -> bool:
        """Rows/columns weakly increase; no repeated unprimed letter in a
        column, no repeated primed letter in a row."""
        if not self.all_numeric():
            return False
        for (r, c), e in self.cells.items():
            k = entry_code(e)
            right = self.cells.get((r, c + 1))
            if right is not None:
                rk = entry_code(right)
                if rk < k or (rk == k and code_primed(k)):
                    return False
            below = self.cells.get((r + 1, c))
            if below is not None:
                bk = entry_code(below)
                if bk < k or (bk == k and not code_primed(k)):
                    return False
        return True

    def is_standard(self) -> bool:
        if not self.is_semistandard() or any(e.primed for e in self.cells.values()):
            return False
        vals = sorted(e.value for e in self.cells.values())
        return vals == list(range(1, len(vals) + 1))


# ---------------------------------------------------------------------------
# canonical form


def canonical_word(w: Word) -> Word:
    seen: set[int] = set()
    out = []
    for e in w:
        if e.is_numeric() and e.value not in seen:
            seen.add(e.value)
            out.append(Entry.of(e.value))
        else:
            out.append(e)
    return Word(out)


def canonical_form(x: Word | ShiftedTableau):
    """Unprime the first occurrence (in reading order) of each value."""
    if isinstance(x, Word):
        return canonical_word(x)
    seen: set[int] = set()
    cells = {}
    for cell in x.reading_cells():
        e = x.cells[cell]
        if e.is_numeric() and e.value not in seen:
            seen.add(e.value)
            cells[cell] = Entry.of(e.value)
        else:
            cells[cell] = e
    return ShiftedTableau(x.shape, cells)


# ---------------------------------------------------------------------------
# shifted slides

# The two special rules, stated for an outer slide (entries move down/right):
# when the entry at a diagonal cell (r, r) moves right into the hole and the
# next diagonal cell (r+1, r+1) holds the equal unprimed value:
#   unprimed i moving right, (r+1,r+1) = i : the mover becomes i'
#   primed i'  moving right, (r+1,r+1) = i : the cell (r+1,r+1) becomes i'
# Inner slides apply the exact inverses.


def _inner_slide_cells(cells: dict[Cell, int], corner: Cell) -> tuple[Cell, list[Cell]]:
    hole = corner
    path = [corner]
    while True:
        r, c = hole
        right = cells.get((r, c + 1))
        below = cells.get((r + 1, c)) if c >= r + 1 else None
        if right is None and below is None:
            break
        if right is None or (below is not None and below <= right):
            nxt = (r + 1, c)
            cells[hole] = cells.pop(nxt)
        else:
            nxt = (r, c + 1)
            mover = cells.pop(nxt)
            if hole == (r, r) and code_primed(mover):
                diag = cells.get((r + 1, r + 1))
                v = code_value(mover)
                if diag == code_of(v, False):
                    mover = code_of(v, False)
                elif diag == code_of(v, True):
                    cells[(r + 1, r + 1)] = code_of(v, False)
            cells[hole] = mover
        hole = nxt
        path.append(hole)
    return hole, path


def _outer_slide_cells(cells: dict[Cell, int], start: Cell) -> tuple[Cell, list[Cell]]:
    hole = start
    path = [start]
    while True:
        r, c = hole
        left = cells.get((r, c - 1)) if c - 1 >= r else None
        above = cells.get((r - 1, c)) if r - 1 >= 0 else None
        if left is None and above is None:
            break
        if above is None or (left is not None and above < left):
            nxt = (r, c - 1)
            mover = cells.pop(nxt)
            if nxt == (r, r):
                diag = cells.get((r + 1, r + 1))
                v = code_value(mover)
                if not code_primed(mover) and diag == code_of(v, False):
                    mover = code_of(v, True)
                elif code_primed(mover) and diag == code_of(v, False):
                    cells[(r + 1, r + 1)] = code_of(v, True)
            cells[hole] = mover
        else:
            nxt = (r - 1, c)
            cells[hole] = cells.pop(nxt)
        hole = nxt
        path.append(hole)
    return hole, path


def _codes(t: ShiftedTableau) -> dict[Cell, int]:
    return {c: entry_code(e) for c, e in t.cells.items()}


def _decode(shape: ShiftedShape, codes: dict[Cell, int]) -> ShiftedTableau:
    return ShiftedTableau(shape, {c: code_entry(v) for c, v in codes.items()})


def _shape_of_cells(codes: dict[Cell, int]) -> ShiftedShape:
    rows: dict[int, list[int]] = {}
    for (r, c) in codes:
        rows.setdefault(r, []).append(c)
    length = max(rows, default=-1) + 1
    outer, inner = [], []
    for r in range(length):
        if r in rows:
            cs = sorted(rows[r])
            if cs != list(range(cs[0], cs[-1] + 1)):
                raise TableauError("rows not contiguous")
            inner.append(cs[0] - r)
            outer.append(cs[-1] + 1 - r)
        else:
            inner.append(None)
            outer.append(None)
    for r in range(length - 1, -1, -1):
        if outer[r] is None:
            outer[r] = inner[r] = outer[r + 1] + 1 if r + 1 < length else 0
    return ShiftedShape(Partition(outer), Partition(inner))


def shifted_outer_of(cells, inner: Partition) -> Partition:
    """Outer shape of a cell set sitting over the given inner shape."""
    rows: dict[int, int] = {}
    for (r, c) in cells:
        rows[r] = max(rows.get(r, -1), c)
    length = max(list(rows) + [inner.length() - 1], default=-1) + 1
    parts = []
    for r in range(length):
        parts.append(rows[r] + 1 - r if r in rows else inner[r])
    return Partition(parts)


def shifted_inner_corners(shape: ShiftedShape) -> list[Cell]:
    inner_cells = set()
    for r in range(shape.inner.length()):
        for c in range(r, r + shape.inner[r]):
            inner_cells.add((r, c))
    out = []
    for (r, c) in inner_cells:
        if (r, c + 1) not in inner_cells and (r + 1, c) not in inner_cells:
            out.append((r, c))
    return out


def shifted_slide(t: ShiftedTableau, corner: Cell) -> tuple[ShiftedTableau, tuple[Cell, ...]]:
    """One inner shifted slide into an inner corner."""
    if corner not in shifted_inner_corners(t.shape):
        raise TableauError(f"{corner} is not an inner corner of {t.shape}")
    codes = _codes(t)
    end, path = _inner_slide_cells(codes, corner)
    return _decode(_shape_of_cells(codes), codes), tuple(path)


def shifted_outer_slide(t: ShiftedTableau, start: Cell) -> tuple[ShiftedTableau, tuple[Cell, ...]]:
    r, c = start
    if c != r + t.shape.outer[r] or (r > 0 and r - 1 + t.shape.outer[r - 1] < c + 1):
        raise TableauError(f"{start} is not an addable outer cell of {t.shape}")
    codes = _codes(t)
    end, path = _outer_slide_cells(codes, start)
    return _decode(_shape_of_cells(codes), codes), tuple(path)


def shifted_rectify(t: ShiftedTableau, corner_policy=max) -> tuple[ShiftedTableau, SlideRecord]:
    """Inner slides until straight; bottom-right corner first by default."""
    record = SlideRecord()
    cur = t
    while True:
        corners = shifted_inner_corners(cur.shape)
        if not corners:
            return cur, record
        corner = corner_policy(corners)
        nxt, path = shifted_slide(cur, corner)
        record.steps.append(SlideStep("inner", corner, tuple(path)))
        cur = nxt


def shifted_unrectify(t: ShiftedTableau, record: SlideRecord) -> ShiftedTableau:
    cur = t
    for step in reversed(record.steps):
        if step.kind == "inner":
            cur, _ = shifted_outer_slide(cur, step.path[-1])
        else:
            cur, _ = shifted_slide(cur, step.path[-1])
    return cur


# ---------------------------------------------------------------------------
# highest weight, Littlewood-Richardson


def shifted_highest_weight(lam: Partition) -> ShiftedTableau:
    if not lam.is_strict():
        raise TableauError("highest weight shifted shapes are strict partitions")
    cells = {}
    for r, width in enumerate(lam):
        for c in range(r, r + width):
            cells[(r, c)] = Entry.of(r + 1)
    return ShiftedTableau(ShiftedShape(lam), cells)


def shifted_is_LR(t: ShiftedTableau) -> bool:
    """Canonical-form semistandard tableau rectifying to a highest weight."""
    if t.size() == 0:
        return True
    if not t.is_semistandard():
        return False
    canon = canonical_form(t)
    if canon != t:
        return False
    rect, _ = shifted_rectify(t)
    return rect == shifted_highest_weight(rect.shape.outer)


_WORD_LR_CACHE: dict[tuple[int, ...], bool] = {}


def antidiagonal_realization(codes: list[int]) -> ShiftedTableau:
    """A skew shifted tableau with one cell per row whose reading word is the
    given letter sequence."""
    n = len(codes)
    big = 2 * n + 2
    cells = {}
    for k, code in enumerate(codes):
        r = n - 1 - k
        cells[(r, big - r)] = code_entry(code)
    return _decode(_shape_of_cells({c: 0 for c in cells}), {c: entry_code(e) for c, e in cells.items()})


def shifted_word_is_LR(codes: list[int]) -> bool:
    """Littlewood-Richardson property of a shifted word, by rectifying a
    one-cell-per-row realization of it."""
    key = tuple(codes)
    hit = _WORD_LR_CACHE.get(key)
    if hit is not None:
        return hit
    if not codes:
        _WORD_LR_CACHE[key] = True
        return True
    canon: list[int] = []
    seen: set[int] = set()
    for c in codes:
        v = code_value(c)
        if v not in seen:
            seen.add(v)
            canon.append(code_of(v, False))
        else:
            canon.append(c)
    t = antidiagonal_realization(canon)
    rect, _ = shifted_rectify(t)
    ok = rect == shifted_highest_weight(rect.shape.outer)
    _WORD_LR_CACHE[key] = ok
    return ok


# ---------------------------------------------------------------------------
# standardization order of shifted tableaux


def shifted_standardization_cells(t: ShiftedTableau) -> list[Cell]:
    cells = t.reading_cells()
    if all(t.cells[c].is_mark() for c in cells):
        return sorted(cells, key=lambda c: t.cells[c].mark)
    keyed = []
    for p, cell in enumerate(cells):
        e = t.cells[cell]
        keyed.append(((e.value, 0 if e.primed else 1, -p if e.primed else p), cell))
    return [cell for _, cell in sorted(keyed)]


# ---------------------------------------------------------------------------
# shifted switching oracles


class ShiftedPair:
    __slots__ = ("inner", "outer")

    def __init__(self, inner: ShiftedTableau, outer: ShiftedTableau):
        if outer.shape.inner != inner.shape.outer:
            raise TableauError("outer shifted tableau does not extend the inner one")
        self.inner = inner
        self.outer = outer

    def combined_shape(self) -> ShiftedShape:
        return ShiftedShape(self.outer.shape.outer, self.inner.shape.inner)

    def __eq__(self, other) -> bool:
        if isinstance(other, ShiftedPair):
            return self.inner == other.inner and self.outer == other.outer
        return NotImplemented

    def __repr__(self) -> str:
        return f"ShiftedPair(\n{self.inner.to_grid()}\n--\n{self.outer.to_grid()}\n)"


def _switch_walk(codes: dict[Cell, int], hole: Cell, movable: set[Cell]) -> Cell:
    """Slide the movable entries through one hole, shifted rules included."""
    while True:
        r, c = hole
        right = (r, c + 1) if (r, c + 1) in movable else None
        below = (r + 1, c) if ((r + 1, c) in movable and c >= r + 1) else None
        if right is None and below is None:
            return hole
        if right is None or (below is not None and codes[below] <= codes[right]):
            nxt = below
            codes[hole] = codes.pop(nxt)
        else:
            nxt = right
            mover = codes.pop(nxt)
            if hole == (r, r) and code_primed(mover):
                diag = codes.get((r + 1, r + 1))
                v = code_value(mover)
                if diag == code_of(v, False):
                    mover = code_of(v, False)
                elif diag == code_of(v, True):
                    codes[(r + 1, r + 1)] = code_of(v, False)
            codes[hole] = mover
        movable.add(hole)
        movable.discard(nxt)
        hole = nxt


def shifted_switch(pair: ShiftedPair) -> ShiftedPair:
    """Shifted tableau switching: slide the outer part through the inner."""
    x, t = pair.inner, pair.outer
    if x.size() == 0 or t.size() == 0:
        return pair
    order = shifted_standardization_cells(x)
    codes = _codes(x)
    codes.update(_codes(t))
    movable = set(t.cells)
    placed: dict[Cell, int] = {}
    for cell in reversed(order):
        entry = codes.pop(cell)
        end = _switch_walk(codes, cell, movable)
        codes[end] = entry
        placed[end] = entry
    inner_part = {c: v for c, v in codes.items() if c not in placed}
    mid = shifted_outer_of(inner_part, x.shape.inner)
    t_new = _decode(ShiftedShape(mid, x.shape.inner), inner_part)
    outer_shape = ShiftedShape(pair.combined_shape().outer, mid)
    x_new = ShiftedTableau(outer_shape, {c: code_entry(v) for c, v in placed.items()})
    return ShiftedPair(t_new, x_new)


def _combined(pair: ShiftedPair, encode_inner=None, encode_outer=None) -> ShiftedTableau:
    cells: dict[Cell, Entry] = {}
    for c, e in pair.inner.cells.items():
        cells[c] = encode_inner(e) if encode_inner else e
    for c, e in pair.outer.cells.items():
        cells[c] = encode_outer(e) if encode_outer else e
    return ShiftedTableau(pair.combined_shape(), cells)


def shifted_coswitch(pair: ShiftedPair) -> ShiftedPair:
    """Coplactic shifted switching: rectify the union, switch, unrectify.

    The inner boxes keep their letters (shifted up past the outer block on
    the way back) so the diagonal sliding rules see true values throughout.
    """
    x, t = pair.inner, pair.outer
    if x.size() == 0 or t.size() == 0:
        return pair
    m = max(e.value for e in x.cells.values())
    k = max(e.value for e in t.cells.values())
    # rectification side: inner letters low, outer letters shifted up by m
    u = _combined(
        pair, encode_outer=lambda e: Entry.of(e.value + m, e.primed)
    )
    rect_u, record = shifted_rectify(u)
    lo = {c: e for c, e in rect_u.cells.items() if e.value <= m}
    hi = {c: Entry.of(e.value - m, e.primed) for c, e in rect_u.cells.items() if e.value > m}
    mid = shifted_outer_of(lo, rect_u.shape.inner)
    rect_pair = ShiftedPair(
        ShiftedTableau(ShiftedShape(mid, rect_u.shape.inner), lo),
        ShiftedTableau(ShiftedShape(rect_u.shape.outer, mid), hi),
    )
    switched = shifted_switch(rect_pair)
    # unrectification side: former inner letters now high
    u2 = _combined(
        switched, encode_outer=lambda e: Entry.of(e.value + k, e.primed)
    )
    skew = shifted_unrectify(u2, record)
    nums = {c: e for c, e in skew.cells.items() if e.value <= k}
    marks = {c: Entry.of(e.value - k, e.primed) for c, e in skew.cells.items() if e.value > k}
    mid2 = shifted_outer_of(nums, skew.shape.inner)
    t_new = ShiftedTableau(ShiftedShape(mid2, skew.shape.inner), nums)
    x_new = ShiftedTableau(ShiftedShape(skew.shape.outer, mid2), marks)
    return ShiftedPair(t_new, x_new)


def shifted_evacuate_rectified(t: ShiftedTableau, alphabet_max: int | None = None) -> ShiftedTableau:
    """Evacuation of a straight-shape shifted tableau."""
    if t.shape.inner.size() != 0:
        raise TableauError("evacuation requires a straight shape")
    if t.size() == 0:
        return t
    n = alphabet_max if alphabet_max is not None else max(e.value for e in t.cells.values())
    codes = _codes(t)
    result: dict[Cell, Entry] = {}
    while codes:
        top = codes.pop((0, 0))
        end, _ = _inner_slide_cells(codes, (0, 0))
        result[end] = Entry.of(n + 1 - code_value(top), code_primed(top))
    return ShiftedTableau(t.shape, result)


def shifted_evacuate(t: ShiftedTableau, aux: ShiftedTableau | None = None) -> ShiftedTableau:
    """Coplactic shifted evacuation via switching through an auxiliary."""
    if t.shape.inner.size() == 0:
        return shifted_evacuate_rectified(t)
    if aux is None:
        aux = shifted_highest_weight(t.shape.inner)
    rectified = shifted_switch(ShiftedPair(aux, t))
    evacuated = shifted_evacuate_rectified(rectified.inner)
    back = shifted_switch(ShiftedPair(evacuated, rectified.outer))
    return back.outer


def shifted_pesh(pair: ShiftedPair) -> ShiftedPair:
    """Shifted partial evacuation shuffle: coswitch after evacuating the
    inner tableau."""
    if pair.inner.size() == 0 or pair.outer.size() == 0:
        return pair
    return shifted_coswitch(ShiftedPair(shifted_evacuate(pair.inner), pair.outer))


# ---------------------------------------------------------------------------
# the shifted hopping algorithm


class _ShiftedState:
    """Combined filling as a word over fixed cells in reading order."""

    __slots__ = ("cells", "vals", "trace", "inner", "last_earlier")

    def __init__(self, shape: ShiftedShape, entries: dict[Cell, int]):
        self.cells = sorted(shape.cells(), key=lambda rc: (-rc[0], rc[1]))
        self.vals = [entries[c] for c in self.cells]
        self.trace: list[tuple] = []
        self.inner = shape.inner
        self.last_earlier: bool | None = None  # None = not yet moved

    # queries -------------------------------------------------------------

    def numeric_codes(self, skip: int | None = None) -> list[int]:
        return [v for p, v in enumerate(self.vals) if not is_mark_code(v) and p != skip]

    def max_value(self) -> int:
        vals = [code_value(v) for v in self.vals if not is_mark_code(v)]
        return max(vals, default=0)

    def positions_of_value(self, value: int, primed: bool | None = None) -> list[int]:
        out = []
        for p, v in enumerate(self.vals):
            if is_mark_code(v) or code_value(v) != value:
                continue
            if primed is None or code_primed(v) == primed:
                out.append(p)
        return out

    def first_of_class(self, value: int) -> int | None:
        for p, v in enumerate(self.vals):
            if not is_mark_code(v) and code_value(v) == value:
                return p
        return None

    def index_of_mark(self, i: int) -> int:
        return self.vals.index(mark_code(i))

    # mutations -----------------------------------------------------------

    def swap(self, p: int, q: int):
        self.vals[p], self.vals[q] = self.vals[q], self.vals[p]
        self.trace.append(("switch", self.cells[p], self.cells[q]))

    def set(self, p: int, code: int, event: str = "set"):
        self.vals[p] = code
        self.trace.append((event, self.cells[p]))

    def canonicalize(self):
        seen: set[int] = set()
        for p, v in enumerate(self.vals):
            if is_mark_code(v):
                continue
            val = code_value(v)
            if val not in seen:
                seen.add(val)
                if code_primed(v):
                    self.vals[p] = code_of(val, False)

    # validity ------------------------------------------------------------

    def switch_valid(self, p: int, q: int) -> bool:
        """Valid switch: the numeric word omitting the moving mark stays LR."""
        self.vals[p], self.vals[q] = self.vals[q], self.vals[p]
        word = [v for v in self.vals if not is_mark_code(v)]
        ok = shifted_word_is_LR(word)
        self.vals[p], self.vals[q] = self.vals[q], self.vals[p]
        return ok

    def to_tableau(self) -> ShiftedTableau:
        cells = {self.cells[p]: code_entry(v) for p, v in enumerate(self.vals)}
        shape = ShiftedShape(shifted_outer_of(cells, self.inner), self.inner)
        return ShiftedTableau(shape, cells)

    def split_pair(self) -> ShiftedPair:
        nums = {}
        marks = {}
        for p, v in enumerate(self.vals):
            if is_mark_code(v):
                marks[self.cells[p]] = code_entry(v)
            else:
                nums[self.cells[p]] = code_entry(v)
        mid = shifted_outer_of(nums, self.inner)
        inner_t = ShiftedTableau(ShiftedShape(mid, self.inner), nums)
        total = shifted_outer_of({self.cells[p] for p in range(len(self.cells))}, self.inner)
        outer_t = ShiftedTableau(ShiftedShape(total, mid), marks)
        return ShiftedPair(inner_t, outer_t)


def _shifted_combined(x: ShiftedTableau, t: ShiftedTableau) -> tuple[_ShiftedState, int]:
    if t.shape.inner != x.shape.outer:
        raise TableauError("outer tableau does not extend the inner tableau")
    if not shifted_is_LR(canonical_form(t) if t.all_numeric() else t):
        raise TableauError("outer tableau not Littlewood-Richardson")
    if all(e.is_mark() for e in x.cells.values()) and x.size() > 0:
        marked = x
        n = x.size()
    else:
        order = shifted_standardization_cells(x)
        marked = ShiftedTableau(
            x.shape, {c: Entry.marked(i + 1) for i, c in enumerate(order)}
        )
        n = x.size()
    shape = ShiftedShape(t.shape.outer, x.shape.inner)
    entries: dict[Cell, int] = {}
    for c, e in marked.cells.items():
        entries[c] = entry_code(e)
    for c, e in canonical_form(t).cells.items():
        entries[c] = entry_code(e)
    return _ShiftedState(shape, entries), n


def _nearest_after(st: _ShiftedState, p: int, value: int, primed: bool) -> int | None:
    code = code_of(value, primed)
    for q in range(p + 1, len(st.vals)):
        if st.vals[q] == code:
            return q
    return None


def _nearest_before(st: _ShiftedState, p: int, value: int, primed: bool) -> int | None:
    code = code_of(value, primed)
    for q in range(p - 1, -1, -1):
        if st.vals[q] == code:
            return q
    return None


def _hop_across(st: _ShiftedState, p: int, value: int, primed: bool, prefer_after: bool) -> int:
    """Switch the mark at p with a nearest letter of the given kind; of the
    two reading-order neighbours the valid switch wins, preferring the stated
    side when both are valid."""
    after = _nearest_after(st, p, value, primed)
    before = _nearest_before(st, p, value, primed)
    order = (after, before) if prefer_after else (before, after)
    for q in order:
        if q is not None and st.switch_valid(p, q):
            st.swap(p, q)
            return q
    raise TableauError(
        f"no valid switch across {'primed' if primed else 'plain'} {value}"
    )


def _shifted_phase1(st: _ShiftedState, n: int) -> list[int]:
    a: list[int] = []
    for i in range(n, 0, -1):
        p = st.index_of_mark(i)
        j = 1
        while True:
            if _nearest_after(st, p, j, True) is None:
                a.append(j)
                if i == 1:
                    # the last entry keeps moving: it becomes the first mark
                    # of phase 2 after the canonical form is restored
                    st.set(p, code_of(j, True), "absorb")
                    st.canonicalize()
                    st.set(p, mark_code(n), "rename")
                    st.last_earlier = True
                else:
                    st.set(p, code_of(j, True), "absorb")
                    st.canonicalize()
                break
            p = _hop_across(st, p, j, True, prefer_after=True)
            p = _hop_across(st, p, j, False, prefer_after=False)
            j += 1
    return a


def _class_positions(st: _ShiftedState, p: int, values: tuple[int, ...]) -> list[int]:
    return [
        q
        for q, v in enumerate(st.vals)
        if (q == p or not is_mark_code(v))
        and (q == p or code_value(v) in values)
    ]


def _pattern_before(st: _ShiftedState, p: int, j: int) -> int | None:
    """Position of the unprimed j in the pattern ... j (j+1)* x ... if the
    (j, j+1)-subword around the mark matches it."""
    run = []
    for q in range(p - 1, -1, -1):
        v = st.vals[q]
        if is_mark_code(v) or code_value(v) not in (j, j + 1):
            continue
        if v == code_of(j + 1, False):
            run.append(q)
            continue
        if v == code_of(j, False):
            return q
        return None
    return None


def _pattern_after(st: _ShiftedState, p: int, j: int) -> int | None:
    """Position of the (j+1)' in the pattern ... x (j')* (j+1)' ..."""
    for q in range(p + 1, len(st.vals)):
        v = st.vals[q]
        if is_mark_code(v) or code_value(v) not in (j, j + 1):
            continue
        if v == code_of(j, True):
            continue
        if v == code_of(j + 1, True):
            return q
        return None
    return None


def _precedes_all_class(st: _ShiftedState, p: int, j: int) -> bool:
    for q, v in enumerate(st.vals):
        if q == p or is_mark_code(v):
            continue
        if code_value(v) == j and q < p:
            return False
    return True


def _has_class(st: _ShiftedState, j: int) -> bool:
    return any(not is_mark_code(v) and code_value(v) == j for v in st.vals)


def _walk_level(st: _ShiftedState, p: int, value: int, primed: bool, once: bool) -> int:
    """Cross letters of one kind repeatedly: nearest neighbour, later side
    preferred, each crossing must be a valid switch and may not undo the
    previous one."""
    last_partner: int | None = None
    while True:
        cands = []
        q = _nearest_after(st, p, value, primed)
        if q is not None:
            cands.append(q)
        q = _nearest_before(st, p, value, primed)
        if q is not None:
            cands.append(q)
        moved = False
        for q in cands:
            if q == last_partner:
                continue
            if st.switch_valid(p, q):
                st.swap(p, q)
                last_partner = p
                p = q
                moved = True
                break
        if not moved or once:
            return p
    return p


def _shifted_phase2(st: _ShiftedState, n: int, a: list[int], d: int) -> None:
    for k in range(1, n + 1):
        m = n - k + 1
        v = a[m - 1]
        if k == 1:
            p = st.index_of_mark(n)
        else:
            pos = st.positions_of_value(v, primed=False)
            if not pos:
                raise TableauError(f"transition value {v} missing in phase 2")
            p = pos[0]
            # the stated canonicalization after this step would strip primes
            # the worked examples keep, so the representative is left alone
            st.set(p, mark_code(m), "place")
        j = v
        while j < d + n - k + 1:
            p = _walk_level(st, p, j, False, once=False)
            p = _walk_level(st, p, j + 1, True, once=True)
            j += 1


def shifted_hop(x: ShiftedTableau, t: ShiftedTableau):
    """Shifted hopping algorithm: the shifted partial evacuation shuffle of
    (x, t) computed by local switches.  x is shifted standard (or marked),
    t is shifted Littlewood-Richardson in canonical form and extends x.

    Returns (pair, transition data) where the pair is (numeric part, marks).
    """
    from .localalg import TransitionData

    st, n = _shifted_combined(x, t)
    if n == 0:
        return ShiftedPair(ShiftedTableau(ShiftedShape(x.shape.outer, x.shape.inner), {}), t), TransitionData([])
    d = st.max_value()
    a = _shifted_phase1(st, n)
    _shifted_phase2(st, n, a, d)
    return st.split_pair(), TransitionData(a)


def shifted_coswitch_local(x: ShiftedTableau, t: ShiftedTableau) -> ShiftedPair:
    """Shifted coplactic switch computed locally: evacuate x, then hop."""
    if x.size() == 0 or t.size() == 0:
        return ShiftedPair(x, t)
    if all(e.is_mark() for e in x.cells.values()):
        order = sorted(x.cells, key=lambda c: x.cells[c].mark)
        numeric = ShiftedTableau(
            x.shape, {c: Entry.of(i + 1) for i, c in enumerate(order)}
        )
    else:
        numeric = x
    y = shifted_evacuate(numeric)
    pair, _ = shifted_hop(y, t)
    return pair
