"""Tableau switching and its coplactic relatives: coswitch, partial
evacuation shuffling, paired evacuation, chain shuffling and the monodromy
operator built from them.
"""

from __future__ import annotations

from .core import (
    Entry,
    Partition,
    SkewShape,
    SkewTableau,
    TableauError,
    Word,
    reading_word,
    split_union,
    standardize,
    union,
    _outer_of,
)
from .jdt import _slide_key, evacuate_coplactic, rectify, unrectify

Cell = tuple[int, int]


class TableauPair:
    """A pair (inner, outer) where the outer tableau extends the inner one."""

    __slots__ = ("inner", "outer")

    def __init__(self, inner: SkewTableau, outer: SkewTableau):
        if outer.shape.inner != inner.shape.outer:
            raise TableauError(
                f"outer {outer.shape} does not extend inner {inner.shape}"
            )
        self.inner = inner
        self.outer = outer

    def combined_shape(self) -> SkewShape:
        return SkewShape(self.outer.shape.outer, self.inner.shape.inner)

    def __eq__(self, other) -> bool:
        if isinstance(other, TableauPair):
            return self.inner == other.inner and self.outer == other.outer
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.inner, self.outer))

    def __repr__(self) -> str:
        return f"TableauPair(\n{self.inner.to_grid()}\n--\n{self.outer.to_grid()}\n)"


class TableauChain:
    """A sequence of tableaux, each extending the previous one."""

    __slots__ = ("links",)

    def __init__(self, links: list[SkewTableau]):
        for a, b in zip(links, links[1:]):
            if b.shape.inner != a.shape.outer:
                raise TableauError("chain links must extend consecutively")
        self.links = list(links)

    def __len__(self) -> int:
        return len(self.links)

    def __getitem__(self, i: int) -> SkewTableau:
        return self.links[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, TableauChain):
            return self.links == other.links
        return NotImplemented


# ---------------------------------------------------------------------------
# standardization order of the cells of a tableau


def standardization_cells(t: SkewTableau) -> list[Cell]:
    """Cells of t listed by increasing standardization rank of their entries."""
    cells = t.reading_cells()
    if all(t.cells[c].is_mark() for c in cells):
        return sorted(cells, key=lambda c: t.cells[c].mark)
    w = reading_word(t)
    std = standardize(w)
    ranked = sorted(range(len(cells)), key=lambda i: std[i].value)
    return [cells[i] for i in ranked]


# ---------------------------------------------------------------------------
# switching


def _switch_cells(
    cells: dict[Cell, Entry],
    inner_cells: list[Cell],
    movable: set[Cell],
) -> tuple[dict[Cell, Entry], set[Cell]]:
    """Slide the movable entries through the inner cells.

    inner_cells must be listed in increasing standardization order; they are
    vacated largest first.  Returns the new cell dict and the set of cells now
    holding the displaced inner entries.
    """
    cells = dict(cells)
    placed: set[Cell] = set()
    for cell in reversed(inner_cells):
        entry = cells.pop(cell)
        hole = cell
        while True:
            r, c = hole
            right = (r, c + 1) if (r, c + 1) in movable else None
            below = (r + 1, c) if (r + 1, c) in movable else None
            if right is None and below is None:
                break
            if right is None:
                nxt = below
            elif below is None:
                nxt = right
            else:
                nxt = below if _slide_key(cells[below]) <= _slide_key(cells[right]) else right
            cells[hole] = cells[nxt]
            movable.add(hole)
            movable.discard(nxt)
            del cells[nxt]
            hole = nxt
        cells[hole] = entry
        placed.add(hole)
    return cells, placed


def switch(pair: TableauPair) -> TableauPair:
    """Tableau switching: slide the outer tableau through the inner one.

    The inner cells are vacated in decreasing standardization order; each
    vacated entry re-enters at the cell where the slide path leaves the outer
    tableau.  Involution.
    """
    x, t = pair.inner, pair.outer
    if x.size() == 0 or t.size() == 0:
        return pair
    order = standardization_cells(x)
    cells = dict(x.cells)
    cells.update(t.cells)
    movable = set(t.cells)
    new_cells, placed = _switch_cells(cells, order, movable)
    inner_part = {c: e for c, e in new_cells.items() if c not in placed}
    outer_part = {c: e for c, e in new_cells.items() if c in placed}
    mid = _outer_of(inner_part, x.shape.inner)
    t_new = SkewTableau(SkewShape(mid, x.shape.inner), inner_part)
    x_new = SkewTableau(SkewShape(pair.combined_shape().outer, mid), outer_part)
    return TableauPair(t_new, x_new)


# ---------------------------------------------------------------------------
# marks plumbing for the coplactic pipelines


def mark_tableau(x: SkewTableau) -> tuple[SkewTableau, dict[int, Entry]]:
    """Replace x's entries by marks x_1..x_n in standardization order.

    Returns the marked tableau and the map from mark index back to the
    original entry.
    """
    order = standardization_cells(x)
    cells: dict[Cell, Entry] = {}
    back: dict[int, Entry] = {}
    for i, cell in enumerate(order, start=1):
        cells[cell] = Entry.marked(i)
        back[i] = x.cells[cell]
    return SkewTableau(x.shape, cells), back


def unmark_tableau(t: SkewTableau, back: dict[int, Entry]) -> SkewTableau:
    cells = {c: (back[e.mark] if e.is_mark() else e) for c, e in t.cells.items()}
    return SkewTableau(t.shape, cells)


def _split_marked(u: SkewTableau, inner_first: bool) -> TableauPair:
    """Split a combined tableau into (numeric part, marked part) as a pair."""
    marks = {c: e for c, e in u.cells.items() if e.is_mark()}
    nums = {c: e for c, e in u.cells.items() if not e.is_mark()}
    if inner_first:
        lo, hi = marks, nums
    else:
        lo, hi = nums, marks
    mid = _outer_of(lo, u.shape.inner)
    inner_t = SkewTableau(SkewShape(mid, u.shape.inner), lo)
    outer_t = SkewTableau(SkewShape(u.shape.outer, mid), hi)
    return TableauPair(inner_t, outer_t)


def combine_pair(pair: TableauPair) -> SkewTableau:
    cells = dict(pair.inner.cells)
    cells.update(pair.outer.cells)
    return SkewTableau(pair.combined_shape(), cells)


def rectify_union(pair: TableauPair):
    """Rectify inner-as-marks |_| outer jointly; marks slide below numerics."""
    marked, back = mark_tableau(pair.inner)
    u = combine_pair(TableauPair(marked, pair.outer))
    return rectify(u) + (back,)


def coswitch(pair: TableauPair) -> TableauPair:
    """Coplactic switching: rectify the union, switch, unrectify.

    The inner tableau's boxes travel through the pipeline as distinct low
    (then, after the switch, high) letters refining the union order, so the
    output inner/outer tableaux are concrete fillings.  Involution.
    """
    x, t = pair.inner, pair.outer
    if x.size() == 0 or t.size() == 0:
        return pair
    marked, back = mark_tableau(x)
    n = x.size()
    shape = pair.combined_shape()
    # rectification side: inner boxes are the low letters 1..n
    cells: dict[Cell, Entry] = {c: Entry.of(e.mark) for c, e in marked.cells.items()}
    for c, e in t.cells.items():
        cells[c] = Entry.of(e.value + n)
    rect_u, record = rectify(SkewTableau(shape, cells))
    lo = {c: Entry.marked(e.value) for c, e in rect_u.cells.items() if e.value <= n}
    hi = {c: Entry.of(e.value - n) for c, e in rect_u.cells.items() if e.value > n}
    mid = _outer_of(lo, rect_u.shape.inner)
    rect_pair = TableauPair(
        SkewTableau(SkewShape(mid, rect_u.shape.inner), lo),
        SkewTableau(SkewShape(rect_u.shape.outer, mid), hi),
    )
    switched = switch(rect_pair)
    # unrectification side: the former inner boxes are now the high letters
    k = max(e.value for e in t.cells.values())
    cells2: dict[Cell, Entry] = dict(switched.inner.cells)
    for c, e in switched.outer.cells.items():
        cells2[c] = Entry.of(k + e.mark)
    skew = unrectify(SkewTableau(rect_u.shape, cells2), record)
    nums = {c: e for c, e in skew.cells.items() if e.value <= k}
    marks = {c: back[e.value - k] for c, e in skew.cells.items() if e.value > k}
    mid2 = _outer_of(nums, shape.inner)
    t_new = SkewTableau(SkewShape(mid2, shape.inner), nums)
    x_new = SkewTableau(SkewShape(shape.outer, mid2), marks)
    return TableauPair(t_new, x_new)


def pesh(pair: TableauPair) -> TableauPair:
    """Partial evacuation shuffling: coswitch after evacuating the inner part."""
    if pair.inner.size() == 0 or pair.outer.size() == 0:
        return pair
    return coswitch(TableauPair(evacuate_coplactic(pair.inner), pair.outer))


def evacuate_pair(pair: TableauPair) -> TableauPair:
    """Evacuate the union and split it back into a pair.  Involution."""
    x, t = pair.inner, pair.outer
    if x.size() == 0:
        return TableauPair(x, evacuate_coplactic(t)) if t.size() else pair
    if t.size() == 0:
        return TableauPair(evacuate_coplactic(x), t)
    k = max(e.value for e in t.cells.values())
    u = union(x, t)
    eu = evacuate_coplactic(u)
    t_new, x_new = split_union(eu, k, x.shape.inner)
    return TableauPair(t_new, x_new)


# ---------------------------------------------------------------------------
# chains


def coswitch_chain(chain: TableauChain, i: int, j: int) -> TableauChain:
    """Reverse the consecutive links i..j (1-indexed) coplactically.

    The block is rectified in place, the links are switched pairwise until
    their order reverses, and the block is slid back out.
    """
    if not (1 <= i <= j <= len(chain)):
        raise TableauError(f"link range {i}..{j} out of bounds")
    if i == j:
        return TableauChain(list(chain.links))
    block = chain.links[i - 1 : j]
    m = len(block)
    # tag cells by band while keeping one combined tableau
    cells: dict[Cell, Entry] = {}
    band: dict[Cell, int] = {}
    backs: dict[int, dict[int, Entry]] = {}
    for b, link in enumerate(block):
        marked, back = mark_tableau(link)
        backs[b] = back
        for cell, e in marked.cells.items():
            cells[cell] = e
            band[cell] = b
    inner_shape = block[0].shape.inner
    outer_shape = block[-1].shape.outer
    u = _BandTableau(SkewShape(outer_shape, inner_shape), cells, band, backs)

    forward_rank = {b: b for b in range(m)}
    rec_t, record = rectify(u.as_tableau(forward_rank))
    u = u.relocate(rec_t, forward_rank)

    for first in range(m - 1):
        for second in range(first + 1, m):
            u = u.switch_bands(first, second)
    # bands are now nested in reverse order
    reversed_rank = {b: m - 1 - b for b in range(m)}
    final = unrectify(u.as_tableau(reversed_rank), record)
    u = u.relocate(final, reversed_rank)
    new_links = u.split_links(reverse_order=True)
    out = list(chain.links)
    out[i - 1 : j] = new_links
    return TableauChain(out)


class _BandTableau:
    """Combined tableau whose cells carry a band (link) tag."""

    def __init__(self, shape, cells, band, backs):
        self.shape = shape
        self.cells = cells
        self.band = band
        self.backs = backs

    def as_tableau(self, rank: dict[int, int]) -> SkewTableau:
        # encode the band's current nesting rank in the mark index so slides
        # keep bands ordered: band of rank r, mark i -> mark r * OFFSET + i
        out = {}
        for cell, e in self.cells.items():
            out[cell] = Entry.marked(rank[self.band[cell]] * _BAND_OFFSET + e.mark)
        return SkewTableau(self.shape, out)

    def relocate(self, t: SkewTableau, rank: dict[int, int]) -> "_BandTableau":
        unrank = {r: b for b, r in rank.items()}
        cells, band = {}, {}
        for cell, e in t.cells.items():
            r, i = divmod(e.mark, _BAND_OFFSET)
            cells[cell] = Entry.marked(i)
            band[cell] = unrank[r]
        return _BandTableau(t.shape, cells, band, self.backs)

    def switch_bands(self, a: int, b: int) -> "_BandTableau":
        a_cells = [c for c, bb in self.band.items() if bb == a]
        order = sorted(a_cells, key=lambda c: self.cells[c].mark)
        movable = {c for c, bb in self.band.items() if bb == b}
        old_ab = set(a_cells) | movable
        new_cells, placed = _switch_cells(self.cells, order, set(movable))
        new_band = {}
        for cell in new_cells:
            if cell in placed:
                new_band[cell] = a
            elif cell in old_ab:
                new_band[cell] = b
            else:
                new_band[cell] = self.band[cell]
        return _BandTableau(self.shape, new_cells, new_band, self.backs)

    def split_links(self, reverse_order: bool) -> list[SkewTableau]:
        m = len(self.backs)
        order = list(range(m - 1, -1, -1)) if reverse_order else list(range(m))
        links = []
        inner = self.shape.inner
        for b in order:
            part = {c: e for c, e in self.cells.items() if self.band[c] == b}
            mid = _outer_of(part, inner)
            t = SkewTableau(SkewShape(mid, inner), part)
            links.append(unmark_tableau(t, self.backs[b]))
            inner = mid
        return links


_BAND_OFFSET = 1 << 20


# ---------------------------------------------------------------------------
# monodromy


def monodromy_omega(pair: TableauPair) -> TableauPair:
    """The monodromy operator: switch after coswitch."""
    return switch(coswitch(pair))


def is_fixed_point(pair: TableauPair) -> bool:
    return monodromy_omega(pair) == pair
