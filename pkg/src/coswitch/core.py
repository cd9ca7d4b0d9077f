"""Partitions, skew shapes, entries, words and tableaux.

Cells are addressed (row, col) with row 0 at the top; the inner partition
of a skew shape occupies the top-left corner (English notation).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import json
from typing import Iterable, Iterator, Sequence


class TableauError(ValueError):
    """Raised when an operation's precondition is violated."""


class ParseError(ValueError):
    """Raised when a grid or JSON tableau cannot be parsed."""


# ---------------------------------------------------------------------------
# partitions and shapes


class Partition:
    """Weakly decreasing sequence of nonnegative integers, trailing zeros dropped."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = list(parts)
        while ps and ps[-1] == 0:
            ps.pop()
        for i in range(len(ps) - 1):
            if ps[i] < ps[i + 1]:
                raise TableauError(f"not weakly decreasing: {ps}")
        if any(p < 0 for p in ps):
            raise TableauError(f"negative part: {ps}")
        self.parts = tuple(ps)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def contains(self, other: "Partition") -> bool:
        return all(self[i] >= other[i] for i in range(len(other)))

    def is_strict(self) -> bool:
        return all(self.parts[i] > self.parts[i + 1] for i in range(len(self.parts) - 1))


class SkewShape:
    """Skew shape outer/inner; the inner partition must fit inside the outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition = Partition()):
        if not outer.contains(inner):
            raise TableauError(f"inner {inner} not contained in outer {outer}")
        self.outer = outer
        self.inner = inner

    def cells(self) -> list[tuple[int, int]]:
        """Row-major cell enumeration, rows top to bottom."""
        out = []
        for r in range(self.outer.length()):
            for c in range(self.inner[r], self.outer[r]):
                out.append((r, c))
        return out

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def __contains__(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        return 0 <= r and self.inner[r] <= c < self.outer[r]

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewShape):
            return self.outer == other.outer and self.inner == other.inner
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({list(self.outer.parts)}/{list(self.inner.parts)})"

    def inner_corners(self) -> list[tuple[int, int]]:
        """Cells of the inner shape whose right and lower neighbours are outside it."""
        out = []
        for r in range(self.inner.length()):
            c = self.inner[r] - 1
            if c >= 0 and self.inner[r + 1] <= c:
                out.append((r, c))
        return out

    def outer_corners(self) -> list[tuple[int, int]]:
        """Cells of the outer shape whose right and lower neighbours are outside it."""
        out = []
        for r in range(self.outer.length()):
            c = self.outer[r] - 1
            if c >= 0 and self.outer[r + 1] <= c and c >= self.inner[r]:
                out.append((r, c))
        return out


# ---------------------------------------------------------------------------
# entries

_NUMERIC_CACHE: dict[tuple[int, bool], "Entry"] = {}
_MARK_CACHE: dict[int, "Entry"] = {}


@dataclass(frozen=True)
class Entry:
    """A tableau entry: numeric (possibly primed), a moving mark x_i, or a
    numeric carrying a tracking subscript (rendered e.g. ``3_2``)."""

    value: int | None = None
    primed: bool = False
    mark: int | None = None
    sub: int | None = None

    @staticmethod
    def of(value: int, primed: bool = False) -> "Entry":
        e = _NUMERIC_CACHE.get((value, primed))
        if e is None:
            e = Entry(value=value, primed=primed)
            _NUMERIC_CACHE[(value, primed)] = e
        return e

    @staticmethod
    def marked(index: int) -> "Entry":
        e = _MARK_CACHE.get(index)
        if e is None:
            e = Entry(mark=index)
            _MARK_CACHE[index] = e
        return e

    @staticmethod
    def tracked(value: int, sub: int, primed: bool = False) -> "Entry":
        return Entry(value=value, primed=primed, sub=sub)

    def is_mark(self) -> bool:
        return self.mark is not None

    def is_numeric(self) -> bool:
        return self.mark is None and self.value is not None

    def key(self) -> tuple[int, int]:
        """Total order key; primed i sorts just below unprimed i."""
        if self.is_mark():
            raise TableauError("mark has no numeric order")
        return (self.value, 0 if self.primed else 1)

    def token(self) -> str:
        if self.is_mark():
            return f"x{self.mark}"
        t = str(self.value) + ("'" if self.primed else "")
        if self.sub is not None:
            t = f"{self.value}_{self.sub}" + ("'" if self.primed else "")
        return t

    def __repr__(self) -> str:
        return f"Entry[{self.token()}]"


def parse_token(tok: str) -> Entry | None:
    """Parse one grid token; returns None for the absent-cell token ``.``."""
    if tok == ".":
        return None
    if tok.startswith("x"):
        try:
            return Entry.marked(int(tok[1:]))
        except ValueError:
            raise ParseError(f"bad mark token {tok!r}")
    primed = tok.endswith("'")
    if primed:
        tok = tok[:-1]
    if "_" in tok:
        v, s = tok.split("_", 1)
        try:
            return Entry.tracked(int(v), int(s), primed)
        except ValueError:
            raise ParseError(f"bad tracked token {tok!r}")
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"bad token {tok!r}")
    if v <= 0:
        raise ParseError(f"entry values must be positive: {tok!r}")
    return Entry.of(v, primed)


# ---------------------------------------------------------------------------
# words


class Word:
    """A finite sequence of entries."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Entry | int | str] = ()):
        out = []
        for x in letters:
            if isinstance(x, Entry):
                out.append(x)
            elif isinstance(x, int):
                out.append(Entry.of(x))
            elif isinstance(x, str):
                e = parse_token(x)
                if e is None:
                    raise ParseError("'.' is not a letter")
                out.append(e)
            else:
                raise TypeError(f"bad letter {x!r}")
        self.letters = tuple(out)

    @staticmethod
    def from_string(s: str) -> "Word":
        """Parse e.g. ``"12'1'121'"`` or whitespace-separated tokens."""
        if any(ch.isspace() for ch in s.strip()):
            return Word(s.split())
        out = []
        i = 0
        while i < len(s):
            j = i + 1
            while j < len(s) and s[j] in "'_0123456789" and (s[j] != "x"):
                if s[j].isdigit() and s[j - 1] not in "_x" and s[i].isdigit() and "_" not in s[i:j]:
                    break
                j += 1
            out.append(s[i:j])
            i = j
        return Word(out)

    def values(self) -> list[int]:
        return [e.value for e in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return "Word(" + " ".join(e.token() for e in self.letters) + ")"

    def token_string(self) -> str:
        return " ".join(e.token() for e in self.letters)


def standardize(w: Word) -> Word:
    """Relabel the letters bijectively by 1..n, least to greatest.

    Ties among equal unprimed values break left to right, among equal primed
    values right to left; a primed value i' sorts between i-1 and i.
    """
    for e in w:
        if e.is_mark():
            raise TableauError("cannot standardize a word containing marks")
    idx = sorted(
        range(len(w)),
        key=lambda p: (w[p].value, 0 if w[p].primed else 1, -p if w[p].primed else p),
    )
    out = [None] * len(w)
    for rank, p in enumerate(idx, start=1):
        out[p] = Entry.of(rank)
    return Word(out)


def is_ballot(w: Word) -> bool:
    """Every prefix has at least as many i's as (i+1)'s, for every i."""
    counts: dict[int, int] = {}
    for e in w:
        v = e.value
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts.get(v - 1, 0) < counts[v]:
            return False
    return True


def is_reverse_ballot(w: Word) -> bool:
    """Every suffix has at least as many i's as (i+1)'s, for every i."""
    counts: dict[int, int] = {}
    for e in reversed(w.letters):
        v = e.value
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts.get(v - 1, 0) < counts[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# skew tableaux


class SkewTableau:
    """A filling of a skew shape; every shape cell holds exactly one entry."""

    __slots__ = ("shape", "cells")

    def __init__(self, shape: SkewShape, cells: dict[tuple[int, int], Entry]):
        for cell in cells:
            if cell not in shape:
                raise TableauError(f"cell {cell} outside shape {shape}")
        for cell in shape.cells():
            if cell not in cells:
                raise TableauError(f"shape cell {cell} unfilled")
        self.shape = shape
        self.cells = dict(cells)

    # -- construction helpers

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Entry | int | str | None]]) -> "SkewTableau":
        """Build from row lists; None or ``"."`` marks an absent (inner) cell."""
        cells: dict[tuple[int, int], Entry] = {}
        outer, inner = [], []
        for r, row in enumerate(rows):
            filled = []
            for c, x in enumerate(row):
                if x is None or x == ".":
                    continue
                e = x if isinstance(x, Entry) else parse_token(str(x))
                cells[(r, c)] = e
                filled.append(c)
            if filled:
                if filled != list(range(filled[0], filled[-1] + 1)):
                    raise ParseError(f"row {r} not contiguous")
                inner.append(filled[0])
                outer.append(filled[-1] + 1)
            else:
                inner.append(len(row))
                outer.append(len(row))
        while outer and outer[-1] == inner[-1]:
            outer.pop()
            inner.pop()
        # an all-empty row between filled rows must sit at the inner boundary
        for r in range(len(outer)):
            if outer[r] == inner[r]:
                outer[r] = inner[r] = outer[r + 1] if r + 1 < len(outer) else 0
        try:
            shape = SkewShape(Partition(outer), Partition(inner))
        except TableauError as exc:
            raise ParseError(f"rows do not form a skew shape: {exc}")
        keep = {c: e for c, e in cells.items() if c in shape}
        return SkewTableau(shape, keep)

    @staticmethod
    def empty() -> "SkewTableau":
        return SkewTableau(SkewShape(Partition()), {})

    # -- basic accessors

    def size(self) -> int:
        return len(self.cells)

    def entry(self, cell: tuple[int, int]) -> Entry:
        return self.cells[cell]

    def reading_cells(self) -> list[tuple[int, int]]:
        """Cells in reading order: rows bottom to top, left to right."""
        return sorted(self.cells, key=lambda rc: (-rc[0], rc[1]))

    def rows(self) -> list[list[Entry | None]]:
        out = []
        for r in range(self.shape.outer.length()):
            row: list[Entry | None] = []
            for c in range(self.shape.outer[r]):
                row.append(self.cells.get((r, c)))
            out.append(row)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewTableau):
            return self.shape == other.shape and self.cells == other.cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.shape, tuple(sorted(self.cells.items(), key=lambda kv: kv[0]))))

    def __repr__(self) -> str:
        return "SkewTableau:\n" + self.to_grid()

    # -- serialization

    def to_grid(self) -> str:
        lines = []
        for r in range(self.shape.outer.length()):
            toks = []
            for c in range(self.shape.outer[r]):
                e = self.cells.get((r, c))
                toks.append("." if e is None else e.token())
            lines.append(" ".join(toks))
        return "\n".join(lines)

    @staticmethod
    def from_grid(text: str) -> "SkewTableau":
        rows = [line.split() for line in text.splitlines() if line.strip()]
        return SkewTableau.from_rows(rows)

    def to_json_obj(self) -> dict:
        rows = []
        for row in self.rows():
            out_row = []
            for e in row:
                if e is None:
                    out_row.append(None)
                elif e.is_numeric() and not e.primed and e.sub is None:
                    out_row.append(e.value)
                else:
                    out_row.append(e.token())
            rows.append(out_row)
        return {"rows": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @staticmethod
    def from_json_obj(obj: dict) -> "SkewTableau":
        return SkewTableau.from_rows(obj["rows"])

    @staticmethod
    def from_json(text: str) -> "SkewTableau":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc))
        return SkewTableau.from_json_obj(obj)

    # -- predicates

    def all_numeric(self) -> bool:
        return all(e.is_numeric() for e in self.cells.values())

    def is_semistandard(self) -> bool:
        """Rows weakly increase, columns strictly increase (numeric unprimed)."""
        if not self.all_numeric() or any(e.primed for e in self.cells.values()):
            return False
        for (r, c), e in self.cells.items():
            right = self.cells.get((r, c + 1))
            if right is not None and right.value < e.value:
                return False
            below = self.cells.get((r + 1, c))
            if below is not None and below.value <= e.value:
                return False
        return True

    def is_standard(self) -> bool:
        if not self.is_semistandard():
            return False
        vals = sorted(e.value for e in self.cells.values())
        return vals == list(range(1, len(vals) + 1))


def reading_word(t: SkewTableau) -> Word:
    """Row reading word: rows bottom to top, each row left to right."""
    return Word([t.cells[c] for c in t.reading_cells()])


def weight(t: SkewTableau | Word) -> tuple[int, ...]:
    """Weight vector: entry i is the number of occurrences of the value i."""
    letters = t.letters if isinstance(t, Word) else t.cells.values()
    counts: dict[int, int] = {}
    for e in letters:
        if not e.is_numeric():
            raise TableauError("weight undefined for marked entries")
        counts[e.value] = counts.get(e.value, 0) + 1
    if not counts:
        return ()
    n = max(counts)
    return tuple(counts.get(i, 0) for i in range(1, n + 1))


def union(x: SkewTableau, t: SkewTableau) -> SkewTableau:
    """Glue a pair into one tableau, shifting the outer part's values up."""
    if x.size() == 0:
        return t
    if not (x.all_numeric() and t.all_numeric()):
        raise TableauError("union requires numeric tableaux")
    if t.shape.inner != x.shape.outer:
        raise TableauError("second tableau does not extend the first")
    n = max(e.value for e in x.cells.values())
    cells = dict(x.cells)
    for cell, e in t.cells.items():
        cells[cell] = Entry.of(e.value + n, e.primed)
    return SkewTableau(SkewShape(t.shape.outer, x.shape.inner), cells)


def split_union(u: SkewTableau, n: int, inner_shape: Partition) -> tuple[SkewTableau, SkewTableau]:
    """Inverse of union: entries <= n form the inner part, the rest shift down by n."""
    lo, hi = {}, {}
    for cell, e in u.cells.items():
        if e.value <= n:
            lo[cell] = e
        else:
            hi[cell] = Entry.of(e.value - n, e.primed)
    lo_outer = _outer_of(lo, u.shape.inner)
    inner_t = SkewTableau(SkewShape(lo_outer, u.shape.inner), lo)
    outer_t = SkewTableau(SkewShape(u.shape.outer, lo_outer), hi)
    return inner_t, outer_t


def _outer_of(cells: dict, inner: Partition) -> Partition:
    rows: dict[int, int] = {}
    for (r, c) in cells:
        rows[r] = max(rows.get(r, -1), c)
    length = max(list(rows) + [inner.length() - 1], default=-1) + 1
    parts = []
    for r in range(length):
        parts.append(rows[r] + 1 if r in rows else inner[r])
    return Partition(parts)


def is_littlewood_richardson(t: SkewTableau) -> bool:
    """Semistandard with reverse-ballot reading word."""
    return t.is_semistandard() and is_reverse_ballot(reading_word(t))


def highest_weight_tableau(lam: Partition) -> SkewTableau:
    """Straight-shape tableau with row i filled entirely with i."""
    cells = {}
    for r, width in enumerate(lam):
        for c in range(width):
            cells[(r, c)] = Entry.of(r + 1)
    return SkewTableau(SkewShape(lam), cells)


# ---------------------------------------------------------------------------
# small enumeration helpers (shared by tests, the verify sweep and the bench)


@lru_cache(maxsize=None)
def partitions_in_box(rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    """All partitions with at most `rows` parts, each at most `cols`."""
    out = [()]
    def rec(prefix: tuple[int, ...], mx: int):
        if len(prefix) == rows:
            return
        for p in range(1, mx + 1):
            nxt = prefix + (p,)
            out.append(nxt)
            rec(nxt, p)
    rec((), cols)
    return tuple(sorted(out))


def standard_tableaux(shape: SkewShape) -> list[SkewTableau]:
    """All standard fillings of a skew shape."""
    cells = shape.cells()
    n = len(cells)
    if n == 0:
        return [SkewTableau(shape, {})]
    out: list[SkewTableau] = []
    filling: dict[tuple[int, int], Entry] = {}

    def ok(cell, v):
        r, c = cell
        left = filling.get((r, c - 1))
        up = filling.get((r - 1, c))
        if (r, c - 1) in shape and (left is None or left.value > v):
            return False
        if (r - 1, c) in shape and (up is None or up.value > v):
            return False
        return True

    def rec(v):
        if v > n:
            out.append(SkewTableau(shape, dict(filling)))
            return
        for cell in cells:
            if cell not in filling and ok(cell, v):
                filling[cell] = Entry.of(v)
                rec(v + 1)
                del filling[cell]

    rec(1)
    return out


def semistandard_tableaux(shape: SkewShape, max_entry: int) -> list[SkewTableau]:
    """All semistandard fillings with entries at most max_entry."""
    cells = shape.cells()
    out: list[SkewTableau] = []
    filling: dict[tuple[int, int], Entry] = {}

    def rec(i):
        if i == len(cells):
            out.append(SkewTableau(shape, dict(filling)))
            return
        r, c = cells[i]
        lo = 1
        left = filling.get((r, c - 1))
        if left is not None:
            lo = max(lo, left.value)
        up = filling.get((r - 1, c))
        if up is not None:
            lo = max(lo, up.value + 1)
        for v in range(lo, max_entry + 1):
            filling[(r, c)] = Entry.of(v)
            rec(i + 1)
        filling.pop((r, c), None)

    rec(0)
    return out


def littlewood_richardson_tableaux(shape: SkewShape) -> list[SkewTableau]:
    """All Littlewood-Richardson fillings of a skew shape."""
    bound = min(shape.size(), shape.outer.length()) or 1
    return [t for t in semistandard_tableaux(shape, bound) if is_reverse_ballot(reading_word(t))]
