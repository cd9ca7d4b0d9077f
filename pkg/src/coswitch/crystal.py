"""Crystal raising and lowering operators on words and skew tableaux, and
the highest/lowest weight normal forms they compute.

Letters are plain integers; the operators also work over the extended
alphabet containing zero and negative letters used by the local algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Entry,
    SkewTableau,
    TableauError,
    Word,
    is_littlewood_richardson,
    reading_word,
)


@dataclass(frozen=True)
class ParenMatching:
    """The bracket matching of the (i, i+1)-subword: each i+1 opens, each i
    closes; an open bracket pairs with the nearest unpaired close to its
    right."""

    index: int
    matched: tuple[tuple[int, int], ...]  # (open position, close position)
    unmatched_open: tuple[int, ...]
    unmatched_close: tuple[int, ...]


def _values(w: Word) -> list[int]:
    for e in w:
        if not e.is_numeric() or e.primed:
            raise TableauError("crystal operators need numeric unprimed letters")
    return [e.value for e in w]


def paren_matching(w: Word, i: int) -> ParenMatching:
    vals = _values(w)
    opens: list[int] = []
    matched: list[tuple[int, int]] = []
    unmatched_close: list[int] = []
    for p, v in enumerate(vals):
        if v == i + 1:
            opens.append(p)
        elif v == i:
            if opens:
                matched.append((opens.pop(), p))
            else:
                unmatched_close.append(p)
    return ParenMatching(i, tuple(matched), tuple(opens), tuple(unmatched_close))


def _raise_position(vals: list[int], i: int) -> int | None:
    opens: list[int] = []
    for p, v in enumerate(vals):
        if v == i + 1:
            opens.append(p)
        elif v == i and opens:
            opens.pop()
    return opens[0] if opens else None


def _lower_position(vals: list[int], i: int) -> int | None:
    opens = 0
    last = None
    for p, v in enumerate(vals):
        if v == i + 1:
            opens += 1
        elif v == i:
            if opens:
                opens -= 1
            else:
                last = p
    return last


def crystal_raise(w: Word | SkewTableau, i: int):
    """E_i: flip the first unmatched i+1 to i; None when undefined."""
    if isinstance(w, SkewTableau):
        return _apply_to_tableau(w, i, raise_=True)
    vals = _values(w)
    p = _raise_position(vals, i)
    if p is None:
        return None
    letters = list(w.letters)
    letters[p] = Entry.of(i)
    return Word(letters)


def crystal_lower(w: Word | SkewTableau, i: int):
    """F_i: flip the last unmatched i to i+1; None when undefined."""
    if isinstance(w, SkewTableau):
        return _apply_to_tableau(w, i, raise_=False)
    vals = _values(w)
    p = _lower_position(vals, i)
    if p is None:
        return None
    letters = list(w.letters)
    letters[p] = Entry.of(i + 1)
    return Word(letters)


def _apply_to_tableau(t: SkewTableau, i: int, raise_: bool):
    cells = t.reading_cells()
    w = reading_word(t)
    vals = _values(w)
    p = _raise_position(vals, i) if raise_ else _lower_position(vals, i)
    if p is None:
        return None
    new_cells = dict(t.cells)
    new_cells[cells[p]] = Entry.of(i if raise_ else i + 1)
    return SkewTableau(t.shape, new_cells)


def to_highest_weight(t: SkewTableau) -> tuple[SkewTableau, list[int]]:
    """Apply raising operators until none applies; returns the result and the
    log of indices used.  The result is the Littlewood-Richardson
    representative of t's dual equivalence class."""
    cur = t
    log: list[int] = []
    changed = True
    while changed:
        changed = False
        top = max((e.value for e in cur.cells.values()), default=0)
        for i in range(1, top):
            nxt = crystal_raise(cur, i)
            if nxt is not None:
                cur = nxt
                log.append(i)
                changed = True
                break
    return cur, log


def to_lowest_weight(t: SkewTableau) -> tuple[SkewTableau, list[int]]:
    """Apply lowering operators until none applies, then shift the entries
    down so the smallest value is 1."""
    cur = t
    log: list[int] = []
    if cur.size() == 0:
        return cur, log
    n = max(e.value for e in cur.cells.values())
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            nxt = crystal_lower(cur, i)
            if nxt is not None:
                cur = nxt
                log.append(i)
                changed = True
                break
    shift = min(e.value for e in cur.cells.values()) - 1
    if shift:
        cells = {c: Entry.of(e.value - shift) for c, e in cur.cells.items()}
        cur = SkewTableau(cur.shape, cells)
    return cur, log


def f_defined(t: SkewTableau, i: int) -> bool:
    """For a Littlewood-Richardson tableau, F_i is defined exactly when the
    (i, i+1)-subword has strictly more i's than (i+1)'s."""
    if not is_littlewood_richardson(t):
        raise TableauError("criterion only applies to Littlewood-Richardson tableaux")
    ci = sum(1 for e in t.cells.values() if e.value == i)
    cj = sum(1 for e in t.cells.values() if e.value == i + 1)
    return ci > cj
