"""Exact evaluation of the path-function on compositions.

The path-function maps a composition ``(a_1, ..., a_s)`` to the sum of its
values over the ``s`` children obtained by decrementing one entry (with zero
entries reduced away), and equals 1 on a single block.  Its values count
oriented Hamiltonian paths per type in transitive tournaments and outgrow
64-bit range quickly, so everything here is exact Python integers.

Evaluation walks an explicit stack instead of recursing, so the composition
total never threatens the interpreter stack, and results are memoized under
the key ``min(c, reversed(c))``: the function is invariant under reversal,
so one stored entry answers both orientations.
"""

from collections.abc import Iterator
from math import comb
from pathlib import Path

from .errors import CacheFormatError, CacheIoError, ParseError, UndefinedType
from .types import derive_children, format_entries, parse_composition

__all__ = ["MemoTable", "f_value", "f_two_block", "memo_save", "memo_load"]


class MemoTable:
    """Reversal-sharing memo for path-function values.

    ``hits``/``misses`` count lookups served from, respectively added to,
    the table; they are diagnostics only.  A table may be shared freely:
    stores are idempotent (any writer inserts the same value for a key), so
    concurrent evaluation returns the same results as a single thread.
    """

    __slots__ = ("entries", "hits", "misses")

    def __init__(self) -> None:
        self.entries: dict[tuple[int, ...], int] = {}
        self.hits = 0
        self.misses = 0

    @staticmethod
    def canonical(c: tuple[int, ...]) -> tuple[int, ...]:
        r = c[::-1]
        return c if c <= r else r

    def lookup(self, c: tuple[int, ...]) -> int | None:
        value = self.entries.get(self.canonical(tuple(c)))
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def store(self, c: tuple[int, ...], value: int) -> None:
        self.entries[self.canonical(tuple(c))] = value

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, c: tuple[int, ...]) -> bool:
        return self.canonical(tuple(c)) in self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MemoTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return (
            f"MemoTable({len(self.entries)} entries, "
            f"hits={self.hits}, misses={self.misses})"
        )


def f_value(c, memo: MemoTable | None = None) -> int:
    """Exact path-function value of a composition.

    Pass a shared ``memo`` to reuse work across calls.  The result does not
    depend on evaluation order or on what the memo already contains.
    """
    comp = tuple(c)
    if not comp:
        raise UndefinedType("path-function of the empty tuple is undefined")
    for e in comp:
        if not isinstance(e, int) or e < 1:
            raise UndefinedType(f"not a composition: {comp}")
    if memo is None:
        memo = MemoTable()

    entries = memo.entries
    canonical = MemoTable.canonical
    hits = misses = 0
    stack = [comp]
    while stack:
        cur = stack[-1]
        key = canonical(cur)
        if key in entries:
            hits += 1
            stack.pop()
            continue
        if len(cur) == 1:
            entries[key] = 1
            misses += 1
            stack.pop()
            continue
        children = derive_children(cur)
        todo = [ch for ch in children if canonical(ch) not in entries]
        if todo:
            stack.extend(todo)
        else:
            entries[key] = sum(entries[canonical(ch)] for ch in children)
            misses += 1
            stack.pop()
    memo.hits += hits
    memo.misses += misses
    return entries[canonical(comp)]


def f_two_block(m: int, n: int) -> int:
    """Closed form for two-block values: ``C(m+n, m)``.

    Computed independently of the recurrence (stdlib exact binomial) and
    deliberately never used inside :func:`f_value`, so the identity
    ``f_value((m, n)) == f_two_block(m, n)`` stays a genuine cross-check.
    """
    if m < 1 or n < 1:
        raise ValueError(f"block lengths must be positive, got ({m}, {n})")
    return comb(m + n, m)


def memo_save(memo: MemoTable, destination) -> None:
    """Write a memo table as UTF-8 text, one ``a1,...,as=VALUE`` line per
    entry, sorted by key; ``#`` starts a comment line."""
    path = Path(destination)
    try:
        with path.open("w", encoding="utf-8") as fh:
            fh.write(f"# path-function memo table: {len(memo)} entries\n")
            for key in sorted(memo.entries):
                fh.write(f"{format_entries(key)}={memo.entries[key]}\n")
    except OSError as exc:
        raise CacheIoError(f"cannot write cache file {path}: {exc}") from exc


def memo_load(source) -> MemoTable:
    """Read a memo table written by :func:`memo_save`.

    Keys are canonicalized on the way in, so a hand-edited file may list a
    composition in either orientation.  Malformed lines raise
    :class:`CacheFormatError` with their line number.
    """
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CacheIoError(f"cannot read cache file {path}: {exc}") from exc

    table = MemoTable()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key_text, sep, value_text = line.partition("=")
        if not sep:
            raise CacheFormatError(f"line {lineno}: missing '='", lineno)
        try:
            key = parse_composition(key_text.strip())
        except ParseError as exc:
            raise CacheFormatError(f"line {lineno}: bad key: {exc}", lineno) from exc
        try:
            value = int(value_text.strip())
        except ValueError:
            raise CacheFormatError(
                f"line {lineno}: bad value: {value_text.strip()!r}", lineno
            ) from None
        if value < 1:
            raise CacheFormatError(
                f"line {lineno}: value must be a positive count, got {value}", lineno
            )
        table.store(key, value)
    return table
