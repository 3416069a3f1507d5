"""Exhaustive generation of small semigroups, canonical forms, and corpus files.

Tables are generated by filling cells in row-major order and pruning as
soon as a fully determined associativity triple fails, which keeps the
search far below the n^(n^2) raw table space.  Canonical forms at these
orders are found by direct minimization over all relabelings (and
optionally the transpose), at most 2 * n! candidates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Iterator

from .semigroups import Semigroup, TableError

__all__ = [
    "MODES",
    "SOFT_ORDER_LIMIT",
    "CanonicalForm",
    "enumerate_tables",
    "canonicalize",
    "CorpusError",
    "CorpusWarning",
    "parse_corpus",
    "read_corpus",
    "format_table",
]

MODES = ("raw", "up_to_iso", "up_to_iso_and_anti")
SOFT_ORDER_LIMIT = 5  # table counts explode beyond this


@dataclass(frozen=True)
class CanonicalForm:
    """Lexicographically least relabeling of a table under the given mode."""

    table: tuple[tuple[int, ...], ...]
    mode: str


def _relabel(table, perm):
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        px = perm[x]
        row = table[x]
        for y in range(n):
            out[px][perm[y]] = perm[row[y]]
    return tuple(tuple(r) for r in out)


def _transpose(table):
    return tuple(tuple(col) for col in zip(*table))


def canonical_table(table, mode: str):
    table = tuple(tuple(r) for r in table)
    if mode == "raw":
        return table
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    candidates = [table]
    if mode == "up_to_iso_and_anti":
        candidates.append(_transpose(table))
    best = None
    for cand in candidates:
        for perm in permutations(range(len(table))):
            relabeled = _relabel(cand, perm)
            if best is None or relabeled < best:
                best = relabeled
    return best


def canonicalize(S: Semigroup, mode: str) -> CanonicalForm:
    return CanonicalForm(canonical_table(S.table, mode), mode)


def _assoc_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All associative n x n tables, in lexicographic order of the flat table."""
    size = n * n
    flat = [-1] * size

    def triple_holds(x, y, z):
        xy = flat[x * n + y]
        if xy < 0:
            return True
        yz = flat[y * n + z]
        if yz < 0:
            return True
        left = flat[xy * n + z]
        if left < 0:
            return True
        right = flat[x * n + yz]
        return right < 0 or left == right

    def consistent(a, b):
        # only triples that involve the just-filled cell (a, b) can fail now
        for z in range(n):
            if not triple_holds(a, b, z):
                return False
        for x in range(n):
            if not triple_holds(x, a, b):
                return False
        for x in range(n):
            row = x * n
            for y in range(n):
                if flat[row + y] == a and not triple_holds(x, y, b):
                    return False
        for y in range(n):
            row = y * n
            for z in range(n):
                if flat[row + z] == b and not triple_holds(a, y, z):
                    return False
        return True

    def search(pos):
        if pos == size:
            yield tuple(tuple(flat[r * n : (r + 1) * n]) for r in range(n))
            return
        a, b = divmod(pos, n)
        for v in range(n):
            flat[pos] = v
            if consistent(a, b):
                yield from search(pos + 1)
        flat[pos] = -1

    yield from search(0)


def enumerate_tables(order: int, mode: str = "raw", allow_large: bool = False) -> Iterator[Semigroup]:
    """Yield every semigroup of the given order, optionally one per class.

    ``up_to_iso`` keeps only tables equal to their own canonical form, so
    the stream contains exactly one representative per isomorphism class;
    ``up_to_iso_and_anti`` also folds transposed tables together.  Output
    order is deterministic (lexicographic over the raw stream).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if order > SOFT_ORDER_LIMIT and not allow_large:
        raise ValueError(
            f"order {order} exceeds the soft limit {SOFT_ORDER_LIMIT}; pass allow_large to proceed"
        )

    def generate():
        for table in _assoc_tables(order):
            if mode != "raw" and canonical_table(table, mode) != table:
                continue
            yield Semigroup(table)

    return generate()


class CorpusError(ValueError):
    """A corpus file entry that cannot be turned into a semigroup."""

    def __init__(self, message: str, line: int | None = None, table_index: int | None = None):
        super().__init__(message)
        self.line = line
        self.table_index = table_index


class CorpusWarning(UserWarning):
    pass


def _blocks(text: str):
    """Blank-line separated chunks as (first line number, [(lineno, line), ...])."""
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            block.append((lineno, raw))
        elif block:
            yield block
            block = []
    if block:
        yield block


def _parse_block(block, table_index: int):
    lineno, header = block[0]
    parts = header.split()
    if len(parts) != 1 or not parts[0].isdigit():
        raise CorpusError(
            f"line {lineno}: expected the table order on its own line, found {header.strip()!r}",
            line=lineno,
            table_index=table_index,
        )
    n = int(parts[0])
    if len(block) - 1 != n:
        raise CorpusError(
            f"line {lineno}: table of order {n} needs {n} rows, found {len(block) - 1}",
            line=lineno,
            table_index=table_index,
        )
    rows = []
    for row_line, raw in block[1:]:
        entries = raw.split()
        if len(entries) != n or not all(e.lstrip("-").isdigit() for e in entries):
            raise CorpusError(
                f"line {row_line}: expected {n} integers, found {raw.strip()!r}",
                line=row_line,
                table_index=table_index,
            )
        rows.append([int(e) for e in entries])
    return lineno, rows


def parse_corpus(text: str, strict: bool = True) -> Iterator[Semigroup]:
    """Validated semigroups from blank-line separated table blocks.

    In strict mode the first bad table raises :class:`CorpusError`; in
    non-strict mode bad tables are reported as :class:`CorpusWarning` and
    skipped.
    """
    for table_index, block in enumerate(_blocks(text)):
        try:
            lineno, rows = _parse_block(block, table_index)
            try:
                yield Semigroup(rows)
            except TableError as e:
                raise CorpusError(
                    f"table {table_index} (line {lineno}): {e}",
                    line=lineno,
                    table_index=table_index,
                ) from e
        except CorpusError as err:
            if strict:
                raise
            warnings.warn(str(err), CorpusWarning, stacklevel=2)


def read_corpus(path, strict: bool = True) -> Iterator[Semigroup]:
    yield from parse_corpus(Path(path).read_text(), strict=strict)


def format_table(S: Semigroup) -> str:
    """Render one table in the corpus text format (order line, then rows)."""
    lines = [str(S.order)]
    lines.extend(" ".join(str(v) for v in row) for row in S.table)
    return "\n".join(lines)
