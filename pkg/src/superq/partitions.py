"""Strict, odd, and ordinary integer partitions and their shifted-diagram
combinatorics: cells and contents, inner/outer corners, standard-tableau
counts g and g^{lambda/mu}, plus the small number-theoretic helpers
(z_rho, falling factorials, Stirling numbers of the second kind).

Partitions are immutable, hashable, and typed: a ``StrictPartition`` never
compares equal to an ``OddPartition`` with the same parts, so the three
index families cannot be confused as dictionary keys.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, NamedTuple


class Cell(NamedTuple):
    """A box (row, col) of a shifted diagram, 1-based."""

    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


class _Partition:
    """Common behaviour; subclasses pin down the shape invariant."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        self._validate(parts)
        self.parts = parts

    @staticmethod
    def _validate(parts):
        raise NotImplementedError

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        return type(self) is type(other) and self.parts == other.parts

    def __hash__(self):
        return hash((type(self).__name__, self.parts))

    def __repr__(self):
        return f"{type(self).__name__}({self.parts!r})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_text(cls, text: str):
        """Parse comma-separated decreasing parts; "" and "0" mean empty."""
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        try:
            parts = tuple(int(piece) for piece in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition literal {text!r}") from exc
        return cls(parts)


class StrictPartition(_Partition):
    """Strictly decreasing positive parts; indexes shifted diagrams."""

    __slots__ = ()

    @staticmethod
    def _validate(parts):
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] <= p:
                raise ValueError(f"parts must be strictly decreasing, got {parts}")


class OddPartition(_Partition):
    """Weakly decreasing positive odd parts; indexes the power-sum basis."""

    __slots__ = ()

    @staticmethod
    def _validate(parts):
        for i, p in enumerate(parts):
            if p <= 0 or p % 2 == 0:
                raise ValueError(f"parts must be positive odd, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")

    def multiplicity(self, r: int) -> int:
        return self.parts.count(r)


class OrdinaryPartition(_Partition):
    """Weakly decreasing positive parts; indexes ordinary power sums."""

    __slots__ = ()

    @staticmethod
    def _validate(parts):
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")


EMPTY_STRICT = StrictPartition(())
EMPTY_ODD = OddPartition(())


def term_sort_key(partition):
    """Total order on partitions: by size, then decreasing lexicographic."""
    return (partition.size, tuple(-p for p in partition.parts))


def display_sort_key(partition):
    """Rendering order for sums: degree descending, then decreasing lex."""
    return (-partition.size, tuple(-p for p in partition.parts))


# --- enumeration (decreasing lexicographic within each size) ---------------


def _strict_tuples(n, max_part):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _strict_tuples(n - first, first - 1):
            yield (first, *rest)


def _odd_tuples(n, max_part):
    if n == 0:
        yield ()
        return
    start = min(n, max_part)
    if start % 2 == 0:
        start -= 1
    for first in range(start, 0, -2):
        for rest in _odd_tuples(n - first, first):
            yield (first, *rest)


def _ordinary_tuples(n, max_part):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _ordinary_tuples(n - first, first):
            yield (first, *rest)


@cache
def enumerate_strict(n: int) -> tuple[StrictPartition, ...]:
    """All strict partitions of n, decreasing lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(StrictPartition(t) for t in _strict_tuples(n, n))


@cache
def enumerate_odd(n: int) -> tuple[OddPartition, ...]:
    """All odd partitions of n, decreasing lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(OddPartition(t) for t in _odd_tuples(n, n))


@cache
def enumerate_ordinary(n: int) -> tuple[OrdinaryPartition, ...]:
    """All partitions of n, decreasing lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(OrdinaryPartition(t) for t in _ordinary_tuples(n, n))


# --- shifted diagrams -------------------------------------------------------


def shifted_cells(lam: StrictPartition) -> list[Cell]:
    """Cells (i, j) with 1 <= i <= len(lam), i <= j <= lam_i + i - 1."""
    return [
        Cell(i, j)
        for i, part in enumerate(lam.parts, start=1)
        for j in range(i, part + i)
    ]


def contains(lam: StrictPartition, mu: StrictPartition) -> bool:
    """Whether the shifted diagram of mu sits inside that of lam."""
    return _contains(lam.parts, mu.parts)


def _contains(lam_parts, mu_parts):
    if len(mu_parts) > len(lam_parts):
        return False
    return all(m <= l for m, l in zip(mu_parts, lam_parts))


def outer_corners(lam: StrictPartition) -> list[Cell]:
    """Cells whose removal leaves the shifted diagram of a strict partition."""
    p = lam.parts
    out = []
    for i, part in enumerate(p):
        if i == len(p) - 1 or part - 1 > p[i + 1]:
            out.append(Cell(i + 1, part + i))
    return out


def inner_corners(lam: StrictPartition) -> list[Cell]:
    """Cells whose addition yields the shifted diagram of a strict partition."""
    p = lam.parts
    res = []
    for i, part in enumerate(p):
        if i == 0 or p[i - 1] > part + 1:
            res.append(Cell(i + 1, part + i + 1))
    if not p or p[-1] > 1:
        res.append(Cell(len(p) + 1, len(p) + 1))
    return res


def corners(lam: StrictPartition) -> tuple[list[Cell], list[Cell]]:
    """(inner, outer) corner cells of the shifted diagram."""
    return inner_corners(lam), outer_corners(lam)


def remove_cell(lam: StrictPartition, cell: Cell) -> StrictPartition:
    if cell not in outer_corners(lam):
        raise ValueError(f"{cell} is not an outer corner of {lam!r}")
    parts = list(lam.parts)
    parts[cell.row - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return StrictPartition(parts)


def add_cell(lam: StrictPartition, cell: Cell) -> StrictPartition:
    if cell not in inner_corners(lam):
        raise ValueError(f"{cell} is not an inner corner of {lam!r}")
    parts = list(lam.parts)
    if cell.row == len(parts) + 1:
        parts.append(1)
    else:
        parts[cell.row - 1] += 1
    return StrictPartition(parts)


# --- standard shifted tableaux ----------------------------------------------


@cache
def _g_skew(lam_parts: tuple, mu_parts: tuple) -> int:
    if not _contains(lam_parts, mu_parts):
        return 0
    if lam_parts == mu_parts:
        return 1
    lam = StrictPartition(lam_parts)
    total = 0
    for cell in outer_corners(lam):
        smaller = remove_cell(lam, cell).parts
        if _contains(smaller, mu_parts):
            total += _g_skew(smaller, mu_parts)
    return total


def g_skew(lam: StrictPartition, mu: StrictPartition) -> int:
    """Number of standard tableaux of shifted shape lam/mu (0 if mu not in lam)."""
    return _g_skew(lam.parts, mu.parts)


def g(lam: StrictPartition) -> int:
    """Number of standard tableaux of shifted shape lam; g(empty) = 1."""
    return _g_skew(lam.parts, ())


# --- numeric helpers ---------------------------------------------------------


def z(rho: OddPartition) -> int:
    """z_rho = prod_r r^{m_r} m_r!, the centralizer order of the class rho."""
    out = 1
    mult = 1
    for i, part in enumerate(rho.parts):
        if i and rho.parts[i - 1] == part:
            mult += 1
        else:
            mult = 1
        out *= part * mult
    return out


def falling(x, k: int):
    """Falling factorial x(x-1)...(x-k+1); works for any ring element."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out = out * (x - i)
    return out


@cache
def _stirling2_row(k: int) -> tuple[int, ...]:
    # T(k, j) for j = 0..k, with T(0, 0) = 1.
    if k == 0:
        return (1,)
    prev = _stirling2_row(k - 1)
    row = [0] * (k + 1)
    for j in range(1, k + 1):
        row[j] = (j * prev[j] if j < k else 0) + prev[j - 1]
    return tuple(row)


def stirling2(k: int, j: int) -> int:
    """Stirling number of the second kind T(k, j), for 1 <= j <= k."""
    if not (1 <= j <= k):
        raise ValueError(f"stirling2 needs 1 <= j <= k, got k={k}, j={j}")
    return _stirling2_row(k)[j]
