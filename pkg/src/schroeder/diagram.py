"""
Permutation diagrams, ranks and ranked essential sets.

Board convention: square ``(i, j)`` is row ``i`` (counted downward) and column
``j`` (counted rightward), both starting at 1. The dot of position ``i`` sits in
``(i, p_i)``. "Northwest of (i, j)" means strictly smaller row and strictly
smaller column.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .perm import Permutation, check_permutation, inverse

Square = tuple[int, int]


class EssentialSetError(ValueError):
    """A ranked set of squares is not the essential set of any permutation."""


class UnsupportedRankError(ValueError):
    """Raised for ranks >= 2 where only ranks 0 and 1 are handled."""


@dataclass(frozen=True)
class Diagram:
    n: int
    squares: frozenset[Square] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "squares", frozenset(self.squares))
        for i, j in self.squares:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"square {(i, j)} lies outside the {self.n}x{self.n} board")

    def __contains__(self, square) -> bool:
        return square in self.squares

    def __len__(self) -> int:
        return len(self.squares)

    def sorted(self) -> list[Square]:
        return sorted(self.squares)

    def transpose(self) -> Diagram:
        return Diagram(self.n, frozenset((j, i) for i, j in self.squares))

    def rows(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.squares)

    def columns(self) -> frozenset[int]:
        return frozenset(j for _, j in self.squares)

    def row_lengths(self) -> tuple[int, ...]:
        """Number of squares in each row 1..n."""
        lengths = [0] * self.n
        for i, _ in self.squares:
            lengths[i - 1] += 1
        return tuple(lengths)


@dataclass(frozen=True)
class EssentialSet:
    """
    Ranked set of squares on an n x n board.

    ``entries`` is kept sorted as ``(row, col, rank)`` triples; each square
    appears at most once.
    """

    n: int
    entries: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        entries = tuple(sorted((int(i), int(j), int(r)) for i, j, r in self.entries))
        squares = [(i, j) for i, j, _ in entries]
        if len(set(squares)) != len(squares):
            raise ValueError("a square appears more than once in the essential set")
        for i, j, r in entries:
            if i < 1 or j < 1 or r < 0:
                raise ValueError(f"bad entry {(i, j, r)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mapping(cls, n: int, ranks: Mapping[Square, int]) -> EssentialSet:
        return cls(n, tuple((i, j, r) for (i, j), r in ranks.items()))

    def as_dict(self) -> dict[Square, int]:
        return {(i, j): r for i, j, r in self.entries}

    def squares(self) -> frozenset[Square]:
        return frozenset((i, j) for i, j, _ in self.entries)

    def with_rank(self, rank: int) -> frozenset[Square]:
        return frozenset((i, j) for i, j, r in self.entries if r == rank)

    def max_rank(self) -> int:
        return max((r for _, _, r in self.entries), default=-1)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.entries)

    def to_text(self) -> str:
        lines = [f"n={self.n}"]
        lines.extend(f"{i} {j} {r}" for i, j, r in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> EssentialSet:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty essential-set text")
        header = re.fullmatch(r"n\s*=\s*(\d+)", lines[0])
        if header is None:
            raise ValueError(f"expected header 'n=<N>', got {lines[0]!r}")
        entries = []
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split()
            if len(parts) != 3 or not all(x.isdigit() for x in parts):
                raise ValueError(f"line {lineno}: expected 'row col rank', got {line!r}")
            entries.append(tuple(int(x) for x in parts))
        return cls(int(header.group(1)), tuple(entries))


def diagram(p: Sequence[int]) -> Diagram:
    """
    Squares ``(i, j)`` with ``p_i > j`` and ``p^{-1}_j > i``.

    >>> diagram((2, 1)).sorted()
    [(1, 1)]
    """
    inv = inverse(p)
    n = len(p)
    return Diagram(n, frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, p[i - 1])
        if inv[j - 1] > i
    ))


def rank(p: Sequence[int], square: Square) -> int:
    """Number of dots strictly northwest of a diagram square."""
    i, j = square
    if square not in diagram(p):
        raise ValueError(f"{square} is not a diagram square of {tuple(p)}")
    return _dots_northwest(p, i, j)


def _dots_northwest(p: Sequence[int], i: int, j: int) -> int:
    return sum(1 for k in range(i - 1) if p[k] < j)


def essential_set(p: Sequence[int]) -> EssentialSet:
    """
    The southeast corners of the diagram's components, each with its rank.

    >>> essential_set((4, 7, 5, 2, 6, 3, 1)).as_dict()
    {(2, 6): 1, (3, 3): 0, (5, 3): 1, (6, 1): 0}
    """
    d = diagram(p).squares
    return EssentialSet(len(p), tuple(
        (i, j, _dots_northwest(p, i, j))
        for i, j in d
        if (i + 1, j) not in d and (i, j + 1) not in d
    ))


def components(p: Sequence[int]) -> list[tuple[int, frozenset[Square]]]:
    """Connected components (4-adjacency) of the diagram, each with its rank."""
    remaining = set(diagram(p).squares)
    result = []
    while remaining:
        start = min(remaining)
        stack = [start]
        remaining.discard(start)
        comp = {start}
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        ranks = {_dots_northwest(p, i, j) for i, j in comp}
        assert len(ranks) == 1, f"component {sorted(comp)} has ranks {ranks}"
        result.append((ranks.pop(), frozenset(comp)))
    return result


def max_rank(p: Sequence[int]) -> int:
    """Largest rank in the essential set, -1 when it is empty."""
    return essential_set(p).max_rank()


def is_schroeder(p: Sequence[int]) -> bool:
    """True iff p avoids 1243 and 2143, decided from the essential-set ranks."""
    return max_rank(p) <= 1


def avoids_Tm_by_rank(p: Sequence[int], m: int) -> bool:
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    return max_rank(p) <= m - 3


def _require_low_ranks(E: EssentialSet) -> None:
    high = [(i, j, r) for i, j, r in E.entries if r > 1]
    if high:
        raise UnsupportedRankError(f"only ranks 0 and 1 are supported, got {high}")


def validate_essential_set(E: EssentialSet) -> bool:
    """
    Decide whether a set ranked in {0, 1} is the essential set of a permutation.

    With the entries ordered by column (ties broken by decreasing row), rows
    must weakly decrease and columns weakly increase, row-minus-rank must
    strictly decrease and stay positive, column-minus-rank must strictly
    increase and stay positive, and ``row + col <= n + rank`` for every entry.
    """
    _require_low_ranks(E)
    entries = sorted(E.entries, key=lambda e: (e[1], -e[0]))
    prev = None
    for i, j, r in entries:
        if i > E.n or j > E.n:
            return False
        if i - r <= 0 or j - r <= 0:
            return False
        if i + j > E.n + r:
            return False
        if prev is not None:
            pi, pj, pr = prev
            if not (pi >= i and pj <= j and pi - pr > i - r and pj - pr < j - r):
                return False
        prev = (i, j, r)
    return True


def permutation_from_diagram(d: Diagram) -> Permutation:
    """
    Rebuild the permutation row by row: each dot goes in the leftmost square
    outside the diagram whose column has no dot yet.
    """
    used = set()
    result = []
    for i in range(1, d.n + 1):
        for j in range(1, d.n + 1):
            if (i, j) not in d.squares and j not in used:
                used.add(j)
                result.append(j)
                break
        else:
            raise ValueError(f"no room for a dot in row {i}; not a permutation diagram")
    p = tuple(result)
    if diagram(p) != d:
        raise ValueError("squares do not form the diagram of any permutation")
    return p


@dataclass(frozen=True)
class RetrievalStages:
    """Intermediate boards of :func:`retrieve`, one field per step."""

    rank0: frozenset[Square]
    minima: dict[int, int]
    diagram: frozenset[Square]
    permutation: Permutation


def retrieval_stages(E: EssentialSet) -> RetrievalStages:
    """
    Recover the permutation with ranked essential set E (ranks 0 and 1 only).

    1. every square weakly northwest of a rank-0 entry is a rank-0 diagram square;
    2. a dot goes in each non-diagram square whose whole northwest quadrant
       (itself excluded) consists of rank-0 squares; these are the
       left-to-right minima, and the square (1, 1) qualifies vacuously;
    3. for each such dot, squares strictly southeast of it and weakly
       northwest of a rank-1 entry become rank-1 diagram squares;
    4. remaining rows get a dot in the leftmost non-diagram square of a free
       column.
    """
    if not validate_essential_set(E):
        raise EssentialSetError(f"not a valid essential set: {E.to_text()!r}")
    n = E.n
    zero = E.with_rank(0)
    one = E.with_rank(1)

    white: set[Square] = set()
    for a, b in zero:
        white.update((i, j) for i in range(1, a + 1) for j in range(1, b + 1))
    rank0 = frozenset(white)

    dots: dict[int, int] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i, j) in rank0:
                continue
            if all((a, b) in rank0 for a in range(1, i + 1) for b in range(1, j + 1) if (a, b) != (i, j)):
                dots[i] = j
    minima = dict(dots)

    for di, dj in minima.items():
        for a, b in one:
            white.update((i, j) for i in range(di + 1, a + 1) for j in range(dj + 1, b + 1))

    used = set(dots.values())
    for i in range(1, n + 1):
        if i in dots:
            continue
        for j in range(1, n + 1):
            if (i, j) not in white and j not in used:
                dots[i] = j
                used.add(j)
                break
        else:
            raise EssentialSetError(f"dot placement failed in row {i}")

    p = check_permutation([dots[i] for i in range(1, n + 1)])
    if essential_set(p) != E:
        raise EssentialSetError("retrieved permutation does not reproduce the essential set")
    return RetrievalStages(rank0, minima, frozenset(white), p)


def retrieve(E: EssentialSet) -> Permutation:
    """
    The permutation whose ranked essential set is E; see :func:`retrieval_stages`.

    >>> retrieve(EssentialSet(7, ((3, 3, 0), (6, 1, 0), (2, 6, 1), (5, 3, 1))))
    (4, 7, 5, 2, 6, 3, 1)
    """
    return retrieval_stages(E).permutation


def render_board(p: Sequence[int], dot: str = "●", shaded: str = "·") -> str:
    """ASCII board: dots, diagram squares as their rank digit, other squares shaded."""
    n = len(p)
    d = diagram(p).squares
    rows = []
    for i in range(1, n + 1):
        cells = []
        for j in range(1, n + 1):
            if p[i - 1] == j:
                cells.append(dot)
            elif (i, j) in d:
                r = _dots_northwest(p, i, j)
                cells.append(str(r) if r < 10 else "+")
            else:
                cells.append(shaded)
        rows.append("".join(cells))
    return "\n".join(rows)


def young_corners(row_lengths: Iterable[int]) -> list[Square]:
    """Corners (row, col) of a Young diagram given by weakly decreasing row lengths."""
    lengths = list(row_lengths) + [0]
    return [(i, lengths[i - 1]) for i in range(1, len(lengths))
            if lengths[i - 1] > lengths[i]]
