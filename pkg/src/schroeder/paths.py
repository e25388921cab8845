"""
Lattice paths read off permutation diagrams.

Paths start at (0, 0) and use N = (0, 1), E = (1, 0) and D = (1, 1); a
Schröder path of size n ends at (n, n) and never goes below y = x. The
diagram boundary is traced from the top-right corner of the board; a west
move becomes N and a south move becomes E, which puts the origin bottom-left.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import comb

from .diagram import EssentialSet, EssentialSetError, diagram, essential_set, retrieve
from .maps import DomainError, phi
from .perm import Permutation

STEPS = {"N": (0, 1), "E": (1, 0), "D": (1, 1)}


class PathError(ValueError):
    """Malformed step word or a path that is not a Schröder path."""


@dataclass(frozen=True)
class LatticePath:
    steps: str = ""

    def __post_init__(self):
        steps = "".join(self.steps).upper()
        x = y = 0
        for pos, s in enumerate(steps, start=1):
            if s not in STEPS:
                raise PathError(f"step {pos}: unknown step {s!r} (expected N, E or D)")
            dx, dy = STEPS[s]
            x, y = x + dx, y + dy
            if y < x:
                raise PathError(f"step {pos}: path goes below the diagonal at ({x}, {y})")
        object.__setattr__(self, "steps", steps)

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def end(self) -> tuple[int, int]:
        x = y = 0
        for s in self.steps:
            dx, dy = STEPS[s]
            x, y = x + dx, y + dy
        return x, y

    def points(self) -> list[tuple[int, int]]:
        """Starting point of every step."""
        x = y = 0
        result = []
        for s in self.steps:
            result.append((x, y))
            dx, dy = STEPS[s]
            x, y = x + dx, y + dy
        return result

    def size(self) -> int:
        x, y = self.end()
        if x != y:
            raise PathError(f"path ends at {(x, y)}, not on the diagonal")
        return x


def height(x: int, y: int) -> int:
    return y - x


def step_heights(path: LatticePath, kinds: str = "ED") -> list[int]:
    """Heights of the starting points of the steps whose letter is in ``kinds``."""
    return [height(x, y) for (x, y), s in zip(path.points(), path.steps) if s in kinds]


def tau_k(path: LatticePath, k: int) -> int:
    """
    Sum of C(h, k-1) over the start heights h of all E and D steps.

    >>> tau_k(LatticePath("NENNEDENED"), 2)
    6
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    path.size()
    return sum(comb(h, k - 1) for h in step_heights(path))


def _boundary(row_lengths: Sequence[int], m: int) -> tuple[list[str], dict[int, tuple[int, int]]]:
    # W/S trace of a Young diagram in an m x m board, from the top-right corner;
    # maps the index of each S that closes a corner row to that corner
    steps: list[str] = []
    corners = {}
    lengths = list(row_lengths) + [0]
    cur = m
    for r in range(1, m + 1):
        lam = lengths[r - 1]
        steps.extend("W" * (cur - lam))
        cur = lam
        steps.append("S")
        if lam > lengths[r]:
            corners[len(steps) - 1] = (r, lam)
    return steps, corners


_TO_PATH = {"W": "N", "S": "E"}


def psi_k(s: Sequence[int]) -> LatticePath:
    """
    D-free path of a 132-avoider: the boundary of its diagram in the n x n board.

    >>> str(psi_k((1, 2, 3)))
    'NNNEEE'
    """
    if essential_set(s).max_rank() > 0:
        raise DomainError(f"{tuple(s)} contains 132")
    steps, _ = _boundary(diagram(s).row_lengths(), len(s))
    return LatticePath("".join(_TO_PATH[c] for c in steps))


def psi_em(p: Sequence[int]) -> LatticePath:
    """
    Schröder path of size n for a Schröder permutation of size n + 1.

    The boundary of the diagram of phi(p) is traced in the (n+1)-board, the
    leading west and trailing south steps are dropped, and every corner that
    came from a rank-0 corner of p is cut by a D step.

    >>> str(psi_em((4, 7, 5, 2, 6, 3, 1)))
    'NENNEDENED'
    """
    m = len(p)
    if m == 0:
        raise DomainError("the empty permutation has no path")
    E = essential_set(p)
    if E.max_rank() > 1:
        raise DomainError(f"{tuple(p)} is not a Schröder permutation")
    zero = E.with_rank(0)
    one = E.with_rank(1)
    steps, corners = _boundary(diagram(phi(p)).row_lengths(), m)
    assert steps[0] == "W" and steps[-1] == "S"
    out = []
    t = 1
    while t < len(steps) - 1:
        corner = corners.get(t)
        if corner is not None and corner in zero:
            out.append("D")
            t += 2
            continue
        if corner is not None:
            i, j = corner
            assert (i + 1, j + 1) in one
            assert i + j <= m - 1, "lifted corner too close to the diagonal"
        out.append(_TO_PATH[steps[t]])
        t += 1
    return LatticePath("".join(out))


def psi_em_inverse(path: LatticePath | str) -> Permutation:
    """
    The Schröder permutation of size n + 1 whose path is ``path``.

    D steps expand back into rank-0 corners, the remaining valleys are the
    rank-1 corners shifted northwest, and the permutation is retrieved from
    the resulting ranked essential set.
    """
    if isinstance(path, str):
        path = LatticePath(path)
    n = path.size()
    m = n + 1
    steps = ["W"]
    marked = set()
    for s in path.steps:
        if s == "D":
            marked.add(len(steps))
            steps.extend(("S", "W"))
        else:
            steps.append("W" if s == "N" else "S")
    steps.append("S")

    cur, row = m, 1
    entries = []
    for t, c in enumerate(steps):
        if c == "W":
            cur -= 1
            if cur < 0:
                raise PathError("path leaves the board")
            continue
        if t + 1 < len(steps) and steps[t + 1] == "W":
            if t in marked:
                entries.append((row, cur, 0))
            else:
                entries.append((row + 1, cur + 1, 1))
        row += 1
    try:
        return retrieve(EssentialSet(m, tuple(entries)))
    except EssentialSetError as exc:
        raise PathError(f"{path} does not encode a Schröder permutation: {exc}") from None


def schroeder_paths(n: int) -> Iterator[LatticePath]:
    """Every Schröder path of size n."""

    def walk(x: int, y: int, word: str) -> Iterator[str]:
        if x == n and y == n:
            yield word
            return
        if y < n:
            yield from walk(x, y + 1, word + "N")
        if x < y:
            yield from walk(x + 1, y, word + "E")
        if x < n and y < n:
            yield from walk(x + 1, y + 1, word + "D")

    for w in walk(0, 0, ""):
        yield LatticePath(w)


def dyck_paths(n: int) -> Iterator[LatticePath]:
    """Schröder paths of size n without D steps."""
    for path in schroeder_paths(n):
        if "D" not in path.steps:
            yield path


def valleys_above_zero(path: LatticePath) -> int:
    """Number of EN valleys whose bottom point lies strictly above y = x."""
    count = 0
    x = y = 0
    prev = None
    for s in path.steps:
        if prev == "E" and s == "N" and height(x, y) > 0:
            count += 1
        dx, dy = STEPS[s]
        x, y = x + dx, y + dy
        prev = s
    return count


def young_diagrams_in_staircase(n: int) -> Iterator[tuple[int, ...]]:
    """
    Row-length vectors (length n) of Young diagrams inside (n-1, n-2, ..., 1).
    """

    def rows(i: int, bound: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield acc
            return
        for length in range(min(bound, n - i), -1, -1):
            yield from rows(i + 1, length, acc + (length,))

    if n == 0:
        yield ()
        return
    yield from rows(1, n - 1, ())
