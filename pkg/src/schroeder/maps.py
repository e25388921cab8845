"""
The maps phi and omega on Schröder permutations (avoiders of 1243 and 2143),
the phi fibers, and diagram-level tests for additional forbidden patterns.

All of these work on ranked essential sets and go back to permutations
through :func:`schroeder.diagram.retrieve`.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from itertools import combinations

from .diagram import (
    EssentialSet,
    Square,
    diagram,
    essential_set,
    is_schroeder,
    retrieve,
    young_corners,
)
from .perm import (
    Permutation,
    contains_pattern,
    descent_set,
    increasing,
    pattern_213k,
)


class DomainError(ValueError):
    """A map was called on a permutation outside its domain."""


def _require_schroeder(p: Sequence[int]) -> None:
    if not is_schroeder(p):
        raise DomainError(f"{tuple(p)} is not a Schröder permutation (contains 1243 or 2143)")


def _require_132_avoiding(s: Sequence[int]) -> EssentialSet:
    E = essential_set(s)
    if E.max_rank() > 0:
        raise DomainError(f"{tuple(s)} contains 132")
    return E


def shifted_essential_set(p: Sequence[int]) -> EssentialSet:
    """Every rank-1 entry (i, j) moved to (i-1, j-1) and given rank 0."""
    E = essential_set(p)
    return EssentialSet(E.n, tuple(
        (i - 1, j - 1, 0) if r == 1 else (i, j, r) for i, j, r in E.entries
    ))


def phi(p: Sequence[int]) -> Permutation:
    """
    The 132-avoiding permutation whose essential set is p's with all rank-1
    corners shifted one step northwest.

    >>> phi((4, 7, 5, 2, 6, 3, 1))
    (6, 4, 5, 3, 2, 7, 1)
    """
    _require_schroeder(p)
    return retrieve(shifted_essential_set(p))


def one_step(p: Sequence[int], corner: Square) -> Permutation:
    """Shift a single rank-1 corner one step northwest and retrieve."""
    _require_schroeder(p)
    E = essential_set(p).as_dict()
    if E.get(corner) != 1:
        raise DomainError(f"{corner} is not a rank-1 essential square of {tuple(p)}")
    del E[corner]
    E[(corner[0] - 1, corner[1] - 1)] = 0
    return retrieve(EssentialSet.from_mapping(len(p), E))


def liftable_corners(s: Sequence[int]) -> list[Square]:
    """Corners (i, j) of a 132-avoider's diagram with i + j < n."""
    E = _require_132_avoiding(s)
    return sorted((i, j) for i, j, _ in E.entries if i + j < E.n)


def phi_fibers(s: Sequence[int]) -> list[Permutation]:
    """
    All Schröder permutations mapped to the 132-avoider s by phi.

    Every subset of the liftable corners is moved one step southeast with
    rank 1; there are 2**len(liftable_corners(s)) results.
    """
    E = _require_132_avoiding(s)
    lift = liftable_corners(s)
    base = E.as_dict()
    result = []
    for size in range(len(lift) + 1):
        for chosen in combinations(lift, size):
            ranks = dict(base)
            for i, j in chosen:
                del ranks[(i, j)]
                ranks[(i + 1, j + 1)] = 1
            result.append(retrieve(EssentialSet.from_mapping(E.n, ranks)))
    return result


def staircase(n: int, k: int) -> tuple[int, ...]:
    """Row lengths (n+1-k, n-k, ..., 1) padded with zeros to n rows."""
    return tuple(max(n + 2 - k - i, 0) for i in range(1, n + 1))


def _contains_shape(d_rows: Sequence[int], shape: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(d_rows, shape))


def avoids_increasing(p: Sequence[int], k: int) -> bool:
    """
    p avoids 12...k iff the diagram of phi(p) contains the staircase
    (n+1-k, ..., 1).
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    _require_schroeder(p)
    n = len(p)
    return _contains_shape(diagram(phi(p)).row_lengths(), staircase(n, k))


def avoids_213k(p: Sequence[int], k: int) -> bool:
    """p avoids 213...k iff every essential (i, j) has i + j >= n + 3 - k + rank."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    _require_schroeder(p)
    n = len(p)
    return all(i + j >= n + 3 - k + r for i, j, r in essential_set(p).entries)


def corner_row_column_counts(p: Sequence[int]) -> tuple[int, int, int, int]:
    """(r, c, r2, c2): rows and columns holding a corner, and holding two."""
    E = essential_set(p)
    rows = Counter(i for i, _, _ in E.entries)
    cols = Counter(j for _, j, _ in E.entries)
    return (len(rows), len(cols),
            sum(1 for v in rows.values() if v >= 2),
            sum(1 for v in cols.values() if v >= 2))


def avoids_decreasing(p: Sequence[int], k: int) -> bool:
    """
    p avoids k...21 iff r <= k-2 or c <= k-2, or else r = k-1 with exactly one
    row and one column holding two corners and no corner sharing both its
    row and its column with other corners.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    _require_schroeder(p)
    r, c, r2, c2 = corner_row_column_counts(p)
    if r <= k - 2 or c <= k - 2:
        return True
    if r == k - 1 and r2 == 1 and c2 == 1:
        E = essential_set(p).entries
        rows = Counter(i for i, _, _ in E)
        cols = Counter(j for _, j, _ in E)
        return not any(rows[i] >= 2 and cols[j] >= 2 for i, j, _ in E)
    return False


def avoids_231(p: Sequence[int]) -> bool:
    """
    Every diagram row holds exactly one essential square and every diagram
    column holds at most one.
    """
    _require_schroeder(p)
    d = diagram(p)
    E = essential_set(p).entries
    rows = Counter(i for i, _, _ in E)
    cols = Counter(j for _, j, _ in E)
    return all(rows[i] == 1 for i in d.rows()) and all(v <= 1 for v in cols.values())


def descent_set_231_predicate(p: Sequence[int]) -> bool:
    """
    Decide avoidance of 1243, 2143 and 231 from the descent set alone.

    With s the position of 1 and d the number of descents: either s > d and
    the descents are 1..d, or s <= d, the descents are 1..d+1 without s, and
    p_{s-1} > p_{s+1} when 1 < s < n.
    """
    n = len(p)
    if n == 0:
        return True
    s = p.index(1) + 1
    D = descent_set(p)
    d = len(D)
    if s > d:
        return D == frozenset(range(1, d + 1))
    if D != frozenset(range(1, d + 2)) - {s}:
        return False
    if 1 < s < n:
        return p[s - 2] > p[s]
    return True


def _corners_on_diagonal(E: EssentialSet, total: int) -> list[Square]:
    return [(i, j) for i, j, r in E.entries if r == 0 and i + j == total]


def omega(p: Sequence[int], k: int) -> Permutation:
    """
    Send a Schröder permutation avoiding 12...k to one avoiding 213...k by
    dropping the rank-0 corners on the diagonal i + j = n + 2 - k.

    >>> omega((4, 6, 3, 1, 5, 7, 2), 4)
    (1, 6, 3, 4, 5, 7, 2)
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    _require_schroeder(p)
    if contains_pattern(p, increasing(k)):
        raise DomainError(f"{tuple(p)} contains {increasing(k)}")
    n = len(p)
    E = essential_set(p)
    drop = set(_corners_on_diagonal(E, n + 2 - k))
    kept = tuple(e for e in E.entries if (e[0], e[1]) not in drop)
    return retrieve(EssentialSet(n, kept))


def omega_inverse(q: Sequence[int], k: int) -> Permutation:
    """
    Inverse of :func:`omega`: the corners of the union of D(phi(q)) with the
    staircase (n+1-k, ..., 1) become rank-0 entries, except those sitting
    just northwest of a rank-1 corner of q; the rank-1 corners of q are kept.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    _require_schroeder(q)
    if contains_pattern(q, pattern_213k(k)):
        raise DomainError(f"{tuple(q)} contains {pattern_213k(k)}")
    n = len(q)
    E = essential_set(q)
    ones = E.with_rank(1)
    rows = [max(a, b) for a, b in zip(diagram(phi(q)).row_lengths(), staircase(n, k))]
    entries = [(i, j, 0) for i, j in young_corners(rows) if (i + 1, j + 1) not in ones]
    entries.extend((i, j, 1) for i, j in ones)
    return retrieve(EssentialSet(n, tuple(entries)))
