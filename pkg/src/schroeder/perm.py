"""
Permutations in one-line notation, naive pattern matching and avoidance classes.

A permutation of size n is a tuple ``(p_1, ..., p_n)`` holding each of 1..n once.
Positions and values are both 1-based in every public function; ``p[i - 1]`` is
the entry at position ``i``. The empty tuple is the permutation of size 0.

The matchers here are deliberately naive. Everything else in the package is
checked against them.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence

Permutation = tuple[int, ...]


class PermutationError(ValueError):
    """Raised when a sequence of integers is not a permutation of 1..n."""


def check_permutation(entries: Sequence[int]) -> Permutation:
    """
    Return ``entries`` as a tuple, raising if it is not a bijection on 1..n.

    >>> check_permutation([2, 3, 1])
    (2, 3, 1)
    >>> check_permutation([1, 1, 2])
    Traceback (most recent call last):
    ...
    schroeder.perm.PermutationError: not a permutation of 1..3: duplicated 1; missing 3
    """
    p = tuple(int(x) for x in entries)
    n = len(p)
    if sorted(p) == list(range(1, n + 1)):
        return p
    seen: set[int] = set()
    duplicated = []
    for x in p:
        if x in seen and x not in duplicated:
            duplicated.append(x)
        seen.add(x)
    missing = [v for v in range(1, n + 1) if v not in seen]
    out_of_range = [x for x in p if not 1 <= x <= n]
    problems = []
    if duplicated:
        problems.append("duplicated " + ", ".join(map(str, duplicated)))
    if out_of_range:
        problems.append("out of range " + ", ".join(map(str, out_of_range)))
    if missing:
        problems.append("missing " + ", ".join(map(str, missing)))
    raise PermutationError(f"not a permutation of 1..{n}: " + "; ".join(problems))


def parse_permutation(text: str) -> Permutation:
    """
    Parse whitespace- or comma-separated integers.

    A single run of digits with no separators is read one digit per entry, so
    ``"4752631"`` and ``"4 7 5 2 6 3 1"`` give the same permutation.

    >>> parse_permutation("4 7 5 2 6 3 1")
    (4, 7, 5, 2, 6, 3, 1)
    >>> parse_permutation("2143")
    (2, 1, 4, 3)
    """
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        tokens = list(tokens[0])
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise PermutationError(f"cannot parse {text!r} as a list of integers") from None
    return check_permutation(values)


def format_permutation(p: Sequence[int], sep: str = " ") -> str:
    return sep.join(map(str, p))


def pattern_set(patterns: Iterable[Sequence[int]]) -> tuple[Permutation, ...]:
    """Deduplicated, sorted tuple of validated patterns (each of length >= 1)."""
    result = set()
    for t in patterns:
        t = check_permutation(t)
        if not t:
            raise PermutationError("patterns must have length at least 1")
        result.add(t)
    return tuple(sorted(result, key=lambda t: (len(t), t)))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def increasing(k: int) -> Permutation:
    """The pattern 12...k."""
    return identity(k)


def decreasing(k: int) -> Permutation:
    """The pattern k...21."""
    return tuple(range(k, 0, -1))


def pattern_213k(k: int) -> Permutation:
    """The pattern 2 1 3 4 ... k, for k >= 2."""
    if k < 2:
        raise ValueError(f"213...k needs k >= 2, got {k}")
    return (2, 1) + tuple(range(3, k + 1))


def inverse(p: Sequence[int]) -> Permutation:
    result = [0] * len(p)
    for i, v in enumerate(p, start=1):
        result[v - 1] = i
    return tuple(result)


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def descent_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def des(p: Sequence[int]) -> int:
    return len(descent_set(p))


def left_to_right_minima(p: Sequence[int]) -> frozenset[int]:
    result = set()
    smallest = None
    for i, v in enumerate(p, start=1):
        if smallest is None or v < smallest:
            result.add(i)
            smallest = v
    return frozenset(result)


def _comparisons(t: Sequence[int]) -> list[list[tuple[int, bool]]]:
    # for pattern slot a: (b, t[a] < t[b]) for every earlier slot b
    return [[(b, t[a] < t[b]) for b in range(a)] for a in range(len(t))]


def contains_pattern(p: Sequence[int], t: Sequence[int]) -> bool:
    """
    True iff some subsequence of ``p`` is order-isomorphic to ``t``.

    Backtracking over positions: pattern slots are filled left to right and a
    candidate is rejected as soon as it disagrees in relative order with an
    already chosen entry.

    >>> contains_pattern((4, 7, 5, 2, 6, 3, 1), (1, 3, 2))
    True
    >>> contains_pattern((4, 7, 5, 2, 6, 3, 1), (1, 2, 4, 3))
    False
    """
    k = len(t)
    if k == 0:
        raise ValueError("pattern must be nonempty")
    n = len(p)
    if k > n:
        return False
    comps = _comparisons(t)
    chosen = [0] * k

    def place(slot: int, start: int) -> bool:
        if slot == k:
            return True
        for pos in range(start, n - (k - slot) + 1):
            v = p[pos]
            if all((v < chosen[b]) == less for b, less in comps[slot]):
                chosen[slot] = v
                if place(slot + 1, pos + 1):
                    return True
        return False

    return place(0, 0)


def avoids(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(p, t) for t in patterns)


def count_pattern(p: Sequence[int], t: Sequence[int]) -> int:
    """
    Number of index subsequences of ``p`` order-isomorphic to ``t``.

    >>> count_pattern((4, 7, 5, 2, 6, 3, 1), (1, 2))
    6
    """
    k = len(t)
    if k == 0:
        raise ValueError("pattern must be nonempty")
    n = len(p)

    def count(slot: int, start: int, chosen: tuple[int, ...]) -> int:
        if slot == k:
            return 1
        total = 0
        for pos in range(start, n):
            v = p[pos]
            if all((v < chosen[b]) == (t[slot] < t[b]) for b in range(slot)):
                total += count(slot + 1, pos + 1, chosen + (v,))
        return total

    return count(0, 0, ())


def generate_all(n: int, prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """
    All permutations of size n in lexicographic order.

    Uses the classical successor step, so the stream can be restarted from any
    permutation. With ``prefix`` only permutations beginning with it are
    produced, which partitions S_n for parallel work.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    prefix = tuple(prefix)
    if len(prefix) > n or len(set(prefix)) != len(prefix) or any(not 1 <= v <= n for v in prefix):
        return
    rest = sorted(set(range(1, n + 1)) - set(prefix))
    while True:
        yield prefix + tuple(rest)
        # successor of rest
        i = len(rest) - 2
        while i >= 0 and rest[i] > rest[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(rest) - 1
        while rest[j] < rest[i]:
            j -= 1
        rest[i], rest[j] = rest[j], rest[i]
        rest[i + 1:] = reversed(rest[i + 1:])


def _occurs_at_end(seq: Sequence[int], t: Sequence[int], comps) -> bool:
    # occurrence of t whose last slot is the last entry of seq
    k = len(t)
    m = len(seq)
    if k > m:
        return False
    chosen = [0] * k
    chosen[k - 1] = seq[-1]
    last = t[-1]

    def place(slot: int, start: int) -> bool:
        if slot == k - 1:
            return True
        for pos in range(start, m - 1 - (k - 1 - slot) + 1):
            v = seq[pos]
            if (v < chosen[k - 1]) != (t[slot] < last):
                continue
            if all((v < chosen[b]) == less for b, less in comps[slot]):
                chosen[slot] = v
                if place(slot + 1, pos + 1):
                    return True
        return False

    return place(0, 0)


def generate_avoiding(n: int, patterns: Iterable[Sequence[int]],
                      prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """
    Permutations of size n avoiding every pattern, in lexicographic order.

    Same output as filtering :func:`generate_all` with :func:`contains_pattern`,
    but prefixes that already contain a pattern are cut off, and each extension
    only looks for occurrences ending at the newly placed entry.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    pats = pattern_set(patterns)
    if not pats:
        raise ValueError("at least one pattern is required")
    prepared = [(t, _comparisons(t)) for t in pats]
    prefix = tuple(prefix)
    if len(prefix) > n or len(set(prefix)) != len(prefix) or any(not 1 <= v <= n for v in prefix):
        return
    for i in range(1, len(prefix) + 1):
        if any(_occurs_at_end(prefix[:i], t, c) for t, c in prepared):
            return

    seq = list(prefix)
    unused = [v for v in range(1, n + 1) if v not in prefix]

    def extend() -> Iterator[Permutation]:
        if not unused:
            yield tuple(seq)
            return
        for idx in range(len(unused)):
            v = unused.pop(idx)
            seq.append(v)
            if not any(_occurs_at_end(seq, t, c) for t, c in prepared):
                yield from extend()
            seq.pop()
            unused.insert(idx, v)

    yield from extend()


def t_m_patterns(m: int) -> tuple[Permutation, ...]:
    """
    The (m-2)! patterns of length m whose last two entries are m, m-1.

    >>> t_m_patterns(4)
    ((1, 2, 4, 3), (2, 1, 4, 3))
    """
    if m < 3:
        raise ValueError(f"T_m is defined for m >= 3, got {m}")
    tail = (m, m - 1)
    return tuple(head + tail for head in generate_all(m - 2))


SCHROEDER_PATTERNS: tuple[Permutation, ...] = ((1, 2, 4, 3), (2, 1, 4, 3))
