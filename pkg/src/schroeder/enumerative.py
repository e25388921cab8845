"""
Exact counting sequences, closed forms for pattern classes, and brute-force
cross-checks between them.

Everything is integer arithmetic. Closed forms that involve a division go
through :func:`_exact`, which refuses a nonzero remainder.
"""
from __future__ import annotations

import json
import logging
import os
import threading
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .diagram import EssentialSet
from .paths import young_diagrams_in_staircase
from .perm import (
    SCHROEDER_PATTERNS,
    generate_avoiding,
    increasing,
    pattern_213k,
    t_m_patterns,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 9
HARD_MAX_N = 10
CAP_ENV = "SCHROEDER_MAX_N"


class CapExceeded(ValueError):
    """A brute-force enumeration was asked for a size above the configured cap."""


def enumeration_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_MAX_N


def check_cap(n: int, force: bool = False) -> None:
    cap = enumeration_cap()
    if n <= cap:
        return
    if n <= HARD_MAX_N and force:
        log.warning("enumerating at n=%d (cap %d); this may take a while", n, cap)
        return
    if force:
        log.warning("enumerating at n=%d, far above the cap of %d", n, cap)
        return
    raise CapExceeded(f"n={n} exceeds the enumeration cap of {cap} (use force to override)")


def _exact(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    assert r == 0, f"{numerator}/{denominator} is not an integer"
    return q


def _nonneg(*args: int) -> None:
    for a in args:
        if a < 0:
            raise ValueError(f"arguments must be nonnegative, got {args}")


_schroeder_table = [1]
_schroeder_lock = threading.Lock()


def schroeder(n: int) -> int:
    """
    Large Schröder number r_n from r_n = r_{n-1} + sum_{i<n} r_i r_{n-1-i}.

    >>> [schroeder(n) for n in range(6)]
    [1, 2, 6, 22, 90, 394]
    """
    _nonneg(n)
    if n < len(_schroeder_table):
        return _schroeder_table[n]
    with _schroeder_lock:
        r = _schroeder_table
        while len(r) <= n:
            m = len(r)
            r.append(r[m - 1] + sum(r[i] * r[m - 1 - i] for i in range(m)))
        return r[n]


def catalan(n: int) -> int:
    _nonneg(n)
    return _exact(comb(2 * n, n), n + 1)


def narayana(n: int, s_plus_1: int) -> int:
    """N(n, k) = C(n, k-1) C(n, k) / n."""
    _nonneg(n, s_plus_1)
    if n == 0:
        raise ValueError("narayana needs n >= 1")
    k = s_plus_1
    return _exact(comb(n, k - 1) * comb(n, k), n) if k >= 1 else 0


def ballot(a: int, b: int) -> int:
    """b(a, b) = (a - b + 1) / (a + b + 1) * C(a + b + 1, a + 1), for a >= b."""
    _nonneg(a, b)
    if b > a:
        return 0
    return _exact((a - b + 1) * comb(a + b + 1, a + 1), a + b + 1)


def fibonacci(n: int) -> int:
    """F_1 = F_2 = 1; F_0 = 0."""
    _nonneg(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def c_corners(m: int, k: int) -> int:
    """
    Number of Young diagrams inside (m, m-1, ..., 1) with exactly k corners
    strictly above the diagonal i + j = m + 1.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    _nonneg(m)
    n = m + 1
    total = sum(
        (Fraction(i, n - i) * comb(n - i, k) * comb(n - 1, k + i) for i in range(1, n - k)),
        Fraction(0),
    )
    assert total.denominator == 1, f"c({m}, {k}) = {total} is not an integer"
    return int(total)


def staircase_corner_profile(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """
    Count Young diagrams inside (n-1, ..., 1) by corners off and on the
    diagonal i + j = n. Returns two histograms {corner count: diagrams}.
    """
    off: dict[int, int] = {}
    on: dict[int, int] = {}
    for rows in young_diagrams_in_staircase(n):
        lengths = list(rows) + [0]
        corners = [(i, lengths[i - 1]) for i in range(1, n + 1) if lengths[i - 1] > lengths[i]]
        a = sum(1 for i, j in corners if i + j < n)
        b = sum(1 for i, j in corners if i + j == n)
        off[a] = off.get(a, 0) + 1
        on[b] = on.get(b, 0) + 1
    return off, on


def iter_valid_essential_sets(n: int) -> Iterator[EssentialSet]:
    """
    Every ranked set, ranks in {0, 1}, passing the validity conditions of
    :func:`schroeder.diagram.validate_essential_set` on the n x n board.
    """

    def extend(prev, acc):
        yield EssentialSet(n, tuple(acc))
        pi, pj, pa, pb = prev
        for r in (0, 1):
            for i in range(min(pi, pa - 1 + r), r, -1):
                for j in range(max(pj, pb + 1 + r), n + r - i + 1):
                    acc.append((i, j, r))
                    yield from extend((i, j, i - r, j - r), acc)
                    acc.pop()

    if n < 1:
        raise ValueError("n must be at least 1")
    yield from extend((n, 1, n + 1, 0), [])


def enumerate_valid_essential_sets(n: int) -> dict[str, object]:
    """
    Tally of :func:`iter_valid_essential_sets`: overall, rank-0 only, and
    rank-0 only by length.
    """
    total = 0
    rank0 = 0
    by_length: dict[int, int] = {}
    for E in iter_valid_essential_sets(n):
        total += 1
        if E.max_rank() <= 0:
            rank0 += 1
            by_length[len(E)] = by_length.get(len(E), 0) + 1
    return {"total": total, "rank0": rank0, "rank0_by_length": by_length}


def class_size(n: int, patterns: Iterable[Sequence[int]]) -> int:
    return sum(1 for _ in generate_avoiding(n, patterns))


@dataclass(frozen=True)
class CheckResult:
    check: str
    n: int
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"check": self.check, "n": self.n, "expected": str(self.expected),
                "actual": str(self.actual), "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> CheckResult:
        result = cls(d["check"], int(d["n"]), int(d["expected"]), int(d["actual"]))
        if result.passed != d["pass"]:
            raise ValueError(f"inconsistent pass flag in {d}")
        return result


def _closed_231(n: int) -> int:
    value = Fraction(n + 2) * Fraction(2) ** (n - 3)
    assert value.denominator == 1
    return int(value)


def _corner_sum(n: int) -> int:
    return 2 ** n + sum(2 ** k * c_corners(n, k) for k in range(1, n))


def _binomial_catalan_sum(n: int) -> int:
    return sum(comb(2 * n - k, k) * catalan(n - k) for k in range(n + 1))


T4 = SCHROEDER_PATTERNS

# name -> (smallest n, expected(n), actual(n))
IDENTITIES: dict[str, tuple[int, Callable[[int], int], Callable[[int], int]]] = {
    "class_1243_2143": (1, lambda n: schroeder(n - 1), lambda n: class_size(n, T4)),
    "class_132": (0, catalan, lambda n: class_size(n, [(1, 3, 2)])),
    "class_1243_2143_123_213": (1, lambda n: 2 ** (n - 1),
                                lambda n: class_size(n, T4 + ((1, 2, 3), (2, 1, 3)))),
    "class_1243_2143_321": (1, lambda n: n + 2 * comb(n, 3),
                            lambda n: class_size(n, T4 + ((3, 2, 1),))),
    "class_1243_2143_321_binomial_form": (
        1,
        lambda n: comb(n - 1, 0) + comb(n - 1, 1) + 2 * comb(n - 1, 2) + 2 * comb(n - 1, 3),
        lambda n: class_size(n, T4 + ((3, 2, 1),))),
    "class_1243_2143_231": (2, _closed_231, lambda n: class_size(n, T4 + ((2, 3, 1),))),
    "class_132_123_213": (1, lambda n: fibonacci(n + 1),
                          lambda n: class_size(n, [(1, 3, 2), (1, 2, 3), (2, 1, 3)])),
    "class_132_231": (1, lambda n: 2 ** (n - 1), lambda n: class_size(n, [(1, 3, 2), (2, 3, 1)])),
    "schroeder_corner_sum": (0, schroeder, _corner_sum),
    "schroeder_binomial_catalan_sum": (0, schroeder, _binomial_catalan_sum),
}


def run_check(name: str, n: int) -> CheckResult:
    _, expected, actual = IDENTITIES[name]
    return CheckResult(name, n, expected(n), actual(n))


def _run_task(task: tuple[str, int]) -> CheckResult:
    return run_check(*task)


def _run_all(tasks: list, fn, workers: int) -> list:
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def verify_identities(max_n: int, workers: int = 1, force: bool = False,
                      names: Iterable[str] | None = None) -> list[CheckResult]:
    """
    Compare every closed form with brute-force enumeration (or with the
    Schröder recurrence) for n up to max_n. Results come back sorted by check
    name, then n, whatever the number of workers.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    check_cap(max_n, force)
    selected = sorted(names) if names is not None else sorted(IDENTITIES)
    tasks = [(name, n) for name in selected
             for n in range(IDENTITIES[name][0], max_n + 1)]
    results = _run_all(tasks, _run_task, workers)
    return sorted(results, key=lambda r: (r.check, r.n))


def _conjecture_task(task: tuple[int, int, int]) -> CheckResult:
    m, k, n = task
    tm = t_m_patterns(m)
    return CheckResult(f"conjecture_m{m}_k{k}", n,
                       class_size(n, tm + (increasing(k),)),
                       class_size(n, tm + (pattern_213k(k),)))


def check_conjecture(m: int, k: int, max_n: int, workers: int = 1,
                     force: bool = False) -> list[CheckResult]:
    """
    For each n <= max_n compare the sizes of the classes avoiding T_m plus
    12...k and T_m plus 213...k. ``expected`` holds the first count and
    ``actual`` the second; an unequal pair is a counterexample.
    """
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    check_cap(max_n, force)
    tasks = [(m, k, n) for n in range(1, max_n + 1)]
    return sorted(_run_all(tasks, _conjecture_task, workers), key=lambda r: r.n)
