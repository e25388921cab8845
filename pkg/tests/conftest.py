from functools import lru_cache
from itertools import combinations

import pytest

from schroeder.perm import SCHROEDER_PATTERNS, generate_all, generate_avoiding


@lru_cache(maxsize=None)
def all_perms(n):
    return tuple(generate_all(n))


@lru_cache(maxsize=None)
def schroeder_perms(n):
    return tuple(generate_avoiding(n, SCHROEDER_PATTERNS))


@lru_cache(maxsize=None)
def avoiders_132(n):
    return tuple(generate_avoiding(n, [(1, 3, 2)]))


def brute_contains(p, t):
    """Independent oracle: try every index subset."""
    k = len(t)
    order = sorted(range(k), key=lambda a: t[a])
    for idx in combinations(range(len(p)), k):
        vals = [p[i] for i in idx]
        if sorted(range(k), key=lambda a: vals[a]) == order:
            return True
    return False


def brute_count(p, t):
    k = len(t)
    order = sorted(range(k), key=lambda a: t[a])
    return sum(1 for idx in combinations(range(len(p)), k)
               if sorted(range(k), key=lambda a: p[idx[a]]) == order)


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    _acceptance.append((marker.args[0], marker.args[1], report.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_acceptance):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {title}")
