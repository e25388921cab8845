import pytest

from schroeder.diagram import (
    Diagram,
    EssentialSet,
    EssentialSetError,
    UnsupportedRankError,
    avoids_Tm_by_rank,
    components,
    diagram,
    essential_set,
    is_schroeder,
    max_rank,
    permutation_from_diagram,
    rank,
    render_board,
    retrieve,
    validate_essential_set,
)
from schroeder.perm import SCHROEDER_PATTERNS, avoids, descent_set, identity, inverse, inversions, t_m_patterns

from conftest import all_perms, schroeder_perms

RANK3_SAMPLE = (9, 4, 8, 10, 3, 1, 7, 6, 2, 5)
SAMPLE = (4, 7, 5, 2, 6, 3, 1)
SAMPLE_E = EssentialSet(7, ((3, 3, 0), (6, 1, 0), (2, 6, 1), (5, 3, 1)))


def shade_oracle(p):
    """Literal construction: shade each dot and everything due south or east of it."""
    n = len(p)
    shaded = set()
    for i, v in enumerate(p, start=1):
        shaded.update((i, j) for j in range(v, n + 1))
        shaded.update((r, v) for r in range(i, n + 1))
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)} - shaded


def test_diagram_examples():
    assert diagram((1, 2, 3)) == Diagram(3)
    d = diagram(SAMPLE)
    block = {(i, j) for i in range(1, 4) for j in range(1, 4)}
    assert d.squares == block | {(2, 5), (2, 6), (4, 1), (5, 1), (5, 3), (6, 1)}
    assert len(d) == inversions(SAMPLE) == 15
    assert diagram((2, 1)).sorted() == [(1, 1)]


def test_rank_examples():
    assert rank(RANK3_SAMPLE, (8, 5)) == 3
    assert rank(SAMPLE, (2, 6)) == 1
    assert rank(SAMPLE, (1, 1)) == 0
    with pytest.raises(ValueError):
        rank(SAMPLE, (1, 4))


def test_essential_set_examples():
    assert essential_set(RANK3_SAMPLE).as_dict() == {
        (1, 8): 0, (4, 3): 0, (5, 2): 0, (4, 7): 1, (8, 2): 1, (7, 6): 3, (8, 5): 3}
    assert essential_set(SAMPLE) == SAMPLE_E
    assert len(essential_set(identity(6))) == 0


def test_max_rank_and_membership():
    assert max_rank(SAMPLE) == 1
    assert max_rank(RANK3_SAMPLE) == 3
    assert max_rank(identity(4)) == -1
    assert is_schroeder(SAMPLE)
    assert not is_schroeder(RANK3_SAMPLE)
    assert is_schroeder((1, 2, 4, 3)) == avoids((1, 2, 4, 3), SCHROEDER_PATTERNS)
    assert avoids_Tm_by_rank((5, 4, 7, 1, 3, 2, 6), 5)
    assert all(avoids_Tm_by_rank(identity(n), m) for n in range(5) for m in (3, 4, 5))
    with pytest.raises(ValueError):
        avoids_Tm_by_rank(SAMPLE, 2)


def test_validate_examples():
    assert validate_essential_set(SAMPLE_E)
    assert not validate_essential_set(EssentialSet(4, ((2, 2, 0), (1, 1, 0))))
    assert not validate_essential_set(EssentialSet(4, ((3, 3, 1),)))
    assert validate_essential_set(EssentialSet(5, ((3, 3, 1),)))
    with pytest.raises(UnsupportedRankError):
        validate_essential_set(essential_set(RANK3_SAMPLE))


def test_retrieve_examples():
    assert retrieve(SAMPLE_E) == SAMPLE
    assert retrieve(EssentialSet(3)) == (1, 2, 3)
    with pytest.raises(EssentialSetError):
        retrieve(EssentialSet(4, ((3, 3, 1),)))


def test_permutation_from_diagram_examples():
    assert permutation_from_diagram(Diagram(3)) == (1, 2, 3)
    assert permutation_from_diagram(diagram(SAMPLE)) == SAMPLE
    assert permutation_from_diagram(Diagram(2, {(1, 1)})) == (2, 1)
    with pytest.raises(ValueError):
        permutation_from_diagram(Diagram(3, {(2, 1)}))


def test_essential_set_text_round_trip():
    text = SAMPLE_E.to_text()
    assert text.splitlines()[0] == "n=7"
    assert "2 6 1" in text.splitlines()
    assert EssentialSet.from_text(text) == SAMPLE_E
    with pytest.raises(ValueError):
        EssentialSet.from_text("7\n1 2 0\n")
    with pytest.raises(ValueError):
        EssentialSet.from_text("n=3\n1 2\n")
    with pytest.raises(ValueError):
        EssentialSet(3, ((1, 1, 0), (1, 1, 1)))


def test_render_board():
    rows = render_board(SAMPLE).splitlines()
    assert rows[0] == "000●···"
    assert rows[1] == "000·11●"
    assert rows[6] == "●······"


@pytest.mark.parametrize("n", range(8))
def test_diagram_invariants(n):
    for p in all_perms(n):
        d = diagram(p)
        assert d.squares == shade_oracle(p)
        assert len(d) == inversions(p)
        assert all(i + j <= 2 * n - 1 for i, j in d.squares)
        assert d.transpose() == diagram(inverse(p))
        E = essential_set(p)
        assert {i for i, _, _ in E} == descent_set(p)
        assert all(i + j <= n + r for i, j, r in E)
        for i, j, r in E:
            assert r == sum(1 for k in range(i - 1) if p[k] < j)
        ranks = {sq: r for r, comp in components(p) for sq in comp}
        for (i, j), r in ranks.items():
            for nb in ((i + 1, j), (i, j + 1)):
                if nb in ranks:
                    assert ranks[nb] == r
            if r == 1 and (i - 1, j) not in d and (i, j - 1) not in d:
                assert p[i - 2] == j - 1


@pytest.mark.parametrize("n", range(8))
def test_schroeder_corners_are_vexillary(n):
    for p in schroeder_perms(n):
        E = essential_set(p).entries
        assert not any(a < i and b < j for i, j, _ in E for a, b, _ in E)


@pytest.mark.parametrize("n", range(8))
def test_round_trips(n):
    for p in all_perms(n):
        assert permutation_from_diagram(diagram(p)) == p
    for p in schroeder_perms(n):
        assert retrieve(essential_set(p)) == p


@pytest.mark.parametrize("n", range(7))
def test_rank_bound_matches_t_m(n):
    for m in (3, 4, 5):
        tm = t_m_patterns(m)
        for p in all_perms(n):
            assert avoids_Tm_by_rank(p, m) == avoids(p, tm)
