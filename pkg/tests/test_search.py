import itertools
from collections import Counter

import pytest

from friendship_hg.constructions import complete
from friendship_hg.hypergraph import members
from friendship_hg.search import (
    SearchConfig,
    SearchConfigError,
    enumerate_friendship,
    verify_solution_census,
)
from friendship_hg.verify import is_universal, verify_friendship

from oracles import as_sets, is_friendship


def _closure(solutions, n):
    out = set()
    for d in solutions:
        for perm in itertools.permutations(range(n)):
            out.add(frozenset(sum(1 << perm[v] for v in members(q)) for q in d.cliques))
    return out


def test_four_vertices_is_k4():
    o = enumerate_friendship(SearchConfig(4, 3))
    assert o.exhausted and len(o.solutions) == 1
    assert o.solutions[0].expand() == complete(3)
    assert verify_solution_census(4, 3, o.solutions).passed


@pytest.mark.parametrize("n", [5, 6, 7])
def test_no_solutions_below_eight(n):
    o = enumerate_friendship(SearchConfig(n, 3))
    assert o.exhausted and o.solutions == []
    assert verify_solution_census(n, 3, o.solutions).passed


@pytest.mark.parametrize("n", [4, 5, 6])
def test_symmetry_breaking_preserves_classes(n):
    on = enumerate_friendship(SearchConfig(n, 3))
    off = enumerate_friendship(SearchConfig(n, 3, symmetry_breaking=False))
    assert on.exhausted and off.exhausted
    assert _closure(on.solutions, n) == _closure(off.solutions, n)
    assert {frozenset(d.cliques) for d in off.solutions} == _closure(off.solutions, n)


def test_eight_first_solution():
    o = enumerate_friendship(SearchConfig(8, 3, max_solutions=1))
    assert len(o.solutions) == 1 and not o.exhausted
    h = o.solutions[0].expand()
    assert h.m in (28, 32)
    assert verify_friendship(h).passed and is_friendship(as_sets(h), 8, 3)


def test_eight_full_census():
    on = enumerate_friendship(SearchConfig(8, 3))
    off = enumerate_friendship(SearchConfig(8, 3, symmetry_breaking=False))
    assert on.exhausted and off.exhausted
    # labelings: 8!/168 of the cone over the Fano plane, 8!/48 of the cube
    assert Counter(d.expand().m for d in off.solutions) == {28: 240, 32: 840}
    assert Counter(d.expand().m for d in on.solutions) == {28: 24, 32: 96}
    assert {d.cliques for d in on.solutions} <= {d.cliques for d in off.solutions}
    for d in on.solutions:
        assert is_universal(d.expand()).passed == (d.expand().m == 28)


def test_deterministic():
    a = enumerate_friendship(SearchConfig(7, 3)).to_dict()
    b = enumerate_friendship(SearchConfig(7, 3)).to_dict()
    assert a == b


@pytest.mark.parametrize(
    "cfg",
    [
        SearchConfig(7, 3),
        SearchConfig(8, 3),
        SearchConfig(8, 3, max_solutions=5),
        SearchConfig(8, 3, node_budget=700),
        SearchConfig(8, 3, symmetry_breaking=False, node_budget=5000),
    ],
)
def test_jobs_do_not_change_outcome(cfg):
    one = enumerate_friendship(cfg).to_dict()
    for jobs in (2, 4):
        assert enumerate_friendship(cfg, jobs=jobs).to_dict() == one


@pytest.mark.parametrize("budget", [1, 10, 100])
def test_budget_is_reported(budget):
    o = enumerate_friendship(SearchConfig(8, 3, node_budget=budget))
    assert not o.exhausted
    assert o.nodes_visited <= budget


def test_budget_large_enough_exhausts():
    o = enumerate_friendship(SearchConfig(7, 3, node_budget=10**6))
    assert o.exhausted and o.nodes_visited < 10**6


def test_census_refuses_partial_search():
    assert verify_solution_census(4, 3, [], exhausted=False).verdict == "ERROR"
    assert verify_solution_census(5, 3, [object()]).verdict == "FAIL"
    assert verify_solution_census(9, 3, []).verdict == "ERROR"


@pytest.mark.parametrize(
    "kwargs",
    [dict(n=11, r=3), dict(n=4, r=2), dict(n=3, r=3), dict(n=8, r=3, node_budget=0), dict(n=8, r=3, max_solutions=0)],
)
def test_config_validation(kwargs):
    with pytest.raises(SearchConfigError):
        SearchConfig(**kwargs)


def test_r4_small():
    o = enumerate_friendship(SearchConfig(5, 4))
    assert o.exhausted and len(o.solutions) == 1
