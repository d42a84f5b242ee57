import itertools

import pytest

from cubepath.core import enumerate_vertices, vertex
from cubepath.paths import verify
from cubepath.search import (
    EXHAUSTED,
    EXPECTED_UNCOVERED,
    FOUND,
    INCONCLUSIVE,
    SearchBudget,
    check_lhp_nonexistence,
    find_covering_path,
    find_path,
    ledger_from_records,
    run_base_case,
    settled_configs,
)
from cubepath.symmetry import enumerate_normalized_4configs

from conftest import ABCD


def test_d1_has_lhp():
    r = check_lhp_nonexistence(1)
    assert not r.absent and verify(r.counterexample)


@pytest.mark.parametrize("d", [2, 3])
def test_nonexistence(d):
    r = check_lhp_nonexistence(d)
    assert r.absent and r.counterexample is None


def test_expected_uncovered_are_the_four_matrices():
    assert EXPECTED_UNCOVERED == frozenset(ABCD)


def _outcomes(d, omit):
    vs = enumerate_vertices(d)
    a = vs[0]
    for b in vs[1:]:
        rest = [v for v in vs if v not in (a, b)]
        for om in itertools.combinations(rest, omit):
            yield a, b, om


@pytest.mark.parametrize("omit", [0, 2, 4])
def test_pruning_agrees_with_plain_search_d2(omit):
    for a, b, om in _outcomes(2, omit):
        p = find_path(a, b, om)
        q = find_path(a, b, om, prune=False)
        assert p.status == q.status != INCONCLUSIVE
        if p.status == FOUND:
            assert verify(p.certificate)


def test_pruning_agrees_d3(rng):
    vs = enumerate_vertices(3)
    for _ in range(40):
        a, b, x, y = rng.sample(vs, 4)
        p = find_path(a, b, (x, y))
        q = find_path(a, b, (x, y), prune=False)
        assert p.status == q.status


def test_d2_config_exhausts():
    c = tuple(vertex(s) for s in ("00", "11", "01", "10"))
    r = find_covering_path(c)
    assert r.status in (FOUND, EXHAUSTED)
    if r.status == FOUND:
        assert verify(r.certificate)


def test_heuristic_never_claims_exhaustion():
    c = enumerate_normalized_4configs(4)[500]
    budget = SearchBudget(per_config_node_limit=50, exhaustive_node_limit=200)
    r = find_covering_path(c, budget)
    assert r.status == INCONCLUSIVE and not r.exhaustive


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(per_config_node_limit=0)
    with pytest.raises(ValueError):
        SearchBudget(exhaustive_time_limit=-1)
    b = SearchBudget(per_config_node_limit=1024, restart_policy=(0, 1, 2))
    assert b.attempts() == [(0, 64), (1, 256), (2, 1024)]


def test_settled_configs_share_edges():
    n4 = enumerate_normalized_4configs(4)
    c = n4[100]
    r = find_covering_path(c)
    assert r.status == FOUND
    settled = settled_configs(r.certificate)
    assert 1 <= len(settled) <= 8
    for key, cert in settled.items():
        assert verify(cert)
        assert (cert.start, cert.end) == key[:2] and cert.omitted == frozenset(key[2:])
        assert cert.path.length == r.certificate.path.length


def test_small_base_case_run():
    n4 = enumerate_normalized_4configs(4)
    subset = n4[:12]
    ledger = run_base_case(4, SearchBudget(per_config_node_limit=400_000), configs=subset)
    assert ledger.complete() and not ledger.uncovered
    assert set(ledger.covered) == set(subset)
    for key, cert in ledger.covered.items():
        assert verify(cert) and len(cert.path.vertices) == 79
    again = run_base_case(4, configs=subset, known=ledger.covered)
    assert set(again.covered) == set(subset)


def test_empty_witness_file_leaves_everything_uncovered():
    ledger = ledger_from_records([])
    assert ledger.uncovered == set(enumerate_normalized_4configs(4))

