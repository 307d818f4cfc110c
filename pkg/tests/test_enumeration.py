"""Exhaustive enumeration counts and the verification harness."""

import pytest

from helpers import naive_clutters
from clutters.core import is_connected, new_clutter
from clutters.enumeration import (
    connected_proper_minors,
    enumerate_clutters,
    enumerate_connected,
    verify_identities,
    verify_theorem,
)
from clutters.errors import TooLarge

F = frozenset

ANTICHAIN_COUNTS = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168, 5: 7581}
CONNECTED_COUNTS = {0: 2, 1: 3, 2: 1, 3: 5, 4: 84}


class TestEnumerateClutters:
    @pytest.mark.parametrize("n,count", sorted(ANTICHAIN_COUNTS.items()))
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_clutters(n)) == count

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_matches_naive_family_filter(self, n):
        ground = [str(i + 1) for i in range(n)]
        expected = set(naive_clutters(ground))
        got = list(enumerate_clutters(n))
        assert len(got) == len(expected)
        assert set(got) == expected

    def test_each_exactly_once(self):
        got = list(enumerate_clutters(4))
        assert len(got) == len(set(got))

    def test_includes_degenerates(self):
        got = set(enumerate_clutters(2))
        assert new_clutter("12", []) in got
        assert new_clutter("12", [[]]) in got

    def test_everything_validates(self):
        for M in enumerate_clutters(4):
            assert new_clutter(M.ground, M.rows) == M

    def test_deterministic_order(self):
        assert list(enumerate_clutters(3)) == list(enumerate_clutters(3))

    def test_too_large(self):
        with pytest.raises(TooLarge):
            list(enumerate_clutters(6))


class TestEnumerateConnected:
    @pytest.mark.parametrize("n,count", sorted(CONNECTED_COUNTS.items()))
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_connected(n)) == count

    def test_all_connected(self):
        for M in enumerate_connected(3):
            assert is_connected(M)

    def test_n1_members(self):
        got = set(enumerate_connected(1))
        assert got == {
            new_clutter("1", []),
            new_clutter("1", [[]]),
            new_clutter("1", [["1"]]),
        }


# Exhaustively established by this harness and confirmed by an independent
# brute-force search: the splitter property fails exactly on pairs whose
# target is a single element with one empty row.
THEOREM_FACTS = {
    0: (0, 0),
    1: (4, 0),
    2: (6, 0),
    3: (61, 9),
    4: (1806, 16),
}


class TestVerifyTheorem:
    @pytest.mark.parametrize("n,facts", sorted(THEOREM_FACTS.items()))
    def test_pair_and_counterexample_counts(self, n, facts):
        tested, failures = facts
        report = verify_theorem(n)
        (result,) = report.results
        assert result.tested == tested
        assert result.passed == tested - failures
        assert len(result.counterexamples) == failures

    def test_pair_count_cross_check(self):
        # independent recount of deduplicated connected proper minors
        from clutters.minor import all_minors

        for n in range(4):
            independent = 0
            for M in enumerate_connected(n):
                distinct = {N for _, N in all_minors(M) if N.ground < M.ground}
                independent += sum(1 for N in distinct if is_connected(N))
            (result,) = verify_theorem(n).results
            assert result.tested == independent

    def test_counterexamples_all_have_empty_row_targets(self):
        for n in (3, 4):
            (result,) = verify_theorem(n).results
            for item in result.counterexamples:
                assert item.endswith("row -)")

    def test_report_bytes_reproducible(self):
        assert verify_theorem(3).render() == verify_theorem(3).render()

    def test_summary_field_order(self):
        line = verify_theorem(2).results[0].summary_line()
        assert line == "theorem n=2: tested=6 passed=6 counterexamples=0"

    def test_parallel_matches_serial(self):
        assert verify_theorem(3, jobs=2).render() == verify_theorem(3).render()

    def test_connected_proper_minors_deduplicates(self):
        M = new_clutter("12", [["1", "2"]])
        values = connected_proper_minors(M)
        assert len(values) == len(set(values))


class TestVerifyIdentities:
    def test_zero_violations_up_to_four(self):
        for n in range(5):
            report = verify_identities(n)
            assert report.counterexample_count == 0
            for result in report.results:
                assert result.passed == result.tested

    def test_family_lines(self):
        text = verify_identities(2).render()
        for family in [
            "deletion-contraction-commutativity:",
            "blocker-involution:",
            "duality-swap:",
            "connectivity-equivalence:",
            "twin-contraction:",
            "deletion-graph-correspondence:",
        ]:
            assert family in text
        for line in text.strip().splitlines():
            assert " tested=" in line and " passed=" in line and " counterexamples=" in line

    def test_reproducible(self):
        assert verify_identities(3).render() == verify_identities(3).render()

    def test_too_large(self):
        with pytest.raises(TooLarge):
            verify_identities(5)
