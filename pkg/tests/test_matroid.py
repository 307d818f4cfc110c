"""Circuit matroids, duals, and their clutter specializations."""

import pytest

from clutters import matroid
from clutters.blocker import blocker
from clutters.core import contract, delete, is_connected, new_clutter
from clutters.errors import (
    BadRank,
    CircuitAxiomViolation,
    GroundOverlap,
    ParseError,
)
from clutters.matroid import (
    bases,
    circuits_clutter,
    direct_sum,
    dual,
    k4_graphic_matroid,
    new_matroid,
    parse_matroid,
    serialize_matroid,
    uniform,
)

F = frozenset


def two_copies_of_u13():
    return direct_sum(uniform(1, 3), uniform(1, 3, labels=["4", "5", "6"]))


class TestNewMatroid:
    def test_empty_circuit_rejected(self):
        with pytest.raises(CircuitAxiomViolation):
            new_matroid("12", [[]])

    def test_elimination_axiom_rejected(self):
        # {1,2} and {2,3} share 2 but no circuit sits inside {1,3}
        with pytest.raises(CircuitAxiomViolation):
            new_matroid("123", [["1", "2"], ["2", "3"]])

    def test_valid_family_accepted(self):
        N = new_matroid("123", [["1", "2"], ["2", "3"], ["1", "3"]])
        assert N.circuits == F({F("12"), F("23"), F("13")})


class TestUniform:
    def test_rank_two_of_four(self):
        N = uniform(2, 4)
        assert N.circuits == F(
            {F("123"), F("124"), F("134"), F("234")}
        )

    def test_free_matroid_has_no_circuits(self):
        assert uniform(3, 3).circuits == F()

    def test_rank_zero_gives_loops(self):
        assert uniform(0, 2).circuits == F({F("1"), F("2")})

    def test_bad_rank(self):
        with pytest.raises(BadRank):
            uniform(3, 2)
        with pytest.raises(BadRank):
            uniform(-1, 2)

    def test_custom_labels(self):
        N = uniform(1, 2, labels=["x", "y"])
        assert N.ground == F({"x", "y"})


class TestCircuitsClutter:
    def test_rank_one(self):
        M = circuits_clutter(uniform(1, 3))
        assert M == new_clutter("123", [["1", "2"], ["1", "3"], ["2", "3"]])

    def test_circuit_is_whole_ground(self):
        assert circuits_clutter(uniform(2, 3)).rows == F({F("123")})

    def test_free(self):
        assert circuits_clutter(uniform(2, 2)).rows == F()


class TestBases:
    def test_rank_one(self):
        assert bases(uniform(1, 3)) == F({F("1"), F("2"), F("3")})

    def test_rank_two_of_three(self):
        assert bases(uniform(2, 3)) == F({F("12"), F("13"), F("23")})

    def test_free(self):
        assert bases(uniform(2, 2)) == F({F("12")})

    def test_all_loops(self):
        assert bases(uniform(0, 2)) == F({F()})


class TestDual:
    def test_u13(self):
        assert dual(uniform(1, 3)) == uniform(2, 3)

    def test_involution(self):
        for N in [uniform(1, 3), uniform(2, 4), k4_graphic_matroid()]:
            assert dual(dual(N)) == N

    def test_free_dualizes_to_loops(self):
        assert dual(uniform(3, 3)) == uniform(0, 3)


class TestDirectSum:
    def test_disjoint_union(self):
        N = two_copies_of_u13()
        assert len(N.ground) == 6
        assert len(N.circuits) == 6
        assert all(len(c) == 2 for c in N.circuits)

    def test_empty_ground_identity(self):
        N = uniform(1, 3)
        assert direct_sum(N, uniform(0, 0, labels=[])) == N

    def test_overlap_rejected(self):
        with pytest.raises(GroundOverlap):
            direct_sum(uniform(1, 3), uniform(1, 3))

    def test_sum_clutter_is_disconnected(self):
        assert not is_connected(circuits_clutter(two_copies_of_u13()))


class TestK4:
    def test_circuit_count(self):
        assert len(k4_graphic_matroid().circuits) == 7

    def test_sixteen_spanning_trees(self):
        assert len(bases(k4_graphic_matroid())) == 16

    def test_self_dual_circuit_count(self):
        assert len(dual(k4_graphic_matroid()).circuits) == 7


class TestConnectivityTransfer:
    def test_matches_clutter_connectivity(self):
        fixtures = [
            uniform(1, 3),
            uniform(2, 3),
            uniform(2, 4),
            uniform(0, 2),
            uniform(2, 2),
            two_copies_of_u13(),
            k4_graphic_matroid(),
        ]
        for N in fixtures:
            assert matroid.is_connected(N) == is_connected(circuits_clutter(N))


class TestBlockerDualBases:
    def test_blocker_rows_are_dual_bases(self):
        fixtures = [
            uniform(1, 3),
            uniform(2, 3),
            uniform(2, 4),
            two_copies_of_u13(),
            k4_graphic_matroid(),
        ]
        for N in fixtures:
            assert blocker(circuits_clutter(N)).rows == bases(dual(N))

    def test_blocker_connectivity_not_invariant(self):
        N = two_copies_of_u13()
        M = circuits_clutter(N)
        assert not is_connected(M)
        assert is_connected(blocker(M))
        assert min(len(c) for c in dual(N).circuits) >= 3


class TestMinorCompatibility:
    def test_deletion_matches_uniform_minor(self):
        for r in range(0, 4):
            for n in range(max(r, 1), 5):
                N = uniform(r, n)
                M = circuits_clutter(N)
                v = sorted(N.ground)[-1]
                shrunk = uniform(min(r, n - 1), n - 1, labels=sorted(N.ground - {v}))
                assert delete(M, v) == circuits_clutter(shrunk)

    def test_contraction_matches_uniform_minor(self):
        # loopless only: contracting a loop leaves the empty row behind,
        # which circuit clutters never carry
        for r in range(1, 4):
            for n in range(r, 5):
                N = uniform(r, n)
                M = circuits_clutter(N)
                v = sorted(N.ground)[-1]
                shrunk = uniform(r - 1, n - 1, labels=sorted(N.ground - {v}))
                assert contract(M, v) == circuits_clutter(shrunk)

    def test_loop_contraction_diverges(self):
        M = circuits_clutter(uniform(0, 2))
        assert contract(M, "1") == new_clutter("2", [[]])


class TestFileFormat:
    def test_round_trip(self):
        for N in [uniform(1, 3), uniform(0, 2), k4_graphic_matroid()]:
            assert parse_matroid(serialize_matroid(N)) == N

    def test_header_line(self):
        text = serialize_matroid(uniform(1, 2))
        assert text.splitlines()[0] == "matroid-circuits"

    def test_missing_header_rejected(self):
        with pytest.raises(ParseError):
            parse_matroid("elements 1 2\nrow 1 2\n")

    def test_axioms_validated_on_load(self):
        bad = "matroid-circuits\nelements 1 2 3\nrow 1 2\nrow 2 3\n"
        with pytest.raises(CircuitAxiomViolation):
            parse_matroid(bad)

    def test_comments_ignored(self):
        text = "# fixture\nmatroid-circuits\nelements 1 2\nrow 1 2\n"
        assert parse_matroid(text) == uniform(1, 2)
