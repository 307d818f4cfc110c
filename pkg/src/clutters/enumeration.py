"""Exhaustive clutter generation and the verification harness.

Every antichain over a small labeled ground set is generated exactly once by
canonical growth: subsets are fixed in a canonical order and an antichain is
built by choosing an increasing sequence of pairwise incomparable subsets.
The verify_* functions machine-check the splitter theorem and the identity
propositions over the full enumeration and render deterministic plain-text
reports; counterexamples are report content, not errors.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from typing import Iterator

from . import core, graphview, minor, splitter
from .blocker import blocker
from .core import Clutter, canonical_serialize
from .errors import TheoremCounterexample, TooLarge

MAX_GROUND = 5


def _ground_labels(n: int) -> list:
    if not 0 <= n <= MAX_GROUND:
        raise TooLarge(f"n must be between 0 and {MAX_GROUND}, got {n}")
    return [str(i + 1) for i in range(n)]


def enumerate_clutters(n: int) -> Iterator[Clutter]:
    """Every clutter on ground {'1'..str(n)}, exactly once, deterministically."""
    labels = _ground_labels(n)
    ground = frozenset(labels)
    subsets = sorted(
        (
            frozenset(combo)
            for r in range(n + 1)
            for combo in itertools.combinations(labels, r)
        ),
        key=core.row_sort_key,
    )

    def grow(start: int, chosen: list) -> Iterator[Clutter]:
        yield Clutter(ground, frozenset(chosen))
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(not (s <= t or t <= s) for t in chosen):
                yield from grow(i + 1, chosen + [s])

    yield from grow(0, [])


def enumerate_connected(n: int) -> Iterator[Clutter]:
    """The connected members of enumerate_clutters(n)."""
    return (M for M in enumerate_clutters(n) if core.is_connected(M))


def _inline(M: Clutter) -> str:
    return canonical_serialize(M).strip().replace("\n", "; ")


@dataclass(frozen=True)
class CheckResult:
    name: str
    tested: int
    passed: int
    counterexamples: tuple

    def summary_line(self) -> str:
        return (
            f"{self.name}: tested={self.tested} passed={self.passed} "
            f"counterexamples={len(self.counterexamples)}"
        )


@dataclass(frozen=True)
class VerificationReport:
    results: tuple

    def render(self) -> str:
        lines = []
        for result in self.results:
            lines.append(result.summary_line())
            lines.extend("  " + item for item in result.counterexamples)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.render()

    @property
    def counterexample_count(self) -> int:
        return sum(len(r.counterexamples) for r in self.results)


def connected_proper_minors(M: Clutter) -> list:
    """Distinct connected proper minors of M, in first-witness order."""
    seen = {}
    for spec, N in minor.all_minors(M):
        if N.ground == M.ground or N in seen:
            continue
        seen[N] = spec
    return [N for N in seen if core.is_connected(N)]


def _theorem_work(M: Clutter) -> tuple:
    tested = passed = 0
    failures = []
    for N in connected_proper_minors(M):
        tested += 1
        try:
            splitter.find_splitter(M, N)
            passed += 1
        except TheoremCounterexample:
            failures.append(f"M=({_inline(M)})  N=({_inline(N)})")
    return tested, passed, failures


def verify_theorem(n: int, jobs: int = 1) -> VerificationReport:
    """Run find_splitter on every connected clutter on exactly n labeled
    elements against each of its connected proper minors."""
    candidates = list(enumerate_connected(n))
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.map(_theorem_work, candidates)
    else:
        chunks = [_theorem_work(M) for M in candidates]
    tested = sum(c[0] for c in chunks)
    passed = sum(c[1] for c in chunks)
    failures = tuple(item for c in chunks for item in c[2])
    result = CheckResult(f"theorem n={n}", tested, passed, failures)
    return VerificationReport((result,))


def _check_commutativity(n: int) -> CheckResult:
    tested = passed = 0
    failures = []
    for M in enumerate_clutters(n):
        for v, w in itertools.permutations(sorted(M.ground), 2):
            tested += 1
            ok = (
                core.delete(core.delete(M, v), w) == core.delete(core.delete(M, w), v)
                and core.contract(core.contract(M, v), w)
                == core.contract(core.contract(M, w), v)
                and core.contract(core.delete(M, v), w)
                == core.delete(core.contract(M, w), v)
            )
            if ok:
                passed += 1
            else:
                failures.append(f"M=({_inline(M)}) v={v} v'={w}")
    return CheckResult("deletion-contraction-commutativity", tested, passed, tuple(failures))


def _check_involution(n: int) -> CheckResult:
    tested = passed = 0
    failures = []
    for M in enumerate_clutters(n):
        tested += 1
        if blocker(blocker(M)) == M:
            passed += 1
        else:
            failures.append(f"M=({_inline(M)})")
    return CheckResult("blocker-involution", tested, passed, tuple(failures))


def _check_duality_swap(n: int) -> CheckResult:
    tested = passed = 0
    failures = []
    for M in enumerate_clutters(n):
        b = blocker(M)
        for v in sorted(M.ground):
            tested += 1
            ok = blocker(core.delete(M, v)) == core.contract(b, v) and blocker(
                core.contract(M, v)
            ) == core.delete(b, v)
            if ok:
                passed += 1
            else:
                failures.append(f"M=({_inline(M)}) v={v}")
    return CheckResult("duality-swap", tested, passed, tuple(failures))


def _check_connectivity_equivalence(n: int) -> CheckResult:
    tested = passed = 0
    failures = []
    for M in enumerate_clutters(n):
        tested += 1
        if graphview.graph_connected_iff_clutter_connected(M):
            passed += 1
        else:
            failures.append(f"M=({_inline(M)})")
    return CheckResult("connectivity-equivalence", tested, passed, tuple(failures))


def _check_twin_contraction(n: int) -> CheckResult:
    tested = passed = 0
    failures = []
    for M in enumerate_clutters(n):
        if not core.is_connected(M):
            continue
        G = graphview.incidence_graph(M)
        for v in sorted(M.ground):
            if not graphview.twins(G, v):
                continue
            tested += 1
            contracted = core.contract(M, v)
            ok = graphview.incidence_graph(contracted) == graphview.remove_black_vertex(
                G, v
            ) and core.is_connected(contracted)
            if ok:
                passed += 1
            else:
                failures.append(f"M=({_inline(M)}) v={v}")
    return CheckResult("twin-contraction", tested, passed, tuple(failures))


def _check_deletion_graph(n: int) -> CheckResult:
    tested = passed = 0
    failures = []
    for M in enumerate_clutters(n):
        G = graphview.incidence_graph(M)
        for v in sorted(M.ground):
            tested += 1
            direct = graphview.incidence_graph(core.delete(M, v))
            if direct == graphview.delete_closed_neighbourhood(G, v):
                passed += 1
            else:
                failures.append(f"M=({_inline(M)}) v={v}")
    return CheckResult("deletion-graph-correspondence", tested, passed, tuple(failures))


def verify_identities(n: int) -> VerificationReport:
    """Check the identity families over every clutter on exactly n elements:
    commutativity of deletion/contraction, blocker involution, the duality
    swap, the connectivity equivalence, twin contraction, and the
    deletion/graph correspondence."""
    if not 0 <= n <= 4:
        raise TooLarge(f"identity verification supports n between 0 and 4, got {n}")
    return VerificationReport(
        (
            _check_commutativity(n),
            _check_involution(n),
            _check_duality_swap(n),
            _check_connectivity_equivalence(n),
            _check_twin_contraction(n),
            _check_deletion_graph(n),
        )
    )
