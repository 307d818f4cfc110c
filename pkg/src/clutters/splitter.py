"""Splitter steps and chains.

Given connected clutters M and N with N a proper minor of M, find_splitter
looks for a single element whose deletion or contraction stays connected and
keeps N as a minor, and chain iterates that search down to N.  When no such
element exists the search raises TheoremCounterexample; counterexample_report
renders the full forensic picture of such a failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core, graphview, minor
from .core import Clutter, canonical_serialize
from .errors import PreconditionViolation, TheoremCounterexample

DELETE = "delete"
CONTRACT = "contract"


@dataclass(frozen=True)
class SplitterStep:
    element: str
    op: str  # DELETE or CONTRACT
    result: Clutter


@dataclass(frozen=True)
class SplitterChain:
    start: Clutter
    steps: tuple

    @property
    def final(self) -> Clutter:
        return self.steps[-1].result if self.steps else self.start


def _apply(M: Clutter, v: str, op: str) -> Clutter:
    return core.delete(M, v) if op == DELETE else core.contract(M, v)


def candidate_elements(M: Clutter, N: Clutter) -> list:
    """Candidate removal order: minimal black vertices first, then elements
    with twins, then the rest, ascending within each class.

    The classes mirror where connectivity-preserving removals tend to live;
    they affect only which witness is found, never whether one exists.
    """
    G = graphview.incidence_graph(M)
    pool = sorted(M.ground - N.ground)
    minimal = graphview.minimal_black_vertices(G)
    twinned = {v for v in pool if graphview.twins(G, v)}
    first = [v for v in pool if v in minimal]
    second = [v for v in pool if v not in minimal and v in twinned]
    third = [v for v in pool if v not in minimal and v not in twinned]
    return first + second + third


def find_splitter(M: Clutter, N: Clutter, check: bool = True) -> SplitterStep:
    """One connectivity- and minor-preserving removal step from M towards N.

    check=False skips the precondition validation; it exists so that
    counterexample_report exercises can run on deliberately bad inputs.
    """
    if check:
        if not core.is_connected(M):
            raise PreconditionViolation("M is not connected")
        if not core.is_connected(N):
            raise PreconditionViolation("N is not connected")
        if not minor.is_proper_minor(M, N):
            raise PreconditionViolation("N is not a proper minor of M")
    for v in candidate_elements(M, N):
        for op in (DELETE, CONTRACT):
            result = _apply(M, v, op)
            if core.is_connected(result) and minor.has_minor(result, N) is not None:
                return SplitterStep(v, op, result)
    raise TheoremCounterexample(
        "no single-element removal preserves connectivity and the minor", M, N
    )


def chain(M: Clutter, N: Clutter, check: bool = True) -> SplitterChain:
    """A chain of splitter steps from M down to exactly N."""
    if check:
        if not core.is_connected(M):
            raise PreconditionViolation("M is not connected")
        if not core.is_connected(N):
            raise PreconditionViolation("N is not connected")
        if minor.has_minor(M, N) is None:
            raise PreconditionViolation("N is not a minor of M")
    steps = []
    current = M
    while current != N:
        # current != N and N a minor of current imply N is a proper minor
        step = find_splitter(current, N, check=False)
        steps.append(step)
        current = step.result
    return SplitterChain(M, tuple(steps))


def chain_to_empty(M: Clutter) -> SplitterChain:
    """Reduce a connected clutter on a nonempty ground set to an empty-ground one.

    The target is the empty clutter, except when the sole row of M is empty:
    no minor of such a clutter ever loses that row, so the chain ends at the
    empty-ground clutter with one empty row instead.
    """
    if not M.ground:
        raise PreconditionViolation("ground set is already empty")
    if not core.is_connected(M):
        raise PreconditionViolation("M is not connected")
    if M.rows == frozenset({frozenset()}):
        target = Clutter(frozenset(), frozenset({frozenset()}))
    else:
        target = Clutter(frozenset(), frozenset())
    return chain(M, target)


def format_step(step: SplitterStep) -> str:
    """One step as text: the operation line, then the result indented."""
    body = "".join(
        "  " + line + "\n" for line in canonical_serialize(step.result).splitlines()
    )
    return f"{step.op} {step.element}\n{body}"


def format_chain(chain_value: SplitterChain) -> str:
    return "".join(format_step(step) for step in chain_value.steps)


def counterexample_report(M: Clutter, N: Clutter) -> str:
    """Forensic text for a failed splitter search.

    Lists, for every candidate element and operation, whether connectivity or
    minor containment failed, then the structural analysis of M's incidence
    graph: minimal black vertices, twins, and good components (minimal ones
    flagged).
    """
    out = ["splitter search failed: every candidate fails", "", "M:"]
    out += ["  " + ln for ln in canonical_serialize(M).splitlines()]
    out.append("N:")
    out += ["  " + ln for ln in canonical_serialize(N).splitlines()]
    out.append("")
    out.append("candidates:")
    pool = sorted(M.ground - N.ground)
    if not pool:
        out.append("  (none)")
    for v in pool:
        for op in (DELETE, CONTRACT):
            result = _apply(M, v, op)
            problems = []
            if not core.is_connected(result):
                problems.append("result disconnected")
            if minor.has_minor(result, N) is None:
                problems.append("target not a minor of result")
            out.append(f"  {op} {v}: " + ("; ".join(problems) or "works"))
    G = graphview.incidence_graph(M)
    out.append("")
    out.append("incidence graph analysis of M:")
    minimal = sorted(graphview.minimal_black_vertices(G))
    out.append("  minimal black vertices: " + (" ".join(minimal) or "-"))
    twin_lines = []
    for v in sorted(G.black):
        mates = sorted(graphview.twins(G, v))
        if mates:
            twin_lines.append(f"  twins of {v}: " + " ".join(mates))
    out += twin_lines or ["  twins: none"]
    flagged = {
        (u, comp) for u, comp in graphview.minimal_good_components(G)
    }
    out.append("  good components:")
    any_comp = False
    for u in minimal:
        for comp in graphview.good_components(G, u):
            any_comp = True
            names = " ".join(
                name for _, name in sorted(comp, key=graphview.vertex_sort_key)
            )
            mark = " (minimal)" if (u, comp) in flagged else ""
            out.append(f"    u={u}: {{{names}}}{mark}")
    if not any_comp:
        out.append("    (none)")
    return "\n".join(out) + "\n"
