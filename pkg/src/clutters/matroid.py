"""Circuit-presented matroids as clutter sources.

Matroids here exist only to feed fixtures into the clutter machinery: a
matroid is its ground set plus its family of circuits, bases and duals are
derived by brute force over subsets, and the circuit axioms are checked
exhaustively at construction.  Intended for grounds of a dozen elements or
fewer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from . import core
from .core import Clutter, new_clutter, row_sort_key
from .errors import BadRank, CircuitAxiomViolation, GroundOverlap, ParseError


@dataclass(frozen=True)
class CircuitMatroid:
    ground: frozenset
    circuits: frozenset


def new_matroid(ground: Iterable[str], circuits: Iterable[Iterable[str]]) -> CircuitMatroid:
    """Validate labels, the antichain property, and circuit elimination."""
    as_clutter = new_clutter(ground, circuits)
    circuit_sets = as_clutter.rows
    if frozenset() in circuit_sets:
        raise CircuitAxiomViolation("the empty set cannot be a circuit")
    ordered = sorted(circuit_sets, key=row_sort_key)
    for C1, C2 in itertools.combinations(ordered, 2):
        for e in C1 & C2:
            union_minus = (C1 | C2) - {e}
            if not any(C3 <= union_minus for C3 in circuit_sets):
                raise CircuitAxiomViolation(
                    f"no circuit inside ({{{' '.join(sorted(C1))}}} | "
                    f"{{{' '.join(sorted(C2))}}}) - {e}"
                )
    return CircuitMatroid(as_clutter.ground, circuit_sets)


def circuits_clutter(N: CircuitMatroid) -> Clutter:
    """The clutter whose rows are the circuits of N."""
    return Clutter(N.ground, N.circuits)


def _independent(N: CircuitMatroid, S: frozenset) -> bool:
    return not any(C <= S for C in N.circuits)


def bases(N: CircuitMatroid) -> frozenset:
    """Maximal circuit-free subsets, by brute force over all subsets."""
    elems = sorted(N.ground)
    independents = [
        frozenset(combo)
        for r in range(len(elems) + 1)
        for combo in itertools.combinations(elems, r)
        if _independent(N, frozenset(combo))
    ]
    top = max(len(S) for S in independents)  # all bases are equicardinal
    return frozenset(S for S in independents if len(S) == top)


def dual(N: CircuitMatroid) -> CircuitMatroid:
    """The dual matroid: circuits are the minimal nonempty sets meeting every
    basis of N.  Result is re-validated against the circuit axioms."""
    basis_family = bases(N)
    elems = sorted(N.ground)
    kept = []
    for r in range(1, len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            S = frozenset(combo)
            if any(t <= S for t in kept):
                continue
            if all(S & B for B in basis_family):
                kept.append(S)
    return new_matroid(N.ground, kept)


def direct_sum(N1: CircuitMatroid, N2: CircuitMatroid) -> CircuitMatroid:
    """Disjoint union of grounds and circuits."""
    overlap = N1.ground & N2.ground
    if overlap:
        raise GroundOverlap(f"shared elements: {' '.join(sorted(overlap))}")
    return new_matroid(N1.ground | N2.ground, N1.circuits | N2.circuits)


def uniform(r: int, n: int, labels: Optional[Iterable[str]] = None) -> CircuitMatroid:
    """The uniform matroid of rank r on n elements: circuits are all
    (r+1)-subsets.  Default labels are '1'..'n'."""
    if not 0 <= r <= n:
        raise BadRank(f"rank {r} not in 0..{n}")
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    labels = list(labels)
    if len(labels) != n:
        raise BadRank(f"expected {n} labels, got {len(labels)}")
    circuits = [set(combo) for combo in itertools.combinations(sorted(labels), r + 1)]
    return new_matroid(labels, circuits)


# Cycle space of the complete graph on four vertices a,b,c,d: one label per
# edge, four triangles and three 4-cycles.
_K4_CIRCUITS = (
    ("ab", "ac", "bc"),
    ("ab", "ad", "bd"),
    ("ac", "ad", "cd"),
    ("bc", "bd", "cd"),
    ("ab", "ac", "bd", "cd"),
    ("ab", "ad", "bc", "cd"),
    ("ac", "ad", "bc", "bd"),
)


def k4_graphic_matroid() -> CircuitMatroid:
    """The graphic matroid of the complete graph K4, over its six edge labels."""
    return new_matroid(("ab", "ac", "ad", "bc", "bd", "cd"), _K4_CIRCUITS)


def is_connected(N: CircuitMatroid) -> bool:
    """Direct definition: no bipartition of the ground keeps every circuit
    inside one part.  Independent of the clutter-side connectivity check."""
    elems = sorted(N.ground)
    if len(elems) <= 1:
        return True
    rest = elems[1:]
    for k in range(len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            left = frozenset((elems[0],) + combo)
            right = N.ground - left
            if not right:
                continue
            if all(C <= left or C <= right for C in N.circuits):
                return False
    return True


MATROID_HEADER = "matroid-circuits"


def serialize_matroid(N: CircuitMatroid) -> str:
    """Matroid fixture text: a header line, then the circuit clutter."""
    return MATROID_HEADER + "\n" + core.canonical_serialize(circuits_clutter(N))


def parse_matroid(text: str) -> CircuitMatroid:
    """Parse the fixture format; circuit axioms are validated on load."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0].strip() != MATROID_HEADER:
        raise ParseError(f"first line must be '{MATROID_HEADER}'")
    as_clutter = core.parse_clutter("\n".join(lines[1:]))
    return new_matroid(as_clutter.ground, as_clutter.rows)
