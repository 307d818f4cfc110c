"""Clutters and their minors.

A clutter is a finite ground set together with a family of pairwise
incomparable subsets, called rows.  Deleting an element drops it from the
ground set along with every row containing it; contracting an element strips
it from every row and keeps only the inclusion-minimal results.  Both
operations preserve the antichain property, and their order never matters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import (
    AntichainViolation,
    BadLabel,
    DuplicateLabel,
    ElementNotFound,
    ForeignElement,
    InvalidSpec,
    ParseError,
)

Row = frozenset  # rows are frozensets of element labels


def row_sort_key(row: frozenset) -> tuple:
    """Canonical row order: by cardinality, then by ascending member labels."""
    return (len(row), tuple(sorted(row)))


@dataclass(frozen=True)
class Clutter:
    """Immutable clutter value; construct through new_clutter or parse_clutter."""

    ground: frozenset
    rows: frozenset

    def __repr__(self) -> str:
        g = " ".join(sorted(self.ground))
        rs = ", ".join(
            "{" + " ".join(sorted(r)) + "}" for r in sorted(self.rows, key=row_sort_key)
        )
        return f"Clutter([{g}] {rs})"


@dataclass(frozen=True)
class Separation:
    """A bipartition of the ground set with every row inside one part."""

    left: frozenset
    right: frozenset


@dataclass(frozen=True)
class MinorSpec:
    """Disjoint delete/contract element sets describing a minor."""

    deletes: frozenset
    contracts: frozenset

    def __repr__(self) -> str:
        d = " ".join(sorted(self.deletes)) or "-"
        c = " ".join(sorted(self.contracts)) or "-"
        return f"MinorSpec(deletes {d}, contracts {c})"


def _check_label(label) -> str:
    if not isinstance(label, str) or not label:
        raise BadLabel(f"labels must be non-empty text, got {label!r}")
    if any(ch.isspace() for ch in label) or "," in label or label == "-":
        # whitespace breaks the line format, ',' breaks row keys, '-' is the
        # empty-row marker; all three would destroy serialization round-trips
        raise BadLabel(f"label {label!r} contains a reserved character")
    return label


def new_clutter(ground: Iterable[str], rows: Iterable[Iterable[str]]) -> Clutter:
    """Validate raw input and build a clutter.

    Raises BadLabel, DuplicateLabel, ForeignElement or AntichainViolation.
    """
    labels = [_check_label(e) for e in ground]
    if len(labels) != len(set(labels)):
        dupes = sorted({e for e in labels if labels.count(e) > 1})
        raise DuplicateLabel(f"duplicated labels: {' '.join(dupes)}")
    ground_set = frozenset(labels)
    row_sets = frozenset(frozenset(r) for r in rows)
    for r in row_sets:
        for e in r:
            if e not in ground_set:
                raise ForeignElement(f"row member {e!r} is not a ground element")
    ordered = sorted(row_sets, key=row_sort_key)
    for i, small in enumerate(ordered):
        for big in ordered[i + 1 :]:
            if small < big:
                raise AntichainViolation(
                    f"row {{{' '.join(sorted(small))}}} is contained in "
                    f"{{{' '.join(sorted(big))}}}"
                )
    return Clutter(ground_set, row_sets)


def delete(M: Clutter, v: str) -> Clutter:
    """Remove v from the ground set and discard every row containing it."""
    if v not in M.ground:
        raise ElementNotFound(f"no element {v!r}")
    return Clutter(M.ground - {v}, frozenset(A for A in M.rows if v not in A))


def minimal_sets(sets: Iterable[frozenset]) -> frozenset:
    """The inclusion-minimal members of a family of sets."""
    kept = []
    for s in sorted(set(sets), key=row_sort_key):
        if not any(t <= s for t in kept):
            kept.append(s)
    return frozenset(kept)


def contract(M: Clutter, v: str) -> Clutter:
    """Strip v from every row and keep the inclusion-minimal results."""
    if v not in M.ground:
        raise ElementNotFound(f"no element {v!r}")
    return Clutter(M.ground - {v}, minimal_sets(A - {v} for A in M.rows))


def apply_minor(M: Clutter, spec: MinorSpec) -> Clutter:
    """Apply a minor spec in the canonical order: deletions first, ascending label.

    Any interleaving gives the same result, so the canonical choice is safe.
    """
    deletes = frozenset(spec.deletes)
    contracts = frozenset(spec.contracts)
    if deletes & contracts:
        raise InvalidSpec("delete and contract sets overlap")
    if not deletes <= M.ground or not contracts <= M.ground:
        raise InvalidSpec("spec mentions elements outside the ground set")
    out = M
    for v in sorted(deletes):
        out = delete(out, v)
    for v in sorted(contracts):
        out = contract(out, v)
    return out


def _lex_subsets(elems: list) -> Iterator[tuple]:
    """All subsets of a sorted list, in lexicographic order of their sorted tuples."""
    yield from sorted(
        itertools.chain.from_iterable(
            itertools.combinations(elems, r) for r in range(len(elems) + 1)
        )
    )


def find_separation(M: Clutter) -> Optional[Separation]:
    """A witness separation, or None if the clutter is connected.

    Deterministic: candidate left parts containing the least element are tried
    in lexicographic order and the first valid one wins.
    """
    if len(M.ground) <= 1:
        return None
    elems = sorted(M.ground)
    least, rest = elems[0], elems[1:]
    for combo in _lex_subsets(rest):
        left = frozenset((least,) + combo)
        if len(left) == len(elems):
            continue
        right = M.ground - left
        if all(A <= left or A <= right for A in M.rows):
            return Separation(left, right)
    return None


def is_connected(M: Clutter) -> bool:
    """True iff the clutter admits no separation."""
    return find_separation(M) is None


def canonical_serialize(M: Clutter) -> str:
    """Bit-exact canonical text; equal clutters serialize identically.

    Line 1 lists the ground ascending; each row line lists members ascending,
    with the empty row written as 'row -'.  Rows are ordered by cardinality,
    then lexicographically.
    """
    lines = ["elements" + "".join(" " + e for e in sorted(M.ground))]
    for row in sorted(M.rows, key=row_sort_key):
        lines.append("row " + (" ".join(sorted(row)) if row else "-"))
    return "\n".join(lines) + "\n"


def parse_clutter(text: str) -> Clutter:
    """Parse the canonical clutter format; '#' lines and blank lines are ignored."""
    lines = [
        ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")
    ]
    if not lines:
        raise ParseError("no content: expected an 'elements' line")
    head = lines[0].split()
    if head[0] != "elements":
        raise ParseError(f"first line must start with 'elements', got {lines[0]!r}")
    ground = head[1:]
    rows = []
    for ln in lines[1:]:
        tokens = ln.split()
        if tokens[0] != "row":
            raise ParseError(f"expected a 'row' line, got {ln!r}")
        if len(tokens) == 1:
            raise ParseError("empty row must be written 'row -'")
        rows.append([] if tokens[1:] == ["-"] else tokens[1:])
    return new_clutter(ground, rows)
