"""Labeled minor containment and exhaustive minor enumeration.

A minor keeps its labels: N is a minor of M when E(N) is a subset of E(M)
and some split of the remaining elements into deletions and contractions
turns M into exactly N.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from .core import Clutter, MinorSpec, apply_minor

_KEEP, _DELETE, _CONTRACT = 0, 1, 2


def _spec_for(elems: list, assignment: tuple) -> MinorSpec:
    deletes = frozenset(e for e, a in zip(elems, assignment) if a == _DELETE)
    contracts = frozenset(e for e, a in zip(elems, assignment) if a == _CONTRACT)
    return MinorSpec(deletes, contracts)


def has_minor(M: Clutter, N: Clutter) -> Optional[MinorSpec]:
    """A witness spec turning M into N, or None.

    Assignments of the removed elements are tried as a base-2 counter over
    ascending labels with delete before contract, and the first hit wins, so
    the witness is deterministic.  M is a minor of itself via the empty spec.
    """
    if not N.ground <= M.ground:
        return None
    removed = sorted(M.ground - N.ground)
    for assignment in itertools.product((_DELETE, _CONTRACT), repeat=len(removed)):
        spec = _spec_for(removed, assignment)
        if apply_minor(M, spec) == N:
            return spec
    return None


def is_proper_minor(M: Clutter, N: Clutter) -> bool:
    """True iff N is a minor of M produced by at least one removal."""
    return N.ground < M.ground and has_minor(M, N) is not None


def all_minors(M: Clutter) -> Iterator[tuple]:
    """Every (spec, minor) over the 3^|E| keep/delete/contract assignments.

    Deterministic: assignments run as a base-3 counter over ascending
    elements with keep < delete < contract.
    """
    elems = sorted(M.ground)
    for assignment in itertools.product(
        (_KEEP, _DELETE, _CONTRACT), repeat=len(elems)
    ):
        spec = _spec_for(elems, assignment)
        yield spec, apply_minor(M, spec)
