"""Counterexample records returned by the identity predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Witness:
    """A failing basis input together with its nonzero defect.

    ``indices`` are 1-based basis indices: a triple (i, j, k) for trilinear
    algebra identities, a pair for bilinear ones, a single index for
    coalgebra identities checked per basis vector.  ``defect`` is the value
    of the violated identity there: a coordinate tuple, a matrix (tuple of
    row tuples) or a Tensor3.  ``note`` optionally names the permutation or
    clause that failed.
    """

    indices: tuple[int, ...]
    defect: Any
    note: str = ""
