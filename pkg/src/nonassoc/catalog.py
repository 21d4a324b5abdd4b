"""Named example structures with frozen verdict tables.

Every expected value below was computed with the independent brute-force
evaluator in the test suite before being committed; the smoke tests replay
them against the live predicates.  NLA is a pseudo-randomly drawn
3-dimensional algebra (seed 1, integer constants in [-2, 2]) kept because
it fails every predicate; its dual fails every coalgebra predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Union

from .algebra import Algebra
from .coalgebra import Coalgebra
from .duality import dual_coalgebra


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "algebra" | "coalgebra"
    structure: Union[Algebra, Coalgebra]
    expected: dict[str, bool]
    description: str = ""
    # recorded witness indices for selected failing predicates
    expected_witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)


D = Algebra.from_entries(2, {(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 2): 1})
L = Algebra.from_entries(2, {(1, 2, 2): 1, (2, 1, 2): -1})
W = Algebra.from_entries(2, {(1, 2, 1): 1, (2, 2, 2): 1})
ZERO_ALGEBRA = Algebra.zero(2)

NLA = Algebra.from_entries(
    3,
    {
        (1, 1, 1): -1, (1, 1, 2): 2, (1, 1, 3): -2,
        (1, 2, 2): -2, (1, 2, 3): 1,
        (1, 3, 1): 1, (1, 3, 2): 1, (1, 3, 3): 1,
        (2, 1, 1): -1, (2, 1, 2): -2, (2, 1, 3): 1,
        (2, 2, 1): -2, (2, 2, 2): 1, (2, 2, 3): 1,
        (2, 3, 1): 2, (2, 3, 2): -2, (2, 3, 3): 1,
        (3, 1, 2): -1, (3, 1, 3): 2,
        (3, 2, 1): -2, (3, 2, 3): -2,
        (3, 3, 1): -2, (3, 3, 2): -2, (3, 3, 3): 2,
    },
)

D_STAR = dual_coalgebra(D)
L_STAR = dual_coalgebra(L)
W_STAR = dual_coalgebra(W)
ZERO_COALGEBRA = Coalgebra.zero(2)
NLA_STAR = dual_coalgebra(NLA)


def _alg_expect(**overrides) -> dict[str, bool]:
    base = {name: True for name in
            ["G1", "G2", "G3", "G4", "G5", "G6", "lie-admissible", "power3",
             "G2!", "G3!", "G4!", "G5!", "G6!", "commutator-lie"]}
    base.update(overrides)
    return base


def _co_expect(**overrides) -> dict[str, bool]:
    base = {name: True for name in
            ["G1", "G2", "G3", "G4", "G5", "G6", "lie-admissible",
             "G1!", "G2!", "G3!", "G4!", "G5!", "G6!", "lie"]}
    base.update(overrides)
    return base


_FALSE_ALG = {k: False for k in _alg_expect()}
_FALSE_CO = {k: False for k in _co_expect()}


def catalog_entries() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            "D", "algebra", D,
            _alg_expect(),
            "dual numbers: commutative associative, e2 squares to zero",
        ),
        CatalogEntry(
            "L", "algebra", L,
            _alg_expect(**{"G1": False, "G2": False, "G3": False, "G4": False,
                           "G2!": False, "G3!": False, "G4!": False,
                           "G5!": False, "G6!": False}),
            "2-dim Lie bracket [e1,e2] = e2",
            expected_witnesses={"G1": (1, 1, 2)},
        ),
        CatalogEntry(
            "W", "algebra", W,
            _alg_expect(**{"G2!": False, "G4!": False, "G5!": False, "G6!": False}),
            "affine vector fields on the line under f.g = (f g')",
        ),
        CatalogEntry("0A", "algebra", ZERO_ALGEBRA, _alg_expect(), "zero product"),
        CatalogEntry(
            "NLA", "algebra", NLA,
            dict(_FALSE_ALG),
            "seeded random 3-dim algebra failing every predicate",
            expected_witnesses={"G6": (1, 2, 3)},
        ),
        CatalogEntry(
            "D*", "coalgebra", D_STAR,
            _co_expect(lie=False),
            "dual of the dual numbers: cocommutative coassociative",
        ),
        CatalogEntry(
            "L*", "coalgebra", L_STAR,
            _co_expect(**{"G1": False, "G2": False, "G3": False, "G4": False,
                          "G1!": False, "G2!": False, "G3!": False,
                          "G4!": False, "G5!": False, "G6!": False}),
            "dual of the 2-dim Lie bracket: anticommutative coproduct",
        ),
        CatalogEntry(
            "W*", "coalgebra", W_STAR,
            _co_expect(**{"G2!": False, "G4!": False, "G5!": False, "G6!": False,
                          "lie": False}),
            "dual of the affine vector-field algebra",
        ),
        CatalogEntry("0C", "coalgebra", ZERO_COALGEBRA, _co_expect(), "zero coproduct"),
        CatalogEntry(
            "NLA*", "coalgebra", NLA_STAR,
            dict(_FALSE_CO),
            "dual of NLA: fails every coalgebra predicate",
        ),
    ]


def entry(name: str) -> CatalogEntry:
    for e in catalog_entries():
        if e.name == name:
            return e
    raise KeyError(name)


_FIXTURE_NAMES = {"D*": "Dstar", "L*": "Lstar", "W*": "Wstar", "NLA*": "NLAstar"}


def fixture_path(name: str) -> Path:
    """Path of the shipped fixture file for a catalog entry name."""
    fname = _FIXTURE_NAMES.get(name, name) + ".json"
    return Path(str(resources.files("nonassoc") / "fixtures" / fname))
