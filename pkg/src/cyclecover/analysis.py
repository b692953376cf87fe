"""Branching-vector arithmetic and the branching-case catalog.

A branching vector lists how much the measure drops in each child of a search
node. Its branching number is the unique root x > 1 of sum(x^-a_i) = 1 and
bounds the search-tree growth as (number)^measure. Vectors are recorded in
extra-degree units as stated per case; halving converts to tau units because
removing two extra-degrees removes one independent cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EXTRA_DEGREE = "extra_degree"
TAU = "tau"

#: drops by two tau per branch, the headline worst case; root 1.15855
WORST_TAU_VECTOR = (3, 7)

#: claimed branching numbers for the sharpened tau-unit vectors
TAU_CLAIMS: tuple[tuple[tuple[int, ...], float], ...] = (
    ((3, 7), 1.15855),
    ((5, 9, 12), 1.1451),
    ((22, 19, 6, 5), 1.1574),
)


@dataclass(frozen=True)
class BranchingVector:
    components: tuple[int, ...]
    units: str = EXTRA_DEGREE

    def __post_init__(self):
        if not self.components:
            raise ValueError("a branching vector needs at least one component")
        if any(a < 1 for a in self.components):
            raise ValueError("components must be positive")
        if self.units not in (EXTRA_DEGREE, TAU):
            raise ValueError(f"unknown units {self.units!r}")

    def halved(self) -> "BranchingVector":
        """Convert extra-degree units to tau units (two extra-degrees per cycle)."""
        if self.units != EXTRA_DEGREE:
            raise ValueError("already in tau units")
        if any(a % 2 for a in self.components):
            raise ValueError(f"odd component in {self.components}, cannot halve exactly")
        return BranchingVector(tuple(a // 2 for a in self.components), TAU)


def branching_number(vector: BranchingVector | tuple[int, ...]) -> float:
    """Unique root x > 1 of sum(x^-a_i) = 1, by bisection to 1e-12."""
    comps = vector.components if isinstance(vector, BranchingVector) else tuple(vector)
    if len(comps) < 2:
        raise ValueError("a branching vector needs at least two components")
    if any(a < 1 for a in comps):
        raise ValueError("components must be positive")

    def f(x: float) -> float:
        return sum(x ** -a for a in comps) - 1.0

    lo = 1.0 + 1e-12  # f(lo) > 0 since the sum approaches len(comps) >= 2
    hi = 2.0
    while f(hi) > 0.0:
        hi *= 2.0
    # well inside the 1e-9 contract; keeps the defining residual tiny even
    # when components are large and the root sits close to 1
    while hi - lo > 1e-12:
        mid = (lo + hi) / 2.0
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def interleave_base(base: float, kernel_growth: float) -> tuple[float, float]:
    """Exponent split alpha and the resulting effective base when kernelization
    with growth factor kernel_growth is rerun every alpha-fraction of the budget.

    alpha solves base^(1-alpha) = kernel_growth^alpha * base^alpha.
    """
    if base <= 1.0:
        raise ValueError("base must exceed 1")
    if kernel_growth <= 1.0:
        raise ValueError("kernel_growth must exceed 1")
    alpha = math.log(base) / (math.log(kernel_growth) + 2.0 * math.log(base))
    effective = base ** (1.0 - alpha)
    return alpha, effective


@dataclass(frozen=True)
class CaseEntry:
    case_id: str
    description: str
    claimed_vectors: tuple[BranchingVector, ...]
    subgraph_classes: tuple[tuple[str, ...], ...]


def _entry(case_id, description, *pairs):
    vectors = tuple(BranchingVector(v) for v, _ in pairs)
    classes = tuple(c for _, c in pairs)
    return CaseEntry(case_id, description, vectors, classes)


def case_catalog() -> list[CaseEntry]:
    """Every stated branching vector of the degree-4/degree-3 case analysis,
    verbatim in extra-degree units, keyed by case label."""
    return [
        _entry(
            "b.1",
            "hub neighborhood shares a degree-3 vertex; branch on a degree-3 "
            "neighbor s whose third neighbor also has degree 3",
            ((10, 14), ("G4", "G3")),
            ((12, 12), ("G4", "G3")),
        ),
        _entry(
            "b.2",
            "same shape with deg(s) = 4",
            ((10, 16), ("G3", "G3")),
            ((12, 14), ("G3", "G3")),
        ),
        _entry(
            "d",
            "two shared degree-3 vertices around the hub; split on the degrees "
            "of the outside attachments f and g",
            ((14, 12), ("G4", "G3")),
            ((10, 16), ("G4", "G3")),
            ((12, 14), ("G4", "G3")),
            ((14, 14), ("G3", "G3")),
            ((10, 18), ("G3", "G3")),
            ((12, 16), ("G3", "G3")),
        ),
        _entry(
            "e.1a",
            "degree-4 vertex w tied to two degree-4 neighbors of the hub",
            ((6, 18), ("G4", "G3")),
        ),
        _entry(
            "e.1b",
            "w tied to two degree-3 neighbors; folding after the include branch "
            "builds a degree-6 vertex",
            ((6, 14), ("G6", "G3")),
        ),
        _entry(
            "e.1c.i",
            "mixed degrees on the tied pair, a degree-3 vertex next to s",
            ((6, 18), ("G4", "G3")),
        ),
        _entry(
            "e.1c.ii",
            "mixed degrees, both of s's other neighbors degree 4",
            ((6, 24), ("G3", "G3")),
        ),
        _entry(
            "g",
            "plain degree-4 branch when the exclude side keeps a degree-4 vertex",
            ((6, 14), ("G4", "G4")),
        ),
        _entry(
            "g.fig4",
            "exclude side all degree-3, paired second neighbors; two structions "
            "then a degree-7 branch on the include side",
            ((34, 12, 10), ("G3", "G4", "G4")),
        ),
        _entry(
            "j.pre",
            "3-regular worst pair kept by later subcases",
            ((4, 10), ("G4", "G4")),
        ),
        _entry(
            "j.pre2",
            "3-regular fallback pair",
            ((6, 14), ("G3", "G3")),
        ),
        _entry(
            "j.1",
            "single triangle at u; branch on the apex u'",
            ((8, 10), ("G4", "G3")),
        ),
        _entry(
            "j.1.ii",
            "apex include-side degenerate; branch on v4 instead",
            ((4, 12), ("G4", "G4")),
        ),
        _entry(
            "j.1a",
            "apex exclude-side pairing broken by an edge into v9",
            ((8, 14), ("G3", "G3")),
        ),
        _entry(
            "j.1b",
            "apex exclude-side fully paired; branch on v3",
            ((4, 14), ("G4", "G4")),
        ),
        _entry(
            "j.2",
            "triangle-free 3-regular branch on u",
            ((4, 10), ("G4", "G4")),
        ),
        _entry(
            "j.2.pentagon",
            "everything surrounded by pentagons; fold then branch on the shared "
            "second neighbor on each side",
            ((16, 10), ("G4", "G4")),
            ((14, 10), ("G4", "G4")),
        ),
        _entry(
            "j.2.final",
            "composite vector for the pentagon case",
            ((24, 20, 20, 14), ("G4", "G4", "G4", "G4")),
        ),
    ]
