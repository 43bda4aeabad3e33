"""Positive (cancellation-free) counting formula for the multiplicities.

The lattice set C depends on the twist (a, b) only through parities; it
splits into four regions, one per orbit closure, and the fiber of the
projection (c, d) -> c + d over n inside a region counts the SO(3)-irrep
of label n in the corresponding module.  A projection-preserving
bijection C(a, b) -> C(b, a) swaps the two middle regions.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .orbits import Orbit


class RegionPoint(NamedTuple):
    c: int
    d: int


class Region(enum.Enum):
    FULL_FLAG = "full_flag"
    O1 = "o1"
    O2 = "o2"
    CLOSED_ORBIT = "closed_orbit"
    NOT_IN_C = "not_in_c"


REGION_FOR_ORBIT = {
    Orbit.OPEN: Region.FULL_FLAG,
    Orbit.O1: Region.O1,
    Orbit.O2: Region.O2,
    Orbit.CLOSED: Region.CLOSED_ORBIT,
}


def in_C(p: RegionPoint, a: int, b: int) -> bool:
    """Membership in C: c matches a's parity; on the c = 0 wall, d matches b's."""
    if p.c < 0 or p.d < 0:
        return False
    if (p.c - a) % 2 != 0:
        return False
    if p.c == 0 and (p.d - b) % 2 != 0:
        return False
    return True


def classify(p: RegionPoint, a: int, b: int) -> Region:
    if not in_C(p, a, b):
        return Region.NOT_IN_C
    if p.c <= a:
        return Region.FULL_FLAG if p.d <= b else Region.O2
    return Region.O1 if p.d <= b else Region.CLOSED_ORBIT


def fiber_points(a: int, b: int, n: int) -> list[RegionPoint]:
    """All points of C over n under the projection (c, d) -> c + d."""
    return [p for c in range(n + 1)
            if in_C(p := RegionPoint(c, n - c), a, b)]


def fiber_count(a: int, b: int, n: int) -> int:
    return len(fiber_points(a, b, n))


def mult_positive(region: Region, a: int, b: int, n: int) -> int:
    """Multiplicity of the SO(3)-irrep of label n by counting fiber points."""
    if n < 0:
        raise ValueError("SO(3) label must be nonnegative")
    return sum(1 for p in fiber_points(a, b, n) if classify(p, a, b) is region)


def duality(p: RegionPoint, a: int, b: int) -> RegionPoint:
    """The projection-preserving bijection C(a, b) -> C(b, a).

    Swaps coordinates when d matches b's parity; otherwise the swapped
    point would land on an excluded parity line and is nudged to
    (d + 1, c - 1).  The second branch only ever applies with c >= 1,
    since c = 0 forces d to match b's parity inside C.
    """
    if not in_C(p, a, b):
        raise ValueError(f"{p} is not in C for (a, b) = ({a}, {b})")
    if (p.d - b) % 2 == 0:
        return RegionPoint(p.d, p.c)
    return RegionPoint(p.d + 1, p.c - 1)
