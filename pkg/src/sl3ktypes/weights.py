"""Root and weight bookkeeping for the pair (SL3, SO(3)).

SL3 weights are written in fundamental-weight coordinates (a, b), so
dominant weights are exactly the pairs of nonnegative integers.  SO(3)
weights restrict to the rank-1 torus SO(2); we store them in *doubled*
integer units ("half-units") so that the half-integral rho of SO(3) is
representable without rational arithmetic.  An SO(3)-irrep label n (the
irrep of dimension 2n+1) corresponds to half_units = 2n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class KWeight:
    """A weight of the torus of SO(3), in doubled integer units."""

    half_units: int

    @classmethod
    def from_label(cls, n: int) -> "KWeight":
        """The weight of the SO(3)-irrep label n (dimension 2n+1)."""
        return cls(2 * n)

    @property
    def is_so3_label(self) -> bool:
        return self.half_units >= 0 and self.half_units % 2 == 0

    @property
    def label(self) -> int:
        if not self.is_so3_label:
            raise ValueError(f"{self} is not a valid SO(3)-irrep label")
        return self.half_units // 2

    def __add__(self, other: "KWeight") -> "KWeight":
        return KWeight(self.half_units + other.half_units)

    def __sub__(self, other: "KWeight") -> "KWeight":
        return KWeight(self.half_units - other.half_units)

    def __neg__(self) -> "KWeight":
        return KWeight(-self.half_units)

    def __mul__(self, n: int) -> "KWeight":
        return KWeight(self.half_units * n)

    __rmul__ = __mul__


@dataclass(frozen=True)
class GWeight:
    """An SL3 weight in fundamental-weight coordinates."""

    a: int
    b: int

    @property
    def is_dominant(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def __add__(self, other: "GWeight") -> "GWeight":
        return GWeight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "GWeight") -> "GWeight":
        return GWeight(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "GWeight":
        return GWeight(-self.a, -self.b)

    def __mul__(self, n: int) -> "GWeight":
        return GWeight(self.a * n, self.b * n)

    __rmul__ = __mul__


def restrict(gw: GWeight) -> KWeight:
    """Restrict an SL3 weight to the torus of SO(3): (a, b) -> a + b."""
    return KWeight(2 * (gw.a + gw.b))


# The two simple reflections of S3 acting in fundamental coordinates:
#   s1(a, b) = (-a, a+b),  s2(a, b) = (a+b, -b).
_S1 = ((-1, 0), (1, 1))
_S2 = ((1, 1), (0, -1))
_IDENT = ((1, 0), (0, 1))

Matrix = tuple[tuple[int, int], tuple[int, int]]


def _matmul(m: Matrix, n: Matrix) -> Matrix:
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )  # type: ignore[return-value]


def _apply(m: Matrix, gw: GWeight) -> GWeight:
    return GWeight(m[0][0] * gw.a + m[0][1] * gw.b,
                   m[1][0] * gw.a + m[1][1] * gw.b)


def weyl_act_g(word: Sequence[int], gw: GWeight) -> GWeight:
    """Act by the S3 element given as a word in the simple reflections.

    `word` is a sequence over {1, 2}; the rightmost letter acts first,
    so weyl_act_g((1, 2), v) computes s1(s2(v)).
    """
    m = _IDENT
    for letter in word:
        if letter == 1:
            m = _matmul(m, _S1)
        elif letter == 2:
            m = _matmul(m, _S2)
        else:
            raise ValueError(f"simple reflection index must be 1 or 2, got {letter}")
    return _apply(m, gw)


def _det(m: Matrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def weyl_elements_g() -> list[tuple[Matrix, int]]:
    """All six elements of the SL3 Weyl group as (matrix, sign) pairs."""
    seen: dict[Matrix, int] = {_IDENT: 1}
    frontier = [_IDENT]
    while frontier:
        nxt = []
        for m in frontier:
            for gen in (_S1, _S2):
                prod = _matmul(gen, m)
                if prod not in seen:
                    seen[prod] = _det(prod)
                    nxt.append(prod)
        frontier = nxt
    assert len(seen) == 6
    return sorted(seen.items())


def weyl_apply_matrix(m: Matrix, gw: GWeight) -> GWeight:
    return _apply(m, gw)


def weyl_act_k(w: str, kw: KWeight) -> KWeight:
    """Act by the Weyl group of SO(3): 'e' fixes, 's' negates."""
    if w == "e":
        return kw
    if w == "s":
        return -kw
    raise ValueError(f"W_K element must be 'e' or 's', got {w!r}")


@dataclass(frozen=True)
class RootData:
    """The fixed root data of the pair, shared by every other module."""

    pos_roots_g: tuple[GWeight, ...]
    pos_roots_g_restricted_minus_k: tuple[KWeight, ...]
    pos_root_k: KWeight
    rho_g: GWeight
    rho_k: KWeight
    # Pairing of the chosen coweight tau with a KWeight is tau * half_units.
    tau: int

    def tau_pairing(self, kw: KWeight) -> int:
        return self.tau * kw.half_units


ROOT_DATA = RootData(
    pos_roots_g=(GWeight(2, -1), GWeight(-1, 2), GWeight(1, 1)),
    pos_roots_g_restricted_minus_k=(KWeight(2), KWeight(4)),
    pos_root_k=KWeight(2),
    rho_g=GWeight(1, 1),
    rho_k=KWeight(1),
    tau=1,
)


def multiset(weights: Iterable[KWeight]) -> tuple[KWeight, ...]:
    """Canonical (sorted) form of a multiset of K-weights."""
    return tuple(sorted(weights))
