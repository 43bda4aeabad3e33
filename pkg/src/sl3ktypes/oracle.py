"""Brute-force ground truth: SL3 weight multiplicities and SO(3) branching.

Weight multiplicities of finite-dimensional SL3-irreps come from the
alternating-sum multiplicity formula over the positive-root partition
function; branching to SO(3) restricts every weight of the diagram to
the rank-1 torus and differences adjacent restricted multiplicities.
This validates the open-orbit case of the other two pipelines end to
end, with an entirely different failure profile.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .vecpart import kappa_total
from .weights import GWeight, ROOT_DATA, weyl_apply_matrix, weyl_elements_g

_POS_ROOTS = tuple((r.a, r.b) for r in ROOT_DATA.pos_roots_g)
# Pairs each positive root to 1, 1, 2: a valid half-space functional.
_FUNCTIONAL = (1, 1)


@dataclass(frozen=True)
class WeightDiagram:
    hw: GWeight
    mults: dict[GWeight, int]

    def total_dim(self) -> int:
        return sum(self.mults.values())


def weyl_dim(a: int, b: int) -> int:
    """Dimension of the SL3-irrep with highest weight (a, b)."""
    if a < 0 or b < 0:
        raise ValueError("highest weight must be dominant")
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def kostant_weight_mult(a: int, b: int, mu: GWeight) -> int:
    """Weight multiplicity of mu in the irrep with highest weight (a, b)."""
    if a < 0 or b < 0:
        raise ValueError("highest weight must be dominant")
    hw_rho = GWeight(a, b) + ROOT_DATA.rho_g
    mu_rho = mu + ROOT_DATA.rho_g
    total = 0
    for matrix, sign in weyl_elements_g():
        target = weyl_apply_matrix(matrix, hw_rho) - mu_rho
        total += sign * kappa_total((target.a, target.b), _POS_ROOTS, _FUNCTIONAL)
    return total


@lru_cache(maxsize=None)
def weight_diagram(a: int, b: int) -> WeightDiagram:
    """All weights of the irrep with their multiplicities.

    Candidates range over the box |coordinate| <= a + b + 2 in
    fundamental coordinates, which contains the weight polytope.
    """
    bound = a + b + 2
    mults: dict[GWeight, int] = {}
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            mu = GWeight(x, y)
            m = kostant_weight_mult(a, b, mu)
            if m:
                mults[mu] = m
    return WeightDiagram(hw=GWeight(a, b), mults=mults)


@lru_cache(maxsize=None)
def _restricted_mults(a: int, b: int) -> dict[int, int]:
    """Torus multiplicities after restricting every weight via (x, y) -> x + y."""
    out: dict[int, int] = {}
    for mu, m in weight_diagram(a, b).mults.items():
        out[mu.a + mu.b] = out.get(mu.a + mu.b, 0) + m
    return out


def branch_so3(a: int, b: int, n: int) -> int:
    """Multiplicity of the SO(3)-irrep of dimension 2n+1 in the restriction."""
    if n < 0:
        raise ValueError("SO(3) label must be nonnegative")
    mr = _restricted_mults(a, b)
    return mr.get(n, 0) - mr.get(n + 1, 0)
