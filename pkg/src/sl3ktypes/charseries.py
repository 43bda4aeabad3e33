"""Series-direction bookkeeping and the torus-level multiplicity route.

A generic coweight tau splits a multiset of torus weights into the
tau-negative part (whose geometric series must be flipped, picking up a
sign and a shift) and the tau-positive part.  Applying this to each
fixed-point datum of a localization table gives virtual torus-level
multiplicities per grading slice d; differencing adjacent torus weights
then extracts genuine SO(3)-multiplicities, giving a pipeline
independent of the direct formula in the orbits module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, TYPE_CHECKING

from .vecpart import GradedGenerator, GradedTarget, kappa_graded
from .weights import KWeight, multiset

if TYPE_CHECKING:
    from .orbits import FixedPointDatum, LocalizationTable


class NonGenericCoweightError(ValueError):
    """A weight paired to zero with the chosen coweight."""


@dataclass(frozen=True)
class TauSetup:
    """Index, shift and positivized weights of a multiset under tau."""

    down: tuple[KWeight, ...]
    ind: int
    rho_v: KWeight
    wts_plus: tuple[KWeight, ...]


def tau_setup(wts: Iterable[KWeight], tau: int = 1) -> TauSetup:
    """Split a weight multiset by the sign of its pairing with tau."""
    down = []
    plus = []
    for w in wts:
        pairing = tau * w.half_units
        if pairing == 0:
            raise NonGenericCoweightError(f"weight {w} pairs to zero with tau")
        if pairing < 0:
            down.append(w)
            plus.append(-w)
        else:
            plus.append(w)
    down_ms = multiset(down)
    rho_v = KWeight(sum(w.half_units for w in down_ms))
    return TauSetup(down=down_ms, ind=len(down_ms), rho_v=rho_v, wts_plus=multiset(plus))


def tk_term(fp: "FixedPointDatum", codim: int, j: KWeight, d: int) -> int:
    """One fixed point's signed contribution to the torus-level multiplicity.

    Unlike the K-level engine, the positive K-roots are *not* removed
    from the generator multiset here.
    """
    setup = tau_setup(fp.wts_X)
    comp_sum = sum((mu for mu in fp.complement), KWeight(0))
    target_wt = j - fp.wt_L - setup.rho_v - comp_sum
    target = GradedTarget((target_wt.half_units,), d - codim)
    gens = [GradedGenerator(((-mu).half_units,), 0) for mu in setup.wts_plus]
    gens += [GradedGenerator((mu.half_units,), 1) for mu in fp.complement]
    sign = -1 if setup.ind % 2 else 1
    return sign * kappa_graded(target, gens, functional=(1,))


@lru_cache(maxsize=None)
def tk_mult(table: "LocalizationTable", j: KWeight, d: int) -> int:
    """Virtual torus-times-grading multiplicity at (j, d), summed over fixed points."""
    return sum(tk_term(fp, table.codim, j, d) for fp in table.rows)


def k_mults_from_tk(table: "LocalizationTable", lam: int, d: int) -> int:
    """SO(3)-multiplicity of label lam in grading slice d, by torus differencing.

    Valid because each SO(3)-irrep n has torus weights -n..n once each,
    so mult(lam) = m_T(lam) - m_T(lam + 1).
    """
    if lam < 0:
        raise ValueError("SO(3) label must be nonnegative")
    j = KWeight.from_label(lam)
    return tk_mult(table, j, d) - tk_mult(table, j + KWeight(2), d)
