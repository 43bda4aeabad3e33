"""Table-driven localization engine for the four SO(3)-orbit closures.

Each orbit closure on the SL3 flag manifold is encoded as a small table
of fixed-point data (restricted line-bundle weight, tangent weights,
conormal-complement weights, index and shift).  Evaluating a signed
graded vector partition function per row and summing gives the
multiplicity of each SO(3)-irrep in each grading slice d, with the
grading vanishing below the orbit codimension.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .charseries import tau_setup
from .vecpart import GradedGenerator, GradedTarget, kappa_graded, kappa_total
from .weights import GWeight, KWeight, ROOT_DATA, multiset, restrict, weyl_act_k


class Orbit(enum.Enum):
    CLOSED = "closed"
    O1 = "o1"
    O2 = "o2"
    OPEN = "open"
    CUSTOM = "custom"


class Method(enum.Enum):
    POSITIVE = "positive"
    LOCALIZATION = "localization"
    TSERIES = "tseries"
    ORACLE = "oracle"
    BLATTNER_CLOSED = "blattner"


class TableInvariantError(ValueError):
    """A constructed fixed-point row contradicts its stored data."""


class DCutoffError(AssertionError):
    """A grading slice beyond the summation cutoff was nonzero."""


@dataclass(frozen=True)
class FixedPointDatum:
    label: str
    wt_L: KWeight
    wts_X: tuple[KWeight, ...]
    complement: tuple[KWeight, ...]
    ind: int
    rho_fx: KWeight


@dataclass(frozen=True)
class LocalizationTable:
    orbit: Orbit
    a: int
    b: int
    codim: int
    rows: tuple[FixedPointDatum, ...]

    def __post_init__(self) -> None:
        expected = {Orbit.CLOSED: 2, Orbit.O1: 4, Orbit.O2: 4, Orbit.OPEN: 6}
        if self.orbit in expected and len(self.rows) != expected[self.orbit]:
            raise TableInvariantError(
                f"{self.orbit} table must have {expected[self.orbit]} rows")
        for fp in self.rows:
            _check_row(fp, self.codim)


@dataclass(frozen=True)
class MultTable:
    orbit: Orbit
    a: int
    b: int
    method: Method
    mults: dict[int, int] = field(compare=False)

    def __post_init__(self) -> None:
        bad = {n: m for n, m in self.mults.items() if m < 0}
        if bad:
            raise ValueError(f"negative multiplicities: {bad}")


def _check_row(fp: FixedPointDatum, codim: int) -> None:
    if any(w.half_units == 0 for w in fp.wts_X):
        raise TableInvariantError(f"row {fp.label}: zero tangent weight")
    if any(w.half_units == 0 for w in fp.complement):
        raise TableInvariantError(f"row {fp.label}: zero complement weight")
    if len(fp.complement) != codim:
        raise TableInvariantError(
            f"row {fp.label}: complement size {len(fp.complement)} != codim {codim}")
    setup = tau_setup(fp.wts_X, ROOT_DATA.tau)
    if setup.ind != fp.ind or setup.rho_v != fp.rho_fx:
        raise TableInvariantError(
            f"row {fp.label}: stored (ind, rho) = ({fp.ind}, {fp.rho_fx}) "
            f"but recomputed ({setup.ind}, {setup.rho_v})")
    if _remove_k_roots(setup.wts_plus) is None:
        raise TableInvariantError(
            f"row {fp.label}: positivized tangent weights do not contain "
            f"the positive K-roots")


def _remove_k_roots(wts_plus: tuple[KWeight, ...]) -> tuple[KWeight, ...] | None:
    """Remove one copy of each positive K-root; None if some copy is missing."""
    remaining = list(wts_plus)
    for root in (ROOT_DATA.pos_root_k,):
        if root not in remaining:
            return None
        remaining.remove(root)
    return multiset(remaining)


def _k(lam_units: int) -> KWeight:
    """A K-weight given in whole (SO(3)-label) units."""
    return KWeight(2 * lam_units)


def _row(label: str, wt_g: GWeight, wts_x: tuple[int, ...],
         comp: tuple[int, ...], ind: int, rho: int) -> FixedPointDatum:
    return FixedPointDatum(
        label=label,
        wt_L=restrict(wt_g),
        wts_X=multiset(_k(w) for w in wts_x),
        complement=multiset(_k(w) for w in comp),
        ind=ind,
        rho_fx=_k(rho),
    )


def orbit_table(orbit: Orbit, a: int, b: int) -> LocalizationTable:
    """The fixed-point table of an orbit closure, with weights restricted."""
    if a < 0 or b < 0:
        raise ValueError("twist parameters (a, b) must be nonnegative")
    if orbit is Orbit.O2:
        # The duality automorphism identifies this orbit with the other
        # middle orbit at swapped parameters.
        inner = orbit_table(Orbit.O1, b, a)
        return LocalizationTable(Orbit.O2, a, b, inner.codim, inner.rows)
    if orbit is Orbit.CLOSED:
        rows = (
            _row("e1<e1+e2", GWeight(a, b), (1,), (2, 1), 0, 0),
            _row("e3<e2+e3", GWeight(-b, -a), (-1,), (-2, -1), 1, -1),
        )
        return LocalizationTable(Orbit.CLOSED, a, b, 2, rows)
    if orbit is Orbit.O1:
        rows = (
            _row("e1<e1+e2", GWeight(a, b), (1, 1), (2,), 0, 0),
            _row("e1<e1+e3", GWeight(a + b, -b), (-1, 1), (2,), 1, -1),
            _row("e3<e1+e3", GWeight(b, -a - b), (-1, 1), (-2,), 1, -1),
            _row("e3<e2+e3", GWeight(-b, -a), (-1, -1), (-2,), 2, -2),
        )
        return LocalizationTable(Orbit.O1, a, b, 1, rows)
    if orbit is Orbit.OPEN:
        rows = (
            _row("e1<e1+e2", GWeight(a, b), (1, 1, 2), (), 0, 0),
            _row("e1<e1+e3", GWeight(a + b, -b), (-1, 1, 2), (), 1, -1),
            _row("e2<e1+e2", GWeight(-a, a + b), (1, -1, 2), (), 1, -1),
            _row("e2<e2+e3", GWeight(-a - b, a), (1, -1, -2), (), 2, -3),
            _row("e3<e1+e3", GWeight(b, -a - b), (1, -1, -2), (), 2, -3),
            _row("e3<e2+e3", GWeight(-b, -a), (-1, -1, -2), (), 3, -4),
        )
        return LocalizationTable(Orbit.OPEN, a, b, 0, rows)
    raise ValueError(f"cannot build a table for orbit {orbit}")


def borel_weil_table(mu: int) -> LocalizationTable:
    """The SO(3) flag variety with the label-mu line bundle.

    Feeding this to k_mult must give the Kronecker delta at mu: the
    tangent weights are exactly the positive K-roots at each of the two
    Weyl-translate fixed points, so the partition function degenerates.
    """
    if mu < 0:
        raise ValueError("line bundle label must be nonnegative")
    rows = (
        _row("e", GWeight(mu, 0), (1,), (), 0, 0),
        _row("s", GWeight(-mu, 0), (-1,), (), 1, -1),
    )
    return LocalizationTable(Orbit.CUSTOM, mu, 0, 0, rows)


def k_term(fp: FixedPointDatum, codim: int, lam: int, d: int) -> int:
    """One fixed point's signed contribution to the SO(3)-multiplicity."""
    if lam < 0:
        raise ValueError("SO(3) label must be nonnegative")
    setup = tau_setup(fp.wts_X, ROOT_DATA.tau)
    reduced = _remove_k_roots(setup.wts_plus)
    if reduced is None:
        raise TableInvariantError(
            f"row {fp.label}: positive K-roots missing from tangent weights")
    comp_sum = sum((mu for mu in fp.complement), KWeight(0))
    target_wt = KWeight.from_label(lam) - fp.wt_L - setup.rho_v - comp_sum
    target = GradedTarget((target_wt.half_units,), d - codim)
    gens = [GradedGenerator(((-mu).half_units,), 0) for mu in reduced]
    gens += [GradedGenerator((mu.half_units,), 1) for mu in fp.complement]
    sign = -1 if setup.ind % 2 else 1
    return sign * kappa_graded(target, gens, functional=(1,))


def k_mult_ld(table: LocalizationTable, lam: int, d: int) -> int:
    """SO(3)-multiplicity of label lam in the grading-d slice."""
    return sum(k_term(fp, table.codim, lam, d) for fp in table.rows)


def k_mult(table: LocalizationTable, lam: int) -> int:
    """Total SO(3)-multiplicity of label lam, summed over the grading.

    The sum is cut off at d = lam + codim; every slice past d = lam is
    checked to vanish, guarding the cutoff against table or engine bugs.
    """
    total = 0
    for d in range(table.codim, lam + table.codim + 1):
        value = k_mult_ld(table, lam, d)
        if d > lam and value != 0:
            raise DCutoffError(
                f"d-cutoff violated: {table.orbit} (a,b)=({table.a},{table.b}) "
                f"lam={lam} d={d} gives {value}")
        total += value
    return total


def blattner_closed(a: int, b: int, lam: int) -> int:
    """The closed-orbit alternating Weyl sum over the restricted roots.

    Works in doubled K-weight units so the half-integral shifts are
    exact; agrees with the localization engine on the closed orbit and
    collapses to a one-term partition count for dominant parameters.
    """
    if a < 0 or b < 0 or lam < 0:
        raise ValueError("parameters must be nonnegative")
    nu = restrict(GWeight(a, b))
    shift = nu + 2 * restrict(ROOT_DATA.rho_g) - ROOT_DATA.rho_k
    gens = [r.half_units for r in ROOT_DATA.pos_roots_g_restricted_minus_k]
    lam_rho = KWeight.from_label(lam) + ROOT_DATA.rho_k
    total = 0
    for w, sign in (("e", 1), ("s", -1)):
        target = weyl_act_k(w, lam_rho) - shift
        total += sign * kappa_total(target.half_units, gens, functional=1)
    return total
