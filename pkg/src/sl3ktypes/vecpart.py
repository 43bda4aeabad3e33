"""Exact evaluation of graded vector partition functions.

kappa_m(v; S) counts the ways to write the integer vector v as a sum of
exactly m vectors from the multiset S (repeated generators count as
distinguishable copies, matching the product of geometric series).  The
graded variant tracks, in addition, an extra nonnegative degree carried
by each generator; all uses here have degrees 0 or 1.

Finiteness is guaranteed by a caller-supplied linear functional: every
degree-0 generator must pair strictly nonzero with it, all on the same
side.  Degree-1 generators are unconstrained because the target degree
bounds how many of them can occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

Vec = tuple[int, ...]
VecLike = Union[int, Sequence[int]]


class NonProperConeError(ValueError):
    """The degree-0 generators do not lie in an open half-space."""


def _as_vec(v: VecLike) -> Vec:
    if isinstance(v, int):
        return (v,)
    return tuple(v)


def _dot(x: Vec, y: Vec) -> int:
    return sum(a * b for a, b in zip(x, y, strict=True))


@dataclass(frozen=True)
class GradedGenerator:
    weight: Vec
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", _as_vec(self.weight))
        if self.degree < 0:
            raise ValueError("generator degree must be nonnegative")


@dataclass(frozen=True)
class GradedTarget:
    weight: Vec
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", _as_vec(self.weight))


def _prepare(gens: Iterable[GradedGenerator], functional: VecLike) -> tuple[tuple[tuple[Vec, int], ...], Vec]:
    """Validate the half-space condition; normalize so deg-0 pairings are < 0.

    Returns the generators sorted with positive-degree ones first (so the
    recursion can bound them by the remaining degree before falling back
    to pairing bounds), together with the possibly negated functional.
    """
    phi = _as_vec(functional)
    glist = sorted(gens, key=lambda g: (-g.degree, g.weight))
    sign = 0
    for g in glist:
        if len(g.weight) != len(phi):
            raise ValueError("generator dimension does not match functional")
        if g.degree == 0:
            p = _dot(phi, g.weight)
            if p == 0:
                raise NonProperConeError(f"degree-0 generator {g.weight} pairs to zero")
            s = 1 if p > 0 else -1
            if sign == 0:
                sign = s
            elif s != sign:
                raise NonProperConeError("degree-0 generators lie on both sides of the functional")
    if sign > 0:
        phi = tuple(-c for c in phi)
    return tuple((g.weight, g.degree) for g in glist), phi


@lru_cache(maxsize=None)
def _count(vec: Vec, deg: int, gens: tuple[tuple[Vec, int], ...], idx: int, phi: Vec) -> int:
    if deg < 0:
        return 0
    if idx == len(gens):
        return 1 if deg == 0 and not any(vec) else 0
    w, gdeg = gens[idx]
    if gdeg > 0:
        jmax = deg // gdeg
    else:
        # Only degree-0 generators remain; any leftover degree is unfillable.
        if deg != 0:
            return 0
        pv = _dot(phi, vec)
        if pv > 0:
            return 0
        pg = _dot(phi, w)  # < 0 after normalization
        jmax = pv // pg
    total = 0
    cur = vec
    for j in range(jmax + 1):
        total += _count(cur, deg - j * gdeg, gens, idx + 1, phi)
        cur = tuple(c - wc for c, wc in zip(cur, w))
    return total


def kappa_graded(target: GradedTarget, gens: Iterable[GradedGenerator], functional: VecLike) -> int:
    """Number of generator multisets summing to the target weight and degree."""
    if target.degree < 0:
        return 0
    prepared, phi = _prepare(gens, functional)
    return _count(target.weight, target.degree, prepared, 0, phi)


def kappa_m(target_weight: VecLike, m: int, gen_weights: Iterable[VecLike], functional: VecLike) -> int:
    """kappa with the number of parts fixed to m, via a degree-1 lift."""
    gens = [GradedGenerator(_as_vec(w), 1) for w in gen_weights]
    return kappa_graded(GradedTarget(_as_vec(target_weight), m), gens, functional)


def kappa_total(target_weight: VecLike, gen_weights: Iterable[VecLike], functional: VecLike) -> int:
    """The plain vector partition function (any number of parts)."""
    gens = [GradedGenerator(_as_vec(w), 0) for w in gen_weights]
    return kappa_graded(GradedTarget(_as_vec(target_weight), 0), gens, functional)


def kappa_brute(target: GradedTarget, gens: Iterable[GradedGenerator], part_bound: int) -> int:
    """Exhaustive-enumeration oracle for kappa_graded.

    The caller guarantees part_bound is at least the number of parts of
    any representation of the target; no half-space pruning is used, so
    this is independent of the recursion in kappa_graded.
    """
    glist = [(g.weight, g.degree) for g in gens]

    def rec(vec: Vec, deg: int, idx: int, parts_left: int) -> int:
        if idx == len(glist):
            return 1 if deg == 0 and not any(vec) else 0
        w, gdeg = glist[idx]
        total = 0
        cur = vec
        for j in range(parts_left + 1):
            total += rec(cur, deg - j * gdeg, idx + 1, parts_left - j)
            cur = tuple(c - wc for c, wc in zip(cur, w))
        return total

    if target.degree < 0:
        return 0
    return rec(target.weight, target.degree, 0, part_bound)
