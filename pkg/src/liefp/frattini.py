"""Maximal subrings, the Frattini subring and related checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .abnormal import DEFAULT_GUARD, subring_lattice
from .engel import ELEMENT_GUARD, cartan_subring, cartan_subrings
from .exactla import Subspace
from .liering import LieRing, is_ideal, is_nilpotent, normalizer, sub


def maximal_subrings(g: LieRing, guard: int = DEFAULT_GUARD) -> list[Subspace]:
    """Inclusion-maximal proper subrings, in canonical order."""
    L = subring_lattice(g, guard)
    full = g.full()
    proper = [i for i, U in enumerate(L.subrings) if U != full]
    out = []
    for i in proper:
        if not any(j != i and L.contains(j, i) for j in proper):
            out.append(L.subrings[i])
    return out


@dataclass(frozen=True)
class FrattiniResult:
    space: Subspace
    maximal_subrings: list
    is_ideal: bool
    is_nilpotent: bool


def frattini(g: LieRing, guard: int = DEFAULT_GUARD) -> FrattiniResult:
    """Intersection of the maximal subrings (``g`` itself if there are none).

    The ideal and nilpotency flags are reported, never enforced.
    """
    maxes = maximal_subrings(g, guard)
    space = g.full()
    for M in maxes:
        space = space & M
    return FrattiniResult(space, maxes, is_ideal(g, space), is_nilpotent(g, space))


def frattini_fact_violations(g: LieRing, guard: int = DEFAULT_GUARD) -> list[Subspace]:
    """Proper subrings ``h`` with ``Phi + h = g``."""
    phi = frattini(g, guard).space
    full = g.full()
    return [h for h in subring_lattice(g, guard).subrings if h != full and phi + h == full]


def frattini_fact_check(g: LieRing, guard: int = DEFAULT_GUARD) -> bool:
    return not frattini_fact_violations(g, guard)


def _cartans_of_ideal(g: LieRing, I: Subspace, guard: int, all_cartans: bool) -> list[Subspace]:
    if all_cartans:
        return cartan_subrings(g, guard, within=I)
    if I.dim == 0:
        return [I]
    ring, inclusion = sub(g, I)
    c = cartan_subring(ring, min(guard, ELEMENT_GUARD))
    return [g.span((inclusion @ c.matrix.T).T % g.p)]


def frattini_argument_check(
    g: LieRing, I: Subspace, guard: int = DEFAULT_GUARD, all_cartans: bool = False
) -> bool:
    """Whether ``I + N_g(c) = g`` for a Cartan subring ``c`` of the ideal ``I``.

    By default ``c`` is the one found by the Engel-minimal search inside
    ``I``; with ``all_cartans`` every Cartan subring of ``I`` is tested.
    """
    if not is_ideal(g, I):
        raise ValueError("subspace is not an ideal")
    full = g.full()
    return all(I + normalizer(g, c) == full for c in _cartans_of_ideal(g, I, guard, all_cartans))


def common_ideal_in_frattini(g: LieRing, J: Subspace, guard: int = DEFAULT_GUARD) -> bool:
    """If every maximal subring contains ``J`` then so does the Frattini subring."""
    res = frattini(g, guard)
    if all(J.is_subspace_of(M) for M in res.maximal_subrings):
        return J.is_subspace_of(res.space)
    return True


__all__ = [
    "FrattiniResult",
    "common_ideal_in_frattini",
    "frattini",
    "frattini_argument_check",
    "frattini_fact_check",
    "frattini_fact_violations",
    "maximal_subrings",
]
