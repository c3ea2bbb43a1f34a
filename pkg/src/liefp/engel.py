"""Engel subrings, ad-nilpotency, the Fitting ideal and Cartan subrings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .abnormal import DEFAULT_GUARD, subring_lattice
from .errors import NotApplicable, VerificationFailed
from .exactla import DTYPE, Subspace, kernel
from .liering import (
    LieRing,
    ad,
    ideals,
    is_ideal,
    is_nilpotent,
    is_soluble,
    is_subring,
    normalizer,
)

ELEMENT_GUARD = 100_000


def ad_nilpotency_index(g: LieRing, x) -> int | None:
    """Least ``m >= 1`` with ``ad(x)^m = 0``, or ``None`` if there is none."""
    A = ad(g, x)
    P = A
    for m in range(1, max(g.n, 1) + 1):
        if not P.any():
            return m
        P = (A @ P) % g.p
    return None


def is_ad_nilpotent(g: LieRing, x) -> tuple[bool, int | None]:
    m = ad_nilpotency_index(g, x)
    return m is not None, m


@dataclass(frozen=True)
class EngelSet:
    base: tuple | Subspace
    space: Subspace
    stabilization_index: int | None = None


def _key(x) -> tuple:
    return tuple(int(a) for a in np.asarray(x).reshape(-1))


@lru_cache(maxsize=1 << 16)
def _engel_element(g: LieRing, key: tuple) -> EngelSet:
    A = ad(g, np.array(key, dtype=DTYPE))
    P = A
    chain = [kernel(P, g.p, cols=g.n)]
    for _ in range(max(g.n, 1)):
        P = (A @ P) % g.p
        chain.append(kernel(P, g.p, cols=g.n))
    s = next(i + 1 for i in range(len(chain) - 1) if chain[i] == chain[i + 1])
    space = chain[-1]
    if chain[s - 1] != space:
        raise VerificationFailed(f"kernel chain of ad({key}) not stationary from index {s}")
    if not is_subring(g, space):
        raise VerificationFailed(f"Engel set of {key} is not closed under the bracket")
    return EngelSet(key, space, s)


def engel_element(g: LieRing, x, within: Subspace | None = None) -> EngelSet:
    """``E(x)``: the elements killed by some power of ``ad(x)``.

    Computed as ``ker ad(x)^n`` for ``n = dim g``; the returned
    ``stabilization_index`` is the first ``k`` with ``ker ad^k = ker ad^(k+1)``.
    With ``within`` (a subring containing ``x``) the result is ``E(x)``
    taken inside that subring.
    """
    x = g.element(x)
    E = _engel_element(g, _key(x))
    if within is not None:
        if not within.contains(x):
            raise ValueError("element is not in the given subring")
        return EngelSet(E.base, E.space & within, E.stabilization_index)
    return E


def engel_subring(g: LieRing, H: Subspace, guard: int = ELEMENT_GUARD, within: Subspace | None = None) -> EngelSet:
    """``E(H)``: intersection of ``E(x)`` over every element of ``H``."""
    space = within if within is not None else g.full()
    for x in H.vectors(guard):
        space = space & _engel_element(g, _key(x)).space
    if not is_subring(g, space):
        raise VerificationFailed("Engel set of a subring is not closed under the bracket")
    return EngelSet(H, space)


@dataclass(frozen=True)
class FittingResult:
    space: Subspace
    is_subspace: bool
    is_ideal: bool
    is_nilpotent: bool
    nilpotent_elements: int

    @property
    def ok(self) -> bool:
        return self.is_subspace and self.is_ideal and self.is_nilpotent


def ad_nilpotent_elements(g: LieRing, guard: int = ELEMENT_GUARD) -> np.ndarray:
    xs = g.elements(guard)
    return np.array([x for x in xs if ad_nilpotency_index(g, x) is not None], dtype=DTYPE).reshape(-1, g.n)


def fitting(g: LieRing, guard: int = ELEMENT_GUARD) -> FittingResult:
    """The set of ad-nilpotent elements, found by exhaustive scan.

    ``space`` is the span of that set; the flags record whether the set is
    itself a subspace and whether its span is a nilpotent ideal.  Nothing is
    raised when a flag is false; callers decide whether that is expected.
    """
    nil = ad_nilpotent_elements(g, guard)
    space = g.span(nil)
    subspace = len(nil) == g.p**space.dim
    ideal = is_ideal(g, space)
    return FittingResult(space, subspace, ideal, ideal and is_nilpotent(g, space), len(nil))


def largest_nilpotent_ideal(g: LieRing, guard: int = DEFAULT_GUARD) -> Subspace:
    """Sum of all nilpotent ideals, by lattice enumeration (cross-check for :func:`fitting`)."""
    total = g.zero()
    for I in ideals(g, guard):
        if is_nilpotent(g, I):
            total = total + I
    return total


def is_cartan(g: LieRing, U: Subspace) -> bool:
    """Nilpotent and self-normalizing."""
    if not is_subring(g, U):
        raise ValueError("subspace is not a subring")
    return is_nilpotent(g, U) and normalizer(g, U) == U


def cartan_subrings(g: LieRing, guard: int = DEFAULT_GUARD, within: Subspace | None = None) -> list[Subspace]:
    """Every Cartan subring (of ``within`` if given), by lattice enumeration."""
    L = subring_lattice(g, guard, within)
    return [U for U, sn, nil in zip(L.subrings, L.self_normalizing, L.nilpotent) if sn and nil]


def cartan_subring(g: LieRing, guard: int = ELEMENT_GUARD) -> Subspace:
    """One Cartan subring, found as an Engel-minimal set.

    Picks the first element (lexicographic order) whose Engel set has
    least dimension, then shrinks ``h <- E(h)`` to a fixpoint and checks the
    result is nilpotent and self-normalizing.

    Raises:
        NotApplicable: ``g`` is not soluble.
        VerificationFailed: the fixpoint is not a Cartan subring (possible
            only when ``p <= dim g``).
    """
    if not is_soluble(g):
        raise NotApplicable(f"needs a soluble ring ({g!r})")
    best = None
    for x in g.elements(guard):
        E = _engel_element(g, _key(x)).space
        if best is None or E.dim < best.dim:
            best = E
    h = best
    while True:
        nxt = engel_subring(g, h, guard).space
        if nxt == h:
            break
        h = nxt
    if not is_cartan(g, h):
        raise VerificationFailed(f"Engel-minimal set {h} is not a Cartan subring")
    return h


def nilpotent_subrings(g: LieRing, guard: int = DEFAULT_GUARD) -> list[Subspace]:
    L = subring_lattice(g, guard)
    return [U for U, nil in zip(L.subrings, L.nilpotent) if nil]


def engel_minimal_subrings(g: LieRing, guard: int = DEFAULT_GUARD, element_guard: int = ELEMENT_GUARD) -> list[Subspace]:
    """Inclusion-minimal sets ``E(h)`` over all nilpotent subrings ``h``."""
    found = {engel_subring(g, h, element_guard).space for h in nilpotent_subrings(g, guard)}
    mins = [U for U in found if not any(V != U and V.is_subspace_of(U) for V in found)]
    return sorted(mins, key=Subspace.sort_key)


def engel_elements_by_iteration(g: LieRing, x, guard: int = ELEMENT_GUARD) -> np.ndarray:
    """``E(x)`` by brute force: follow ``y, [x,y], [x,[x,y]], ...`` for every ``y``.

    Independent of the kernel computation in :func:`engel_element`; used as
    an oracle in tests.
    """
    A = ad(g, g.element(x))
    members = []
    for y in g.elements(guard):
        seen = set()
        v = y
        while v.any():
            k = _key(v)
            if k in seen:
                break
            seen.add(k)
            v = (A @ v) % g.p
        if not v.any():
            members.append(y)
    return np.array(members, dtype=DTYPE).reshape(-1, g.n)


__all__ = [
    "EngelSet",
    "FittingResult",
    "ad_nilpotency_index",
    "ad_nilpotent_elements",
    "cartan_subring",
    "cartan_subrings",
    "engel_element",
    "engel_minimal_subrings",
    "engel_elements_by_iteration",
    "engel_subring",
    "fitting",
    "is_ad_nilpotent",
    "is_cartan",
    "largest_nilpotent_ideal",
    "nilpotent_subrings",
]
