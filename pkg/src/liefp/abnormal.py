"""Subring lattices and (def-)abnormal subrings.

A subring ``a`` of ``g`` is abnormal when every subring ``u`` containing it
is its own normalizer.  On a finite ring every subspace is a candidate, so
this is decided by exhaustive, guarded enumeration of the subring lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import NotApplicable, VerificationFailed
from .exactla import Subspace, enumerate_subspaces
from .liering import (
    LieRing,
    center,
    centralizer,
    derived,
    ideals,
    is_abelian,
    is_irreducible_module,
    is_nilpotent,
    is_soluble,
    is_subring,
    minimal_ideals,
    normalizer,
    quotient,
)

DEFAULT_GUARD = 200_000


def enumerate_subrings(
    g: LieRing,
    containing: Subspace | None = None,
    guard: int = DEFAULT_GUARD,
    within: Subspace | None = None,
    dim: int | None = None,
) -> Iterator[Subspace]:
    """Bracket-closed subspaces between ``containing`` and ``within``, in canonical order."""
    for U in enumerate_subspaces(g.n, g.p, containing, guard, within, dim):
        if is_subring(g, U):
            yield U


def _mask(U: Subspace) -> int:
    """Bitmask over all of ``F_p^n`` marking the vectors of ``U``."""
    p, n = U.p, U.ambient_dim
    idx = U.vectors() @ (p ** np.arange(n, dtype=np.int64))
    bits = np.zeros(p**n, dtype=np.uint8)
    bits[idx] = 1
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


class SubringLattice:
    """All subrings of ``g`` inside ``within`` (default ``g``) with cached data.

    ``self_normalizing[i]`` is computed relative to ``within``, so the lattice
    of a subring ``B`` answers questions about abnormality *in* ``B``.
    """

    def __init__(self, g: LieRing, guard: int = DEFAULT_GUARD, within: Subspace | None = None):
        self.ring = g
        self.within = within if within is not None else g.full()
        self.subrings = list(enumerate_subrings(g, guard=guard, within=self.within))
        self.position = {U: i for i, U in enumerate(self.subrings)}
        self.masks = [_mask(U) for U in self.subrings]
        self.normalizers = [normalizer(g, U) & self.within for U in self.subrings]
        self.self_normalizing = [N == U for N, U in zip(self.normalizers, self.subrings)]
        self._nilpotent = None
        self._abnormal = None

    def __len__(self):
        return len(self.subrings)

    def contains(self, i: int, j: int) -> bool:
        """Whether subring ``i`` contains subring ``j``."""
        return self.masks[i] & self.masks[j] == self.masks[j]

    @property
    def nilpotent(self) -> list[bool]:
        if self._nilpotent is None:
            self._nilpotent = [is_nilpotent(self.ring, U) for U in self.subrings]
        return self._nilpotent

    def first_bad_overring(self, i: int) -> int | None:
        """Index of the first non-self-normalizing subring containing ``i``."""
        for j, ok in enumerate(self.self_normalizing):
            if not ok and self.contains(j, i):
                return j
        return None

    @property
    def def_abnormal(self) -> list[bool]:
        if self._abnormal is None:
            bad = [m for m, ok in zip(self.masks, self.self_normalizing) if not ok]
            self._abnormal = [not any(b & m == m for b in bad) for m in self.masks]
        return self._abnormal

    def minimal(self, flags: list[bool]) -> list[Subspace]:
        """Inclusion-minimal subrings among those flagged."""
        chosen = [i for i, f in enumerate(flags) if f]
        out = []
        for i in chosen:
            if not any(j != i and self.contains(i, j) for j in chosen):
                out.append(self.subrings[i])
        return out


@lru_cache(maxsize=256)
def subring_lattice(g: LieRing, guard: int = DEFAULT_GUARD, within: Subspace | None = None) -> SubringLattice:
    return SubringLattice(g, guard, within)


@dataclass(frozen=True)
class AbnormalityCertificate:
    subring: Subspace
    verdict: bool
    witness: Subspace | None = None
    witness_normalizer: Subspace | None = None

    def __bool__(self):
        return self.verdict


def is_def_abnormal(
    g: LieRing, A: Subspace, guard: int = DEFAULT_GUARD, within: Subspace | None = None
) -> AbnormalityCertificate:
    """Check every subring ``u`` with ``A <= u <= within`` for ``N(u) = u``.

    On failure the certificate carries the first offending ``u`` in canonical
    order together with its normalizer (taken inside ``within``).
    """
    if not is_subring(g, A):
        raise ValueError("subspace is not a subring")
    B = within if within is not None else g.full()
    for U in enumerate_subrings(g, A, guard, B):
        N = normalizer(g, U) & B
        if N != U:
            return AbnormalityCertificate(A, False, U, N)
    return AbnormalityCertificate(A, True)


def def_abnormal_subrings(g: LieRing, guard: int = DEFAULT_GUARD, within: Subspace | None = None) -> list[Subspace]:
    L = subring_lattice(g, guard, within)
    return [U for U, f in zip(L.subrings, L.def_abnormal) if f]


def minimal_def_abnormal(g: LieRing, guard: int = DEFAULT_GUARD, within: Subspace | None = None) -> list[Subspace]:
    """Def-abnormal subrings containing no smaller def-abnormal subring."""
    L = subring_lattice(g, guard, within)
    return L.minimal(L.def_abnormal)


@dataclass(frozen=True)
class IrreducibleQuotient:
    ring: LieRing
    ideal: Subspace
    projection: np.ndarray
    section: np.ndarray
    centerless: bool
    derived_abelian: bool
    derived_irreducible: bool

    @property
    def verified(self) -> bool:
        return self.centerless and self.derived_abelian and self.derived_irreducible


def irreducible_quotient(g: LieRing, guard: int = DEFAULT_GUARD) -> IrreducibleQuotient:
    """A centerless quotient whose derived ring is abelian and irreducible.

    Takes an ideal maximal among those with non-nilpotent quotient (first in
    canonical order), then divides out centers until none is left.

    Raises:
        NotApplicable: ``g`` is nilpotent, not soluble, or ``g'`` is not nilpotent.
        VerificationFailed: the resulting quotient lacks one of the properties.
    """
    if not is_soluble(g) or is_nilpotent(g):
        raise NotApplicable("needs a soluble, non-nilpotent ring")
    if not is_nilpotent(g, derived(g, g.full(), g.full())):
        raise NotApplicable("derived ring is not nilpotent")
    cands = [I for I in ideals(g, guard) if not is_nilpotent(quotient(g, I).ring)]
    maximal = [I for I in cands if not any(J != I and I.is_subspace_of(J) for J in cands)]
    J = maximal[0]
    while True:
        q = quotient(g, J)
        Z = center(q.ring)
        if not Z.dim:
            break
        J = q.preimage(Z)
    qr = q.ring
    D = derived(qr, qr.full(), qr.full())
    out = IrreducibleQuotient(
        ring=qr,
        ideal=J,
        projection=q.projection,
        section=q.section,
        centerless=center(qr).dim == 0,
        derived_abelian=is_abelian(qr, D),
        derived_irreducible=is_irreducible_module(qr, D),
    )
    if not out.verified:
        raise VerificationFailed(f"quotient by {J} is not centerless with irreducible abelian derived ring")
    return out


def criterion_hypotheses(
    g: LieRing, I: Subspace, H: Subspace, guard: int = DEFAULT_GUARD, minimal: list | None = None
) -> list[str]:
    """Which hypotheses of the abnormality criterion fail (empty when all hold).

    ``minimal`` may carry a precomputed list of minimal ideals.
    """
    failed = []
    if I not in (minimal if minimal is not None else minimal_ideals(g, guard)):
        failed.append("I is a minimal ideal")
    if not is_subring(g, H):
        failed.append("H is a subring")
    if not center(g).is_subspace_of(H):
        failed.append("H contains the center")
    if centralizer(g, I) + H != g.full():
        failed.append("C_g(I) + H = g")
    return failed


def criterion_check(g: LieRing, I: Subspace, H: Subspace, guard: int = DEFAULT_GUARD) -> bool | None:
    """Whether ``H`` is def-abnormal in ``H + I``; ``None`` if the hypotheses fail."""
    if criterion_hypotheses(g, I, H, guard):
        return None
    return is_def_abnormal(g, H, guard, within=H + I).verdict


__all__ = [
    "AbnormalityCertificate",
    "IrreducibleQuotient",
    "SubringLattice",
    "criterion_check",
    "criterion_hypotheses",
    "def_abnormal_subrings",
    "enumerate_subrings",
    "irreducible_quotient",
    "is_def_abnormal",
    "minimal_def_abnormal",
    "subring_lattice",
]
