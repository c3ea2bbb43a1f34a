"""Inner automorphisms ``exp(ad x)`` and the groups they generate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .errors import GuardExceeded, IndexExceedsCharacteristic, NotNilpotent, VerificationFailed
from .exactla import DTYPE, Subspace, image, matpow
from .liering import LieRing, ad

GROUP_CAP = 100_000


@dataclass(frozen=True, eq=False)
class InnerAutomorphism:
    matrix: np.ndarray
    witness: np.ndarray
    nilpotency_index: int
    p: int

    def __call__(self, v):
        return (self.matrix @ np.asarray(v, dtype=DTYPE)) % self.p


def respects_bracket(g: LieRing, M: np.ndarray) -> bool:
    """``M[a, b] = [M a, M b]`` on every pair of basis vectors."""
    lhs = np.einsum("kr,abr->abk", M, g.table) % g.p
    rhs = np.einsum("ia,jb,ijk->abk", M, M, g.table) % g.p
    return np.array_equal(lhs, rhs)


def exp_ad(g: LieRing, x) -> InnerAutomorphism:
    """Truncated exponential ``sum_{k<m} ad(x)^k / k!`` where ``ad(x)^m = 0``.

    Requires ``m <= p`` so every ``k!`` is a unit mod ``p``.  The result is
    checked against the bracket before it is returned.

    Raises:
        NotNilpotent: ``ad(x)`` is not nilpotent.
        IndexExceedsCharacteristic: the nilpotency index exceeds ``p``.
        VerificationFailed: the truncated series is not an automorphism.
    """
    x = g.element(x)
    p, n = g.p, g.n
    A = ad(g, x)
    powers = [np.eye(n, dtype=DTYPE)]
    while powers[-1].any():
        if len(powers) > n:
            raise NotNilpotent(f"ad({x.tolist()}) is not nilpotent")
        powers.append((A @ powers[-1]) % p)
    m = len(powers) - 1
    if m > p:
        raise IndexExceedsCharacteristic(f"ad({x.tolist()}) has nilpotency index {m} > p = {p}")
    M = np.zeros((n, n), dtype=DTYPE)
    for k in range(m):
        M = (M + pow(factorial(k), -1, p) * powers[k]) % p
    if not respects_bracket(g, M):
        raise VerificationFailed(f"exp(ad({x.tolist()})) does not preserve the bracket")
    return InnerAutomorphism(M, x, max(m, 1), p)


def _bytes(M: np.ndarray) -> bytes:
    return np.ascontiguousarray(M, dtype=DTYPE).tobytes()


@dataclass
class InnerGroup:
    """BFS closure of a set of ``exp(ad x)``.

    ``elements[0]`` is the identity; ``words[i]`` lists generator indices so
    that applying them left to right yields ``elements[i]``.  Elements ``x`` of
    the generating subspace whose exponential is unavailable are kept in
    ``skipped`` with the reason.
    """

    generators: list
    elements: list
    words: list
    cap: int
    skipped: list = field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    def index(self, M: np.ndarray) -> int | None:
        return self._lookup.get(_bytes(M))

    def __post_init__(self):
        self._lookup = {_bytes(M): i for i, M in enumerate(self.elements)}

    def chain(self, i: int) -> list[InnerAutomorphism]:
        return [self.generators[k] for k in self.words[i]]


def inner_group(g: LieRing, U: Subspace, cap: int = GROUP_CAP) -> InnerGroup:
    """The group generated by ``exp(ad x)`` for ``x`` in ``U`` with index at most ``p``.

    Raises GuardExceeded once the closure passes ``cap`` elements.
    """
    p, n = g.p, g.n
    gens, seen_gens, skipped = [], set(), []
    for x in U.vectors(cap):
        try:
            phi = exp_ad(g, x)
        except (NotNilpotent, IndexExceedsCharacteristic, VerificationFailed) as exc:
            skipped.append((tuple(int(a) for a in x), type(exc).__name__))
            continue
        key = _bytes(phi.matrix)
        if key not in seen_gens:
            seen_gens.add(key)
            gens.append(phi)
    identity = np.eye(n, dtype=DTYPE)
    elements, words = [identity], [()]
    lookup = {_bytes(identity): 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for k, phi in enumerate(gens):
            M = (phi.matrix @ elements[i]) % p
            key = _bytes(M)
            if key in lookup:
                continue
            if len(elements) >= cap:
                raise GuardExceeded("inner group closure", len(elements) + 1, cap)
            lookup[key] = len(elements)
            elements.append(M)
            words.append(words[i] + (k,))
            queue.append(len(elements) - 1)
    return InnerGroup(gens, elements, words, cap, skipped)


@dataclass(frozen=True, eq=False)
class Conjugation:
    matrix: np.ndarray
    chain: list


def are_conjugate(g: LieRing, U1: Subspace, U2: Subspace, group: InnerGroup) -> Conjugation | None:
    """First group element (BFS order) taking ``U1`` onto ``U2``, or ``None``."""
    for i, M in enumerate(group.elements):
        if image(M, U1) == U2:
            return Conjugation(M, group.chain(i))
    return None


def orbit(g: LieRing, U: Subspace, group: InnerGroup) -> list[Subspace]:
    """Distinct images of ``U``, in order of first appearance."""
    out = {}
    for M in group.elements:
        out.setdefault(image(M, U), None)
    return list(out)


def is_k_engel(g: LieRing, U: Subspace, k: int, guard: int = 100_000) -> bool:
    """Whether ``ad(x)^k = 0`` on ``g`` for every ``x`` in ``U``."""
    return all(not matpow(ad(g, x), k, g.p).any() for x in U.vectors(guard))


__all__ = [
    "Conjugation",
    "GROUP_CAP",
    "InnerAutomorphism",
    "InnerGroup",
    "are_conjugate",
    "exp_ad",
    "inner_group",
    "is_k_engel",
    "orbit",
    "respects_bracket",
]
