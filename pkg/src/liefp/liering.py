"""Lie rings over F_p given by structure constants.

A :class:`LieRing` of dimension ``n`` stores the full ``(n, n, n)`` tensor
``table[i, j] = [e_i, e_j]``.  Elements are integer vectors of length ``n``
and subrings, ideals, centralizers and so on are all :class:`Subspace`
objects; ``is_subring`` / ``is_ideal`` are the predicates that distinguish
them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .exactla import DTYPE, Subspace, enumerate_subspaces, image, inverse, is_prime, kernel


@dataclass(frozen=True, eq=False)
class LieRing:
    p: int
    table: np.ndarray
    name: str = ""
    log: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        T = np.array(self.table, dtype=DTYPE)
        if T.size == 0:
            T = T.reshape(0, 0, 0)
        n = T.shape[0]
        if T.shape != (n, n, n):
            raise ValueError(f"structure tensor has shape {T.shape}, expected (n, n, n)")
        T = T % self.p
        T.flags.writeable = False
        object.__setattr__(self, "table", T)

    @classmethod
    def from_brackets(cls, p: int, dim: int, brackets, name: str = "", log=()) -> "LieRing":
        """Build from ``{(i, j): coeffs}`` or ``[(i, j, coeffs), ...]``.

        Only one of each pair ``(i, j)``/``(j, i)`` may be given; the other
        is filled in by anti-symmetry.  Diagonal entries are stored as given
        so that a bad table can still be handed to :func:`validate`.
        """
        if isinstance(brackets, dict):
            brackets = [(i, j, c) for (i, j), c in brackets.items()]
        T = np.zeros((dim, dim, dim), dtype=DTYPE)
        seen = set()
        for i, j, coeffs in brackets:
            i, j = int(i), int(j)
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i}, {j}) out of range for dim {dim}")
            c = np.asarray(coeffs, dtype=DTYPE)
            if c.shape != (dim,):
                raise ValueError(f"bracket ({i}, {j}) has {c.size} coefficients, expected {dim}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"bracket ({i}, {j}) given twice")
            seen.add(key)
            T[i, j] = c
            if i != j:
                T[j, i] = -c
        return cls(p, T, name, tuple(log))

    @property
    def n(self) -> int:
        return self.table.shape[0]

    dim = n

    def brackets(self) -> list[tuple[int, int, list[int]]]:
        """Nonzero ``[e_i, e_j]`` with ``i <= j`` (diagonal only if corrupt)."""
        return [
            (i, j, [int(a) for a in self.table[i, j]])
            for i in range(self.n)
            for j in range(i, self.n)
            if self.table[i, j].any()
        ]

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.n, dtype=DTYPE)
        v[i] = 1
        return v

    def element(self, coords) -> np.ndarray:
        v = np.asarray(coords, dtype=DTYPE).reshape(-1)
        if v.size != self.n:
            raise ValueError(f"element has {v.size} coordinates, ring has dimension {self.n}")
        return v % self.p

    def full(self) -> Subspace:
        return Subspace.full(self.p, self.n)

    def zero(self) -> Subspace:
        return Subspace.zero(self.p, self.n)

    def span(self, vectors) -> Subspace:
        return Subspace.span(vectors, self.p, self.n)

    def elements(self, guard: int = 100_000) -> np.ndarray:
        return self.full().vectors(guard)

    def __eq__(self, other):
        if not isinstance(other, LieRing):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.p, self.table.shape, self.table.tobytes()))

    def __repr__(self):
        return f"LieRing({self.name or 'unnamed'}, p={self.p}, dim={self.n})"


class Validation(NamedTuple):
    ok: bool
    kind: str | None = None
    where: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def validate(g: LieRing) -> Validation:
    """Check the alternating law and the Jacobi identity on basis vectors.

    The first violation in lexicographic order of the basis indices is
    reported; indices are 0-based.
    """
    T, p, n = g.table, g.p, g.n
    for i in range(n):
        for j in range(i, n):
            if i == j and T[i, i].any():
                return Validation(False, "alternating", (i, i), f"[e{i}, e{i}] = {T[i, i].tolist()}")
            if i != j and ((T[i, j] + T[j, i]) % p).any():
                return Validation(False, "alternating", (i, j), f"[e{j}, e{i}] != -[e{i}, e{j}]")
    # [a,[b,c]] - [[a,b],c] - [b,[a,c]] on every basis triple
    lhs = np.einsum("jkm,imr->ijkr", T, T)
    t2 = np.einsum("ijm,mkr->ijkr", T, T)
    t3 = np.einsum("ikm,jmr->ijkr", T, T)
    bad = ((lhs - t2 - t3) % p).any(axis=-1)
    if bad.any():
        i, j, k = (int(a) for a in np.argwhere(bad)[0])
        return Validation(False, "jacobi", (i, j, k), f"Jacobi fails on (e{i}, e{j}, e{k})")
    return Validation(True)


def _same_ring(g: LieRing, *vs):
    for v in vs:
        if np.shape(v) != (g.n,):
            raise ValueError(f"element of shape {np.shape(v)} does not belong to {g!r}")


def bracket(g: LieRing, x, y) -> np.ndarray:
    x = np.asarray(x, dtype=DTYPE)
    y = np.asarray(y, dtype=DTYPE)
    _same_ring(g, x, y)
    return np.einsum("i,j,ijk->k", x, y, g.table) % g.p


def ad(g: LieRing, x) -> np.ndarray:
    """Matrix of ``y -> [x, y]`` acting on column vectors."""
    x = np.asarray(x, dtype=DTYPE)
    _same_ring(g, x)
    return np.einsum("i,ijk->kj", x, g.table) % g.p


def ad_basis(g: LieRing) -> np.ndarray:
    """``ad(e_i)`` for every basis vector, stacked along axis 0."""
    return g.table.transpose(0, 2, 1)


def _stack(mats, n):
    mats = [m for m in mats if m.size]
    return np.vstack(mats) if mats else np.zeros((0, n), dtype=DTYPE)


def centralizer(g: LieRing, S) -> Subspace:
    """``{y : [y, s] = 0 for all s in S}`` (``S`` a Subspace or one element)."""
    rows = S.basis if isinstance(S, Subspace) else [S]
    return kernel(_stack([ad(g, s) for s in rows], g.n), g.p, cols=g.n)


def normalizer(g: LieRing, U: Subspace) -> Subspace:
    """``{y : [y, U] <= U}``."""
    if U.dim == g.n:
        return g.full()
    W = U.annihilator().matrix
    return kernel(_stack([(W @ ad(g, u)) % g.p for u in U.basis], g.n), g.p, cols=g.n)


def center(g: LieRing) -> Subspace:
    return centralizer(g, g.full())


def _pair_brackets(g: LieRing, U: Subspace, V: Subspace) -> np.ndarray:
    """Rows ``[u, v]`` for every pair of basis vectors."""
    out = np.einsum("ai,bj,ijk->abk", U.matrix, V.matrix, g.table) % g.p
    return out.reshape(U.dim * V.dim, g.n)


def _rows_inside(U: Subspace, rows: np.ndarray) -> bool:
    if not rows.size:
        return True
    if not U.dim:
        return not rows.any()
    rest = (rows - rows[:, U.pivots] @ U.matrix) % U.p
    return not rest.any()


def derived(g: LieRing, U: Subspace, V: Subspace) -> Subspace:
    """The span of all ``[u, v]``."""
    return g.span(_pair_brackets(g, U, V))


def derived_series(g: LieRing, U: Subspace | None = None) -> list[Subspace]:
    """``[U, U', U'', ...]`` up to the first repeated term (not repeated)."""
    series = [g.full() if U is None else U]
    while True:
        nxt = derived(g, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(g: LieRing, U: Subspace | None = None) -> list[Subspace]:
    """``[U, U^2 = [U, U], U^3 = [U, U^2], ...]`` until it stabilizes."""
    U = g.full() if U is None else U
    series = [U]
    while True:
        nxt = derived(g, U, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_abelian(g: LieRing, U: Subspace | None = None) -> bool:
    U = g.full() if U is None else U
    return derived(g, U, U).dim == 0


def is_soluble(g: LieRing, U: Subspace | None = None) -> bool:
    return derived_series(g, U)[-1].dim == 0


def is_nilpotent(g: LieRing, U: Subspace | None = None) -> bool:
    return lower_central_series(g, U)[-1].dim == 0


def is_subring(g: LieRing, U: Subspace) -> bool:
    return _rows_inside(U, _pair_brackets(g, U, U))


def is_ideal(g: LieRing, U: Subspace) -> bool:
    return _rows_inside(U, _pair_brackets(g, g.full(), U))


def subring_closure(g: LieRing, vectors) -> Subspace:
    U = g.span(vectors)
    while True:
        V = U + derived(g, U, U)
        if V == U:
            return U
        U = V


def ideal_closure(g: LieRing, vectors) -> Subspace:
    return spin(g, g.span(vectors))


def spin(g: LieRing, start, acting: Subspace | None = None) -> Subspace:
    """Smallest subspace containing ``start`` and stable under ``ad`` of ``acting``.

    ``start`` is a Subspace or a single vector; ``acting`` defaults to ``g``.
    """
    U = start if isinstance(start, Subspace) else g.span([start])
    gens = [ad(g, a) for a in (acting if acting is not None else g.full()).basis]
    frontier = list(U.basis)
    while frontier:
        new = []
        for v in frontier:
            for A in gens:
                w = (A @ np.asarray(v, dtype=DTYPE)) % g.p
                if not U.contains(w):
                    U = U + g.span([w])
                    new.append(w)
        frontier = new
    return U


class Quotient(NamedTuple):
    ring: LieRing
    projection: np.ndarray  # (m, n): coordinates of v + I in the quotient basis
    section: np.ndarray  # (n, m): quotient basis vector -> representative in g
    ideal: Subspace

    def project(self, U: Subspace) -> Subspace:
        return image_rect(self.projection, U, self.ring.n)

    def preimage(self, W: Subspace) -> Subspace:
        return image_rect(self.section, W, self.ideal.ambient_dim) + self.ideal


def image_rect(M: np.ndarray, U: Subspace, rows: int) -> Subspace:
    if not U.dim:
        return Subspace.zero(U.p, rows)
    return Subspace.span(((M @ U.matrix.T) % U.p).T, U.p, rows)


def quotient(g: LieRing, I: Subspace, name: str | None = None) -> Quotient:
    """``g / I`` on the basis of coordinates that are not pivots of ``I``."""
    if not is_ideal(g, I):
        raise ValueError("quotient by a subspace that is not an ideal")
    keep = [j for j in range(g.n) if j not in I.pivots]
    m = len(keep)
    P = np.zeros((m, g.n), dtype=DTYPE)
    for j in range(g.n):
        P[:, j] = I.reduce(g.basis_vector(j))[keep]
    S = np.zeros((g.n, m), dtype=DTYPE)
    for a, j in enumerate(keep):
        S[j, a] = 1
    T = np.zeros((m, m, m), dtype=DTYPE)
    for a in range(m):
        for b in range(m):
            T[a, b] = P @ bracket(g, S[:, a], S[:, b])
    q = LieRing(g.p, T, name if name is not None else f"{g.name}/I{I.dim}")
    return Quotient(q, P % g.p, S, I)


def sub(g: LieRing, U: Subspace, name: str | None = None):
    """The subring ``U`` as a ring on its RREF basis, with the inclusion matrix."""
    if not is_subring(g, U):
        raise ValueError("subspace is not closed under the bracket")
    B = U.matrix
    k = U.dim
    piv = U.pivots
    T = np.zeros((k, k, k), dtype=DTYPE)
    for a in range(k):
        for b in range(k):
            T[a, b] = bracket(g, B[a], B[b])[piv]
    return LieRing(g.p, T, name if name is not None else f"{g.name}|{k}"), B.T.copy()


def semidirect(base: LieRing, module_dim: int, action, name: str = "") -> LieRing:
    """``base`` acting on an abelian ideal of dimension ``module_dim``.

    ``action[i]`` is the ``module_dim`` square matrix of basis vector ``i``;
    it must be a Lie homomorphism into the endomorphisms of the module.
    """
    b, m, p = base.n, module_dim, base.p
    rho = [np.asarray(A, dtype=DTYPE).reshape(m, m) % p for A in action]
    if len(rho) != b:
        raise ValueError(f"need {b} action matrices, got {len(rho)}")
    for i in range(b):
        for j in range(b):
            lhs = sum((int(c) * rho[k] for k, c in enumerate(base.table[i, j])), np.zeros((m, m), dtype=DTYPE))
            rhs = rho[i] @ rho[j] - rho[j] @ rho[i]
            if ((lhs - rhs) % p).any():
                raise ValueError(f"action is not a representation on basis pair ({i}, {j})")
    n = b + m
    T = np.zeros((n, n, n), dtype=DTYPE)
    T[:b, :b, :b] = base.table
    for i in range(b):
        for a in range(m):
            T[i, b + a, b:] = rho[i][:, a]
            T[b + a, i, b:] = -rho[i][:, a]
    return LieRing(p, T % p, name or f"{base.name}x{m}")


def direct_sum(g1: LieRing, g2: LieRing, name: str = "") -> LieRing:
    if g1.p != g2.p:
        raise ValueError("direct sum of rings over different primes")
    n1, n2 = g1.n, g2.n
    T = np.zeros((n1 + n2,) * 3, dtype=DTYPE)
    T[:n1, :n1, :n1] = g1.table
    T[n1:, n1:, n1:] = g2.table
    return LieRing(g1.p, T, name or f"{g1.name}+{g2.name}")


def change_basis(g: LieRing, M, name: str | None = None) -> LieRing:
    """Ring isomorphic to ``g`` whose basis is the columns of ``M``."""
    M = np.asarray(M, dtype=DTYPE) % g.p
    Minv = inverse(M, g.p)  # raises on singular M
    n = g.n
    T = np.zeros((n, n, n), dtype=DTYPE)
    for a in range(n):
        for b in range(n):
            T[a, b] = Minv @ bracket(g, M[:, a], M[:, b])
    return LieRing(g.p, T, name if name is not None else g.name, g.log)


def is_irreducible_module(g: LieRing, V: Subspace, acting: Subspace | None = None, guard: int = 100_000) -> bool:
    """No nonzero proper invariant subspace inside ``V`` (spin test).

    Every nonzero vector of ``V``, up to scalars, is spun up under ``ad`` of
    ``acting`` (default ``g``); ``V`` is irreducible iff each spin is ``V``.
    """
    if spin(g, V, acting) != V:
        raise ValueError("subspace is not invariant")
    if not V.dim:
        return False
    return all(spin(g, v, acting) == V for v in V.projective_points(guard))


def minimal_ideals(g: LieRing, guard: int = 100_000) -> list[Subspace]:
    """Minimal nonzero ideals; each one is the spin of any of its vectors."""
    spins = {spin(g, v) for v in g.full().projective_points(guard)}
    mins = [U for U in spins if not any(W != U and W.is_subspace_of(U) for W in spins)]
    return sorted(mins, key=Subspace.sort_key)


def ideals(g: LieRing, guard: int = 200_000) -> list[Subspace]:
    return [U for U in enumerate_subspaces(g.n, g.p, guard=guard) if is_ideal(g, U)]


__all__ = [
    "LieRing",
    "Validation",
    "Quotient",
    "validate",
    "bracket",
    "ad",
    "ad_basis",
    "centralizer",
    "normalizer",
    "center",
    "derived",
    "derived_series",
    "lower_central_series",
    "is_abelian",
    "is_soluble",
    "is_nilpotent",
    "is_subring",
    "is_ideal",
    "subring_closure",
    "ideal_closure",
    "spin",
    "quotient",
    "sub",
    "semidirect",
    "direct_sum",
    "change_basis",
    "is_irreducible_module",
    "minimal_ideals",
    "ideals",
    "image",
]
