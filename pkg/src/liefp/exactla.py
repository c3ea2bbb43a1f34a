"""Dense linear algebra over the prime field F_p.

Matrices are plain ``numpy`` integer arrays whose entries are kept reduced
mod ``p``.  Subspaces are carried by their reduced row echelon basis, which
makes equality, hashing and ordering canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import GuardExceeded

DTYPE = np.int64


def as_matrix(M, p: int, cols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=DTYPE)
    if A.ndim == 1:
        if A.size == 0 and cols is not None:
            A = A.reshape(0, cols)
        else:
            A = A.reshape(1, -1)
    return A % p


def rref(M, p: int, cols: int | None = None):
    """Row-reduce ``M`` over F_p.

    Returns:
        (R, rank, pivots): ``R`` has the shape of ``M`` with its nonzero rows
        first, each with a leading 1 that is the only nonzero entry of its
        column; ``pivots`` lists those columns in increasing order.
    """
    R = as_matrix(M, p, cols).copy()
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        f = R[:, c].copy()
        f[r] = 0
        if f.any():
            R = (R - np.outer(f, R[r])) % p
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(M, p: int) -> int:
    return rref(M, p)[1]


def kernel(M, p: int, cols: int | None = None) -> "Subspace":
    """Null space ``{v : M v = 0}`` as a :class:`Subspace`."""
    R, r, pivots = rref(M, p, cols)
    n = R.shape[1]
    free = [c for c in range(n) if c not in pivots]
    vecs = []
    for f in free:
        v = np.zeros(n, dtype=DTYPE)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -R[i, f]
        vecs.append(v % p)
    return Subspace.span(vecs, p, n)


def inverse(M, p: int) -> np.ndarray:
    A = as_matrix(M, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix is not square")
    R, r, _ = rref(np.hstack([A, np.eye(n, dtype=DTYPE)]), p)
    if not np.array_equal(R[:, :n], np.eye(n, dtype=DTYPE)):
        raise ValueError("matrix is singular mod %d" % p)
    return R[:, n:].copy()


def matpow(A: np.ndarray, k: int, p: int) -> np.ndarray:
    out = np.eye(A.shape[0], dtype=DTYPE)
    for _ in range(k):
        out = (A @ out) % p
    return out


def gaussian_binomial(m: int, k: int, p: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_p^m``."""
    if k < 0 or k > m:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (m - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F_p^n`` stored as its RREF basis (rows of ints)."""

    p: int
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable, p: int, n: int) -> "Subspace":
        rows = [np.asarray(v, dtype=DTYPE).reshape(-1) for v in vectors]
        for v in rows:
            if v.size != n:
                raise ValueError(f"vector of length {v.size} in F_{p}^{n}")
        if not rows:
            return cls(p, n, ())
        R, r, _ = rref(np.vstack(rows), p)
        return cls(p, n, tuple(tuple(int(a) for a in row) for row in R[:r]))

    @classmethod
    def zero(cls, p: int, n: int) -> "Subspace":
        return cls(p, n, ())

    @classmethod
    def full(cls, p: int, n: int) -> "Subspace":
        return cls(p, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.basis, dtype=DTYPE).reshape(self.dim, self.ambient_dim)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, a in enumerate(row) if a) for row in self.basis]

    def sort_key(self):
        return (self.dim, self.basis)

    def _check(self, other: "Subspace"):
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"mismatched subspaces: F_{self.p}^{self.ambient_dim} vs F_{other.p}^{other.ambient_dim}"
            )

    def reduce(self, v) -> np.ndarray:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        w = np.asarray(v, dtype=DTYPE) % self.p
        if self.dim:
            w = (w - w[self.pivots] @ self.matrix) % self.p
        return w

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=DTYPE).reshape(-1)
        if v.size != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        return not self.reduce(v).any()

    __contains__ = contains

    def coordinates(self, v) -> np.ndarray:
        """Coefficients of ``v`` on the RREF basis (``v`` must lie in the space)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return np.asarray(v, dtype=DTYPE)[self.pivots] % self.p

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        if self.dim > other.dim:
            return False
        return all(other.contains(row) for row in self.basis)

    def annihilator(self) -> "Subspace":
        """``{w : w . u = 0 for all u}``; its kernel is this subspace again."""
        if not self.dim:
            return Subspace.full(self.p, self.ambient_dim)
        return kernel(self.matrix, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.p, self.ambient_dim)
        if other.dim == self.ambient_dim:
            return self
        A = other.annihilator().matrix
        B = self.matrix
        K = kernel((A @ B.T) % self.p, self.p, cols=self.dim)
        return Subspace.span((K.matrix @ B) % self.p, self.p, self.ambient_dim)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.p, self.ambient_dim)

    __and__ = intersect
    __add__ = sum

    def vectors(self, guard: int = 10**6) -> np.ndarray:
        """All ``p**dim`` vectors, sorted lexicographically by coordinates."""
        count = self.p**self.dim
        if count > guard:
            raise GuardExceeded("vector enumeration", count, guard)
        coeffs = np.array(list(itertools.product(range(self.p), repeat=self.dim)), dtype=DTYPE)
        coeffs = coeffs.reshape(count, self.dim)
        V = (coeffs @ self.matrix) % self.p
        order = np.lexsort(V.T[::-1]) if self.ambient_dim else np.arange(count)
        return V[order]

    def projective_points(self, guard: int = 10**6) -> np.ndarray:
        """One representative (first nonzero coordinate 1) per nonzero line."""
        V = self.vectors(guard)
        keep = []
        for i, v in enumerate(V):
            nz = np.flatnonzero(v)
            if nz.size and v[nz[0]] == 1:
                keep.append(i)
        return V[keep]

    def __repr__(self):
        rows = ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.basis)
        return f"Subspace(F_{self.p}^{self.ambient_dim}: {{{rows}}})"


def span(vectors, p: int, n: int) -> Subspace:
    return Subspace.span(vectors, p, n)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    return U.intersect(V)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    return U.sum(V)


def contains(U: Subspace, v) -> bool:
    return U.contains(v)


def is_subspace_of(U: Subspace, V: Subspace) -> bool:
    return U.is_subspace_of(V)


def complement_basis(inner: Subspace, outer: Subspace) -> list[np.ndarray]:
    """Vectors of ``outer``'s basis that extend ``inner`` to a basis of ``outer``."""
    cur = inner
    out = []
    for row in outer.basis:
        if not cur.contains(row):
            out.append(np.array(row, dtype=DTYPE))
            cur = cur.sum(Subspace(cur.p, cur.ambient_dim, (row,)))
    return out


def count_subspaces(m: int, p: int, dims=None) -> int:
    dims = range(m + 1) if dims is None else dims
    return sum(gaussian_binomial(m, k, p) for k in dims)


def _rref_patterns(m: int, k: int, p: int) -> Iterator[np.ndarray]:
    for pivots in itertools.combinations(range(m), k):
        free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, m) if j not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            R = np.zeros((k, m), dtype=DTYPE)
            for i, c in enumerate(pivots):
                R[i, c] = 1
            for (i, j), a in zip(free, values):
                R[i, j] = a
            yield R


def enumerate_subspaces(
    ambient_dim: int,
    p: int,
    containing: Subspace | None = None,
    guard: int = 200_000,
    within: Subspace | None = None,
    dim: int | None = None,
) -> Iterator[Subspace]:
    """Every subspace ``W`` with ``containing <= W <= within``, each once.

    The count is checked against ``guard`` before anything is produced, and
    results come out in canonical order (by dimension, then RREF basis).
    ``dim`` restricts the output to one dimension.
    """
    if guard <= 0:
        raise ValueError("guard must be positive")
    C = containing if containing is not None else Subspace.zero(p, ambient_dim)
    B = within if within is not None else Subspace.full(p, ambient_dim)
    if C.ambient_dim != ambient_dim or C.p != p:
        raise ValueError("containing subspace lives in a different space")
    if not C.is_subspace_of(B):
        return
    comp = complement_basis(C, B)
    m = len(comp)
    if dim is None:
        ks = list(range(m + 1))
    else:
        ks = [dim - C.dim] if 0 <= dim - C.dim <= m else []
    count = count_subspaces(m, p, ks)
    if count > guard:
        raise GuardExceeded("subspace enumeration", count, guard)
    Q = np.array(comp, dtype=DTYPE).reshape(m, ambient_dim)
    out = []
    for k in ks:
        for R in _rref_patterns(m, k, p):
            out.append(Subspace.span(list(C.basis) + list((R @ Q) % p), p, ambient_dim))
    out.sort(key=Subspace.sort_key)
    yield from out


def enumerate_vectors(U: Subspace, guard: int = 100_000) -> Iterator[np.ndarray]:
    """All ``p**dim(U)`` vectors of ``U`` (raises before yielding if over guard)."""
    yield from U.vectors(guard)


def image(M, U: Subspace) -> Subspace:
    """``M(U)`` for a square matrix ``M`` acting on column vectors."""
    M = np.asarray(M, dtype=DTYPE)
    if not U.dim:
        return Subspace.zero(U.p, M.shape[0])
    return Subspace.span(((M @ U.matrix.T) % U.p).T, U.p, M.shape[0])


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))
