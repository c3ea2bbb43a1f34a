"""Example families of Lie rings and seeded random soluble rings."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactla import DTYPE, is_prime, rank
from .liering import (
    LieRing,
    ad,
    change_basis,
    derived,
    is_soluble,
    semidirect,
    validate,
)

FAMILIES = (
    "abelian",
    "affine2",
    "heisenberg",
    "strictly_upper",
    "borel",
    "sl2",
    "semidirect_scalar",
    "random_soluble",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 1
    p: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 1:
            raise ValueError("size parameter must be at least 1")


def abelian(n: int, p: int) -> LieRing:
    return LieRing(p, np.zeros((n, n, n), dtype=DTYPE), f"abelian({n},{p})")


def affine2(p: int) -> LieRing:
    """``[e0, e1] = e1``: the non-abelian 2-dimensional ring."""
    return LieRing.from_brackets(p, 2, {(0, 1): [0, 1]}, f"affine2({p})")


def heisenberg(p: int) -> LieRing:
    return LieRing.from_brackets(p, 3, {(0, 1): [0, 0, 1]}, f"heisenberg({p})")


def _matrix_ring(units, n, p, name):
    """Span of matrix units ``(i, j)`` under the commutator."""
    index = {u: k for k, u in enumerate(units)}
    d = len(units)
    T = np.zeros((d, d, d), dtype=DTYPE)
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                T[a, b, index[(i, l)]] += 1
            if l == i:
                T[a, b, index[(k, j)]] -= 1
    return LieRing(p, T, name)


def strictly_upper(n: int, p: int) -> LieRing:
    """Strictly upper triangular ``n x n`` matrices; basis ``e_ij`` (i<j) row-major."""
    units = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return _matrix_ring(units, n, p, f"strictly_upper({n},{p})")


def borel(n: int, p: int) -> LieRing:
    """Upper triangular ``n x n`` matrices; basis ``e_ij`` (i<=j) row-major.

    For ``n = 2`` the basis is ``e11, e12, e22``.
    """
    units = [(i, j) for i in range(n) for j in range(i, n)]
    return _matrix_ring(units, n, p, f"borel({n},{p})")


def sl2(p: int) -> LieRing:
    """Basis ``e, h, f`` with ``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h``."""
    return LieRing.from_brackets(
        p, 3, {(0, 1): [-2, 0, 0], (0, 2): [0, 1, 0], (1, 2): [0, 0, -2]}, f"sl2({p})"
    )


def semidirect_scalar(p: int) -> LieRing:
    base = abelian(1, p)
    return semidirect(base, 1, [np.eye(1, dtype=DTYPE)], f"semidirect_scalar({p})")


def _random_invertible(rng, n, p):
    while True:
        M = rng.integers(0, p, size=(n, n))
        if rank(M, p) == n:
            return M.astype(DTYPE)


def _abelianized_action(g: LieRing, m: int, rng):
    """A representation of ``g`` on ``F_p^m`` that kills ``g'``.

    Linear functionals vanishing on ``g'`` are sent to commuting matrices
    (random polynomials in one random matrix), so the bracket relation holds
    with both sides zero.
    """
    p = g.p
    funcs = derived(g, g.full(), g.full()).annihilator().matrix
    A = rng.integers(0, p, size=(m, m)).astype(DTYPE)
    powers = [np.eye(m, dtype=DTYPE)]
    for _ in range(1, m):
        powers.append((A @ powers[-1]) % p)
    images = []
    for _ in range(funcs.shape[0]):
        c = rng.integers(0, p, size=len(powers))
        images.append(sum(int(ci) * P for ci, P in zip(c, powers)) % p)
    action = []
    for i in range(g.n):
        R = np.zeros((m, m), dtype=DTYPE)
        for w, B in zip(funcs, images):
            R = R + int(w[i]) * B
        action.append(R % p)
    return action


def random_soluble(seed: int, max_dim: int, p: int) -> LieRing:
    """A soluble ring of dimension between ``min(2, max_dim)`` and ``max_dim``.

    Starts from a 1- or 2-dimensional soluble base and repeatedly adjoins an
    abelian ideal carrying a checked representation, then scrambles the
    basis.  Each step is written to ``ring.log``.
    """
    if not 1 <= max_dim <= 6:
        raise ValueError("max_dim must be between 1 and 6")
    rng = np.random.default_rng([seed, max_dim, p])
    target = int(rng.integers(min(2, max_dim), max_dim + 1))
    log = [f"seed={seed} max_dim={max_dim} p={p} target_dim={target}"]
    if target >= 2 and rng.random() < 0.5:
        g = affine2(p) if rng.random() < 0.5 else abelian(2, p)
    else:
        g = abelian(1, p)
    log.append(f"base {g.name}")
    while g.n < target:
        m = int(rng.integers(1, target - g.n + 1))
        u = rng.random()
        if m == g.n and u < 0.25:
            action, kind = [ad(g, g.basis_vector(i)) for i in range(g.n)], "adjoint"
        elif u < 0.35:
            action, kind = [np.zeros((m, m), dtype=DTYPE)] * g.n, "trivial"
        else:
            action, kind = _abelianized_action(g, m, rng), "abelianized"
        g = semidirect(g, m, action, g.name)
        log.append(f"extend by {m}-dim module ({kind} action) -> dim {g.n}")
    M = _random_invertible(rng, g.n, p)
    log.append(f"basis scramble {M.tolist()}")
    name = f"random_soluble(seed={seed},max_dim={max_dim},p={p})"
    out = LieRing(p, change_basis(g, M).table, name, tuple(log))
    assert validate(out) and is_soluble(out)
    return out


def generate(spec: FamilySpec) -> LieRing:
    f, n, p = spec.family, spec.n, spec.p
    if f == "abelian":
        return abelian(n, p)
    if f == "affine2":
        return affine2(p)
    if f == "heisenberg":
        return heisenberg(p)
    if f == "strictly_upper":
        return strictly_upper(n, p)
    if f == "borel":
        return borel(n, p)
    if f == "sl2":
        return sl2(p)
    if f == "semidirect_scalar":
        return semidirect_scalar(p)
    return random_soluble(spec.seed, n, p)


def family_dim(spec: FamilySpec) -> int:
    """Dimension of the generated ring (an upper bound for random_soluble)."""
    f, n = spec.family, spec.n
    return {
        "abelian": n,
        "affine2": 2,
        "heisenberg": 3,
        "strictly_upper": n * (n - 1) // 2,
        "borel": n * (n + 1) // 2,
        "sl2": 3,
        "semidirect_scalar": 2,
        "random_soluble": n,
    }[f]


def builtin_corpus(primes=(3, 5, 7), max_dim: int = 3, seeds=range(4)) -> list[FamilySpec]:
    """The default list of rings the theorem suite runs over."""
    specs = []
    for p in primes:
        candidates = [FamilySpec("abelian", k, p) for k in range(1, max_dim + 1)]
        candidates += [
            FamilySpec("affine2", 2, p),
            FamilySpec("semidirect_scalar", 1, p),
            FamilySpec("heisenberg", 3, p),
            FamilySpec("strictly_upper", 3, p),
            FamilySpec("strictly_upper", 4, p),
            FamilySpec("borel", 2, p),
            FamilySpec("borel", 3, p),
            FamilySpec("sl2", 3, p),
        ]
        candidates += [FamilySpec("random_soluble", max_dim, p, s) for s in seeds]
        specs += [s for s in candidates if family_dim(s) <= max_dim]
    return specs


__all__ = [
    "FAMILIES",
    "FamilySpec",
    "abelian",
    "affine2",
    "heisenberg",
    "strictly_upper",
    "borel",
    "sl2",
    "semidirect_scalar",
    "random_soluble",
    "generate",
    "family_dim",
    "builtin_corpus",
]
