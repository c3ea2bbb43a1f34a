"""Ring operations. Basis indices are 0-based: affine2 has [e0, e1] = e1,
heisenberg has [e0, e1] = e2."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liefp.corpus import abelian, affine2, borel, heisenberg, random_soluble, sl2, strictly_upper
from liefp.exactla import Subspace, enumerate_subspaces, rank
from liefp.liering import (
    LieRing,
    ad,
    bracket,
    center,
    centralizer,
    change_basis,
    derived,
    derived_series,
    direct_sum,
    ideal_closure,
    ideals,
    is_abelian,
    is_ideal,
    is_irreducible_module,
    is_nilpotent,
    is_soluble,
    is_subring,
    lower_central_series,
    minimal_ideals,
    normalizer,
    quotient,
    semidirect,
    sub,
    subring_closure,
    validate,
)

from conftest import all_vectors


def small_rings():
    rings = []
    for p in (2, 3):
        rings += [abelian(2, p), abelian(3, p), affine2(p), heisenberg(p), borel(2, p),
                  strictly_upper(3, p), sl2(p)]
        rings += [random_soluble(s, 3, p) for s in range(3)]
    return rings


def test_validate_examples():
    assert validate(heisenberg(3))
    bad = LieRing.from_brackets(3, 2, {(0, 0): [1, 0]})
    v = validate(bad)
    assert not v and v.kind == "alternating" and v.where == (0, 0)
    jac = LieRing.from_brackets(5, 3, {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0]})
    v = validate(jac)
    assert not v and v.kind == "jacobi" and v.where == (0, 1, 2)


def test_validate_jacobi_against_direct_expansion():
    # Oracle: evaluate the Jacobi sum on every basis triple with bracket().
    for g in small_rings():
        E = np.eye(g.n, dtype=np.int64)
        ok = True
        for i in range(g.n):
            for j in range(g.n):
                for k in range(g.n):
                    s = (bracket(g, E[i], bracket(g, E[j], E[k])) + bracket(g, E[j], bracket(g, E[k], E[i]))
                         + bracket(g, E[k], bracket(g, E[i], E[j]))) % g.p
                    ok &= not s.any()
        assert ok == validate(g).ok


def test_bracket_examples():
    h = heisenberg(5)
    assert bracket(h, [1, 0, 0], [0, 1, 0]).tolist() == [0, 0, 1]
    a = affine2(5)
    assert bracket(a, [1, 0], [2, 3]).tolist() == [0, 3]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10), st.lists(st.integers(0, 6), min_size=6, max_size=6))
def test_bracket_alternating_and_antisymmetric(seed, coords):
    g = random_soluble(seed, 3, 7)
    x = np.array(coords[: g.n])
    y = np.array(coords[3 : 3 + g.n])
    assert not bracket(g, x, x).any()
    assert np.array_equal(bracket(g, x, y), (-bracket(g, y, x)) % 7)


def test_ad_examples():
    assert not ad(affine2(5), [0, 0]).any()
    A = ad(affine2(5), [1, 0])
    assert (A @ [0, 1]).tolist() == [0, 1] and not (A @ [1, 0]).any()
    H = ad(heisenberg(5), [1, 0, 0])
    assert not ((H @ H) % 5).any()


def test_centralizer_normalizer_examples():
    a = affine2(5)
    assert centralizer(a, a.zero()) == a.full()
    assert normalizer(a, a.span([[1, 0]])) == a.span([[1, 0]])
    assert normalizer(a, a.span([[0, 1]])) == a.full()
    assert center(heisenberg(3)) == Subspace.span([[0, 0, 1]], 3, 3)


def _brute_normalizer(g, U):
    members = {tuple(v) for v in U.vectors()}
    return {tuple(y) for y in all_vectors(g.p, g.n)
            if all(tuple(bracket(g, y, u)) in members for u in U.basis)}


def _brute_centralizer(g, U):
    return {tuple(y) for y in all_vectors(g.p, g.n) if all(not bracket(g, y, u).any() for u in U.basis)}


@pytest.mark.parametrize("g", [affine2(3), heisenberg(2), borel(2, 2), random_soluble(1, 3, 3)], ids=repr)
def test_normalizer_and_centralizer_match_enumeration(g):
    for U in enumerate_subspaces(g.n, g.p):
        assert {tuple(v) for v in normalizer(g, U).vectors()} == _brute_normalizer(g, U)
        assert {tuple(v) for v in centralizer(g, U).vectors()} == _brute_centralizer(g, U)


def test_series_examples():
    g = abelian(3, 5)
    assert derived_series(g) == [g.full(), g.zero()]
    assert derived_series(sl2(5)) == [sl2(5).full()]
    assert not is_soluble(sl2(5))
    h = heisenberg(5)
    assert [U.dim for U in lower_central_series(h)] == [3, 1, 0]
    b = borel(2, 5)
    assert derived(b, b.full(), b.full()) == b.span([[0, 1, 0]])
    assert is_soluble(b) and not is_nilpotent(b)


def test_closures():
    h = heisenberg(5)
    assert subring_closure(h, []) == h.zero()
    assert subring_closure(h, [[1, 0, 0], [0, 1, 0]]) == h.full()
    a = affine2(5)
    assert ideal_closure(a, [[1, 0]]) == a.full()


def test_quotient_examples():
    h = heisenberg(5)
    assert quotient(h, h.full()).ring.n == 0
    q = quotient(h, center(h))
    assert q.ring.n == 2 and is_abelian(q.ring)
    b = borel(2, 5)
    qb = quotient(b, center(b))
    assert qb.ring.n == 2 and not is_abelian(qb.ring) and validate(qb.ring)
    # Same shape as affine2: a 2-dim non-abelian ring, so [x, y] = y for a suitable basis.
    D = derived(qb.ring, qb.ring.full(), qb.ring.full())
    assert D.dim == 1


def test_quotient_rejects_non_ideal():
    a = affine2(3)
    with pytest.raises(ValueError):
        quotient(a, a.span([[1, 0]]))


def test_quotients_always_validate():
    for g in small_rings():
        for I in ideals(g):
            q = quotient(g, I)
            assert validate(q.ring)
            assert q.preimage(q.ring.zero()) == I


def test_sub_examples():
    h = heisenberg(5)
    ring, inc = sub(h, h.full())
    assert np.array_equal(ring.table, h.table)
    ring, _ = sub(borel(2, 5), Subspace.span([[1, 0, 0], [0, 0, 1]], 5, 3))
    assert ring.n == 2 and is_abelian(ring)
    ring, _ = sub(h, h.span([[1, 0, 0], [0, 0, 1]]))
    assert ring.n == 2 and is_abelian(ring)


def test_semidirect_examples():
    base = abelian(1, 5)
    g = semidirect(base, 1, [np.eye(1, dtype=int)])
    assert np.array_equal(g.table, affine2(5).table)
    trivial = semidirect(affine2(5), 2, [np.zeros((2, 2), dtype=int)] * 2)
    assert np.array_equal(trivial.table, direct_sum(affine2(5), abelian(2, 5)).table)


def test_semidirect_rejects_non_representation():
    a = affine2(5)
    with pytest.raises(ValueError):
        semidirect(a, 1, [np.eye(1, dtype=int), np.eye(1, dtype=int)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["heisenberg", "borel", "random"]), st.sampled_from([3, 5]))
def test_change_basis_invariance(seed, kind, p):
    g = {"heisenberg": heisenberg(p), "borel": borel(2, p), "random": random_soluble(seed % 50, 3, p)}[kind]
    rng = np.random.default_rng(seed)
    while True:
        M = rng.integers(0, p, size=(g.n, g.n))
        if rank(M, p) == g.n:
            break
    h = change_basis(g, M)
    assert validate(h)
    assert is_soluble(h) == is_soluble(g) and is_nilpotent(h) == is_nilpotent(g)
    assert [U.dim for U in derived_series(h)] == [U.dim for U in derived_series(g)]
    assert [U.dim for U in lower_central_series(h)] == [U.dim for U in lower_central_series(g)]
    assert center(h).dim == center(g).dim


def test_irreducible_module_examples():
    a = affine2(5)
    assert is_irreducible_module(a, a.span([[0, 1]]))
    d = direct_sum(affine2(5), affine2(5))
    assert not is_irreducible_module(d, d.span([[0, 1, 0, 0], [0, 0, 0, 1]]))
    b = borel(2, 5)
    assert is_irreducible_module(b, b.span([[0, 1, 0]]))


def test_minimal_ideals_are_minimal():
    for g in small_rings():
        mins = minimal_ideals(g)
        all_ideals = [I for I in ideals(g) if I.dim]
        for I in mins:
            assert is_ideal(g, I)
            assert not any(J != I and J.is_subspace_of(I) for J in all_ideals)
        for J in all_ideals:
            assert any(I.is_subspace_of(J) for I in mins)


def test_normalizer_contains_subring_and_centralizer():
    for g in small_rings():
        for U in enumerate_subspaces(g.n, g.p):
            if not is_subring(g, U):
                continue
            N = normalizer(g, U)
            assert U.is_subspace_of(N)
            assert centralizer(g, U).is_subspace_of(N)


def _series_ideals(g):
    return set(derived_series(g) + lower_central_series(g) + [center(g)])


def test_hall_nilpotency_criterion():
    for g in small_rings():
        if not validate(g):
            continue
        for I in _series_ideals(g):
            rhs = is_nilpotent(g, I) and is_nilpotent(quotient(g, derived(g, I, I)).ring)
            assert is_nilpotent(g) == rhs


def test_derived_nilpotent_when_p_exceeds_dim():
    for p in (5, 7):
        for s in range(10):
            g = random_soluble(s, 4, p)
            if p > g.n:
                assert is_nilpotent(g, derived(g, g.full(), g.full()))
