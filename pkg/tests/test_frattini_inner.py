"""Frattini subring, inner automorphisms, conjugacy (0-based basis indices)."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liefp.abnormal import is_def_abnormal, subring_lattice
from liefp.corpus import abelian, affine2, borel, heisenberg, random_soluble, strictly_upper
from liefp.engel import cartan_subrings, fitting, is_cartan
from liefp.errors import GuardExceeded, IndexExceedsCharacteristic, NotNilpotent
from liefp.exactla import image
from liefp.frattini import (
    common_ideal_in_frattini,
    frattini,
    frattini_argument_check,
    frattini_fact_check,
    frattini_fact_violations,
    maximal_subrings,
)
from liefp.inner import are_conjugate, exp_ad, inner_group, is_k_engel, orbit, respects_bracket
from liefp.liering import center, derived, ideals, is_nilpotent, is_subring


def test_maximal_subrings_examples():
    for p in (2, 3, 5):
        assert len(maximal_subrings(abelian(2, p))) == p + 1
    h = heisenberg(2)
    planes = maximal_subrings(h)
    assert len(planes) == 3 and all(P.dim == 2 and center(h).is_subspace_of(P) for P in planes)
    a = affine2(3)
    assert [M.dim for M in maximal_subrings(a)] == [1, 1, 1, 1]


def test_maximal_subrings_brute_force():
    for g in [borel(2, 3), random_soluble(1, 3, 3)]:
        subs = [U for U in subring_lattice(g).subrings if U != g.full()]
        brute = [U for U in subs if not any(V != U and U.is_subspace_of(V) for V in subs)]
        assert maximal_subrings(g) == brute


def test_frattini_examples():
    assert frattini(abelian(3, 3)).space.dim == 0
    for p in (2, 3):
        h = heisenberg(p)
        res = frattini(h)
        assert res.space == center(h) and res.is_ideal and res.is_nilpotent
    for p in (3, 5, 7):
        assert frattini(affine2(p)).space.dim == 0


def test_frattini_flags_on_soluble_rings():
    rings = [borel(2, 3), borel(2, 5), strictly_upper(3, 3)] + [random_soluble(s, 3, p) for s in range(6) for p in (3, 5)]
    for g in rings:
        D = derived(g, g.full(), g.full())
        res = frattini(g)
        for M in res.maximal_subrings:
            assert res.space.is_subspace_of(M)
        assert is_subring(g, res.space)
        if res.space == g.full():
            continue
        if is_nilpotent(g, D):
            assert res.is_ideal and res.is_nilpotent


def test_frattini_fact():
    h = heisenberg(2)
    assert frattini_fact_violations(h) == []
    for g in [affine2(5), borel(2, 3), strictly_upper(3, 2)] + [random_soluble(s, 3, 3) for s in range(5)]:
        assert frattini_fact_check(g)


def test_common_ideal_lies_in_frattini():
    for g in [heisenberg(3), borel(2, 3), random_soluble(2, 3, 5)]:
        for J in ideals(g):
            assert common_ideal_in_frattini(g, J)


def test_frattini_argument_examples():
    b = borel(2, 5)
    F = fitting(b).space
    assert frattini_argument_check(b, F)
    assert frattini_argument_check(b, b.full())
    assert frattini_argument_check(b, b.zero())
    for g in [borel(2, 3)] + [random_soluble(s, 3, 5) for s in range(5)]:
        for I in ideals(g):
            assert frattini_argument_check(g, I, all_cartans=True)
    with pytest.raises(ValueError):
        frattini_argument_check(b, b.span([[1, 0, 0]]))


def test_exp_ad_examples():
    h = heisenberg(5)
    assert np.array_equal(exp_ad(h, [0, 0, 0]).matrix, np.eye(3))
    phi = exp_ad(h, [1, 0, 0])
    assert phi([0, 1, 0]).tolist() == [0, 1, 1]
    assert phi([1, 0, 0]).tolist() == [1, 0, 0] and phi([0, 0, 1]).tolist() == [0, 0, 1]
    assert phi.nilpotency_index == 2


def test_exp_ad_index_above_characteristic():
    # Basis e12, e13, e23. In the 3x3 ring ad(e12 + e23)^2 already lands in
    # [g, [g, g]] = 0, so the index is 2 = p. In the 4x4 ring
    # e12 + e23 + e34 has index 3 > 2.
    assert exp_ad(strictly_upper(3, 2), [1, 0, 1]).nilpotency_index == 2
    g = strictly_upper(4, 2)
    x = np.zeros(6, dtype=int)
    x[[0, 3, 5]] = 1
    with pytest.raises(IndexExceedsCharacteristic):
        exp_ad(g, x)
    with pytest.raises(NotNilpotent):
        exp_ad(affine2(5), [1, 0])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 40), st.sampled_from([3, 5, 7]), st.integers(0, 10**6))
def test_exp_ad_inverse_and_automorphism_laws(seed, p, pick):
    g = random_soluble(seed, 3, p)
    xs = g.elements()
    x = xs[pick % len(xs)]
    try:
        phi = exp_ad(g, x)
    except (NotNilpotent, IndexExceedsCharacteristic):
        return
    assert respects_bracket(g, phi.matrix)
    inv = exp_ad(g, (-x) % p)
    assert np.array_equal((phi.matrix @ inv.matrix) % p, np.eye(g.n))


def test_inner_group_examples():
    g = abelian(3, 3)
    assert len(inner_group(g, g.full())) == 1
    h = heisenberg(3)
    assert len(inner_group(h, center(h))) == 1
    a = affine2(3)
    G = inner_group(a, a.span([[0, 1]]))
    assert len(G) == 3 and not G.skipped
    # Oracle: the three maps Id + lam * ad(e1).
    shear = np.array([[0, 0], [-1, 0]])
    expected = {tuple(((np.eye(2, dtype=int) + lam * shear) % 3).ravel()) for lam in range(3)}
    assert {tuple(M.ravel()) for M in G.elements} == expected


def test_inner_group_closure_and_cap():
    g = strictly_upper(3, 3)
    G = inner_group(g, g.full())
    keys = {tuple(M.ravel()) for M in G.elements}
    for A in G.elements:
        for B in G.elements:
            assert tuple(((A @ B) % 3).ravel()) in keys
    # Inner maps of a Heisenberg ring factor through g/Z, so 3^2 of them.
    assert len(G) == 9
    with pytest.raises(GuardExceeded):
        inner_group(g, g.full(), cap=10)


def test_inner_group_words_reproduce_elements():
    g = strictly_upper(3, 3)
    G = inner_group(g, g.full())
    for i in range(0, len(G), 5):
        M = np.eye(g.n, dtype=int)
        for phi in G.chain(i):
            M = (phi.matrix @ M) % 3
        assert np.array_equal(M, G.elements[i])


def test_are_conjugate_examples():
    a = affine2(3)
    G = inner_group(a, a.span([[0, 1]]))
    U = a.span([[1, 0]])
    same = are_conjugate(a, U, U, G)
    assert np.array_equal(same.matrix, np.eye(2)) and same.chain == []
    conj = are_conjugate(a, U, a.span([[1, 1]]), G)
    assert conj is not None and image(conj.matrix, U) == a.span([[1, 1]])
    assert are_conjugate(a, U, a.span([[0, 1]]), G) is None
    assert len(orbit(a, U, G)) == 3


def test_is_k_engel_examples():
    g = abelian(2, 5)
    assert is_k_engel(g, g.full(), 1)
    h = heisenberg(5)
    assert is_k_engel(h, h.full(), 2)
    a = affine2(5)
    D = a.span([[0, 1]])
    assert not is_k_engel(a, D, 1) and is_k_engel(a, D, 2)
    with pytest.raises(GuardExceeded):
        is_k_engel(a, a.full(), 1, guard=5)


def test_conjugation_preserves_cartan_and_abnormality():
    for g in [affine2(5), borel(2, 5), random_soluble(0, 3, 5)]:
        G = inner_group(g, derived(g, g.full(), g.full()))
        for U in subring_lattice(g).subrings[::3]:
            for M in G.elements[:5]:
                V = image(M, U)
                assert is_subring(g, V)
                assert is_cartan(g, U) == is_cartan(g, V)
                assert bool(is_def_abnormal(g, U)) == bool(is_def_abnormal(g, V))


def test_cartans_form_one_orbit_when_derived_is_engel():
    for p in (3, 5):
        a = affine2(p)
        G = inner_group(a, a.span([[0, 1]]))
        cs = cartan_subrings(a)
        assert set(orbit(a, cs[0], G)) == set(cs)
