import json

import numpy as np
import pytest

from liefp import ringio
from liefp.corpus import (
    FAMILIES,
    FamilySpec,
    abelian,
    affine2,
    borel,
    builtin_corpus,
    family_dim,
    generate,
    heisenberg,
    random_soluble,
    semidirect_scalar,
    sl2,
    strictly_upper,
)
from liefp.liering import center, derived, is_nilpotent, is_soluble, validate


def test_roundtrip_every_family(tmp_path):
    for fam in FAMILIES:
        g = generate(FamilySpec(fam, 3 if fam != "borel" else 2, 5, 7))
        path = tmp_path / f"{fam}.json"
        ringio.dump(g, path)
        h = ringio.load(path)
        assert h == g and h.name == g.name


def test_document_format():
    doc = json.loads(ringio.dumps(affine2(5)))
    assert doc == {"p": 5, "dim": 2, "name": "affine2(5)", "brackets": [[0, 1, [0, 1]]]}


@pytest.mark.parametrize("text", [
    "not json",
    "[1, 2]",
    '{"dim": 2}',
    '{"p": 5, "dim": 2, "brackets": [[1, 0, [0, 1]]]}',
    '{"p": 5, "dim": 2, "brackets": [[0, 1, [0.5, 1]]]}',
    '{"p": 5, "dim": 2, "brackets": [[0, 1, [0, 1, 0]]]}',
    '{"p": 4, "dim": 2, "brackets": []}',
])
def test_malformed_documents_are_rejected(text):
    with pytest.raises(ringio.RingFormatError):
        ringio.loads(text)


def test_family_examples():
    h = heisenberg(3)
    assert h.n == 3 and is_nilpotent(h) and center(h) == h.span([[0, 0, 1]])
    b = borel(2, 5)
    assert b.n == 3 and is_soluble(b) and not is_nilpotent(b)
    assert derived(b, b.full(), b.full()) == b.span([[0, 1, 0]])
    s = sl2(5)
    assert derived(s, s.full(), s.full()) == s.full() and not is_soluble(s)
    assert np.array_equal(semidirect_scalar(5).table, affine2(5).table)
    assert strictly_upper(4, 3).n == 6 and is_nilpotent(strictly_upper(4, 3))


def test_family_dims_and_validity():
    for fam in FAMILIES:
        for p in (2, 3, 5):
            spec = FamilySpec(fam, 3, p, 1)
            g = generate(spec)
            assert validate(g)
            assert g.n <= family_dim(spec)
            if fam != "random_soluble":
                assert g.n == family_dim(spec)


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec("nope", 1, 5)
    with pytest.raises(ValueError):
        FamilySpec("abelian", 1, 6)
    with pytest.raises(ValueError):
        FamilySpec("abelian", 0, 5)


def test_random_soluble_is_deterministic():
    a, b = random_soluble(0, 3, 5), random_soluble(0, 3, 5)
    assert np.array_equal(a.table, b.table) and a.log == b.log
    assert a.log[0].startswith("seed=0")


def test_random_soluble_fuzz():
    dims = set()
    for seed in range(200):
        g = random_soluble(seed, 4, (3, 5, 7)[seed % 3])
        assert validate(g) and is_soluble(g)
        dims.add(g.n)
    assert dims == {2, 3, 4}


def test_builtin_corpus_respects_dimension():
    specs = builtin_corpus((3, 5), max_dim=3)
    assert all(family_dim(s) <= 3 for s in specs)
    assert FamilySpec("sl2", 3, 3) in specs and FamilySpec("abelian", 1, 5) in specs
    for s in specs:
        if s.family in ("abelian", "affine2", "heisenberg", "strictly_upper", "borel", "random_soluble",
                        "semidirect_scalar"):
            assert is_soluble(generate(s))
    assert not is_soluble(generate(FamilySpec("sl2", 3, 5)))
    assert abelian(1, 3).n == 1
