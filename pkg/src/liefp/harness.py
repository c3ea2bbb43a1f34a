"""Machine checks T1..T12 over a corpus of rings, with hypothesis gating.

Each check declares the hypotheses it needs.  A check whose hypotheses fail
is reported as SKIPPED together with the first failing hypothesis; a check
that runs ends in PASS or FAIL, or GUARD_EXCEEDED if an enumeration would
have been too large.  FAIL outcomes carry the ring document and the
offending objects so they can be replayed.
"""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import ringio
from .abnormal import criterion_hypotheses, irreducible_quotient, subring_lattice
from .corpus import FamilySpec, builtin_corpus, generate
from .engel import (
    ad_nilpotent_elements,
    cartan_subring,
    cartan_subrings,
    engel_minimal_subrings,
    engel_subring,
    fitting,
    largest_nilpotent_ideal,
)
from .errors import GuardExceeded
from .exactla import Subspace, image, kernel
from .frattini import frattini, frattini_fact_violations
from .inner import are_conjugate, inner_group, is_k_engel, orbit
from .liering import (
    LieRing,
    ad,
    center,
    centralizer,
    derived,
    derived_series,
    ideals,
    is_abelian,
    is_irreducible_module,
    is_nilpotent,
    is_soluble,
    lower_central_series,
    minimal_ideals,
    normalizer,
    quotient,
    validate,
)

MISMATCH = "counterexample-or-model-mismatch"


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"
    GUARD_EXCEEDED = "GUARD_EXCEEDED"


@dataclass(frozen=True)
class SuiteConfig:
    subspace_guard: int = 200_000
    element_guard: int = 100_000
    group_cap: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if min(self.subspace_guard, self.element_guard, self.group_cap) <= 0:
            raise ValueError("guards must be positive")


@dataclass
class CheckOutcome:
    ring: str
    check: str
    verdict: Verdict
    anchor: str = ""
    hypotheses: list = field(default_factory=list)
    witness: dict | None = None
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_document(self, timing: bool = False) -> dict:
        doc = {
            "check": self.check,
            "verdict": self.verdict.value,
            "anchor": self.anchor,
            "hypotheses": self.hypotheses,
            "detail": self.detail,
        }
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.verdict is Verdict.FAIL:
            doc["classification"] = MISMATCH
        if timing:
            doc["elapsed"] = round(self.elapsed, 4)
        return doc


def _basis(U: Subspace) -> list:
    return [list(r) for r in U.basis]


def _derived(g: LieRing) -> Subspace:
    return derived(g, g.full(), g.full())


# Hypotheses are evaluated in the order a check lists them.
HYPOTHESES: dict[str, Callable[[LieRing, SuiteConfig], bool]] = {
    "soluble": lambda g, c: is_soluble(g),
    "p > dim": lambda g, c: g.p > g.n,
    "non-nilpotent": lambda g, c: not is_nilpotent(g),
    "g' nilpotent": lambda g, c: is_nilpotent(g, _derived(g)),
    "g' abelian": lambda g, c: is_abelian(g, _derived(g)),
    "g' irreducible": lambda g, c: is_irreducible_module(g, _derived(g), guard=c.element_guard),
    "g' (p-1)-Engel": lambda g, c: is_k_engel(g, _derived(g), g.p - 1, c.element_guard),
}


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    anchor: str
    hypotheses: tuple
    body: Callable


def _series_ideals(g: LieRing) -> list[Subspace]:
    out = {}
    for U in derived_series(g) + lower_central_series(g) + [center(g)]:
        out.setdefault(U, None)
    return sorted(out, key=Subspace.sort_key)


# Each body returns (passed, witness, detail).


def _t1(g, cfg):
    L = subring_lattice(g, cfg.subspace_guard)
    L_min = set(L.minimal(L.def_abnormal))
    cartans = set(cartan_subrings(g, cfg.subspace_guard))
    engel_min = set(engel_minimal_subrings(g, cfg.subspace_guard, cfg.element_guard))
    found = cartan_subring(g, cfg.element_guard)
    ok = L_min == cartans == engel_min and found in cartans
    detail = {"cartan": [_basis(U) for U in sorted(cartans, key=Subspace.sort_key)], "count": len(cartans)}
    if ok:
        return True, None, detail
    key = Subspace.sort_key
    return False, {
        "minimal_def_abnormal": [_basis(U) for U in sorted(L_min, key=key)],
        "cartan": [_basis(U) for U in sorted(cartans, key=key)],
        "engel_minimal": [_basis(U) for U in sorted(engel_min, key=key)],
        "engel_search_result": _basis(found),
    }, detail


def _t2(g, cfg):
    D = _derived(g)
    full = g.full()
    C = centralizer(g, D)
    x = next(v for v in g.elements(cfg.element_guard) if not C.contains(v))
    c = centralizer(g, x)
    L = subring_lattice(g, cfg.subspace_guard)
    pos = L.position[c]
    decomposed = (D + c) == full and (D & c).dim == 0
    is_cartan = L.self_normalizing[pos] and L.nilpotent[pos]
    if not (decomposed and is_cartan):
        return False, {"element": list(map(int, x)), "centralizer": _basis(c), "derived": _basis(D),
                       "direct_sum": decomposed, "cartan": is_cartan}, {}
    detail = {"cartan": _basis(c), "centerless": center(g).dim == 0}
    if center(g).dim:
        return True, None, detail
    group = inner_group(g, D, cfg.group_cap)
    complements = [U for U in L.subrings if U.dim == g.n - D.dim and (U & D).dim == 0]
    for a in complements:
        for y in a.vectors(cfg.element_guard):
            if y.any() and centralizer(g, y) != a:
                return False, {"complement": _basis(a), "element": list(map(int, y)),
                               "centralizer": _basis(centralizer(g, y))}, detail
        if are_conjugate(g, c, a, group) is None:
            return False, {"complement": _basis(a), "cartan": _basis(c), "group_order": len(group)}, detail
    detail.update(complements=len(complements), group_order=len(group))
    return True, None, detail


def _t3(g, cfg):
    res = frattini(g, cfg.subspace_guard)
    detail = {"frattini": _basis(res.space), "maximal_subrings": len(res.maximal_subrings)}
    if res.is_ideal and res.is_nilpotent:
        return True, None, detail
    return False, {"frattini": _basis(res.space), "is_ideal": res.is_ideal, "is_nilpotent": res.is_nilpotent}, detail


def _t4(g, cfg):
    res = fitting(g, cfg.element_guard)
    lattice_fit = largest_nilpotent_ideal(g, cfg.subspace_guard)
    detail = {"fitting": _basis(res.space), "ad_nilpotent_elements": res.nilpotent_elements}
    if res.ok and res.space == lattice_fit:
        return True, None, detail
    return False, {"ad_nilpotent_span": _basis(res.space), "largest_nilpotent_ideal": _basis(lattice_fit),
                   "is_subspace": res.is_subspace, "is_ideal": res.is_ideal,
                   "is_nilpotent": res.is_nilpotent}, detail


def _nilpotent_subrings(g, cfg):
    L = subring_lattice(g, cfg.subspace_guard)
    return [U for U, nil in zip(L.subrings, L.nilpotent) if nil]


def _t5(g, cfg):
    pairs = 0
    for I in _series_ideals(g):
        q = quotient(g, I)
        for h in _nilpotent_subrings(g, cfg):
            lifted = engel_subring(q.ring, q.project(h), cfg.element_guard).space
            projected = q.project(engel_subring(g, h, cfg.element_guard).space)
            pairs += 1
            if lifted != projected:
                return False, {"ideal": _basis(I), "subring": _basis(h),
                               "engel_in_quotient": _basis(lifted), "projected_engel": _basis(projected)}, {}
    return True, None, {"pairs": pairs}


def _t6(g, cfg):
    cartans = cartan_subrings(g, cfg.subspace_guard)
    for c in cartans:
        E = engel_subring(g, c, cfg.element_guard).space
        if E != c:
            return False, {"cartan": _basis(c), "engel": _basis(E)}, {}
    return True, None, {"cartans": len(cartans)}


def _t7(g, cfg):
    nil = is_nilpotent(g)
    cases = 0
    for I in _series_ideals(g):
        I2 = derived(g, I, I)
        rhs = is_nilpotent(g, I) and is_nilpotent(quotient(g, I2).ring)
        cases += 1
        if nil != rhs:
            return False, {"ideal": _basis(I), "ring_nilpotent": nil, "ideal_and_quotient_nilpotent": rhs}, {}
    return True, None, {"ideals": cases, "ring_nilpotent": nil}


def _t8(g, cfg):
    guard = cfg.subspace_guard
    L = subring_lattice(g, guard)
    flags = dict(zip(L.subrings, L.def_abnormal))
    quotient_cases = transitive_cases = criterion_cases = 0
    for I in ideals(g, guard):
        q = quotient(g, I)
        QL = subring_lattice(q.ring, guard)
        qflags = dict(zip(QL.subrings, QL.def_abnormal))
        for a in L.subrings:
            image = qflags[q.project(a)]
            quotient_cases += 1
            if flags[a + I] != image or (flags[a] and not image):
                return False, {"part": "quotient", "ideal": _basis(I), "subring": _basis(a),
                               "abnormal": flags[a], "abnormal_with_ideal": flags[a + I],
                               "image_abnormal": image}, {}
    for a, fa in flags.items():
        if not fa:
            continue
        inner = subring_lattice(g, guard, a)
        for h, fh in zip(inner.subrings, inner.def_abnormal):
            transitive_cases += 1
            if fh and not flags[h]:
                return False, {"part": "transitivity", "outer": _basis(a), "inner": _basis(h)}, {}
    minimal = minimal_ideals(g, guard)
    for I in minimal:
        for H in L.subrings:
            if criterion_hypotheses(g, I, H, guard, minimal):
                continue
            criterion_cases += 1
            inside = subring_lattice(g, guard, H + I)
            if not inside.def_abnormal[inside.position[H]]:
                return False, {"part": "criterion", "ideal": _basis(I), "subring": _basis(H)}, {}
    return True, None, {"quotient_cases": quotient_cases, "transitivity_cases": transitive_cases,
                        "criterion_cases": criterion_cases}


def _t9(g, cfg):
    L = subring_lattice(g, cfg.subspace_guard)
    targets = [U for U, f, nil in zip(L.subrings, L.def_abnormal, L.nilpotent) if f and nil]
    group = inner_group(g, _derived(g), cfg.group_cap)
    detail = {"nilpotent_def_abnormal": len(targets), "group_order": len(group),
              "skipped_generators": len(group.skipped)}
    if not targets:
        return False, {"reason": "no nilpotent def-abnormal subring"}, detail
    orb = set(orbit(g, targets[0], group))
    missing = [U for U in targets if U not in orb]
    if missing:
        return False, {"base": _basis(targets[0]), "outside_orbit": [_basis(U) for U in missing]}, detail
    return True, None, detail


def _t10(g, cfg):
    L = subring_lattice(g, cfg.subspace_guard)
    full = g.full()
    proper = [U for U, f in zip(L.subrings, L.def_abnormal) if f and U != full]
    q = irreducible_quotient(g, cfg.subspace_guard)
    detail = {"proper_def_abnormal": len(proper), "quotient_dim": q.ring.n}
    if proper:
        return True, None, detail
    return False, {"reason": "no proper def-abnormal subring"}, detail


def _t11(g, cfg):
    D = _derived(g)
    if not is_nilpotent(g, D):
        return False, {"part": "derived nilpotent", "derived": _basis(D)}, {}
    F = largest_nilpotent_ideal(g, cfg.subspace_guard)
    L = subring_lattice(g, cfg.subspace_guard)
    nil = {tuple(map(int, x)) for x in ad_nilpotent_elements(g, cfg.element_guard)}
    count = 0
    for U in L.subrings:
        if all(tuple(map(int, v)) in nil for v in U.vectors(cfg.element_guard)):
            count += 1
            if not U.is_subspace_of(F):
                return False, {"part": "ad-nilpotent subring inside Fitting", "subring": _basis(U),
                               "fitting": _basis(F)}, {}
    return True, None, {"derived": _basis(D), "fitting": _basis(F), "ad_nilpotent_subrings": count}


def _module_instances(g, cfg):
    """``(h, V, W)``: nilpotent ``h`` acting on ``V/W`` by the adjoint action.

    Uses ``V/W = g/0`` and ``V/W = E(h)/h``.
    """
    zero = g.zero()
    for h in _nilpotent_subrings(g, cfg):
        if not h.dim:
            continue
        yield h, g.full(), zero
        E = engel_subring(g, h, cfg.element_guard).space
        if E != h:
            yield h, E, h


def _acts_nilpotently(g, h, V, W, cfg) -> bool:
    d = V.dim - W.dim
    for x in h.vectors(cfg.element_guard):
        img = V
        for _ in range(d):
            img = image(ad(g, x), img)
        if not img.is_subspace_of(W):
            return False
    return True


def _fixed_quotient(g, h, V, W) -> Subspace:
    """``{v in V : [x, v] in W for x in h}`` (contains ``W``)."""
    Wann = W.annihilator().matrix
    B = V.matrix
    rows = [(Wann @ ad(g, x) @ B.T) % g.p for x in h.basis]
    K = kernel(np.vstack(rows), g.p, cols=V.dim)
    return g.span((K.matrix @ B) % g.p) if K.dim else g.zero()


def _t12(g, cfg):
    guard = cfg.subspace_guard
    violations = frattini_fact_violations(g, guard)
    if violations:
        return False, {"part": "frattini fact", "subring": _basis(violations[0]),
                       "frattini": _basis(frattini(g, guard).space)}, {}
    full = g.full()
    arg_cases = 0
    for I in ideals(g, guard):
        for c in cartan_subrings(g, guard, within=I):
            arg_cases += 1
            if I + normalizer(g, c) != full:
                return False, {"part": "frattini argument", "ideal": _basis(I), "cartan": _basis(c),
                               "normalizer": _basis(normalizer(g, c))}, {}
    lemma_cases = 0
    for h, V, W in _module_instances(g, cfg):
        if g.p <= (V.dim - W.dim) + h.dim or not _acts_nilpotently(g, h, V, W, cfg):
            continue
        lemma_cases += 1
        if _fixed_quotient(g, h, V, W).dim <= W.dim:
            return False, {"part": "trivial action", "subring": _basis(h), "module": _basis(V),
                           "submodule": _basis(W)}, {}
    return True, None, {"argument_cases": arg_cases, "lemma_cases": lemma_cases}


CHECKS: dict[str, TheoremCheck] = {
    c.id: c
    for c in [
        TheoremCheck("T1", "minimal def-abnormal = Cartan = Engel-minimal", ("soluble", "p > dim"), _t1),
        TheoremCheck("T2", "g = g' + c with c Cartan; complements of g' conjugate when centerless",
                     ("soluble", "non-nilpotent", "g' abelian", "g' irreducible"), _t2),
        TheoremCheck("T3", "Frattini subring is a nilpotent ideal", ("soluble", "g' nilpotent"), _t3),
        TheoremCheck("T4", "Fitting ideal = ad-nilpotent elements", ("soluble", "p > dim"), _t4),
        TheoremCheck("T5", "Engel sets of nilpotent subrings pass to quotients", ("soluble", "p > dim"), _t5),
        TheoremCheck("T6", "a Cartan subring is its own Engel set", ("soluble", "p > dim"), _t6),
        TheoremCheck("T7", "g nilpotent iff I and g/I' nilpotent", (), _t7),
        TheoremCheck("T8", "abnormality: quotients, transitivity, criterion", ("soluble", "g' nilpotent"), _t8),
        TheoremCheck("T9", "nilpotent def-abnormal subrings are inner-conjugate",
                     ("soluble", "g' (p-1)-Engel"), _t9),
        TheoremCheck("T10", "a proper def-abnormal subring exists",
                     ("soluble", "non-nilpotent", "g' nilpotent"), _t10),
        TheoremCheck("T11", "g' nilpotent; ad-nilpotent subrings lie in the Fitting ideal",
                     ("soluble", "p > dim"), _t11),
        TheoremCheck("T12", "Frattini argument, Frattini fact, trivial action of nilpotent rings",
                     ("soluble",), _t12),
    ]
}


def run_check(g: LieRing, check_id: str, config: SuiteConfig | None = None) -> CheckOutcome:
    """Run one registered check on ``g``; every failure mode becomes a verdict."""
    cfg = config or SuiteConfig()
    check = CHECKS[check_id]
    out = CheckOutcome(g.name, check_id, Verdict.SKIPPED, check.anchor)
    start = time.perf_counter()
    try:
        for name in check.hypotheses:
            holds = HYPOTHESES[name](g, cfg)
            out.hypotheses.append({"name": name, "holds": holds})
            if not holds:
                out.detail = {"failed_hypothesis": name}
                return out
        passed, witness, detail = check.body(g, cfg)
    except GuardExceeded as exc:
        out.verdict = Verdict.GUARD_EXCEEDED
        out.detail = {"what": exc.what, "count": exc.count, "guard": exc.guard}
        return out
    finally:
        out.elapsed = time.perf_counter() - start
    out.detail = detail
    if passed:
        out.verdict = Verdict.PASS
    else:
        out.verdict = Verdict.FAIL
        out.witness = {"ring": ringio.to_document(g), **witness}
    return out


def replay(witness: dict, check_id: str, config: SuiteConfig | None = None) -> CheckOutcome:
    """Re-run a check on the ring stored in a FAIL witness."""
    return run_check(ringio.from_document(witness["ring"]), check_id, config)


@dataclass
class RingReport:
    name: str
    p: int
    dim: int
    validation: dict
    outcomes: list

    def to_document(self, timing: bool = False) -> dict:
        return {
            "name": self.name,
            "p": self.p,
            "dim": self.dim,
            "validation": self.validation,
            "outcomes": [o.to_document(timing) for o in self.outcomes],
        }


@dataclass
class Report:
    config: SuiteConfig
    rings: list

    def outcomes(self):
        for r in self.rings:
            yield from r.outcomes

    def counts(self) -> dict:
        out = {v.value: 0 for v in Verdict}
        for o in self.outcomes():
            out[o.verdict.value] += 1
        out["INVALID_RINGS"] = sum(not r.validation["ok"] for r in self.rings)
        return out

    @property
    def exit_status(self) -> int:
        c = self.counts()
        if c["FAIL"] or c["INVALID_RINGS"]:
            return 1
        if c["GUARD_EXCEEDED"]:
            return 3
        return 0

    def to_document(self, timing: bool = False) -> dict:
        return {
            "config": {
                "subspace_guard": self.config.subspace_guard,
                "element_guard": self.config.element_guard,
                "group_cap": self.config.group_cap,
                "seed": self.config.seed,
            },
            "rings": [r.to_document(timing) for r in self.rings],
            "summary": self.counts(),
            "exit_status": self.exit_status,
        }

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_document(timing), sort_keys=True, indent=1) + "\n"

    def lines(self) -> list[str]:
        """One human-readable line per (ring, check)."""
        rows = []
        for r in self.rings:
            if not r.validation["ok"]:
                rows.append(f"{r.name:48s} validate FAIL {r.validation}")
            for o in r.outcomes:
                extra = o.detail.get("failed_hypothesis", "") if o.verdict is Verdict.SKIPPED else ""
                rows.append(f"{r.name:48s} {o.check:4s} {o.verdict.value} {extra}".rstrip())
        return rows


def check_ring(g: LieRing, config: SuiteConfig | None = None, checks=None) -> RingReport:
    cfg = config or SuiteConfig()
    v = validate(g)
    validation = {"ok": v.ok, "kind": v.kind, "where": list(v.where) if v.where else None, "detail": v.detail}
    outcomes = []
    for cid in checks or CHECKS:
        if v.ok:
            outcomes.append(run_check(g, cid, cfg))
        else:
            outcomes.append(CheckOutcome(g.name, cid, Verdict.SKIPPED, CHECKS[cid].anchor,
                                         [{"name": "valid ring", "holds": False}],
                                         detail={"failed_hypothesis": "valid ring"}))
    return RingReport(g.name, g.p, g.n, validation, outcomes)


def verify_suite(corpus, config: SuiteConfig | None = None, checks=None) -> Report:
    """Run every registered check on every ring of ``corpus``.

    ``corpus`` holds FamilySpec entries or LieRing instances.
    """
    cfg = config or SuiteConfig()
    rings = [generate(item) if isinstance(item, FamilySpec) else item for item in corpus]
    return Report(cfg, [check_ring(g, cfg, checks) for g in rings])


def default_corpus(primes=(3, 5, 7), max_dim: int = 3, seed: int = 0) -> list[FamilySpec]:
    return builtin_corpus(primes, max_dim, range(seed, seed + 4))


def load_corpus_dir(path) -> list[LieRing]:
    """Every ``*.json`` ring file in ``path``, in name order."""
    files = sorted(Path(path).glob("*.json"))
    if not files:
        raise ringio.RingFormatError(f"no ring files in {path}")
    return [ringio.load(f) for f in files]


__all__ = [
    "CHECKS",
    "HYPOTHESES",
    "MISMATCH",
    "CheckOutcome",
    "Report",
    "RingReport",
    "SuiteConfig",
    "TheoremCheck",
    "Verdict",
    "check_ring",
    "default_corpus",
    "load_corpus_dir",
    "replay",
    "run_check",
    "verify_suite",
]
