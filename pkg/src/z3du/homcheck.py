"""Homomorphism / antihomomorphism verification.

A GenMap assigns target elements (noncommutative polynomials in a presented
target, or matrices) to the source generators.  check_hom substitutes the
images into every source relation — reversing word factor order for
antihomomorphisms — and reduces; a zero residue verifies the relation.

Outcomes are three-valued: verified / refuted-with-witness / inconclusive.
Non-confluent presented targets can certify membership (residue 0) but
never non-membership, so nonzero residues there are inconclusive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from .catalog import Presentation
from .coeff import ParamSet, RatFunc
from .freealg import AlgebraError, NcPoly
from .matrep import MatElt, MatrixError
from .rewrite import RewriteSystem, Rule, complete


@dataclass(frozen=True)
class MatTarget:
    """Matrix-algebra target: n x n matrices over a parameter set."""

    n: int
    params: ParamSet


@dataclass
class PresTarget:
    """Presented-algebra target: the presentation plus a rewrite system
    (raw, completed, or confluent) used for reduction."""

    presentation: Presentation
    system: RewriteSystem


Target = Union[PresTarget, MatTarget]


@dataclass
class RelationOutcome:
    label: str
    outcome: str  # "verified" | "refuted" | "inconclusive"
    residue: Optional[str] = None


@dataclass
class CheckReport:
    title: str
    verdict: str  # "verified" | "refuted" | "inconclusive"
    entries: List[RelationOutcome]
    tag: str = ""

    @property
    def verified(self) -> bool:
        return self.verdict == "verified"

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "verdict": self.verdict,
            "tag": self.tag,
            "relations": [
                {"relation": e.label, "outcome": e.outcome,
                 **({"residue": e.residue} if e.residue else {})}
                for e in self.entries
            ],
        }

    def to_text(self) -> str:
        lines = [f"{self.title}: {self.verdict}"]
        for e in self.entries:
            line = f"  {e.outcome:12s} {e.label}"
            if e.residue:
                line += f"   residue: {e.residue}"
            lines.append(line)
        return "\n".join(lines)


@dataclass
class GenMap:
    """Generator assignment from a source presentation into a target."""

    source: Presentation
    target: Target
    images: Dict[str, Union[NcPoly, MatElt]]
    direction: str = "hom"  # "hom" | "anti"
    name: str = ""

    def __post_init__(self):
        if self.direction not in ("hom", "anti"):
            raise ValueError(f"direction must be 'hom' or 'anti', not {self.direction!r}")
        missing = [g for g in self.source.alphabet.names if g not in self.images]
        if missing:
            raise AlgebraError(f"missing images for generators {missing}")
        for g, img in self.images.items():
            if isinstance(self.target, MatTarget):
                if not isinstance(img, MatElt) or img.n != self.target.n:
                    raise MatrixError(f"image of {g!r} is not a {self.target.n}x{self.target.n} matrix")
            else:
                if not isinstance(img, NcPoly) or img.alphabet != self.target.presentation.alphabet:
                    raise AlgebraError(f"image of {g!r} is not over the target alphabet")

    def unified_params(self) -> ParamSet:
        ps = self.source.params
        if isinstance(self.target, MatTarget):
            ps = ps.union(self.target.params)
        else:
            ps = ps.union(self.target.presentation.params)
        for img in self.images.values():
            ps = ps.union(img.params)
        return ps


def embed_system(sys: RewriteSystem, params: ParamSet) -> RewriteSystem:
    """Re-express a rewrite system's coefficients over a superset ParamSet."""
    if params == sys.params:
        return sys
    new = RewriteSystem(sys.alphabet, params, sys.order, [p.embed(params) for p in sys.originals])
    new.rules = [
        Rule(
            r.lhs,
            r.rhs.embed(params),
            r.uid,
            tuple((c.embed(params), u, k, v) for c, u, k, v in r.combo),
        )
        for r in sys.rules
    ]
    new._uid = itertools.count(max((r.uid for r in sys.rules), default=-1) + 1)
    new.status = sys.status
    new.complete_degree = sys.complete_degree
    new._bump()
    return new


def default_completion_degree(m: GenMap) -> int:
    """2 + max degree over source relations and images (presented targets)."""
    deg = max((r.degree() for r in m.source.relations), default=1)
    for img in m.images.values():
        if isinstance(img, NcPoly):
            deg = max(deg, img.degree())
    return deg + 2


def _apply_to_word(m: GenMap, w: bytes, images, one):
    seq = bytes(reversed(w)) if m.direction == "anti" else w
    cur = one
    for b in seq:
        cur = cur * images[m.source.alphabet.names[b]]
    return cur


def apply_to_poly(m: GenMap, p: NcPoly, images, params: ParamSet):
    """Substitute images into p (words reversed for antihomomorphisms)."""
    if isinstance(m.target, MatTarget):
        acc = MatElt.zero(params, m.target.n)
        one = MatElt.identity(params, m.target.n)
        for w, c in p.terms.items():
            acc = acc + _apply_to_word(m, w, images, one).scale(c.embed(params))
        return acc
    tgt_alpha = m.target.presentation.alphabet
    acc = NcPoly.zero(tgt_alpha, params)
    one = NcPoly.const(tgt_alpha, params, 1)
    for w, c in p.terms.items():
        acc = acc + c.embed(params) * _apply_to_word(m, w, images, one)
    return acc


def _prepare(m: GenMap, completion_deg: Optional[int]):
    """Unified params, embedded images, and the (completed) reduction system."""
    params = m.unified_params()
    images = {g: img.embed(params) for g, img in m.images.items()}
    if isinstance(m.target, MatTarget):
        return params, images, None
    sys = m.target.system
    if completion_deg is not None and sys.status == "raw":
        sys, _ = complete(sys, completion_deg)
        m.target.system = sys
    return params, images, embed_system(sys, params)


def check_hom(m: GenMap, completion_deg: Optional[int] = None) -> CheckReport:
    """Verify that the assignment respects every source relation.

    Presented raw targets are completed to completion_deg first (default:
    2 + max degree over source relations and images).
    """
    if completion_deg is None and isinstance(m.target, PresTarget):
        completion_deg = default_completion_degree(m)
    params, images, sys = _prepare(m, completion_deg)
    entries: List[RelationOutcome] = []
    exact = isinstance(m.target, MatTarget)
    for rel in m.source.relations:
        image = apply_to_poly(m, rel, images, params)
        if exact:
            residue = image
            zero = residue.is_zero()
            text = None if zero else residue.render()
        else:
            residue = sys.normal_form(image)
            zero = not residue
            text = None if zero else residue.render(sys.order)
        if zero:
            outcome = "verified"
        elif exact or sys.status == "confluent":
            outcome = "refuted"
        else:
            outcome = "inconclusive"
        entries.append(RelationOutcome(rel.render(m.source.order), outcome, text))
    if all(e.outcome == "verified" for e in entries):
        verdict = "verified"
    elif any(e.outcome == "refuted" for e in entries):
        verdict = "refuted"
    else:
        verdict = "inconclusive"
    title = m.name or f"{m.source.name} -> target ({m.direction})"
    return CheckReport(title=title, verdict=verdict, entries=entries)


def compose(m1: GenMap, m2: GenMap) -> GenMap:
    """The map 'm1 then m2' (m2 o m1 as functions).

    m1's target must be presented and carry the same alphabet as m2's
    source.  Antihomomorphism parity composes (anti o anti = hom).
    """
    if not isinstance(m1.target, PresTarget):
        raise AlgebraError("compose needs a presented intermediate target")
    if m1.target.presentation.alphabet != m2.source.alphabet:
        raise AlgebraError("carrier mismatch: m1 target alphabet != m2 source alphabet")
    params = m2.unified_params().union(m1.unified_params())
    images2 = {g: img.embed(params) for g, img in m2.images.items()}
    sys = None
    if isinstance(m2.target, PresTarget):
        sys = embed_system(m2.target.system, params)
    new_images = {}
    for g in m1.source.alphabet.names:
        p = m1.images[g]
        img = apply_to_poly(m2, p.embed(params), images2, params)
        if sys is not None:
            img = sys.normal_form(img)
        new_images[g] = img
    direction = "hom" if m1.direction == m2.direction else "anti"
    return GenMap(
        source=m1.source,
        target=m2.target,
        images=new_images,
        direction=direction,
        name=f"({m2.name or '?'}) o ({m1.name or '?'})",
    )


def is_identity(m: GenMap, completion_deg: Optional[int] = None) -> CheckReport:
    """Does the map fix every generator (after target reduction)?"""
    if not isinstance(m.target, PresTarget):
        raise AlgebraError("is_identity needs a presented target")
    if m.target.presentation.alphabet != m.source.alphabet:
        raise AlgebraError("is_identity needs source and target on the same alphabet")
    params, images, sys = _prepare(m, completion_deg)
    entries = []
    for g in m.source.alphabet.names:
        img = sys.normal_form(images[g])
        expect = NcPoly.gen(sys.alphabet, params, g)
        ok = img == expect
        entries.append(
            RelationOutcome(
                f"{g} -> {img.render(sys.order)}",
                "verified" if ok else ("refuted" if sys.status == "confluent" else "inconclusive"),
                None if ok else img.render(sys.order),
            )
        )
    verdict = (
        "verified"
        if all(e.outcome == "verified" for e in entries)
        else ("refuted" if any(e.outcome == "refuted" for e in entries) else "inconclusive")
    )
    return CheckReport(title=m.name or "identity check", verdict=verdict, entries=entries)


def equal_on_generators(m1: GenMap, m2: GenMap) -> bool:
    """Do two maps with presented targets agree on every source generator?"""
    if m1.source.alphabet != m2.source.alphabet:
        raise AlgebraError("source alphabet mismatch")
    if not isinstance(m1.target, PresTarget) or not isinstance(m2.target, PresTarget):
        raise AlgebraError("generator comparison needs presented targets")
    if m1.target.presentation.alphabet != m2.target.presentation.alphabet:
        raise AlgebraError("target alphabet mismatch")
    params = m1.unified_params().union(m2.unified_params())
    sys = embed_system(m1.target.system, params)
    for g in m1.source.alphabet.names:
        a = sys.normal_form(m1.images[g].embed(params))
        b = sys.normal_form(m2.images[g].embed(params))
        if a != b:
            return False
    return True


def ideal_implication(
    source_relations: Sequence[NcPoly],
    target_sys: RewriteSystem,
    completion_deg: Optional[int] = None,
    title: str = "ideal implication",
) -> CheckReport:
    """Certify that each relation lies in the target ideal by reduction to 0.

    Failure to reduce proves nothing, so nonzero residues are reported
    inconclusive, never refuted.
    """
    sys = target_sys
    if completion_deg is not None and sys.status == "raw":
        sys, _ = complete(sys, completion_deg)
    entries = []
    params = sys.params
    for rel in source_relations:
        if rel.alphabet != sys.alphabet:
            raise AlgebraError("ideal_implication needs a shared alphabet")
        if rel.params != params:
            union = params.union(rel.params)
            if union != params:
                sys = embed_system(sys, union)
                params = union
            rel = rel.embed(params)
        residue = sys.normal_form(rel)
        ok = not residue
        entries.append(
            RelationOutcome(
                rel.render(sys.order),
                "verified" if ok else "inconclusive",
                None if ok else residue.render(sys.order),
            )
        )
    verdict = "verified" if all(e.outcome == "verified" for e in entries) else "inconclusive"
    return CheckReport(title=title, verdict=verdict, entries=entries)


def specialize_genmap(m: GenMap, bindings: Dict[str, object], completion_deg: Optional[int] = None) -> GenMap:
    """Rebuild the map at a rational parameter specialization.

    The target presentation's relations are substituted and re-oriented
    from scratch (leading words may change at special values); pole errors
    propagate to the caller.
    """
    src = m.source
    # relations that vanish at the specialization are trivially respected
    new_src = Presentation(
        name=src.name,
        alphabet=src.alphabet,
        params=src.params,
        relations=tuple(r2 for r2 in (r.substitute(bindings) for r in src.relations) if r2),
        order=src.order,
        bindings=tuple((k, v.substitute(bindings)) for k, v in src.bindings),
    )
    if isinstance(m.target, MatTarget):
        images = {g: img.substitute(bindings) for g, img in m.images.items()}
        return GenMap(new_src, m.target, images, m.direction, m.name + " (specialized)")
    tp = m.target.presentation
    new_tp = Presentation(
        name=tp.name,
        alphabet=tp.alphabet,
        params=tp.params,
        relations=tuple(r2 for r2 in (r.substitute(bindings) for r in tp.relations) if r2),
        order=tp.order,
        bindings=tuple((k, v.substitute(bindings)) for k, v in tp.bindings),
    )
    sys = new_tp.system()
    if completion_deg is not None:
        sys, _ = complete(sys, completion_deg)
    images = {g: img.substitute(bindings) for g, img in m.images.items()}
    return GenMap(new_src, PresTarget(new_tp, sys), images, m.direction, m.name + " (specialized)")
