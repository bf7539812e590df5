"""Evidence generators for the open questions: truncated injectivity
probes, infinite-dimensionality witnesses, finite-dimension detection,
and linear-independence ranks.

Probes report evidence, never proofs: conjecture probes output
consistent-with-claim at best.  A counterexample verdict requires an
explicit witness and a confluent target (so the kernel element is
certified nonzero in the source and zero in the target).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import catalog
from .coeff import ParamSet, RatFunc
from .freealg import EMPTY, GenAlphabet, MonomialOrder, NcPoly, Word, bracket
from .homcheck import GenMap, MatTarget, PresTarget, apply_to_poly, check_hom
from .matrep import MatElt, mat_bracket, rank_of_vectors, rank_span, _flatten
from .rewrite import RewriteSystem, complete


class ProbeError(RuntimeError):
    pass


@dataclass
class ProbeResult:
    name: str
    max_deg: int
    evidence: Dict[str, object]
    verdict: str  # consistent-with-claim | counterexample-found | finite-dimension-certified | inconclusive
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "probe": self.name,
            "max_deg": self.max_deg,
            "verdict": self.verdict,
            "evidence": self.evidence,
            **({"witness": self.witness} if self.witness else {}),
        }


# -- matrix independence ------------------------------------------------------

def probe_matrix_independence(
    rep: Dict[str, MatElt],
    elements: Sequence[NcPoly],
    laurent_param: Optional[str] = None,
    name: str = "matrix-independence",
) -> ProbeResult:
    """Rank of the images of `elements` under a matrix representation.

    With `laurent_param`, powers of that parameter count as separate
    coordinates (the representation space is a Laurent module, not a
    vector space over the rational-function field in it).
    """
    from .matrep import eval_ncpoly

    mats = [eval_ncpoly(p, rep) for p in elements]
    rank = rank_span(mats, laurent_param=laurent_param)
    verdict = "consistent-with-claim" if rank == len(elements) else "inconclusive"
    return ProbeResult(
        name=name,
        max_deg=max((p.degree() for p in elements), default=0),
        evidence={"count": len(elements), "rank": rank},
        verdict=verdict,
    )


# -- injectivity via normal-word image ranks ---------------------------------

def _kernel_witness(vectors: List[List[RatFunc]], params: ParamSet):
    """A nonzero combination of the rows summing to zero, or None."""
    if not vectors:
        return None
    n = len(vectors)
    width = len(vectors[0])
    zero = RatFunc.const(params, 0)
    one = RatFunc.const(params, 1)
    aug = [list(v) + [one if i == j else zero for j in range(n)] for i, v in enumerate(vectors)]
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c].inv()
        aug[r] = [e * inv for e in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
        if r == n:
            break
    for row in aug:
        if not any(row[:width]) and any(row[width:]):
            return row[width:]
    return None


def probe_injectivity(
    src: catalog.Presentation,
    tgt_sys: RewriteSystem,
    m: GenMap,
    max_deg: int,
    name: str = "injectivity",
    require_verified: bool = True,
) -> ProbeResult:
    """Map the source normal words of degree <= max_deg through m and
    compute the rank of their images over the RatFunc field.

    consistent-with-claim iff rank == source count.  A kernel vector is a
    counterexample only when the target system is confluent; otherwise the
    deficit is inconclusive.
    """
    if require_verified:
        rep = check_hom(m)
        if rep.verdict != "verified":
            raise ProbeError(f"map not verified ({rep.verdict}); probe refused")
    src_sys = src.system()
    src_sys, _ = complete(src_sys, max_deg)
    words = src_sys.normal_words(max_deg)
    params = m.unified_params()
    images = {g: img.embed(params) for g, img in m.images.items()}
    if isinstance(m.target, MatTarget):
        raise ProbeError("probe_injectivity needs a presented target")
    from .homcheck import embed_system

    sys = embed_system(tgt_sys, params)
    one = NcPoly.const(sys.alphabet, params, 1)
    img_nf: Dict[Word, NcPoly] = {EMPTY: one}
    src_alpha = src.alphabet
    for w in words:
        if w in img_nf:
            continue
        prev = img_nf[w[:-1]]
        g = src_alpha.names[w[-1]]
        img_nf[w] = sys.normal_form(prev * images[g])
    support: Dict[Word, int] = {}
    for w in words:
        for tw in img_nf[w].terms:
            support.setdefault(tw, len(support))
    zero = RatFunc.const(params, 0)
    vectors = []
    for w in words:
        vec = [zero] * len(support)
        for tw, c in img_nf[w].terms.items():
            vec[support[tw]] = c
        vectors.append(vec)
    rank = rank_of_vectors([list(v) for v in vectors])
    evidence = {"source_count": len(words), "image_rank": rank,
                "target_status": tgt_sys.status}
    if rank == len(words):
        return ProbeResult(name, max_deg, evidence, "consistent-with-claim")
    if tgt_sys.status == "confluent":
        combo = _kernel_witness(vectors, params)
        if combo is not None:
            witness = NcPoly(src_alpha, params, {
                w: c for w, c in zip(words, combo) if c
            })
            return ProbeResult(
                name, max_deg, evidence, "counterexample-found",
                witness=witness.render(src.order),
            )
    return ProbeResult(name, max_deg, evidence, "inconclusive")


# -- finite dimension ---------------------------------------------------------

def probe_finite_dimension(
    pres: catalog.Presentation, max_deg: int, name: str = "finite-dimension",
    max_rules: int = 10_000,
) -> ProbeResult:
    """Complete to max_deg; certify finite dimension when the normal words
    stop before the cap under a confluent system, else report growth."""
    sys, rep = complete(pres.system(), max_deg, max_rules=max_rules)
    counts = sys.count_by_degree(max_deg)
    evidence = {"counts": counts, "status": sys.status, "rules": len(sys.rules)}
    if sys.status == "confluent" and 0 in counts:
        d0 = counts.index(0)
        words = [w for w in sys.normal_words(d0) ]
        basis = [pres.alphabet.render_word(w) for w in words]
        evidence["dimension"] = len(basis)
        evidence["basis"] = basis
        return ProbeResult(name, max_deg, evidence, "finite-dimension-certified")
    return ProbeResult(name, max_deg, evidence, "consistent-with-claim")


# -- the four infinite-dimensionality cases -----------------------------------

def _natural_map(src: catalog.Presentation, tgt: catalog.Presentation, sys: RewriteSystem,
                 names: Sequence[str]) -> GenMap:
    return GenMap(
        src, PresTarget(tgt, sys), {n: tgt.gen(n) for n in names}, name=f"{src.name}->{tgt.name}"
    )


def probe_section19(case: str, max_deg: int = 4) -> ProbeResult:
    """Evidence for the four-case split: the algebra is infinite-dimensional
    and noncommutative unless alpha = beta = 0 and gamma != 0.

    Cases: gamma_zero | alpha_nonzero | beta_one | beta_generic.
    """
    if case == "gamma_zero":
        src = catalog.make("downup", alpha=0, beta=0, gamma=0)
        tgt = catalog.make("z3downup", alpha=0, beta=0, gamma=0)
        sys = tgt.system()
        m = GenMap(src, PresTarget(tgt, sys), {"A": tgt.gen("A"), "B": tgt.gen("B")},
                   name="downup(0,0,0) -> z3downup(0,0,0)")
        res = probe_injectivity(src, sys, m, max_deg, name="sec19-gamma-zero")
        return res
    if case == "alpha_nonzero":
        rep = catalog_matrix_rep()
        pres = catalog.make("z3downup")
        A, B, C = (pres.gen(n) for n in "ABC")
        elements = []
        cur = NcPoly.const(pres.alphabet, pres.params, 1)
        for n in range(6):
            elements.append(cur * A)
            cur = cur * (A * B * C)
        res = probe_matrix_independence(rep, elements, laurent_param="t",
                                        name="sec19-alpha-nonzero")
        from .matrep import eval_ncpoly
        ab = eval_ncpoly(A * B, rep)
        ba = eval_ncpoly(B * A, rep)
        res.evidence["AB_ne_BA"] = not (ab - ba).is_zero()
        if not res.evidence["AB_ne_BA"]:
            res.verdict = "inconclusive"
        return res
    if case == "beta_one":
        src = catalog.make("z3downup", alpha=0, beta=1, gamma="gamma")
        tgt = catalog.make("z3weyl", theta="-gamma/2")
        sys = tgt.system()
        m = _natural_map(src, tgt, sys, "ABC")
        rep = check_hom(m)
        counts = sys.count_by_degree(max_deg)
        A, B = tgt.gen("A"), tgt.gen("B")
        noncomm = bool(sys.normal_form(A * B - B * A))
        ok = rep.verified and noncomm and all(counts)
        return ProbeResult(
            "sec19-beta-one", max_deg,
            {"surjection_verified": rep.verified, "target_counts": counts,
             "noncommutative": noncomm},
            "consistent-with-claim" if ok else "inconclusive",
        )
    if case == "beta_generic":
        # q formal with beta = q^-2; theta = -q^2 gamma / (q+1)
        src = catalog.make("z3downup", alpha=0, beta="q^-2", gamma="gamma")
        tgt = catalog.make("z3qweyl", q="q", theta="-q^2*gamma/(q+1)")
        sys = tgt.system()
        m = _natural_map(src, tgt, sys, "ABC")
        rep = check_hom(m)
        counts = sys.count_by_degree(max_deg)
        A, B = tgt.gen("A"), tgt.gen("B")
        noncomm = sys.normal_form(A * B) != sys.normal_form(B * A)
        ok = rep.verified and noncomm and all(counts)
        return ProbeResult(
            "sec19-beta-generic", max_deg,
            {"surjection_verified": rep.verified, "target_counts": counts,
             "noncommutative": noncomm},
            "consistent-with-claim" if ok else "inconclusive",
        )
    raise ProbeError(f"unknown case {case!r}")


def catalog_matrix_rep() -> Dict[str, MatElt]:
    from .matrep import downup_matrix_rep

    return downup_matrix_rep()


# -- free-Lie candidate machinery for the bracket-map probes ------------------

def _lyndon_std_factor(w: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Standard factorization w = u v with v the longest proper Lyndon suffix."""
    n = len(w)
    for i in range(1, n):
        v = w[i:]
        if all(v < v[j:] for j in range(1, len(v))):
            return w[:i], v
    raise ValueError(f"not a Lyndon word: {w}")


def _is_lyndon(w: Tuple[int, ...]) -> bool:
    return len(w) > 0 and all(w < w[i:] for i in range(1, len(w)))


def lyndon_basis(k: int, max_len: int) -> List[Tuple[int, ...]]:
    """All Lyndon words over 0..k-1 of length <= max_len, sorted by (len, lex)."""
    from itertools import product

    out = []
    for n in range(1, max_len + 1):
        for t in product(range(k), repeat=n):
            if _is_lyndon(t):
                out.append(t)
    out.sort(key=lambda t: (len(t), t))
    return out


def lyndon_bracketing(w: Tuple[int, ...], gens: Sequence[NcPoly]) -> NcPoly:
    """Standard Lyndon bracketing of w, expanded into the free algebra."""
    if len(w) == 1:
        return gens[w[0]]
    u, v = _lyndon_std_factor(w)
    return bracket(lyndon_bracketing(u, gens), lyndon_bracketing(v, gens))


def _poly_vectors(polys: Sequence[NcPoly], params: ParamSet):
    support: Dict[Word, int] = {}
    for p in polys:
        for w in p.terms:
            support.setdefault(w, len(support))
    zero = RatFunc.const(params, 0)
    vecs = []
    for p in polys:
        v = [zero] * len(support)
        for w, c in p.terms.items():
            v[support[w]] = c
        vecs.append(v)
    return vecs


def lie_candidate_bound(pres: catalog.Presentation, max_deg: int = 4) -> Tuple[int, int]:
    """Upper bound for the filtered dimension of the presented Lie algebra:
    dim(free Lie <= max_deg) minus the rank of the consequence space
    spanned by the relations and their single ad's.

    Returns (bound, free_lie_dim).  Only ad-depth-one consequences are
    included, which is exhaustive for max_deg = relation degree + 1.
    """
    gens = pres.gens()
    k = len(gens)
    basis_words = lyndon_basis(k, max_deg)
    free_dim = len(basis_words)
    consequences = list(pres.relations)
    for g in gens:
        for s in pres.relations:
            consequences.append(bracket(g, s))
    rank = rank_of_vectors(_poly_vectors(consequences, pres.params))
    return free_dim - rank, free_dim


def probe_lie_bracket_rank(
    lie_pres: catalog.Presentation,
    image_of: callable,
    rank_of: callable,
    max_deg: int = 4,
    name: str = "lie-bracket-rank",
) -> ProbeResult:
    """Generic bracket-word probe: images of all Lyndon bracket words of
    degree <= max_deg, rank compared against the independently computed
    filtered-dimension bound.  Equality forces injectivity on the filtered
    piece; a deficit is inconclusive (never a counterexample: certifying a
    kernel element nonzero would need a Lie Groebner basis)."""
    bound, free_dim = lie_candidate_bound(lie_pres, max_deg)
    gens = lie_pres.gens()
    words = lyndon_basis(len(gens), max_deg)
    images = [image_of(lyndon_bracketing(w, gens)) for w in words]
    rank = rank_of(images)
    evidence = {
        "bracket_words": len(words),
        "free_lie_dim": free_dim,
        "candidate_bound": bound,
        "image_rank": rank,
    }
    verdict = "consistent-with-claim" if rank == bound else "inconclusive"
    return ProbeResult(name, max_deg, evidence, verdict)


def probe_reduced_bracket_injectivity(max_deg: int = 4) -> ProbeResult:
    """Bracket-word images of the down-up Lie presentation with parameter
    -2*theta inside the reduced algebra; rank vs the filtered bound."""
    lie = catalog.make("lie_L", gamma="-2*theta")
    red = catalog.make("reduced")
    sys = red.system()

    ren = bytes.maketrans(
        bytes(range(3)), bytes(red.alphabet.index(n) for n in ("A", "B", "C"))
    )

    def image_of(p: NcPoly) -> NcPoly:
        q = NcPoly(red.alphabet, p.params, {w.translate(ren): c for w, c in p.terms.items()})
        return sys.normal_form(q.embed(red.params.union(p.params)))

    def rank_of(images: Sequence[NcPoly]) -> int:
        params = images[0].params
        return rank_of_vectors(_poly_vectors(images, params))

    return probe_lie_bracket_rank(lie, image_of, rank_of, max_deg,
                                  name="reduced-bracket-injectivity")


def probe_loop_bracket_injectivity(max_deg: int = 4) -> ProbeResult:
    """Bracket-word images of the down-up Lie presentation with parameter
    -2*xi inside the 3x3 Laurent loop matrices; rank with t-power
    coordinates vs the filtered bound."""
    from .matrep import loop_triple

    lie = catalog.make("lie_L", gamma="-2*xi")
    rep = loop_triple()
    mats = {"A": rep["A"], "B": rep["B"], "C": rep["C"]}
    params = rep["A"].params.union(lie.params)

    def image_of(p: NcPoly) -> MatElt:
        from .matrep import eval_ncpoly

        return eval_ncpoly(p, mats)

    def rank_of(images: Sequence[MatElt]) -> int:
        return rank_span(list(images), laurent_param="t")

    return probe_lie_bracket_rank(lie, image_of, rank_of, max_deg,
                                  name="loop-bracket-injectivity")
