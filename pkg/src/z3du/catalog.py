"""Catalog of presentations: Z3-symmetric down-up algebras, Weyl and q-Weyl
algebras, the reduced algebra, Kac-Moody and quantized enveloping algebras,
and the lowering-raising relation families — each with its standard
generator order, parameters, and relation list.

Fraction-bearing relations are stored denominator-cleared.  Alphabets with
declared inverse pairs automatically carry the unit relations g*ginv - 1
and ginv*g - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from .coeff import CoeffError, ParamSet, RatFunc
from .exprparse import collect_identifiers, parse_coeff
from .freealg import GenAlphabet, MonomialOrder, NcPoly, Word, bracket
from .rewrite import RewriteSystem, orient


class CatalogError(ValueError):
    """Unknown presentation/element name or bad bindings."""


@dataclass(frozen=True)
class Presentation:
    """Named generators-and-relations presentation with a default order."""

    name: str
    alphabet: GenAlphabet
    params: ParamSet
    relations: Tuple[NcPoly, ...]
    order: MonomialOrder
    bindings: Tuple[Tuple[str, RatFunc], ...] = ()

    def __post_init__(self):
        for r in self.relations:
            if not r:
                raise CatalogError(f"presentation {self.name!r} has a zero relation")

    def system(self) -> RewriteSystem:
        """Fresh oriented rewrite system for this presentation."""
        return orient(list(self.relations), self.order, self.params)

    def gens(self) -> Tuple[NcPoly, ...]:
        return tuple(NcPoly.gen(self.alphabet, self.params, n) for n in self.alphabet.names)

    def gen(self, name: str) -> NcPoly:
        return NcPoly.gen(self.alphabet, self.params, name)

    def binding(self, name: str) -> RatFunc:
        for k, v in self.bindings:
            if k == name:
                return v
        raise CatalogError(f"presentation {self.name!r} has no binding {name!r}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    gen_names: Tuple[str, ...]
    inverse_pairs: Tuple[Tuple[str, str], ...]
    param_names: Tuple[str, ...]
    precedence: Optional[Tuple[str, ...]]
    build: Callable
    doc: str


def _resolve_bindings(
    declared: Sequence[str], bindings: Optional[Mapping[str, object]]
) -> Tuple[ParamSet, Dict[str, RatFunc]]:
    """Fix the parameter set from binding expressions (symbolic by default)."""
    bindings = dict(bindings or {})
    unknown = set(bindings) - set(declared)
    if unknown:
        raise CatalogError(f"unknown parameter bindings {sorted(unknown)}; declared: {list(declared)}")
    values = {p: bindings.get(p, p) for p in declared}
    names: list = []
    for p in declared:
        v = values[p]
        if isinstance(v, str):
            for n in collect_identifiers(v):
                if n not in names:
                    names.append(n)
        elif isinstance(v, RatFunc):
            for n in v.params.names:
                if n not in names:
                    names.append(n)
        elif not isinstance(v, (int, Fraction)):
            raise CatalogError(f"binding {p}={v!r} must be str, RatFunc, int, or Fraction")
    ps = ParamSet(names)
    resolved: Dict[str, RatFunc] = {}
    for p in declared:
        v = values[p]
        if isinstance(v, str):
            resolved[p] = parse_coeff(v, ps)
        elif isinstance(v, RatFunc):
            resolved[p] = v.embed(ps)
        else:
            resolved[p] = RatFunc.const(ps, v)
    return ps, resolved


def unit_relations(alphabet: GenAlphabet, params: ParamSet) -> list:
    """g*ginv - 1 and ginv*g - 1 for every declared inverse pair."""
    rels = []
    done = set()
    for i, j in sorted(alphabet.inverse_of.items()):
        if (j, i) in done:
            continue
        done.add((i, j))
        g = NcPoly.word(alphabet, params, bytes([i]))
        gi = NcPoly.word(alphabet, params, bytes([j]))
        one = NcPoly.const(alphabet, params, 1)
        rels.append(g * gi - one)
        rels.append(gi * g - one)
    return rels


def _downup_pair(X: NcPoly, Y: NcPoly, a: RatFunc, b: RatFunc, g: RatFunc) -> list:
    """The two down-up relations for the ordered pair (X, Y):
    Y X^2 = a XYX + b X^2 Y + g X  and  Y^2 X = a YXY + b XY^2 + g Y."""
    return [
        Y * X * X - a * (X * Y * X) - b * (X * X * Y) - g * X,
        Y * Y * X - a * (Y * X * Y) - b * (X * Y * Y) - g * Y,
    ]


# -- builders ---------------------------------------------------------------

def _build_downup(alphabet, params, vals):
    A = NcPoly.gen(alphabet, params, "A")
    B = NcPoly.gen(alphabet, params, "B")
    return _downup_pair(A, B, vals["alpha"], vals["beta"], vals["gamma"])


def _build_z3downup(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    a, b, g = vals["alpha"], vals["beta"], vals["gamma"]
    return _downup_pair(A, B, a, b, g) + _downup_pair(B, C, a, b, g) + _downup_pair(C, A, a, b, g)


def _build_s_gamma(alphabet, params, vals):
    D = NcPoly.gen(alphabet, params, "D")
    return [D ** 3 - vals["gamma"] * D]


def _build_weyl(alphabet, params, vals):
    A = NcPoly.gen(alphabet, params, "A")
    B = NcPoly.gen(alphabet, params, "B")
    return [A * B - B * A - vals["theta"]]


def _build_z3weyl(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    t = vals["theta"]
    return [A * B - B * A - t, B * C - C * B - t, C * A - A * C - t]


def _build_qweyl(alphabet, params, vals):
    A = NcPoly.gen(alphabet, params, "A")
    B = NcPoly.gen(alphabet, params, "B")
    return [A * B - vals["q"] * (B * A) - vals["theta"]]


def _build_z3qweyl(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    q, t = vals["q"], vals["theta"]
    return [A * B - q * (B * A) - t, B * C - q * (C * B) - t, C * A - q * (A * C) - t]


def _build_reduced(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    t = vals["theta"]
    return [
        A * A, B * B, C * C,
        A * B * A - t * A, B * C * B - t * B, C * A * C - t * C,
        B * A * B - t * B, C * B * C - t * C, A * C * A - t * A,
    ]


def _build_lie_L(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    g = vals["gamma"]
    return [
        bracket(A, bracket(A, B)) - g * A,
        bracket(B, bracket(B, A)) - g * B,
        bracket(B, bracket(B, C)) - g * B,
        bracket(C, bracket(C, B)) - g * C,
        bracket(C, bracket(C, A)) - g * C,
        bracket(A, bracket(A, C)) - g * A,
    ]


CARTAN_A21: Tuple[Tuple[int, ...], ...] = ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def cartan_matrix() -> Tuple[Tuple[int, ...], ...]:
    """The affine A2 Cartan matrix (rows/cols indexed 1..3)."""
    return CARTAN_A21


def _build_kacmoody(alphabet, params, vals):
    e = [NcPoly.gen(alphabet, params, f"e{i}") for i in (1, 2, 3)]
    f = [NcPoly.gen(alphabet, params, f"f{i}") for i in (1, 2, 3)]
    h = [NcPoly.gen(alphabet, params, f"h{i}") for i in (1, 2, 3)]
    C = CARTAN_A21
    rels = []
    for i in range(3):
        for j in range(3):
            if i < j:
                rels.append(bracket(h[i], h[j]))
            rels.append(bracket(h[i], e[j]) - C[i][j] * e[j])
            rels.append(bracket(h[i], f[j]) + C[i][j] * f[j])
            if i == j:
                rels.append(bracket(e[i], f[j]) - h[i])
            else:
                rels.append(bracket(e[i], f[j]))
    for i in range(3):
        for j in range(3):
            if i != j:
                rels.append(bracket(e[i], bracket(e[i], e[j])))
                rels.append(bracket(f[i], bracket(f[i], f[j])))
    return rels


def _serre_cubic(X: NcPoly, Y: NcPoly, kappa: RatFunc) -> NcPoly:
    """X^2 Y - kappa XYX + Y X^2 (the quantum Serre shape)."""
    return X * X * Y - kappa * (X * Y * X) + Y * X * X


def _build_kacmoody_pos(alphabet, params, vals):
    e = [NcPoly.gen(alphabet, params, f"e{i}") for i in (1, 2, 3)]
    return [
        bracket(e[i], bracket(e[i], e[j]))
        for i in range(3)
        for j in range(3)
        if i != j
    ]


def _build_uq_sl2_equitable(alphabet, params, vals):
    x, y, z = (NcPoly.gen(alphabet, params, n) for n in "xyz")
    q = vals["q"]
    qq = q - q ** -1
    rels = unit_relations(alphabet, params)
    rels += [
        q * (x * y) - q ** -1 * (y * x) - qq,
        q * (y * z) - q ** -1 * (z * y) - qq,
        q * (z * x) - q ** -1 * (x * z) - qq,
    ]
    return rels


def _build_uq_a21(alphabet, params, vals):
    q = vals["q"]
    E = [NcPoly.gen(alphabet, params, f"E{i}") for i in (1, 2, 3)]
    F = [NcPoly.gen(alphabet, params, f"F{i}") for i in (1, 2, 3)]
    K = [NcPoly.gen(alphabet, params, f"K{i}") for i in (1, 2, 3)]
    Ki = [NcPoly.gen(alphabet, params, f"K{i}inv") for i in (1, 2, 3)]
    C = CARTAN_A21
    qq = q - q ** -1
    rels = unit_relations(alphabet, params)
    for i in range(3):
        for j in range(3):
            if i < j:
                rels.append(K[i] * K[j] - K[j] * K[i])
    for i in range(3):
        for j in range(3):
            rels.append(K[i] * E[j] * Ki[i] - q ** C[i][j] * E[j])
            rels.append(K[i] * F[j] * Ki[i] - q ** (-C[i][j]) * F[j])
    for i in range(3):
        for j in range(3):
            lhs = qq * (E[i] * F[j] - F[j] * E[i])
            if i == j:
                lhs = lhs - (K[i] - Ki[i])
            rels.append(lhs)
    kappa = q + q ** -1
    for i in range(3):
        for j in range(3):
            if i != j:
                rels.append(_serre_cubic(E[i], E[j], kappa))
                rels.append(_serre_cubic(F[i], F[j], kappa))
    return rels


def _build_uq_a21_pos(alphabet, params, vals):
    q = vals["q"]
    E = [NcPoly.gen(alphabet, params, f"E{i}") for i in (1, 2, 3)]
    kappa = q + q ** -1
    return [
        _serre_cubic(E[i], E[j], kappa) for i in range(3) for j in range(3) if i != j
    ]


def _build_nbweyl(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    q, v = vals["q"], vals["vartheta"]
    return [
        q * (A * B) - q ** -1 * (B * A) - v,
        q * (B * C) - q ** -1 * (C * B) - v,
        q * (C * A) - q ** -1 * (A * C) - v,
    ]


def _build_nbweyl_minus_t(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    t = vals["t"]
    c = (2 * t) / (1 - t)
    return [A * B - t * (B * A) - c, B * C - t * (C * B) - c, C * A - t * (A * C) - c]


def _bip_relation(X, Y, t, rho):
    """X^3 Y + X^2 Y X - t X Y X^2 - t Y X^3 = (rho + t/rho) X^2."""
    c = rho + t / rho
    X2 = X * X
    return X2 * X * Y + X2 * Y * X - t * (X * Y * X2) - t * (Y * X2 * X) - c * X2


def _bip_relation_rev(X, Y, t, rho):
    """X Y^3 + Y X Y^2 - t Y^2 X Y - t Y^3 X = (rho + t/rho) Y^2."""
    c = rho + t / rho
    Y2 = Y * Y
    return X * Y2 * Y + Y * X * Y2 - t * (Y2 * X * Y) - t * (Y2 * Y * X) - c * Y2


def _build_bip(alphabet, params, vals):
    A, B, C = (NcPoly.gen(alphabet, params, n) for n in "ABC")
    t = vals["t"]
    r0, r1, r2 = vals["rho0"], vals["rho0p"], vals["rho0pp"]
    return [
        _bip_relation(A, B, t, r0),
        _bip_relation(B, C, t, r1),
        _bip_relation(C, A, t, r2),
        _bip_relation_rev(A, B, t, r0),
        _bip_relation_rev(B, C, t, r1),
        _bip_relation_rev(C, A, t, r2),
    ]


def _build_bip1(alphabet, params, vals):
    vals = dict(vals)
    vals["t"] = RatFunc.const(params, 1)
    return _build_bip(alphabet, params, vals)


# -- the registry --------------------------------------------------------------

_ABC = ("A", "B", "C")

_CATALOG: Dict[str, CatalogEntry] = {}


def _register(name, gens, params, build, doc, inverse_pairs=(), precedence=None):
    _CATALOG[name] = CatalogEntry(
        name=name,
        gen_names=tuple(gens),
        inverse_pairs=tuple(inverse_pairs),
        param_names=tuple(params),
        precedence=tuple(precedence) if precedence else None,
        build=build,
        doc=doc,
    )


_register("downup", ("A", "B"), ("alpha", "beta", "gamma"), _build_downup,
          "down-up algebra on A,B with the two cubic down-up relations")
_register("z3downup", _ABC, ("alpha", "beta", "gamma"), _build_z3downup,
          "Z3-symmetric down-up algebra: any two of A,B,C satisfy the down-up relations, cyclically")
_register("s_gamma", ("D",), ("gamma",), _build_s_gamma,
          "one generator D with D^3 = gamma*D (basis 1, D, D^2)")
_register("weyl", ("A", "B"), ("theta",), _build_weyl, "Weyl algebra: AB - BA = theta")
_register("z3weyl", _ABC, ("theta",), _build_z3weyl,
          "Z3-symmetric Weyl algebra: XY - YX = theta cyclically")
_register("qweyl", ("A", "B"), ("q", "theta"), _build_qweyl, "q-Weyl algebra: AB - qBA = theta")
_register("z3qweyl", _ABC, ("q", "theta"), _build_z3qweyl,
          "Z3-symmetric q-Weyl algebra: XY - qYX = theta cyclically")
_register("reduced", _ABC, ("theta",), _build_reduced,
          "reduced Z3-symmetric down-up algebra: squares vanish, XYX = theta*X patterns")
_register("lie_L", _ABC, ("gamma",), _build_lie_L,
          "enveloping presentation of the Z3-symmetric down-up Lie algebra "
          "([X,[X,Y]] = gamma*X); same relation set as z3downup(2,-1,gamma)")
_register("kacmoody_a21", tuple(f"{g}{i}" for g in "fhe" for i in (1, 2, 3)), (),
          _build_kacmoody,
          "enveloping presentation of the affine A2 Kac-Moody Lie algebra "
          "(Chevalley generators, Serre relations, bracket-expanded)")
_register("kacmoody_a21_pos", ("e1", "e2", "e3"), (), _build_kacmoody_pos,
          "positive part of the affine A2 Kac-Moody algebra: Serre relations only")
_register("uq_sl2_equitable", ("x", "y", "yinv", "z"), ("q",), _build_uq_sl2_equitable,
          "equitable presentation of U_q(sl2): three cyclic q-commutation relations, "
          "y invertible; fraction relations stored denominator-cleared",
          inverse_pairs=(("y", "yinv"),), precedence=("y", "yinv", "x", "z"))
_register("uq_a21",
          ("F1", "F2", "F3", "K1", "K1inv", "K2", "K2inv", "K3", "K3inv", "E1", "E2", "E3"),
          ("q",), _build_uq_a21,
          "quantized enveloping algebra of affine A2 (Chevalley-type generators, "
          "fraction relation denominator-cleared)",
          inverse_pairs=(("K1", "K1inv"), ("K2", "K2inv"), ("K3", "K3inv")))
_register("uq_a21_pos", ("E1", "E2", "E3"), ("q",), _build_uq_a21_pos,
          "positive part of U_q(affine A2): quantum Serre relations only")
_register("nbweyl_plus", _ABC, ("q", "vartheta"), _build_nbweyl,
          "non-bipartite Weyl-type LR family (+): qXY - q^-1 YX = vartheta cyclically")
_register("nbweyl_minus", _ABC, ("q", "vartheta"), _build_nbweyl,
          "non-bipartite Weyl-type LR family (-): same relation set as nbweyl_plus")
_register("nbweyl_minus_t", _ABC, ("t",), _build_nbweyl_minus_t,
          "non-bipartite Weyl-type LR family: XY - tYX = 2t/(1-t) cyclically")
_register("nbg", _ABC, ("q",), lambda a, p, v: _build_z3downup(a, p, _nbg_vals(p, v)),
          "non-bipartite G-type LR family: literal z3downup instance")
_register("nbg1", _ABC, (), lambda a, p, v: _build_z3downup(a, p, _nbg1_vals(p)),
          "non-bipartite G-type LR family at q=1: z3downup(2,-1,2)")
_register("nbng", _ABC, ("t",), lambda a, p, v: _build_z3downup(a, p, _nbng_vals(p, v)),
          "non-bipartite non-G LR family: z3downup(0, 1/t, 1/t - 1)")
_register("bip_t", _ABC, ("t", "rho0", "rho0p", "rho0pp"), _build_bip,
          "bipartite LR family: six degree-4 relations (relation-set encoding only)")
_register("bip_1", _ABC, ("rho0", "rho0p", "rho0pp"), _build_bip1,
          "bipartite LR family at t=1")
_register("bip_2", _ABC, ("rho0", "rho0p", "rho0pp"), _build_bip1,
          "diameter-2 bipartite LR family; same relation set as bip_1 "
          "(the diameter restriction is representation-level, not relation-level)")


def _nbg_vals(params, vals):
    q = vals["q"]
    return {"alpha": q ** -2 * (q + 1), "beta": -(q ** -3), "gamma": q ** -2 * (q + 1)}


def _nbg1_vals(params):
    two = RatFunc.const(params, 2)
    return {"alpha": two, "beta": RatFunc.const(params, -1), "gamma": two}


def _nbng_vals(params, vals):
    t = vals["t"]
    one = RatFunc.const(params, 1)
    return {"alpha": RatFunc.const(params, 0), "beta": t ** -1, "gamma": t ** -1 - one}


def names() -> list:
    return sorted(_CATALOG)


def entry(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown presentation {name!r}; known: {names()}") from None


def make(name: str, bindings: Optional[Mapping[str, object]] = None, **kw) -> Presentation:
    """Build a catalog presentation; unbound parameters stay symbolic.

    Bindings may be expression strings ("xi+1", "-q^2"), RatFunc values,
    ints, or Fractions: make("z3downup", alpha="xi+1", beta="-xi",
    gamma="(xi-1)*theta").
    """
    e = entry(name)
    merged = dict(bindings or {})
    merged.update(kw)
    params, vals = _resolve_bindings(e.param_names, merged)
    alphabet = GenAlphabet(e.gen_names, e.inverse_pairs)
    order = MonomialOrder(alphabet, e.precedence)
    relations = tuple(e.build(alphabet, params, vals))
    return Presentation(
        name=name,
        alphabet=alphabet,
        params=params,
        relations=relations,
        order=order,
        bindings=tuple((p, vals[p]) for p in e.param_names),
    )


# -- derived elements ------------------------------------------------------

def _rho_word(pres: Presentation, start: str, n: int, step: int) -> Word:
    cycle = ["A", "B", "C"]
    i = cycle.index(start)
    letters = []
    for _ in range(n):
        letters.append(cycle[i % 3])
        i += step
    return pres.alphabet.word(*letters)


def derived_element(name: str, pres: Presentation) -> NcPoly:
    """Named element of its home presentation (nu_x, K, A+5, C_neg, ...)."""
    alphabet, params = pres.alphabet, pres.params

    if pres.name == "uq_sl2_equitable" and name in ("nu_x", "nu_y", "nu_z"):
        q = pres.binding("q")
        x, y, z = (pres.gen(n) for n in "xyz")
        one = NcPoly.const(alphabet, params, 1)
        pair = {"nu_x": y * z, "nu_y": z * x, "nu_z": x * y}[name]
        return q * (one - pair)
    if pres.name == "uq_a21" and name == "K":
        return NcPoly.word(alphabet, params, alphabet.word("K1", "K2", "K3"))
    if pres.name == "uq_a21" and name == "K_inv":
        return NcPoly.word(alphabet, params, alphabet.word("K3inv", "K2inv", "K1inv"))
    if pres.name in ("weyl", "z3weyl") and name == "C_neg":
        return -pres.gen("A") - pres.gen("B")
    if pres.name == "reduced" and len(name) >= 2 and name[0] in "ABC" and name[1] in "+-":
        try:
            n = int(name[2:])
        except ValueError:
            raise CatalogError(f"malformed element name {name!r}") from None
        if n < 1:
            raise CatalogError(f"element {name!r} needs length >= 1")
        step = 1 if name[1] == "+" else -1
        return NcPoly.word(alphabet, params, _rho_word(pres, name[0], n, step))
    raise CatalogError(f"no derived element {name!r} for presentation {pres.name!r}")


# -- down-up parameter dictionaries -----------------------------------------

_DICTIONARIES: Dict[str, Tuple[Tuple[str, ...], Callable]] = {}


def _dict_register(name, declared, fn):
    _DICTIONARIES[name] = (tuple(declared), fn)


_dict_register("lie", ("gamma",),
               lambda v, ps: (RatFunc.const(ps, 2), RatFunc.const(ps, -1), v["gamma"]))
_dict_register("weyl", ("theta", "xi"),
               lambda v, ps: (v["xi"] + 1, -v["xi"], (v["xi"] - 1) * v["theta"]))
_dict_register("qweyl", ("q", "theta", "xi"),
               lambda v, ps: (v["q"] * v["xi"] + v["q"] ** -1, -v["xi"],
                              (v["xi"] - v["q"] ** -1) * v["theta"]))
_dict_register("uq_sl2_equitable", ("q", "xi"),
               lambda v, ps: (v["q"] ** 2 + v["xi"], -(v["q"] ** 2) * v["xi"],
                              (1 - v["q"] ** 2) * (1 - v["xi"])))
_dict_register("uq_sl2_nu", ("q",),
               lambda v, ps: (v["q"] ** 3 * (v["q"] + v["q"] ** -1), -(v["q"] ** 6),
                              v["q"] ** 3 * (v["q"] - v["q"] ** -1) * (v["q"] ** 2 - v["q"] ** -2)))
_dict_register("uq_a21", ("q", "xi"),
               lambda v, ps: (v["q"] ** 3 * (v["q"] + v["q"] ** -1), -(v["q"] ** 6),
                              -v["xi"] * v["q"] ** 3 * (v["q"] + v["q"] ** -1)))
_dict_register("uq_a21_inv", ("q", "xi"),
               lambda v, ps: (v["q"] ** -3 * (v["q"] + v["q"] ** -1), -(v["q"] ** -6),
                              -v["xi"] * v["q"] ** -3 * (v["q"] + v["q"] ** -1)))
# nbweyl relations qXY - q^-1 YX = vartheta are the z3qweyl relations at
# qhat = q^-2, thetahat = vartheta/q; the triple is the qweyl dictionary there
_dict_register("nbweyl", ("q", "vartheta", "xi"),
               lambda v, ps: ((v["q"] ** -2) * v["xi"] + v["q"] ** 2, -v["xi"],
                              (v["xi"] - v["q"] ** 2) * v["vartheta"] * v["q"] ** -1))
_dict_register("nbweyl_t", ("t", "xi"),
               lambda v, ps: (v["t"] * v["xi"] + v["t"] ** -1, -v["xi"],
                              (v["xi"] - v["t"] ** -1) * (2 * v["t"]) / (1 - v["t"])))
_dict_register("nbg", ("q",),
               lambda v, ps: (v["q"] ** -2 * (v["q"] + 1), -(v["q"] ** -3),
                              v["q"] ** -2 * (v["q"] + 1)))
_dict_register("nbg1", (),
               lambda v, ps: (RatFunc.const(ps, 2), RatFunc.const(ps, -1), RatFunc.const(ps, 2)))
_dict_register("nbng", ("t",),
               lambda v, ps: (RatFunc.const(ps, 0), v["t"] ** -1, v["t"] ** -1 - 1))


def dictionary_names() -> list:
    return sorted(_DICTIONARIES)


def downup_params_for(
    name: str, bindings: Optional[Mapping[str, object]] = None, **kw
) -> Tuple[RatFunc, RatFunc, RatFunc]:
    """(alpha, beta, gamma) for one of the named parameter dictionaries."""
    try:
        declared, fn = _DICTIONARIES[name]
    except KeyError:
        raise CatalogError(
            f"unknown parameter dictionary {name!r}; known: {dictionary_names()}"
        ) from None
    merged = dict(bindings or {})
    merged.update(kw)
    ps, vals = _resolve_bindings(declared, merged)
    a, b, g = fn(vals, ps)
    const = lambda x: RatFunc.const(ps, x) if isinstance(x, (int, Fraction)) else x
    return const(a), const(b), const(g)


def vartheta(j: int, q: RatFunc) -> RatFunc:
    """The scalar q^(-2j-1) (1+q^(2j+1))^2 / (q - q^-1)."""
    return q ** (-2 * j - 1) * (1 + q ** (2 * j + 1)) ** 2 * (q - q ** -1) ** -1
