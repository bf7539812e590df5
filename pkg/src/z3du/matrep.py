"""Exact matrices over RatFunc: the catalog's explicit representations
(3x3 Laurent representation of the down-up algebra, the sl2/sl3 triples,
the loop-algebra triple), matrix brackets and traces, rank and
express-in-span via Gaussian elimination over the rational-function field,
and enveloping-algebra presentations built from structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .catalog import Presentation
from .coeff import CoeffError, ParamSet, RatFunc, laurent_split, rf_symbols
from .freealg import EMPTY, GenAlphabet, MonomialOrder, NcPoly


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class MatElt:
    """Square matrix with RatFunc entries over one ParamSet."""

    n: int
    params: ParamSet
    rows: Tuple[Tuple[RatFunc, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise MatrixError("matrix is not square of the declared size")

    @staticmethod
    def from_lists(params: ParamSet, rows: Sequence[Sequence[object]]) -> "MatElt":
        n = len(rows)
        conv = tuple(
            tuple(
                e if isinstance(e, RatFunc) else RatFunc.const(params, e) for e in row
            )
            for row in rows
        )
        return MatElt(n, params, conv)

    @staticmethod
    def zero(params: ParamSet, n: int) -> "MatElt":
        z = RatFunc.const(params, 0)
        return MatElt(n, params, tuple(tuple(z for _ in range(n)) for _ in range(n)))

    @staticmethod
    def identity(params: ParamSet, n: int) -> "MatElt":
        z = RatFunc.const(params, 0)
        o = RatFunc.const(params, 1)
        return MatElt(
            n, params, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        )

    @staticmethod
    def unit(params: ParamSet, n: int, i: int, j: int) -> "MatElt":
        """Matrix unit with a single 1 at (i, j), zero-indexed."""
        z = RatFunc.const(params, 0)
        o = RatFunc.const(params, 1)
        return MatElt(
            n,
            params,
            tuple(
                tuple(o if (r == i and c == j) else z for c in range(n)) for r in range(n)
            ),
        )

    def _check(self, other: "MatElt"):
        if self.n != other.n:
            raise MatrixError("size mismatch")
        if self.params != other.params:
            raise CoeffError("parameter-set mismatch")

    def __add__(self, other: "MatElt") -> "MatElt":
        self._check(other)
        return MatElt(
            self.n,
            self.params,
            tuple(
                tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self) -> "MatElt":
        return MatElt(self.n, self.params, tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "MatElt") -> "MatElt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        rows = tuple(
            tuple(sum((a * b for a, b in zip(r, col)), RatFunc.const(self.params, 0)) for col in cols)
            for r in self.rows
        )
        return MatElt(n, self.params, rows)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "MatElt":
        if not isinstance(c, RatFunc):
            c = RatFunc.const(self.params, c)
        return MatElt(self.n, self.params, tuple(tuple(c * a for a in r) for r in self.rows))

    def trace(self) -> RatFunc:
        return sum((self.rows[i][i] for i in range(self.n)), RatFunc.const(self.params, 0))

    def is_zero(self) -> bool:
        return all(not e for r in self.rows for e in r)

    def substitute(self, bindings) -> "MatElt":
        return MatElt(
            self.n,
            self.params,
            tuple(tuple(e.substitute(bindings) for e in r) for r in self.rows),
        )

    def embed(self, params: ParamSet) -> "MatElt":
        if params == self.params:
            return self
        return MatElt(
            self.n, params, tuple(tuple(e.embed(params) for e in r) for r in self.rows)
        )

    def entries(self) -> List[RatFunc]:
        return [e for r in self.rows for e in r]

    def render(self) -> str:
        return "[" + "; ".join(", ".join(e.render() for e in r) for r in self.rows) + "]"

    def __repr__(self):
        return f"MatElt({self.render()})"


def mat_add(a: MatElt, b: MatElt) -> MatElt:
    return a + b


def mat_mul(a: MatElt, b: MatElt) -> MatElt:
    return a * b


def mat_bracket(a: MatElt, b: MatElt) -> MatElt:
    return a * b - b * a


def mat_trace(a: MatElt) -> RatFunc:
    return a.trace()


def eval_ncpoly(p: NcPoly, images: Dict[str, MatElt]) -> MatElt:
    """Evaluate a noncommutative polynomial at matrix images of the generators."""
    sizes = {m.n for m in images.values()}
    if len(sizes) != 1:
        raise MatrixError("images have mixed sizes")
    n = sizes.pop()
    mparams = next(iter(images.values())).params
    params = p.params
    for m in images.values():
        params = params.union(m.params)
    imgs = {name: m.embed(params) for name, m in images.items()}
    alphabet = p.alphabet
    acc = MatElt.zero(params, n)
    for w, c in p.terms.items():
        cur = MatElt.identity(params, n)
        for b in w:
            name = alphabet.names[b]
            if name not in imgs:
                raise MatrixError(f"missing image for generator {name!r}")
            cur = cur * imgs[name]
        acc = acc + cur.scale(c.embed(params))
    return acc


# -- linear algebra over the RatFunc field ----------------------------------

def _eliminate(rows: List[List[RatFunc]]) -> List[List[RatFunc]]:
    """Row-echelon reduction over the fraction field (exact pivoting)."""
    if not rows:
        return rows
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return rows


def rank_of_vectors(vectors: Sequence[Sequence[RatFunc]]) -> int:
    rows = [list(v) for v in vectors]
    rows = _eliminate(rows)
    return sum(1 for row in rows if any(row))


def _flatten(mats: Sequence[MatElt], laurent_param: Optional[str] = None):
    """Matrices as coefficient vectors; with `laurent_param`, each entry is
    split into powers of that parameter so t-degrees count as coordinates."""
    if laurent_param is None:
        return [m.entries() for m in mats]
    keys: set = set()
    split = []
    for m in mats:
        entry_maps = []
        for e in m.entries():
            parts = laurent_split(e, laurent_param) if e else {}
            entry_maps.append(parts)
            keys.update(parts)
        split.append(entry_maps)
    keys = sorted(keys)
    params = mats[0].params
    zero = RatFunc.const(params, 0)
    vectors = []
    for entry_maps in split:
        vec = []
        for parts in entry_maps:
            vec.extend(parts.get(k, zero) for k in keys)
        vectors.append(vec)
    return vectors


def rank_span(mats: Sequence[MatElt], laurent_param: Optional[str] = None) -> int:
    """Rank of the span of the flattened matrices over the RatFunc field."""
    if not mats:
        return 0
    return rank_of_vectors(_flatten(mats, laurent_param))


def express_in_basis(basis: Sequence[MatElt], target: MatElt) -> Optional[List[RatFunc]]:
    """Coefficients writing target in the span of basis, or None."""
    params = target.params
    vecs = [m.entries() for m in basis]
    t = target.entries()
    ncols = len(t)
    rows = [list(v) + [RatFunc.const(params, 1) if i == j else RatFunc.const(params, 0)
                       for j in range(len(basis))]
            for i, v in enumerate(vecs)]
    # solve x * basis = target by eliminating on the transposed system
    aug = [[vecs[i][c] for i in range(len(basis))] + [t[c]] for c in range(ncols)]
    aug = _eliminate(aug)
    coeffs = [RatFunc.const(params, 0)] * len(basis)
    for row in aug:
        lead = next((j for j in range(len(basis)) if row[j]), None)
        if lead is None:
            if row[-1]:
                return None
            continue
        coeffs[lead] = row[-1]
    # verify (elimination normalizes pivots to 1, back-substitution is implicit)
    acc = MatElt.zero(params, target.n)
    for c, m in zip(coeffs, basis):
        acc = acc + m.scale(c)
    if acc.rows != target.rows:
        return None
    return coeffs


# -- explicit representations ------------------------------------------------

def downup_matrix_rep(params: Optional[ParamSet] = None) -> Dict[str, MatElt]:
    """3x3 Laurent-entry representation of z3downup(alpha, beta, gamma):
    A, B, C with entries t and -gamma/(alpha t); needs alpha invertible."""
    if params is None:
        params = ParamSet(("alpha", "beta", "gamma", "t"))
    a = RatFunc.param(params, "alpha")
    g = RatFunc.param(params, "gamma")
    t = RatFunc.param(params, "t")
    z = RatFunc.const(params, 0)
    w = -g / (a * t)
    A = MatElt.from_lists(params, [[z, t, z], [z, z, z], [z, w, z]])
    B = MatElt.from_lists(params, [[z, z, w], [z, z, t], [z, z, z]])
    C = MatElt.from_lists(params, [[z, z, z], [w, z, z], [t, z, z]])
    return {"A": A, "B": B, "C": C}


def sl2_triple() -> Dict[str, MatElt]:
    """The 2x2 trace-zero triple A, B, C with [A,B] = C - A - B cyclically."""
    params = ParamSet(())
    f = lambda rows: MatElt.from_lists(params, rows)
    return {
        "A": f([[1, -1], [1, -1]]),
        "B": f([[0, 0], [1, 0]]),
        "C": f([[0, -1], [0, 0]]),
    }


def sl3_triple(params: Optional[ParamSet] = None) -> Dict[str, MatElt]:
    """The 3x3 trace-zero triple with parameter xi."""
    if params is None:
        params = ParamSet(("xi",))
    xi = RatFunc.param(params, "xi")
    z = RatFunc.const(params, 0)
    o = RatFunc.const(params, 1)
    A = MatElt.from_lists(params, [[z, o, z], [z, z, z], [z, xi, z]])
    B = MatElt.from_lists(params, [[z, z, xi], [z, z, o], [z, z, z]])
    C = MatElt.from_lists(params, [[z, z, z], [xi, z, z], [o, z, z]])
    return {"A": A, "B": B, "C": C}


def loop_triple(params: Optional[ParamSet] = None) -> Dict[str, MatElt]:
    """The loop-algebra triple: 3x3 matrices with entries t and xi/t."""
    if params is None:
        params = ParamSet(("xi", "t"))
    xi = RatFunc.param(params, "xi")
    t = RatFunc.param(params, "t")
    z = RatFunc.const(params, 0)
    xt = xi / t
    A = MatElt.from_lists(params, [[z, t, z], [z, z, z], [z, xt, z]])
    B = MatElt.from_lists(params, [[z, z, xt], [z, z, t], [z, z, z]])
    C = MatElt.from_lists(params, [[z, z, z], [xt, z, z], [t, z, z]])
    return {"A": A, "B": B, "C": C}


def sl3_weight_basis(params: ParamSet) -> Dict[str, MatElt]:
    """Matrix units E12, E23, E31, E21, E32, E13 and H1, H2 for sl3."""
    u = lambda i, j: MatElt.unit(params, 3, i - 1, j - 1)
    return {
        "E12": u(1, 2),
        "E23": u(2, 3),
        "E31": u(3, 1),
        "E21": u(2, 1),
        "E32": u(3, 2),
        "E13": u(1, 3),
        "H1": u(1, 1) - u(2, 2),
        "H2": u(2, 2) - u(3, 3),
    }


@dataclass
class FormulaCheck:
    name: str
    ok: bool
    residue: Optional[MatElt] = None


def sl3_basis_formula_checks() -> List[FormulaCheck]:
    """The eight exact identities expressing the sl3 weight basis in terms
    of the triple A, B, C and its brackets, plus the Jacobi sum.

    Each identity holds as a RatFunc matrix identity in xi, with
    denominators (1 + xi^3)^2.
    """
    params = ParamSet(("xi",))
    xi = RatFunc.param(params, "xi")
    T = sl3_triple(params)
    A, B, C = T["A"], T["B"], T["C"]
    AB = mat_bracket(A, B)
    BC = mat_bracket(B, C)
    CA = mat_bracket(C, A)
    ABC = mat_bracket(A, BC)
    BCA = mat_bracket(B, CA)
    CAB = mat_bracket(C, AB)
    W = sl3_weight_basis(params)
    d = 1 + xi ** 3
    d2 = d ** 2
    checks = []

    def add(name, target, expr):
        res = expr - target
        checks.append(FormulaCheck(name, res.is_zero(), None if res.is_zero() else res))

    add("E12", W["E12"], (A.scale(d) - AB.scale(xi ** 4) - CA.scale(xi) - ABC.scale(xi ** 2)).scale(d2 ** -1))
    add("E23", W["E23"], (B.scale(d) - BC.scale(xi ** 4) - AB.scale(xi) - BCA.scale(xi ** 2)).scale(d2 ** -1))
    add("E31", W["E31"], (C.scale(d) - CA.scale(xi ** 4) - BC.scale(xi) - CAB.scale(xi ** 2)).scale(d2 ** -1))
    add("E21", W["E21"], (C.scale(xi ** 2 * d) + BC + CA.scale(xi ** 3) + CAB.scale(xi)).scale(d2 ** -1))
    add("E32", W["E32"], (A.scale(xi ** 2 * d) + CA + AB.scale(xi ** 3) + ABC.scale(xi)).scale(d2 ** -1))
    add("E13", W["E13"], (B.scale(xi ** 2 * d) + AB + BC.scale(xi ** 3) + BCA.scale(xi)).scale(d2 ** -1))
    add(
        "H1",
        W["H1"],
        (A - C).scale(xi / d)
        + (AB.scale(xi ** 2) + BC.scale(xi ** 2) - CA.scale(2 * xi ** 2) - BCA + CAB.scale(xi ** 3 - 1)).scale(d2 ** -1),
    )
    add(
        "H2",
        W["H2"],
        (B - A).scale(xi / d)
        + (BC.scale(xi ** 2) + CA.scale(xi ** 2) - AB.scale(2 * xi ** 2) - CAB + ABC.scale(xi ** 3 - 1)).scale(d2 ** -1),
    )
    jac = ABC + BCA + CAB
    checks.append(FormulaCheck("jacobi", jac.is_zero(), None if jac.is_zero() else jac))
    return checks


# -- enveloping presentations from structure constants -----------------------

def enveloping_presentation(
    name: str,
    gen_names: Sequence[str],
    mats: Sequence[MatElt],
) -> Presentation:
    """Presentation of U(g) for a matrix Lie algebra with basis `mats`:
    one relation XY - YX - [X,Y]-expanded-in-basis per generator pair.

    The matrices must be linearly independent and closed under brackets.
    """
    params = mats[0].params
    alphabet = GenAlphabet(gen_names)
    order = MonomialOrder(alphabet)
    gens = [NcPoly.gen(alphabet, params, n) for n in gen_names]
    rels = []
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            br = mat_bracket(mats[i], mats[j])
            coeffs = express_in_basis(mats, br)
            if coeffs is None:
                raise MatrixError(
                    f"bracket [{gen_names[i]},{gen_names[j]}] is outside the span"
                )
            expansion = NcPoly.zero(alphabet, params)
            for c, g in zip(coeffs, gens):
                if c:
                    expansion = expansion + c * g
            rels.append(gens[i] * gens[j] - gens[j] * gens[i] - expansion)
    return Presentation(
        name=name,
        alphabet=alphabet,
        params=params,
        relations=tuple(rels),
        order=order,
    )


def sl2_enveloping() -> Tuple[Presentation, Dict[str, MatElt]]:
    """U(sl2) presented on the trace-zero triple A, B, C."""
    T = sl2_triple()
    pres = enveloping_presentation("u_sl2", ("A", "B", "C"), [T["A"], T["B"], T["C"]])
    return pres, T


def sl3_enveloping() -> Tuple[Presentation, Dict[str, MatElt]]:
    """U(sl3) presented on the 8-element basis A, B, C, brackets, double brackets."""
    params = ParamSet(("xi",))
    T = sl3_triple(params)
    A, B, C = T["A"], T["B"], T["C"]
    AB = mat_bracket(A, B)
    BC = mat_bracket(B, C)
    CA = mat_bracket(C, A)
    ABC = mat_bracket(A, BC)
    BCA = mat_bracket(B, CA)
    basis = [A, B, C, AB, BC, CA, ABC, BCA]
    names = ("A", "B", "C", "LAB", "LBC", "LCA", "LABC", "LBCA")
    pres = enveloping_presentation("u_sl3", names, basis)
    return pres, dict(zip(names, basis))
