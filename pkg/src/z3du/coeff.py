"""Exact coefficient arithmetic: rationals, sparse multivariate polynomials,
and normalized rational functions over a declared parameter set.

Rationals are `fractions.Fraction`.  A MultiPoly is a sparse map from
exponent vectors (one nonnegative int per parameter) to nonzero Fractions.
A RatFunc is a reduced fraction num/den of MultiPolys, normalized so the
denominator is a primitive integer polynomial whose leading coefficient
under graded-lex is positive.  Equal values always have identical stored
representations, so `==` is semantic equality.

All values are immutable once built; every operation returns a new value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Mapping

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class CoeffError(ValueError):
    """Parameter-set mismatch, division by zero, or pole on substitution."""


class ParamSet:
    """Ordered, duplicate-free sequence of parameter names.

    Exponent vectors index into this order, which is fixed at creation.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise CoeffError(f"duplicate parameter names in {names!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *a):
        raise AttributeError("ParamSet is immutable")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, ParamSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"ParamSet{self.names!r}"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise CoeffError(f"unknown parameter {name!r} (have {self.names})") from None

    def union(self, other: "ParamSet") -> "ParamSet":
        extra = [n for n in other.names if n not in self._index]
        return ParamSet(self.names + tuple(extra))


def _check_same(a: "MultiPoly", b: "MultiPoly"):
    if a.params != b.params:
        raise CoeffError(f"parameter-set mismatch: {a.params} vs {b.params}")


def _grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


class MultiPoly:
    """Sparse multivariate polynomial over Fraction coefficients.

    Terms map exponent tuples (length = number of parameters) to nonzero
    Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params: ParamSet, terms: Mapping[tuple, Fraction]):
        self.params = params
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(params: ParamSet) -> "MultiPoly":
        return MultiPoly(params, {})

    @staticmethod
    def const(params: ParamSet, value) -> "MultiPoly":
        c = Fraction(value)
        if not c:
            return MultiPoly(params, {})
        return MultiPoly(params, {(0,) * len(params): c})

    @staticmethod
    def var(params: ParamSet, name: str) -> "MultiPoly":
        exp = [0] * len(params)
        exp[params.index(name)] = 1
        return MultiPoly(params, {tuple(exp): _ONE})

    # -- basic structure ----------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.params == other.params
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    def is_const(self) -> bool:
        return all(not any(e) for e in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return _ZERO
        if not self.is_const():
            raise CoeffError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, idx: int) -> int:
        return max((e[idx] for e in self.terms), default=0)

    def leading(self) -> tuple:
        """Graded-lex maximal term as (exponent, coefficient)."""
        if not self.terms:
            raise CoeffError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        _check_same(self, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.params, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        _check_same(self, other)
        if not self.terms or not other.terms:
            return MultiPoly(self.params, {})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.params, out)

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly(self.params, {})
        return MultiPoly(self.params, {e: c * v for e, v in self.terms.items()})

    def pow(self, n: int) -> "MultiPoly":
        if n < 0:
            raise CoeffError("negative power of a polynomial")
        result = MultiPoly.const(self.params, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- content / primitive part --------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with self/c integer-coefficient and coprime."""
        if not self.terms:
            return _ZERO
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, abs(c.numerator))
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_positive(self) -> "MultiPoly":
        """self divided by ±content so coefficients are coprime integers and
        the graded-lex leading coefficient is positive."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading()[1] < 0:
            c = -c
        return self.scale(1 / c)

    # -- substitution ---------------------------------------------------
    def substitute(self, bindings: Mapping[str, Fraction]) -> "MultiPoly":
        """Partial evaluation at rational points; unbound parameters remain."""
        idx = {self.params.index(n): Fraction(v) for n, v in bindings.items()}
        out: dict = {}
        for e, c in self.terms.items():
            val = c
            newe = list(e)
            for i, v in idx.items():
                if e[i]:
                    val *= v ** e[i]
                    newe[i] = 0
            if not val:
                continue
            key = tuple(newe)
            s = out.get(key, _ZERO) + val
            if s:
                out[key] = s
            else:
                del out[key]
        return MultiPoly(self.params, out)

    def embed(self, params: ParamSet) -> "MultiPoly":
        """Re-express over a superset parameter set."""
        if params == self.params:
            return self
        pos = [params.index(n) for n in self.params.names]
        width = len(params)
        out = {}
        for e, c in self.terms.items():
            newe = [0] * width
            for i, x in enumerate(e):
                newe[pos[i]] = x
            out[tuple(newe)] = c
        return MultiPoly(params, out)

    # -- rendering -------------------------------------------------------
    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.params.names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            coeff = abs(c)
            if mono and coeff == 1:
                body = mono
            elif mono:
                body = f"{_render_fraction(coeff)}*{mono}"
            else:
                body = _render_fraction(coeff)
            sign = "-" if c < 0 else "+"
            bits.append((sign, body))
        first_sign, first_body = bits[0]
        text = first_body if first_sign == "+" else "-" + first_body
        for sign, body in bits[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.render()})"


def _render_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# -- multivariate gcd via content extraction + primitive PRS -------------

def _split_by_var(p: MultiPoly, idx: int) -> dict:
    """View p as univariate in parameter idx: degree -> MultiPoly coefficient."""
    coeffs: dict = {}
    for e, c in p.terms.items():
        d = e[idx]
        rest = e[:idx] + (0,) + e[idx + 1 :]
        coeffs.setdefault(d, {})[rest] = c
    return {d: MultiPoly(p.params, t) for d, t in coeffs.items()}


def _join_by_var(coeffs: Mapping[int, MultiPoly], params: ParamSet, idx: int) -> MultiPoly:
    out: dict = {}
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            out[e[:idx] + (d,) + e[idx + 1 :]] = c
    return MultiPoly(params, out)


def _shift_var(p: MultiPoly, idx: int, d: int) -> MultiPoly:
    return MultiPoly(
        p.params, {e[:idx] + (e[idx] + d,) + e[idx + 1 :]: c for e, c in p.terms.items()}
    )


def poly_divexact(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact division a/b; raises CoeffError when b does not divide a."""
    _check_same(a, b)
    if not b:
        raise CoeffError("division by zero polynomial")
    if not a:
        return a
    if b.is_const():
        return a.scale(1 / b.const_value())
    quo: dict = {}
    rem = a
    eb, cb = b.leading()
    while rem:
        ea, ca = rem.leading()
        qe = tuple(x - y for x, y in zip(ea, eb))
        if any(x < 0 for x in qe):
            raise CoeffError("inexact polynomial division")
        qc = ca / cb
        quo[qe] = qc
        rem = rem - MultiPoly(a.params, {qe: qc}) * b
    return MultiPoly(a.params, quo)


def _pseudo_rem(f: MultiPoly, g: MultiPoly, idx: int) -> MultiPoly:
    """Pseudo-remainder of f by g with respect to the parameter at idx."""
    df = f.degree_in(idx)
    dg = g.degree_in(idx)
    lc_g = _split_by_var(g, idx)[dg]
    r = f
    while r and r.degree_in(idx) >= dg:
        dr = r.degree_in(idx)
        lc_r = _split_by_var(r, idx)[dr]
        r = r * lc_g - _shift_var(lc_r * g, idx, dr - dg)
        if r.degree_in(idx) >= dr and r:
            # cancellation must strictly lower the degree in idx
            raise CoeffError("pseudo-remainder failed to reduce degree")
    return r


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Primitive, positive-leading gcd in Q[params] (unit-normalized)."""
    _check_same(a, b)
    if not a:
        return b.primitive_positive()
    if not b:
        return a.primitive_positive()
    one = MultiPoly.const(a.params, 1)
    if a.is_const() or b.is_const():
        return one
    # fast path: both monomials
    if a.is_monomial() and b.is_monomial():
        ea = next(iter(a.terms))
        eb = next(iter(b.terms))
        return MultiPoly(a.params, {tuple(map(min, ea, eb)): _ONE})
    # fast path: one side a monomial -> gcd is the common monomial part
    if a.is_monomial() or b.is_monomial():
        mono, other = (a, b) if a.is_monomial() else (b, a)
        em = next(iter(mono.terms))
        shared = tuple(min(x, min(e[i] for e in other.terms)) for i, x in enumerate(em))
        return MultiPoly(a.params, {shared: _ONE})
    idx = max(
        i
        for i in range(len(a.params))
        if a.degree_in(i) or b.degree_in(i)
    )
    ca = _split_by_var(a, idx)
    cb = _split_by_var(b, idx)
    if a.degree_in(idx) == 0 or b.degree_in(idx) == 0:
        # one side is free of the chosen variable: gcd divides its coefficients
        flat, other = (a, cb) if a.degree_in(idx) == 0 else (b, ca)
        g = flat
        for coeff in other.values():
            g = poly_gcd(g, coeff)
            if g.is_const():
                return one
        return g.primitive_positive()

    def content_in(coeffs):
        g = MultiPoly.zero(a.params)
        for c in coeffs.values():
            g = poly_gcd(g, c)
            if g.is_const() and g:
                break
        return g if g else one

    cont_a = content_in(ca)
    cont_b = content_in(cb)
    pa = poly_divexact(a, cont_a)
    pb = poly_divexact(b, cont_b)
    if pa.degree_in(idx) < pb.degree_in(idx):
        pa, pb = pb, pa
    # primitive PRS
    while pb:
        r = _pseudo_rem(pa, pb, idx)
        if r:
            rc = _split_by_var(r, idx)
            cont_r = content_in(rc)
            r = poly_divexact(r, cont_r)
        pa, pb = pb, r
    gc = _split_by_var(pa, idx)
    g = poly_divexact(pa, content_in(gc))
    g = g * poly_gcd(cont_a, cont_b)
    return g.primitive_positive()


# -- rational functions ---------------------------------------------------

class RatFunc:
    """Reduced rational function num/den over a ParamSet.

    Canonical form: gcd(num, den) is constant, den is a primitive
    integer-coefficient polynomial, and den's graded-lex leading
    coefficient is positive.  Structural equality is semantic equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly, _normalized: bool = False):
        if _normalized:
            self.num = num
            self.den = den
            return
        _check_same(num, den)
        if not den:
            raise CoeffError("zero denominator")
        if not num:
            self.num = num
            self.den = MultiPoly.const(num.params, 1)
            return
        if not den.is_const():
            g = poly_gcd(num, den)
            if not g.is_const():
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
        c = den.content()
        if den.leading()[1] < 0:
            c = -c
        if c != 1:
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------------
    @staticmethod
    def const(params: ParamSet, value) -> "RatFunc":
        return RatFunc(
            MultiPoly.const(params, value), MultiPoly.const(params, 1), _normalized=True
        )

    @staticmethod
    def param(params: ParamSet, name: str) -> "RatFunc":
        return RatFunc(
            MultiPoly.var(params, name), MultiPoly.const(params, 1), _normalized=True
        )

    @staticmethod
    def from_poly(p: MultiPoly) -> "RatFunc":
        return RatFunc(p, MultiPoly.const(p.params, 1), _normalized=True)

    # -- structure ----------------------------------------------------------
    @property
    def params(self) -> ParamSet:
        return self.num.params

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(self.params, other)
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.params != self.params:
                raise CoeffError(
                    f"parameter-set mismatch: {self.params} vs {other.params}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.params, other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_const():
            return RatFunc(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        da = poly_divexact(self.den, g)
        db = poly_divexact(other.den, g)
        return RatFunc(self.num * db + other.num * da, da * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return RatFunc.const(self.params, 0)
        # cross-cancel before multiplying to keep intermediates small
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not d2.is_const():
            g = poly_gcd(n1, d2)
            if not g.is_const():
                n1 = poly_divexact(n1, g)
                d2 = poly_divexact(d2, g)
        if not d1.is_const():
            g = poly_gcd(n2, d1)
            if not g.is_const():
                n2 = poly_divexact(n2, g)
                d1 = poly_divexact(d1, g)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if not self.num:
            raise CoeffError("inversion of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if n == 0:
            return RatFunc.const(self.params, 1)
        base = self if n > 0 else self.inv()
        n = abs(n)
        result = base
        for _ in range(n - 1):
            result = result * base
        return result

    # -- substitution ---------------------------------------------------
    def substitute(self, bindings: Mapping[str, Fraction]) -> "RatFunc":
        """Partial evaluation; pole error when the denominator vanishes."""
        den = self.den.substitute(bindings)
        if not den:
            pairs = ", ".join(f"{k}={Fraction(v)}" for k, v in bindings.items())
            raise CoeffError(f"pole: denominator vanishes at {pairs}")
        return RatFunc(self.num.substitute(bindings), den)

    def embed(self, params: ParamSet) -> "RatFunc":
        if params == self.params:
            return self
        return RatFunc(self.num.embed(params), self.den.embed(params), _normalized=True)

    # -- rendering --------------------------------------------------------
    def render(self) -> str:
        if self.den.is_const() and self.den.const_value() == 1:
            return self.num.render()
        num = self.num.render()
        den = self.den.render()
        return f"({num})*({den})^-1"

    def __repr__(self):
        return f"RatFunc({self.render()})"


# -- spec operation surface ------------------------------------------------

def rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return a + b


def rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return a * b


def rf_neg(a: RatFunc) -> RatFunc:
    return -a


def rf_inv(a: RatFunc) -> RatFunc:
    return a.inv()


def rf_pow(a: RatFunc, n: int) -> RatFunc:
    return a ** n


def rf_substitute(a: RatFunc, bindings: Mapping[str, Fraction]) -> RatFunc:
    return a.substitute(bindings)


def rf_symbols(names: str | Iterable[str]):
    """Build a ParamSet from space-separated names and return it with one
    RatFunc generator per name: `ps, q, t = rf_symbols("q t")`."""
    if isinstance(names, str):
        names = names.split()
    ps = ParamSet(names)
    return (ps, *[RatFunc.param(ps, n) for n in ps.names])


def laurent_split(a: RatFunc, name: str) -> dict:
    """Decompose a as a Laurent polynomial in one parameter: exponent ->
    RatFunc free of that parameter.  Requires the denominator to involve
    the parameter only as a monomial factor."""
    params = a.params
    idx = params.index(name)
    dterms = a.den.terms
    if len({e[idx] for e in dterms}) > 1:
        raise CoeffError(f"denominator is not a monomial in {name}")
    dshift = next(iter(dterms))[idx] if dterms else 0
    den_flat = MultiPoly(params, {e[:idx] + (0,) + e[idx + 1 :]: c for e, c in dterms.items()})
    out: dict = {}
    for e, c in a.num.terms.items():
        k = e[idx] - dshift
        rest = e[:idx] + (0,) + e[idx + 1 :]
        bucket = out.setdefault(k, {})
        bucket[rest] = bucket.get(rest, _ZERO) + c
    return {
        k: RatFunc(MultiPoly(params, terms), den_flat)
        for k, terms in out.items()
        if any(terms.values())
    }
