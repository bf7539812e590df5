"""Free-algebra layer: generator alphabets, words in the free monoid,
noncommutative polynomials over RatFunc, degree-lex monomial orders,
and the commutator.

Words are stored as `bytes` (one byte per generator index), which makes
subword search and concatenation cheap.  The empty word is the
multiplicative identity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .coeff import CoeffError, ParamSet, RatFunc

Word = bytes
EMPTY: Word = b""


class AlgebraError(ValueError):
    """Alphabet mismatch or malformed word/polynomial."""


class GenAlphabet:
    """Ordered generator names, each optionally paired with a formal inverse.

    The inverse pairing is symmetric; it drives the automatic unit
    relations g*g_inv - 1 and g_inv*g - 1 when presentations are built.
    """

    __slots__ = ("names", "inverse_of", "_index")

    def __init__(self, names: Iterable[str], inverse_pairs: Iterable[tuple] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate generator names in {names!r}")
        if len(names) > 255:
            raise AlgebraError("alphabet too large for byte-encoded words")
        index = {n: i for i, n in enumerate(names)}
        inverse: dict = {}
        for a, b in inverse_pairs:
            ia, ib = index[a], index[b]
            inverse[ia] = ib
            inverse[ib] = ia
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "inverse_of", inverse)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, *a):
        raise AttributeError("GenAlphabet is immutable")

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, GenAlphabet)
            and self.names == other.names
            and self.inverse_of == other.inverse_of
        )

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.inverse_of.items()))))

    def __repr__(self):
        return f"GenAlphabet{self.names!r}"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown generator {name!r} (have {self.names})") from None

    def word(self, *names: str) -> Word:
        return bytes(self.index(n) for n in names)

    def render_word(self, w: Word) -> str:
        """Word as explicit product with ^ powers; empty word renders as 1."""
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.names[w[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


class MonomialOrder:
    """Degree-lexicographic order on words with a configurable precedence.

    `precedence` lists generator names from smallest to largest; the
    default is alphabet declaration order.  The order is total,
    multiplicative and well-founded.
    """

    __slots__ = ("alphabet", "precedence", "_table")

    def __init__(self, alphabet: GenAlphabet, precedence: Optional[Sequence[str]] = None):
        if precedence is None:
            precedence = alphabet.names
        precedence = tuple(precedence)
        if sorted(precedence) != sorted(alphabet.names):
            raise AlgebraError(
                f"precedence {precedence!r} is not a permutation of {alphabet.names!r}"
            )
        rank = [0] * len(alphabet)
        for pos, name in enumerate(precedence):
            rank[alphabet.index(name)] = pos
        table = bytes.maketrans(bytes(range(len(alphabet))), bytes(rank))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "precedence", precedence)
        object.__setattr__(self, "_table", table)

    def __setattr__(self, *a):
        raise AttributeError("MonomialOrder is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.alphabet == other.alphabet
            and self.precedence == other.precedence
        )

    def __hash__(self):
        return hash((self.alphabet, self.precedence))

    def key(self, w: Word) -> tuple:
        return (len(w), w.translate(self._table))

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def max_word(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)


class NcPoly:
    """Finite RatFunc-linear combination of words over one alphabet.

    Zero coefficients are never stored.  Supports +, -, * (including
    scalars), integer powers, and substitution of parameters.
    """

    __slots__ = ("alphabet", "params", "terms")

    def __init__(self, alphabet: GenAlphabet, params: ParamSet, terms: Mapping[Word, RatFunc]):
        self.alphabet = alphabet
        self.params = params
        self.terms = {w: c for w, c in terms.items() if c}

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero(alphabet: GenAlphabet, params: ParamSet) -> "NcPoly":
        return NcPoly(alphabet, params, {})

    @staticmethod
    def const(alphabet: GenAlphabet, params: ParamSet, value) -> "NcPoly":
        c = value if isinstance(value, RatFunc) else RatFunc.const(params, value)
        return NcPoly(alphabet, params, {EMPTY: c})

    @staticmethod
    def gen(alphabet: GenAlphabet, params: ParamSet, name: str) -> "NcPoly":
        return NcPoly(alphabet, params, {bytes([alphabet.index(name)]): RatFunc.const(params, 1)})

    @staticmethod
    def word(alphabet: GenAlphabet, params: ParamSet, w: Word, coeff=1) -> "NcPoly":
        c = coeff if isinstance(coeff, RatFunc) else RatFunc.const(params, coeff)
        return NcPoly(alphabet, params, {bytes(w): c})

    # -- structure ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = NcPoly.const(self.alphabet, self.params, other)
        return (
            isinstance(other, NcPoly)
            and self.alphabet == other.alphabet
            and self.params == other.params
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.alphabet, self.params, frozenset(self.terms.items())))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def _check(self, other: "NcPoly"):
        if self.alphabet != other.alphabet:
            raise AlgebraError("alphabet mismatch")
        if self.params != other.params:
            raise CoeffError("parameter-set mismatch")

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, RatFunc)):
            return NcPoly.const(self.alphabet, self.params, other)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NcPoly(self.alphabet, self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.alphabet, self.params, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return NcPoly(self.alphabet, self.params, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "NcPoly":
        if not isinstance(c, RatFunc):
            c = RatFunc.const(self.params, c)
        if not c:
            return NcPoly.zero(self.alphabet, self.params)
        return NcPoly(self.alphabet, self.params, {w: c * v for w, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative power of a noncommutative polynomial")
        result = NcPoly.const(self.alphabet, self.params, 1)
        for _ in range(n):
            result = result * self
        return result

    def substitute(self, bindings) -> "NcPoly":
        """Specialize parameters in every coefficient (pole errors propagate)."""
        return NcPoly(
            self.alphabet, self.params, {w: c.substitute(bindings) for w, c in self.terms.items()}
        )

    def embed(self, params: ParamSet) -> "NcPoly":
        if params == self.params:
            return self
        return NcPoly(self.alphabet, params, {w: c.embed(params) for w, c in self.terms.items()})

    def map_words(self, fn) -> "NcPoly":
        """Apply a word-to-word map (e.g. generator renaming) termwise."""
        out: dict = {}
        for w, c in self.terms.items():
            nw = fn(w)
            s = out.get(nw)
            s = c if s is None else s + c
            if s:
                out[nw] = s
            else:
                del out[nw]
        return NcPoly(self.alphabet, self.params, out)

    # -- rendering -------------------------------------------------------------
    def render(self, order: Optional[MonomialOrder] = None) -> str:
        if not self.terms:
            return "0"
        if order is None:
            order = MonomialOrder(self.alphabet)
        bits = []
        for w in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[w]
            word = self.alphabet.render_word(w)
            if c == 1 and w:
                bits.append(("+", word))
            elif c == -1 and w:
                bits.append(("-", word))
            else:
                neg = -c
                # prefer rendering "- c*w" when the coefficient is a pure negative
                sign = "+"
                if c.num.terms and all(v < 0 for v in c.num.terms.values()):
                    c = neg
                    sign = "-"
                coeff = c.render()
                if not (c.is_const() and c.den.const_value() == 1 and c.num.is_const()):
                    coeff = f"({coeff})"
                bits.append((sign, f"{coeff}*{word}" if w else coeff))
        sign0, body0 = bits[0]
        text = body0 if sign0 == "+" else "-" + body0
        for sign, body in bits[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"NcPoly({self.render()})"


# -- spec operation surface ------------------------------------------------

def nc_add(a: NcPoly, b: NcPoly) -> NcPoly:
    return a + b


def nc_mul(a: NcPoly, b: NcPoly) -> NcPoly:
    return a * b


def nc_scale(a: NcPoly, c) -> NcPoly:
    return a.scale(c)


def nc_pow(a: NcPoly, n: int) -> NcPoly:
    return a ** n


def bracket(a: NcPoly, b: NcPoly) -> NcPoly:
    """Commutator ab - ba."""
    return a * b - b * a


def leading_term(p: NcPoly, order: MonomialOrder) -> tuple:
    """Order-maximal word of p with its coefficient."""
    if not p.terms:
        raise AlgebraError("zero polynomial has no leading term")
    w = max(p.terms, key=order.key)
    return w, p.terms[w]


def free_context(gen_names: str | Sequence[str], param_names: str | Sequence[str] = (),
                 inverse_pairs: Iterable[tuple] = ()):
    """Convenience bundle: alphabet, params, generator polys, param RatFuncs.

    `alg, params, (A, B), (q,) = free_context("A B", "q")`
    """
    if isinstance(gen_names, str):
        gen_names = gen_names.split()
    if isinstance(param_names, str):
        param_names = param_names.split()
    alphabet = GenAlphabet(gen_names, inverse_pairs)
    params = ParamSet(param_names)
    gens = tuple(NcPoly.gen(alphabet, params, n) for n in alphabet.names)
    rfs = tuple(RatFunc.param(params, n) for n in params.names)
    return alphabet, params, gens, rfs
