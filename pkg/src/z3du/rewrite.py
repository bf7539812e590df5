"""Diamond-lemma engine for free algebras over RatFunc coefficients.

A RewriteSystem is a set of oriented rules lhs -> rhs (every rhs word
strictly below lhs in the system's monomial order) together with that
order.  It provides deterministic normal forms, exhaustive overlap /
inclusion ambiguity enumeration, confluence checking, and degree-bounded
completion.

Every rule carries a derivation combo: an explicit expression of
lhs - rhs as sum(c * u * R_k * v) over the original relations R_k, so
reduction-to-zero doubles as a replayable ideal-membership certificate.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .coeff import ParamSet, RatFunc
from .freealg import (
    EMPTY,
    AlgebraError,
    GenAlphabet,
    MonomialOrder,
    NcPoly,
    Word,
    leading_term,
)

# combo entry: coefficient, left cofactor, original-relation index, right cofactor
ComboEntry = Tuple[RatFunc, Word, int, Word]


class CompletionLimit(RuntimeError):
    """Raised when completion exceeds the configured rule-count cap."""


@dataclass
class Rule:
    """Oriented reduction rule; `combo` certifies lhs - rhs as an ideal member."""

    lhs: Word
    rhs: NcPoly
    uid: int
    combo: Tuple[ComboEntry, ...]

    def poly(self) -> NcPoly:
        """lhs - rhs as an element of the free algebra."""
        one = NcPoly.word(self.rhs.alphabet, self.rhs.params, self.lhs)
        return one - self.rhs


@dataclass(frozen=True)
class Overlap:
    """Ambiguity between rules i and j: `word` reduces two ways.

    For an overlap ambiguity, lhs_i is a prefix of word and lhs_j a suffix
    starting at `offset`.  For an inclusion ambiguity, word == lhs_i and
    lhs_j occurs inside it at `offset`.
    """

    i: int
    j: int
    offset: int
    word: Word
    kind: str  # "overlap" | "inclusion"


@dataclass
class ConfluenceEntry:
    word: Word
    left_nf: NcPoly
    right_nf: NcPoly
    resolved: bool


@dataclass
class ConfluenceReport:
    ok: bool
    entries: List[ConfluenceEntry]
    max_deg: Optional[int] = None

    def failures(self):
        return [e for e in self.entries if not e.resolved]


@dataclass
class AddedRule:
    word: Word
    left_nf: NcPoly
    right_nf: NcPoly
    lhs: Word
    rhs: NcPoly


@dataclass
class CompletionReport:
    processed: int
    resolved: int
    added: List[AddedRule]
    skipped_beyond_cap: int
    max_deg: int
    status: str
    rule_count: int


class RewriteSystem:
    """Oriented, interreduced rule set with a monomial order.

    `status` is one of "raw", "confluent", "complete-to-degree(D)".
    Treated as immutable once frozen; completion works on a copy.
    """

    def __init__(
        self,
        alphabet: GenAlphabet,
        params: ParamSet,
        order: MonomialOrder,
        originals: Sequence[NcPoly],
    ):
        self.alphabet = alphabet
        self.params = params
        self.order = order
        self.originals: Tuple[NcPoly, ...] = tuple(originals)
        self.rules: List[Rule] = []
        self.status = "raw"
        self.complete_degree: Optional[int] = None
        self._uid = itertools.count()
        self._version = 0
        self._by_first: Optional[list] = None
        self._irreducible: set = set()
        self._nf_cache: dict = {}
        # heap key table: pop order-largest first from a min-heap
        inv = bytes(255 - b for b in order._table)
        self._inv_table = inv

    # -- bookkeeping ----------------------------------------------------
    def _bump(self):
        self._version += 1
        self._by_first = None
        self._irreducible = set()
        self._nf_cache = {}

    def _index(self):
        if self._by_first is None:
            buckets: list = [[] for _ in range(len(self.alphabet))]
            for r in self.rules:
                buckets[r.lhs[0]].append(r)
            self._by_first = buckets
        return self._by_first

    def _heap_key(self, w: Word) -> tuple:
        return (-len(w), w.translate(self._inv_table))

    def find_match(self, w: Word):
        """Leftmost rule match in w as (position, rule), or None."""
        buckets = self._index()
        for i in range(len(w)):
            for rule in buckets[w[i]]:
                if w.startswith(rule.lhs, i):
                    return i, rule
        return None

    def is_normal_word(self, w: Word) -> bool:
        if w in self._irreducible:
            return True
        if self.find_match(w) is None:
            self._irreducible.add(w)
            return True
        return False

    # -- normal form ------------------------------------------------------
    def normal_form(self, p: NcPoly, trace: Optional[list] = None) -> NcPoly:
        """Deterministic normal form: repeatedly rewrite the order-largest
        reducible word at its leftmost match.

        When `trace` is a list, every step appends (coeff, left, rule,
        right) with p == nf + sum(coeff * left * (lhs-rhs) * right).
        """
        if p.alphabet != self.alphabet:
            raise AlgebraError("alphabet mismatch")
        use_cache = trace is None
        agenda = dict(p.terms)
        heap = [self._heap_key(w) for w in agenda]
        key_to_word = {self._heap_key(w): w for w in agenda}
        heapq.heapify(heap)
        result: dict = {}
        while heap:
            key = heapq.heappop(heap)
            w = key_to_word[key]
            c = agenda.pop(w, None)
            if c is None:
                continue
            if w in self._irreducible:
                s = result.get(w)
                s = c if s is None else s + c
                if s:
                    result[w] = s
                else:
                    result.pop(w, None)
                continue
            if use_cache and w in self._nf_cache:
                for w2, c2 in self._nf_cache[w].terms.items():
                    cc = c * c2
                    s = result.get(w2)
                    s = cc if s is None else s + cc
                    if s:
                        result[w2] = s
                    else:
                        result.pop(w2, None)
                continue
            m = self.find_match(w)
            if m is None:
                self._irreducible.add(w)
                s = result.get(w)
                s = c if s is None else s + c
                if s:
                    result[w] = s
                else:
                    result.pop(w, None)
                continue
            pos, rule = m
            left = w[:pos]
            right = w[pos + len(rule.lhs) :]
            if trace is not None:
                trace.append((c, left, rule, right))
            for w2, c2 in rule.rhs.terms.items():
                nw = left + w2 + right
                cc = c * c2
                s = agenda.get(nw)
                s = cc if s is None else s + cc
                if s:
                    agenda[nw] = s
                    k = self._heap_key(nw)
                    if k not in key_to_word:
                        key_to_word[k] = nw
                    heapq.heappush(heap, k)
                else:
                    agenda.pop(nw, None)
        return NcPoly(self.alphabet, self.params, result)

    def nf_word(self, w: Word) -> NcPoly:
        """Normal form of a single word, cached on the system."""
        cached = self._nf_cache.get(w)
        if cached is None:
            cached = self.normal_form(NcPoly.word(self.alphabet, self.params, w))
            self._nf_cache[w] = cached
        return cached

    # -- normal words ------------------------------------------------------
    def _rank_order_gens(self) -> list:
        return [self.alphabet.index(n) for n in self.order.precedence]

    def normal_words(self, max_deg: int) -> List[Word]:
        """All irreducible words of length <= max_deg in ascending order."""
        gens = self._rank_order_gens()
        lhss = [r.lhs for r in self.rules]
        out: List[Word] = []
        level: List[Word] = [EMPTY] if not any(lhs == EMPTY for lhs in lhss) else []
        out.extend(level)
        for _ in range(max_deg):
            nxt: List[Word] = []
            for w in level:
                for g in gens:
                    cand = w + bytes([g])
                    # w is irreducible, so any new lhs occurrence ends at the tail
                    if any(cand.endswith(lhs) for lhs in lhss):
                        continue
                    nxt.append(cand)
            out.extend(nxt)
            level = nxt
            if not level:
                break
        return out

    def count_by_degree(self, max_deg: int) -> List[int]:
        counts = [0] * (max_deg + 1)
        for w in self.normal_words(max_deg):
            counts[len(w)] += 1
        return counts


def _make_rule(
    poly: NcPoly, combo: Tuple[ComboEntry, ...], order: MonomialOrder, uid: int
) -> Rule:
    lhs, c = leading_term(poly, order)
    if not lhs:
        raise AlgebraError("relation with constant leading term (empty word)")
    inv = c.inv()
    rhs = NcPoly.word(poly.alphabet, poly.params, lhs) - poly.scale(inv)
    for w in rhs.terms:
        if not order.less(w, lhs):
            raise AlgebraError("orientation produced a non-decreasing rule")
    new_combo = tuple((inv * cc, u, k, v) for (cc, u, k, v) in combo)
    return Rule(lhs=lhs, rhs=rhs, uid=uid, combo=new_combo)


def _flatten_trace(trace: list) -> List[ComboEntry]:
    out: List[ComboEntry] = []
    for c, u, rule, v in trace:
        for cc, uu, k, vv in rule.combo:
            out.append((c * cc, u + uu, k, vv + v))
    return out


def _combo_sub(a: Iterable[ComboEntry], b: Iterable[ComboEntry]) -> Tuple[ComboEntry, ...]:
    merged: dict = {}
    for sign, entries in ((1, a), (-1, b)):
        for c, u, k, v in entries:
            key = (u, k, v)
            cur = merged.get(key)
            cc = c if sign > 0 else -c
            s = cc if cur is None else cur + cc
            if s:
                merged[key] = s
            else:
                merged.pop(key, None)
    return tuple((c, u, k, v) for (u, k, v), c in merged.items())


def combo_expand(sys: RewriteSystem, combo: Iterable[ComboEntry]) -> NcPoly:
    """Replay a derivation combo against the original relations."""
    acc = NcPoly.zero(sys.alphabet, sys.params)
    for c, u, k, v in combo:
        lu = NcPoly.word(sys.alphabet, sys.params, u, c)
        rv = NcPoly.word(sys.alphabet, sys.params, v)
        acc = acc + lu * sys.originals[k] * rv
    return acc


class _Builder:
    """Mutable completion state: active rules plus an overlap queue."""

    def __init__(self, sys: RewriteSystem):
        self.sys = sys
        self.active: dict = {r.uid: r for r in sys.rules}
        self.queue: list = []
        self.seen: set = set()
        self.counter = sys._uid

    def order_key(self, w: Word) -> tuple:
        o = self.sys.order
        return (len(w), w.translate(o._table))

    def enqueue_pair(self, a: Rule, b: Rule):
        la, lb = a.lhs, b.lhs
        # overlap: proper suffix of la == proper prefix of lb
        for k in range(1, min(len(la), len(lb))):
            if la[-k:] == lb[:k]:
                word = la + lb[k:]
                entry = (a.uid, b.uid, len(la) - k)
                if entry not in self.seen:
                    self.seen.add(entry)
                    heapq.heappush(
                        self.queue,
                        (self.order_key(word), a.uid, b.uid, len(la) - k, word, "overlap"),
                    )
        # inclusion: lb properly inside la
        if a.uid != b.uid and len(lb) < len(la):
            start = 0
            while True:
                pos = la.find(lb, start)
                if pos < 0:
                    break
                entry = (a.uid, b.uid, pos)
                if entry not in self.seen and not (pos == 0 and len(lb) == len(la)):
                    self.seen.add(entry)
                    heapq.heappush(
                        self.queue, (self.order_key(la), a.uid, b.uid, pos, la, "inclusion")
                    )
                start = pos + 1

    def enqueue_all_with(self, r: Rule):
        for other in list(self.active.values()):
            self.enqueue_pair(r, other)
            if other.uid != r.uid:
                self.enqueue_pair(other, r)

    def reduce_with_trace(self, p: NcPoly) -> Tuple[NcPoly, List[ComboEntry]]:
        trace: list = []
        nf = self.sys.normal_form(p, trace=trace)
        return nf, _flatten_trace(trace)

    def add_relation(self, poly: NcPoly, combo: Tuple[ComboEntry, ...], max_rules: int):
        """Reduce, orient, insert, and interreduce; may cascade."""
        pending = [(poly, combo)]
        while pending:
            poly, combo = pending.pop()
            nf, contribs = self.reduce_with_trace(poly)
            if not nf:
                continue
            combo = _combo_sub(combo, contribs)
            rule = _make_rule(nf, combo, self.sys.order, next(self.counter))
            if len(self.active) + 1 > max_rules:
                raise CompletionLimit(f"rule cap {max_rules} exceeded during completion")
            # retire rules whose lhs the new rule reduces
            for other in list(self.active.values()):
                if rule.lhs != other.lhs and rule.lhs in other.lhs:
                    del self.active[other.uid]
                    pending.append((other.poly(), other.combo))
            self.active[rule.uid] = rule
            self.sys.rules = list(self.active.values())
            self.sys._bump()
            # re-reduce right-hand sides against the enlarged system
            for other in list(self.active.values()):
                if other.uid == rule.uid:
                    continue
                if any(rule.lhs in w for w in other.rhs.terms):
                    rhs_nf, contribs2 = self.reduce_with_trace(other.rhs)
                    other.rhs = rhs_nf
                    other.combo = _combo_sub(other.combo, [(-c, u, k, v) for c, u, k, v in contribs2])
                    self.sys._bump()
            self.enqueue_all_with(rule)


def orient(
    relations: Sequence[NcPoly],
    order: MonomialOrder,
    params: Optional[ParamSet] = None,
) -> RewriteSystem:
    """Turn relations p = 0 into rules lhs -> lhs - p/c and interreduce."""
    relations = list(relations)
    if params is None:
        if not relations:
            raise AlgebraError("orient needs relations or an explicit ParamSet")
        params = relations[0].params
    for p in relations:
        if not p:
            raise AlgebraError("zero relation cannot be oriented")
    sys = RewriteSystem(order.alphabet, params, order, relations)
    builder = _Builder(sys)
    for k, p in enumerate(relations):
        one = RatFunc.const(params, 1)
        builder.add_relation(p, ((one, EMPTY, k, EMPTY),), max_rules=10_000)
    builder.queue.clear()
    builder.seen.clear()
    sys.rules = list(builder.active.values())
    sys.status = "raw"
    sys._bump()
    return sys


def enumerate_overlaps(sys: RewriteSystem) -> List[Overlap]:
    """All Bergman overlap and inclusion ambiguities, sorted by word order."""
    found: List[Overlap] = []
    rules = sys.rules
    for i, a in enumerate(rules):
        for j, b in enumerate(rules):
            la, lb = a.lhs, b.lhs
            for k in range(1, min(len(la), len(lb))):
                if la[-k:] == lb[:k]:
                    found.append(Overlap(i, j, len(la) - k, la + lb[k:], "overlap"))
            if i != j and len(lb) < len(la):
                start = 0
                while True:
                    pos = la.find(lb, start)
                    if pos < 0:
                        break
                    found.append(Overlap(i, j, pos, la, "inclusion"))
                    start = pos + 1
    okey = sys.order.key
    found.sort(key=lambda o: (okey(o.word), o.i, o.j, o.offset))
    return found


def _two_way_nfs(sys: RewriteSystem, ov: Overlap) -> Tuple[NcPoly, NcPoly]:
    rule_i = sys.rules[ov.i]
    rule_j = sys.rules[ov.j]
    w = ov.word
    suffix = w[len(rule_i.lhs) :]
    left = rule_i.rhs * NcPoly.word(sys.alphabet, sys.params, suffix) if suffix else rule_i.rhs
    pre = w[: ov.offset]
    post = w[ov.offset + len(rule_j.lhs) :]
    right = rule_j.rhs
    if pre:
        right = NcPoly.word(sys.alphabet, sys.params, pre) * right
    if post:
        right = right * NcPoly.word(sys.alphabet, sys.params, post)
    return sys.normal_form(left), sys.normal_form(right)


def check_confluence(sys: RewriteSystem, max_deg: Optional[int] = None) -> ConfluenceReport:
    """Reduce every ambiguity word both ways; pass iff all pairs agree.

    With `max_deg` set, ambiguities with longer words are skipped and a
    passing verdict only upgrades status to complete-to-degree(max_deg).
    """
    entries: List[ConfluenceEntry] = []
    capped = False
    for ov in enumerate_overlaps(sys):
        if max_deg is not None and len(ov.word) > max_deg:
            capped = True
            continue
        lnf, rnf = _two_way_nfs(sys, ov)
        entries.append(ConfluenceEntry(ov.word, lnf, rnf, lnf == rnf))
    ok = all(e.resolved for e in entries)
    if ok:
        if not capped:
            sys.status = "confluent"
            sys.complete_degree = None
        elif sys.status == "raw":
            sys.status = f"complete-to-degree({max_deg})"
            sys.complete_degree = max_deg
    return ConfluenceReport(ok=ok, entries=entries, max_deg=max_deg)


def complete(
    sys: RewriteSystem, max_deg: int, max_rules: int = 10_000
) -> Tuple[RewriteSystem, CompletionReport]:
    """Resolve failing overlaps by adding oriented consequences, fair order.

    Overlaps are processed in increasing ambiguity-word order; words longer
    than `max_deg` are skipped.  Returns a new system whose status is
    "confluent" (no pending ambiguities at any degree) or
    "complete-to-degree(max_deg)".  Every added rule is an ideal
    consequence of the original relations, recorded with its derivation.
    """
    max_rule_deg = max((len(r.lhs) for r in sys.rules), default=0)
    if max_deg < max_rule_deg:
        raise AlgebraError(f"max_deg {max_deg} below maximal rule degree {max_rule_deg}")
    new = RewriteSystem(sys.alphabet, sys.params, sys.order, sys.originals)
    new.rules = [Rule(r.lhs, r.rhs, r.uid, r.combo) for r in sys.rules]
    new._uid = itertools.count(max((r.uid for r in sys.rules), default=-1) + 1)
    new._bump()
    builder = _Builder(new)
    for r in list(builder.active.values()):
        builder.enqueue_all_with(r)
    processed = resolved = skipped = 0
    added: List[AddedRule] = []
    while builder.queue:
        key, uid_i, uid_j, offset, word, kind = heapq.heappop(builder.queue)
        if uid_i not in builder.active or uid_j not in builder.active:
            continue
        if len(word) > max_deg:
            skipped += 1
            continue
        rule_i = builder.active[uid_i]
        rule_j = builder.active[uid_j]
        if not word.startswith(rule_i.lhs) or not word.startswith(rule_j.lhs, offset):
            continue
        processed += 1
        suffix = word[len(rule_i.lhs) :]
        p1 = rule_i.rhs
        if suffix:
            p1 = p1 * NcPoly.word(new.alphabet, new.params, suffix)
        pre = word[:offset]
        post = word[offset + len(rule_j.lhs) :]
        p2 = rule_j.rhs
        if pre:
            p2 = NcPoly.word(new.alphabet, new.params, pre) * p2
        if post:
            p2 = p2 * NcPoly.word(new.alphabet, new.params, post)
        one = RatFunc.const(new.params, 1)
        nf1, contribs1 = builder.reduce_with_trace(p1)
        nf2, contribs2 = builder.reduce_with_trace(p2)
        if nf1 == nf2:
            resolved += 1
            continue
        # word == nf1 + [(1,e,i,suffix)] + contribs1 == nf2 + [(1,pre,j,post)] + contribs2
        combo1 = _flatten_trace([(one, EMPTY, rule_i, suffix)]) + contribs1
        combo2 = _flatten_trace([(one, pre, rule_j, post)]) + contribs2
        diff_combo = _combo_sub(combo2, combo1)
        r = nf1 - nf2
        before = {u for u in builder.active}
        builder.add_relation(r, diff_combo, max_rules)
        new_rules = [builder.active[u] for u in builder.active if u not in before]
        for nr in new_rules:
            added.append(AddedRule(word=word, left_nf=nf1, right_nf=nf2, lhs=nr.lhs, rhs=nr.rhs))
    new.rules = list(builder.active.values())
    new._bump()
    if skipped == 0:
        new.status = "confluent"
        new.complete_degree = None
    else:
        new.status = f"complete-to-degree({max_deg})"
        new.complete_degree = max_deg
    report = CompletionReport(
        processed=processed,
        resolved=resolved,
        added=added,
        skipped_beyond_cap=skipped,
        max_deg=max_deg,
        status=new.status,
        rule_count=len(new.rules),
    )
    return new, report


def normal_form(sys: RewriteSystem, p: NcPoly) -> NcPoly:
    return sys.normal_form(p)


def normal_words(sys: RewriteSystem, max_deg: int) -> List[Word]:
    return sys.normal_words(max_deg)


def count_by_degree(sys: RewriteSystem, max_deg: int) -> List[int]:
    return sys.count_by_degree(max_deg)


def reduces_to_zero(sys: RewriteSystem, p: NcPoly) -> bool:
    """Sound ideal-membership certificate; False is inconclusive."""
    return not sys.normal_form(p)


def normal_form_random(sys: RewriteSystem, p: NcPoly, rng) -> NcPoly:
    """Normal form via a randomized strategy (random word, random match).

    Agrees with the deterministic strategy exactly when the system is
    confluent; used by the strategy-independence property tests.
    """
    agenda = dict(p.terms)
    while True:
        reducible = []
        for w in agenda:
            matches = []
            for rule in sys.rules:
                start = 0
                while True:
                    pos = w.find(rule.lhs, start)
                    if pos < 0:
                        break
                    matches.append((pos, rule))
                    start = pos + 1
            if matches:
                reducible.append((w, matches))
        if not reducible:
            return NcPoly(sys.alphabet, sys.params, agenda)
        w, matches = reducible[rng.randrange(len(reducible))]
        pos, rule = matches[rng.randrange(len(matches))]
        c = agenda.pop(w)
        left, right = w[:pos], w[pos + len(rule.lhs) :]
        for w2, c2 in rule.rhs.terms.items():
            nw = left + w2 + right
            s = agenda.get(nw)
            cc = c * c2
            s = cc if s is None else s + cc
            if s:
                agenda[nw] = s
            else:
                agenda.pop(nw, None)
