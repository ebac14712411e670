"""Rewriting engine for two-sided ideals of the free associative algebra:
reduction modulo a monic rule set, critical pairs (inclusion and
intersection compositions), triviality checking, bounded completion, and
enumeration of irreducible words.

A rule set whose compositions all reduce to zero is a Gröbner-Shirshov
basis: reduction modulo it projects onto the span of the irreducible
words, which form a linear basis of the quotient algebra.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .alphabet import Letter, Word, deglex_key
from .errors import InputError
from .ncpoly import Polynomial, word_poly

__all__ = [
    "Composition",
    "RewriteSystem",
    "GsbReport",
    "CompletionResult",
    "compositions",
    "is_gsb",
    "complete",
    "irr_words",
    "COMPLETED",
    "BUDGET_EXHAUSTED",
    "INCLUSION",
    "INTERSECTION",
]

INCLUSION = "inclusion"
INTERSECTION = "intersection"

COMPLETED = "completed"
BUDGET_EXHAUSTED = "budget_exhausted"


def poly_key(p: Polynomial) -> tuple:
    """Total deterministic order on canonical polynomials."""
    return tuple(
        (deglex_key(w), (c.numerator, c.denominator)) for w, c in p.terms
    )


@dataclass(frozen=True)
class Composition:
    """Critical element (left, right)_w.

    inclusion:    leading(left) = u·leading(right)·v, value = left - u·right·v
    intersection: leading(left)·u = v·leading(right) with 1 <= len(u) <
                  len(leading(right)), value = left·u - v·right
    """

    left: Polynomial
    right: Polynomial
    ambiguity: Word
    value: Polynomial
    kind: str


class RewriteSystem:
    """An immutable set of monic rules indexed by leading word.

    Rules are made monic and deduplicated on construction and kept in a
    canonical deterministic order.
    """

    def __init__(self, rules: Iterable[Polynomial] = ()):
        seen: dict[tuple, Polynomial] = {}
        for r in rules:
            if not isinstance(r, Polynomial):
                raise InputError(f"rules must be polynomials, got {type(r).__name__}")
            if r.is_zero:
                raise InputError("the zero polynomial cannot be a rewrite rule")
            r = r.make_monic()
            seen.setdefault(poly_key(r), r)
        self.rules: tuple[Polynomial, ...] = tuple(seen[k] for k in sorted(seen))
        index: dict[Word, list[Polynomial]] = {}
        for r in self.rules:
            index.setdefault(r.leading_word, []).append(r)
        self._index: dict[Word, tuple[Polynomial, ...]] = {
            w: tuple(rs) for w, rs in index.items()
        }
        self._lengths: tuple[int, ...] = tuple(
            sorted({len(w) for w in self._index}, reverse=True)
        )
        # memo: word -> leftmost rewrite or None (idempotent, safe to race)
        self._occ: dict[Word, tuple[int, Polynomial] | None] = {}

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __eq__(self, other) -> bool:
        return isinstance(other, RewriteSystem) and self.rules == other.rules

    def __hash__(self) -> int:
        return hash(self.rules)

    def __repr__(self) -> str:
        return f"RewriteSystem({len(self.rules)} rules)"

    @property
    def leading_words(self) -> tuple[Word, ...]:
        return tuple(r.leading_word for r in self.rules)

    def with_rules(self, extra: Iterable[Polynomial]) -> "RewriteSystem":
        return RewriteSystem(self.rules + tuple(extra))

    def find_rewrite(self, word: Word) -> tuple[int, Polynomial] | None:
        """Deterministic rewrite choice: earliest start position, then
        longest leading word, then least rule."""
        if not self._lengths:
            return None
        hit = self._occ.get(word, _MISS)
        if hit is not _MISS:
            return hit
        found: tuple[int, Polynomial] | None = None
        n = len(word)
        for p in range(n):
            for length in self._lengths:
                if length == 0:
                    found = (0, self._index[()][0])
                    break
                if p + length > n:
                    continue
                rs = self._index.get(word[p : p + length])
                if rs:
                    found = (p, rs[0])
                    break
            if found is not None:
                break
        if found is None and 0 in self._lengths:
            found = (0, self._index[()][0])
        self._occ[word] = found
        return found

    def rewrites(self, word: Word) -> list[tuple[int, Polynomial]]:
        """Every (position, rule) pair applicable to the word, in the same
        deterministic order find_rewrite searches."""
        out: list[tuple[int, Polynomial]] = []
        n = len(word)
        for p in range(n):
            for length in self._lengths:
                if length == 0 or p + length > n:
                    continue
                for r in self._index.get(word[p : p + length], ()):
                    out.append((p, r))
        if 0 in self._lengths:
            out.extend((0, r) for r in self._index[()])
        return out

    def is_reducible(self, word: Word) -> bool:
        return self.find_rewrite(word) is not None

    def reduce(
        self,
        f: Polynomial,
        steps: list[tuple[Word, Polynomial, Word, Fraction]] | None = None,
    ) -> Polynomial:
        """Normal form of f modulo the rules.

        At each step the greatest reducible word of the support is rewritten
        at its leftmost reducible position.  Every step strictly decreases
        the multiset of words under deg-lex, so this terminates.  When
        `steps` is given, each applied step is appended as
        (prefix, rule, suffix, coefficient) with
        f_before - f_after == coefficient * prefix·rule·suffix.
        """
        if f.is_zero or not self.rules:
            return f
        coeffs: dict[Word, Fraction] = dict(f.terms)
        irreducible: set[Word] = set()
        while True:
            best: Word | None = None
            best_key = None
            for w, c in coeffs.items():
                if not c or w in irreducible:
                    continue
                k = deglex_key(w)
                if best is None or k > best_key:
                    best, best_key = w, k
            if best is None:
                break
            hit = self.find_rewrite(best)
            if hit is None:
                irreducible.add(best)
                continue
            pos, rule = hit
            c = coeffs[best]
            prefix = best[:pos]
            suffix = best[pos + len(rule.leading_word) :]
            if steps is not None:
                steps.append((prefix, rule, suffix, c))
            for rw, rc in rule.terms:
                w2 = prefix + rw + suffix
                coeffs[w2] = coeffs.get(w2, Fraction(0)) - c * rc
        return Polynomial.from_dict(coeffs)


_MISS = object()


def _occurrences(needle: Word, hay: Word) -> list[int]:
    n, m = len(needle), len(hay)
    return [p for p in range(m - n + 1) if hay[p : p + n] == needle]


def compositions(f: Polynomial, g: Polynomial) -> list[Composition]:
    """All inclusion and intersection compositions of the (unordered) rule
    pair, self-overlaps included.  Both rules must be monic and nonzero."""
    for r in (f, g):
        if r.is_zero:
            raise InputError("compositions need nonzero rules")
        if r.leading_coeff != 1:
            raise InputError("compositions need monic rules")
    fw = f.leading_word
    gw = g.leading_word
    same = f == g
    out: list[Composition] = []

    # inclusions of leading(g) in leading(f)
    for p in _occurrences(gw, fw):
        if same and len(gw) == len(fw):
            continue  # a rule inside itself at full width is identically zero
        u, v = fw[:p], fw[p + len(gw) :]
        value = f - word_poly(u) * g * word_poly(v)
        out.append(Composition(f, g, fw, value, INCLUSION))
    # inclusions of leading(f) in leading(g); skipped for equal leading
    # words, where the mirror composition is just the negation
    if fw != gw:
        for p in _occurrences(fw, gw):
            u, v = gw[:p], gw[p + len(fw) :]
            value = g - word_poly(u) * f * word_poly(v)
            out.append(Composition(g, f, gw, value, INCLUSION))

    # proper overlaps: a suffix of leading(f) is a prefix of leading(g)
    for s in range(1, min(len(fw), len(gw))):
        if fw[len(fw) - s :] == gw[:s]:
            u = gw[s:]
            v = fw[: len(fw) - s]
            value = f * word_poly(u) - word_poly(v) * g
            out.append(Composition(f, g, fw + u, value, INTERSECTION))
    if not same:
        for s in range(1, min(len(fw), len(gw))):
            if gw[len(gw) - s :] == fw[:s]:
                u = fw[s:]
                v = gw[: len(gw) - s]
                value = g * word_poly(u) - word_poly(v) * f
                out.append(Composition(g, f, gw + u, value, INTERSECTION))
    return out


@dataclass(frozen=True)
class GsbReport:
    trivial: bool
    witnesses: tuple[tuple[Composition, Polynomial], ...]


def is_gsb(system: RewriteSystem) -> GsbReport:
    """Check every composition of every rule pair; a witness pairs the
    composition with its nonzero normal form."""
    witnesses: list[tuple[Composition, Polynomial]] = []
    rules = system.rules
    for i in range(len(rules)):
        for j in range(i, len(rules)):
            for comp in compositions(rules[i], rules[j]):
                r = system.reduce(comp.value)
                if not r.is_zero:
                    witnesses.append((comp, r))
    return GsbReport(not witnesses, tuple(witnesses))


@dataclass(frozen=True)
class CompletionResult:
    system: RewriteSystem
    status: str
    originals: tuple[Polynomial, ...]
    trace: tuple[tuple[Word, Polynomial], ...]

    def __iter__(self):
        # allows: system, status = complete(...)
        return iter((self.system, self.status))


def complete(
    system: RewriteSystem,
    max_rules: int = 10_000,
    max_degree: int = 12,
    max_steps: int = 1_000_000,
) -> CompletionResult:
    """Bounded critical-pair completion.

    Compositions are processed in ascending order of ambiguity word (fair
    queue); every nonzero normal form of a composition is adjoined as a new
    monic rule.  On success the result is inter-reduced (every rule is in
    normal form with respect to the others) and all its compositions are
    trivial.  Budget exhaustion is a status, not an error.
    """
    if max_rules <= 0 or max_degree <= 0 or max_steps <= 0:
        raise InputError("completion limits must be positive")
    rules: list[Polynomial] = list(system.rules)
    if len(rules) > max_rules:
        return CompletionResult(system, BUDGET_EXHAUSTED, system.rules, ())

    heap: list[tuple[tuple, int, Composition]] = []
    seq = 0

    def push_pair(a: Polynomial, b: Polynomial) -> None:
        nonlocal seq
        for comp in compositions(a, b):
            heapq.heappush(heap, (deglex_key(comp.ambiguity), seq, comp))
            seq += 1

    for i in range(len(rules)):
        for j in range(i, len(rules)):
            push_pair(rules[i], rules[j])

    current = system
    trace: list[tuple[Word, Polynomial]] = []
    status = COMPLETED
    steps = 0
    while heap:
        _, _, comp = heapq.heappop(heap)
        steps += 1
        if steps > max_steps:
            status = BUDGET_EXHAUSTED
            break
        value = current.reduce(comp.value)
        if value.is_zero:
            continue
        new_rule = value.make_monic()
        if len(new_rule.leading_word) > max_degree:
            status = BUDGET_EXHAUSTED
            break
        if len(rules) + 1 > max_rules:
            status = BUDGET_EXHAUSTED
            break
        trace.append((comp.ambiguity, new_rule))
        rules.append(new_rule)
        current = RewriteSystem(rules)
        for r in rules:
            push_pair(new_rule, r)

    if status == COMPLETED:
        current = _interreduce(current)
    return CompletionResult(current, status, system.rules, tuple(trace))


def _interreduce(system: RewriteSystem) -> RewriteSystem:
    """Reduce every rule modulo the others until nothing changes; for a
    confluent system this yields the unique reduced basis."""
    rules = list(system.rules)
    changed = True
    while changed:
        changed = False
        for i in range(len(rules)):
            others = RewriteSystem(rules[:i] + rules[i + 1 :])
            r = others.reduce(rules[i])
            if r.is_zero:
                del rules[i]
                changed = True
                break
            r = r.make_monic()
            if r != rules[i]:
                rules[i] = r
                changed = True
                break
    return RewriteSystem(rules)


def irr_words(
    system: RewriteSystem, letters: Iterable[Letter], max_len: int
) -> list[Word]:
    """All words over the given letters of length <= max_len containing no
    rule's leading word as a subword, in ascending deg-lex order."""
    if max_len < 0:
        raise InputError("max_len must be >= 0")
    alpha = sorted(set(letters), key=lambda a: a.key)
    heads = {r.leading_word for r in system.rules}
    lengths = sorted({len(w) for w in heads})
    if 0 in lengths:
        return []  # a unit rule makes every word reducible

    def extension_ok(w: Word) -> bool:
        # the prefix is already irreducible: only suffixes ending at the
        # freshly appended letter can match a leading word
        return not any(
            length <= len(w) and w[len(w) - length :] in heads for length in lengths
        )

    out: list[Word] = [()]
    level: list[Word] = [()]
    for _ in range(max_len):
        nxt: list[Word] = []
        for w in level:
            for a in alpha:
                u = w + (a,)
                if extension_ok(u):
                    nxt.append(u)
        out.extend(nxt)
        level = nxt
    return out
