"""Shared test helpers: independent oracles kept deliberately separate from
the library code paths they check."""

from __future__ import annotations

import random
from fractions import Fraction

from triprod import Letter, Polynomial, RewriteSystem, deglex_key


def L(symbol: int, family: int = 0, dotted: bool = False) -> Letter:
    return Letter(family, symbol, dotted)


def W(*letters: Letter):
    return tuple(letters)


def binom(lhs, rhs) -> Polynomial:
    """Rule lhs - rhs for plain words."""
    return Polynomial([(tuple(lhs), 1), (tuple(rhs), -1)])


def word_normal_forms(word, rules) -> set:
    """Exhaustive rewriting oracle for word-to-word rules: explore every
    rewrite of every occurrence and collect the irreducible words reached."""
    pairs = []
    for r in rules:
        terms = r.terms
        assert len(terms) == 2 and terms[0][1] == 1 and terms[1][1] == -1, (
            "oracle handles binomial word rules only"
        )
        pairs.append((terms[0][0], terms[1][0]))
    seen = set()
    out = set()
    stack = [tuple(word)]
    while stack:
        w = stack.pop()
        if w in seen:
            continue
        seen.add(w)
        rewrites = []
        for lhs, rhs in pairs:
            n = len(lhs)
            for p in range(len(w) - n + 1):
                if w[p : p + n] == lhs:
                    rewrites.append(w[:p] + rhs + w[p + n :])
        if rewrites:
            stack.extend(rewrites)
        else:
            out.add(w)
    return out


def random_reduce(f: Polynomial, system: RewriteSystem, rng: random.Random) -> Polynomial:
    """Reduction with a randomized strategy: pick any reducible word, any
    applicable (position, rule).  Used to witness confluence."""
    coeffs = dict(f.terms)
    while True:
        candidates = []
        for w, c in coeffs.items():
            if c and system.rewrites(w):
                candidates.append(w)
        if not candidates:
            break
        w = rng.choice(sorted(candidates, key=deglex_key))
        pos, rule = rng.choice(system.rewrites(w))
        c = coeffs[w]
        prefix, suffix = w[:pos], w[pos + len(rule.leading_word) :]
        for rw, rc in rule.terms:
            u = prefix + rw + suffix
            coeffs[u] = coeffs.get(u, Fraction(0)) - c * rc
    return Polynomial.from_dict(coeffs)


def brute_irreducible(words, leading_words) -> list:
    """Independent filter: keep words containing no leading word as a
    subword (naive containment scan)."""
    heads = list(leading_words)

    def contains(w, needle):
        n = len(needle)
        return any(w[p : p + n] == needle for p in range(len(w) - n + 1))

    return [w for w in words if not any(contains(w, h) for h in heads)]


def random_poly(rng: random.Random, letters, max_terms=3, max_len=3) -> Polynomial:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        n = rng.randint(0, max_len)
        w = tuple(rng.choice(letters) for _ in range(n))
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        terms.append((w, c))
    return Polynomial(terms)
