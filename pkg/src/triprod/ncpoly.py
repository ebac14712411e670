"""Exact noncommutative polynomials over the rationals.

A polynomial is a finitely supported map from words to nonzero Fractions,
kept sorted by descending deg-lex order so leading-term extraction is O(1).
No floating point is used anywhere.  Values are immutable and all
operations are pure functions.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .alphabet import Alphabet, EPSILON_TOKEN, Word, deglex_key
from .errors import InputError

__all__ = ["Polynomial", "word_poly", "parse_poly", "format_poly"]

_Scalar = int | Fraction


def _as_fraction(c: _Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise InputError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """Rational linear combination of words, canonical: no duplicate words,
    no zero coefficients."""

    __slots__ = ("_terms", "_coeffs")

    def __init__(self, terms: Iterable[tuple[Word, _Scalar]] = ()):
        acc: dict[Word, Fraction] = {}
        for w, c in terms:
            c = _as_fraction(c)
            if c:
                acc[w] = acc.get(w, Fraction(0)) + c
        cleaned = [(w, c) for w, c in acc.items() if c]
        cleaned.sort(key=lambda t: deglex_key(t[0]), reverse=True)
        self._terms: tuple[tuple[Word, Fraction], ...] = tuple(cleaned)
        self._coeffs: dict[Word, Fraction] = dict(cleaned)

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @classmethod
    def word(cls, w: Word, coeff: _Scalar = 1) -> "Polynomial":
        return cls([(w, coeff)])

    @classmethod
    def from_dict(cls, d: Mapping[Word, _Scalar]) -> "Polynomial":
        return cls(d.items())

    @property
    def terms(self) -> tuple[tuple[Word, Fraction], ...]:
        """Term list in descending deg-lex order."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def support(self) -> tuple[Word, ...]:
        return tuple(w for w, _ in self._terms)

    def coeff(self, w: Word) -> Fraction:
        return self._coeffs.get(w, Fraction(0))

    def leading(self) -> tuple[Word, Fraction]:
        """Greatest word of the support and its coefficient."""
        if not self._terms:
            raise InputError("the zero polynomial has no leading term")
        return self._terms[0]

    @property
    def leading_word(self) -> Word:
        return self.leading()[0]

    @property
    def leading_coeff(self) -> Fraction:
        return self.leading()[1]

    def make_monic(self) -> "Polynomial":
        lc = self.leading()[1]
        if lc == 1:
            return self
        return self._scale(Fraction(1) / lc)

    def _scale(self, c: Fraction) -> "Polynomial":
        if not c:
            return _ZERO
        p = Polynomial.__new__(Polynomial)
        p._terms = tuple((w, a * c) for w, a in self._terms)
        p._coeffs = dict(p._terms)
        return p

    def __neg__(self) -> "Polynomial":
        return self._scale(Fraction(-1))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._coeffs)
        for w, c in other._terms:
            acc[w] = acc.get(w, Fraction(0)) + c
        return Polynomial.from_dict(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(_as_fraction(other))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        acc: dict[Word, Fraction] = {}
        for w1, c1 in self._terms:
            for w2, c2 in other._terms:
                w = w1 + w2
                acc[w] = acc.get(w, Fraction(0)) + c1 * c2
        return Polynomial.from_dict(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(_as_fraction(other))
        return NotImplemented

    def map_words(self, fn: Callable[[Word], Word]) -> "Polynomial":
        """Linear extension of a word map; re-merges collapsed words."""
        return Polynomial((fn(w), c) for w, c in self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        bits = []
        for w, c in self._terms:
            ws = "*".join(
                f"{a.family}:{'.' if a.dotted else ''}{a.symbol}" for a in w
            ) or "eps"
            bits.append(f"{c}·{ws}")
        return "Polynomial(" + " + ".join(bits) + ")"


_ZERO = Polynomial()


def word_poly(w: Word, coeff: _Scalar = 1) -> Polynomial:
    return Polynomial.word(w, coeff)


_COEFF_RE = re.compile(r"^\d+(/\d+)?$")


def parse_poly(text: str, alphabet: Alphabet) -> Polynomial:
    """Parse the textual polynomial syntax: terms joined by standalone '+'
    or '-' tokens, each term an optional 'p' or 'p/q' coefficient followed
    by letters (or '@eps' / nothing for the empty word)."""
    tokens = text.split()
    if not tokens:
        raise InputError("empty polynomial text")
    if tokens == ["0"]:
        return Polynomial.zero()
    terms: list[tuple[Word, Fraction]] = []
    sign = Fraction(1)
    pos = 0
    if tokens[0] == "-":
        sign = Fraction(-1)
        pos = 1
    elif tokens[0] == "+":
        pos = 1
    if pos >= len(tokens):
        raise InputError(f"dangling sign in polynomial {text!r}")
    while pos < len(tokens):
        chunk: list[str] = []
        while pos < len(tokens) and tokens[pos] not in ("+", "-"):
            chunk.append(tokens[pos])
            pos += 1
        if not chunk:
            raise InputError(f"misplaced sign in polynomial {text!r}")
        coeff = sign
        if _COEFF_RE.match(chunk[0]):
            coeff = sign * Fraction(chunk[0])
            chunk = chunk[1:]
        if not chunk or chunk == [EPSILON_TOKEN]:
            word: Word = ()
        else:
            if EPSILON_TOKEN in chunk:
                raise InputError(f"'{EPSILON_TOKEN}' must stand alone in a term")
            word = tuple(alphabet.parse_letter(tok) for tok in chunk)
        terms.append((word, coeff))
        if pos < len(tokens):
            sign = Fraction(-1) if tokens[pos] == "-" else Fraction(1)
            pos += 1
            if pos == len(tokens):
                raise InputError(f"dangling sign in polynomial {text!r}")
    return Polynomial(terms)


def format_poly(p: Polynomial, alphabet: Alphabet) -> str:
    """Inverse of parse_poly; terms in descending deg-lex order."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i, (w, c) in enumerate(p.terms):
        if i == 0:
            sep = "- " if c < 0 else ""
        else:
            sep = "- " if c < 0 else "+ "
        mag = abs(c)
        if not w:
            body = str(mag)
        elif mag == 1:
            body = " ".join(alphabet.format_letter(a) for a in w)
        else:
            body = str(mag) + " " + " ".join(alphabet.format_letter(a) for a in w)
        parts.append(sep + body)
    return " ".join(parts)
