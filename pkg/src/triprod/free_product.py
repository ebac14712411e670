"""Free products of finite trioids, dimonoids and trialgebras.

Normal forms are alternating words: letters drawn from each factor's
surviving letters and the full dotted copy of its base set, adjacent
letters from distinct factors, dot count at least one (t=3) or exactly one
(t=2).  Products are computed two ways: by the closed formulas (erase dots
on one side, merge the touching pair of letters through the factor's
tables) and by an independent oracle that multiplies raw polynomials over
the doubled alphabet and reduces them modulo the combined rewriting
system.  The two must agree; the rewriting route is the ground truth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import Sequence

from .alphabet import Alphabet, Letter, Word
from .errors import InputError, OperationError
from .gsb import RewriteSystem
from .ncpoly import Polynomial, format_poly, parse_poly, word_poly
from .replicated import Op, check_mode, in_psi_image, ops_for_mode, tri_op
from .structures import (
    AssociatedQuotient,
    Combination,
    StructurePresentation,
    associated_quotient,
    check_axioms,
    relations,
)

__all__ = ["FpElement", "Family"]


@dataclass(frozen=True)
class FpElement:
    """An element of a free product in normal form: a single word in
    trioid/dimonoid mode, a rational combination of normal words in
    trialgebra mode."""

    poly: Polynomial

    @property
    def word(self) -> Word:
        if len(self.poly) != 1 or self.poly.leading_coeff != 1:
            raise InputError("element is not a single plain word")
        return self.poly.leading_word

    def __repr__(self) -> str:
        return f"FpElement({self.poly!r})"


class Family:
    """A finite family of presentations with a fixed mode, the combined
    rewriting system over the doubled alphabets, and the free-product
    operations.  Immutable after construction."""

    def __init__(self, presentations: Sequence[StructurePresentation], t: int):
        check_mode(t)
        if not presentations:
            raise InputError("a family needs at least one presentation")
        self.t = t
        self.alphabet = Alphabet()
        for P in presentations:
            if not P.supports_mode(t):
                raise InputError(f"{P.name!r} ({P.kind}) does not support mode t={t}")
            report = check_axioms(P, t)
            if not report.ok:
                v = report.violations[0]
                raise InputError(
                    f"{P.name!r} violates {v.identity} at {v.triple}: "
                    f"{v.lhs} != {v.rhs}"
                )
            self.alphabet.add_family(P.name, P.elements)
        self.presentations: tuple[StructurePresentation, ...] = tuple(presentations)
        self.linear = any(P.linear for P in presentations)
        self.quotients: tuple[AssociatedQuotient, ...] = tuple(
            associated_quotient(P, t, i) for i, P in enumerate(presentations)
        )
        self.psi_systems: tuple[RewriteSystem, ...] = tuple(
            relations(P, t, i).psi for i, P in enumerate(presentations)
        )
        self.system = RewriteSystem(
            chain(
                chain.from_iterable(s.rules for s in self.psi_systems),
                chain.from_iterable(q.rules.rules for q in self.quotients),
            )
        )
        self._rep_sets: tuple[frozenset[int], ...] = tuple(
            frozenset(q.reps) for q in self.quotients
        )

    @property
    def n_factors(self) -> int:
        return len(self.presentations)

    def normal_letters(self, family: int) -> list[Letter]:
        """The letters usable in normal forms for one factor: surviving
        undotted letters plus the full dotted copy, ascending."""
        if not 0 <= family < self.n_factors:
            raise InputError(f"no factor #{family}")
        undotted = [Letter(family, s, False) for s in sorted(self._rep_sets[family])]
        dotted = [
            Letter(family, s, True) for s in range(self.presentations[family].size)
        ]
        return undotted + dotted

    # -- validation ---------------------------------------------------------

    def _check_normal_letter(self, a: Letter) -> None:
        self.alphabet.check_letter(a)
        if not a.dotted and a.symbol not in self._rep_sets[a.family]:
            raise InputError(
                f"letter {self.alphabet.format_letter(a)} is eliminated in its "
                "factor and cannot appear undotted in a normal form"
            )

    def validate_word(self, w: Word) -> None:
        if not w:
            raise InputError("normal-form words are nonempty")
        for a in w:
            self._check_normal_letter(a)
        for p in range(len(w) - 1):
            if w[p].family == w[p + 1].family:
                raise InputError(
                    f"adjacent letters {self.alphabet.format_letter(w[p])} "
                    f"{self.alphabet.format_letter(w[p + 1])} come from the same factor"
                )
        if not in_psi_image(w, self.t):
            need = "at least one dot" if self.t == 3 else "exactly one dot"
            raise InputError(f"word needs {need} in mode t={self.t}")

    def element(self, poly: Polynomial) -> FpElement:
        if not self.linear:
            if len(poly) != 1 or poly.leading_coeff != 1:
                raise InputError(
                    "trioid/dimonoid elements are single words with coefficient 1"
                )
        for w, _ in poly.terms:
            self.validate_word(w)
        return FpElement(poly)

    def element_from_word(self, w: Word) -> FpElement:
        self.validate_word(w)
        return FpElement(Polynomial.word(w))

    def parse_element(self, text: str) -> FpElement:
        return self.element(parse_poly(text, self.alphabet))

    def format_element(self, e: FpElement) -> str:
        if not self.linear and len(e.poly) == 1 and e.poly.leading_coeff == 1:
            return self.alphabet.format_word(e.poly.leading_word)
        return format_poly(e.poly, self.alphabet)

    # -- the one-step merge -------------------------------------------------

    def red(self, y: Letter, z: Letter) -> Polynomial | None:
        """Merge two adjacent normal-form letters.

        Different factors: no merge (None; the pair stands as is).  Both
        undotted: product of the surviving letters in the factor's
        associative quotient.  At least one dot: the dotted table value,
        pairing dotted-left with -|, dotted-right with |-, both-dotted with
        the middle product (t=3 only).
        """
        self._check_normal_letter(y)
        self._check_normal_letter(z)
        if y.family != z.family:
            return None
        i = y.family
        P = self.presentations[i]
        if not y.dotted and not z.dotted:
            comb = self.quotients[i].pair_product(y.symbol, z.symbol)
            return Polynomial(((Letter(i, s, False),), c) for s, c in comb)
        if y.dotted and z.dotted:
            if self.t == 2:
                raise OperationError(
                    "two adjacent dotted letters cannot merge in mode t=2"
                )
            op = Op.PERP
        elif y.dotted:
            op = Op.DASHV
        else:
            op = Op.VDASH
        comb = P.value_terms(op, y.symbol, z.symbol)
        return Polynomial(((Letter(i, s, True),), c) for s, c in comb)

    def _proj_phi(self, a: Letter) -> Polynomial:
        """Erase a dot and rewrite the result into surviving letters."""
        if not a.dotted:
            return Polynomial.word((a,))
        comb = self.quotients[a.family].expand(a.symbol)
        return Polynomial(((Letter(a.family, s, False),), c) for s, c in comb)

    def _merge(self, left: Polynomial, right: Polynomial) -> Polynomial:
        acc = Polynomial.zero()
        for lw, lc in left.terms:
            for rw, rc in right.terms:
                r = self.red(lw[0], rw[0])
                if r is None:
                    r = Polynomial.word(lw + rw)
                acc = acc + (lc * rc) * r
        return acc

    # -- closed-form products ------------------------------------------------

    def mul(self, op: Op, u: FpElement, v: FpElement) -> FpElement:
        """Product of normal forms by the closed formulas: erase dots on the
        side the operation forgets, merge the letters meeting at the seam,
        keep the rest verbatim."""
        if op not in ops_for_mode(self.t):
            raise OperationError(f"operation {op} is not available in mode t={self.t}")
        acc = Polynomial.zero()
        for uw, uc in u.poly.terms:
            for vw, vc in v.poly.terms:
                acc = acc + (uc * vc) * self._mul_words(op, uw, vw)
        return self.element(acc)

    def _mul_words(self, op: Op, yw: Word, zw: Word) -> Polynomial:
        one = word_poly(())
        if op == Op.VDASH:
            prefix = one
            for a in yw[:-1]:
                prefix = prefix * self._proj_phi(a)
            seam = self._merge(self._proj_phi(yw[-1]), word_poly((zw[0],)))
            return prefix * seam * word_poly(zw[1:])
        if op == Op.DASHV:
            seam = self._merge(word_poly((yw[-1],)), self._proj_phi(zw[0]))
            suffix = one
            for a in zw[1:]:
                suffix = suffix * self._proj_phi(a)
            return word_poly(yw[:-1]) * seam * suffix
        seam = self._merge(word_poly((yw[-1],)), word_poly((zw[0],)))
        return word_poly(yw[:-1]) * seam * word_poly(zw[1:])

    # -- independent oracle ---------------------------------------------------

    def oracle_mul(self, op: Op, u: FpElement, v: FpElement) -> FpElement:
        """Ground truth: multiply the raw polynomials over the doubled
        alphabet, then reduce to the unique normal form with the combined
        rewriting system."""
        if op not in ops_for_mode(self.t):
            raise OperationError(f"operation {op} is not available in mode t={self.t}")
        raw = tri_op(op, u.poly, v.poly, self.t)
        return self.element(self.system.reduce(raw))

    # -- basis enumeration -----------------------------------------------------

    def basis(self, max_len: int) -> list[Word]:
        """All normal-form words of length <= max_len in ascending deg-lex
        order."""
        if max_len < 1:
            raise InputError("max_len must be >= 1")
        letters = sorted(
            (a for i in range(self.n_factors) for a in self.normal_letters(i)),
            key=lambda a: a.key,
        )
        max_dots = 1 if self.t == 2 else None
        out: list[Word] = []
        level: list[tuple[Word, int]] = [((), 0)]
        for _ in range(max_len):
            nxt: list[tuple[Word, int]] = []
            for w, dots in level:
                for a in letters:
                    if w and w[-1].family == a.family:
                        continue
                    d = dots + (1 if a.dotted else 0)
                    if max_dots is not None and d > max_dots:
                        continue
                    nxt.append((w + (a,), d))
            for w, dots in nxt:
                if (dots >= 1) if self.t == 3 else (dots == 1):
                    out.append(w)
            level = nxt
        return out

    # -- embeddings of the factors ----------------------------------------------

    def embed(self, family: int | str, generator: int | str) -> FpElement:
        """The canonical copy of a factor element: its dotted letter.  All
        base letters embed, including ones eliminated in the associative
        quotient."""
        if isinstance(family, str):
            family = self.alphabet.family_index(family)
        a = self.alphabet.letter(family, generator, dotted=True)
        return self.element_from_word((a,))

    def embed_value(self, family: int, comb: Combination) -> FpElement:
        """Image of a factor table value (a letter or combination)."""
        poly = Polynomial(((Letter(family, s, True),), c) for s, c in comb)
        return self.element(poly)

    # -- sampling ----------------------------------------------------------------

    def random_basis_word(self, rng: random.Random, max_len: int) -> Word:
        """A uniformly chosen length then random alternating letters,
        patched to satisfy the dot-count constraint; deterministic for a
        seeded generator."""
        if max_len < 1:
            raise InputError("max_len must be >= 1")
        for _ in range(1000):
            n = rng.randint(1, max_len)
            fams: list[int] = []
            for p in range(n):
                choices = [
                    i for i in range(self.n_factors) if not fams or i != fams[-1]
                ]
                if not choices:
                    break
                fams.append(rng.choice(choices))
            if len(fams) < n:
                continue
            if self.t == 2:
                dot_at = rng.randrange(n)
                word = []
                ok = True
                for p, i in enumerate(fams):
                    if p == dot_at:
                        word.append(
                            Letter(i, rng.randrange(self.presentations[i].size), True)
                        )
                    else:
                        reps = sorted(self._rep_sets[i])
                        if not reps:
                            ok = False
                            break
                        word.append(Letter(i, rng.choice(reps), False))
                if ok:
                    return tuple(word)
                continue
            word = []
            for i in fams:
                reps = sorted(self._rep_sets[i])
                pool = [Letter(i, s, True) for s in range(self.presentations[i].size)]
                pool += [Letter(i, s, False) for s in reps]
                word.append(rng.choice(pool))
            if not any(a.dotted for a in word):
                p = rng.randrange(n)
                word[p] = word[p].dot()
            return tuple(word)
        raise InputError("could not sample a normal-form word; factors too degenerate")

    def random_element(self, rng: random.Random, max_len: int, max_terms: int = 3) -> FpElement:
        """Random normal form: a single word in set mode, a small rational
        combination in trialgebra mode."""
        if not self.linear:
            return self.element_from_word(self.random_basis_word(rng, max_len))
        k = rng.randint(1, max_terms)
        acc = Polynomial.zero()
        for _ in range(k):
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            if not c:
                c = Fraction(1)
            acc = acc + c * Polynomial.word(self.random_basis_word(rng, max_len))
        if acc.is_zero:
            acc = Polynomial.word(self.random_basis_word(rng, max_len))
        return self.element(acc)
