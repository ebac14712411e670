"""The dimonoid/trioid layer on the doubled alphabet.

The free associative algebra over X ∪ Ẋ carries three binary operations

    a |- b = phi(a)·b,   a -| b = a·phi(b),   a _|_ b = a·b,

where phi erases dots.  With all three it is a trialgebra (mode t=3), with
the first two a dialgebra (mode t=2).  The span of words with at least one
dot (t=3) or exactly one dot (t=2) is the image of the free trialgebra
(resp. dialgebra) under the map sending each generator x to its dotted
twin; such words decode to a unique bracketed expression.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .alphabet import Alphabet, Word
from .errors import InputError, OperationError
from .ncpoly import Polynomial

__all__ = [
    "Op",
    "OP_SYMBOL",
    "check_mode",
    "ops_for_mode",
    "phi",
    "tri_op",
    "dot_count",
    "in_psi_image",
    "BracketedTerm",
    "psi_inverse_render",
]


class Op(str, Enum):
    VDASH = "vdash"
    DASHV = "dashv"
    PERP = "perp"

    def __str__(self) -> str:
        return self.value


OP_SYMBOL = {Op.VDASH: "|-", Op.DASHV: "-|", Op.PERP: "_|_"}


def check_mode(t: int) -> int:
    if t not in (2, 3):
        raise InputError(f"mode must be 2 (dimonoid/dialgebra) or 3 (trioid/trialgebra), got {t!r}")
    return t


def ops_for_mode(t: int) -> tuple[Op, ...]:
    check_mode(t)
    return (Op.VDASH, Op.DASHV) if t == 2 else (Op.VDASH, Op.DASHV, Op.PERP)


def phi(f: Polynomial) -> Polynomial:
    """Dot-erasing homomorphism: every dotted letter becomes its undotted
    twin; linear, idempotent."""
    return f.map_words(lambda w: tuple(a.undot() for a in w))


def tri_op(op: Op, f: Polynomial, g: Polynomial, t: int = 3) -> Polynomial:
    check_mode(t)
    if op == Op.VDASH:
        return phi(f) * g
    if op == Op.DASHV:
        return f * phi(g)
    if op == Op.PERP:
        if t == 2:
            raise OperationError("the middle product is not available in mode t=2")
        return f * g
    raise InputError(f"unknown operation {op!r}")


def dot_count(w: Word) -> int:
    return sum(1 for a in w if a.dotted)


def in_psi_image(u: Word, t: int) -> bool:
    """Whether the word encodes an element of the free trioid (t=3: at
    least one dot) or free dimonoid (t=2: exactly one dot)."""
    check_mode(t)
    if not u:
        raise InputError("the empty word is not in the image")
    c = dot_count(u)
    return c >= 1 if t == 3 else c == 1


@dataclass(frozen=True)
class BracketedTerm:
    """Decoded form of a dotted word: the undotted letters before the first
    dot attach with |- ; each dot opens a block whose following undotted
    letters attach with -| ; blocks join with _|_ (t=3 only)."""

    word: Word
    t: int
    prefix: Word
    blocks: tuple[Word, ...]

    def render(self, alphabet: Alphabet) -> str:
        def name(a) -> str:
            return alphabet.generator_name(a.family, a.symbol)

        pieces = []
        for block in self.blocks:
            body = " -| ".join(name(a) for a in block)
            pieces.append(f"({body})" if len(block) > 1 else body)
        if self.prefix:
            head = " |- ".join([name(a) for a in self.prefix] + [pieces[0]])
            pieces[0] = head
        return " _|_ ".join(pieces)

    def evaluate(self) -> Polynomial:
        """Re-evaluate the expression by folding the three operations over
        dotted generators; returns the original word back."""

        def gen(a) -> Polynomial:
            return Polynomial.word((a.dot(),))

        block_vals = []
        for block in self.blocks:
            val = gen(block[0].undot())
            for a in block[1:]:
                val = tri_op(Op.DASHV, val, gen(a), self.t)
            block_vals.append(val)
        head = block_vals[0]
        for a in reversed(self.prefix):
            head = tri_op(Op.VDASH, gen(a), head, self.t)
        result = head
        for val in block_vals[1:]:
            result = tri_op(Op.PERP, result, val, self.t)
        return result


def psi_inverse_render(u: Word, t: int) -> BracketedTerm:
    """Split a dotted word into its unique bracketed expression."""
    check_mode(t)
    if not u or not in_psi_image(u, t):
        raise InputError("word is not in the image for this mode")
    dots = [i for i, a in enumerate(u) if a.dotted]
    prefix = u[: dots[0]]
    bounds = dots + [len(u)]
    blocks = tuple(u[bounds[i] : bounds[i + 1]] for i in range(len(dots)))
    return BracketedTerm(u, t, prefix, blocks)
