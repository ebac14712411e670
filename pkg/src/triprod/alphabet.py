"""Doubled, family-indexed alphabets and the deg-lex order on words.

Letters belong to families (one family per loaded structure) and each base
letter carries a dotted twin.  The total order on letters puts every dotted
letter above every undotted one; within equal dottedness letters compare by
(family, position).  Words compare by length first and then letterwise,
which makes the order monomial: u > v implies w1 u w2 > w1 v w2.

All values are immutable after construction and safe to share between
threads; an Alphabet is write-once at load time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError

__all__ = [
    "Letter",
    "Word",
    "EMPTY_WORD",
    "deglex_key",
    "cmp_deglex",
    "Alphabet",
]


@dataclass(frozen=True)
class Letter:
    """A single alphabet symbol: family index, position inside the family's
    declared generator list, and a dotted flag."""

    family: int
    symbol: int
    dotted: bool = False

    @property
    def key(self) -> tuple[bool, int, int]:
        return (self.dotted, self.family, self.symbol)

    def dot(self) -> "Letter":
        return Letter(self.family, self.symbol, True)

    def undot(self) -> "Letter":
        return Letter(self.family, self.symbol, False)

    def __lt__(self, other: "Letter") -> bool:
        return self.key < other.key

    def __le__(self, other: "Letter") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Letter") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Letter") -> bool:
        return self.key >= other.key

    def __repr__(self) -> str:
        return f"Letter({self.family},{'.' if self.dotted else ''}{self.symbol})"


Word = tuple[Letter, ...]

EMPTY_WORD: Word = ()

EPSILON_TOKEN = "@eps"


def deglex_key(word: Word) -> tuple:
    """Sort key realizing the deg-lex order: length first, then letters."""
    return (len(word), tuple(a.key for a in word))


def cmp_deglex(u: Word, v: Word) -> int:
    """Three-way deg-lex comparison: -1 if u < v, 0 if equal, 1 if u > v."""
    ku, kv = deglex_key(u), deglex_key(v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


def _check_name(name: str, what: str) -> None:
    if not isinstance(name, str) or not name:
        raise InputError(f"{what} must be a nonempty string, got {name!r}")
    if any(c.isspace() for c in name) or ":" in name:
        raise InputError(f"{what} {name!r} may not contain whitespace or ':'")


class Alphabet:
    """Registry mapping (family, symbol) pairs to printable names.

    Families are registered once, in order; the integer order of family ids
    and of symbol positions is the well order used by the letter comparison.
    """

    def __init__(self) -> None:
        self._names: list[str] = []
        self._gens: list[tuple[str, ...]] = []
        self._family_by_name: dict[str, int] = {}
        self._symbol_by_name: list[dict[str, int]] = []

    def add_family(self, name: str, generators: Sequence[str]) -> int:
        _check_name(name, "family name")
        if name in self._family_by_name:
            raise InputError(f"duplicate family name {name!r}")
        if not generators:
            raise InputError(f"family {name!r} has no generators")
        index: dict[str, int] = {}
        for pos, gen in enumerate(generators):
            _check_name(gen, f"generator name in family {name!r}")
            if gen.startswith("."):
                raise InputError(f"generator name {gen!r} may not start with '.'")
            if gen in index:
                raise InputError(f"duplicate generator {gen!r} in family {name!r}")
            index[gen] = pos
        fam = len(self._names)
        self._names.append(name)
        self._gens.append(tuple(generators))
        self._family_by_name[name] = fam
        self._symbol_by_name.append(index)
        return fam

    @property
    def n_families(self) -> int:
        return len(self._names)

    def family_name(self, family: int) -> str:
        self._check_family(family)
        return self._names[family]

    def family_index(self, name: str) -> int:
        try:
            return self._family_by_name[name]
        except KeyError:
            raise InputError(f"unknown family {name!r}") from None

    def generators(self, family: int) -> tuple[str, ...]:
        self._check_family(family)
        return self._gens[family]

    def family_size(self, family: int) -> int:
        self._check_family(family)
        return len(self._gens[family])

    def generator_name(self, family: int, symbol: int) -> str:
        self._check_family(family)
        gens = self._gens[family]
        if not 0 <= symbol < len(gens):
            raise InputError(f"family {self._names[family]!r} has no generator #{symbol}")
        return gens[symbol]

    def generator_index(self, family: int, name: str) -> int:
        self._check_family(family)
        try:
            return self._symbol_by_name[family][name]
        except KeyError:
            raise InputError(
                f"family {self._names[family]!r} has no generator {name!r}"
            ) from None

    def _check_family(self, family: int) -> None:
        if not 0 <= family < len(self._names):
            raise InputError(f"unregistered family index {family}")

    def letter(self, family: int, symbol: int | str, dotted: bool = False) -> Letter:
        self._check_family(family)
        if isinstance(symbol, str):
            symbol = self.generator_index(family, symbol)
        if not 0 <= symbol < len(self._gens[family]):
            raise InputError(
                f"symbol {symbol} out of range for family {self._names[family]!r}"
            )
        return Letter(family, symbol, dotted)

    def check_letter(self, a: Letter) -> None:
        self._check_family(a.family)
        if not 0 <= a.symbol < len(self._gens[a.family]):
            raise InputError(
                f"symbol {a.symbol} out of range for family {self._names[a.family]!r}"
            )

    def cmp_letter(self, a: Letter, b: Letter) -> int:
        """Three-way comparison of registered letters.

        Any dotted letter exceeds any undotted one; among letters of equal
        dottedness the order is by (family, position).
        """
        self.check_letter(a)
        self.check_letter(b)
        if a.key < b.key:
            return -1
        if a.key > b.key:
            return 1
        return 0

    def cmp_deglex(self, u: Word, v: Word) -> int:
        for a in u:
            self.check_letter(a)
        for a in v:
            self.check_letter(a)
        return cmp_deglex(u, v)

    def family_letters(self, family: int, dotted: bool = False) -> list[Letter]:
        self._check_family(family)
        return [Letter(family, s, dotted) for s in range(len(self._gens[family]))]

    def all_letters(self) -> list[Letter]:
        """Every registered letter, dotted and undotted, in ascending order."""
        out: list[Letter] = []
        for dotted in (False, True):
            for fam in range(len(self._names)):
                out.extend(self.family_letters(fam, dotted))
        return out

    # textual syntax: fam:gen for an undotted letter, fam:.gen for a dotted
    # one; words are whitespace-separated letters and "@eps" denotes the
    # empty word.

    def parse_letter(self, token: str) -> Letter:
        head, sep, tail = token.partition(":")
        if not sep or not head or not tail:
            raise InputError(f"malformed letter {token!r} (expected fam:gen or fam:.gen)")
        dotted = tail.startswith(".")
        gen = tail[1:] if dotted else tail
        fam = self.family_index(head)
        return self.letter(fam, gen, dotted)

    def parse_word(self, text: str) -> Word:
        tokens = text.split()
        if not tokens:
            raise InputError("empty word text (use '@eps' for the empty word)")
        if EPSILON_TOKEN in tokens:
            if tokens != [EPSILON_TOKEN]:
                raise InputError(f"'{EPSILON_TOKEN}' must stand alone")
            return EMPTY_WORD
        return tuple(self.parse_letter(tok) for tok in tokens)

    def format_letter(self, a: Letter) -> str:
        self.check_letter(a)
        dot = "." if a.dotted else ""
        return f"{self._names[a.family]}:{dot}{self._gens[a.family][a.symbol]}"

    def format_word(self, w: Word) -> str:
        if not w:
            return EPSILON_TOKEN
        return " ".join(self.format_letter(a) for a in w)

    def __repr__(self) -> str:
        return f"Alphabet({', '.join(self._names)})"


def iter_words(letters: Iterable[Letter], max_len: int) -> Iterator[Word]:
    """All words over the given letters with length <= max_len, in ascending
    deg-lex order."""
    alpha = sorted(set(letters), key=lambda a: a.key)
    level: list[Word] = [EMPTY_WORD]
    yield EMPTY_WORD
    for _ in range(max_len):
        nxt: list[Word] = []
        for w in level:
            for a in alpha:
                u = w + (a,)
                nxt.append(u)
                yield u
        level = nxt
