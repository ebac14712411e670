"""Built-in acceptance checks.

Each criterion is exact (no tolerances): polynomial and word comparisons
are bit-reproducible because all arithmetic is rational.  The CLI
`selftest` subcommand and the test suite both run this list.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from .alphabet import Alphabet, Letter, Word, deglex_key, iter_words
from .free_product import Family
from .gsb import COMPLETED, RewriteSystem, complete, irr_words, is_gsb
from .ncpoly import Polynomial
from .replicated import Op, in_psi_image, phi, psi_inverse_render, tri_op
from .structures import TrioidTable, check_axioms, identity_families

__all__ = ["CriterionResult", "run_all", "CRITERIA"]


@dataclass(frozen=True)
class CriterionResult:
    id: int
    name: str
    ok: bool
    detail: str


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


def projection_trioid(name: str = "T1") -> TrioidTable:
    """{a, b} with x |- y = y and x -| y = x _|_ y = x."""
    right = ((0, 1), (0, 1))
    left = ((0, 0), (1, 1))
    return TrioidTable(name, ("a", "b"), {Op.VDASH: right, Op.DASHV: left, Op.PERP: left})


def singleton_trioid(name: str = "T2", gen: str = "u") -> TrioidTable:
    one = ((0,),)
    return TrioidTable(name, (gen,), {Op.VDASH: one, Op.DASHV: one, Op.PERP: one})


def mutated_projection(name: str = "T1") -> TrioidTable:
    """Projection trioid with -|(a,b) redirected to b; still has three
    associative tables but breaks a compatibility identity."""
    right = ((0, 1), (0, 1))
    left = ((0, 0), (1, 1))
    bad_left = ((0, 1), (1, 1))
    return TrioidTable(name, ("a", "b"), {Op.VDASH: right, Op.DASHV: bad_left, Op.PERP: left})


def as_dimonoid(P: TrioidTable, name: str | None = None) -> TrioidTable:
    tables = {op: P.tables[op] for op in (Op.VDASH, Op.DASHV)}
    return TrioidTable(name or P.name, P.elements, tables)


def _rule(words_and_coeffs) -> Polynomial:
    return Polynomial(words_and_coeffs)


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------


def filtered_quotient_dim(system: RewriteSystem, letters, max_len: int) -> int:
    """Dimension of the span of all words of length <= max_len modulo the
    ideal, by sparse Gaussian elimination over the rationals: the rows are
    every placement u·s·v of every rule that fits in the length bound."""
    words = list(iter_words(letters, max_len))
    alpha = sorted(set(letters), key=lambda a: a.key)
    pivots: dict[Word, dict[Word, Fraction]] = {}

    def add_row(row: dict[Word, Fraction]) -> None:
        while row:
            p = max(row, key=deglex_key)
            if p in pivots:
                c = row[p]
                for w, pc in pivots[p].items():
                    row[w] = row.get(w, Fraction(0)) - c * pc
                    if not row[w]:
                        del row[w]
            else:
                inv = Fraction(1) / row[p]
                pivots[p] = {w: c * inv for w, c in row.items()}
                return

    cofactors: list[Word] = list(iter_words(alpha, max_len))
    for rule in system.rules:
        head = len(rule.leading_word)
        for u in cofactors:
            if len(u) + head > max_len:
                continue
            for v in cofactors:
                if len(u) + head + len(v) > max_len:
                    continue
                row: dict[Word, Fraction] = {}
                for w, c in rule.terms:
                    uwv = u + w + v
                    row[uwv] = row.get(uwv, Fraction(0)) + c
                add_row({w: c for w, c in row.items() if c})
    return len(words) - len(pivots)


def _oracle_agreement(family: Family, exhaustive_len: int, samples: int, sample_len: int, seed: int):
    """Count fp product vs rewriting-oracle mismatches, exhaustively on all
    word pairs up to one length and on seeded random pairs up to another."""
    from .replicated import ops_for_mode

    ops = ops_for_mode(family.t)
    mismatches = 0
    checked = 0
    small = family.basis(exhaustive_len)
    for uw in small:
        u = family.element_from_word(uw)
        for vw in small:
            v = family.element_from_word(vw)
            for op in ops:
                checked += 1
                if family.mul(op, u, v) != family.oracle_mul(op, u, v):
                    mismatches += 1
    rng = random.Random(seed)
    for _ in range(samples):
        u = family.element_from_word(family.random_basis_word(rng, sample_len))
        v = family.element_from_word(family.random_basis_word(rng, sample_len))
        for op in ops:
            checked += 1
            if family.mul(op, u, v) != family.oracle_mul(op, u, v):
                mismatches += 1
    return checked, mismatches


def _law_violations(family: Family, triples: int, max_len: int, seed: int) -> tuple[int, int]:
    """Associativity and the compatibility identities on seeded random
    normal forms, evaluated with the closed-form products."""
    rng = random.Random(seed)
    fams = identity_families(family.t)

    def ev(side, a, b, c):
        outer, inner, pos = side
        if pos == "L":
            return family.mul(outer, family.mul(inner, a, b), c)
        return family.mul(outer, a, family.mul(inner, b, c))

    checked = 0
    bad = 0
    for _ in range(triples):
        a = family.element_from_word(family.random_basis_word(rng, max_len))
        b = family.element_from_word(family.random_basis_word(rng, max_len))
        c = family.element_from_word(family.random_basis_word(rng, max_len))
        for _, lhs, rhs in fams:
            checked += 1
            if ev(lhs, a, b, c) != ev(rhs, a, b, c):
                bad += 1
    return checked, bad


def _embedding_ok(family: Family) -> tuple[bool, str]:
    from .replicated import ops_for_mode

    ops = ops_for_mode(family.t)
    for i, P in enumerate(family.presentations):
        images = [family.embed(i, s).word for s in range(P.size)]
        if len(set(images)) != P.size:
            return False, f"factor {P.name!r}: embedded letters collide"
        for x in range(P.size):
            for y in range(P.size):
                ex = family.embed(i, x)
                ey = family.embed(i, y)
                for op in ops:
                    expected = family.embed_value(i, P.value_terms(op, x, y))
                    if family.mul(op, ex, ey) != expected:
                        return False, (
                            f"factor {P.name!r}: {P.elements[x]} {op} {P.elements[y]} "
                            "does not embed homomorphically"
                        )
    return True, "all factors embed injectively and homomorphically"


def _basis_matches_irreducible(family: Family, max_len: int) -> bool:
    direct = family.basis(max_len)
    letters = family.alphabet.all_letters()
    via_rewriting = [
        w
        for w in irr_words(family.system, letters, max_len)
        if w and in_psi_image(w, family.t)
    ]
    return direct == via_rewriting


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def _c1_axioms() -> tuple[bool, str]:
    proj = check_axioms(projection_trioid())
    single = check_axioms(singleton_trioid())
    if not (proj.ok and proj.families == 11 and proj.instances == 88):
        return False, f"projection trioid: {proj.families} families, {proj.instances} instances, ok={proj.ok}"
    if not (single.ok and single.instances == 11):
        return False, "one-element trioid rejected"
    bad = check_axioms(mutated_projection())
    if bad.ok:
        return False, "mutated table accepted"
    want = ("a -| (b |- c) = a -| (b -| c)", ("a", "b", "a"))
    if not any((v.identity, v.triple) == want for v in bad.violations):
        return False, f"expected violation {want} not pinpointed; got {bad.violations[:3]}"
    return True, (
        f"projection + singleton pass ({proj.instances} + {single.instances} instances); "
        f"mutation rejected with {len(bad.violations)} pinpointed instances"
    )


def _c2_example() -> tuple[bool, str]:
    alphabet = Alphabet()
    alphabet.add_family("X", ["x", "y"])
    x = Polynomial.word((Letter(0, 0, True),))
    y = Polynomial.word((Letter(0, 1, True),))
    inner1 = tri_op(Op.DASHV, x, y)  # x -| y
    inner2 = tri_op(Op.DASHV, y, x)  # y -| x
    f = tri_op(Op.PERP, tri_op(Op.VDASH, x, inner1), inner2) - tri_op(Op.VDASH, x, x)
    X = Letter(0, 0, False)
    Y = Letter(0, 1, False)
    dX, dY = X.dot(), Y.dot()
    expected = Polynomial([((X, dX, Y, dY, X), 1), ((X, dX), -1)])
    if f != expected:
        return False, "folded product differs from the expected dotted polynomial"
    expected_phi = Polynomial([((X, X, Y, Y, X), 1), ((X, X), -1)])
    if phi(f) != expected_phi:
        return False, "dot erasure differs from the expected polynomial"
    rendered = psi_inverse_render((dY, X, Y, dX, X), 3).render(alphabet)
    if rendered != "(y -| x -| y) _|_ (x -| x)":
        return False, f"rendering mismatch: {rendered!r}"
    return True, "dotted word, erased image and decoded bracketing all match"


def _c3_completion() -> tuple[bool, str]:
    a = Letter(0, 0, False)
    b = Letter(0, 1, False)

    def w(*ls):
        return tuple(ls)

    rules = [
        _rule([(w(a, b), 1), (w(a), -1)]),
        _rule([(w(a, b), 1), (w(b), -1)]),
        _rule([(w(a, a), 1), (w(a), -1)]),
        _rule([(w(b, a), 1), (w(a), -1)]),
        _rule([(w(b, a), 1), (w(b), -1)]),
        _rule([(w(b, b), 1), (w(b), -1)]),
    ]
    start = time.perf_counter()
    result = complete(RewriteSystem(rules))
    elapsed = time.perf_counter() - start
    if result.status != COMPLETED:
        return False, f"status {result.status}"
    expected = RewriteSystem(
        [
            _rule([(w(b), 1), (w(a), -1)]),
            _rule([(w(a, a), 1), (w(a), -1)]),
        ]
    )
    if result.system != expected:
        return False, f"reduced system has {len(result.system)} rules"
    report = is_gsb(result.system)
    if not report.trivial:
        return False, "completed system is not composition-trivial"
    for r in rules:
        if not result.system.reduce(r).is_zero:
            return False, "an input rule does not reduce to zero"
    ones = [u for u in irr_words(result.system, [a, b], 1) if len(u) == 1]
    if ones != [(a,)]:
        return False, f"irreducible letters {ones}"
    if elapsed >= 1.0:
        return False, f"took {elapsed:.3f}s"
    return True, f"reduced to 2 rules in {elapsed * 1000:.1f} ms; letters collapse to a"


def _two_family(t: int = 3) -> Family:
    if t == 3:
        return Family([projection_trioid(), singleton_trioid()], 3)
    return Family(
        [as_dimonoid(projection_trioid()), as_dimonoid(singleton_trioid())], 2
    )


def _c4_combined_gsb() -> tuple[bool, str]:
    family = _two_family(3)
    report = is_gsb(family.system)
    if not report.trivial:
        return False, f"{len(report.witnesses)} nontrivial compositions"
    return True, f"all compositions of {len(family.system)} rules reduce to zero"


def _c5_oracle() -> tuple[bool, str]:
    family = _two_family(3)
    checked, mismatches = _oracle_agreement(
        family, exhaustive_len=3, samples=10_000, sample_len=6, seed=0
    )
    if mismatches:
        return False, f"{mismatches} mismatches out of {checked}"
    return True, f"{checked} products agree with the rewriting oracle"


def _c6_laws() -> tuple[bool, str]:
    family = _two_family(3)
    checked, bad = _law_violations(family, triples=1000, max_len=4, seed=1)
    if bad:
        return False, f"{bad} violations out of {checked} instances"
    return True, f"{checked} identity instances hold exactly"


def _c7_census() -> tuple[bool, str]:
    family = Family([singleton_trioid("T1", "a"), singleton_trioid("T2", "u")], 3)
    words = family.basis(8)
    counts = [sum(1 for u in words if len(u) == n) for n in range(1, 9)]
    expected = [2 * (2 ** n - 1) for n in range(1, 9)]
    if counts != expected:
        return False, f"counts {counts} != {expected}"
    if not _basis_matches_irreducible(family, 5):
        return False, "two-singleton basis disagrees with the rewriting route"
    if not _basis_matches_irreducible(_two_family(3), 5):
        return False, "two-family basis disagrees with the rewriting route"
    return True, f"lengths 1..8 count {expected}; both routes agree up to length 5"


def _c8_embedding() -> tuple[bool, str]:
    return _embedding_ok(_two_family(3))


def _c9_dimonoid() -> tuple[bool, str]:
    family = _two_family(2)
    report = is_gsb(family.system)
    if not report.trivial:
        return False, "combined dimonoid relation set is not composition-trivial"
    checked, mismatches = _oracle_agreement(
        family, exhaustive_len=3, samples=10_000, sample_len=6, seed=0
    )
    if mismatches:
        return False, f"{mismatches} oracle mismatches out of {checked}"
    lchecked, lbad = _law_violations(family, triples=1000, max_len=4, seed=2)
    if lbad:
        return False, f"{lbad} law violations out of {lchecked}"
    ok, msg = _embedding_ok(family)
    if not ok:
        return False, msg
    census_family = Family(
        [
            as_dimonoid(singleton_trioid("T1", "a")),
            as_dimonoid(singleton_trioid("T2", "u")),
        ],
        2,
    )
    if not _basis_matches_irreducible(census_family, 5):
        return False, "dimonoid census disagrees with the rewriting route"
    if not _basis_matches_irreducible(family, 5):
        return False, "two-family dimonoid basis disagrees with the rewriting route"
    return True, (
        f"one-dot mode: {checked} oracle products, {lchecked} law instances, "
        "census and embeddings all pass"
    )


def _c10_dimension() -> tuple[bool, str]:
    a = Letter(0, 0, False)
    b = Letter(0, 1, False)
    completed = complete(
        RewriteSystem(
            [
                _rule([((a, b), 1), ((a,), -1)]),
                _rule([((a, b), 1), ((b,), -1)]),
                _rule([((a, a), 1), ((a,), -1)]),
                _rule([((b, a), 1), ((a,), -1)]),
                _rule([((b, a), 1), ((b,), -1)]),
                _rule([((b, b), 1), ((b,), -1)]),
            ]
        )
    ).system
    cases = [("two-letter table relations", completed, [a, b], 5)]
    for factors, label in (
        ([projection_trioid()], "projection factor"),
        ([singleton_trioid()], "singleton factor"),
        ([projection_trioid(), singleton_trioid()], "two-family sample"),
    ):
        fam = Family(factors, 3)
        cases.append((label, fam.system, fam.alphabet.all_letters(), 5))
    details = []
    for label, system, letters, max_len in cases:
        n_irr = len(irr_words(system, letters, max_len))
        dim = filtered_quotient_dim(system, letters, max_len)
        if n_irr != dim:
            return False, f"{label}: {n_irr} irreducible words vs dimension {dim}"
        details.append(f"{label}: {n_irr}")
    return True, "; ".join(details)


CRITERIA = [
    (1, "axiom suite", _c1_axioms),
    (2, "doubled-alphabet example reproduction", _c2_example),
    (3, "completion of the two-letter table relations", _c3_completion),
    (4, "combined relation set is a Gröbner-Shirshov basis", _c4_combined_gsb),
    (5, "closed-form products match the rewriting oracle", _c5_oracle),
    (6, "free-product laws on random normal forms", _c6_laws),
    (7, "basis census", _c7_census),
    (8, "embedding injectivity and homomorphism", _c8_embedding),
    (9, "dimonoid mode rerun", _c9_dimonoid),
    (10, "irreducible-word count equals quotient dimension", _c10_dimension),
]


def run_one(cid: int) -> CriterionResult:
    for i, name, fn in CRITERIA:
        if i == cid:
            try:
                ok, detail = fn()
            except Exception as exc:  # honest failure, not a crash
                ok, detail = False, f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(i, name, ok, detail)
    raise ValueError(f"no criterion #{cid}")


def run_all() -> list[CriterionResult]:
    return [run_one(i) for i, _, _ in CRITERIA]
