import random

import pytest

from conftest import L, W
from triprod import Alphabet, InputError, Letter, cmp_deglex, deglex_key
from triprod.alphabet import iter_words


@pytest.fixture
def alphabet():
    a = Alphabet()
    a.add_family("T1", ["x", "y"])
    a.add_family("T2", ["u"])
    return a


class TestLetterOrder:
    def test_equal_letters(self, alphabet):
        assert alphabet.cmp_letter(L(0), L(0)) == 0

    def test_dotted_beats_undotted_across_families(self, alphabet):
        # a dotted letter exceeds any undotted letter, whatever the family
        assert alphabet.cmp_letter(L(0, dotted=True), L(1)) == 1
        assert alphabet.cmp_letter(L(1), L(0, dotted=True)) == -1

    def test_higher_family_wins_among_undotted(self, alphabet):
        assert alphabet.cmp_letter(L(0, family=1), L(1, family=0)) == 1

    def test_dotted_mirror_of_undotted_order(self, alphabet):
        for a in (L(0), L(1), L(0, family=1)):
            for b in (L(0), L(1), L(0, family=1)):
                assert alphabet.cmp_letter(a.dot(), b.dot()) == alphabet.cmp_letter(a, b)

    def test_symbol_order_within_family(self, alphabet):
        assert alphabet.cmp_letter(L(0), L(1)) == -1

    def test_unregistered_family_rejected(self, alphabet):
        with pytest.raises(InputError):
            alphabet.cmp_letter(L(0, family=7), L(0))
        with pytest.raises(InputError):
            alphabet.cmp_letter(L(0), Letter(1, 5, False))

    def test_consistent_with_deglex_on_single_letters(self, alphabet):
        letters = alphabet.all_letters()
        for a in letters:
            for b in letters:
                assert alphabet.cmp_letter(a, b) == cmp_deglex((a,), (b,))


class TestDeglex:
    def test_empty_below_everything(self):
        assert cmp_deglex((), W(L(0))) == -1
        assert cmp_deglex(W(L(0, dotted=True)), ()) == 1

    def test_reflexive(self):
        u = W(L(0), L(1, dotted=True))
        assert cmp_deglex(u, u) == 0

    def test_length_dominates(self):
        # a two-letter word beats any single letter, even a dotted one
        u = W(L(0), L(1, dotted=True))
        v = W(L(2, dotted=True),)
        assert cmp_deglex(u, v) == 1

    def test_monomial_property(self):
        rng = random.Random(0)
        letters = [Letter(f, s, d) for f in (0, 1) for s in (0, 1) for d in (False, True)]

        def rand_word():
            return tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))

        checked = 0
        while checked < 1000:
            u, v, w = rand_word(), rand_word(), rand_word()
            if cmp_deglex(u, v) <= 0:
                continue
            checked += 1
            assert cmp_deglex(w + u, w + v) == 1
            assert cmp_deglex(u + w, v + w) == 1

    def test_sorting_bounded_words_terminates(self):
        letters = [Letter(0, s, d) for s in (0, 1) for d in (False, True)]
        words = list(iter_words(letters, 4))
        ordered = sorted(words, key=deglex_key)
        assert ordered[0] == ()
        assert all(
            cmp_deglex(ordered[i], ordered[i + 1]) == -1 for i in range(len(ordered) - 1)
        )


class TestRegistry:
    def test_duplicate_family_name(self, alphabet):
        with pytest.raises(InputError):
            alphabet.add_family("T1", ["z"])

    def test_duplicate_generator(self):
        a = Alphabet()
        with pytest.raises(InputError):
            a.add_family("F", ["x", "x"])

    def test_bad_names(self):
        a = Alphabet()
        with pytest.raises(InputError):
            a.add_family("has:colon", ["x"])
        with pytest.raises(InputError):
            a.add_family("F", [".dotted"])
        with pytest.raises(InputError):
            a.add_family("F", [])

    def test_letter_lookup_by_name(self, alphabet):
        assert alphabet.letter(0, "y") == L(1)
        assert alphabet.letter(1, "u", dotted=True) == L(0, family=1, dotted=True)
        with pytest.raises(InputError):
            alphabet.letter(0, "nope")


class TestTextSyntax:
    def test_parse_and_format_letters(self, alphabet):
        assert alphabet.parse_letter("T1:x") == L(0)
        assert alphabet.parse_letter("T1:.y") == L(1, dotted=True)
        assert alphabet.format_letter(L(0, family=1, dotted=True)) == "T2:.u"

    def test_word_round_trip(self, alphabet):
        for text in ("T1:x T2:.u T1:.y", "@eps", "T2:u"):
            assert alphabet.format_word(alphabet.parse_word(text)) == text

    def test_epsilon_must_stand_alone(self, alphabet):
        with pytest.raises(InputError):
            alphabet.parse_word("T1:x @eps")

    def test_malformed_letters(self, alphabet):
        for bad in ("T1", "T1:", ":x", "T9:x", "T1:.", ""):
            with pytest.raises(InputError):
                alphabet.parse_word(bad if bad else " ")
