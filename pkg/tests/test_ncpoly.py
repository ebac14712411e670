import random
from fractions import Fraction

import pytest

from conftest import L, W, random_poly
from triprod import Alphabet, InputError, Polynomial, format_poly, parse_poly, word_poly

X = L(0)
Y = L(1)
dX = X.dot()
dY = Y.dot()


class TestAddition:
    def test_cancellation(self):
        f = Polynomial([(W(X, Y), 1), (W(Y), -1)])
        g = word_poly(W(Y))
        assert f + g == word_poly(W(X, Y))

    def test_zero_identity(self):
        f = random_poly(random.Random(1), [X, Y, dX])
        assert f + Polynomial.zero() == f
        assert Polynomial.zero() + f == f

    def test_exact_halves(self):
        u = W(X, dY)
        assert word_poly(u, Fraction(1, 2)) + word_poly(u, Fraction(1, 2)) == word_poly(u)


class TestMultiplication:
    def test_single_terms_concatenate(self):
        assert word_poly(W(X)) * word_poly(W(dY)) == word_poly(W(X, dY))

    def test_noncommutative_expansion(self):
        f = word_poly(W(X)) - word_poly(W(Y))
        g = word_poly(W(X)) + word_poly(W(Y))
        expected = Polynomial(
            [(W(X, X), 1), (W(X, Y), 1), (W(Y, X), -1), (W(Y, Y), -1)]
        )
        assert f * g == expected

    def test_zero_annihilates(self):
        f = random_poly(random.Random(2), [X, Y])
        assert f * Polynomial.zero() == Polynomial.zero()
        assert Polynomial.zero() * f == Polynomial.zero()

    def test_words_do_not_commute(self):
        xy = word_poly(W(X)) * word_poly(W(Y))
        yx = word_poly(W(Y)) * word_poly(W(X))
        assert xy != yx


class TestLeading:
    def test_dotted_example(self):
        f = Polynomial([(W(X, dX, Y, dY, X), 1), (W(X, dX), -1)])
        assert f.leading() == (W(X, dX, Y, dY, X), Fraction(1))

    def test_single_term(self):
        assert word_poly(W(X, Y), 3).leading() == (W(X, Y), Fraction(3))

    def test_two_letters(self):
        # independent check: the keys of the one-letter words decide
        a, b = W(X), W(Y)
        assert max([a, b], key=lambda w: (len(w), [l.key for l in w])) == b
        f = word_poly(b) - word_poly(a)
        assert f.leading() == (b, Fraction(1))

    def test_zero_has_no_leading(self):
        with pytest.raises(InputError):
            Polynomial.zero().leading()


class TestMakeMonic:
    def test_scaling(self):
        f = Polynomial([(W(X, Y), 2), (W(Y), -4)])
        assert f.make_monic() == Polynomial([(W(X, Y), 1), (W(Y), -2)])

    def test_idempotent(self):
        rng = random.Random(3)
        for _ in range(50):
            f = random_poly(rng, [X, Y, dX, dY])
            if f.is_zero:
                continue
            m = f.make_monic()
            assert m.make_monic() == m
            assert m.leading_word == f.leading_word

    def test_negative_fraction(self):
        # exact division: (-1/3)u + v scales to u - 3v when u > v
        u, v = W(Y), W(X)
        f = word_poly(u, Fraction(-1, 3)) + word_poly(v)
        assert f.make_monic() == word_poly(u) - word_poly(v, 3)

    def test_zero_rejected(self):
        with pytest.raises(InputError):
            Polynomial.zero().make_monic()


class TestRingAxioms:
    def test_random_axioms(self):
        rng = random.Random(4)
        letters = [X, Y, dX, dY]
        for _ in range(100):
            f = random_poly(rng, letters)
            g = random_poly(rng, letters)
            h = random_poly(rng, letters)
            assert (f + g) + h == f + (g + h)
            assert f + g == g + f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert (f + g) * h == f * h + g * h
            assert f - f == Polynomial.zero()

    def test_leading_is_multiplicative(self):
        rng = random.Random(5)
        letters = [X, Y, dX, dY]
        done = 0
        while done < 1000:
            f = random_poly(rng, letters)
            g = random_poly(rng, letters)
            if f.is_zero or g.is_zero:
                continue
            done += 1
            fw, fc = f.leading()
            gw, gc = g.leading()
            assert (f * g).leading() == (fw + gw, fc * gc)


class TestCanonical:
    def test_no_zero_coefficients_stored(self):
        f = Polynomial([(W(X), 1), (W(X), -1), (W(Y), 0)])
        assert f.is_zero
        assert f.terms == ()

    def test_terms_sorted_descending(self):
        f = Polynomial([(W(X), 1), (W(X, Y), 1), ((), 1), (W(dX), 1)])
        words = [w for w, _ in f.terms]
        assert words == [W(X, Y), W(dX), W(X), ()]

    def test_hashable_and_equal(self):
        f = Polynomial([(W(X), 1), (W(Y), 2)])
        g = Polynomial([(W(Y), 2), (W(X), 1)])
        assert f == g and hash(f) == hash(g)


class TestTextSyntax:
    @pytest.fixture
    def alphabet(self):
        a = Alphabet()
        a.add_family("T1", ["x", "y", "z"])
        return a

    def test_documented_form(self, alphabet):
        p = parse_poly("1/2 T1:x T1:.y - T1:.z", alphabet)
        expected = Polynomial(
            [((L(0), L(1, dotted=True)), Fraction(1, 2)), ((L(2, dotted=True),), -1)]
        )
        assert p == expected

    def test_round_trip(self, alphabet):
        rng = random.Random(6)
        letters = [L(s, dotted=d) for s in range(3) for d in (False, True)]
        for _ in range(100):
            f = random_poly(rng, letters)
            assert parse_poly(format_poly(f, alphabet), alphabet) == f

    def test_constant_and_zero(self, alphabet):
        assert parse_poly("0", alphabet) == Polynomial.zero()
        assert parse_poly("3/4", alphabet) == word_poly((), Fraction(3, 4))
        assert parse_poly("2 @eps - T1:x", alphabet) == word_poly((), 2) - word_poly((L(0),))

    def test_leading_minus(self, alphabet):
        assert parse_poly("- T1:x + T1:y", alphabet) == word_poly((L(1),)) - word_poly((L(0),))

    def test_malformed(self, alphabet):
        for bad in ("", "+", "T1:x +", "T1:x + + T1:y", "1/2 @eps T1:x"):
            with pytest.raises(InputError):
                parse_poly(bad, alphabet)
