# topology/tests/test_words.py

from collections import Counter

from django.test import SimpleTestCase, override_settings

from ..exceptions import ExponentError, GenusError, WordSyntaxError
from ..words import (
    ALPHA,
    BETA,
    CurveWord,
    Letter,
    abelianize,
    alpha,
    beta,
    concat,
    cyclic_reduce,
    free_reduce,
    identity,
    invert,
    parse_word,
    render,
    surface_relator,
)
from .factories import random_letters, random_word, rng

a1, b1 = Letter(ALPHA, 1), Letter(BETA, 1)
a2, b2 = Letter(ALPHA, 2), Letter(BETA, 2)


class ParseWordTests(SimpleTestCase):
    def test_tokens(self):
        self.assertEqual(parse_word('a1 b1', 1).syllables, ((a1, 1), (b1, 1)))

    def test_reduces_to_identity(self):
        self.assertTrue(parse_word('a1^2 a1^-2', 1).is_identity)

    def test_non_adjacent_letters_stay_apart(self):
        self.assertEqual(parse_word('a1 b2^-3 a1', 2).syllables, ((a1, 1), (b2, -3), (a1, 1)))

    def test_whitespace_insensitive(self):
        self.assertEqual(parse_word('  a1   b1^+2\n', 1), parse_word('a1 b1^2', 1))

    def test_empty_text_is_identity(self):
        self.assertEqual(parse_word('', 3), identity(3))
        self.assertEqual(str(parse_word('', 3)), '1')

    def test_syntax_error_reports_position(self):
        with self.assertRaises(WordSyntaxError) as ctx:
            parse_word('a1 x2', 2)
        self.assertEqual(ctx.exception.position, 3)

        with self.assertRaises(WordSyntaxError) as ctx:
            parse_word('a1b1', 1)
        self.assertEqual(ctx.exception.position, 2)

        with self.assertRaises(WordSyntaxError):
            parse_word('a1^', 1)

    def test_index_outside_genus(self):
        with self.assertRaises(GenusError):
            parse_word('a3', 2)
        with self.assertRaises(GenusError):
            parse_word('b0', 2)

    def test_zero_exponent(self):
        with self.assertRaises(ExponentError):
            parse_word('a1^0', 1)

    def test_genus_must_be_positive(self):
        with self.assertRaises(GenusError):
            parse_word('a1', 0)

    def test_rejects_non_ascii_digits(self):
        for text in ('a١^٢', 'a1^٢', 'b２', 'a¹'):
            with self.subTest(text=text), self.assertRaises(WordSyntaxError):
                parse_word(text, 1)
        with self.assertRaises(WordSyntaxError) as ctx:
            parse_word('b1 a١', 1)
        self.assertEqual(ctx.exception.position, 3)

    def test_letter_symbols(self):
        self.assertEqual(Letter(ALPHA, 1).symbol, 'α₁')
        self.assertEqual(Letter(BETA, 12).symbol, 'β₁₂')

    @override_settings(CURVECAL_MAX_EXP=10)
    def test_exponent_limit(self):
        self.assertEqual(parse_word('a1^10', 1).syllables, ((a1, 10),))
        with self.assertRaises(ExponentError):
            parse_word('a1^11', 1)
        with self.assertRaises(ExponentError):
            parse_word('a1^6 a1^5', 1)

    def test_round_trip(self):
        r = rng(1)
        for _ in range(300):
            genus = r.randint(1, 3)
            w = random_word(r, genus)
            self.assertEqual(parse_word(render(w), genus), w)


class ReductionTests(SimpleTestCase):
    def test_free_reduce(self):
        self.assertEqual(free_reduce(CurveWord(1, ((a1, 1), (b1, 1), (b1, -1)))).syllables, ((a1, 1),))
        self.assertEqual(free_reduce(CurveWord(1, ((a1, 2), (a1, 3)))).syllables, ((a1, 5),))
        self.assertEqual(free_reduce(identity(1)), identity(1))

    def test_cyclic_reduce(self):
        self.assertEqual(cyclic_reduce(CurveWord(1, ((a1, 1), (b1, 1), (a1, -1)))).syllables, ((b1, 1),))
        self.assertEqual(cyclic_reduce(parse_word('a1 b1', 1)).syllables, ((a1, 1), (b1, 1)))
        self.assertEqual(cyclic_reduce(parse_word('a1^-1 b1^2 a1', 1)).syllables, ((b1, 2),))
        self.assertTrue(cyclic_reduce(parse_word('a1', 1)).cyclic)

    @override_settings(CURVECAL_MAX_EXP=10)
    def test_cyclic_reduce_respects_exponent_limit(self):
        self.assertEqual(cyclic_reduce(parse_word('a1^6 b1 a1^-2', 1)).syllables, ((a1, 4), (b1, 1)))
        self.assertEqual(cyclic_reduce(parse_word('a1^5 b1 a1^5', 1)).syllables, ((a1, 10), (b1, 1)))
        with self.assertRaises(ExponentError):
            cyclic_reduce(parse_word('a1^6 b1 a1^6', 1))

    def test_cyclic_reduce_is_idempotent_and_shortens(self):
        r = rng(2)
        for _ in range(500):
            w = random_word(r, r.randint(1, 3))
            once = cyclic_reduce(w)
            self.assertEqual(cyclic_reduce(once), once)
            self.assertLessEqual(once.letter_length, w.letter_length)
            self.assertEqual(abelianize(once), abelianize(w))
            if len(once) > 1:
                self.assertNotEqual(once.syllables[0][0], once.syllables[-1][0])


class GroupOperationTests(SimpleTestCase):
    def test_concat(self):
        self.assertTrue(concat(alpha(1, 1), alpha(1, 1, -1)).is_identity)
        self.assertEqual(concat(alpha(1, 1, 2), beta(1, 1)).syllables, ((a1, 2), (b1, 1)))
        self.assertEqual(
            concat(parse_word('a1 b1', 2), parse_word('b1^-1 a2', 2)).syllables,
            ((a1, 1), (a2, 1)),
        )

    def test_concat_genus_mismatch(self):
        with self.assertRaises(GenusError):
            concat(alpha(1, 1), alpha(1, 2))

    def test_invert(self):
        self.assertEqual(invert(parse_word('a1 b1', 1)).syllables, ((b1, -1), (a1, -1)))
        self.assertEqual(invert(identity(2)), identity(2))
        self.assertEqual(invert(parse_word('a1^2 b2^-1', 2)).syllables, ((b2, 1), (a1, -2)))

    def test_render(self):
        self.assertEqual(render(parse_word('a1^1 b2^-3  a1', 2)), 'a1 b2^-3 a1')
        self.assertEqual(render(identity(1)), '')


class AbelianizeTests(SimpleTestCase):
    def test_examples(self):
        coords = abelianize(parse_word('a1^2 b1^3', 1))
        self.assertEqual((coords.m, coords.n), ((2,), (3,)))

        self.assertTrue(abelianize(surface_relator(2)).is_zero)
        self.assertEqual(render(surface_relator(2)), 'a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1')

        coords = abelianize(parse_word('a1 b2^-1 a1 b2^-1', 2))
        self.assertEqual((coords.m, coords.n), ((2, 0), (0, -2)))

    def test_homomorphism(self):
        r = rng(3)
        for _ in range(500):
            genus = r.randint(1, 3)
            l, g = random_word(r, genus), random_word(r, genus)
            self.assertEqual(abelianize(concat(l, g)), abelianize(l) + abelianize(g))
            self.assertEqual(abelianize(invert(l)), -abelianize(l))
            self.assertEqual(abelianize(concat(concat(g, l), invert(g))), abelianize(l))
            self.assertTrue(concat(l, invert(l)).is_identity)

    def test_letter_count_oracle(self):
        r = rng(4)
        for _ in range(1000):
            genus = r.randint(1, 3)
            letters = random_letters(r, genus, 50)
            counts = Counter()
            for letter, sign in letters:
                counts[letter] += sign
            coords = abelianize(free_reduce(CurveWord(genus, tuple(letters))))
            self.assertEqual(coords.m, tuple(counts[Letter(ALPHA, i)] for i in range(1, genus + 1)))
            self.assertEqual(coords.n, tuple(counts[Letter(BETA, i)] for i in range(1, genus + 1)))
