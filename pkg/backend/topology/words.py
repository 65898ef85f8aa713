# topology/words.py
"""
Cyclic words in the canonical generators a1, b1, ..., ak, bk of the
fundamental group of the closed oriented genus-k surface.

A word is a sequence of syllables ``(Letter, exponent)``. Every public
constructor in this module returns freely reduced words; the surface relator
is never applied at word level, only abelianized quantities see it.
"""

import logging
import re
from dataclasses import dataclass, field

from .exceptions import ExponentError, GenusError, WordSyntaxError
from .utils import max_exponent, subscript

logger = logging.getLogger(__name__)

ALPHA = 'a'
BETA = 'b'

_TOKEN = re.compile(r'([ab])([0-9]+)(?:\^([+-]?[0-9]+))?')
_SYMBOLS = {ALPHA: 'α', BETA: 'β'}


def _check_genus(genus):
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 1:
        raise GenusError(f"Genus must be a positive integer, got {genus!r}")


@dataclass(frozen=True, order=True)
class Letter:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (ALPHA, BETA):
            raise ValueError(f"Letter kind must be 'a' or 'b', got {self.kind!r}")
        if self.index < 1:
            raise GenusError(f"Generator index must be at least 1, got {self.index}")

    def __str__(self):
        return f"{self.kind}{self.index}"

    @property
    def symbol(self):
        return f"{_SYMBOLS[self.kind]}{subscript(self.index)}"


@dataclass(frozen=True)
class CurveWord:
    genus: int
    syllables: tuple = ()
    cyclic: bool = field(default=False, compare=False)

    def __post_init__(self):
        _check_genus(self.genus)
        syllables = tuple((letter, int(exponent)) for letter, exponent in self.syllables)
        for letter, _ in syllables:
            if letter.index > self.genus:
                raise GenusError(f"Generator {letter} does not exist in genus {self.genus}")
        object.__setattr__(self, 'syllables', syllables)

    def __str__(self):
        return render(self) or '1'

    def __len__(self):
        return len(self.syllables)

    @property
    def is_identity(self):
        return not self.syllables

    @property
    def letter_length(self):
        return sum(abs(exponent) for _, exponent in self.syllables)

    def letters(self):
        """Expands the word into signed single letters (the product form)."""
        for letter, exponent in self.syllables:
            sign = 1 if exponent > 0 else -1
            for _ in range(abs(exponent)):
                yield letter, sign


@dataclass(frozen=True)
class AbelianCoords:
    genus: int
    m: tuple
    n: tuple

    def __post_init__(self):
        _check_genus(self.genus)
        if len(self.m) != self.genus or len(self.n) != self.genus:
            raise GenusError(f"Coordinate vectors must both have length {self.genus}")

    def __add__(self, other):
        if other.genus != self.genus:
            raise GenusError(f"Genus mismatch: {self.genus} and {other.genus}")
        return AbelianCoords(
            self.genus,
            tuple(a + b for a, b in zip(self.m, other.m)),
            tuple(a + b for a, b in zip(self.n, other.n)),
        )

    def __neg__(self):
        return AbelianCoords(self.genus, tuple(-a for a in self.m), tuple(-b for b in self.n))

    @property
    def is_zero(self):
        return not any(self.m) and not any(self.n)


def _checked(letter, exponent, limit):
    if abs(exponent) > limit:
        raise ExponentError(f"Exponent {exponent} of {letter} exceeds the limit {limit}")
    return letter, exponent


def _reduce(syllables):
    limit = max_exponent()
    stack = []
    for letter, exponent in syllables:
        if exponent == 0:
            continue
        if stack and stack[-1][0] == letter:
            merged = stack.pop()[1] + exponent
            if merged:
                stack.append(_checked(letter, merged, limit))
        else:
            stack.append(_checked(letter, exponent, limit))
    return tuple(stack)


def word(genus, syllables=()):
    """Builds a freely reduced word from ``(Letter, exponent)`` pairs."""
    return CurveWord(genus, _reduce(CurveWord(genus, syllables).syllables))


def generator(kind, index, genus, exponent=1):
    return word(genus, [(Letter(kind, index), exponent)])


def alpha(index, genus, exponent=1):
    return generator(ALPHA, index, genus, exponent)


def beta(index, genus, exponent=1):
    return generator(BETA, index, genus, exponent)


def identity(genus):
    return CurveWord(genus)


def parse_word(text, genus):
    """
    Parses a word written in the grammar ``('a'|'b') index ['^' exponent]``.

    Parameters:
    - text (str): Whitespace separated tokens such as ``"a1 b2^-3"``.
    - genus (int): The genus k of the surface; indices must lie in 1..k.

    Returns:
    - CurveWord: The freely reduced word; empty text gives the identity.
    """
    _check_genus(genus)
    limit = max_exponent()
    syllables = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            raise WordSyntaxError(f"Unexpected character {text[position]!r}", position)
        end = match.end()
        if end < len(text) and not text[end].isspace():
            raise WordSyntaxError(f"Expected whitespace after token {match.group()!r}", end)
        kind, index, exponent = match.group(1), int(match.group(2)), match.group(3)
        if not 1 <= index <= genus:
            raise GenusError(
                f"Generator {kind}{index} at position {position} does not exist in genus {genus}"
            )
        exponent = 1 if exponent is None else int(exponent)
        if exponent == 0:
            raise ExponentError(f"Zero exponent at position {position}")
        syllables.append(_checked(Letter(kind, index), exponent, limit))
        position = end
    return word(genus, syllables)


def render(w):
    """Canonical text form; the identity renders as the empty string."""
    return ' '.join(
        str(letter) if exponent == 1 else f"{letter}^{exponent}"
        for letter, exponent in w.syllables
    )


def free_reduce(w):
    return CurveWord(w.genus, _reduce(w.syllables), cyclic=w.cyclic)


def cyclic_reduce(w):
    """
    Returns a cyclically reduced conjugate of ``w``.

    The outer syllables are merged by conjugation while they share a letter,
    so the first and last entries are never mutually inverse afterwards. A
    merged exponent is held to the same limit as parsing and free reduction:
    going over ``CURVECAL_MAX_EXP`` raises ExponentError.
    """
    syllables = list(free_reduce(w).syllables)
    limit = max_exponent()
    while len(syllables) > 1 and syllables[0][0] == syllables[-1][0]:
        letter = syllables[0][0]
        merged = syllables[0][1] + syllables[-1][1]
        syllables = syllables[1:-1]
        if merged:
            syllables.insert(0, _checked(letter, merged, limit))
    return CurveWord(w.genus, tuple(syllables), cyclic=True)


def _same_genus(left, right):
    if left.genus != right.genus:
        raise GenusError(f"Genus mismatch: {left.genus} and {right.genus}")


def concat(l, g):
    _same_genus(l, g)
    return word(l.genus, l.syllables + g.syllables)


def invert(l):
    return word(l.genus, [(letter, -exponent) for letter, exponent in reversed(l.syllables)])


def commutator(u, v):
    """[u, v] = u v u^-1 v^-1"""
    _same_genus(u, v)
    return word(u.genus, u.syllables + v.syllables + invert(u).syllables + invert(v).syllables)


def surface_relator(genus):
    relator = identity(genus)
    for index in range(1, genus + 1):
        relator = concat(relator, commutator(alpha(index, genus), beta(index, genus)))
    return relator


def beta_letters(w):
    return tuple((letter, exponent) for letter, exponent in w.syllables if letter.kind == BETA)


def abelianize(l):
    """
    Exponent sums of every generator.

    Returns:
    - AbelianCoords: m[i] sums the exponents of a(i+1), n[i] those of b(i+1).
    """
    m = [0] * l.genus
    n = [0] * l.genus
    for letter, exponent in l.syllables:
        target = m if letter.kind == ALPHA else n
        target[letter.index - 1] += exponent
    return AbelianCoords(l.genus, tuple(m), tuple(n))
