# topology/heegaard.py
"""
Fundamental groups of closed orientable 3-manifolds given by genus-k
attaching data: k words θ1..θk on the genus-k surface, written in the
canonical generators where every a_i bounds a disc in the handlebody.

Deleting the a-letters of a word gives its image in the free group on
b1..bk; the images of the attaching words are the relators.
"""

import logging
import math
import re
from dataclasses import dataclass, field

import networkx as nx
from sympy import Matrix, gcdex
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from .exceptions import GenusError, HeegaardError
from .intersection import BasisCandidate, pairing_matrix
from .words import (
    ALPHA,
    BETA,
    CurveWord,
    Letter,
    abelianize,
    alpha,
    beta_letters,
    parse_word,
    render,
    word,
)

logger = logging.getLogger(__name__)

UNDECIDED = 'undecided'

_GENUS_LINE = re.compile(r'^genus\s+([0-9]+)$')


@dataclass(frozen=True)
class HeegaardDiagram:
    genus: int
    attaching: tuple

    def __post_init__(self):
        attaching = tuple(self.attaching)
        if len(attaching) != self.genus:
            raise HeegaardError(
                f"A genus-{self.genus} diagram needs {self.genus} attaching words, got {len(attaching)}"
            )
        for w in attaching:
            if w.genus != self.genus:
                raise GenusError(f"Attaching word of genus {w.genus} in a genus-{self.genus} diagram")
        object.__setattr__(self, 'attaching', attaching)


@dataclass(frozen=True)
class Presentation:
    genus: int
    generators: tuple
    relators: tuple
    abelianization: tuple

    def __str__(self):
        relators = ', '.join(render(r) or '1' for r in self.relators)
        return f"<{', '.join(self.generators)} | {relators}>"

    def to_dict(self):
        return {
            'generators': list(self.generators),
            'relators': [render(r) for r in self.relators],
            'abelianization': [list(row) for row in self.abelianization],
        }


@dataclass(frozen=True)
class Homology:
    rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append('Z')
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return ' + '.join(parts) or '0'

    @property
    def order(self):
        """Order of the group, or 0 when it is infinite."""
        return 0 if self.rank else math.prod(self.torsion)


@dataclass(frozen=True)
class BlockDecomposition:
    sigma: tuple
    blocks: tuple

    @property
    def orders(self):
        return tuple(r for _, r in self.blocks)


@dataclass(frozen=True)
class ClassificationReport:
    decided: bool
    sigma: tuple = ()
    orders: tuple = ()
    pi1: str = UNDECIDED
    free_product: str = ''
    simply_connected: bool = False
    finite: bool = False
    prime: bool = False
    homology: str = ''
    diagnostics: str = ''
    relators: tuple = field(default=(), compare=False)

    def to_dict(self):
        return {
            'sigma': list(self.sigma),
            'orders': list(self.orders),
            'pi1': self.pi1,
            'simply_connected': self.simply_connected,
            'finite': self.finite,
            'prime': self.prime,
            'free_product': self.free_product,
            'homology': self.homology,
            'decided': self.decided,
            'diagnostics': self.diagnostics,
        }


def build_heegaard(genus, words):
    """
    Builds a diagram from k attaching words.

    Parameters:
    - genus (int): The genus k of the splitting surface.
    - words (list): k strings in the word grammar, or CurveWord objects.

    Returns:
    - HeegaardDiagram
    """
    words = list(words)
    if len(words) != genus:
        raise HeegaardError(f"A genus-{genus} diagram needs {genus} attaching words, got {len(words)}")
    attaching = tuple(w if isinstance(w, CurveWord) else parse_word(w, genus) for w in words)
    return HeegaardDiagram(genus, attaching)


def parse_heegaard(text):
    """
    Reads the line-oriented diagram format: ``genus k`` then exactly k word
    lines. ``#`` starts a comment and comment-only lines are skipped; a blank
    line after the header is the identity word. Only blank lines may follow
    the k words.
    """
    lines = []
    for raw in text.splitlines():
        content, marker, _ = raw.partition('#')
        if marker and not content.strip():
            continue
        lines.append(content.strip())
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise HeegaardError("Empty diagram file")
    match = _GENUS_LINE.match(lines[0])
    if match is None:
        raise HeegaardError(f"First line must read 'genus k', got {lines[0]!r}")
    genus = int(match.group(1))
    if genus < 1:
        raise GenusError("Genus must be a positive integer, got 0")
    words, rest = lines[1:genus + 1], lines[genus + 1:]
    extra = [line for line in rest if line]
    if extra:
        raise HeegaardError(f"Unexpected line after the {genus} attaching words: {extra[0]!r}")
    if len(words) < genus:
        raise HeegaardError(f"A genus-{genus} diagram needs {genus} attaching words, got {len(words)}")
    return build_heegaard(genus, words)


def project_to_handlebody(w):
    """Deletes every a-letter, keeping b-letters in order, then reduces freely."""
    return word(w.genus, beta_letters(w))


def presentation(d):
    relators = tuple(project_to_handlebody(theta) for theta in d.attaching)
    return Presentation(
        d.genus,
        tuple(f"b{i}" for i in range(1, d.genus + 1)),
        relators,
        tuple(abelianize(r).n for r in relators),
    )


def homology(p):
    """First homology of the presented group, from the Smith normal form of its exponent matrix."""
    matrix = Matrix(p.abelianization)
    k = p.genus
    if all(entry == 0 for entry in matrix):
        diagonal = [0] * k
    else:
        snf = smith_normal_form(matrix, domain=ZZ)
        diagonal = [abs(int(snf[i, i])) for i in range(k)]
    return Homology(
        rank=diagonal.count(0),
        torsion=tuple(sorted(d for d in diagonal if d > 1)),
    )


def homogeneity_check(w, j):
    """
    True iff a_j and a_j^-1 occur equally often in the product form of ``w``,
    and likewise b_j and b_j^-1.
    """
    if not 1 <= j <= w.genus:
        raise GenusError(f"Index {j} is outside 1..{w.genus}")
    counts = {ALPHA: [0, 0], BETA: [0, 0]}
    for letter, sign in w.letters():
        if letter.index == j:
            counts[letter.kind][0 if sign > 0 else 1] += 1
    return all(positive == negative for positive, negative in counts.values())


def _allowed(P, k, j, i):
    row_clear = all(P[j][c] == 0 for c in range(k) if c != i)
    column_clear = all(P[r][i] == 0 for r in range(k) if r != j)
    return row_clear and column_clear


def block_decompose(d):
    """
    Looks for σ with θ_σ(i)·a_j = 0 whenever j != i.

    Returns:
    - BlockDecomposition or None: σ as a tuple (σ(1), ..., σ(k)) and the blocks
      (i, r_i) with r_i = |θ_σ(i)·a_i|.
    """
    k = d.genus
    P = pairing_matrix(d.attaching, [alpha(i, k) for i in range(1, k + 1)])
    if all(_allowed(P, k, i, i) for i in range(k)):
        sigma = tuple(range(1, k + 1))
    else:
        graph = nx.Graph()
        words = [('word', j) for j in range(k)]
        graph.add_nodes_from(words, bipartite=0)
        graph.add_nodes_from((('index', i) for i in range(k)), bipartite=1)
        graph.add_edges_from(
            (('word', j), ('index', i))
            for i in range(k)
            for j in range(k)
            if _allowed(P, k, j, i)
        )
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=words)
        if any(('index', i) not in matching for i in range(k)):
            logger.debug(f"No block form for pairing matrix {P}")
            return None
        sigma = tuple(matching[('index', i)][1] + 1 for i in range(k))
    blocks = tuple((i, abs(P[sigma[i - 1] - 1][i - 1])) for i in range(1, k + 1))
    return BlockDecomposition(sigma, blocks)


def _factor(r):
    return 'Z' if r == 0 else f"Z/{r}"


def classify(d):
    """
    Classifies the manifold when its attaching data is in block form.

    π1 is the free product of Z/r_i (Z when r_i = 0); blocks with r_i = 1
    are trivial summands and are dropped before the finite and prime
    verdicts.
    """
    p = presentation(d)
    h = str(homology(p))
    decomposition = block_decompose(d)
    if decomposition is None:
        logger.info(f"Genus-{d.genus} diagram is not in block form")
        return ClassificationReport(
            decided=False,
            homology=h,
            diagnostics='undecided: attaching data is not in block form',
            relators=p.relators,
        )

    orders = decomposition.orders
    nontrivial = [r for r in orders if r != 1]
    pi1 = ' * '.join(_factor(r) for r in nontrivial) or '1'
    report = ClassificationReport(
        decided=True,
        sigma=decomposition.sigma,
        orders=orders,
        pi1=pi1,
        free_product=' * '.join(_factor(r) for r in orders),
        simply_connected=not nontrivial,
        finite=0 not in orders and len(nontrivial) <= 1,
        prime=len(nontrivial) <= 1,
        homology=h,
        diagnostics='block form',
        relators=p.relators,
    )
    logger.info(f"Genus-{d.genus} diagram classified: pi1 = {pi1}")
    return report


def completing_gamma(theta, i):
    """
    A word γ = a_i^x b_i^y with θ·γ = 1, or None when θ has letters of other
    indices with nonzero exponent sum or its index-i coordinates are not coprime.
    """
    coords = abelianize(theta)
    others = [j for j in range(theta.genus) if j != i - 1]
    if any(coords.m[j] or coords.n[j] for j in others):
        return None
    a, b = coords.m[i - 1], coords.n[i - 1]
    if math.gcd(a, b) != 1:
        return None
    s, t, _ = (int(x) for x in gcdex(abs(a), abs(b)))
    if a < 0:
        s = -s
    # Canonical solution of a*s + b*t = 1: 0 <= s < |b|, and t = 0 when b = 0.
    if b:
        s %= abs(b)
        t = (1 - a * s) // b
    else:
        t = 0
    return word(theta.genus, [(Letter(ALPHA, i), -t), (Letter(BETA, i), s)])


def completed_candidate(d, decomposition):
    """Candidate (θ_σ(i), γ_i) completing a block decomposition to a generator system, or None."""
    theta = tuple(d.attaching[s - 1] for s in decomposition.sigma)
    gamma = tuple(completing_gamma(t, i) for i, t in enumerate(theta, start=1))
    if any(g is None for g in gamma):
        return None
    return BasisCandidate(d.genus, theta, gamma)


def lens_diagram(p, q):
    """Genus-1 diagram with attaching word a1^q b1^p."""
    return HeegaardDiagram(1, (word(1, [(Letter(ALPHA, 1), q), (Letter(BETA, 1), p)]),))


def lens_table(min_p, max_p):
    """
    Classifies every lens-space diagram a1^q b1^p with min_p <= p <= max_p,
    1 <= q <= p and gcd(p, q) = 1.

    Returns:
    - list: dicts with keys p, q, pi1, finite, prime.
    """
    if min_p < 1 or max_p < min_p:
        raise HeegaardError(f"Invalid range for p: {min_p}..{max_p}")
    rows = []
    for p in range(min_p, max_p + 1):
        for q in range(1, p + 1):
            if math.gcd(p, q) != 1:
                continue
            report = classify(lens_diagram(p, q))
            rows.append({'p': p, 'q': q, 'pi1': report.pi1, 'finite': report.finite, 'prime': report.prime})
    return rows
