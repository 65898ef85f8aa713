# topology/intersection.py
"""
Algebraic intersection pairing on the genus-k surface, the intersection
degree lower bound, and change-of-basis matrices between two systems of
canonical generators.

Orientation is fixed so that pairing(a_i, b_i) = +1. All arithmetic is exact:
determinants and inverses go through sympy's fraction-free elimination.
"""

import logging
from dataclasses import dataclass

import networkx as nx
from sympy import Matrix, eye

from .exceptions import GenusError, TopologyError
from .words import (
    ALPHA,
    BETA,
    Letter,
    abelianize,
    alpha,
    beta,
    concat,
    invert,
)

logger = logging.getLogger(__name__)

# Signed intersection number l·g.
PairingValue = int

MOVES = ('twist_theta', 'twist_gamma', 'rotate', 'mix', 'swap')


def _same_genus(l, g):
    if l.genus != g.genus:
        raise GenusError(f"Genus mismatch: {l.genus} and {g.genus}")


def pairing(l, g) -> PairingValue:
    """
    Signed intersection number of two closed curves given as words.

    Parameters:
    - l (CurveWord): First curve.
    - g (CurveWord): Second curve, same genus.

    Returns:
    - int: sum over i of m_i(l) n_i(g) - n_i(l) m_i(g).
    """
    _same_genus(l, g)
    x, y = abelianize(l), abelianize(g)
    return sum(x.m[i] * y.n[i] - x.n[i] * y.m[i] for i in range(l.genus))


def mu_coords(l):
    """Returns ``(l·α, l·β)`` as two integer tuples of length k."""
    coords = abelianize(l)
    return tuple(-value for value in coords.n), coords.m


def block_determinants(l, g):
    """Per-index determinants [[l·β_i, -l·α_i], [g·β_i, -g·α_i]]."""
    _same_genus(l, g)
    x, y = abelianize(l), abelianize(g)
    return [x.m[i] * y.n[i] - x.n[i] * y.m[i] for i in range(l.genus)]


def degree_lower_bound(l, g):
    _same_genus(l, g)
    return sum(abs(det) for det in block_determinants(l, g))


def pairing_matrix(words, basis):
    """Integer matrix with entry [j][i] = words[j]·basis[i]."""
    return tuple(tuple(pairing(w, b) for b in basis) for w in words)


def linear_expression(l):
    """
    Renders l modulo the commutator subgroup in the canonical generators,
    e.g. ``"2·α₁ + 3·β₁"``; ``"0"`` when every coefficient vanishes.
    """
    l_alpha, l_beta = mu_coords(l)
    terms = [(l_beta[i], Letter(ALPHA, i + 1).symbol) for i in range(l.genus)]
    terms += [(-l_alpha[i], Letter(BETA, i + 1).symbol) for i in range(l.genus)]
    text = ''
    for coefficient, symbol in terms:
        if coefficient == 0:
            continue
        if not text:
            text = f"{coefficient}·{symbol}"
        else:
            operator = '+' if coefficient > 0 else '-'
            text += f" {operator} {abs(coefficient)}·{symbol}"
    return text or '0'


@dataclass(frozen=True)
class BasisCandidate:
    genus: int
    theta: tuple
    gamma: tuple

    def __post_init__(self):
        theta, gamma = tuple(self.theta), tuple(self.gamma)
        if len(theta) != self.genus or len(gamma) != self.genus:
            raise GenusError(
                f"A genus-{self.genus} candidate needs {self.genus} theta and "
                f"{self.genus} gamma words, got {len(theta)} and {len(gamma)}"
            )
        for w in theta + gamma:
            if w.genus != self.genus:
                raise GenusError(f"Word of genus {w.genus} in a genus-{self.genus} candidate")
        object.__setattr__(self, 'theta', theta)
        object.__setattr__(self, 'gamma', gamma)


@dataclass(frozen=True)
class BasisMatrix:
    genus: int
    H: tuple
    det: int

    def to_dict(self):
        return {'genus': self.genus, 'H': [list(row) for row in self.H], 'det': self.det}


@dataclass(frozen=True)
class BasisVerdict:
    unimodular: bool
    block_permutation: tuple = None
    diagnostics: str = ''
    block_determinants: tuple = None
    inverse_sign: int = None

    def __post_init__(self):
        if self.block_permutation is not None and not self.unimodular:
            raise TopologyError("A block permutation requires a unimodular matrix")

    def to_dict(self):
        return {
            'unimodular': self.unimodular,
            'sigma': list(self.block_permutation) if self.block_permutation else None,
            'block_determinants': list(self.block_determinants) if self.block_determinants else None,
            'inverse_sign': self.inverse_sign,
            'diagnostics': self.diagnostics,
        }


def canonical_candidate(genus):
    return BasisCandidate(
        genus,
        tuple(alpha(i, genus) for i in range(1, genus + 1)),
        tuple(beta(i, genus) for i in range(1, genus + 1)),
    )


def _determinant(rows):
    return int(Matrix(rows).det(method='bareiss'))


def basis_matrix(c):
    """
    Matrix H = [[θᵀ·β, −θᵀ·α], [γᵀ·β, −γᵀ·α]] expressing the candidate in the
    canonical generators; rows follow θ then γ, columns α-coefficients then
    β-coefficients.
    """
    k = c.genus
    alphas = [alpha(i, k) for i in range(1, k + 1)]
    betas = [beta(i, k) for i in range(1, k + 1)]
    rows = tuple(
        tuple(pairing(w, b) for b in betas) + tuple(-pairing(w, a) for a in alphas)
        for w in c.theta + c.gamma
    )
    return BasisMatrix(k, rows, _determinant(rows))


def inverse_block_matrix(c):
    """Matrix [[αᵀ·γ, −αᵀ·θ], [βᵀ·γ, −βᵀ·θ]] expressing the canonical generators in the candidate."""
    k = c.genus
    canonical = [alpha(i, k) for i in range(1, k + 1)] + [beta(i, k) for i in range(1, k + 1)]
    rows = tuple(
        tuple(pairing(x, g) for g in c.gamma) + tuple(-pairing(x, t) for t in c.theta)
        for x in canonical
    )
    return BasisMatrix(k, rows, _determinant(rows))


def _block(H, k, j, i):
    # Candidate pair j against canonical index i, both 0-based.
    return ((H[j][i], H[j][k + i]), (H[k + j][i], H[k + j][k + i]))


def _exclusive(H, k, j, i):
    allowed = {i, k + i}
    return all(
        H[row][column] == 0
        for row in (j, k + j)
        for column in range(2 * k)
        if column not in allowed
    )


def _inverse_sign(m, inverse):
    product = Matrix(m.H) * Matrix(inverse.H)
    identity = eye(2 * m.genus)
    if product == identity:
        return 1
    if product == -identity:
        return -1
    return None


def verify_basis(m, inverse=None):
    """
    Decides unimodularity of H and searches the permutation σ pairing every
    canonical index i with a candidate pair whose 2×2 block has determinant
    ±1 and whose rows vanish outside index i.

    Parameters:
    - m (BasisMatrix): Matrix produced by ``basis_matrix``.
    - inverse (BasisMatrix, optional): Matrix produced by ``inverse_block_matrix``;
      when given, the verdict records whether H·K = ±E.

    Returns:
    - BasisVerdict
    """
    k = m.genus
    H = m.H
    inverse_sign = _inverse_sign(m, inverse) if inverse is not None else None
    notes = []
    if inverse is not None and inverse_sign is None:
        notes.append("inverse block matrix is not ±H⁻¹")

    if abs(m.det) != 1:
        notes.insert(0, f"det H = {m.det}, not ±1")
        return BasisVerdict(False, None, '; '.join(notes), None, inverse_sign)

    graph = nx.Graph()
    pairs = [('pair', j) for j in range(k)]
    indices = [('index', i) for i in range(k)]
    graph.add_nodes_from(pairs, bipartite=0)
    graph.add_nodes_from(indices, bipartite=1)
    block_dets = {}
    for i in range(k):
        for j in range(k):
            (a, b), (c, d) = _block(H, k, j, i)
            det = a * d - b * c
            if abs(det) == 1 and _exclusive(H, k, j, i):
                graph.add_edge(('pair', j), ('index', i))
                block_dets[(j, i)] = det
        if not any(graph.has_edge(('pair', j), ('index', i)) for j in range(k)):
            notes.insert(0, f"no candidate pair has an exclusive unimodular block at index {i + 1}")
            return BasisVerdict(True, None, '; '.join(notes), None, inverse_sign)

    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=pairs)
    logger.debug(f"Block matching for genus {k}: {matching}")
    if any(('index', i) not in matching for i in range(k)):
        notes.insert(0, "exclusive unimodular blocks admit no perfect matching")
        return BasisVerdict(True, None, '; '.join(notes), None, inverse_sign)

    sigma = tuple(matching[('index', i)][1] + 1 for i in range(k))
    dets = tuple(block_dets[(sigma[i] - 1, i)] for i in range(k))
    return BasisVerdict(True, sigma, '; '.join(notes) or 'ok', dets, inverse_sign)


def check_basis(c):
    return verify_basis(basis_matrix(c), inverse_block_matrix(c))


def elementary_move(c, kind, i, j=None, sign=1):
    """
    Applies one symplectic move to a candidate and returns the new candidate.

    Moves (indices 1-based): ``twist_theta`` θi <- θi γi^sign,
    ``twist_gamma`` γi <- γi θi^sign, ``rotate`` (θi, γi) <- (γi, θi^-1),
    ``mix`` θi <- θi θj and γj <- γj γi^-1, ``swap`` exchanges pairs i and j.
    """
    k = c.genus
    if kind not in MOVES:
        raise TopologyError(f"Unknown move {kind!r}; expected one of {', '.join(MOVES)}")
    if not 1 <= i <= k or (kind in ('mix', 'swap') and (j is None or not 1 <= j <= k or j == i)):
        raise GenusError(f"Invalid indices for {kind} in genus {k}: i={i}, j={j}")
    if sign not in (1, -1):
        raise TopologyError(f"Move sign must be +1 or -1, got {sign}")

    theta, gamma = list(c.theta), list(c.gamma)
    a, b = i - 1, (j - 1 if j is not None else None)
    if kind == 'twist_theta':
        theta[a] = concat(theta[a], gamma[a] if sign > 0 else invert(gamma[a]))
    elif kind == 'twist_gamma':
        gamma[a] = concat(gamma[a], theta[a] if sign > 0 else invert(theta[a]))
    elif kind == 'rotate':
        theta[a], gamma[a] = gamma[a], invert(theta[a])
    elif kind == 'mix':
        theta[a] = concat(theta[a], theta[b])
        gamma[b] = concat(gamma[b], invert(gamma[a]))
    else:
        theta[a], theta[b] = theta[b], theta[a]
        gamma[a], gamma[b] = gamma[b], gamma[a]
    return BasisCandidate(k, tuple(theta), tuple(gamma))
