# topology/diagrams.py
"""
Combinatorial record of two transverse closed curves M and M' on a surface:
signed crossings and the cyclic order in which each curve meets them.

A bigon is a pair of opposite-sign crossings adjacent along both curves;
removing it models the isotopy that pushes one arc across the disc it
bounds with the other and is the identity away from the two crossings.
"""

import logging
from dataclasses import dataclass

from .exceptions import DiagramError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Crossing:
    id: str
    sign: int

    def __post_init__(self):
        if not isinstance(self.sign, int) or isinstance(self.sign, bool) or self.sign not in (1, -1):
            raise DiagramError(f"Crossing {self.id!r} has sign {self.sign!r}; expected +1 or -1")


@dataclass(frozen=True, order=True)
class Bigon:
    p: str
    q: str

    def as_list(self):
        return [self.p, self.q]


@dataclass(frozen=True)
class CrossingDiagram:
    m_order: tuple
    mprime_order: tuple
    signs: tuple

    @property
    def count(self):
        return len(self.m_order)

    @property
    def algebraic_sum(self):
        return sum(sign for _, sign in self.signs)

    def to_dict(self):
        return {
            'm_order': list(self.m_order),
            'mprime_order': list(self.mprime_order),
            'signs': dict(self.signs),
        }


def _duplicates(order):
    seen, repeated = set(), []
    for id in order:
        if id in seen:
            repeated.append(id)
        seen.add(id)
    return repeated


def build_diagram(order_on_M, order_on_Mprime, signs):
    """
    Validates and builds a crossing diagram.

    Parameters:
    - order_on_M (list): Crossing ids in the order met along M.
    - order_on_Mprime (list): The same ids in the order met along M'.
    - signs (dict): Crossing id -> +1 or -1.

    Returns:
    - CrossingDiagram
    """
    m_order = tuple(str(id) for id in order_on_M)
    mprime_order = tuple(str(id) for id in order_on_Mprime)
    signs = {str(id): sign for id, sign in signs.items()}

    for name, order in (('M', m_order), ("M'", mprime_order)):
        repeated = _duplicates(order)
        if repeated:
            raise DiagramError(f"Duplicate crossing ids along {name}: {', '.join(sorted(set(repeated)))}")
    if set(m_order) != set(mprime_order):
        difference = sorted(set(m_order) ^ set(mprime_order))
        raise DiagramError(f"The two cyclic orders list different crossings: {', '.join(difference)}")
    missing = sorted(set(m_order) - set(signs))
    if missing:
        raise DiagramError(f"Missing sign for crossings: {', '.join(missing)}")
    unknown = sorted(set(signs) - set(m_order))
    if unknown:
        raise DiagramError(f"Signs given for unknown crossings: {', '.join(unknown)}")

    crossings = [Crossing(id, signs[id]) for id in sorted(signs)]
    return CrossingDiagram(m_order, mprime_order, tuple((c.id, c.sign) for c in crossings))


def _adjacent_pairs(order):
    if len(order) < 2:
        return set()
    if len(order) == 2:
        return {tuple(sorted(order))}
    return {
        tuple(sorted((order[i], order[(i + 1) % len(order)])))
        for i in range(len(order))
    }


def _bigons(d):
    signs = dict(d.signs)
    common = _adjacent_pairs(d.m_order) & _adjacent_pairs(d.mprime_order)
    return sorted(Bigon(p, q) for p, q in common if signs[p] == -signs[q])


def find_bigon(d):
    """Lexicographically least bigon of ``d``, or None."""
    bigons = _bigons(d)
    return bigons[0] if bigons else None


def _without(d, removed):
    return CrossingDiagram(
        tuple(id for id in d.m_order if id not in removed),
        tuple(id for id in d.mprime_order if id not in removed),
        tuple((id, sign) for id, sign in d.signs if id not in removed),
    )


def remove_bigon(d, b):
    if b not in _bigons(d):
        raise DiagramError(
            f"({b.p}, {b.q}) is not a bigon: the crossings must have opposite signs "
            f"and be adjacent along both curves"
        )
    logger.debug(f"Removing bigon ({b.p}, {b.q}) from a {d.count}-crossing diagram")
    return _without(d, {b.p, b.q})


def reduce_with_trace(d):
    """
    Removes bigons until none remains, always taking the least one.

    Returns:
    - tuple: (final CrossingDiagram, tuple of removed Bigons in order)
    """
    trace = []
    bigon = find_bigon(d)
    while bigon is not None:
        d = remove_bigon(d, bigon)
        trace.append(bigon)
        bigon = find_bigon(d)
    logger.debug(f"Reduction finished after {len(trace)} steps with {d.count} crossings left")
    return d, tuple(trace)


def reduce_to_minimal(d):
    final, trace = reduce_with_trace(d)
    return final, len(trace)


def reachable_final_counts(d):
    """Crossing counts of every bigon-free diagram reachable from ``d`` by any removal order."""
    memo = {}

    def explore(current):
        key = frozenset(current.m_order)
        if key not in memo:
            bigons = _bigons(current)
            if not bigons:
                memo[key] = frozenset({current.count})
            else:
                memo[key] = frozenset().union(
                    *(explore(_without(current, {b.p, b.q})) for b in bigons)
                )
        return memo[key]

    return explore(d)
