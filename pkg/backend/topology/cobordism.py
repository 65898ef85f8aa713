# topology/cobordism.py
"""
Bookkeeping for chains of elementary cobordisms of a closed 3-manifold.

Each record is one critical point with its index. Incidence entries are
supplied by the caller: the signed count of the point's ascending sphere
against the descending sphere of a partner one index higher on the level
surface between them. Chains are immutable; every move returns a new chain.
"""

import logging
from collections import Counter
from dataclasses import dataclass

from .exceptions import ChainError

logger = logging.getLogger(__name__)

MAX_INDEX = 3


@dataclass(frozen=True)
class CriticalRecord:
    id: str
    index: int
    incidence: tuple = ()

    def __post_init__(self):
        if not isinstance(self.index, int) or isinstance(self.index, bool) or not 0 <= self.index <= MAX_INDEX:
            raise ChainError(f"Record {self.id!r} has index {self.index!r}; expected an integer in 0..{MAX_INDEX}")
        incidence = self.incidence.items() if isinstance(self.incidence, dict) else self.incidence
        object.__setattr__(self, 'incidence', tuple(sorted((str(partner), int(value)) for partner, value in incidence)))

    def pairing_with(self, partner_id):
        return dict(self.incidence).get(partner_id, 0)

    def to_dict(self):
        return {'id': self.id, 'index': self.index, 'incidence': dict(self.incidence)}


@dataclass(frozen=True)
class CobordismChain:
    records: tuple

    @property
    def ids(self):
        return tuple(r.id for r in self.records)

    @property
    def type_vector(self):
        counts = Counter(r.index for r in self.records)
        return tuple(counts[i] for i in range(MAX_INDEX + 1))

    @property
    def euler_characteristic(self):
        r0, r1, r2, r3 = self.type_vector
        return r0 - r1 + r2 - r3

    @property
    def closed(self):
        r0, _, _, r3 = self.type_vector
        return r0 >= 1 and r3 >= 1

    def record(self, id):
        for r in self.records:
            if r.id == id:
                return r
        raise ChainError(f"No record with id {id!r}")

    def to_dict(self):
        return {
            'records': [r.to_dict() for r in self.records],
            'type': list(self.type_vector),
            'closed': self.closed,
        }


@dataclass(frozen=True)
class CancelMove:
    lower: str
    upper: str
    indices: tuple
    type_after: tuple

    def to_dict(self):
        return {
            'cancel': [self.lower, self.upper],
            'indices': list(self.indices),
            'type_after': list(self.type_after),
        }


def _record(data):
    if isinstance(data, CriticalRecord):
        return data
    try:
        return CriticalRecord(str(data['id']), data['index'], data.get('incidence') or {})
    except KeyError as e:
        raise ChainError(f"Record is missing the field {e.args[0]!r}")


def _validated(records):
    by_id = {}
    for r in records:
        if r.id in by_id:
            raise ChainError(f"Duplicate record id {r.id!r}")
        by_id[r.id] = r
    for r in records:
        for partner, _ in r.incidence:
            if partner not in by_id:
                raise ChainError(f"Record {r.id!r} has incidence with unknown record {partner!r}")
            if by_id[partner].index != r.index + 1:
                raise ChainError(
                    f"Record {r.id!r} of index {r.index} may only carry incidence with index "
                    f"{r.index + 1} records, not with {partner!r} of index {by_id[partner].index}"
                )
    chain = CobordismChain(tuple(records))
    if chain.closed and chain.euler_characteristic != 0:
        raise ChainError(f"Closed chain of type {list(chain.type_vector)} has Euler characteristic "
                         f"{chain.euler_characteristic}, expected 0")
    return chain


def build_chain(records):
    """
    Builds a chain in composition order.

    Parameters:
    - records (list): CriticalRecord objects or dicts with keys id, index and
      an optional incidence map from partner id to a signed integer.

    Returns:
    - CobordismChain
    """
    return _validated([_record(r) for r in records])


def incidence(a, b):
    """Signed incidence between two records, whichever of them carries it."""
    return a.pairing_with(b.id) or b.pairing_with(a.id)


def _commute(a, b):
    return a.index == b.index or incidence(a, b) == 0


def boundary_profile(chain):
    """
    Level surfaces between consecutive records as (components, genus) pairs.

    A 1-handle joins two components when there are several, otherwise adds a
    handle; a 2-handle removes a handle when there is one, otherwise splits off
    a sphere.
    """
    components, genus = 0, 0
    profile = []
    for position, r in enumerate(chain.records):
        if r.index == 0:
            components += 1
        elif components == 0:
            raise ChainError(f"Record {r.id!r} of index {r.index} is attached to an empty level")
        elif r.index == 1:
            if components > 1:
                components -= 1
            else:
                genus += 1
        elif r.index == 2:
            if genus > 0:
                genus -= 1
            else:
                components += 1
        else:
            components -= 1
        if position < len(chain.records) - 1:
            profile.append((components, genus))
    return profile


def boundary_genus_profile(chain):
    indices = [r.index for r in chain.records]
    if indices != sorted(indices):
        raise ChainError("Genus profile needs records sorted by index")
    return [genus for _, genus in boundary_profile(chain)]


def rearrange(chain, target_order):
    """
    Reorders the records of ``chain`` into ``target_order`` (a sequence of ids).

    Two records may trade places when their indices are equal or their
    incidence is zero; any other inversion raises ChainError.
    """
    target_order = [str(id) for id in target_order]
    if sorted(target_order) != sorted(chain.ids) or len(set(target_order)) != len(target_order):
        raise ChainError(f"{target_order} is not a permutation of the chain's records")
    position = {id: i for i, id in enumerate(target_order)}
    records = chain.records
    for i, a in enumerate(records):
        for b in records[i + 1:]:
            if position[a.id] > position[b.id] and not _commute(a, b):
                raise ChainError(
                    f"Cannot exchange {a.id!r} (index {a.index}) and {b.id!r} (index {b.index}): "
                    f"their incidence is {incidence(a, b)}"
                )
    return CobordismChain(tuple(chain.record(id) for id in target_order))


def _adjacent_order(chain, first, second):
    ids = chain.ids
    start, end = ids.index(first.id), ids.index(second.id)
    left, right = [], []
    for r in chain.records[start + 1:end]:
        fits_left = _commute(r, first) and all(_commute(r, other) for other in right)
        fits_right = _commute(r, second)
        if fits_right and (r.index > first.index or not fits_left):
            right.append(r)
        elif fits_left:
            left.append(r)
        else:
            raise ChainError(f"Cannot bring {first.id!r} and {second.id!r} together: {r.id!r} is in the way")
    return (
        ids[:start]
        + tuple(r.id for r in left)
        + (first.id, second.id)
        + tuple(r.id for r in right)
        + ids[end + 1:]
    )


def cancel_pair(chain, id1, id2):
    """
    Cancels a critical point of index λ against one of index λ+1 meeting it
    exactly once. The two records are first made consecutive by legal moves.
    """
    lower, upper = chain.record(str(id1)), chain.record(str(id2))
    if upper.index != lower.index + 1:
        raise ChainError(
            f"Cannot cancel {lower.id!r} (index {lower.index}) against {upper.id!r} "
            f"(index {upper.index}): indices must be consecutive"
        )
    value = incidence(lower, upper)
    if abs(value) != 1:
        raise ChainError(f"Cannot cancel {lower.id!r} against {upper.id!r}: incidence is {value}, not ±1")

    ids = chain.ids
    if ids.index(lower.id) < ids.index(upper.id):
        order = _adjacent_order(chain, lower, upper)
    else:
        order = _adjacent_order(chain, upper, lower)
    chain = rearrange(chain, order)

    removed = {lower.id, upper.id}
    records = [
        CriticalRecord(r.id, r.index, tuple((p, v) for p, v in r.incidence if p not in removed))
        for r in chain.records
        if r.id not in removed
    ]
    logger.debug(f"Cancelled {lower.id!r} (index {lower.index}) against {upper.id!r}")
    return CobordismChain(tuple(records))


def _candidates(chain, index):
    lowers = sorted((r for r in chain.records if r.index == index), key=lambda r: r.id)
    uppers = sorted((r for r in chain.records if r.index == index + 1), key=lambda r: r.id)
    return [(a, b) for a in lowers for b in uppers if abs(incidence(a, b)) == 1]


def _first_cancellation(chain):
    r0, _, _, r3 = chain.type_vector
    phases = []
    if r0 > 1:
        phases.append(0)
    if r3 > 1:
        phases.append(2)
    phases.append(1)
    for index in phases:
        for a, b in _candidates(chain, index):
            try:
                after = cancel_pair(chain, a.id, b.id)
                return after, CancelMove(a.id, b.id, (index, index + 1), after.type_vector)
            except ChainError as e:
                logger.debug(f"Skipping pair ({a.id!r}, {b.id!r}): {e}")
    return None


def normalize_with_trace(chain):
    """
    Cancels unit-incidence pairs until none applies: 0/1 pairs while there is
    more than one minimum, 2/3 pairs while there is more than one maximum, and
    1/2 pairs throughout. Pairs are tried lowest id first.

    Returns:
    - tuple: (normalized CobordismChain, list of CancelMove)
    """
    moves = []
    step = _first_cancellation(chain)
    while step is not None:
        chain, move = step
        moves.append(move)
        step = _first_cancellation(chain)
    logger.info(f"Normalized chain to type {list(chain.type_vector)} in {len(moves)} moves")
    return chain, moves


def normalize(chain):
    return normalize_with_trace(chain)[0]


def dual(chain):
    """Chain of the reversed Morse function: order reversed, index λ becomes 3 - λ."""
    moved = {r.id: [] for r in chain.records}
    for r in chain.records:
        for partner, value in r.incidence:
            moved[partner].append((r.id, value))
    return CobordismChain(tuple(
        CriticalRecord(r.id, MAX_INDEX - r.index, tuple(moved[r.id]))
        for r in reversed(chain.records)
    ))
