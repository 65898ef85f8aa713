# topology/reports.py
"""
Result payloads shared by the management commands and the HTTP views, so that
``--json`` output and API responses are the same dictionaries.
"""

import logging

from .cobordism import boundary_profile, normalize_with_trace
from .diagrams import reachable_final_counts, reduce_with_trace
from .exceptions import ChainError
from .heegaard import classify, homology, lens_table, presentation
from .intersection import (
    basis_matrix,
    block_determinants,
    degree_lower_bound,
    inverse_block_matrix,
    linear_expression,
    mu_coords,
    pairing,
    verify_basis,
)
from .words import abelianize, render

logger = logging.getLogger(__name__)


def intersect_report(l, g):
    return {'genus': l.genus, 'l': render(l), 'g': render(g), 'pairing': pairing(l, g)}


def degree_bound_report(l, g):
    return {
        'genus': l.genus,
        'degree_lower_bound': degree_lower_bound(l, g),
        'pairing': pairing(l, g),
        'block_determinants': block_determinants(l, g),
    }


def express_report(l):
    l_alpha, l_beta = mu_coords(l)
    coords = abelianize(l)
    return {
        'genus': l.genus,
        'word': render(l),
        'linear_expression': linear_expression(l),
        'l_alpha': list(l_alpha),
        'l_beta': list(l_beta),
        'm': list(coords.m),
        'n': list(coords.n),
    }


def basis_report(c):
    m = basis_matrix(c)
    verdict = verify_basis(m, inverse_block_matrix(c))
    return {'genus': c.genus, 'H': m.to_dict()['H'], 'det': m.det, **verdict.to_dict()}


def diagram_report(d, exhaustive=False):
    final, removed = reduce_with_trace(d)
    report = {
        'initial_count': d.count,
        'algebraic_sum': d.algebraic_sum,
        'final_count': final.count,
        'steps': len(removed),
        'removed': [b.as_list() for b in removed],
        'final': final.to_dict(),
    }
    if exhaustive:
        report['reachable_final_counts'] = sorted(reachable_final_counts(d))
    return report


def pi1_report(d):
    p = presentation(d)
    return {
        'presentation': str(p),
        **p.to_dict(),
        **classify(d).to_dict(),
        'homology': str(homology(p)),
    }


def classify_report(d):
    return classify(d).to_dict()


def normalize_report(chain):
    final, moves = normalize_with_trace(chain)
    report = {
        'initial_type': list(chain.type_vector),
        'final_type': list(final.type_vector),
        'moves': [move.to_dict() for move in moves],
        'records': [r.to_dict() for r in final.records],
    }
    try:
        report['profile'] = [list(level) for level in boundary_profile(final)]
    except ChainError as e:
        logger.debug(f"No boundary profile for the normalized chain: {e}")
    return report


def lens_table_report(min_p, max_p):
    return {'min_p': min_p, 'max_p': max_p, 'rows': lens_table(min_p, max_p)}
