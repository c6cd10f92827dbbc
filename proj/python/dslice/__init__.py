"""Seifert fibered spaces, Montesinos links and doubly slice checks."""

import json as _json

from . import _dslice
from ._dslice import InternalInconsistency, ParseError, PreconditionError

__all__ = [
    "sfs",
    "montesinos",
    "pretzel",
    "evaluate",
    "lattice_search",
    "partitions",
    "batch",
    "ParseError",
    "PreconditionError",
    "InternalInconsistency",
]


def sfs(text):
    """Invariants and embedding verdicts for an S2(e; ...) expression."""
    return _json.loads(_dslice.sfs(text))


def montesinos(text):
    return _json.loads(_dslice.montesinos(text))


def pretzel(text):
    return _json.loads(_dslice.pretzel(text))


def evaluate(text):
    """Dispatch on the expression kind (S2, M or P)."""
    return _json.loads(_dslice.evaluate(text))


def lattice_search(space_or_matrix, m=None, threads=1):
    """Factorizations A^T A = Q.

    Takes an S2 expression or a matrix given as {"n": ..., "entries": ...}.
    """
    arg = space_or_matrix if isinstance(space_or_matrix, str) else _json.dumps(space_or_matrix)
    return _json.loads(_dslice.lattice_search(arg, m, threads))


def partitions(link_data):
    """link_data is {"n", "lk", "slice"}."""
    arg = link_data if isinstance(link_data, str) else _json.dumps(link_data)
    return _json.loads(_dslice.partitions(arg))


def batch(lines, jobs=1):
    return [_json.loads(s) for s in _dslice.batch(list(lines), jobs)]
