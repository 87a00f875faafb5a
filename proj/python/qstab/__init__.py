"""Exceptional objects, stability conditions and the triangle algorithm on small quivers."""
import json

from ._qstab import (
    CapacityError,
    DomainError,
    braid,
    catalog,
    hom_degree,
    hom_ext,
    is_semistable,
    mutate,
    roots,
    suite_names,
)
from . import _qstab

__all__ = [
    "CapacityError", "DomainError", "braid", "catalog", "classify", "fixture", "hn", "hom_degree", "hom_ext",
    "is_semistable", "kronecker_pair", "mutate", "roots", "rsequence", "run_suite", "sigma_triples",
    "suite_names", "validate",
]


def hn(quiver, obj, charge, heart="standard"):
    return json.loads(_qstab.hn_json(quiver, obj, charge, heart))


def classify(quiver, obj, charge, heart="standard"):
    return json.loads(_qstab.classify_json(quiver, obj, charge, heart))


def fixture(name):
    return json.loads(_qstab.fixture_json(name))


def rsequence(quiver, obj, charge, heart="standard"):
    return json.loads(_qstab.rsequence_json(quiver, obj, charge, heart))


def sigma_triples(charge, window=3, range=2, all=False):
    return json.loads(_qstab.sigma_triples_json(charge, window, range, all))


def validate(quiver, collection, charge):
    return json.loads(_qstab.validate_json(quiver, collection, charge))


def kronecker_pair(l, charge, window=6):
    return json.loads(_qstab.kronecker_pair_json(l, charge, window))


def run_suite(name, quiver="", max_m=-1, count=-1, seed=20240601):
    return json.loads(_qstab.run_suite_json(name, quiver, max_m, count, seed))
