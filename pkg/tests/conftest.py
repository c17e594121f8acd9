"""Shared per-session caches for expensive exact computations."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hsuper.catalogs import catalog
from hsuper.cohomology import CochainComplex
from hsuper.classification import verify_classification_case

_ALGEBRAS: dict = {}
_COMPLEXES: dict = {}
_TABLE_REPORTS: dict = {}


def cached_algebra(cid):
    key = str(cid)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = catalog(cid)
    return _ALGEBRAS[key]


def cached_complex(cid):
    key = str(cid)
    if key not in _COMPLEXES:
        _COMPLEXES[key] = CochainComplex(cached_algebra(cid))
    return _COMPLEXES[key]


def cached_table_report(case_id):
    if case_id not in _TABLE_REPORTS:
        _TABLE_REPORTS[case_id] = verify_classification_case(case_id)
    return _TABLE_REPORTS[case_id]
