"""Branched-covering analysis on the Riemann sphere.

Thin decoding layer over the compiled module: every structured result crosses
the boundary as a JSON string and comes back as plain dicts/lists here.
"""

import json as _json

from _ramify import (  # noqa: F401
    RamifyError,
    c0_extension_divisibility,
    local_degree,
    local_lift as _local_lift,
)
import _ramify as _c

__all__ = [
    "RamifyError",
    "analyze_map",
    "evaluate",
    "local_degree",
    "fiber",
    "construct_picard",
    "construct_for_targets",
    "check_converse",
    "monodromy",
    "regularity_probe",
    "local_lift",
    "c0_extension_divisibility",
    "passport_lift_feasibility",
    "fgt_check",
    "fgt_consequences",
    "fgt_general_F",
    "fgt_classify",
    "fgt_bend",
    "fgt_enumerate",
    "fgt_obstruct",
    "fgt_no_extension",
    "catenoid_record",
]


def _decoded(payload):
    return _json.loads(payload)


def _record_arg(record):
    return record if isinstance(record, str) else _json.dumps(record)


def analyze_map(map, over, exact=False):
    return _decoded(_c.analyze_map(map, over, exact))


def evaluate(map, point, exact=False):
    return _decoded(_c.evaluate(map, point, exact))


def fiber(map, point, exact=False):
    return _decoded(_c.fiber(map, point, exact))


def construct_picard(w, exact=False):
    return _decoded(_c.construct_picard(str(w), exact))


def construct_for_targets(targets):
    return _decoded(_c.construct_for_targets(targets))


def check_converse(passport, y0, y1=()):
    return _decoded(_c.check_converse(_record_arg(passport), list(y0), list(y1)))


def monodromy(map, punctures, base=""):
    return _decoded(_c.monodromy(map, punctures, base))


def regularity_probe(map, excluded, trials, seed=0):
    return _decoded(_c.regularity_probe(map, excluded, trials, seed))


def local_lift(beta_f, beta_F):
    return _decoded(_local_lift(beta_f, beta_F))


def passport_lift_feasibility(passport, ends):
    return _decoded(_c.passport_lift_feasibility(_record_arg(passport), list(ends)))


def fgt_check(record):
    return _decoded(_c.fgt_check(_record_arg(record)))


def fgt_consequences(record):
    return _decoded(_c.fgt_consequences(_record_arg(record)))


def fgt_general_F(record):
    return _decoded(_c.fgt_general_F(_record_arg(record)))


def fgt_classify(record):
    return _decoded(_c.fgt_classify(_record_arg(record)))


def fgt_bend(record, from_id, to_id):
    return _decoded(_c.fgt_bend(_record_arg(record), from_id, to_id))


def fgt_enumerate(g_max, n_max, m_max, b_max, node_budget=10_000_000):
    return [_decoded(r) for r in _c.fgt_enumerate(g_max, n_max, m_max, b_max, node_budget)]


def fgt_obstruct(record):
    return _decoded(_c.fgt_obstruct(_record_arg(record)))


def fgt_no_extension(record, w_choice="w"):
    return _decoded(_c.fgt_no_extension(_record_arg(record), w_choice))


def catenoid_record():
    return _decoded(_c.catenoid_record())
