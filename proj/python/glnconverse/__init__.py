"""Python interface to the finite field verification engine.

Thin wrappers over the compiled core: every operation builds the requested
group data from scratch, runs deterministically for a fixed seed, and returns
the parsed structured report (schema "glnconverse/1").
"""

import json

from . import _core

__all__ = [
    "inventory",
    "gamma",
    "gamma_csv",
    "converse",
    "special_pair_audit",
    "height_audit",
    "central_char_probe",
    "verify",
    "verify_suites",
]


def _call(fn, **kw):
    return json.loads(fn(**kw))


def inventory(n=2, p=3, k=1, **kw):
    return _call(_core.inventory_json, n=n, p=p, k=k, **kw)


def gamma(n=2, p=3, k=1, **kw):
    return _call(_core.gamma_json, n=n, p=p, k=k, **kw)


def gamma_csv(n=2, p=3, k=1, **kw):
    return _core.gamma_csv(n=n, p=p, k=k, **kw)


def converse(n=2, p=3, k=1, **kw):
    return _call(_core.converse_json, n=n, p=p, k=k, **kw)


def special_pair_audit(n=2, p=3, k=1, **kw):
    return _call(_core.special_pair_json, n=n, p=p, k=k, **kw)


def height_audit(n=2, p=3, k=1, **kw):
    return _call(_core.height_json, n=n, p=p, k=k, **kw)


def central_char_probe(n=2, p=3, k=1, **kw):
    return _call(_core.central_char_json, n=n, p=p, k=k, **kw)


def verify(suite="all", n=2, p=3, k=1, **kw):
    return _call(_core.verify_json, suite=suite, n=n, p=p, k=k, **kw)


def verify_suites():
    return list(_core.verify_suites())
