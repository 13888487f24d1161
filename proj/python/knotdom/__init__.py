"""Knot 1-domination toolkit: exact invariants and pair verdicts."""

import json
import os
from pathlib import Path

from ._knotdom import (
    LaurentPoly,
    alexander_polynomial,
    braid_to_pd,
    exact_div,
    is_prime_power,
    jones_polynomial,
    normalize,
    run_cli,
)
from . import _knotdom


def default_corpus():
    """Path of the bundled corpus, honouring $KNOTDOM_CORPUS."""
    env = os.environ.get("KNOTDOM_CORPUS")
    if env:
        return env
    packaged = Path(__file__).with_name("data") / "corpus.json"
    if packaged.exists():
        return str(packaged)
    return _knotdom.DEFAULT_CORPUS


def check(k1, k2, corpus=None):
    """Verdict for k1 >= k2 as a dict (pair, verdict, rules, anchors, details)."""
    return json.loads(_knotdom.check_json(corpus or default_corpus(), k1, k2))


def invariants(target, corpus=None):
    return json.loads(_knotdom.invariants_json(corpus or default_corpus(), target))


def poset(corpus=None, threads=1):
    return json.loads(_knotdom.poset_json(corpus or default_corpus(), threads))


def verify_paper(corpus=None):
    return json.loads(_knotdom.verify_json(corpus or default_corpus()))


__all__ = [
    "LaurentPoly",
    "alexander_polynomial",
    "braid_to_pd",
    "check",
    "default_corpus",
    "exact_div",
    "invariants",
    "is_prime_power",
    "jones_polynomial",
    "normalize",
    "poset",
    "run_cli",
    "verify_paper",
]
