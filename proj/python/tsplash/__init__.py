"""Tangent subplanes of PG(2,q^3) and their splashes, via the Bruck-Bose representation in PG(6,q)."""

import json

from ._core import Geometry, _run_json

__all__ = ["Geometry", "run"]


def run(q, checks=None, samples=20, seed=1):
    """Run verification checks and return the report as a dict."""
    return json.loads(_run_json(q, list(checks or []), samples, seed))
