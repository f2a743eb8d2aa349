"""Exact rational calculator for log canonical surface singularities and stable surface volumes."""

import json
from fractions import Fraction

from . import _core
from ._core import KsbaError, __version__, moduli_count, scenario_names

__all__ = [
    "KsbaError",
    "V",
    "W",
    "__version__",
    "classify",
    "discrepancies",
    "example",
    "fundamental_cycle",
    "gap",
    "minima_and_gap",
    "moduli_count",
    "scenario_names",
    "theorem_constants",
    "verify_paper",
    "w1",
    "w2",
]


def _graph_text(graph):
    return graph if isinstance(graph, str) else json.dumps(graph)


def _fractions(d):
    return {k: Fraction(v) for k, v in d.items()}


def classify(graph):
    """Singularity type of a resolution graph given as a dict or a JSON string."""
    return _core.classify(_graph_text(graph))


def discrepancies(graph):
    out = _core.discrepancies(_graph_text(graph))
    out["a"] = _fractions(out["a"])
    return out


def fundamental_cycle(graph):
    return _core.fundamental_cycle(_graph_text(graph))


def V(n, l):
    return Fraction(_core.V(n, l))


def W(n, l):
    return Fraction(_core.W(n, l))


def w1(n):
    return Fraction(_core.w1(n))


def w2(n):
    return Fraction(_core.w2(n))


def gap(n):
    return Fraction(_core.gap(n))


def minima_and_gap(n):
    out = _core.minima_and_gap(n)
    out["values"] = _fractions(out["values"])
    return out


def theorem_constants(p_g):
    out = _core.theorem_constants(p_g)
    out["values"] = _fractions(out["values"])
    return out


def example(name, **params):
    out = _core.example(name, params)
    for key in ("ambient_k2", "volume", "expected_volume"):
        out[key] = Fraction(out[key])
    out["profile"]["a"] = _fractions(out["profile"]["a"])
    return out


def verify_paper(n_max=100):
    """Runs the full check suite; returns (passed, report text)."""
    return _core.verify_paper(n_max)
