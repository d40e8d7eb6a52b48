"""Pseudograph associahedra: tubings, face posets, maps and integer realizations.

Graphs are passed as JSON text, a dict in the same layout, or a path to a
graph file. Structured results come back as plain Python objects.
"""

import json
import os

from . import _core
from ._core import GraphError, InconsistencyError, RealizationError, TooManyFaces

__all__ = [
    "GraphError",
    "InconsistencyError",
    "RealizationError",
    "TooManyFaces",
    "catalog",
    "contract",
    "delete",
    "fvector",
    "info",
    "load",
    "maximal_tubings",
    "poset",
    "realize",
    "tonks",
    "tubes",
    "verify",
]


def _text(graph):
    if isinstance(graph, dict):
        return json.dumps(graph)
    if isinstance(graph, os.PathLike) or (isinstance(graph, str) and not graph.lstrip().startswith("{")):
        with open(graph, encoding="utf-8") as f:
            return f.read()
    return graph


def load(graph):
    """Graph as a dict, validated and in canonical form."""
    return json.loads(_core.canonical(_text(graph)))


def info(graph):
    return _core.info(_text(graph))


def tubes(graph):
    """Every tube as (node ids, edge ids), in canonical order."""
    return _core.tubes(_text(graph))


def maximal_tubings(graph):
    return _core.maximal_tubings(_text(graph))


def fvector(graph, max_faces=0):
    return _core.fvector(_text(graph), max_faces)


def poset(graph, max_faces=0):
    return json.loads(_core.poset_json(_text(graph), max_faces))


def realize(graph, hrep=False):
    """Integer vertex coordinates (cone layout for graphs with loops).

    Coordinates are returned as Python ints."""
    doc = json.loads(_core.realize_json(_text(graph), hrep))
    doc["c"] = int(doc["c"])
    for v in doc["vertices"]:
        v["coords"] = [int(x) for x in v["coords"]]
    return doc


def contract(graph, edge):
    return json.loads(_core.contract_json(_text(graph), edge))


def delete(graph, edge):
    return json.loads(_core.delete_json(_text(graph), edge))


def tonks(n, order=()):
    return json.loads(_core.tonks_json(n, list(order)))


def verify(graph, suite="all"):
    return json.loads(_core.verify_json(_text(graph), suite))


def catalog(family, n=""):
    return json.loads(_core.catalog(family, str(n)))
