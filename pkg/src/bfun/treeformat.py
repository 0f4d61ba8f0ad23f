"""Versioned machine-readable output ("bfun-tree", JSON).

Document layout::

    {"format": "bfun-tree", "version": 1, "command": <str>, "result": <node>, ...extra}

Nodes carry a "type" key: factored_polynomial, factored_ratio, gamma_lift,
consistency, cocycle_suite, k_corollaries, omega_scan, omega_member, h_value.
The first three are parsed back into objects by ``node_to_object``.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DomainError
from .symbolic import FactoredPolynomial, FactoredRatio, GammaLift

FORMAT = "bfun-tree"
VERSION = 1

_PARSERS = {
    "factored_polynomial": FactoredPolynomial.from_tree,
    "factored_ratio": FactoredRatio.from_tree,
    "gamma_lift": GammaLift.from_tree,
}


def dump(command: str, result: Any, **extra) -> str:
    node = result.to_tree() if hasattr(result, "to_tree") else result
    doc = {"format": FORMAT, "version": VERSION, "command": command, "result": node}
    doc.update(extra)
    return json.dumps(doc, indent=2, ensure_ascii=False)


def load(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("format") != FORMAT:
        raise DomainError(f"not a {FORMAT} document")
    if doc.get("version") != VERSION:
        raise DomainError(f"unsupported {FORMAT} version {doc.get('version')!r}")
    return doc


def node_to_object(node: dict):
    kind = node.get("type")
    if kind not in _PARSERS:
        raise DomainError(f"no parser for node type {kind!r}")
    return _PARSERS[kind](node)
