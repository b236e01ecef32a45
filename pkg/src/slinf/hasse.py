"""Hasse diagrams of bounded ideal families under inclusion.

Output is deterministic: nodes in canonical order, edges sorted, covering
relations oriented from the smaller ideal to the larger one.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .ideals import Ideal, enumerate_ideals, is_contained


def covering_relations(ideals: Iterable[Ideal]) -> list[tuple[Ideal, Ideal]]:
    """Covering pairs (inner, outer) of the inclusion order restricted to the family."""
    family = sorted(set(ideals), key=Ideal.sort_key)
    strict = {
        (a, b)
        for a in family
        for b in family
        if a != b and is_contained(a, b)
    }
    covers = [
        (a, b)
        for (a, b) in strict
        if not any((a, c) in strict and (c, b) in strict for c in family)
    ]
    return sorted(covers, key=lambda e: (e[0].sort_key(), e[1].sort_key()))


def hasse_dot(ideals: Sequence[Ideal]) -> str:
    """DOT digraph of the covering relations, edges from smaller to larger ideal."""
    family = sorted(set(ideals), key=Ideal.sort_key)
    lines = ["digraph ideal_inclusions {"]
    for node in family:
        lines.append(f'  "{node}";')
    for a, b in covering_relations(family):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_adjacency(ideals: Sequence[Ideal]) -> dict:
    """The same graph as adjacency lists: nodes in canonical order, edge targets by index."""
    family = sorted(set(ideals), key=Ideal.sort_key)
    index = {node: i for i, node in enumerate(family)}
    adjacency: list[list[int]] = [[] for _ in family]
    for a, b in covering_relations(family):
        adjacency[index[a]].append(index[b])
    return {
        "nodes": [node.to_json() for node in family],
        "adjacency": [sorted(row) for row in adjacency],
    }


def family_hasse(max_x: int, max_y: int, max_cols: int, max_len: int, fmt: str = "dot") -> str:
    """Hasse diagram of the bounded family, rendered as DOT or JSON text."""
    if min(max_x, max_y, max_cols, max_len) < 0:
        raise ValueError("family bounds must be >= 0 (empty families are not drawable)")
    family = enumerate_ideals(max_x, max_y, max_cols, max_len)
    if fmt == "dot":
        return hasse_dot(family)
    if fmt == "json":
        return json.dumps(hasse_adjacency(family), sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected 'dot' or 'json'")
