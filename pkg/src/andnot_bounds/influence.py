"""Signed influence graphs.

The structural graph is read directly off the literals and is what every
downstream computation uses. ``local_ig`` and ``bruteforce_global_ig``
follow the sensitivity definition state by state and exist to check it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import StateSpaceTooLarge
from .network import BooleanNetwork, str_to_state

__all__ = [
    "POS",
    "NEG",
    "SignedArc",
    "SignedDigraph",
    "DEFAULT_MAX_STATES",
    "check_state_space",
    "structural_global_ig",
    "local_ig",
    "local_arc_masks",
    "bruteforce_global_ig",
    "induced_subgraph",
]

POS = "+"
NEG = "-"

DEFAULT_MAX_STATES = 1 << 20


class SignedArc(NamedTuple):
    source: object
    target: object
    sign: str

    def __str__(self):
        return f"{self.source} -> {self.target} {self.sign}"


@dataclass(frozen=True)
class SignedDigraph:
    """Vertices in a fixed order plus a set of signed arcs.

    Vertex order drives every deterministic choice downstream (cycle
    rotation, tie-breaks), so it is part of the value.
    """

    vertices: tuple
    arcs: frozenset

    def __post_init__(self):
        vertices = tuple(self.vertices)
        arcs = frozenset(SignedArc(*a) for a in self.arcs)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertices")
        vs = set(vertices)
        for a in arcs:
            if a.sign not in (POS, NEG):
                raise ValueError(f"bad sign {a.sign!r}")
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arc {a} leaves the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", arcs)

    def order(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def sorted_arcs(self) -> list:
        order = self.order()
        return sorted(self.arcs, key=lambda a: (order[a.source], order[a.target], a.sign))

    def in_arcs(self, v) -> list:
        return [a for a in self.sorted_arcs() if a.target == v]

    def out_arcs(self, v) -> list:
        return [a for a in self.sorted_arcs() if a.source == v]

    def has_arc(self, source, target, sign) -> bool:
        return SignedArc(source, target, sign) in self.arcs

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arcs": [
                {"from": a.source, "to": a.target, "sign": a.sign}
                for a in self.sorted_arcs()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "SignedDigraph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            tuple(data["vertices"]),
            frozenset(SignedArc(a["from"], a["to"], a["sign"]) for a in data["arcs"]),
        )

    def to_edgelist(self) -> str:
        return "".join(f"{a}\n" for a in self.sorted_arcs())

    @classmethod
    def from_edgelist(cls, text: str, vertices: Iterable = ()) -> "SignedDigraph":
        """Parse ``u -> v +`` lines. Vertices not listed in ``vertices``
        are appended in order of first appearance."""
        order = list(vertices)
        seen = set(order)
        arcs = set()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.replace("->", " -> ").split()
            if len(parts) != 4 or parts[1] != "->" or parts[3] not in (POS, NEG):
                raise ValueError(f"line {lineno}: expected 'u -> v +|-', got {raw!r}")
            u, _, v, s = parts
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    order.append(x)
            arcs.add(SignedArc(u, v, s))
        return cls(tuple(order), frozenset(arcs))


def check_state_space(n: int, max_states: int | None) -> None:
    cap = DEFAULT_MAX_STATES if max_states is None else max_states
    if n >= 63 or (1 << n) > cap:
        raise StateSpaceTooLarge(n, cap)


def structural_global_ig(bn: BooleanNetwork) -> SignedDigraph:
    arcs = set()
    for v, f in enumerate(bn.functions):
        for u, positive in f.literals:
            arcs.add(SignedArc(bn.names[u], bn.names[v], POS if positive else NEG))
    return SignedDigraph(bn.names, frozenset(arcs))


def _local_pair(bn: BooleanNetwork, u: int, v: int, states: np.ndarray):
    """Boolean arrays (raises, lowers): flipping ``u`` 0->1 raises/lowers f_v."""
    f = bn.functions[v]
    lo = f.evaluate_many(states & ~(1 << u))
    hi = f.evaluate_many(states | (1 << u))
    return lo < hi, lo > hi


def local_arc_masks(bn: BooleanNetwork, states: np.ndarray) -> dict:
    """Map each candidate arc to a boolean array over ``states`` telling
    whether the arc is present in the local graph at that state.

    Every ordered pair of variables is tested, not only declared inputs.
    """
    masks = {}
    for v in range(bn.n):
        for u in range(bn.n):
            up, down = _local_pair(bn, u, v, states)
            if up.any():
                masks[SignedArc(bn.names[u], bn.names[v], POS)] = up
            if down.any():
                masks[SignedArc(bn.names[u], bn.names[v], NEG)] = down
    return masks


def local_ig(bn: BooleanNetwork, x) -> SignedDigraph:
    """Local influence graph at state ``x`` (int or 0/1 string)."""
    if isinstance(x, str):
        if len(x) != bn.n:
            raise ValueError("state length does not match the network")
        x = str_to_state(x)
    states = np.array([x], dtype=np.int64)
    masks = local_arc_masks(bn, states)
    return SignedDigraph(bn.names, frozenset(masks))


def bruteforce_global_ig(bn: BooleanNetwork, max_states: int | None = None) -> SignedDigraph:
    """Union of the local graphs over all 2^n states."""
    check_state_space(bn.n, max_states)
    states = np.arange(1 << bn.n, dtype=np.int64)
    return SignedDigraph(bn.names, frozenset(local_arc_masks(bn, states)))


def induced_subgraph(g: SignedDigraph, b: Iterable) -> SignedDigraph:
    keep = set(b)
    missing = keep - set(g.vertices)
    if missing:
        raise ValueError(f"not vertices of the graph: {sorted(map(str, missing))}")
    vertices = tuple(v for v in g.vertices if v in keep)
    arcs = frozenset(a for a in g.arcs if a.source in keep and a.target in keep)
    return SignedDigraph(vertices, arcs)
