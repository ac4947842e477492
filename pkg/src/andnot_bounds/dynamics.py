"""Exhaustive asynchronous dynamics.

The transition graph is held as flat numpy arrays (``src``, ``dst``,
``var``) over integer-encoded states. Attractors are terminal strongly
connected components; ``attractors_trapset_oracle`` recomputes them from the
minimal-trap-set definition and shares no code with the SCC route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .influence import check_state_space
from .network import BooleanNetwork, make_source, pin_assignment, state_to_str

__all__ = [
    "DEFAULT_ORACLE_MAX_STATES",
    "StateTransitionGraph",
    "AttractorSet",
    "build_astg",
    "attractors_scc",
    "attractors_trapset_oracle",
    "attractors",
    "fixed_points",
    "terminal_components",
    "digraph_attractors",
    "attractors_restricted",
    "restricted_union",
]

DEFAULT_ORACLE_MAX_STATES = 1 << 5


@dataclass(frozen=True, eq=False)
class StateTransitionGraph:
    n: int
    src: np.ndarray
    dst: np.ndarray
    var: np.ndarray
    names: tuple = ()

    @property
    def n_states(self) -> int:
        return 1 << self.n

    @property
    def n_transitions(self) -> int:
        return len(self.src)

    def successors(self, state: int) -> list:
        """``[(variable index, successor state), ...]`` sorted by variable."""
        lo = np.searchsorted(self.src, state, side="left")
        hi = np.searchsorted(self.src, state, side="right")
        return sorted(zip(self.var[lo:hi].tolist(), self.dst[lo:hi].tolist()))

    def edges(self) -> set:
        return set(zip(self.src.tolist(), self.dst.tolist()))

    def adjacency(self) -> csr_matrix:
        N = self.n_states
        data = np.ones(len(self.src), dtype=np.int8)
        return csr_matrix((data, (self.src, self.dst)), shape=(N, N))

    def to_edgelist(self) -> str:
        """One ``x -> y`` line per transition, states as 0/1 strings."""
        if self.n > 10:
            raise ValueError("edge-list dumps are limited to n <= 10")
        return "".join(
            f"{state_to_str(x, self.n)} -> {state_to_str(y, self.n)}\n"
            for x, y in zip(self.src.tolist(), self.dst.tolist())
        )


@dataclass(frozen=True)
class AttractorSet:
    n: int
    attractors: tuple  # tuple of frozensets of int states, sorted by min state

    def __len__(self):
        return len(self.attractors)

    def __iter__(self):
        return iter(self.attractors)

    @property
    def kinds(self) -> tuple:
        return tuple("fixed" if len(a) == 1 else "cyclic" for a in self.attractors)

    @property
    def fixed_points(self) -> tuple:
        return tuple(next(iter(a)) for a in self.attractors if len(a) == 1)

    def as_sets(self) -> set:
        return set(self.attractors)

    def as_strings(self) -> list:
        return [sorted(state_to_str(x, self.n) for x in a) for a in self.attractors]

    def to_json(self) -> dict:
        return {
            "attractors": [
                {"states": states, "kind": kind}
                for states, kind in zip(self.as_strings(), self.kinds)
            ],
            "count": len(self.attractors),
        }


def _sorted_attractors(n, groups) -> AttractorSet:
    return AttractorSet(n, tuple(sorted((frozenset(g) for g in groups), key=min)))


def build_astg(bn: BooleanNetwork, max_states: int | None = None) -> StateTransitionGraph:
    check_state_space(bn.n, max_states)
    states = np.arange(1 << bn.n, dtype=np.int64)
    src, dst, var = [], [], []
    for i, f in enumerate(bn.functions):
        current = (states >> i) & 1
        target = f.evaluate_many(states).astype(np.int64)
        moving = states[current != target]
        src.append(moving)
        dst.append(moving ^ (1 << i))
        var.append(np.full(len(moving), i, dtype=np.int64))
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    var = np.concatenate(var)
    perm = np.lexsort((var, src))
    return StateTransitionGraph(bn.n, src[perm], dst[perm], var[perm], bn.names)


def terminal_components(n_vertices: int, src: np.ndarray, dst: np.ndarray) -> list:
    """Terminal SCCs of a digraph on ``0..n_vertices-1`` as lists of vertices."""
    if n_vertices == 0:
        return []
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    adj = csr_matrix(
        (np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n_vertices, n_vertices)
    )
    n_comp, labels = connected_components(adj, directed=True, connection="strong")
    leaves = labels[src] != labels[dst]
    terminal = np.ones(n_comp, dtype=bool)
    terminal[labels[src[leaves]]] = False
    order = np.argsort(labels, kind="stable")
    bounds = np.searchsorted(labels[order], np.arange(n_comp + 1))
    return [
        order[bounds[c]:bounds[c + 1]].tolist() for c in np.flatnonzero(terminal)
    ]


def attractors_scc(stg: StateTransitionGraph) -> AttractorSet:
    return _sorted_attractors(stg.n, terminal_components(stg.n_states, stg.src, stg.dst))


def attractors_trapset_oracle(
    stg: StateTransitionGraph, max_states: int | None = DEFAULT_ORACLE_MAX_STATES
) -> AttractorSet:
    """Attractors as the inclusion-minimal forward-closed state sets.

    The forward closure of every state is a trap set and every trap set
    contains a closure, so the minimal closures are the minimal trap sets.
    Quadratic in the number of states; meant for small networks.
    """
    check_state_space(stg.n, max_states)
    succ = {x: [] for x in range(stg.n_states)}
    for x, y in zip(stg.src.tolist(), stg.dst.tolist()):
        succ[x].append(y)

    closures = set()
    for x in range(stg.n_states):
        seen = {x}
        stack = [x]
        while stack:
            for y in succ[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        closures.add(frozenset(seen))

    minimal = [c for c in closures if not any(d < c for d in closures)]
    return _sorted_attractors(stg.n, minimal)


def attractors(bn: BooleanNetwork, max_states: int | None = None) -> AttractorSet:
    return attractors_scc(build_astg(bn, max_states))


def fixed_points(bn: BooleanNetwork, max_states: int | None = None) -> list:
    """States with ``f_v(x) = x_v`` for every ``v``, ascending."""
    check_state_space(bn.n, max_states)
    states = np.arange(1 << bn.n, dtype=np.int64)
    stable = np.ones(states.shape, dtype=bool)
    for i, f in enumerate(bn.functions):
        stable &= f.evaluate_many(states) == ((states >> i) & 1).astype(bool)
    return states[stable].tolist()


def digraph_attractors(vertices: Iterable, arcs: Iterable) -> list:
    """Terminal SCCs of an arbitrary digraph, as frozensets of vertices,
    sorted by the position of their first vertex in ``vertices``."""
    vertices = list(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    pairs = [(index[u], index[v]) for u, v in arcs]
    src = np.array([p[0] for p in pairs], dtype=np.int64)
    dst = np.array([p[1] for p in pairs], dtype=np.int64)
    comps = terminal_components(len(vertices), src, dst)
    comps.sort(key=min)
    return [frozenset(vertices[i] for i in c) for c in comps]


def attractors_restricted(
    bn: BooleanNetwork,
    u: Iterable,
    x: Mapping,
    max_states: int | None = None,
) -> AttractorSet:
    """Attractors of ``bn`` with ``u`` made into sources and then pinned to
    the values in ``x``: exactly the attractors of the source-ified network
    whose ``u`` coordinates agree with ``x``."""
    u = [bn.index(v) for v in u]
    values = {bn.index(k): int(bool(v)) for k, v in x.items()}
    if set(values) != set(u):
        raise ValueError("assignment must cover exactly the chosen variables")
    pinned = pin_assignment(make_source(bn, u), values)
    return attractors(pinned, max_states)


def restricted_union(bn: BooleanNetwork, u: Iterable, max_states: int | None = None) -> list:
    """All attractors of ``make_source(bn, u)`` assembled from the 2^|u|
    pinned sub-systems."""
    u = sorted(bn.index(v) for v in u)
    found = []
    for bits in itertools.product((0, 1), repeat=len(u)):
        found.extend(attractors_restricted(bn, u, dict(zip(u, bits)), max_states))
    return sorted(found, key=min)
