"""Simple cycles of a signed digraph and their classification.

A cycle is even or odd by its number of negative arcs. It is *strong* when
no vertex sends a positive arc to one cycle vertex and a negative arc to
another (outside the cycle's own arcs), and *inconsistent* when some pivot
reaches two distinct cycle vertices through an all-positive path and a
positive chain of single-input mediators closed by one negative arc.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import CycleBudgetExceeded, PathBudgetExceeded
from .influence import NEG, POS, SignedArc, SignedDigraph, _local_pair, check_state_space
from .network import BooleanNetwork

__all__ = [
    "DEFAULT_MAX_CYCLES",
    "SignedCycle",
    "DelocalizingTriple",
    "InconsistencyWitness",
    "CycleRecord",
    "CycleClassification",
    "enumerate_cycles",
    "cycle_parity",
    "delocalizing_triples",
    "inconsistency_witnesses",
    "classify_cycles",
    "is_local_cycle",
]

DEFAULT_MAX_CYCLES = 10**6


@dataclass(frozen=True)
class SignedCycle:
    arcs: tuple

    def __post_init__(self):
        arcs = tuple(SignedArc(*a) for a in self.arcs)
        if not arcs:
            raise ValueError("a cycle has at least one arc")
        for a, b in zip(arcs, arcs[1:] + arcs[:1]):
            if a.target != b.source:
                raise ValueError("arcs do not chain into a cycle")
        vs = [a.source for a in arcs]
        if len(set(vs)) != len(vs):
            raise ValueError("cycle repeats a vertex")
        object.__setattr__(self, "arcs", arcs)

    @property
    def vertices(self) -> tuple:
        return tuple(a.source for a in self.arcs)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def signs(self) -> tuple:
        return tuple(a.sign for a in self.arcs)

    @property
    def negatives(self) -> int:
        return sum(1 for a in self.arcs if a.sign == NEG)

    @property
    def parity(self) -> str:
        return "even" if self.negatives % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.negatives % 2 == 0

    def __len__(self):
        return len(self.arcs)

    def __str__(self):
        parts = [str(self.arcs[0].source)]
        for a in self.arcs:
            parts.append(f"-({a.sign})-> {a.target}")
        return " ".join(parts)


def cycle_parity(c: SignedCycle) -> str:
    return c.parity


@dataclass(frozen=True)
class DelocalizingTriple:
    pivot: object
    pos_target: object
    neg_target: object
    kind: str  # "internal" | "external"

    def as_tuple(self):
        return (self.pivot, self.pos_target, self.neg_target)


@dataclass(frozen=True)
class InconsistencyWitness:
    pivot: object
    pos_path: tuple
    neg_path: tuple

    @property
    def t(self):
        return self.pos_path[-1].target

    @property
    def u(self):
        return self.neg_path[-1].target

    @property
    def r(self) -> int:
        """Number of mediators on the positive path."""
        return len(self.pos_path) - 1

    @property
    def m(self) -> int:
        """Number of single-input mediators on the negative path."""
        return len(self.neg_path) - 1

    @property
    def mediators(self) -> tuple:
        return tuple(a.target for a in self.neg_path[:-1])

    def to_json(self) -> dict:
        return {
            "pivot": self.pivot,
            "t": self.t,
            "u": self.u,
            "pos_path": [str(a) for a in self.pos_path],
            "neg_path": [str(a) for a in self.neg_path],
        }


def _canonical(vertex_cycle, order):
    k = min(range(len(vertex_cycle)), key=lambda i: order[vertex_cycle[i]])
    return vertex_cycle[k:] + vertex_cycle[:k]


def enumerate_cycles(
    g: SignedDigraph, max_cycles: int = DEFAULT_MAX_CYCLES
) -> list:
    """All simple cycles of ``g``, self-loops included.

    Parallel arcs of opposite sign give distinct signed cycles over the
    same vertex sequence. Each cycle starts at its lowest-ordered vertex and
    the list is sorted by (vertex positions, signs). Raises
    :class:`CycleBudgetExceeded` carrying the sorted partial list when more
    than ``max_cycles`` cycles exist.
    """
    order = g.order()
    signs = {}
    for a in g.arcs:
        signs.setdefault((a.source, a.target), []).append(a.sign)
    for key in signs:
        signs[key].sort()

    dg = nx.DiGraph()
    dg.add_nodes_from(g.vertices)
    dg.add_edges_from(signs)

    found = []
    truncated = False
    for vc in nx.simple_cycles(dg):
        vc = _canonical(list(vc), order)
        pairs = list(zip(vc, vc[1:] + vc[:1]))
        for choice in itertools.product(*(signs[p] for p in pairs)):
            if len(found) >= max_cycles:
                truncated = True
                break
            found.append(SignedCycle(tuple(SignedArc(u, v, s) for (u, v), s in zip(pairs, choice))))
        if truncated:
            break

    found.sort(key=lambda c: (tuple(order[v] for v in c.vertices), c.signs))
    if truncated:
        raise CycleBudgetExceeded(found, max_cycles)
    return found


def delocalizing_triples(g: SignedDigraph, c: SignedCycle) -> list:
    """Triples ``(u, v1, v2)``: arcs ``u -+-> v1`` and ``u --> v2`` in ``g``,
    neither an arc of ``c``, with ``v1 != v2`` both on ``c``."""
    on_cycle = c.vertex_set
    own = set(c.arcs)
    order = g.order()
    pos_into = {}
    neg_into = {}
    for a in g.arcs:
        if a.target not in on_cycle or a in own:
            continue
        bucket = pos_into if a.sign == POS else neg_into
        bucket.setdefault(a.source, []).append(a.target)

    triples = []
    for u in g.vertices:
        for v1 in sorted(pos_into.get(u, ()), key=order.get):
            for v2 in sorted(neg_into.get(u, ()), key=order.get):
                if v1 != v2:
                    kind = "internal" if u in on_cycle else "external"
                    triples.append(DelocalizingTriple(u, v1, v2, kind))
    return triples


def _bfs_paths(start, step, limit):
    """Breadth-first shortest paths from ``start``.

    ``step(v)`` yields arcs to follow out of ``v``. Returns ``(paths, cut)``
    where ``paths`` maps reached vertices (never ``start``) to arc tuples and
    ``cut`` is True when ``limit`` stopped an expansion that could continue.
    """
    paths = {}
    frontier = deque([(start, ())])
    cut = False
    while frontier:
        v, path = frontier.popleft()
        for a in step(v):
            w = a.target
            if w == start or w in paths:
                continue
            if len(path) + 1 > limit:
                cut = True
                continue
            paths[w] = path + (a,)
            frontier.append((w, paths[w]))
    return paths, cut


def inconsistency_witnesses(
    g: SignedDigraph, c: SignedCycle, max_path_len: int | None = None
) -> list:
    """One witness per pivot that makes ``c`` inconsistent, pivots in vertex
    order. An empty list means the cycle is consistent.

    Paths are shortest in arc count, found breadth-first. A path may return
    to the pivot only as a single self-arc. Among valid endpoint pairs the
    one with the shortest combined length is kept, ties by vertex order.
    """
    limit = len(g.vertices) if max_path_len is None else max_path_len
    order = g.order()
    on_cycle = c.vertex_set
    own = set(c.arcs)
    out = {v: g.out_arcs(v) for v in g.vertices}
    in_degree = {v: 0 for v in g.vertices}
    for a in g.arcs:
        in_degree[a.target] += 1

    def positive_steps(v):
        return [a for a in out[v] if a.sign == POS]

    witnesses = []
    cut_any = False
    for k in g.vertices:
        # positive paths k -+-> ... -+-> t
        pos_paths, cut = _bfs_paths(k, positive_steps, limit)
        cut_any |= cut
        if g.has_arc(k, k, POS) and limit >= 1:
            pos_paths[k] = (SignedArc(k, k, POS),)
        pos_ends = {t: p for t, p in pos_paths.items() if t in on_cycle}
        if not pos_ends:
            continue

        # single-input mediators j reachable from k by positive arcs
        mediators, cut = _bfs_paths(
            k,
            lambda v: [a for a in positive_steps(v) if in_degree[a.target] == 1],
            limit - 1,
        )
        cut_any |= cut
        neg_ends = {}
        for s, prefix in [(k, ())] + list(mediators.items()):
            if len(prefix) + 1 > limit:
                cut_any = True
                continue
            for a in out[s]:
                u = a.target
                if a.sign != NEG or u not in on_cycle:
                    continue
                if u == k and s != k:
                    continue
                path = prefix + (a,)
                if u not in neg_ends or len(path) < len(neg_ends[u]):
                    neg_ends[u] = path
        if not neg_ends:
            continue

        # the direct arcs k -+-> t and k --> u, when present, must not be arcs of c
        best = None
        for t, pp in pos_ends.items():
            if SignedArc(k, t, POS) in own:
                continue
            for u, np_ in neg_ends.items():
                if t == u or SignedArc(k, u, NEG) in own:
                    continue
                key = (len(pp) + len(np_), order[t], order[u])
                if best is None or key < best[0]:
                    best = (key, pp, np_)
        if best is not None:
            witnesses.append(InconsistencyWitness(k, best[1], best[2]))

    if cut_any and max_path_len is not None and max_path_len < len(g.vertices):
        raise PathBudgetExceeded(witnesses, max_path_len)
    return witnesses


@dataclass(frozen=True)
class CycleRecord:
    cycle: SignedCycle
    triples: tuple
    witnesses: tuple
    witnesses_complete: bool = True

    @property
    def parity(self) -> str:
        return self.cycle.parity

    @property
    def is_even(self) -> bool:
        return self.cycle.is_even

    @property
    def strong(self) -> bool:
        return not self.triples

    @property
    def consistent(self) -> bool:
        return not self.witnesses

    @property
    def pivots(self) -> tuple:
        return tuple(w.pivot for w in self.witnesses)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.cycle.vertices),
            "signs": list(self.cycle.signs),
            "parity": self.parity,
            "strong": self.strong,
            "consistent": self.consistent,
            "triples": [
                {"u": t.pivot, "v1": t.pos_target, "v2": t.neg_target, "kind": t.kind}
                for t in self.triples
            ],
            "pivots": list(self.pivots),
        }


@dataclass(frozen=True)
class CycleClassification:
    graph: SignedDigraph
    records: tuple
    truncated: bool = False
    paths_truncated: bool = False

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    @property
    def certified(self) -> bool:
        return not (self.truncated or self.paths_truncated)

    def even(self) -> list:
        return [r for r in self.records if r.is_even]

    def to_json(self) -> dict:
        return {
            "cycles": [r.to_json() for r in self.records],
            "truncated": self.truncated or self.paths_truncated,
        }


def classify_cycles(
    g: SignedDigraph,
    max_cycles: int = DEFAULT_MAX_CYCLES,
    max_path_len: int | None = None,
) -> CycleClassification:
    truncated = False
    try:
        cycles = enumerate_cycles(g, max_cycles)
    except CycleBudgetExceeded as exc:
        cycles, truncated = exc.partial, True

    records = []
    paths_truncated = False
    for c in cycles:
        triples = tuple(delocalizing_triples(g, c))
        complete = True
        try:
            witnesses = inconsistency_witnesses(g, c, max_path_len)
        except PathBudgetExceeded as exc:
            witnesses, complete = exc.partial, False
            paths_truncated = True
        rec = CycleRecord(c, triples, tuple(witnesses), complete)
        # every triple is itself a witness with no mediators
        assert rec.strong or not rec.consistent, f"consistent cycle {c} has a triple"
        records.append(rec)
    return CycleClassification(g, tuple(records), truncated, paths_truncated)


def is_local_cycle(bn: BooleanNetwork, c: SignedCycle, max_states: int | None = None):
    """``(True, state)`` if some state's local graph contains every arc of
    ``c``; ``(False, None)`` otherwise. ``state`` is the smallest such one."""
    check_state_space(bn.n, max_states)
    states = np.arange(1 << bn.n, dtype=np.int64)
    present = np.ones(states.shape, dtype=bool)
    for a in c.arcs:
        up, down = _local_pair(bn, bn.index(a.source), bn.index(a.target), states)
        present &= up if a.sign == POS else down
        if not present.any():
            return False, None
    hits = np.flatnonzero(present)
    return True, int(states[hits[0]])
