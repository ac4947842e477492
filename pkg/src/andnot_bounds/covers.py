"""Witness vertex sets: even feedback vertex sets, strong-even-cycle
hitting sets and dominating sets, all phrased as hitting-set instances."""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import CycleClassification
from .errors import ExactBudgetExceeded

__all__ = [
    "EVEN_FVS",
    "STRONG_EVEN_HIT",
    "DOMINATING",
    "KINDS",
    "DEFAULT_MAX_NODES",
    "ConstraintFamily",
    "WitnessSet",
    "build_constraints",
    "min_hitting_set",
    "hits_all",
]

EVEN_FVS = "evenFVS"
STRONG_EVEN_HIT = "strongEvenHit"
DOMINATING = "dominating"
KINDS = (EVEN_FVS, STRONG_EVEN_HIT, DOMINATING)

DEFAULT_MAX_NODES = 10**6


@dataclass(frozen=True)
class ConstraintFamily:
    """Sets that a witness must each intersect.

    ``universe`` fixes the element order used for every tie-break.
    ``certified`` is False when the family was built from a truncated cycle
    enumeration and may therefore be missing constraints.
    """

    kind: str
    universe: tuple
    constraints: tuple  # ((label, frozenset), ...)
    certified: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        known = set(self.universe)
        cons = tuple((label, frozenset(s)) for label, s in self.constraints)
        for label, s in cons:
            if not s:
                raise ValueError(f"constraint {label!r} is empty and cannot be hit")
            if not s <= known:
                raise ValueError(f"constraint {label!r} leaves the universe")
        object.__setattr__(self, "constraints", cons)

    def __len__(self):
        return len(self.constraints)

    @property
    def sets(self) -> list:
        return [s for _, s in self.constraints]


@dataclass(frozen=True)
class WitnessSet:
    members: tuple
    certified_minimal: bool
    method: str  # "exact" | "greedy"
    budget_exceeded: bool = False

    def __len__(self):
        return len(self.members)

    @property
    def bound(self) -> int:
        return 2 ** len(self.members)

    def to_json(self) -> dict:
        return {
            "members": list(self.members),
            "size": len(self.members),
            "certified_minimal": self.certified_minimal,
            "method": self.method,
        }


def build_constraints(classification: CycleClassification, kind: str) -> ConstraintFamily:
    """Turn classified cycles into a constraint family.

    evenFVS: every even cycle. strongEvenHit: every strong even cycle.
    dominating: consistent even cycles as-is; strong but inconsistent even
    cycles extended by all of their pivots; nothing else.
    """
    constraints = []
    for rec in classification.records:
        if not rec.is_even:
            continue
        label = str(rec.cycle)
        vs = rec.cycle.vertex_set
        if kind == EVEN_FVS:
            constraints.append((label, vs))
        elif kind == STRONG_EVEN_HIT:
            if rec.strong:
                constraints.append((label, vs))
        elif kind == DOMINATING:
            if rec.consistent:
                constraints.append((label, vs))
            elif rec.strong:
                constraints.append((label, vs | frozenset(rec.pivots)))
        else:
            raise ValueError(f"unknown constraint kind {kind!r}")
    return ConstraintFamily(
        kind, classification.graph.vertices, tuple(constraints), classification.certified
    )


def hits_all(members, family: ConstraintFamily) -> bool:
    chosen = set(members)
    return all(chosen & s for s in family.sets)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class _Search:
    """Branch and bound over bitmask constraints with a shared node budget."""

    def __init__(self, constraints, max_nodes):
        self.constraints = constraints
        self.max_nodes = max_nodes
        self.nodes = 0

    def _lower_bound(self, unhit, excluded):
        used = 0
        count = 0
        for c in sorted(unhit, key=lambda c: bin(c & ~excluded).count("1")):
            avail = c & ~excluded
            if not avail:
                return None
            if not avail & used:
                used |= avail
                count += 1
        return count

    def smaller_than(self, chosen, excluded, bound):
        """A hitting set containing ``chosen``, avoiding ``excluded``, with
        fewer than ``bound`` elements, smallest such; ``None`` if none."""
        best = [None, bound]

        def rec(chosen, excluded, size):
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise ExactBudgetExceeded(self.max_nodes)
            unhit = [c for c in self.constraints if not c & chosen]
            if not unhit:
                best[0], best[1] = chosen, size
                return
            lb = self._lower_bound(unhit, excluded)
            if lb is None or size + lb >= best[1]:
                return
            branch = min(unhit, key=lambda c: (bin(c & ~excluded).count("1"), c))
            for bit in _bits(branch & ~excluded):
                rec(chosen | bit, excluded, size + 1)
                excluded |= bit

        rec(chosen, excluded, bin(chosen).count("1"))
        return best[0]


def _greedy(masks, n):
    chosen = 0
    unhit = list(masks)
    while unhit:
        counts = [sum(1 for c in unhit if c >> i & 1) for i in range(n)]
        pick = max(range(n), key=lambda i: (counts[i], -i))
        chosen |= 1 << pick
        unhit = [c for c in unhit if not c >> pick & 1]
    return chosen


def min_hitting_set(
    family: ConstraintFamily, mode: str = "exact", max_nodes: int = DEFAULT_MAX_NODES
) -> WitnessSet:
    """Smallest set meeting every constraint.

    Exact mode first finds the optimum size by branch and bound, then picks
    the lexicographically first optimal set (elements compared by universe
    order) so results are reproducible. When the node budget runs out the
    greedy answer is returned with ``budget_exceeded`` set.
    """
    if mode not in ("exact", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    universe = family.universe
    pos = {v: i for i, v in enumerate(universe)}
    n = len(universe)
    masks = sorted({sum(1 << pos[v] for v in s) for s in family.sets})

    def to_members(mask):
        return tuple(universe[i] for i in range(n) if mask >> i & 1)

    if not masks:
        return WitnessSet((), family.certified, mode)

    greedy = _greedy(masks, n)
    if mode == "greedy":
        return WitnessSet(to_members(greedy), False, "greedy")

    # drop constraints implied by a subset constraint
    minimal = [c for c in masks if not any(d != c and d & c == d for d in masks)]
    search = _Search(minimal, max_nodes)
    try:
        better = search.smaller_than(0, 0, bin(greedy).count("1"))
        k = bin(better if better is not None else greedy).count("1")

        chosen = 0
        for _ in range(k):
            last = chosen.bit_length()
            for i in range(last, n):
                trial = chosen | 1 << i
                below = ((1 << (i + 1)) - 1) & ~trial
                if search.smaller_than(trial, below, k + 1) is not None:
                    chosen = trial
                    break
            else:  # pragma: no cover - the optimum exists by construction
                raise AssertionError("lexicographic reconstruction failed")
            if all(c & chosen for c in minimal):
                break
    except ExactBudgetExceeded:
        return WitnessSet(to_members(greedy), False, "greedy", budget_exceeded=True)

    return WitnessSet(to_members(chosen), family.certified, "exact")
