"""End-to-end analysis, random AND-NOT networks, and verification campaigns."""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .covers import (
    DEFAULT_MAX_NODES,
    DOMINATING,
    EVEN_FVS,
    KINDS,
    STRONG_EVEN_HIT,
    build_constraints,
    hits_all,
    min_hitting_set,
)
from .cycles import DEFAULT_MAX_CYCLES, classify_cycles, is_local_cycle
from .dynamics import (
    attractors,
    attractors_trapset_oracle,
    build_astg,
    fixed_points,
)
from .errors import InvalidConfig, StateSpaceTooLarge
from .influence import DEFAULT_MAX_STATES, bruteforce_global_ig, structural_global_ig
from .network import (
    BooleanNetwork,
    UpdateFunction,
    make_source,
    percolate_full,
    serialize_network,
    state_to_str,
)

__all__ = [
    "MAX_STATES_ENV",
    "default_max_states",
    "AnalyzeOptions",
    "BoundReport",
    "analyze",
    "GeneratorConfig",
    "generate_random",
    "CampaignSummary",
    "verify_campaign",
]

MAX_STATES_ENV = "ANDNOT_BOUNDS_MAX_STATES"

BOUND_LABELS = {
    EVEN_FVS: "even feedback vertex set",
    STRONG_EVEN_HIT: "strong even cycle hitting set",
    DOMINATING: "dominating set",
}


def default_max_states() -> int:
    raw = os.environ.get(MAX_STATES_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_STATES
    try:
        value = int(raw)
    except ValueError:
        raise InvalidConfig(f"{MAX_STATES_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidConfig(f"{MAX_STATES_ENV} must be positive")
    return value


@dataclass
class AnalyzeOptions:
    verify: bool = False
    max_states: int | None = None
    mode: str = "exact"
    max_cycles: int = DEFAULT_MAX_CYCLES
    max_path_len: int | None = None
    max_nodes: int = DEFAULT_MAX_NODES

    def resolved_max_states(self) -> int:
        return default_max_states() if self.max_states is None else self.max_states


@dataclass
class BoundReport:
    network: BooleanNetwork
    classification: object
    families: dict
    witnesses: dict
    oracle_ran: bool = False
    attractors: object = None
    fixed_points: list | None = None
    flags: list = field(default_factory=list)

    @property
    def bounds(self) -> dict:
        return {k: w.bound for k, w in self.witnesses.items()}

    @property
    def fixed_point_bound(self) -> int:
        return self.witnesses[DOMINATING].bound

    def certified(self, kind: str) -> bool:
        return self.families[kind].certified and self.witnesses[kind].certified_minimal

    @property
    def cycle_stats(self) -> dict:
        recs = self.classification.records
        even = [r for r in recs if r.is_even]
        return {
            "total": len(recs),
            "even": len(even),
            "strong_even": sum(1 for r in even if r.strong),
            "consistent_even": sum(1 for r in even if r.consistent),
        }

    @property
    def attractor_count(self):
        return None if self.attractors is None else len(self.attractors)

    @property
    def fixed_point_count(self):
        return None if self.fixed_points is None else len(self.fixed_points)

    @property
    def verdicts(self) -> dict:
        """``PASS``/``FAIL`` per bound; only bounds that are certified and
        checked against a completed oracle run appear."""
        if not self.oracle_ran or self.attractors is None:
            return {}
        out = {}
        for kind in KINDS:
            if self.certified(kind):
                ok = self.attractor_count <= self.witnesses[kind].bound
                out[kind] = "PASS" if ok else "FAIL"
        if self.certified(DOMINATING):
            ok = self.fixed_point_count <= self.fixed_point_bound
            out["fixedPoints"] = "PASS" if ok else "FAIL"
        return out

    @property
    def violated(self) -> bool:
        return any(v == "FAIL" for v in self.verdicts.values())

    def to_json(self) -> dict:
        bn = self.network
        n = bn.n
        data = {
            "network": {
                "n": n,
                "variables": list(bn.names),
                "functions": {name: bn.format_function(i) for i, name in enumerate(bn.names)},
            },
            "cycles": self.classification.to_json()["cycles"],
            "cycle_stats": self.cycle_stats,
            "truncated": not self.classification.certified,
            "witnesses": {
                k: dict(self.witnesses[k].to_json(), certified=self.certified(k))
                for k in KINDS
            },
            "bounds": {
                EVEN_FVS: self.bounds[EVEN_FVS],
                STRONG_EVEN_HIT: self.bounds[STRONG_EVEN_HIT],
                DOMINATING: self.bounds[DOMINATING],
                "fixedPoints": self.fixed_point_bound,
            },
            "oracle": None,
            "verdicts": self.verdicts,
            "flags": list(self.flags),
        }
        if self.oracle_ran and self.attractors is not None:
            data["oracle"] = {
                "attractor_count": self.attractor_count,
                "fixed_point_count": self.fixed_point_count,
                "attractors": self.attractors.to_json()["attractors"],
                "fixed_points": [state_to_str(x, n) for x in self.fixed_points],
            }
        return data

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        bn = self.network
        lines = [f"Network with {bn.n} variables ({', '.join(bn.names)})"]
        for i, name in enumerate(bn.names):
            lines.append(f"  f_{name} = {bn.format_function(i)}")
        stats = self.cycle_stats
        lines.append("")
        lines.append(
            f"Influence graph cycles: {stats['total']} total, {stats['even']} even, "
            f"{stats['strong_even']} strong even, {stats['consistent_even']} consistent even"
        )
        for rec in self.classification.records:
            tags = [rec.parity, "strong" if rec.strong else "not strong"]
            if rec.is_even:
                tags.append("consistent" if rec.consistent else "inconsistent")
            lines.append(f"  {rec.cycle}  [{', '.join(tags)}]")
            for t in rec.triples:
                lines.append(
                    f"    {t.kind} delocalizing triple ({t.pivot}, {t.pos_target}, {t.neg_target})"
                )
            if rec.is_even and rec.strong:
                for w in rec.witnesses:
                    pos = " ".join(str(a) for a in w.pos_path)
                    neg = " ".join(str(a) for a in w.neg_path)
                    lines.append(f"    pivot {w.pivot}: positive path [{pos}], negative path [{neg}]")
        if self.classification.truncated:
            lines.append("  (cycle enumeration truncated: bounds are not certified)")
        lines.append("")
        lines.append("Witness sets and bounds:")
        for kind in KINDS:
            w = self.witnesses[kind]
            members = "{" + ", ".join(map(str, w.members)) + "}"
            note = "" if self.certified(kind) else " (not certified)"
            lines.append(f"  {BOUND_LABELS[kind]}: {members} -> at most {w.bound} attractors{note}")
        lines.append(f"  fixed points: at most {self.fixed_point_bound}")
        if self.oracle_ran and self.attractors is not None:
            lines.append("")
            lines.append(
                f"Exhaustive check: {self.attractor_count} attractor(s), "
                f"{self.fixed_point_count} fixed point(s)"
            )
            for states, kind in zip(self.attractors.as_strings(), self.attractors.kinds):
                lines.append(f"  {kind}: {{{', '.join(states)}}}")
            for kind, verdict in self.verdicts.items():
                lines.append(f"  {kind}: {verdict}")
        for flag in self.flags:
            lines.append(f"note: {flag}")
        return "\n".join(lines) + "\n"


def analyze(bn: BooleanNetwork, options: AnalyzeOptions | None = None) -> BoundReport:
    options = options or AnalyzeOptions()
    g = structural_global_ig(bn)
    classification = classify_cycles(g, options.max_cycles, options.max_path_len)
    flags = []
    if classification.truncated:
        flags.append(f"cycle enumeration stopped after {options.max_cycles} cycles")
    if classification.paths_truncated:
        flags.append(f"witness paths limited to {options.max_path_len} arcs")

    families = {k: build_constraints(classification, k) for k in KINDS}
    witnesses = {}
    for kind in KINDS:
        w = min_hitting_set(families[kind], options.mode, options.max_nodes)
        assert hits_all(w.members, families[kind])
        if w.budget_exceeded:
            flags.append(f"{kind}: exact search budget exhausted, greedy set used")
        witnesses[kind] = w

    report = BoundReport(bn, classification, families, witnesses, flags=flags)
    if options.verify:
        try:
            cap = options.resolved_max_states()
            report.attractors = attractors(bn, cap)
            report.fixed_points = fixed_points(bn, cap)
            report.oracle_ran = True
        except StateSpaceTooLarge as exc:
            flags.append(f"oracle skipped: {exc}")
    return report


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    seed: int = 0
    min_lits: int = 1
    max_lits: int = 3
    neg_prob: float = 0.5
    const_prob: float = 0.05

    def validate(self) -> "GeneratorConfig":
        if self.n < 1:
            raise InvalidConfig("need at least one variable")
        max_lits = min(self.max_lits, self.n)
        if not 1 <= self.min_lits <= max_lits:
            raise InvalidConfig(
                f"literal counts must satisfy 1 <= min ({self.min_lits}) <= max ({max_lits}) <= n"
            )
        for name in ("neg_prob", "const_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise InvalidConfig(f"{name} must lie in [0, 1], got {p}")
        return self


def generate_random(config: GeneratorConfig) -> BooleanNetwork:
    """Random AND-NOT network; identical configs give identical networks.

    ``max_lits`` is clipped to ``n``.
    """
    config.validate()
    n = config.n
    rng = np.random.default_rng(config.seed)
    max_lits = min(config.max_lits, n)
    functions = []
    for _ in range(n):
        if rng.random() < config.const_prob:
            functions.append(UpdateFunction.constant(int(rng.integers(2))))
            continue
        k = int(rng.integers(config.min_lits, max_lits + 1))
        inputs = rng.choice(n, size=k, replace=False)
        negated = rng.random(k) < config.neg_prob
        functions.append(
            UpdateFunction.conjunction(
                (int(v), not bool(neg)) for v, neg in zip(inputs, negated)
            )
        )
    names = tuple(f"x{i}" for i in range(n))
    return BooleanNetwork(names, tuple(functions))


CHECKS = (
    "evenFVS_bound",
    "strong_even_bound",
    "dominating_bound",
    "fixed_points_le_attractors",
    "unique_without_strong_even",
    "percolation_preserves_attractors",
    "percolation_shrinks_ig",
    "structural_equals_bruteforce",
    "local_cycles_strong",
    "source_injection",
)


@dataclass
class CampaignSummary:
    config: GeneratorConfig
    samples: int
    checked: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    skipped: int = 0

    @property
    def violation_counts(self) -> dict:
        counts = Counter(v["check"] for v in self.violations)
        return {c: counts.get(c, 0) for c in CHECKS}

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "config": {
                "n": self.config.n,
                "seed": self.config.seed,
                "min_lits": self.config.min_lits,
                "max_lits": self.config.max_lits,
                "neg_prob": self.config.neg_prob,
                "const_prob": self.config.const_prob,
            },
            "samples": self.samples,
            "skipped": self.skipped,
            "checked": {c: self.checked.get(c, 0) for c in CHECKS},
            "violation_counts": self.violation_counts,
            "violations": self.violations,
        }


def sample_seeds(seed: int, count: int) -> list:
    rng = np.random.default_rng(seed)
    return [int(s) for s in rng.integers(0, 2**63 - 1, size=count, dtype=np.int64)]


def _attractor_count_confirmed(bn: BooleanNetwork, scc_count: int) -> bool:
    """Recount attractors through the trap-set definition."""
    stg = build_astg(bn, 1 << bn.n)
    return len(attractors_trapset_oracle(stg, max_states=1 << bn.n)) == scc_count


def check_network(bn: BooleanNetwork, options: AnalyzeOptions | None = None):
    """Run every campaign property on one network.

    Returns ``(checked, violations)``: the names of properties that were
    applicable, and ``(check, detail)`` pairs for failures.
    """
    options = options or AnalyzeOptions()
    report = analyze(bn, AnalyzeOptions(**{**options.__dict__, "verify": True}))
    checked = []
    violations = []

    def record(name, ok, detail=""):
        checked.append(name)
        if not ok:
            violations.append((name, detail))

    if not report.oracle_ran:
        return checked, violations

    count = report.attractor_count
    fps = report.fixed_point_count

    for kind, name in (
        (EVEN_FVS, "evenFVS_bound"),
        (STRONG_EVEN_HIT, "strong_even_bound"),
        (DOMINATING, "dominating_bound"),
    ):
        if report.certified(kind):
            bound = report.witnesses[kind].bound
            ok = count <= bound
            if not ok and not _attractor_count_confirmed(bn, count):
                record(name, False, f"SCC count {count} disagrees with trap-set oracle")
                continue
            record(
                name,
                ok,
                f"{count} attractors > 2^{len(report.witnesses[kind])} "
                f"(witness {list(report.witnesses[kind].members)})",
            )

    record("fixed_points_le_attractors", fps <= count, f"{fps} fixed points, {count} attractors")

    if report.certified(STRONG_EVEN_HIT) and not report.families[STRONG_EVEN_HIT].constraints:
        ok = count == 1
        detail = f"{count} attractors without strong even cycles"
        if not ok and not _attractor_count_confirmed(bn, count):
            detail = f"SCC count {count} disagrees with trap-set oracle"
        record("unique_without_strong_even", ok, detail)

    percolated = percolate_full(bn)
    same = attractors(percolated, options.resolved_max_states()).as_sets() == report.attractors.as_sets()
    record("percolation_preserves_attractors", same, "attractor sets differ after percolation")

    g = structural_global_ig(bn)
    gp = structural_global_ig(percolated)
    record(
        "percolation_shrinks_ig",
        gp.vertices == g.vertices and gp.arcs <= g.arcs,
        "percolated graph has arcs the original lacks",
    )

    brute = bruteforce_global_ig(bn, options.resolved_max_states())
    record(
        "structural_equals_bruteforce",
        brute == g,
        f"arc symmetric difference {sorted(map(str, brute.arcs ^ g.arcs))}",
    )

    if report.classification.certified:
        bad = []
        for rec in report.classification.records:
            local, _ = is_local_cycle(bn, rec.cycle, options.resolved_max_states())
            if local and not rec.strong:
                bad.append(str(rec.cycle))
        record("local_cycles_strong", not bad, f"local cycles with triples: {bad}")

    if report.certified(STRONG_EVEN_HIT):
        sourced = make_source(bn, report.witnesses[STRONG_EVEN_HIT].members)
        record(
            "source_injection",
            count <= len(attractors(sourced, options.resolved_max_states())),
            "making witness variables sources lost attractors",
        )
    return checked, violations


def verify_campaign(
    config: GeneratorConfig, samples: int, options: AnalyzeOptions | None = None
) -> CampaignSummary:
    """Generate ``samples`` networks from ``config.seed`` and check every
    property on each. Violations keep the offending network text verbatim."""
    config.validate()
    options = options or AnalyzeOptions()
    summary = CampaignSummary(config, samples)
    for i, seed in enumerate(sample_seeds(config.seed, samples)):
        bn = generate_random(GeneratorConfig(**{**config.__dict__, "seed": seed}))
        try:
            checked, violations = check_network(bn, options)
        except StateSpaceTooLarge:
            summary.skipped += 1
            continue
        summary.checked.update(checked)
        for name, detail in violations:
            summary.violations.append(
                {
                    "sample": i,
                    "seed": seed,
                    "check": name,
                    "detail": detail,
                    "network": serialize_network(bn),
                }
            )
    summary.violations.sort(key=lambda v: (v["sample"], v["check"]))
    return summary
