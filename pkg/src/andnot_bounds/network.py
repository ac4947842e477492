"""AND-NOT Boolean networks: representation, ``.anbnet`` text format,
percolation, and the source/pinning transformations.

States are integers: variable ``i`` lives at bit ``i``. The human form is a
0/1 string in variable order, so ``"011"`` means ``a=0, b=1, c=1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Union

import numpy as np

from .errors import (
    DuplicateLiteralError,
    DuplicateTargetError,
    EmptyNetworkError,
    NetworkFormatError,
    NetworkSyntaxError,
    UnknownVariableError,
)

__all__ = [
    "ZERO",
    "ONE",
    "AND",
    "Variable",
    "UpdateFunction",
    "BooleanNetwork",
    "parse_network",
    "serialize_network",
    "read_network",
    "percolate_one_step",
    "percolate_full",
    "make_source",
    "pin_assignment",
    "state_to_str",
    "str_to_state",
]

ZERO = "zero"
ONE = "one"
AND = "and"

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

VarRef = Union[str, int]


class Variable(NamedTuple):
    name: str
    index: int


@dataclass(frozen=True)
class UpdateFunction:
    """A constant or a conjunction of literals.

    ``literals`` is a tuple of ``(variable index, positive)`` pairs sorted by
    index, so two functions are equal iff they denote the same conjunction.
    """

    kind: str
    literals: tuple = ()

    def __post_init__(self):
        if self.kind in (ZERO, ONE):
            if self.literals:
                raise ValueError("constant functions carry no literals")
            return
        if self.kind != AND:
            raise ValueError(f"unknown function kind {self.kind!r}")
        lits = tuple(sorted((int(v), bool(p)) for v, p in self.literals))
        if not lits:
            raise ValueError("a conjunction needs at least one literal")
        seen = [v for v, _ in lits]
        if len(set(seen)) != len(seen):
            raise DuplicateLiteralError("conjunction mentions a variable twice")
        object.__setattr__(self, "literals", lits)

    @classmethod
    def constant(cls, value) -> "UpdateFunction":
        return cls(ONE if value else ZERO)

    @classmethod
    def conjunction(cls, literals: Iterable) -> "UpdateFunction":
        return cls(AND, tuple(literals))

    @property
    def is_constant(self) -> bool:
        return self.kind != AND

    @property
    def value(self):
        """0 or 1 for constants, ``None`` for conjunctions."""
        if self.kind == ZERO:
            return 0
        if self.kind == ONE:
            return 1
        return None

    @property
    def inputs(self) -> tuple:
        return tuple(v for v, _ in self.literals)

    @property
    def pos_mask(self) -> int:
        return sum(1 << v for v, p in self.literals if p)

    @property
    def neg_mask(self) -> int:
        return sum(1 << v for v, p in self.literals if not p)

    def __call__(self, state: int) -> int:
        if self.kind == ZERO:
            return 0
        if self.kind == ONE:
            return 1
        pos, neg = self.pos_mask, self.neg_mask
        return int((state & pos) == pos and (state & neg) == 0)

    def evaluate_many(self, states: np.ndarray) -> np.ndarray:
        """Vectorised evaluation over an integer array of states."""
        if self.kind == ZERO:
            return np.zeros(states.shape, dtype=bool)
        if self.kind == ONE:
            return np.ones(states.shape, dtype=bool)
        pos, neg = self.pos_mask, self.neg_mask
        return ((states & pos) == pos) & ((states & neg) == 0)


@dataclass(frozen=True)
class BooleanNetwork:
    names: tuple
    functions: tuple

    def __post_init__(self):
        names = tuple(self.names)
        functions = tuple(self.functions)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "functions", functions)
        if not names:
            raise EmptyNetworkError("network has no variables")
        if len(names) != len(functions):
            raise NetworkFormatError("one update function per variable is required")
        if len(set(names)) != len(names):
            raise DuplicateTargetError("variable names must be unique")
        for name in names:
            if not NAME_RE.match(name):
                raise NetworkSyntaxError(f"invalid variable name {name!r}")
        n = len(names)
        for f in functions:
            for v, _ in f.literals:
                if not 0 <= v < n:
                    raise UnknownVariableError(f"literal references variable #{v}")

    @classmethod
    def from_dict(cls, functions: Mapping[str, str]) -> "BooleanNetwork":
        """Build from ``{name: expression}`` in ``.anbnet`` expression syntax."""
        text = "\n".join(f"{k}, {v}" for k, v in functions.items())
        return parse_network(text)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def variables(self) -> tuple:
        return tuple(Variable(name, i) for i, name in enumerate(self.names))

    def index(self, v: VarRef) -> int:
        if isinstance(v, Variable):
            return v.index
        if isinstance(v, (int, np.integer)):
            if not 0 <= v < self.n:
                raise IndexError(v)
            return int(v)
        try:
            return self.names.index(v)
        except ValueError:
            raise UnknownVariableError(f"no variable named {v!r}") from None

    def function(self, v: VarRef) -> UpdateFunction:
        return self.functions[self.index(v)]

    def is_source(self, v: VarRef) -> bool:
        i = self.index(v)
        return self.functions[i].literals == ((i, True),)

    def is_constant(self, v: VarRef) -> bool:
        return self.function(v).is_constant

    def constants(self) -> dict:
        """``{index: value}`` for every variable with a constant function."""
        return {i: f.value for i, f in enumerate(self.functions) if f.is_constant}

    def replace(self, updates: Mapping) -> "BooleanNetwork":
        functions = list(self.functions)
        for v, f in updates.items():
            functions[self.index(v)] = f
        return BooleanNetwork(self.names, tuple(functions))

    def format_function(self, v: VarRef) -> str:
        f = self.function(v)
        if f.is_constant:
            return str(f.value)
        return " & ".join(
            ("" if p else "!") + self.names[u] for u, p in f.literals
        )

    def __str__(self):
        return serialize_network(self)


def state_to_str(state: int, n: int) -> str:
    return "".join("1" if (state >> i) & 1 else "0" for i in range(n))


def str_to_state(text: str) -> int:
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a 0/1 state string: {text!r}")
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def _parse_expr(expr: str, lineno: int):
    expr = expr.strip()
    if expr in ("0", "1"):
        return int(expr)
    if not expr:
        raise NetworkSyntaxError("empty update function", lineno)
    literals = []
    for token in expr.split("&"):
        token = token.strip()
        positive = True
        if token.startswith("!"):
            positive = False
            token = token[1:].strip()
        if not NAME_RE.match(token):
            raise NetworkSyntaxError(
                f"expected a literal, got {token!r} (only '&' and '!' are allowed)",
                lineno,
            )
        literals.append((token, positive))
    return literals


def parse_network(text: str) -> BooleanNetwork:
    """Parse ``.anbnet`` text. Variable order is the order of target lines."""
    targets = {}
    order = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "," not in line:
            raise NetworkSyntaxError("expected '<name>, <expression>'", lineno)
        name, expr = (part.strip() for part in line.split(",", 1))
        if not order and name.lower() == "targets" and expr.lower() == "factors":
            continue
        if not NAME_RE.match(name):
            raise NetworkSyntaxError(f"invalid target name {name!r}", lineno)
        if name in targets:
            raise DuplicateTargetError(f"variable {name!r} defined twice", lineno)
        targets[name] = (_parse_expr(expr, lineno), lineno)
        order.append(name)
    if not order:
        raise EmptyNetworkError("no update functions found")

    index = {name: i for i, name in enumerate(order)}
    functions = []
    for name in order:
        parsed, lineno = targets[name]
        if isinstance(parsed, int):
            functions.append(UpdateFunction.constant(parsed))
            continue
        seen = set()
        literals = []
        for var, positive in parsed:
            if var not in index:
                raise UnknownVariableError(
                    f"{var!r} has no update function", lineno
                )
            if var in seen:
                raise DuplicateLiteralError(
                    f"{var!r} appears twice in the function of {name!r}", lineno
                )
            seen.add(var)
            literals.append((index[var], positive))
        functions.append(UpdateFunction.conjunction(literals))
    return BooleanNetwork(tuple(order), tuple(functions))


def serialize_network(bn: BooleanNetwork) -> str:
    return "".join(f"{name}, {bn.format_function(i)}\n" for i, name in enumerate(bn.names))


def read_network(path) -> BooleanNetwork:
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())


def percolate_one_step(bn: BooleanNetwork) -> BooleanNetwork:
    """Substitute the values of currently-constant variables into every
    non-constant function. Constants produced by this step are not
    substituted until the next step."""
    constants = bn.constants()
    if not constants:
        return bn
    functions = []
    for f in bn.functions:
        if f.is_constant:
            functions.append(f)
            continue
        kept = []
        falsified = False
        for v, positive in f.literals:
            if v not in constants:
                kept.append((v, positive))
            elif constants[v] != int(positive):
                falsified = True
                break
        if falsified:
            functions.append(UpdateFunction.constant(0))
        elif not kept:
            functions.append(UpdateFunction.constant(1))
        elif len(kept) == len(f.literals):
            functions.append(f)
        else:
            functions.append(UpdateFunction.conjunction(kept))
    return BooleanNetwork(bn.names, tuple(functions))


def percolate_full(bn: BooleanNetwork, return_steps: bool = False):
    """Iterate :func:`percolate_one_step` to its fixed point.

    With ``return_steps`` the number of applications that changed the
    network is returned alongside it.
    """
    steps = 0
    current = bn
    while True:
        nxt = percolate_one_step(current)
        if nxt == current:
            break
        current = nxt
        steps += 1
    return (current, steps) if return_steps else current


def make_source(bn: BooleanNetwork, variables: Iterable[VarRef]) -> BooleanNetwork:
    """Turn every variable in ``variables`` into a source (``f_v = v``)."""
    updates = {}
    for v in variables:
        i = bn.index(v)
        updates[i] = UpdateFunction.conjunction([(i, True)])
    return bn.replace(updates) if updates else bn


def pin_assignment(bn: BooleanNetwork, assignment: Mapping[VarRef, int]) -> BooleanNetwork:
    """Replace the function of each assigned variable by its constant value."""
    if not assignment:
        return bn
    return bn.replace({v: UpdateFunction.constant(a) for v, a in assignment.items()})
