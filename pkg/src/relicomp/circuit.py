"""Immutable DAG representation of Boolean circuits.

A circuit is a tuple of nodes (inputs, constants, lookup-table gates) plus
an ordered, nonempty list of output node ids.  Gate wiring is ordered and
the first listed wire is the most significant bit of the truth-table row
index.  Node ids are dense integers, stable within one circuit.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence


class SizeLimitError(ValueError):
    """Raised when an exact computation would exceed its enumeration cap."""


@dataclass(frozen=True)
class TruthTable:
    """A gate function over fan_in wires, row-indexed by the input bits."""

    fan_in: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.fan_in < 1:
            raise ValueError(f"fan_in must be >= 1, got {self.fan_in}")
        if len(self.rows) != 2**self.fan_in:
            raise ValueError(
                f"table needs {2 ** self.fan_in} rows for fan_in {self.fan_in}, "
                f"got {len(self.rows)}"
            )
        if any(r not in (0, 1) for r in self.rows):
            raise ValueError("table rows must be bits")

    @classmethod
    def from_bits(cls, bits: str) -> "TruthTable":
        n = len(bits)
        fan_in = n.bit_length() - 1
        return cls(fan_in, tuple(int(b) for b in bits))

    def lookup(self, bits: Sequence[int]) -> int:
        idx = 0
        for b in bits:
            idx = (idx << 1) | b
        return self.rows[idx]

    def bit_string(self) -> str:
        return "".join(str(r) for r in self.rows)


# Three-input majority / minority, plus the usual two-input gates.
MAJ3 = TruthTable.from_bits("00010111")
MIN3 = TruthTable.from_bits("11101000")
NOT = TruthTable.from_bits("10")
AND = TruthTable.from_bits("0001")
OR = TruthTable.from_bits("0111")
NAND = TruthTable.from_bits("1110")
NOR = TruthTable.from_bits("1000")
XOR2 = TruthTable.from_bits("0110")


@dataclass(frozen=True)
class InputNode:
    label: str


@dataclass(frozen=True)
class ConstNode:
    value: int

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise ValueError("constant must be a bit")


@dataclass(frozen=True)
class GateNode:
    table: TruthTable
    inputs: tuple[int, ...]


Node = InputNode | ConstNode | GateNode


@dataclass(frozen=True)
class Circuit:
    """A Boolean circuit; immutable and safe for concurrent read-only use."""

    nodes: tuple[Node, ...]
    outputs: tuple[int, ...]

    @property
    def input_ids(self) -> tuple[int, ...]:
        return tuple(i for i, n in enumerate(self.nodes) if isinstance(n, InputNode))

    @property
    def input_labels(self) -> tuple[str, ...]:
        return tuple(n.label for n in self.nodes if isinstance(n, InputNode))

    @property
    def gate_ids(self) -> tuple[int, ...]:
        return tuple(i for i, n in enumerate(self.nodes) if isinstance(n, GateNode))

    @property
    def n_gates(self) -> int:
        return sum(1 for n in self.nodes if isinstance(n, GateNode))

    @property
    def fan_in(self) -> int:
        """Largest gate fan-in in the circuit (0 if there are no gates)."""
        return max((n.table.fan_in for n in self.nodes if isinstance(n, GateNode)), default=0)

    def parents(self, node_id: int) -> tuple[int, ...]:
        node = self.nodes[node_id]
        return node.inputs if isinstance(node, GateNode) else ()


class CircuitBuilder:
    """Accumulates nodes in topological order, then freezes a Circuit."""

    def __init__(self) -> None:
        self._nodes: list[Node] = []
        self._const_ids: dict[int, int] = {}

    def add_input(self, label: str) -> int:
        self._nodes.append(InputNode(label))
        return len(self._nodes) - 1

    def add_const(self, value: int) -> int:
        self._nodes.append(ConstNode(value))
        return len(self._nodes) - 1

    def shared_const(self, value: int) -> int:
        """A constant node reused across calls with the same value."""
        if value not in self._const_ids:
            self._const_ids[value] = self.add_const(value)
        return self._const_ids[value]

    def add_gate(self, table: TruthTable, inputs: Sequence[int]) -> int:
        for i in inputs:
            if not 0 <= i < len(self._nodes):
                raise ValueError(f"gate wired to unknown node {i}")
        self._nodes.append(GateNode(table, tuple(inputs)))
        return len(self._nodes) - 1

    def build(self, outputs: Sequence[int]) -> Circuit:
        return Circuit(tuple(self._nodes), tuple(outputs))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


def topological_order(circuit: Circuit) -> list[int] | None:
    """Node ids in dependency order, or None if the edge relation has a cycle."""
    n = len(circuit.nodes)
    indeg = [0] * n
    children: list[list[int]] = [[] for _ in range(n)]
    for i, node in enumerate(circuit.nodes):
        if isinstance(node, GateNode):
            for p in node.inputs:
                if 0 <= p < n:
                    children[p].append(i)
                    indeg[i] += 1
    order = [i for i in range(n) if indeg[i] == 0]
    queue = deque(order)
    while queue:
        v = queue.popleft()
        for c in children[v]:
            indeg[c] -= 1
            if indeg[c] == 0:
                queue.append(c)
                order.append(c)
    return order if len(order) == n else None


def validate(circuit: Circuit, fan_in_limit: int | None = None) -> ValidationReport:
    """Check structural invariants; violations are data, not exceptions."""
    violations: list[str] = []
    n = len(circuit.nodes)
    if not circuit.outputs:
        violations.append("no outputs declared")
    for out in circuit.outputs:
        if not 0 <= out < n:
            violations.append(f"output id {out} out of range")
    labels = [node.label for node in circuit.nodes if isinstance(node, InputNode)]
    for label in sorted(set(l for l in labels if labels.count(l) > 1)):
        violations.append(f"duplicate input label {label!r}")
    for i, node in enumerate(circuit.nodes):
        if not isinstance(node, GateNode):
            continue
        for p in node.inputs:
            if not 0 <= p < n:
                violations.append(f"gate {i} wired to dangling id {p}")
        if len(node.inputs) != node.table.fan_in:
            violations.append(
                f"gate {i} has {len(node.inputs)} wires but its table "
                f"has fan_in {node.table.fan_in}"
            )
        if fan_in_limit is not None and node.table.fan_in > fan_in_limit:
            violations.append(f"gate {i} exceeds declared fan-in limit {fan_in_limit}")
    if not any(v.startswith("gate") and "dangling" in v for v in violations):
        if topological_order(circuit) is None:
            violations.append("edge relation has a cycle")
    return ValidationReport(not violations, tuple(violations))


def _resolve_assignment(circuit: Circuit, assignment: Mapping[str, int] | Sequence[int]) -> dict[int, int]:
    values: dict[int, int] = {}
    input_ids = circuit.input_ids
    if isinstance(assignment, Mapping):
        for i in input_ids:
            label = circuit.nodes[i].label  # type: ignore[union-attr]
            if label not in assignment:
                raise ValueError(f"missing assignment for input {label!r}")
            values[i] = int(assignment[label])
    else:
        bits = list(assignment)
        if len(bits) != len(input_ids):
            raise ValueError(
                f"assignment has {len(bits)} bits but circuit has {len(input_ids)} inputs"
            )
        for i, b in zip(input_ids, bits):
            values[i] = int(b)
    for i, b in values.items():
        if b not in (0, 1):
            raise ValueError(f"assignment for node {i} is not a bit")
    return values


def evaluate(circuit: Circuit, assignment: Mapping[str, int] | Sequence[int]) -> tuple[int, ...]:
    """Noiseless topological evaluation; one bit per output."""
    values = _resolve_assignment(circuit, assignment)
    order = topological_order(circuit)
    if order is None:
        raise ValueError("circuit has a cycle")
    for i in order:
        node = circuit.nodes[i]
        if isinstance(node, ConstNode):
            values[i] = node.value
        elif isinstance(node, GateNode):
            values[i] = node.table.lookup([values[p] for p in node.inputs])
    return tuple(values[o] for o in circuit.outputs)


def evaluate_all(circuit: Circuit) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Outputs for every assignment; keyed by input bits in declaration order."""
    n = len(circuit.input_ids)
    if n > 20:
        raise SizeLimitError("exhaustive evaluation capped at 20 inputs")
    return {bits: evaluate(circuit, bits) for bits in itertools.product((0, 1), repeat=n)}


def depth(circuit: Circuit) -> int:
    """Edge-count length of the longest directed path."""
    order = topological_order(circuit)
    if order is None:
        raise ValueError("circuit has a cycle")
    longest = [0] * len(circuit.nodes)
    for i in order:
        node = circuit.nodes[i]
        if isinstance(node, GateNode):
            longest[i] = 1 + max(longest[p] for p in node.inputs)
    return max(longest, default=0)


def shortest_distance(circuit: Circuit, source: int, target: int) -> int | None:
    """Edge count of the shortest directed path, or None when none exists."""
    if source == target:
        return 0
    children = successors(circuit)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for c in children[v]:
            if c not in dist:
                dist[c] = dist[v] + 1
                if c == target:
                    return dist[c]
                queue.append(c)
    return None


def successors(circuit: Circuit) -> list[list[int]]:
    """Child ids per node, ascending, one entry per wire."""
    children: list[list[int]] = [[] for _ in circuit.nodes]
    for i, node in enumerate(circuit.nodes):
        if isinstance(node, GateNode):
            for p in node.inputs:
                children[p].append(i)
    return [sorted(c) for c in children]


def enumerate_paths(circuit: Circuit, source: int, target: int) -> list[tuple[int, ...]]:
    """All directed vertex paths source -> target, lexicographic on node ids."""
    children = successors(circuit)
    dedup = [sorted(set(c)) for c in children]
    paths: list[tuple[int, ...]] = []
    stack = [source]

    def walk(v: int) -> None:
        if v == target:
            paths.append(tuple(stack))
            return
        for c in dedup[v]:
            stack.append(c)
            walk(c)
            stack.pop()

    walk(source)
    return paths


def out_degree(circuit: Circuit, node_id: int) -> int:
    deg = 0
    for node in circuit.nodes:
        if isinstance(node, GateNode):
            deg += sum(1 for p in node.inputs if p == node_id)
    return deg


def is_formula(circuit: Circuit) -> bool:
    """True iff the one-output circuit is tree-shaped with fan-out one."""
    if len(circuit.outputs) != 1:
        raise ValueError("formula check requires a single output")
    out = circuit.outputs[0]
    n = len(circuit.nodes)
    edges = 0
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for i, node in enumerate(circuit.nodes):
        if isinstance(node, GateNode):
            edges += len(node.inputs)
            for p in node.inputs:
                adjacency[i].add(p)
                adjacency[p].add(i)
    for i in range(n):
        if i != out and out_degree(circuit, i) != 1:
            return False
    if edges != n - 1:
        return False
    seen = {out}
    queue = deque([out])
    while queue:
        v = queue.popleft()
        for u in adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == n


def reachable_from(circuit: Circuit, source: int) -> set[int]:
    children = successors(circuit)
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for c in children[v]:
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def co_reachable(circuit: Circuit, targets: Sequence[int]) -> set[int]:
    seen = set(targets)
    queue = deque(targets)
    while queue:
        v = queue.popleft()
        for p in circuit.parents(v):
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def single_gate_circuit(table: TruthTable, labels: Sequence[str] | None = None) -> Circuit:
    """One gate fed by fresh inputs; handy in tests and gadget building."""
    b = CircuitBuilder()
    labels = labels or [f"x{i}" for i in range(table.fan_in)]
    ids = [b.add_input(l) for l in labels]
    g = b.add_gate(table, ids)
    return b.build([g])


def input_id_by_label(circuit: Circuit, label: str) -> int:
    for i in circuit.input_ids:
        if circuit.nodes[i].label == label:  # type: ignore[union-attr]
            return i
    raise ValueError(f"no input labelled {label!r}")


def iter_assignments(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((0, 1), repeat=n)
