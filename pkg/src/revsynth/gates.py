"""Reversible gates, circuits, and the two generating gate families.

A gate here is always a controlled NOT in the wide sense: one target line,
any set of control lines, each control firing on 1 (positive) or 0
(negative).  Applying a gate to a truth vector rewrites the *values*: every
entry whose bits match all control polarities has its target bit flipped.
That is left multiplication of the vector by the gate's own permutation, the
"gate at the output end" convention.

Two enumerated families generate the full symmetric group on 2^n values:

* ``C_I``: all-positive controls of any arity (NOT, CNOT, Toffoli, ...).
* ``C_H``: controls on every non-target line with arbitrary polarities; each
  such gate swaps exactly the two values that differ in the target bit.

Both families have n * 2^(n-1) members and every member is an involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .perm import TruthVector

LINE_NAMES = "abcdefghijklmnopqrstuvwx"

ENUMERATE_MAX_LINES = 10


def line_name(index: int) -> str:
    if not 0 <= index < len(LINE_NAMES):
        raise ValueError(f"line index {index} out of range [0, {len(LINE_NAMES)})")
    return LINE_NAMES[index]


def line_index(name: str) -> int:
    pos = LINE_NAMES.find(name)
    if pos < 0:
        raise ValueError(f"unknown line name {name!r}")
    return pos


@dataclass(frozen=True)
class Gate:
    """One reversible gate: target line, control set, per-control polarity.

    ``negated`` lists the controls that fire on 0; all other controls fire
    on 1.  No controls at all is a NOT gate.
    """

    n: int
    target: int
    controls: frozenset[int] = frozenset()
    negated: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "controls", frozenset(self.controls))
        object.__setattr__(self, "negated", frozenset(self.negated))
        if not 1 <= self.n <= len(LINE_NAMES):
            raise ValueError(f"line count {self.n} out of range [1, {len(LINE_NAMES)}]")
        if not 0 <= self.target < self.n:
            raise ValueError(f"target {self.target} out of range [0, {self.n})")
        if self.target in self.controls:
            raise ValueError(f"target line {self.target} cannot also be a control")
        for c in self.controls:
            if not 0 <= c < self.n:
                raise ValueError(f"control {c} out of range [0, {self.n})")
        if not self.negated <= self.controls:
            extra = sorted(self.negated - self.controls)
            raise ValueError(f"negated lines {extra} are not controls")

    # -- derived views -------------------------------------------------------

    @property
    def size(self) -> int:
        """Gate size: control count plus one (1 = NOT, 2 = CNOT, 3 = Toffoli)."""
        return len(self.controls) + 1

    @property
    def num_negative(self) -> int:
        return len(self.negated)

    @property
    def control_mask(self) -> int:
        mask = 0
        for c in self.controls:
            mask |= 1 << c
        return mask

    @property
    def value_mask(self) -> int:
        """Bit pattern the controlled lines must carry for the gate to fire."""
        mask = 0
        for c in self.controls:
            if c not in self.negated:
                mask |= 1 << c
        return mask

    def is_g_toffoli(self) -> bool:
        return not self.negated

    def is_mc_toffoli(self) -> bool:
        return len(self.controls) == self.n - 1

    # -- semantics -----------------------------------------------------------

    def fires(self, value: int) -> bool:
        return value & self.control_mask == self.value_mask

    def apply_value(self, value: int) -> int:
        if value & self.control_mask == self.value_mask:
            return value ^ (1 << self.target)
        return value

    def apply(self, tv: TruthVector) -> TruthVector:
        if tv.n != self.n:
            raise ValueError(f"line counts differ: gate {self.n}, vector {tv.n}")
        cm = self.control_mask
        vm = self.value_mask
        flip = 1 << self.target
        return TruthVector(v ^ flip if v & cm == vm else v for v in tv.entries)

    def perm(self) -> TruthVector:
        """The permutation this gate realizes (its action on the identity)."""
        cm = self.control_mask
        vm = self.value_mask
        flip = 1 << self.target
        return TruthVector(
            v ^ flip if v & cm == vm else v for v in range(1 << self.n)
        )

    def spec(self) -> str:
        """Gate in circuit-file notation, e.g. ``t3 a,c',b``."""
        operands = [
            line_name(c) + ("'" if c in self.negated else "")
            for c in sorted(self.controls)
        ]
        operands.append(line_name(self.target))
        return f"t{self.size} {','.join(operands)}"

    def __str__(self) -> str:
        return self.spec()


def not_gate(n: int, target: int) -> Gate:
    return Gate(n, target)

def cnot(n: int, control: int, target: int) -> Gate:
    return Gate(n, target, frozenset({control}))

def toffoli(n: int, controls: Iterable[int], target: int) -> Gate:
    return Gate(n, target, frozenset(controls))

def mc_gate(n: int, target: int, negated: Iterable[int] = ()) -> Gate:
    """Full-control gate: every non-target line controls, given ones on 0."""
    controls = frozenset(range(n)) - {target}
    return Gate(n, target, controls, frozenset(negated))


@dataclass(frozen=True)
class Circuit:
    """An ordered gate cascade over a fixed line count."""

    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if g.n != self.n:
                raise ValueError(
                    f"gate {g.spec()!r} has {g.n} lines, circuit has {self.n}"
                )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.n != other.n:
            raise ValueError(f"line counts differ: {self.n} != {other.n}")
        return Circuit(self.n, self.gates + other.gates)

    def apply(self, tv: TruthVector) -> TruthVector:
        if tv.n != self.n:
            raise ValueError(f"line counts differ: circuit {self.n}, vector {tv.n}")
        return TruthVector(self.apply_entries(list(tv.entries)))

    def apply_entries(self, entries: list[int]) -> list[int]:
        """Fold the gates over a raw entry list (no validation)."""
        for g in self.gates:
            cm = g.control_mask
            vm = g.value_mask
            flip = 1 << g.target
            entries = [v ^ flip if v & cm == vm else v for v in entries]
        return entries

    def inverse(self) -> "Circuit":
        """Reversed cascade; every gate is self-inverse, so gates are reused."""
        return Circuit(self.n, tuple(reversed(self.gates)))

    def perm(self) -> TruthVector:
        return self.apply(TruthVector.identity(self.n))

    def to_text(self) -> str:
        lines = [f".n {self.n}"]
        lines.extend(g.spec() for g in self.gates)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Circuit":
        return parse_circuit(text)


def parse_circuit(text: str) -> Circuit:
    """Parse the circuit file dialect.

    ``# ...`` lines are comments.  The header ``.n <count>`` precedes the
    gates.  Each gate line is ``t<size> <controls...,target>`` with operands
    named a, b, c, ... (a = line 0, the least significant bit); a trailing
    apostrophe marks a control that fires on 0.
    """
    n: int | None = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(".n"):
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate .n header")
            try:
                n = int(line[2:].strip())
            except ValueError:
                raise ValueError(f"line {lineno}: malformed .n header {line!r}") from None
            if not 1 <= n <= len(LINE_NAMES):
                raise ValueError(f"line {lineno}: line count {n} out of range")
            continue
        if n is None:
            raise ValueError(f"line {lineno}: gate before .n header")
        gates.append(_parse_gate(line, n, lineno))
    if n is None:
        raise ValueError("missing .n header")
    return Circuit(n, tuple(gates))


def _parse_gate(line: str, n: int, lineno: int) -> Gate:
    head, _, rest = line.partition(" ")
    if not head.startswith("t"):
        raise ValueError(f"line {lineno}: expected a t<size> gate, got {line!r}")
    try:
        size = int(head[1:])
    except ValueError:
        raise ValueError(f"line {lineno}: malformed gate size in {head!r}") from None
    operands = [op.strip() for op in rest.split(",") if op.strip()]
    if size != len(operands):
        raise ValueError(
            f"line {lineno}: gate size t{size} but {len(operands)} operands"
        )
    if size < 1:
        raise ValueError(f"line {lineno}: gate needs at least a target")
    *control_ops, target_op = operands
    if target_op.endswith("'"):
        raise ValueError(f"line {lineno}: target {target_op!r} cannot be negated")
    controls: set[int] = set()
    negated: set[int] = set()
    used: set[int] = set()
    for op in operands:
        name = op.rstrip("'")
        if len(name) != 1 or name not in LINE_NAMES[:n]:
            raise ValueError(f"line {lineno}: unknown line name {op!r}")
        idx = line_index(name)
        if idx in used:
            raise ValueError(f"line {lineno}: duplicate operand {name!r}")
        used.add(idx)
    for op in control_ops:
        negative = op.endswith("'")
        idx = line_index(op.rstrip("'"))
        controls.add(idx)
        if negative:
            negated.add(idx)
    return Gate(n, line_index(target_op), frozenset(controls), frozenset(negated))


# -- spec-style free functions ------------------------------------------------

def apply_gate(g: Gate, tv: TruthVector) -> TruthVector:
    return g.apply(tv)


def gate_perm(g: Gate) -> TruthVector:
    return g.perm()


def apply_circuit(c: Circuit, tv: TruthVector) -> TruthVector:
    return c.apply(tv)


def invert_circuit(c: Circuit) -> Circuit:
    return c.inverse()


# -- generating sets -----------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    """An enumerated gate family with the permutations its members realize.

    ``label`` is "I" (all-positive, any arity) or "H" (full-control, any
    polarities).  Members are in canonical order: by target line, then by
    control mask, then by polarity pattern, so traversals are deterministic.
    """

    label: str
    n: int
    members: tuple[tuple[Gate, TruthVector], ...]

    def __len__(self) -> int:
        return len(self.members)

    def gates(self) -> list[Gate]:
        return [g for g, _ in self.members]

    def perms(self) -> list[TruthVector]:
        return [p for _, p in self.members]


def enumerate_ci(n: int) -> GeneratorSet:
    """All gates with one target and any set of positive controls."""
    if not 1 <= n <= ENUMERATE_MAX_LINES:
        raise ValueError(f"line count {n} out of range [1, {ENUMERATE_MAX_LINES}]")
    members = []
    for target in range(n):
        others = [l for l in range(n) if l != target]
        for subset in range(1 << (n - 1)):
            controls = frozenset(
                others[i] for i in range(n - 1) if subset >> i & 1
            )
            gate = Gate(n, target, controls)
            members.append(gate)
    members.sort(key=lambda g: (g.target, g.control_mask))
    return GeneratorSet("I", n, tuple((g, g.perm()) for g in members))


def enumerate_ch(n: int) -> GeneratorSet:
    """All full-control gates, one per target and polarity pattern."""
    if not 1 <= n <= ENUMERATE_MAX_LINES:
        raise ValueError(f"line count {n} out of range [1, {ENUMERATE_MAX_LINES}]")
    members = []
    for target in range(n):
        others = [l for l in range(n) if l != target]
        controls = frozenset(others)
        for pattern in range(1 << (n - 1)):
            negated = frozenset(
                others[i] for i in range(n - 1) if not pattern >> i & 1
            )
            members.append(Gate(n, target, controls, negated))
    members.sort(key=lambda g: (g.target, g.control_mask, g.value_mask))
    return GeneratorSet("H", n, tuple((g, g.perm()) for g in members))


def generator_set(label: str, n: int) -> GeneratorSet:
    if label == "I":
        return enumerate_ci(n)
    if label == "H":
        return enumerate_ch(n)
    raise ValueError(f"unknown generator set label {label!r} (expected 'I' or 'H')")
