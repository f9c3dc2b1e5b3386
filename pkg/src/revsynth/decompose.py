"""Expansion of wide controlled gates into Toffoli-sized networks.

Three constructions, all verified by exhaustive classical simulation:

* a zeroed-ancilla chain: s - 3 ancilla initialized to 0 accumulate the
  control conjunction pairwise, one gate fires the target, and the mirror
  image restores the ancilla (2s - 5 gates for a size-s gate);
* a borrowed-ancilla network: s - 3 helper lines in *arbitrary* states,
  restored on every input, in a doubled-V pattern (4(s - 3) gates);
* a split into two half-size gates G1 G2 G1 G2 through one borrowed line,
  and its full expansion down to size <= 3 gates.

Negative controls stay on the original control lines; every helper-mediated
control is positive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .gates import Circuit, Gate

VERIFY_MAX_LINES = 22


class AncillaMode(enum.Enum):
    ZEROED_RESTORED = "zeroed"
    BORROWED_RESTORED = "borrowed"


@dataclass(frozen=True)
class AncillaCircuit:
    """A circuit over principal lines plus helper (ancilla) lines.

    In ZEROED_RESTORED mode correctness is promised only when the ancilla
    start at 0; in BORROWED_RESTORED mode for any initial ancilla values.
    Both modes restore the ancilla on every input.
    """

    principal_lines: int
    ancilla_lines: int
    ancilla_mode: AncillaMode
    gates: Circuit

    def __post_init__(self):
        if self.ancilla_lines < 0:
            raise ValueError("ancilla line count cannot be negative")
        if self.gates.n != self.total_lines:
            raise ValueError(
                f"gates span {self.gates.n} lines, expected "
                f"{self.principal_lines} principal + {self.ancilla_lines} ancilla"
            )

    @property
    def total_lines(self) -> int:
        return self.principal_lines + self.ancilla_lines


def _sorted_controls(g: Gate) -> list[int]:
    return sorted(g.controls)


def _sub_negated(negated: frozenset[int], lines) -> frozenset[int]:
    return negated & frozenset(lines)


def ladder_zeroed(g: Gate) -> AncillaCircuit:
    """Zeroed-ancilla chain expansion of a size >= 4 gate: 2s - 5 gates."""
    s = g.size
    if s < 4:
        raise ValueError(f"zeroed ladder needs gate size >= 4, got {s}")
    xs = _sorted_controls(g)
    total = g.n + (s - 3)
    anc = list(range(g.n, total))
    neg = g.negated

    compute = [Gate(total, anc[0], frozenset(xs[:2]), _sub_negated(neg, xs[:2]))]
    for k in range(1, s - 3):
        compute.append(
            Gate(
                total,
                anc[k],
                frozenset({anc[k - 1], xs[k + 1]}),
                _sub_negated(neg, [xs[k + 1]]),
            )
        )
    fire = Gate(
        total,
        g.target,
        frozenset({anc[-1], xs[-1]}),
        _sub_negated(neg, [xs[-1]]),
    )
    gates = compute + [fire] + compute[::-1]
    return AncillaCircuit(g.n, s - 3, AncillaMode.ZEROED_RESTORED, Circuit(total, gates))


def _borrowed_network(
    total: int,
    target: int,
    xs: list[int],
    negated: frozenset[int],
    borrowed: list[int],
) -> list[Gate]:
    """Doubled-V borrowed-bit network computing the conjunction of ``xs``.

    ``borrowed`` supplies len(xs) - 2 helper lines with arbitrary contents;
    all are restored.  Works from 3 controls up (one borrowed line).
    """
    if len(borrowed) != len(xs) - 2:
        raise ValueError(f"need {len(xs) - 2} borrowed lines, got {len(borrowed)}")
    top = Gate(
        total,
        target,
        frozenset({xs[-1], borrowed[-1]}),
        _sub_negated(negated, [xs[-1]]),
    )
    tb = [Gate(total, borrowed[0], frozenset(xs[:2]), _sub_negated(negated, xs[:2]))]
    for k in range(1, len(borrowed)):
        tb.append(
            Gate(
                total,
                borrowed[k],
                frozenset({borrowed[k - 1], xs[k + 1]}),
                _sub_negated(negated, [xs[k + 1]]),
            )
        )
    chain = tb[:0:-1] + tb  # descending to tb[0], then back up
    return [top] + chain + [top] + chain


def ladder_borrowed(g: Gate) -> AncillaCircuit:
    """Borrowed-ancilla expansion of a size >= 5 gate: 4(s - 3) gates."""
    s = g.size
    if s < 5:
        raise ValueError(f"borrowed ladder needs gate size >= 5, got {s}")
    total = g.n + (s - 3)
    borrowed = list(range(g.n, total))
    gates = _borrowed_network(total, g.target, _sorted_controls(g), g.negated, borrowed)
    return AncillaCircuit(g.n, s - 3, AncillaMode.BORROWED_RESTORED, Circuit(total, gates))


def split_one_borrowed(g: Gate) -> tuple[Gate, Gate, Gate, Gate]:
    """Split a size >= 5 gate into G1 G2 G1 G2 through one borrowed line.

    The controls are cut into a larger first half (feeding G1, which targets
    a free line) and the rest (feeding G2 together with the positive borrowed
    control).  The free line is restored because G1 fires twice.
    """
    s = g.size
    if s < 5:
        raise ValueError(f"split needs gate size >= 5, got {s}")
    free = sorted(frozenset(range(g.n)) - g.controls - {g.target})
    if not free:
        raise ValueError("split needs a free line to borrow")
    borrow = free[0]
    xs = _sorted_controls(g)
    first = (s + 2) // 2
    s1, s2 = xs[:first], xs[first:]
    g1 = Gate(g.n, borrow, frozenset(s1), _sub_negated(g.negated, s1))
    g2 = Gate(g.n, g.target, frozenset(s2) | {borrow}, _sub_negated(g.negated, s2))
    return (g1, g2, g1, g2)


def expand_one_garbage(g: Gate) -> AncillaCircuit:
    """Full expansion of a size >= 5 gate to size <= 3 gates with one garbage.

    The gate is first split through a borrowed line (an unused principal line
    when one exists, otherwise a single added ancilla), then each oversized
    half is expanded by the borrowed-bit network using lines the half does
    not touch.
    """
    s = g.size
    if s < 5:
        raise ValueError(f"one-garbage expansion needs gate size >= 5, got {s}")
    has_free = len(g.controls) + 1 < g.n
    total = g.n if has_free else g.n + 1
    lifted = Gate(total, g.target, g.controls, g.negated)
    sequence: list[Gate] = []
    for sub in split_one_borrowed(lifted):
        if sub.size <= 3:
            sequence.append(sub)
            continue
        pool = sorted(frozenset(range(total)) - sub.controls - {sub.target})
        need = sub.size - 3
        if len(pool) < need:
            raise ValueError(
                f"sub-gate of size {sub.size} needs {need} borrowed lines, "
                f"only {len(pool)} free"
            )
        sequence.extend(
            _borrowed_network(
                total, sub.target, _sorted_controls(sub), sub.negated, pool[:need]
            )
        )
    return AncillaCircuit(
        g.n,
        total - g.n,
        AncillaMode.BORROWED_RESTORED,
        Circuit(total, sequence),
    )


@dataclass(frozen=True)
class VerificationResult:
    equivalent: bool
    inputs_checked: int
    counterexample: int | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def _fold_gates(state: np.ndarray, gates) -> np.ndarray:
    for g in gates:
        cm = np.uint32(g.control_mask)
        vm = np.uint32(g.value_mask)
        flip = np.uint32(1 << g.target)
        state = state ^ np.where((state & cm) == vm, flip, np.uint32(0))
    return state


def verify_equivalence(spec: Gate, impl: AncillaCircuit) -> VerificationResult:
    """Exhaustively check that ``impl`` realizes ``spec`` and restores ancilla.

    Simulates every input word over the principal + ancilla lines (ancilla
    pinned to 0 in zeroed mode), comparing the principal output with the
    gate's own action and requiring the ancilla bits back in their initial
    state.  Returns the first failing input word on disagreement.
    """
    if spec.n != impl.principal_lines:
        raise ValueError(
            f"gate spans {spec.n} lines, circuit declares {impl.principal_lines}"
        )
    total = impl.total_lines
    if total > VERIFY_MAX_LINES:
        raise ValueError(f"{total} lines exceeds the {VERIFY_MAX_LINES}-line verification budget")
    if impl.ancilla_mode is AncillaMode.ZEROED_RESTORED:
        words = np.arange(1 << spec.n, dtype=np.uint32)
    else:
        words = np.arange(1 << total, dtype=np.uint32)
    state = _fold_gates(words, impl.gates.gates)

    pmask = np.uint32((1 << spec.n) - 1)
    principal = words & pmask
    cm = np.uint32(spec.control_mask)
    vm = np.uint32(spec.value_mask)
    flip = np.uint32(1 << spec.target)
    expected = principal ^ np.where((principal & cm) == vm, flip, np.uint32(0))

    ok = ((state & pmask) == expected) & ((state >> spec.n) == (words >> spec.n))
    if bool(ok.all()):
        return VerificationResult(True, len(words))
    bad = int(np.argmin(ok))
    return VerificationResult(False, len(words), int(words[bad]))


def verify_circuit_equivalence(spec: Circuit, impl: AncillaCircuit) -> VerificationResult:
    """Like :func:`verify_equivalence` but against a whole reference circuit."""
    if spec.n != impl.principal_lines:
        raise ValueError(
            f"circuit spans {spec.n} lines, expansion declares {impl.principal_lines}"
        )
    total = impl.total_lines
    if total > VERIFY_MAX_LINES:
        raise ValueError(f"{total} lines exceeds the {VERIFY_MAX_LINES}-line verification budget")
    if impl.ancilla_mode is AncillaMode.ZEROED_RESTORED:
        words = np.arange(1 << spec.n, dtype=np.uint32)
    else:
        words = np.arange(1 << total, dtype=np.uint32)
    state = _fold_gates(words, impl.gates.gates)

    pmask = np.uint32((1 << spec.n) - 1)
    expected = _fold_gates(words & pmask, spec.gates)
    ok = ((state & pmask) == expected) & ((state >> spec.n) == (words >> spec.n))
    if bool(ok.all()):
        return VerificationResult(True, len(words))
    bad = int(np.argmin(ok))
    return VerificationResult(False, len(words), int(words[bad]))


DECOMPOSE_STRATEGIES = ("zeroed", "borrowed", "one-garbage")


def expand_circuit(circuit: Circuit, strategy: str) -> AncillaCircuit:
    """Expand every oversized gate of a circuit with one shared ancilla pool.

    Gates already small enough for the strategy pass through unchanged.
    All expansions restore their helpers, so consecutive gates reuse the
    same pool.
    """
    if strategy not in DECOMPOSE_STRATEGIES:
        raise ValueError(
            f"unknown strategy {strategy!r} (expected one of {', '.join(DECOMPOSE_STRATEGIES)})"
        )
    if strategy == "zeroed":
        expander, threshold, mode = ladder_zeroed, 4, AncillaMode.ZEROED_RESTORED
    elif strategy == "borrowed":
        expander, threshold, mode = ladder_borrowed, 5, AncillaMode.BORROWED_RESTORED
    else:
        expander, threshold, mode = expand_one_garbage, 5, AncillaMode.BORROWED_RESTORED

    pieces: list[tuple[Gate, ...] | AncillaCircuit] = []
    pool = 0
    for g in circuit.gates:
        if g.size < threshold:
            pieces.append((g,))
        else:
            expansion = expander(g)
            pool = max(pool, expansion.ancilla_lines)
            pieces.append(expansion)

    total = circuit.n + pool
    gates: list[Gate] = []
    for piece in pieces:
        if isinstance(piece, AncillaCircuit):
            for g in piece.gates.gates:
                gates.append(Gate(total, g.target, g.controls, g.negated))
        else:
            for g in piece:
                gates.append(Gate(total, g.target, g.controls, g.negated))
    return AncillaCircuit(circuit.n, pool, mode, Circuit(total, gates))
