from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from lazyqw.gates import CoinSpec
from lazyqw.statevector import GateOp, StateVector, apply_inplace, basis_state


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list on ``n`` qutrits (wire 0 = coin).

    ``step_markers[i]`` is the number of ops that make up walk steps
    ``1..i+1``, so ``ops[:step_markers[i]]`` is the circuit for ``i + 1`` steps.
    """

    n: int
    ops: tuple[GateOp, ...]
    step_markers: tuple[int, ...] = ()
    coin: CoinSpec | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))
        object.__setattr__(self, "step_markers", tuple(self.step_markers))
        for i, op in enumerate(self.ops):
            if max(op.wires) >= self.n:
                raise ValueError(f"op {i} uses wire {max(op.wires)} but circuit has {self.n} qutrits")
        if list(self.step_markers) != sorted(self.step_markers) or any(
            not 0 <= m <= len(self.ops) for m in self.step_markers
        ):
            raise ValueError(f"invalid step markers {self.step_markers}")

    def step_slices(self) -> list[tuple[int, int]]:
        bounds = [0, *self.step_markers]
        return list(zip(bounds[:-1], bounds[1:]))


def run(circuit: Circuit, initial: StateVector | None = None) -> StateVector:
    state = basis_state(circuit.n, "0" * circuit.n) if initial is None else initial.copy()
    for op in circuit.ops:
        apply_inplace(op, state.amps, state.n)
    return state


def run_steps(circuit: Circuit, initial: StateVector | None = None) -> list[StateVector]:
    """Snapshots after each step marker (index 0 is the initial state)."""
    state = basis_state(circuit.n, "0" * circuit.n) if initial is None else initial.copy()
    snapshots = [state.copy()]
    for lo, hi in circuit.step_slices():
        for op in circuit.ops[lo:hi]:
            apply_inplace(op, state.amps, state.n)
        snapshots.append(state.copy())
    return snapshots


def circuit_matrix(ops: list[GateOp] | tuple[GateOp, ...], n: int) -> np.ndarray:
    """Dense ``3**n x 3**n`` matrix of an op sequence, built column by column."""
    dim = 3**n
    cols = np.eye(dim, dtype=np.complex128)
    for j in range(dim):
        col = cols[:, j].copy()
        for op in ops:
            apply_inplace(op, col, n)
        cols[:, j] = col
    return cols


def gate_report(circuit: Circuit) -> dict:
    per_step = [hi - lo for lo, hi in circuit.step_slices()]
    return {
        "total_ops": len(circuit.ops),
        "per_step_ops": per_step,
        "max_controls": max((len(op.controls) for op in circuit.ops), default=0),
        "by_kind": dict(sorted(Counter(op.kind for op in circuit.ops).items())),
        "by_control_count": {
            str(k): v for k, v in sorted(Counter(len(op.controls) for op in circuit.ops).items())
        },
    }
