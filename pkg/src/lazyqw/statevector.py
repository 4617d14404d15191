"""Dense statevectors over qutrit registers and (controlled) single-qutrit gates.

Wire 0 is the leftmost ket factor. For a ket ``|w0 w1 ... w(n-1)>`` the flat
index is ``sum(w_i * 3**(n-1-i))``, so the rightmost trit is least significant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

UNITARY_TOL = 1e-12


def _check_unitary(matrix: np.ndarray, tol: float = UNITARY_TOL) -> None:
    err = np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0])).max()
    if err > tol:
        raise ValueError(f"matrix is not unitary (max |U^dag U - I| = {err:.3g})")


@dataclass(frozen=True, eq=False)
class GateOp:
    """A 3x3 unitary on ``target``, fired when every ``(wire, value)`` control matches.

    ``kind`` is a label used by reports and netlists ("Z+1", "COIN", ...); it
    does not affect simulation.
    """

    unitary: np.ndarray
    target: int
    controls: tuple[tuple[int, int], ...] = ()
    kind: str = "CUSTOM"

    def __post_init__(self) -> None:
        u = np.asarray(self.unitary, dtype=np.complex128)
        if u.shape != (3, 3):
            raise ValueError(f"gate matrix must be 3x3, got {u.shape}")
        _check_unitary(u)
        u.setflags(write=False)
        object.__setattr__(self, "unitary", u)

        controls = tuple((int(w), int(v)) for w, v in self.controls)
        wires = [w for w, _ in controls]
        if len(set(wires)) != len(wires):
            raise ValueError(f"duplicate control wires: {wires}")
        if self.target in wires:
            raise ValueError(f"target wire {self.target} is also a control")
        if self.target < 0 or any(w < 0 for w in wires):
            raise ValueError("wire indices must be non-negative")
        for w, v in controls:
            if v not in (0, 1, 2):
                raise ValueError(f"control value on wire {w} must be 0, 1 or 2, got {v}")
        object.__setattr__(self, "controls", tuple(sorted(controls)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GateOp):
            return NotImplemented
        return (
            self.target == other.target
            and self.controls == other.controls
            and self.kind == other.kind
            and np.array_equal(self.unitary, other.unitary)
        )

    __hash__ = None

    @property
    def wires(self) -> tuple[int, ...]:
        return (self.target, *(w for w, _ in self.controls))

    def inverse(self) -> GateOp:
        return GateOp(self.unitary.conj().T, self.target, self.controls, self.kind)


@dataclass
class StateVector:
    n: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.amps = np.asarray(self.amps, dtype=np.complex128)
        if self.amps.shape != (3**self.n,):
            raise ValueError(
                f"expected {3 ** self.n} amplitudes for {self.n} qutrits, got {self.amps.shape}"
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def copy(self) -> StateVector:
        return StateVector(self.n, self.amps.copy())


def flat_index(trits: str | tuple[int, ...] | list[int]) -> int:
    digits = [int(c) for c in trits]
    if any(d not in (0, 1, 2) for d in digits):
        raise ValueError(f"trit string {trits!r} has digits outside 0..2")
    idx = 0
    for d in digits:
        idx = idx * 3 + d
    return idx


def index_trits(index: int, n: int) -> str:
    out = []
    for _ in range(n):
        index, d = divmod(index, 3)
        out.append(str(d))
    return "".join(reversed(out))


def basis_state(n: int, trits: str) -> StateVector:
    """Computational basis state ``|trits>`` on ``n`` qutrits.

    >>> int(np.argmax(basis_state(2, "21").amps))
    7
    """
    if len(trits) != n:
        raise ValueError(f"trit string {trits!r} has length {len(trits)}, expected {n}")
    amps = np.zeros(3**n, dtype=np.complex128)
    amps[flat_index(trits)] = 1.0
    return StateVector(n, amps)


def apply(gate: GateOp, state: StateVector) -> StateVector:
    """Return a new state with ``gate`` applied; ``state`` is left untouched."""
    out = state.copy()
    apply_inplace(gate, out.amps, state.n)
    return out


def apply_inplace(gate: GateOp, amps: np.ndarray, n: int) -> None:
    # Controls fix an axis by basic integer indexing, which yields a view, so the
    # update below writes straight into ``amps``.
    if gate.target >= n or any(w >= n for w, _ in gate.controls):
        raise ValueError(f"gate wires {gate.wires} out of range for {n} qutrits")
    if not amps.flags.c_contiguous:
        raise ValueError("amplitude buffer must be C-contiguous")
    psi = amps.reshape((3,) * n)
    index: list[int | slice] = [slice(None)] * n
    for w, v in gate.controls:
        index[w] = v
    key = tuple(index)
    axis = gate.target - sum(1 for w, _ in gate.controls if w < gate.target)
    block = psi[key]
    moved = np.tensordot(gate.unitary, block, axes=([1], [axis]))
    psi[key] = np.moveaxis(moved, 0, axis)


def probabilities(state: StateVector) -> np.ndarray:
    return np.abs(state.amps) ** 2
