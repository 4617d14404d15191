"""Compare synthesized circuits against direct walk evolution."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lazyqw.circuit import run_steps
from lazyqw.codec import PositionCodec
from lazyqw.statevector import StateVector, flat_index
from lazyqw.synth import SynthConfig, synth_walk
from lazyqw.walk import WalkConfig, WalkState, trajectory


def encode_walk_state(state: WalkState, codec: PositionCodec) -> StateVector:
    """Place ``|c> x |x>`` at the register index of ``c`` followed by ``encode(x)``."""
    if state.d != 3:
        raise ValueError("only ternary walk states can be encoded on qutrits")
    n = codec.q + 1
    amps = np.zeros(3**n, dtype=np.complex128)
    block = 3**codec.q
    for x, vec in state.amps.items():
        pos = flat_index(codec.encode(x))
        for c in range(3):
            amps[c * block + pos] = vec[c]
    return StateVector(n, amps)


@dataclass
class VerifyReport:
    max_amp_diff: float
    per_step_diffs: list[float]
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_amp_diff <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "max_amp_diff": self.max_amp_diff,
            "pass": self.passed,
            "per_step_diffs": self.per_step_diffs,
            "tolerance": self.tolerance,
        }


def verify(config: SynthConfig, tolerance: float = 1e-9) -> VerifyReport:
    circuit = synth_walk(config)
    codec = PositionCodec(config.q, config.variant)
    circuit_states = run_steps(circuit)
    walk_states = trajectory(WalkConfig("ternary", config.coin, config.steps, 0))
    diffs = [
        float(np.abs(cs.amps - encode_walk_state(ws, codec).amps).max())
        for cs, ws in zip(circuit_states[1:], walk_states[1:])
    ]
    return VerifyReport(max(diffs, default=0.0), diffs, tolerance)
