"""Lazy (three-state) quantum walks on the line and their ternary circuits."""

from lazyqw.circuit import Circuit, gate_report, run, run_steps
from lazyqw.codec import PositionCodec, capacity, decode, encode, left_perm, right_perm
from lazyqw.gates import CoinSpec, coin_matrix, ms_gate, multi_ms_gate, z_matrix
from lazyqw.statevector import GateOp, StateVector, apply, basis_state, probabilities
from lazyqw.synth import SynthConfig, synth_step, synth_walk
from lazyqw.verify import encode_walk_state, verify
from lazyqw.walk import WalkConfig, WalkState, distribution, evolve, step

__all__ = [
    "Circuit",
    "CoinSpec",
    "GateOp",
    "PositionCodec",
    "StateVector",
    "SynthConfig",
    "WalkConfig",
    "WalkState",
    "apply",
    "basis_state",
    "capacity",
    "coin_matrix",
    "decode",
    "distribution",
    "encode",
    "encode_walk_state",
    "evolve",
    "gate_report",
    "left_perm",
    "ms_gate",
    "multi_ms_gate",
    "probabilities",
    "right_perm",
    "run",
    "run_steps",
    "step",
    "synth_step",
    "synth_walk",
    "verify",
    "z_matrix",
]
