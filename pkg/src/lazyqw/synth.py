"""Ternary circuits for the lazy walk built from Z gates and value-2 M-S gates.

Register layout for ``q`` position trits: wire 0 holds the coin, wires
``1..q`` hold the position string with wire 1 the most significant trit. A
step is the coin gate followed by two coin-conditioned carry cascades, one
realizing the right move (coin = 2) and one the left move (coin = 1).

The bare cascade is "apply Z(+2) to trit k when the coin and every lower trit
read 2", emitted from the most significant trit down so that each gate sees
pre-move carries. Conjugating the position wires with Z(12) turns it into the
inverse cascade (Z(+1) with carry on all-ones); conjugating the coin wire with
Z(12) moves the trigger from coin = 2 to coin = 1. Every controlled gate
therefore fires on value 2 only.
"""

from __future__ import annotations

from dataclasses import dataclass

from lazyqw.circuit import Circuit
from lazyqw.codec import VARIANTS, capacity
from lazyqw.gates import CoinSpec, coin_gate, multi_ms_gate, z_gate
from lazyqw.statevector import GateOp

COIN_WIRE = 0
SCHEDULES = ("incremental", "full")


@dataclass(frozen=True)
class SynthConfig:
    q: int
    steps: int
    coin: CoinSpec
    variant: str = "primary"
    schedule: str = "incremental"

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"need at least one position trit, got q={self.q}")
        cap = capacity(self.q)
        if not 0 <= self.steps <= cap:
            raise ValueError(
                f"{self.steps} steps exceed the capacity of {self.q} position qutrits "
                f"(floor(3^{self.q}/2) = {cap})"
            )
        if self.coin.dim != 3:
            raise ValueError(f"coin {self.coin.tag!r} is not a 3-state coin")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.schedule not in SCHEDULES:
            raise ValueError(f"schedule must be one of {SCHEDULES}, got {self.schedule!r}")

    @property
    def n(self) -> int:
        return self.q + 1


def trit_wire(q: int, k: int) -> int:
    """Wire holding position trit ``k`` (``k = 0`` is least significant)."""
    return q - k


def first_step_for_trit(k: int) -> int:
    """Earliest step at which trit ``k`` can change, starting from ``0...0``."""
    return (3**k + 1) // 2


def active_trits(config: SynthConfig, step_index: int) -> list[int]:
    if config.schedule == "full":
        return list(range(config.q))
    return [k for k in range(config.q) if step_index >= first_step_for_trit(k)]


def _cascade(q: int, trits: list[int], coin_value: int, inverse: bool) -> list[GateOp]:
    frame: list[GateOp] = []
    if coin_value == 1:
        frame.append(z_gate("12", COIN_WIRE))
    if inverse:
        frame.extend(z_gate("12", trit_wire(q, k)) for k in sorted(trits, reverse=True))
    core = [
        multi_ms_gate(
            "+2",
            [COIN_WIRE, *(trit_wire(q, j) for j in range(k))],
            trit_wire(q, k),
        )
        for k in sorted(trits, reverse=True)
    ]
    return frame + core + frame[::-1]


def synth_step(config: SynthConfig, step_index: int) -> list[GateOp]:
    if not 1 <= step_index <= config.steps:
        raise ValueError(f"step index {step_index} outside 1..{config.steps}")
    trits = active_trits(config, step_index)
    # primary: coin 2 runs the bare cascade (x -> x+1); alternative swaps the cascades
    mirrored = config.variant == "alternative"
    return [
        coin_gate(config.coin, COIN_WIRE),
        *_cascade(config.q, trits, coin_value=2, inverse=mirrored),
        *_cascade(config.q, trits, coin_value=1, inverse=not mirrored),
    ]


def synth_walk(config: SynthConfig) -> Circuit:
    ops: list[GateOp] = []
    markers = []
    for s in range(1, config.steps + 1):
        ops.extend(synth_step(config, s))
        markers.append(len(ops))
    return Circuit(config.n, tuple(ops), tuple(markers), config.coin)
