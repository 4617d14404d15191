"""Direct evolution of coined walks on the integer line.

Coin conventions:

* ternary (lazy) walk: index 0 stays, index 1 moves to ``x - 1``, index 2 to ``x + 1``;
* binary walk: index 0 (up) moves to ``x - 1``, index 1 (down) to ``x + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from lazyqw.gates import CoinSpec, coin_matrix

TERNARY_MOVES = (0, -1, +1)
BINARY_MOVES = (-1, +1)

PRUNE_BELOW = 1e-15


def moves_for(d: int) -> tuple[int, ...]:
    if d == 3:
        return TERNARY_MOVES
    if d == 2:
        return BINARY_MOVES
    raise ValueError(f"coin dimension must be 2 or 3, got {d}")


@dataclass
class WalkState:
    """Sparse walker state: position -> coin amplitude vector of length ``d``."""

    d: int
    amps: dict[int, np.ndarray] = field(default_factory=dict)

    @classmethod
    def initial(cls, coin_state: int | np.ndarray, d: int, x: int = 0) -> WalkState:
        if isinstance(coin_state, (int, np.integer)):
            if not 0 <= coin_state < d:
                raise ValueError(f"coin basis index {coin_state} out of range for d={d}")
            vec = np.zeros(d, dtype=np.complex128)
            vec[coin_state] = 1.0
        else:
            vec = np.asarray(coin_state, dtype=np.complex128)
            if vec.shape != (d,):
                raise ValueError(f"initial coin vector must have length {d}")
            if abs(np.linalg.norm(vec) - 1.0) > 1e-10:
                raise ValueError("initial coin vector must be normalized")
        return cls(d, {x: vec})

    def norm(self) -> float:
        return float(np.sqrt(sum(np.vdot(v, v).real for v in self.amps.values())))

    def amplitude(self, x: int, c: int) -> complex:
        v = self.amps.get(x)
        return 0j if v is None else complex(v[c])


@dataclass(frozen=True)
class WalkConfig:
    kind: str
    coin: CoinSpec
    steps: int
    initial_coin: int | tuple[complex, ...] = 0

    def __post_init__(self) -> None:
        if self.kind not in ("binary", "ternary"):
            raise ValueError(f"walk kind must be 'binary' or 'ternary', got {self.kind!r}")
        expected = 2 if self.kind == "binary" else 3
        if self.coin.dim != expected:
            raise ValueError(f"coin {self.coin.tag!r} cannot drive a {self.kind} walk")
        if self.steps < 0:
            raise ValueError(f"steps must be non-negative, got {self.steps}")
        if isinstance(self.initial_coin, int) and not 0 <= self.initial_coin < expected:
            raise ValueError(f"initial coin index {self.initial_coin} out of range for a {self.kind} walk")

    @property
    def d(self) -> int:
        return 2 if self.kind == "binary" else 3


def step(state: WalkState, coin: CoinSpec | np.ndarray) -> WalkState:
    """One application of ``S (I x C)``."""
    c = coin_matrix(coin) if isinstance(coin, CoinSpec) else np.asarray(coin)
    if c.shape != (state.d, state.d):
        raise ValueError(f"coin of shape {c.shape} does not match coin dimension {state.d}")
    moves = moves_for(state.d)
    out: dict[int, np.ndarray] = {}
    for x, vec in state.amps.items():
        flipped = c @ vec
        for idx, dx in enumerate(moves):
            dest = out.get(x + dx)
            if dest is None:
                dest = out[x + dx] = np.zeros(state.d, dtype=np.complex128)
            dest[idx] += flipped[idx]
    return WalkState(state.d, out)


def evolve(config: WalkConfig) -> WalkState:
    initial = config.initial_coin
    if not isinstance(initial, int):
        initial = np.asarray(initial, dtype=np.complex128)
    state = WalkState.initial(initial, config.d)
    c = coin_matrix(config.coin)
    for _ in range(config.steps):
        state = step(state, c)
    return state


def trajectory(config: WalkConfig) -> list[WalkState]:
    """States after 0, 1, ..., ``config.steps`` steps."""
    initial = config.initial_coin
    if not isinstance(initial, int):
        initial = np.asarray(initial, dtype=np.complex128)
    states = [WalkState.initial(initial, config.d)]
    c = coin_matrix(config.coin)
    for _ in range(config.steps):
        states.append(step(states[-1], c))
    return states


def distribution(state: WalkState, prune: float = PRUNE_BELOW) -> list[tuple[int, float]]:
    """``(x, P(x))`` pairs sorted by ``x``; entries with ``P < prune`` are dropped."""
    rows = []
    for x in sorted(state.amps):
        p = float(np.vdot(state.amps[x], state.amps[x]).real)
        if p >= prune:
            rows.append((x, p))
    return rows
