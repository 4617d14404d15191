"""Ternary gate library: the five Z permutations, Muthukrishnan-Stroud gates, coins."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from lazyqw.statevector import GateOp, _check_unitary

# digit maps v -> Z(v)
_Z_TABLE: dict[str, tuple[int, int, int]] = {
    "+1": (1, 2, 0),
    "+2": (2, 0, 1),
    "01": (1, 0, 2),
    "12": (0, 2, 1),
    "02": (2, 1, 0),
}

Z_KINDS: tuple[str, ...] = tuple(_Z_TABLE)

MS_CONTROL_VALUE = 2


def z_digit_map(kind: str) -> tuple[int, int, int]:
    try:
        return _Z_TABLE[kind]
    except KeyError:
        raise ValueError(f"unknown Z gate kind {kind!r}; expected one of {Z_KINDS}") from None


def z_matrix(kind: str) -> np.ndarray:
    """Permutation matrix with ``Z|v> = |Z(v)>``.

    >>> z_matrix("+1") @ np.array([1, 0, 0])
    array([0.+0.j, 1.+0.j, 0.+0.j])
    """
    m = np.zeros((3, 3), dtype=np.complex128)
    for v, image in enumerate(z_digit_map(kind)):
        m[image, v] = 1.0
    return m


def z_gate(kind: str, target: int) -> GateOp:
    return GateOp(z_matrix(kind), target, (), f"Z{kind}")


def ms_gate(kind: str, control: int, target: int) -> GateOp:
    if control == target:
        raise ValueError("M-S gate control and target must differ")
    return multi_ms_gate(kind, [control], target)


def multi_ms_gate(kind: str, controls: list[int] | tuple[int, ...], target: int) -> GateOp:
    """Apply ``Z(kind)`` to ``target`` iff every control qutrit is in state 2."""
    if len(set(controls)) != len(controls):
        raise ValueError(f"duplicate control wires: {list(controls)}")
    if target in controls:
        raise ValueError(f"target wire {target} is also a control")
    return GateOp(
        z_matrix(kind), target, tuple((c, MS_CONTROL_VALUE) for c in controls), f"Z{kind}"
    )


@dataclass(frozen=True)
class CoinSpec:
    """Coin selection.

    ``tag`` is one of ``dft``, ``grover``, ``grho`` (param = rho in (0, 1)),
    ``lackadaisical`` (param = self-loop weight l > 0), ``hadamard`` (2x2,
    binary walks only) or ``custom`` (``matrix`` holds a 3x3 unitary).
    """

    tag: str
    param: float | None = None
    matrix: np.ndarray | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        tag = self.tag.lower()
        object.__setattr__(self, "tag", tag)
        if tag in ("dft", "grover", "hadamard"):
            if self.param is not None:
                raise ValueError(f"coin {tag!r} takes no parameter")
        elif tag == "grho":
            if self.param is None or not 0.0 < self.param < 1.0:
                raise ValueError(f"G(rho) coin needs rho in (0, 1), got {self.param}")
        elif tag == "lackadaisical":
            if self.param is None or not self.param > 0.0:
                raise ValueError(f"lackadaisical coin needs l > 0, got {self.param}")
        elif tag == "custom":
            if self.matrix is None:
                raise ValueError("custom coin needs a matrix")
            m = np.asarray(self.matrix, dtype=np.complex128)
            if m.shape != (3, 3):
                raise ValueError(f"custom coin must be 3x3, got {m.shape}")
            _check_unitary(m)
            object.__setattr__(self, "matrix", m)
        else:
            raise ValueError(f"unknown coin {self.tag!r}")

    @property
    def dim(self) -> int:
        return 2 if self.tag == "hadamard" else 3

    @classmethod
    def parse(cls, text: str) -> CoinSpec:
        """Parse the CLI form: ``dft``, ``grover``, ``hadamard``, ``grho:0.5``, ``lackadaisical:2``."""
        tag, sep, arg = text.partition(":")
        if not sep:
            return cls(tag)
        try:
            value = float(arg)
        except ValueError:
            raise ValueError(f"bad coin parameter in {text!r}") from None
        return cls(tag, value)

    def label(self) -> str:
        return self.tag if self.param is None else f"{self.tag}:{self.param!r}"


def dft_coin() -> np.ndarray:
    j, k = np.meshgrid(range(3), range(3), indexing="ij")
    return np.exp(2j * np.pi * j * k / 3) / math.sqrt(3)


def grover_coin() -> np.ndarray:
    return (2.0 / 3.0) * np.ones((3, 3), dtype=np.complex128) - np.eye(3)


def grho_coin(rho: float) -> np.ndarray:
    off = rho * math.sqrt(2.0 - 2.0 * rho**2)
    return np.array(
        [
            [-(rho**2), off, 1.0 - rho**2],
            [off, 2.0 * rho**2 - 1.0, off],
            [1.0 - rho**2, off, -(rho**2)],
        ],
        dtype=np.complex128,
    )


def lackadaisical_coin(loops: float) -> np.ndarray:
    """Reflection ``2|s><s| - I`` about ``|s> = (|up> + |down> + sqrt(l)|stay>) / sqrt(2 + l)``.

    Coin index 0 is the stay-put state, so ``sqrt(l)`` sits in component 0.
    """
    s = np.array([math.sqrt(loops), 1.0, 1.0], dtype=np.complex128) / math.sqrt(2.0 + loops)
    return 2.0 * np.outer(s, s.conj()) - np.eye(3)


def hadamard_coin() -> np.ndarray:
    return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2)


def coin_matrix(spec: CoinSpec) -> np.ndarray:
    if spec.tag == "dft":
        return dft_coin()
    if spec.tag == "grover":
        return grover_coin()
    if spec.tag == "grho":
        return grho_coin(spec.param)
    if spec.tag == "lackadaisical":
        return lackadaisical_coin(spec.param)
    if spec.tag == "hadamard":
        return hadamard_coin()
    return spec.matrix.copy()


def coin_gate(spec: CoinSpec, target: int = 0) -> GateOp:
    if spec.dim != 3:
        raise ValueError(f"coin {spec.tag!r} is not a 3-state coin")
    return GateOp(coin_matrix(spec), target, (), "COIN")
