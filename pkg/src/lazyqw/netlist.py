"""JSON netlists for circuits.

Layout (keys in this order)::

    {"n": 4,
     "coin": {"tag": "dft"},
     "ops": [{"kind": "COIN", "target": 0, "controls": []},
             {"kind": "Z+2", "target": 3, "controls": [{"wire": 0, "value": 2}]},
             {"kind": "CUSTOM", "target": 1, "controls": [], "matrix": [[[re, im], ...], ...]}],
     "step_markers": [7]}

Complex numbers are ``[re, im]`` pairs. ``COIN`` ops take their matrix from
the top-level ``coin`` object.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from lazyqw.circuit import Circuit
from lazyqw.gates import Z_KINDS, CoinSpec, coin_matrix, z_matrix
from lazyqw.statevector import GateOp

OP_KINDS = tuple(f"Z{k}" for k in Z_KINDS) + ("COIN", "CUSTOM")


class NetlistError(ValueError):
    def __init__(self, pointer: str, message: str) -> None:
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")


def complex_to_json(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def matrix_to_json(m: np.ndarray) -> list[list[list[float]]]:
    return [[complex_to_json(z) for z in row] for row in m]


def coin_to_json(coin: CoinSpec) -> dict[str, Any]:
    out: dict[str, Any] = {"tag": coin.tag}
    if coin.param is not None:
        out["param"] = coin.param
    if coin.tag == "custom":
        out["matrix"] = matrix_to_json(coin.matrix)
    return out


def to_dict(circuit: Circuit) -> dict[str, Any]:
    ops = []
    for op in circuit.ops:
        entry: dict[str, Any] = {
            "kind": op.kind,
            "target": op.target,
            "controls": [{"wire": w, "value": v} for w, v in op.controls],
        }
        if op.kind == "CUSTOM":
            entry["matrix"] = matrix_to_json(op.unitary)
        ops.append(entry)
    return {
        "n": circuit.n,
        "coin": None if circuit.coin is None else coin_to_json(circuit.coin),
        "ops": ops,
        "step_markers": list(circuit.step_markers),
    }


def dumps(circuit: Circuit) -> str:
    return json.dumps(to_dict(circuit), indent=2) + "\n"


def _expect_int(value: Any, pointer: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise NetlistError(pointer, f"expected an integer, got {value!r}")
    return value


def _matrix_from_json(value: Any, pointer: str) -> np.ndarray:
    if not isinstance(value, list) or len(value) != 3:
        raise NetlistError(pointer, "expected a 3x3 matrix of [re, im] pairs")
    m = np.zeros((3, 3), dtype=np.complex128)
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != 3:
            raise NetlistError(f"{pointer}/{i}", "expected a row of 3 [re, im] pairs")
        for j, z in enumerate(row):
            ok = (
                isinstance(z, list)
                and len(z) == 2
                and all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in z)
            )
            if not ok:
                raise NetlistError(f"{pointer}/{i}/{j}", f"expected [re, im], got {z!r}")
            m[i, j] = complex(z[0], z[1])
    return m


def _coin_from_json(value: Any, pointer: str) -> CoinSpec:
    if not isinstance(value, dict) or not isinstance(value.get("tag"), str):
        raise NetlistError(pointer, "expected an object with a string 'tag'")
    matrix = None
    if "matrix" in value:
        matrix = _matrix_from_json(value["matrix"], f"{pointer}/matrix")
    try:
        return CoinSpec(value["tag"], value.get("param"), matrix)
    except (ValueError, TypeError) as exc:
        raise NetlistError(pointer, str(exc)) from None


def from_dict(data: Any) -> Circuit:
    if not isinstance(data, dict):
        raise NetlistError("", "netlist must be a JSON object")
    for key in ("n", "ops"):
        if key not in data:
            raise NetlistError(f"/{key}", "missing required field")
    n = _expect_int(data["n"], "/n")
    if n < 1:
        raise NetlistError("/n", f"need at least one qutrit, got {n}")
    coin = None
    if data.get("coin") is not None:
        coin = _coin_from_json(data["coin"], "/coin")
    if not isinstance(data["ops"], list):
        raise NetlistError("/ops", "expected an array")

    ops = []
    for i, entry in enumerate(data["ops"]):
        ptr = f"/ops/{i}"
        if not isinstance(entry, dict):
            raise NetlistError(ptr, "expected an object")
        kind = entry.get("kind")
        if kind not in OP_KINDS:
            raise NetlistError(f"{ptr}/kind", f"unknown gate kind {kind!r}")
        if "target" not in entry:
            raise NetlistError(f"{ptr}/target", "missing required field")
        target = _expect_int(entry["target"], f"{ptr}/target")
        if not 0 <= target < n:
            raise NetlistError(f"{ptr}/target", f"wire {target} out of range for n={n}")
        raw_controls = entry.get("controls", [])
        if not isinstance(raw_controls, list):
            raise NetlistError(f"{ptr}/controls", "expected an array")
        controls = []
        for j, ctl in enumerate(raw_controls):
            cptr = f"{ptr}/controls/{j}"
            if not isinstance(ctl, dict):
                raise NetlistError(cptr, "expected an object with 'wire' and 'value'")
            wire = _expect_int(ctl.get("wire"), f"{cptr}/wire")
            value = _expect_int(ctl.get("value"), f"{cptr}/value")
            if not 0 <= wire < n:
                raise NetlistError(f"{cptr}/wire", f"wire {wire} out of range for n={n}")
            if value not in (0, 1, 2):
                raise NetlistError(f"{cptr}/value", f"control value must be 0, 1 or 2, got {value}")
            controls.append((wire, value))

        if kind == "COIN":
            if coin is None:
                raise NetlistError(ptr, "COIN op requires a top-level coin")
            if coin.dim != 3:
                raise NetlistError("/coin", f"coin {coin.tag!r} is not a 3-state coin")
            matrix = coin_matrix(coin)
        elif kind == "CUSTOM":
            if "matrix" not in entry:
                raise NetlistError(f"{ptr}/matrix", "CUSTOM op requires a matrix")
            matrix = _matrix_from_json(entry["matrix"], f"{ptr}/matrix")
        else:
            matrix = z_matrix(kind[1:])
        try:
            ops.append(GateOp(matrix, target, tuple(controls), kind))
        except ValueError as exc:
            raise NetlistError(ptr, str(exc)) from None

    markers = data.get("step_markers", [])
    if not isinstance(markers, list):
        raise NetlistError("/step_markers", "expected an array")
    markers = [_expect_int(m, f"/step_markers/{i}") for i, m in enumerate(markers)]
    try:
        return Circuit(n, tuple(ops), tuple(markers), coin)
    except ValueError as exc:
        raise NetlistError("/step_markers", str(exc)) from None


def loads(text: str) -> Circuit:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetlistError("", f"invalid JSON: {exc}") from None
    return from_dict(data)
