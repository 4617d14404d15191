"""Nearest-neighbour encoding of line positions into q-trit strings.

A right move is a carry cascade: the least significant trit always takes
``v -> v + 2 (mod 3)``, and a higher trit does the same exactly when every trit
below it reads 2 before the move. A left move is the inverse cascade
(``v -> v + 1`` with carry on all-ones). Starting from ``0...0`` this walks a
single cycle through all ``3**q`` strings, and position ``x`` is the string
reached after ``x`` right moves (``|x|`` left moves for ``x < 0``).

The alternative variant is the mirror image: ``encode_alt(x) == encode(-x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

VARIANTS = ("primary", "alternative")


def _validate(trits: str) -> None:
    if not trits or any(c not in "012" for c in trits):
        raise ValueError(f"invalid trit string {trits!r}")


def _cascade(trits: str, add: int, carry_digit: str) -> str:
    _validate(trits)
    digits = list(trits)
    out = digits[:]
    # position i (0 = most significant) fires when everything to its right is carry_digit
    for i in range(len(digits)):
        if all(c == carry_digit for c in digits[i + 1 :]):
            out[i] = str((int(digits[i]) + add) % 3)
    return "".join(out)


def right_perm(trits: str) -> str:
    """
    >>> right_perm("022")
    '211'
    """
    return _cascade(trits, 2, "2")


def left_perm(trits: str) -> str:
    return _cascade(trits, 1, "1")


def capacity(q: int) -> int:
    return 3**q // 2


@dataclass(frozen=True)
class PositionCodec:
    q: int
    variant: str = "primary"

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"need at least one position trit, got q={self.q}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")

    @property
    def capacity(self) -> int:
        return capacity(self.q)

    def right(self, trits: str) -> str:
        """String reached by moving the walker one site to the right (``x -> x + 1``)."""
        return right_perm(trits) if self.variant == "primary" else left_perm(trits)

    def left(self, trits: str) -> str:
        return left_perm(trits) if self.variant == "primary" else right_perm(trits)

    @cached_property
    def _table(self) -> dict[int, str]:
        table = {0: "0" * self.q}
        s = table[0]
        for x in range(1, self.capacity + 1):
            s = self.right(s)
            table[x] = s
        s = table[0]
        for x in range(1, self.capacity + 1):
            s = self.left(s)
            table[-x] = s
        return table

    @cached_property
    def _inverse(self) -> dict[str, int]:
        return {s: x for x, s in self._table.items()}

    def encode(self, x: int) -> str:
        if abs(x) > self.capacity:
            raise ValueError(
                f"position {x} outside the {self.q}-trit range [-{self.capacity}, {self.capacity}]"
            )
        return self._table[x]

    def decode(self, trits: str) -> int:
        _validate(trits)
        if len(trits) != self.q:
            raise ValueError(f"expected {self.q} trits, got {trits!r}")
        return self._inverse[trits]

    def rows(self) -> list[tuple[int, str]]:
        return [(x, self._table[x]) for x in range(-self.capacity, self.capacity + 1)]


def encode(x: int, codec: PositionCodec) -> str:
    return codec.encode(x)


def decode(trits: str, codec: PositionCodec) -> int:
    return codec.decode(trits)
