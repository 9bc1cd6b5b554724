"""Bit-string messages that drive the coin selection."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

__all__ = ["Message", "MessageError"]


class MessageError(ValueError):
    pass


@dataclass(frozen=True)
class Message:
    """An ordered sequence of bits; bit ``i`` controls walk step ``i``.

    Byte and hex ingestion expand most-significant bit first.
    """

    bits: tuple[int, ...] = ()

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise MessageError("message bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_bits(cls, text: str | Iterable[int]) -> "Message":
        """Parse a literal such as ``"0100"``; whitespace and ``_`` are ignored."""
        if isinstance(text, str):
            cleaned = "".join(ch for ch in text if not ch.isspace() and ch != "_")
            if any(ch not in "01" for ch in cleaned):
                raise MessageError(f"bit literal may only contain 0 and 1: {text!r}")
            return cls(tuple(int(ch) for ch in cleaned))
        return cls(tuple(text))

    @classmethod
    def from_hex(cls, text: str) -> "Message":
        cleaned = "".join(text.split())
        if cleaned[:2].lower() == "0x":
            cleaned = cleaned[2:]
        try:
            nibbles = [int(ch, 16) for ch in cleaned]
        except ValueError:
            raise MessageError(f"invalid hex message: {text!r}") from None
        return cls(tuple((v >> s) & 1 for v in nibbles for s in (3, 2, 1, 0)))

    @classmethod
    def from_bytes(cls, data: bytes) -> "Message":
        arr = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
        return cls(tuple(arr.tolist()))

    @classmethod
    def from_text(cls, text: str, encoding: str = "utf-8") -> "Message":
        return cls.from_bytes(text.encode(encoding))

    @classmethod
    def from_file(cls, path: str | Path) -> "Message":
        return cls.from_bytes(Path(path).read_bytes())

    def to_hex(self) -> str:
        if len(self.bits) % 4:
            raise MessageError("hex rendering needs a bit length divisible by 4")
        out = []
        for i in range(0, len(self.bits), 4):
            b = self.bits[i : i + 4]
            out.append("0123456789ABCDEF"[b[0] << 3 | b[1] << 2 | b[2] << 1 | b[3]])
        return "".join(out)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.bits, dtype=np.uint8)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))
