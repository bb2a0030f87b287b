"""Token specifications: how many tokens, per-vertex capacity, and token kind."""
from __future__ import annotations

import enum
from dataclasses import dataclass


class TokenMode(str, enum.Enum):
    INDIST = "indist"  # all tokens equal: configurations are multisets
    DIST = "dist"  # all tokens different: configurations are ordered tuples

    @property
    def distinguishable(self) -> bool:
        return self is TokenMode.DIST

    @classmethod
    def parse(cls, value) -> "TokenMode":
        if isinstance(value, TokenMode):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown token mode {value!r}; expected 'indist' or 'dist'") from None


@dataclass(frozen=True)
class TokenSpec:
    """``k`` tokens, at most ``s`` per vertex.

    A capacity above ``k`` can never bind, so it is clamped to ``k`` on
    construction; every downstream computation sees ``1 <= s <= k``.
    """

    k: int
    s: int
    mode: TokenMode = TokenMode.INDIST

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"token count k must be positive, got {self.k}")
        if self.s < 1:
            raise ValueError(f"capacity s must be positive, got {self.s}")
        object.__setattr__(self, "mode", TokenMode.parse(self.mode))
        if self.s > self.k:
            object.__setattr__(self, "s", self.k)

    @property
    def distinguishable(self) -> bool:
        return self.mode is TokenMode.DIST

    def with_capacity(self, s: int) -> "TokenSpec":
        return TokenSpec(self.k, s, self.mode)

    def __str__(self) -> str:
        return f"k={self.k} s={self.s} mode={self.mode.value}"
