"""Shared problem parameters for all computation routes."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Params:
    """Half-degree ``k`` and power ``n`` of the expansion ``(1 + x + ... + x^{2k})^n``.

    ``k >= 1`` so the polynomial has ``2k+1`` terms.  ``n >= 1`` is the
    interesting domain; ``n = 0`` is accepted as the identity case (the
    coefficient row collapses to ``[1]``), which lets sequences start at
    ``n = 0`` the way OEIS indexes them.
    """

    k: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise ValueError(f"k must be an integer, got {self.k!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ValueError(f"n must be an integer, got {self.n!r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")

    @property
    def width(self) -> int:
        """Number of polynomial terms, ``2k + 1``."""
        return 2 * self.k + 1

    @property
    def degree(self) -> int:
        """Degree of the expanded power, ``2kn``."""
        return 2 * self.k * self.n

    @property
    def dim(self) -> int:
        """Circulant dimension ``N = 2kn + 1`` (odd; ``>= 3`` whenever ``n >= 1``)."""
        return 2 * self.k * self.n + 1
