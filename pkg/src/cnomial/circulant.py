"""Circulant-matrix route to (2k+1)-nomial coefficients.

A circulant is stored as its first row only; products are cyclic
convolutions of first rows, powers are exponentiation by squaring, and the
central coefficient falls out of the trace of the n-th power of the
symmetric shifted circulant (first-row ones at offsets -k..k mod N).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _backend
from .params import Params

#: Largest dimension :func:`to_dense` will materialize; the dense form only
#: exists so tests can cross-check against naive matrix algebra.
DENSE_DIM_LIMIT = 64


@dataclass(frozen=True)
class CirculantMatrix:
    """Circulant over exact integers, determined by its first row.

    The full matrix entry ``(i, j)`` is ``first_row[(j - i) mod dim]``; rows
    are successive right-rotations of the first.
    """

    dim: int
    first_row: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if len(self.first_row) != self.dim:
            raise ValueError(
                f"first_row has {len(self.first_row)} entries, expected {self.dim}"
            )


def identity(dim: int) -> CirculantMatrix:
    return CirculantMatrix(dim, (1,) + (0,) * (dim - 1))


def cyclic_permutation(dim: int) -> CirculantMatrix:
    """The basis circulant with a single 1 at offset 1 (offset 0 when dim=1)."""
    row = [0] * dim
    row[1 % dim] = 1
    return CirculantMatrix(dim, tuple(row))


def build_shifted(params: Params, m: int) -> CirculantMatrix:
    """Boolean circulant with first-row ones at offsets ``{m, ..., m+2k} mod N``.

    Multiplying the width-(2k+1) block circulant by ``x^m`` in the
    polynomial picture; offsets that collide mod N (only possible in the
    degenerate n=0 case) are marked once, keeping the matrix boolean.
    """
    n_dim = params.dim
    if not 0 <= m < n_dim:
        raise ValueError(f"shift m must be in [0, {n_dim - 1}], got {m}")
    row = [0] * n_dim
    for offset in range(m, m + params.width):
        row[offset % n_dim] = 1
    return CirculantMatrix(n_dim, tuple(row))


def build_central(params: Params) -> CirculantMatrix:
    """The symmetric circulant whose n-th power carries M^(2k,n) on the diagonal.

    First-row ones sit at offsets ``{-k, ..., k} mod N``: a leading 1, a
    block of k ones, and a trailing block of k ones.  Equivalent to
    :func:`build_shifted` with ``m = N - k`` (the matrix actually used by
    the spectral route; see the trace/shift bookkeeping notes on
    :func:`coefficient_via_shift`).
    """
    return build_shifted(params, (params.dim - params.k) % params.dim)


def multiply(a: CirculantMatrix, b: CirculantMatrix) -> CirculantMatrix:
    """Product of two circulants: the cyclic convolution of their first rows."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    row = _backend.active().convolve_cyclic(list(a.first_row), list(b.first_row))
    return CirculantMatrix(a.dim, tuple(row))


def matrix_power(a: CirculantMatrix, n: int) -> CirculantMatrix:
    """Exact n-th power by exponentiation by squaring; n=0 gives the identity."""
    if n < 0:
        raise ValueError(f"power must be >= 0, got {n}")
    result = identity(a.dim)
    base = a
    e = n
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def trace(a: CirculantMatrix) -> int:
    """dim * first_row[0]; every diagonal entry of a circulant is first_row[0]."""
    return a.dim * a.first_row[0]


def to_dense(a: CirculantMatrix, limit: int = DENSE_DIM_LIMIT) -> list[list[int]]:
    """Materialize the full matrix (tests only; guarded against large dims)."""
    if a.dim > limit:
        raise ValueError(f"refusing to materialize dim {a.dim} > {limit}")
    return [[a.first_row[(j - i) % a.dim] for j in range(a.dim)] for i in range(a.dim)]


def central_via_trace(params: Params) -> int:
    """M^(2k,n) as trace of the n-th power of the central circulant, over N.

    The division must be exact; a nonzero remainder means the row/power
    bookkeeping is broken, so it raises rather than returning junk.
    """
    power = matrix_power(build_central(params), params.n)
    t = trace(power)
    n_dim = params.dim
    if t % n_dim:
        raise RuntimeError(
            f"internal invariant violated: trace {t} not divisible by N={n_dim} "
            f"for k={params.k}, n={params.n}"
        )
    return t // n_dim


@lru_cache(maxsize=256)
def _power_first_row(k: int, n: int, m: int) -> tuple[int, ...]:
    params = Params(k, n)
    return matrix_power(build_shifted(params, m), n).first_row


def coefficient_via_shift(params: Params, l: int, m: int | None = None) -> int:
    """Coefficient ``p_l`` read from the n-th power of a shifted circulant.

    The n-th power of the m-shifted circulant has first row
    ``b_j = p_{(j - n*m) mod N}``: the shift multiplies the whole row of
    coefficients by x^{n*m}, rotating it through the ring.  Reading offset
    ``(l + n*m) mod N`` therefore recovers ``p_l`` for any shift; the
    default shift is the central one ``m = N - k``, which parks the central
    coefficient on the diagonal.
    """
    if not 0 <= l <= params.degree:
        raise ValueError(f"l must be in [0, {params.degree}], got {l}")
    n_dim = params.dim
    if m is None:
        m = (n_dim - params.k) % n_dim
    elif not 0 <= m < n_dim:
        raise ValueError(f"shift m must be in [0, {n_dim - 1}], got {m}")
    row = _power_first_row(params.k, params.n, m)
    return row[(l + params.n * m) % n_dim]
