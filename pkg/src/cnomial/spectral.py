"""Trigonometric spectral route to (2k+1)-nomial coefficients.

The symmetric circulant diagonalizes in the discrete Fourier basis, so its
trace power collapses to a finite sum of sine-ratio powers:

    M = (1/N) * [ (2k+1)^n + sum_{l=1}^{2kn} (sin((2k+1)l pi/N) / sin(l pi/N))^n ]

with N = 2kn+1.  General coefficients pick up a cosine phase.  The sums are
evaluated in floating point and rounded back to integers, so every result
carries a certificate: the pre-rounding distance from the nearest integer
plus a forward rounding-error bound, required to stay under a cap.  The
bound matters: once terms outgrow the mantissa the measured distance alone
is blind (above 2^53 every double is an integer).  When a cheap strategy
cannot certify, the evaluation escalates double -> compensated double ->
arbitrary precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import mpmath

from . import _backend
from .params import Params

EIGENVALUE_METHODS = ("trig-ratio", "cosine-sum", "chebyshev")

STRATEGIES = ("double", "compensated", "arbitrary")

#: Guard bits on top of the magnitude estimate in :func:`required_bits`.
GUARD_BITS = 32

#: Half of the unambiguous-rounding margin; the other half is headroom
#: against correlated rounding error.  Escalating is cheap, mis-rounding is
#: not.
DEFAULT_RESIDUAL_CAP = 0.25

#: Unit roundoff of IEEE binary64.
_EPS = 2.0**-53


@dataclass(frozen=True)
class EigenvalueSet:
    """Real spectrum of the symmetric central circulant for given params.

    ``values[r-1]`` is the eigenvalue E_r in the 1-based indexing of the
    Fourier mode r; E_1 = 2k+1 exactly, and E_r = E_{N+2-r} pairs up for
    r >= 2 because the first row is symmetric.
    """

    params: Params
    values: tuple[float, ...]
    method: str


@dataclass(frozen=True)
class PrecisionPolicy:
    """How to evaluate the floating spectral sum and when to accept it.

    ``strategy`` is the starting point of the escalation ladder.  For the
    ``arbitrary`` strategy, ``mantissa_bits=None`` means "compute the budget
    from the operands" via :func:`required_bits`; an explicit value is
    honored as-is (including values too small to certify, which then raise
    :class:`CertificationError`).
    """

    strategy: str = "double"
    mantissa_bits: int | None = None
    residual_cap: float = DEFAULT_RESIDUAL_CAP

    def __post_init__(self) -> None:
        strategy = self.strategy
        if strategy == "compensated-double":
            strategy = "compensated"
            object.__setattr__(self, "strategy", strategy)
        if strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        if self.mantissa_bits is not None and self.mantissa_bits < 1:
            raise ValueError(f"mantissa_bits must be positive, got {self.mantissa_bits}")
        if not 0.0 < self.residual_cap < 0.5:
            raise ValueError(f"residual_cap must be in (0, 0.5), got {self.residual_cap}")


@dataclass(frozen=True)
class CertifiedInteger:
    """An integer recovered from a floating sum, plus its rounding evidence.

    ``residual`` is the pre-rounding distance of the sum (after division by
    N) from the returned integer, widened by a forward error bound on the
    evaluation itself; certification means it stayed below the policy's
    cap.  ``policy_used`` reflects the strategy that finally certified,
    ``escalations`` how many ladder steps that took.
    """

    value: int
    residual: float
    policy_used: PrecisionPolicy
    escalations: int = 0


class CertificationError(ArithmeticError):
    """No strategy on the ladder brought the residual under the cap."""

    def __init__(self, message: str, residual: float, policy: PrecisionPolicy):
        super().__init__(message)
        self.residual = residual
        self.policy = policy


def required_bits(params: Params) -> int:
    """Mantissa budget that certifies the spectral sum for these params.

    ceil(n*log2(2k+1)) bounds the term magnitudes, ceil(log2 N) the term
    count, plus fixed guard bits.  The ceilings are computed exactly via
    bit lengths rather than floating logs.
    """
    magnitude = pow(params.width, params.n) - 1
    return magnitude.bit_length() + (params.dim - 1).bit_length() + GUARD_BITS


def eigenvalues(params: Params, method: str = "trig-ratio") -> EigenvalueSet:
    """Spectrum of the central circulant by one of three evaluation methods.

    All methods pin E_1 = 2k+1 exactly and agree pairwise to ~1e-12
    relative for moderate N; they differ only in conditioning and cost.
    Requires n >= 1 (the n=0 ring is a 1x1 identity with nothing to
    diagonalize).
    """
    if params.n < 1:
        raise ValueError("eigenvalues are defined for n >= 1")
    kern = _backend.active()
    if method == "trig-ratio":
        values = kern.eigenvalues_trig(params.k, params.dim)
    elif method == "cosine-sum":
        values = kern.eigenvalues_cosine(params.k, params.dim)
    elif method == "chebyshev":
        values = kern.eigenvalues_chebyshev(params.k, params.dim)
    else:
        raise ValueError(f"method must be one of {EIGENVALUE_METHODS}, got {method!r}")
    return EigenvalueSet(params=params, values=tuple(values), method=method)


def dirichlet_kernel(k: int, theta: float) -> float:
    """D_k(theta) = sin((2k+1)theta/2) / sin(theta/2), with D_k(0) = 2k+1.

    Fourier partial-sum kernel; at theta = 2*pi*(r-1)/N it reproduces the
    circulant eigenvalues, which makes it a fourth agreement check on the
    spectrum.
    """
    half = math.sin(theta / 2.0)
    if half == 0.0:
        return float(2 * k + 1)
    return math.sin((2 * k + 1) * theta / 2.0) / half


def _round_with_residual(quotient: float) -> tuple[int, float]:
    if not math.isfinite(quotient):
        return 0, math.inf
    nearest = round(quotient)
    return int(nearest), abs(quotient - nearest)


def _evaluate_double(params: Params, phase: int | None, compensated: bool) -> tuple[int, float]:
    kern = _backend.active()
    if phase is None:
        terms = kern.spectral_terms_central(params.k, params.n, params.dim)
    else:
        terms = kern.spectral_terms_coefficient(params.k, params.n, params.dim, phase)
    total = kern.sum_compensated(terms) if compensated else kern.sum_plain(terms)
    quotient = total / params.dim
    value, measured = _round_with_residual(quotient)
    abs_total = kern.sum_abs(terms)
    if not math.isfinite(quotient) or not math.isfinite(abs_total):
        return value, math.inf
    # Forward error bound on the quotient, relative to the absolute term
    # mass: each sine-ratio power costs ~3n ulps (two sines and a division,
    # amplified n-fold through the power) plus slack for the phase cosine;
    # plain accumulation adds one ulp per term, Neumaier O(1); the final
    # ulp covers division by N and the quantization of the quotient itself,
    # which is what keeps the certificate honest above 2^53.
    per_term = 3.0 * params.n + 8.0
    accumulation = 4.0 if compensated else float(len(terms) + 1)
    bound = abs_total * (per_term + accumulation) * _EPS / params.dim
    bound += math.ulp(abs(quotient))
    return value, measured + bound


def _evaluate_arbitrary(params: Params, phase: int | None, bits: int) -> tuple[int, float]:
    ctx = mpmath.mp.clone()
    ctx.prec = bits
    n, n_dim = params.n, params.dim
    m = params.width
    pi = +ctx.pi
    terms = [ctx.mpf(m**n)]
    for r in range(1, n_dim):
        num = ctx.sin((pi * (m * r)) / n_dim)
        den = ctx.sin((pi * r) / n_dim)
        term = (num / den) ** n
        if phase is not None:
            term *= ctx.cos((2 * pi * ((r * phase) % n_dim)) / n_dim)
        terms.append(term)
    quotient = ctx.fsum(terms) / n_dim
    nearest = ctx.nint(quotient)
    measured = abs(quotient - nearest)
    # Same error-bound shape as the double path at working precision;
    # fsum rounds once, so accumulation costs O(1) ulps.
    abs_total = ctx.fsum(abs(term) for term in terms)
    bound = ctx.ldexp(abs_total * (3 * n + 12) / n_dim + abs(quotient), -bits)
    return int(nearest), float(measured + bound)


def _certify(params: Params, phase: int | None, policy: PrecisionPolicy) -> CertifiedInteger:
    ladder = STRATEGIES[STRATEGIES.index(policy.strategy):]
    value, residual = 0, math.inf
    for escalations, strategy in enumerate(ladder):
        if strategy == "arbitrary":
            bits = policy.mantissa_bits or required_bits(params)
            value, residual = _evaluate_arbitrary(params, phase, bits)
            effective = replace(policy, strategy="arbitrary", mantissa_bits=bits)
        else:
            value, residual = _evaluate_double(params, phase, strategy == "compensated")
            effective = replace(policy, strategy=strategy)
        if residual < policy.residual_cap:
            return CertifiedInteger(
                value=value,
                residual=residual,
                policy_used=effective,
                escalations=escalations,
            )
    where = "central sum" if phase is None else f"coefficient sum at phase offset {phase}"
    raise CertificationError(
        f"residual {residual} >= cap {policy.residual_cap} for the {where} "
        f"(k={params.k}, n={params.n}) even at strategy {ladder[-1]!r}",
        residual=residual,
        policy=policy,
    )


def central_via_spectrum(
    params: Params, policy: PrecisionPolicy = PrecisionPolicy()
) -> CertifiedInteger:
    """M^(2k,n) from the closed-form sine-ratio sum, certified."""
    return _certify(params, None, policy)


def coefficient_via_spectrum(
    params: Params, l: int, policy: PrecisionPolicy = PrecisionPolicy()
) -> CertifiedInteger:
    """Coefficient ``p_l`` from the phase-weighted spectral sum, certified.

    Uses the real cosine form: the eigenvalue pairing E_r = E_{N+2-r}
    cancels the imaginary parts of the conjugate Fourier phases, leaving
    cosine weights.  The phase index is taken relative to the central
    column, ``(l - kn) mod N``: the n-th power of the central circulant
    stores ``p_l`` that many columns right of its diagonal, and phase 0
    (l = kn) reduces to the central sum.
    """
    if not 0 <= l <= params.degree:
        raise ValueError(f"l must be in [0, {params.degree}], got {l}")
    phase = (l - params.k * params.n) % params.dim
    return _certify(params, phase, policy)
