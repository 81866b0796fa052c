"""Central (2k+1)-nomial coefficients by three independent routes.

M^(2k,n) is the coefficient of x^{kn} in (1 + x + ... + x^{2k})^n, the
largest entry of the row.  The package computes it (and any other
coefficient p_l of the row) three ways:

- exact polynomial convolution (:mod:`cnomial.exact`), the oracle;
- exact circulant-matrix powers, reading the trace or a shifted row
  (:mod:`cnomial.circulant`);
- a closed-form trigonometric sum over the circulant spectrum, evaluated
  in floating point and rounded back with a certified residual
  (:mod:`cnomial.spectral`).

:mod:`cnomial.oeis` ties the k = 1, 2, 3 sequences to their OEIS entries;
the ``cnomial`` console script exposes everything on the command line.
Hot kernels run on a compiled extension when available, with a pure
Python fallback selected at import; ``available_backends``,
``active_backend``, and ``select_backend`` report and switch between
them.
"""
from ._backend import active_name as active_backend
from ._backend import available as available_backends
from ._backend import select as select_backend
from .circulant import (
    CirculantMatrix,
    build_central,
    build_shifted,
    central_via_trace,
    coefficient_via_shift,
    cyclic_permutation,
    identity,
    matrix_power,
    multiply,
    to_dense,
    trace,
)
from .exact import (
    ENUMERATION_CAP,
    CoefficientTable,
    EnumerationCapExceeded,
    central_coefficient,
    expand_power,
    multinomial_direct,
)
from .oeis import (
    OEIS_BY_K,
    BFileParseError,
    ComparisonReport,
    FetchError,
    SequenceIdError,
    SequenceRecord,
    compare,
    computed_sequence,
    fetch_bfile,
    fixture_for_k,
    registered_sequences,
)
from .params import Params
from .spectral import (
    DEFAULT_RESIDUAL_CAP,
    EIGENVALUE_METHODS,
    CertificationError,
    CertifiedInteger,
    EigenvalueSet,
    PrecisionPolicy,
    central_via_spectrum,
    coefficient_via_spectrum,
    dirichlet_kernel,
    eigenvalues,
    required_bits,
)

__version__ = "0.1.0"

__all__ = [
    "ENUMERATION_CAP",
    "DEFAULT_RESIDUAL_CAP",
    "EIGENVALUE_METHODS",
    "OEIS_BY_K",
    "BFileParseError",
    "CertificationError",
    "CertifiedInteger",
    "CirculantMatrix",
    "CoefficientTable",
    "ComparisonReport",
    "EigenvalueSet",
    "EnumerationCapExceeded",
    "FetchError",
    "Params",
    "PrecisionPolicy",
    "SequenceIdError",
    "SequenceRecord",
    "active_backend",
    "available_backends",
    "build_central",
    "build_shifted",
    "central_coefficient",
    "central_via_spectrum",
    "central_via_trace",
    "coefficient_via_shift",
    "coefficient_via_spectrum",
    "compare",
    "computed_sequence",
    "cyclic_permutation",
    "dirichlet_kernel",
    "eigenvalues",
    "expand_power",
    "fetch_bfile",
    "fixture_for_k",
    "identity",
    "matrix_power",
    "multinomial_direct",
    "multiply",
    "registered_sequences",
    "required_bits",
    "select_backend",
    "to_dense",
    "trace",
    "__version__",
]
