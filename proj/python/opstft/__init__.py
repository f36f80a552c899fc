"""Operator-valued short-time Fourier analysis on Z_N x Z_N.

Thin python layer over the compiled core.  Matrices and fields are
numpy arrays of complex128; an operator field over phase space is an
(N, N, N, N) array indexed [k, l, :, :].
"""

from ._core import (  # noqa: F401
    __doc__ as _core_doc,
    admissibility,
    canonical_dual_apply,
    cocycle,
    coorbit_norm,
    default_window,
    frame_bounds,
    fstft,
    fstft_adjoint,
    gaussian_window,
    hs_inner,
    kernel_project,
    localization_op,
    membership_check,
    mixed_norm,
    moyal_orthogonality,
    op_stft,
    op_stft_adjoint,
    polynomial_weight,
    schatten_norm,
    spectrogram,
    tf_shift_matrix,
    toeplitz,
    twisted_conv,
)

__all__ = [
    "admissibility",
    "canonical_dual_apply",
    "cocycle",
    "coorbit_norm",
    "default_window",
    "frame_bounds",
    "fstft",
    "fstft_adjoint",
    "gaussian_window",
    "hs_inner",
    "kernel_project",
    "localization_op",
    "membership_check",
    "mixed_norm",
    "moyal_orthogonality",
    "op_stft",
    "op_stft_adjoint",
    "polynomial_weight",
    "schatten_norm",
    "spectrogram",
    "tf_shift_matrix",
    "toeplitz",
    "twisted_conv",
]
