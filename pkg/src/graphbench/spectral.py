"""Laplacian spectrum and null-eigenvalue multiplicity.

The null multiplicity equals the number of connected components; this module
is the verification oracle for the union-find counter, not the production
path. Eigenvalues only, dense symmetric solver, size-capped.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonSymmetricInput, SizeCapExceeded

DEFAULT_SIZE_CAP = 3000
_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class SpectralResult:
    eigenvalues: np.ndarray  # ascending
    null_multiplicity: int
    tolerance_used: float


def laplacian_spectrum(lap: np.ndarray, size_cap: int = DEFAULT_SIZE_CAP) -> SpectralResult:
    """Eigenvalues of a symmetric Laplacian and the count below the null threshold.

    The threshold scales as n * machine_epsilon * max(1, lambda_max) so that
    rounding growth on large dense matrices does not leak true zeros past it.
    """
    lap = np.asarray(lap, dtype=np.float64)
    if lap.ndim != 2 or lap.shape[0] != lap.shape[1] or lap.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {lap.shape}")
    n = lap.shape[0]
    if n > size_cap:
        raise SizeCapExceeded(n, size_cap)
    skew = float(np.abs(lap - lap.T).max()) if n > 1 else 0.0
    if skew > _SYMMETRY_TOL:
        raise NonSymmetricInput(f"input asymmetric by {skew:.3g}")
    values = np.linalg.eigvalsh(lap)
    lam_max = float(values[-1])
    tol = n * np.finfo(np.float64).eps * max(1.0, lam_max)
    mult = int(np.count_nonzero(values < tol))
    values.setflags(write=False)
    return SpectralResult(eigenvalues=values, null_multiplicity=mult, tolerance_used=float(tol))
