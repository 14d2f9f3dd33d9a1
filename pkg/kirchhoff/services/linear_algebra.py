"""
Dense linear solvers for the nodal system.

Float64 uses LAPACK LU with partial pivoting through scipy; ExactRational runs
the same elimination over Fractions.
"""
import logging
import warnings
from fractions import Fraction
from typing import List, Sequence

import numpy as np
import scipy.linalg

from ..config.settings import SINGULAR_PIVOT_RTOL
from ..exceptions import SingularSystemError

logger = logging.getLogger(__name__)


def solve_float(matrix: np.ndarray, rhs: np.ndarray, rtol: float = SINGULAR_PIVOT_RTOL) -> np.ndarray:
    """
    Solve A x = b by LU factorization with partial pivoting.

    Args:
        matrix: Square float matrix
        rhs: Right-hand side
        rtol: A pivot below rtol * n * max|A| counts as zero

    Returns:
        Solution vector

    Raises:
        SingularSystemError: effectively zero pivot
    """
    n = matrix.shape[0]
    if n == 0:
        return np.zeros(0)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(matrix, check_finite=True)

    scale = float(np.max(np.abs(matrix))) or 1.0
    pivots = np.abs(np.diag(lu))
    tiny = np.flatnonzero(pivots <= rtol * n * scale)
    if tiny.size:
        raise SingularSystemError(
            int(tiny[0]),
            f"|pivot|={pivots[tiny[0]]:.3e} vs scale {scale:.3e}; "
            "a node may be disconnected from start and terminal"
        )

    logger.debug(f"LU solve: n={n}, min|pivot|={pivots.min():.3e}")
    return scipy.linalg.lu_solve((lu, piv), rhs)


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """
    Solve A x = b exactly by Gaussian elimination over Fractions.

    Rows are swapped to bring the largest remaining entry of each column to the
    pivot position, mirroring the float path.

    Raises:
        SingularSystemError: a column has no non-zero pivot
    """
    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]

    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot_row][col] == 0:
            raise SingularSystemError(col, "zero pivot in exact elimination")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]

        pivot = a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / pivot
            if factor == 0:
                continue
            row, top = a[r], a[col]
            for c in range(col, n + 1):
                row[c] -= factor * top[c]

    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = a[r][n]
        for c in range(r + 1, n):
            acc -= a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x
