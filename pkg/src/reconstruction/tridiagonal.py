"""
Tridiagonal systems.

Row k reads  sub[k] x[k-1] + diag[k] x[k] + sup[k] x[k+1] = rhs[k]
with sub[0] and sup[-1] ignored. Right-hand sides may carry extra trailing
columns that are solved together.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg

from ..utils.errors import SingularSystemError


@dataclass(frozen=True)
class TriDiag:
    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    @property
    def size(self) -> int:
        return self.diag.shape[0]

    def dense(self) -> np.ndarray:
        """Full matrix, for checks on small systems."""
        matrix = np.diag(self.diag)
        matrix += np.diag(self.sub[1:], -1)
        matrix += np.diag(self.sup[:-1], 1)
        return matrix

    def banded(self) -> np.ndarray:
        """(3, n) storage expected by scipy.linalg.solve_banded with (1, 1)."""
        ab = np.zeros((3, self.size))
        ab[0, 1:] = self.sup[:-1]
        ab[1] = self.diag
        ab[2, :-1] = self.sub[1:]
        return ab


def thomas_solve(system: TriDiag) -> np.ndarray:
    """
    Thomas algorithm (forward elimination, back substitution).

    Raises:
        SingularSystemError: If a zero pivot appears during elimination
    """
    n = system.size
    a = np.asarray(system.sub, dtype=float)
    b = np.asarray(system.diag, dtype=float)
    c = np.asarray(system.sup, dtype=float)
    d = np.asarray(system.rhs, dtype=float)

    c_prime = np.zeros(n)
    d_prime = np.zeros_like(d)

    pivot = b[0]
    if pivot == 0.0:
        raise SingularSystemError("Zero pivot at row 0")
    c_prime[0] = c[0] / pivot
    d_prime[0] = d[0] / pivot
    for k in range(1, n):
        pivot = b[k] - a[k] * c_prime[k - 1]
        if pivot == 0.0:
            raise SingularSystemError(f"Zero pivot at row {k}")
        c_prime[k] = c[k] / pivot if k < n - 1 else 0.0
        d_prime[k] = (d[k] - a[k] * d_prime[k - 1]) / pivot

    x = np.empty_like(d_prime)
    x[-1] = d_prime[-1]
    for k in range(n - 2, -1, -1):
        x[k] = d_prime[k] - c_prime[k] * x[k + 1]
    return x


def banded_solve(system: TriDiag) -> np.ndarray:
    """Same system through LAPACK's banded solver."""
    return solve_banded_rhs(system.banded(), system.rhs)


def solve_banded_rhs(ab: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    try:
        return scipy.linalg.solve_banded((1, 1), ab, rhs, check_finite=False)
    except np.linalg.LinAlgError as e:
        raise SingularSystemError(str(e)) from e


@lru_cache(maxsize=64)
def pinned_band(n_interfaces: int, sub: float, sup: float) -> np.ndarray:
    """
    Banded storage of a constant-coefficient system whose first and last rows
    are the identity (values pinned by a closure).
    """
    ab = np.zeros((3, n_interfaces))
    ab[1] = 1.0
    ab[0, 2:] = sup
    ab[2, :-2] = sub
    ab.flags.writeable = False
    return ab


def pinned_system(n_interfaces: int, sub: float, sup: float, rhs: np.ndarray) -> TriDiag:
    """TriDiag view of ``pinned_band`` for a given right-hand side."""
    sub_line = np.full(n_interfaces, sub)
    sup_line = np.full(n_interfaces, sup)
    sub_line[0] = sub_line[-1] = 0.0
    sup_line[0] = sup_line[-1] = 0.0
    return TriDiag(sub_line, np.ones(n_interfaces), sup_line, rhs)
