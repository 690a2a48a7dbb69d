"""Dense complex linear algebra kernel used by every other module.

All values are plain ``numpy.ndarray`` of dtype complex128 and are treated
as immutable; every function here is pure.  The fixed composite-index
convention is ``index = coarse * fine_size + fine`` (row-major), so a
system-with-clock space orders its basis as ``system_index * N + time``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionCapError, ShapeMismatchError

#: Default cap on the total number of entries of any constructed tensor.
DEFAULT_MAX_ENTRIES = 1 << 20

_max_entries = DEFAULT_MAX_ENTRIES


def set_max_entries(n: int) -> None:
    """Set the global entry cap (desk-scale guard, not a memory manager)."""
    global _max_entries
    if n < 1:
        raise ValueError(f"entry cap must be positive, got {n}")
    _max_entries = int(n)


def max_entries() -> int:
    return _max_entries


def check_entries(rows: int, cols: int = 1) -> None:
    if rows * cols > _max_entries:
        raise DimensionCapError(
            f"tensor of {rows}x{cols} = {rows * cols} entries exceeds cap {_max_entries}"
        )


@dataclass(frozen=True)
class Tolerance:
    """Absolute per-entry comparison bound."""

    eps: float = 1e-9

    def __post_init__(self):
        if not (0.0 < self.eps < 1.0):
            raise ValueError(f"tolerance must lie in (0, 1), got {self.eps}")


DEFAULT_TOL = Tolerance()


def as_tolerance(tol: Tolerance | float) -> Tolerance:
    return tol if isinstance(tol, Tolerance) else Tolerance(float(tol))


def as_matrix(a) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeMismatchError(f"expected a matrix, got ndim={m.ndim}")
    if not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    return m


def as_vector(a) -> np.ndarray:
    """Coerce to a finite 1-D complex128 array."""
    v = np.asarray(a, dtype=np.complex128).reshape(-1)
    if not np.isfinite(v).all():
        raise ValueError("vector contains non-finite entries")
    return v


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def basis_vector(n: int, i: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.complex128)
    e[i] = 1.0
    return e


def tensor(a, b) -> np.ndarray:
    """Kronecker product with the global entry cap enforced."""
    a, b = as_matrix(a), as_matrix(b)
    check_entries(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    return np.kron(a, b)


def tensor_all(ops: Iterable) -> np.ndarray:
    """Left-fold Kronecker product of a nonempty sequence."""
    ops = list(ops)
    if not ops:
        raise ValueError("tensor_all of an empty sequence")
    out = as_matrix(ops[0])
    for op in ops[1:]:
        out = tensor(out, op)
    return out


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def max_abs_diff(a, b) -> float:
    a, b = np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def approx_equal(a, b, tol: Tolerance | float = DEFAULT_TOL) -> tuple[bool, float]:
    """Entrywise comparison; returns (equal, max per-entry error).

    Shape mismatch raises instead of returning False.
    """
    err = max_abs_diff(a, b)
    return err <= as_tolerance(tol).eps, err


def kron_apply(ops: Sequence[np.ndarray], x: np.ndarray) -> np.ndarray:
    """Apply ``ops[0] (x) ops[1] (x) ...`` to x without building the product.

    ``x`` may be a vector of length prod(cols) or a matrix whose columns are
    such vectors.  Used where the explicit Kronecker factor would breach the
    entry cap.
    """
    ops = [as_matrix(op) for op in ops]
    x = np.asarray(x, dtype=np.complex128)
    vec_in = x.ndim == 1
    cols = x.reshape(-1, 1) if vec_in else x
    in_dims = [op.shape[1] for op in ops]
    if int(np.prod(in_dims)) != cols.shape[0]:
        raise ShapeMismatchError(
            f"operand rows {cols.shape[0]} != product of op columns {in_dims}"
        )
    t = cols.reshape(*in_dims, cols.shape[1])
    for i, op in enumerate(ops):
        t = np.moveaxis(np.tensordot(op, t, axes=([1], [i])), 0, i)
    out = t.reshape(-1, cols.shape[1])
    return out[:, 0] if vec_in else out


def swap_map(n: int, m: int) -> np.ndarray:
    """Permutation matrix exchanging the two factors of an n (x) m product."""
    check_entries(n * m, n * m)
    s = np.zeros((m * n, n * m), dtype=np.complex128)
    for i in range(n):
        for j in range(m):
            s[j * n + i, i * m + j] = 1.0
    return s


def is_unitary(u, tol: Tolerance | float = DEFAULT_TOL) -> tuple[bool, float]:
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        return False, float("inf")
    return approx_equal(u @ u.conj().T, identity(u.shape[0]), tol)


def orthonormal_range(
    mat: np.ndarray, rank_threshold: float = 1e-7
) -> np.ndarray:
    """Orthonormal basis of the column space, via pivoted modified Gram-Schmidt.

    Columns whose residual norm falls below ``rank_threshold`` are treated as
    dependent.  Adequate for (near-)projectors, where the spectrum is far from
    the threshold; no general eigensolver involved.
    """
    work = as_matrix(mat).copy()
    basis: list[np.ndarray] = []
    for _ in range(min(work.shape)):
        norms = np.linalg.norm(work, axis=0)
        pivot = int(np.argmax(norms))
        if norms[pivot] <= rank_threshold:
            break
        q = work[:, pivot] / norms[pivot]
        basis.append(q)
        work -= np.outer(q, q.conj() @ work)
    if not basis:
        return np.zeros((mat.shape[0], 0), dtype=np.complex128)
    return np.column_stack(basis)
