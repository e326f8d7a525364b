"""Dense symmetric eigendecomposition and orthonormalization helpers.

Eigenvector conventions used throughout the package: bases are stored as
(d, m) arrays with eigenvectors in columns, eigenvalues sorted descending.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError


@dataclass
class EigenPairs:
    """A partial or full symmetric eigendecomposition.

    values:  (m,) eigenvalues, descending.
    vectors: (d, m) orthonormal eigenvectors, one per column.
    """

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        self.vectors = np.asarray(self.vectors, dtype=float)
        if self.vectors.ndim != 2 or self.values.ndim != 1:
            raise InvalidInputError("values must be 1-D and vectors 2-D")
        if self.vectors.shape[1] != self.values.shape[0]:
            raise InvalidInputError(
                f"{self.values.shape[0]} eigenvalues but "
                f"{self.vectors.shape[1]} eigenvector columns"
            )

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def gram_deviation(self) -> float:
        g = self.vectors.T @ self.vectors
        return float(np.abs(g - np.eye(self.m)).max()) if self.m else 0.0


def sym_eigh(mat: np.ndarray) -> EigenPairs:
    """Full eigendecomposition of a real symmetric matrix, descending order.

    The contract is the reconstruction residual
    ``|Q diag(w) Q^T - M|_F <= 1e-10 * max(1, |M|_F)``, not the method;
    LAPACK via numpy satisfies it with a wide margin.
    """
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise InvalidInputError("matrix has non-finite entries")
    sym = 0.5 * (mat + mat.T)
    w, q = np.linalg.eigh(sym)
    order = np.argsort(w)[::-1]
    return EigenPairs(values=w[order], vectors=q[:, order])


def orthonormalize(vectors: np.ndarray, drop_tol: float = 1e-14):
    """Modified Gram-Schmidt with one re-pass.

    vectors: (d, k) array of columns. Returns ``(basis, dropped)`` where
    `basis` is (d, r) with r <= k and `dropped` lists the indices of input
    columns whose residual norm fell below ``drop_tol`` times the largest
    input norm.
    """
    v = np.array(vectors, dtype=float, copy=True)
    if v.ndim != 2:
        raise InvalidInputError("expected a (d, k) array of column vectors")
    if not np.all(np.isfinite(v)):
        raise InvalidInputError("vectors have non-finite entries")
    k = v.shape[1]
    if k == 0:
        return v, []
    scale = max(float(np.linalg.norm(v, axis=0).max()), np.finfo(float).tiny)
    kept: list[int] = []
    dropped: list[int] = []
    cols: list[np.ndarray] = []
    for j in range(k):
        x = v[:, j]
        for c in cols:
            x = x - (c @ x) * c
        for c in cols:  # re-pass controls cancellation for ill-aligned inputs
            x = x - (c @ x) * c
        nrm = float(np.linalg.norm(x))
        if nrm <= drop_tol * scale:
            dropped.append(j)
            continue
        cols.append(x / nrm)
        kept.append(j)
    basis = np.column_stack(cols) if cols else np.empty((v.shape[0], 0))
    return basis, dropped
