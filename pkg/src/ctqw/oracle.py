"""Brute-force reference: dense symmetric eigendecomposition by cyclic Jacobi
rotations and direct evaluation of the propagator matrix elements.

The rotation eigensolver is written out here rather than delegated to the
tridiagonal machinery used by the pipeline: the two routes must share no
code for the cross-checks to mean anything.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, InvalidParams, NotSymmetric
from .graphs import Graph, Stratification

MAX_DENSE_DIM = 2000


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    eigenvalues: np.ndarray   # ascending
    eigenvectors: np.ndarray  # orthonormal columns, matching order


def eigendecompose_symmetric(matrix: np.ndarray, *, max_sweeps: int = 60) -> EigenDecomposition:
    """Full spectrum of a dense symmetric matrix via cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm falls below 1e-12
    relative to the matrix norm (quadratic convergence makes the tail cheap).
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidParams(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_DENSE_DIM:
        raise InvalidParams(f"matrix too large ({n} > {MAX_DENSE_DIM})")
    asym = float(np.abs(a - a.T).max())
    if asym > 1e-12:
        raise NotSymmetric(f"matrix asymmetry {asym:.3e} exceeds 1e-12")
    a = 0.5 * (a + a.T)

    v = np.eye(n)
    if n == 1:
        return EigenDecomposition(eigenvalues=a.diagonal().copy(), eigenvectors=v)
    fro = float(np.linalg.norm(a))
    tol = 1e-12 * max(1.0, fro)

    def off_norm() -> float:
        # summed directly over off-diagonal entries: the difference
        # ||A||_F^2 - sum(diag^2) cancels catastrophically near convergence
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    for _ in range(max_sweeps):
        off = off_norm()
        if off <= tol:
            break
        skip = tol / (2.0 * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = np.sign(theta) / (abs(theta) + np.hypot(1.0, theta)) if theta != 0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                row_p, row_q = a[p].copy(), a[q].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        off = off_norm()
        if off > tol:
            raise ConvergenceFailure(
                f"off-norm {off:.3e} after {max_sweeps} sweeps (target {tol:.3e})"
            )

    order = np.argsort(a.diagonal(), kind="stable")
    eigenvalues = a.diagonal()[order].copy()
    eigenvectors = v[:, order].copy()
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return EigenDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


# one decomposition per graph instance; reads are safe concurrently and a
# duplicated population is merely wasted work, never wrong
_decompositions: "weakref.WeakKeyDictionary[Graph, EigenDecomposition]" = (
    weakref.WeakKeyDictionary()
)


def graph_eigendecomposition(g: Graph) -> EigenDecomposition:
    dec = _decompositions.get(g)
    if dec is None:
        dec = eigendecompose_symmetric(g.adjacency_float())
        _decompositions[g] = dec
    return dec


def oracle_amplitudes(g: Graph, origin: int, t):
    """Propagator column <alpha|exp(-iAt)|origin> for every vertex alpha.

    Scalar t gives a vector over vertices; an array t gives shape (n, T).
    """
    if not (0 <= origin < g.n):
        raise InvalidParams(f"origin {origin} out of range for n={g.n}")
    dec = graph_eigendecomposition(g)
    t = np.asarray(t, dtype=np.float64)
    phases = np.exp(-1j * np.outer(dec.eigenvalues, t.reshape(-1)))
    weighted = dec.eigenvectors * dec.eigenvectors[origin, :][None, :]
    out = weighted @ phases
    return out[:, 0] if t.ndim == 0 else out


def aggregate_to_strata(pvec: np.ndarray, strat: Stratification):
    """Fold per-vertex amplitudes into per-stratum ones.

    Returns ``(values, spread)`` with values[l] = sum over shell l divided by
    sqrt(shell size); ``spread`` is the largest deviation of any per-vertex
    amplitude from its shell mean, reporting on the equal-amplitude property
    rather than assuming it.
    """
    pvec = np.asarray(pvec)
    single = pvec.ndim == 1
    cols = pvec.reshape(pvec.shape[0], -1)
    levels = len(strat.shells)
    values = np.empty((levels, cols.shape[1]), dtype=np.complex128)
    spread = 0.0
    for l, shell in enumerate(strat.shells):
        idx = np.array(shell, dtype=np.int64)
        block = cols[idx, :]
        values[l] = block.sum(axis=0) / np.sqrt(len(shell))
        if len(shell) > 1:
            dev = np.abs(block - block.mean(axis=0, keepdims=True)).max()
            spread = max(spread, float(dev))
    return (values[:, 0], spread) if single else (values, spread)
