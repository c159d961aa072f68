"""Dense linear algebra substrate over the real and complex fields.

Everything downstream (frame bounds, outer-product Gram spectra, the
dependence classifier) reduces to self-adjoint eigendecompositions and
numerical rank, so both live here with explicit, reportable tolerances.
The eigensolver is a cyclic Jacobi iteration: the matrices in this
problem domain are tiny (a few hundred rows at most) and Jacobi is
simple, accurate, and handles the Hermitian case with unitary rotations.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import NotSelfAdjoint, ShapeMismatch

_EPS = np.finfo(np.float64).eps

#: off-diagonal Frobenius norm target, relative to the input norm
JACOBI_RELTOL = 1e-13
JACOBI_MAX_SWEEPS = 100

#: relative tolerance for the self-adjointness test
SELF_ADJOINT_RELTOL = 1e-12


@dataclass(frozen=True)
class SpectralData:
    """Eigendecomposition of a self-adjoint matrix.

    eigenvalues : real, sorted descending
    eigenvectors : orthonormal columns, eigenvectors[:, i] pairs with eigenvalues[i]
    tol_used : the off-diagonal norm target the iteration converged below
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    tol_used: float


def as_matrix(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d array, got shape {a.shape}")
    if a.dtype == complex or np.iscomplexobj(a):
        return a.astype(np.complex128, copy=False)
    return a.astype(np.float64, copy=False)


def is_self_adjoint(a, reltol: float = SELF_ADJOINT_RELTOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    scale = np.linalg.norm(a)
    return float(np.max(np.abs(a - a.conj().T), initial=0.0)) <= reltol * scale


def _rotation(app, aqq, apq):
    """Jacobi angle zeroing the (p, q) entry; returns (c, g) with c^2+|g|^2=1."""
    r = abs(apq)
    theta = (aqq - app) / (2.0 * r)
    # small-magnitude root of t^2 - 2*theta*t - 1 = 0
    if theta > 0.0:
        t = -1.0 / (theta + math.hypot(theta, 1.0))
    elif theta < 0.0:
        t = 1.0 / (-theta + math.hypot(theta, 1.0))
    else:
        t = -1.0
    c = 1.0 / math.hypot(t, 1.0)
    return c, (t * c) * (apq / r).conjugate()


def _jacobi_scalar(a_in: np.ndarray, want_vectors: bool, target: float):
    """Sweep kernel on Python scalars; beats numpy slicing for small n."""
    n = a_in.shape[0]
    a = a_in.tolist()
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)] if want_vectors else None
    skip = target / (10.0 * n)
    rng_n = range(n)

    for _ in range(JACOBI_MAX_SWEEPS):
        off = 0.0
        for i in range(n - 1):
            row = a[i]
            for j in range(i + 1, n):
                off += abs(row[j]) ** 2
        if (2.0 * off) ** 0.5 <= target:
            break
        for p in range(n - 1):
            row_p = a[p]
            for q in range(p + 1, n):
                apq = row_p[q]
                if abs(apq) <= skip:
                    continue
                row_q = a[q]
                app = row_p[p]
                aqq = row_q[q]
                c, g = _rotation(
                    app.real if type(app) is complex else app,
                    aqq.real if type(aqq) is complex else aqq,
                    apq,
                )
                gc = g.conjugate()
                for k in rng_n:
                    x = row_p[k]
                    y = row_q[k]
                    row_p[k] = c * x + gc * y
                    row_q[k] = c * y - g * x
                for k in rng_n:
                    row = a[k]
                    x = row[p]
                    y = row[q]
                    row[p] = c * x + g * y
                    row[q] = c * y - gc * x
                row_p[q] = 0.0
                row_q[p] = 0.0
                if want_vectors:
                    for k in rng_n:
                        row = v[k]
                        x = row[p]
                        y = row[q]
                        row[p] = c * x + g * y
                        row[q] = c * y - gc * x

    w = np.array([a[i][i].real for i in rng_n])
    return w, (np.array(v, dtype=a_in.dtype) if want_vectors else None)


def _jacobi_numpy(a: np.ndarray, want_vectors: bool, target: float):
    """Sweep kernel on numpy slices; wins once rows are long enough."""
    n = a.shape[0]
    v = np.eye(n, dtype=a.dtype) if want_vectors else None
    skip = target / (10.0 * n)

    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(a[p, q]) if np.iscomplexobj(a) else float(a[p, q])
                if abs(apq) <= skip:
                    continue
                c, g = _rotation(float(a[p, p].real), float(a[q, q].real), apq)
                gc = np.conj(g)
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + gc * row_q
                a[q, :] = c * row_q - g * row_p
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + g * col_q
                a[:, q] = c * col_q - gc * col_p
                a[p, q] = 0.0
                a[q, p] = 0.0
                if want_vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp + g * vq
                    v[:, q] = c * vq - gc * vp

    return np.diag(a).real.copy(), v


_SCALAR_KERNEL_MAX = 40


def _jacobi(a: np.ndarray, want_vectors: bool):
    """Cyclic Jacobi sweeps on a self-adjoint matrix (copy of ``a``)."""
    n = a.shape[0]
    cplx = np.iscomplexobj(a)
    a = a.astype(np.complex128 if cplx else np.float64)
    a = (a + a.conj().T) / 2.0
    target = JACOBI_RELTOL * np.linalg.norm(a)
    if n == 1:
        v = np.eye(1, dtype=a.dtype) if want_vectors else None
        return np.array([a[0, 0].real]), v, target
    if n <= _SCALAR_KERNEL_MAX:
        w, v = _jacobi_scalar(a, want_vectors, target)
    else:
        w, v = _jacobi_numpy(a, want_vectors, target)
    return w, v, target


def _canonical_phases(v: np.ndarray) -> np.ndarray:
    """First entry of each column with modulus > 1e-10 made real positive."""
    v = v.copy()
    for j in range(v.shape[1]):
        col = v[:, j]
        big = np.flatnonzero(np.abs(col) > 1e-10)
        if big.size:
            z = col[big[0]]
            v[:, j] = col * (np.conj(z) / abs(z))
            if not np.iscomplexobj(v):
                v[:, j] = v[:, j].real
    return v


def hermitian_eig(a) -> SpectralData:
    """Full eigendecomposition of a self-adjoint matrix.

    Raises NotSelfAdjoint when max|a[i,j] - conj(a[j,i])| exceeds
    1e-12 * ||a||_F.  Eigenvalues come back descending; each eigenvector
    has its first non-negligible entry made real and positive.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise NotSelfAdjoint(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
    if not is_self_adjoint(a):
        raise NotSelfAdjoint("matrix is not self-adjoint within tolerance")
    w, v, target = _jacobi(a, want_vectors=True)
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = _canonical_phases(v[:, order])
    w.flags.writeable = False
    v.flags.writeable = False
    return SpectralData(eigenvalues=w, eigenvectors=v, tol_used=target)


def hermitian_eigvalues(a) -> np.ndarray:
    """Descending eigenvalues only (skips accumulating the rotations)."""
    a = as_matrix(a)
    if not is_self_adjoint(a):
        raise NotSelfAdjoint("matrix is not self-adjoint within tolerance")
    w, _, _ = _jacobi(a, want_vectors=False)
    return np.sort(w)[::-1]


def singular_values(a) -> np.ndarray:
    """Descending singular values via a self-adjoint eigenproblem.

    A self-adjoint input yields |eigenvalues| directly.  Anything else
    goes through the embedding [[0, a], [a*, 0]], whose spectrum is
    {+sigma_i, -sigma_i, 0...}: unlike the a*a route this loses no
    precision, so true zeros land at eps * sigma_max rather than
    sqrt(eps) * sigma_max and the default rank tolerance stays meaningful.
    """
    a = as_matrix(a)
    m, n = a.shape
    if m == n and is_self_adjoint(a):
        w, _, _ = _jacobi(a, want_vectors=False)
        return np.sort(np.abs(w))[::-1]
    h = np.zeros((m + n, m + n), dtype=a.dtype)
    h[:m, m:] = a
    h[m:, :m] = a.conj().T
    w, _, _ = _jacobi(h, want_vectors=False)
    return np.clip(np.sort(w)[::-1][: min(m, n)], 0.0, None)


def default_rank_tol(shape: tuple[int, int], sigma_max: float) -> float:
    """max(rows, cols) * machine epsilon * largest singular value."""
    return max(shape) * _EPS * sigma_max


def rank_from_singular_values(sigma: np.ndarray, shape, tol=None) -> int:
    if tol is None:
        env = os.environ.get("FRAMEKIT_TOL")
        if env is not None:
            tol = float(env)
    if tol is None:
        tol = default_rank_tol(shape, float(sigma[0]) if len(sigma) else 0.0)
    return int(np.count_nonzero(sigma > tol))


def numerical_rank(a, tol=None) -> int:
    """Count of singular values above ``tol``.

    Default tol is max(rows, cols) * eps * sigma_max, overridable by the
    FRAMEKIT_TOL environment variable.  Dependence verdicts downstream
    hinge on this count, so the threshold is explicit and reportable.
    """
    a = as_matrix(a)
    sigma = singular_values(a)
    return rank_from_singular_values(sigma, a.shape, tol)


def hadamard(a, b) -> np.ndarray:
    """Entrywise product."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"hadamard needs equal shapes, got {a.shape} and {b.shape}")
    return a * b


def kronecker(a, b) -> np.ndarray:
    """Block matrix [a[i,j] * b]."""
    return np.kron(as_matrix(a), as_matrix(b))


def frobenius_ip(s, t):
    """Trace inner product Tr(s* t); a plain sum of products over the reals."""
    s = as_matrix(s)
    t = as_matrix(t)
    if s.shape != t.shape:
        raise ShapeMismatch(f"frobenius_ip needs equal shapes, got {s.shape} and {t.shape}")
    value = np.sum(np.conj(s) * t)
    return complex(value) if np.iscomplexobj(value) else float(value)


def vectorize_outer(phi) -> np.ndarray:
    """Flatten phi phi* into the stacked blocks phi[k] * conj(phi), k = 1..N."""
    phi = np.asarray(phi).reshape(-1)
    return np.kron(phi, np.conj(phi))


def sylvester_det_check(s, t):
    """Both sides of det(I_M + S T) = det(I_N + T S)."""
    s = as_matrix(s)
    t = as_matrix(t)
    m, n = s.shape
    if t.shape != (n, m):
        raise ShapeMismatch(f"incompatible shapes {s.shape} and {t.shape}")
    left = np.linalg.det(np.eye(m, dtype=np.result_type(s, t)) + s @ t)
    right = np.linalg.det(np.eye(n, dtype=np.result_type(s, t)) + t @ s)
    if not (np.iscomplexobj(s) or np.iscomplexobj(t)):
        return float(left.real), float(right.real)
    return complex(left), complex(right)
