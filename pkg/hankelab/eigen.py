"""Two small eigensolvers used as independent oracles.

``dense_symmetric_eigen`` runs cyclic Jacobi rotations on a full symmetric
matrix, ``tridiagonal_eigen`` the implicit QL iteration on a symmetric
tridiagonal one.
"""

import logging
import math

import numpy as np

from .utils import ConvergenceError

_LOGGER = logging.getLogger(__name__)

EPS = np.finfo(float).eps
MAX_SWEEPS = 30
MAX_DENSE_SIZE = 512
SYMMETRY_TOL = 1e-14
QL_MAX_ITERATIONS = 60


def _rotate(a, v, p, q):
    app, aqq, apq = a[p, p], a[q, q], a[p, q]
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    a[p, :] = a[:, p]
    a[q, :] = a[:, q]
    a[p, p] = app - t * apq
    a[q, q] = aqq + t * apq
    a[p, q] = a[q, p] = 0.0

    if v is not None:
        col_p, col_q = v[:, p].copy(), v[:, q].copy()
        v[:, p] = c * col_p - s * col_q
        v[:, q] = s * col_p + c * col_q


def dense_symmetric_eigen(M, want=None, vectors=True):
    """Eigenvalues of a symmetric matrix in descending order.

    Returns ``(values, vecs)``; ``vecs`` holds the eigenvectors as
    columns, or is None when ``vectors`` is false. With ``want`` only the
    largest ``want`` pairs are returned.
    """
    a = np.array(M, dtype=float)
    N = a.shape[0]
    if a.ndim != 2 or a.shape[1] != N:
        raise ValueError('expected a square matrix, got shape {}'.format(a.shape))
    if N > MAX_DENSE_SIZE:
        raise ValueError('matrix of order {} exceeds {}'.format(N, MAX_DENSE_SIZE))
    scale = np.max(np.abs(a)) if a.size else 0.0
    if np.max(np.abs(a - a.T), initial=0.0) > SYMMETRY_TOL * scale:
        raise ValueError('matrix is not symmetric')

    v = np.eye(N) if vectors else None
    tiny = EPS * EPS * np.linalg.norm(a)
    for sweep in range(1, MAX_SWEEPS + 1):
        rotations = 0
        for p in range(N - 1):
            for q in range(p + 1, N):
                apq = a[p, q]
                threshold = max(N * EPS * math.sqrt(abs(a[p, p] * a[q, q])), tiny)
                if abs(apq) <= threshold:
                    continue
                _rotate(a, v, p, q)
                rotations += 1
        if not rotations:
            _LOGGER.debug('Jacobi eigensolver: order %d converged in %d sweeps', N, sweep)
            break
    else:
        raise ConvergenceError('Jacobi rotations did not converge in {} sweeps'.format(MAX_SWEEPS),
                               MAX_SWEEPS)

    values = np.diag(a).copy()
    order = np.argsort(-values, kind='stable')
    if want is not None:
        order = order[:want]
    return values[order], (v[:, order] if vectors else None)


def tridiagonal_eigen(J, want):
    """The ``want`` smallest eigenvalues of a Jacobi operator, ascending.

    Only a quarter of the truncation is trusted to approximate the
    spectrum of the infinite matrix, so ``want`` may not exceed N/4.
    """
    d = [float(x) for x in J.beta]
    e = [float(x) for x in J.alpha] + [0.0]
    n = len(d)
    limit = max(1, n // 4)
    if want < 1 or want > limit:
        raise ValueError('want must lie in [1, {}] for order {}, got {!r}'.format(limit, n, want))

    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            if iterations == QL_MAX_ITERATIONS:
                raise ConvergenceError('QL iteration stalled at index {}'.format(l), iterations)
            iterations += 1

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    _LOGGER.debug('QL on order %d: smallest eigenvalue %r', n, min(d))
    return np.sort(d)[:want]
