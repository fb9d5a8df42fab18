"""The three-term recurrence with linear coefficients

    (k + 1/k)(n + sigma) h_n - (n + xi) h_(n-1) - (n + eta) h_(n+1) = 0,   n >= 1

that every moment sequence of a commuting Hankel matrix satisfies.

Besides the closed-form solutions this module carries an independent
oracle for the square summable one: the tail of the sequence is the fixed
point of a contraction built from two auxiliary matrices, and the head is
filled in by running the recurrence downwards.
"""

import logging
import math
from collections import namedtuple

import numpy as np

from .hypergeo import gauss_2f1, gamma_ratio
from .utils import MODULUS, ConvergenceError

_LOGGER = logging.getLogger(__name__)

# Safety factor applied to the a priori bound on ||GR||.
CONTRACTION_MARGIN = 0.5
MAX_TAIL_OFFSET = 4096
TAIL_TOL = 1e-17


class RecurrenceParams(namedtuple('RecurrenceParams', 'k sigma xi eta')):
    __slots__ = ()

    @property
    def omega(self):
        return omega(self)


def omega(params):
    """(-xi - k^2 eta + (1 + k^2) sigma) / (1 - k^2)."""
    k2 = params.k * params.k
    return (-params.xi - k2 * params.eta + (1.0 + k2) * params.sigma) / (1.0 - k2)


def recurrence_residual(params, h):
    """Residual of the recurrence at every interior index 1 <= n <= len(h)-2.

    Each residual is divided by n times the largest of the three entries
    involved, so a correct sequence gives values at rounding level.
    """
    h = np.asarray(h, dtype=float)
    k = params.k
    n = np.arange(1, len(h) - 1, dtype=float)
    raw = ((k + 1.0 / k) * (n + params.sigma) * h[1:-1]
           - (n + params.xi) * h[:-2] - (n + params.eta) * h[2:])
    scale = np.maximum(np.maximum(abs(h[:-2]), abs(h[1:-1])), abs(h[2:]))
    scale = np.where(scale > 0.0, scale, 1.0)
    return abs(raw) / (n * scale)


def solution_basis(params, n):
    """The pair (h_n^(I), h_n^(II)) of explicit solutions.

    They are expressed through 2F1 at 1 - k^2 and solve the recurrence for
    n beyond a parameter dependent threshold.
    """
    k, sigma, xi, eta = params
    if float(xi - eta).is_integer():
        raise ValueError('xi - eta = {!r} must not be an integer'.format(xi - eta))
    w = omega(params)
    z = (1.0 - k) * (1.0 + k)
    h_one = k ** n * gauss_2f1(n + eta, w, eta - xi, z)
    h_two = (k ** n * gamma_ratio(n + xi + 1.0, n + eta)
             * gauss_2f1(n + xi + 1.0, w + xi - eta + 1.0, xi - eta + 2.0, z))
    return h_one, h_two


def wronskian(params, n):
    """Closed form of h_(n+1)^(II) h_n^(I) - h_(n+1)^(I) h_n^(II)."""
    k, sigma, xi, eta = params
    w = omega(params)
    return (gamma_ratio(n + xi + 1.0, n + eta + 1.0) * (xi - eta + 1.0)
            * k ** (-2.0 * xi - 2.0 * w - 1.0))


def _check_plus_domain(xi):
    if xi < 0 and float(-xi).is_integer():
        raise ValueError('-xi = {!r} is a positive integer'.format(-xi))


def solution_plus(params, n, scaled=False):
    """The square summable solution h_n^(+).

    With ``scaled`` the factor k^n is left out, which keeps values of order
    one for large n.
    """
    k, sigma, xi, eta = params
    _check_plus_domain(xi)
    w = omega(params)
    value = (gamma_ratio(n + xi + 1.0, n + w + xi + 1.0)
             * gauss_2f1(n + xi + 1.0, w + xi - eta + 1.0, n + w + xi + 1.0, k * k))
    if scaled:
        return value
    return k ** n * value


def solution_plus_sequence(params, count, scaled=False):
    return np.array([solution_plus(params, n, scaled) for n in range(count)])


def solution_plus_asymptotic(params, n):
    """Leading term (1-k^2)^(-omega-xi+eta-1) k^n n^(-omega)."""
    k, sigma, xi, eta = params
    w = omega(params)
    return (1.0 - k * k) ** (-w - xi + eta - 1.0) * k ** n * n ** (-w)


class BandSystem(namedtuple('BandSystem', 'k L G R kvec')):
    """Truncations of the matrices used by the fixed-point construction.

    ``L`` is the tridiagonal (k + 1/k, -1, -1) matrix and ``G`` its inverse
    up to a rank one term, ``G[m, n] = k^(|m-n|+1) / (1 - k^2)``. ``R`` is
    the tridiagonal perturbation that carries sigma, xi and eta of the
    recurrence shifted to start at a tail offset, and ``kvec`` is
    (1, k, k^2, ...).
    """
    __slots__ = ()

    @property
    def size(self):
        return len(self.kvec)

    def kernel_residual(self):
        """max |(L kvec)_n| over 1 <= n <= N-2."""
        if self.size < 3:
            return 0.0
        return float(np.max(np.abs((self.L @ self.kvec)[1:-1])))

    def identity_defects(self):
        """Deviation of LG and GL from I plus their rank one corrections.

        Only rows (for LG) or columns (for GL) that do not touch the
        truncation edge are compared.
        """
        k = self.k
        N = self.size
        correction = k * k / (1.0 - k * k)
        identity = np.eye(N)
        e0 = identity[0]
        expected_lg = identity + correction * np.outer(e0, self.kvec)
        expected_gl = identity + correction * np.outer(self.kvec, e0)
        lg = self.L @ self.G
        gl = self.G @ self.L
        inner = slice(0, N - 1)
        return (float(np.max(np.abs(lg - expected_lg)[inner, :])),
                float(np.max(np.abs(gl - expected_gl)[:, inner])))


def band_matrices(k, size):
    """L, G and kvec of the given size."""
    k = MODULUS.check(k)
    idx = np.arange(size)
    L = ((k + 1.0 / k) * np.eye(size)
         - np.eye(size, k=1) - np.eye(size, k=-1))
    G = k ** (np.abs(np.subtract.outer(idx, idx)) + 1.0) / (1.0 - k * k)
    kvec = k ** idx.astype(float)
    return L, G, kvec


def perturbation_matrix(params, offset, size):
    """R for the recurrence written as (L h)_m = (R h)_m on the tail.

    Dividing the recurrence at n = offset + m by n gives
    (k + 1/k)(1 + s) h_n - (1 + x) h_(n-1) - (1 + y) h_(n+1) = 0 with
    s = sigma/n, x = xi/n, y = eta/n, hence
    R[m, m] = -(k + 1/k) s, R[m, m-1] = x and R[m, m+1] = y.
    """
    k = params.k
    n = offset + np.arange(size, dtype=float)
    s, x, y = params.sigma / n, params.xi / n, params.eta / n
    R = np.diag(-(k + 1.0 / k) * s)
    R += np.diag(x[1:], k=-1)
    R += np.diag(y[:-1], k=1)
    return R


def build_band_system(params, size, offset=1):
    L, G, kvec = band_matrices(params.k, size)
    R = perturbation_matrix(params, offset, size)
    return BandSystem(k=params.k, L=L, G=G, R=R, kvec=kvec)


def _default_offset(params):
    """Smallest tail offset for which the a priori bound
    ||G|| ||R|| <= k/(1-k)^2 * rho (k + 1/k + 2) stays below the margin,
    rho being max(|sigma|, |xi|, |eta|) / offset."""
    k = params.k
    rho = max(abs(params.sigma), abs(params.xi), abs(params.eta), 1e-300)
    bound = k / (1.0 - k) ** 2 * (k + 1.0 / k + 2.0) * rho
    return max(1, int(math.ceil(bound / CONTRACTION_MARGIN)))


def _tail_length(k, span):
    return max(span, 1) + int(math.ceil(math.log(TAIL_TOL) / math.log(k))) + 2


def minimal_solution_oracle(params, N, offset=None):
    """The square summable solution, h_0 .. h_(N-1), by the fixed-point route.

    On the tail n >= offset the shifted sequence solves
    (I - G R) h = kvec, a contraction once ||G R|| < 1. The head is then
    produced by solving the recurrence for h_(n-1), n = offset, ..., 1.
    The result is scaled to h_0 = 1 (or unit l2-norm if h_0 vanishes).
    """
    k = MODULUS.check(params.k)
    if N < 1:
        raise ValueError('N must be positive, got {!r}'.format(N))
    fixed = offset is not None
    offset = offset if fixed else _default_offset(params)

    while True:
        size = _tail_length(k, N - offset)
        system = build_band_system(params, size, offset)
        GR = system.G @ system.R
        norm = np.linalg.norm(GR, 2)
        if norm < 1.0:
            break
        if fixed or offset >= MAX_TAIL_OFFSET:
            raise ConvergenceError(
                '||GR|| = {:.3g} >= 1 at tail offset {}'.format(norm, offset), offset)
        offset *= 2

    for n in range(1, offset + 1):
        if n + params.xi == 0.0:
            raise ValueError('descending step divides by n + xi = 0 at n = {}'.format(n))

    tail = np.linalg.solve(np.eye(size) - GR, system.kvec)
    _LOGGER.debug('minimal solution: offset=%d tail=%d ||GR||=%.3g', offset, size, norm)

    total = max(N, offset + 2)
    h = np.empty(total)
    take = total - offset
    h[offset:] = tail[:take]
    k_sum = k + 1.0 / k
    for n in range(offset, 0, -1):
        h[n - 1] = (k_sum * (n + params.sigma) * h[n] - (n + params.eta) * h[n + 1]) / (n + params.xi)

    h = h[:N]
    if h[0] != 0.0:
        return h / h[0]
    return h / np.linalg.norm(h)
