"""Truncated Toeplitz operators with analytic symbols and the least-squares
density profile.

For an analytic symbol the truncation to ``span{1, z, .., z^{M-1}}`` in the
monomial basis is lower triangular with the Taylor coefficients down the
diagonals. The density distance

    dist(f, M) = min over polynomials p of degree < M of || 1 - p*f ||_{H^2}

is computed by an orthogonal factorization of the (tall) convolution matrix —
never through the normal equations, which are routinely ill-conditioned for
nearly-inner symbols. Closed forms used in the tests: dist(1-z, M)^2 =
1/(M+1); dist(z, M) = 1; dist -> sqrt(1-|f(0)|^2) for inner f.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ZeroFunction
from .hardy import AnalyticRep

#: Relative singular-value cutoff for kernel dimension counts.
KERNEL_TOL = 1e-10

#: Default truncation-order schedule for density profiles.
DENSITY_SCHEDULE = (16, 32, 64, 128, 256, 512, 1024)


@dataclass(frozen=True)
class ToeplitzTruncation:
    symbol: AnalyticRep
    order: int
    matrix: np.ndarray


def toeplitz_matrix(symbol: AnalyticRep, order: int) -> ToeplitzTruncation:
    """Compression of multiplication by the symbol to degrees < order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    a = symbol.coefficients
    col = np.zeros(order, dtype=complex)
    take = min(order, a.size)
    col[:take] = a[:take]
    mat = scipy.linalg.toeplitz(col, np.zeros(order, dtype=complex))
    return ToeplitzTruncation(symbol=symbol, order=order, matrix=mat)


def adjoint_kernel_dim(symbol: AnalyticRep, order: int, tol: float = KERNEL_TOL) -> int:
    """Number of singular values below ``tol`` times the largest one.

    The adjoint's kernel and the truncation's cokernel have equal dimension,
    so a rank-revealing factorization of the truncation answers both. An
    identically-zero truncation kills everything: dimension = order.
    """
    trunc = toeplitz_matrix(symbol, order)
    sv = np.linalg.svd(trunc.matrix, compute_uv=False)
    top = float(sv[0])
    if top == 0.0:
        return order
    return int(np.count_nonzero(sv < tol * top))


def _require_nonzero(f: AnalyticRep) -> None:
    if float(np.max(np.abs(f.coefficients))) == 0.0:
        raise ZeroFunction("symbol is identically zero")


def szego_distance(f: AnalyticRep, order: int) -> float:
    """H^2 distance from 1 to {p*f : deg p < order}, via QR."""
    _require_nonzero(f)
    if order < 1:
        raise ValueError("order must be at least 1")
    a = f.coefficients
    rows = a.size + order - 1
    conv = np.zeros((rows, order), dtype=complex)
    for k in range(order):
        conv[k : k + a.size, k] = a
    target = np.zeros(rows, dtype=complex)
    target[0] = 1.0
    q, _ = np.linalg.qr(conv, mode="reduced")
    residual = target - q @ (q.conj().T @ target)
    return float(np.linalg.norm(residual))


def density_profile(f: AnalyticRep, schedule=DENSITY_SCHEDULE) -> tuple[tuple[int, float], ...]:
    """(order, distance) pairs along an increasing truncation schedule."""
    orders = [int(m) for m in schedule]
    if any(m < 1 for m in orders) or any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValueError("schedule must be increasing positive integers")
    return tuple((m, szego_distance(f, m)) for m in orders)


def density_profile_csv(profile) -> str:
    lines = ["M,distance"]
    for m, d in profile:
        lines.append(f"{m},{d:.17g}")
    return "\n".join(lines) + "\n"
