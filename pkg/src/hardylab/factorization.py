"""Outer-function synthesis from boundary log-modulus, elementary inner
functions, inner-outer factorization, and the two pointwise function tests.

An outer function is reconstructed from its boundary log-modulus ``k`` as
``exp(k + i H[k])`` on the circle and ``exp(mean((e^{it}+z)/(e^{it}-z) k))``
in the disc, so its modulus law ``|boundary| = e^k`` and the Jensen equality
``|f(0)| = exp(mean k)`` hold by construction. Log-modulus samples are clipped
at ``CLIP_FLOOR`` to keep quadrature finite across integrable singularities;
the clip bias is resolution-dependent and documented wherever it matters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import hardy
from .errors import SingularPoint, UnboundedLogData, ZeroFunction
from .grid import BoundarySignal, CircleGrid

#: Log-modulus values below this are clipped; e**CLIP_FLOOR ~ 9.4e-14.
CLIP_FLOOR = -30.0

#: More than this fraction of clipped nodes means the log data cannot be
#: trusted as (numerically) integrable at the current resolution.
CLIP_FRACTION_LIMIT = 0.20


def clipped_log_modulus(f: BoundarySignal) -> BoundarySignal:
    """``max(log|f|, CLIP_FLOOR)`` as a real signal (zeros go to the floor)."""
    mod = np.abs(f.values)
    with np.errstate(divide="ignore"):
        k = np.log(mod)
    k = np.maximum(k, CLIP_FLOOR)
    return BoundarySignal(f.grid, k + 0j)


@dataclass(frozen=True)
class OuterFn:
    """An outer function carried as (clipped) log-modulus plus its boundary."""

    log_modulus: BoundarySignal
    boundary: BoundarySignal

    def at(self, z) -> complex | np.ndarray:
        """Disc values exp(Herglotz integral of the log-modulus)."""
        zs = np.atleast_1d(np.asarray(z, dtype=complex))
        out = np.array(
            [np.exp(hardy.herglotz_integral(self.log_modulus, w)) for w in zs]
        )
        return out if np.ndim(z) else complex(out[0])

    def value_at_zero(self) -> float:
        """exp(mean log-modulus); positive by the chosen normalization."""
        return float(np.exp(np.mean(self.log_modulus.values.real)))


def synth_outer(k: BoundarySignal, clip_floor: float = CLIP_FLOOR) -> OuterFn:
    """Outer function with boundary log-modulus ``k`` (clipped at the floor)."""
    if not k.is_real():
        raise ValueError("log-modulus data must be real")
    vals = np.maximum(k.values.real, clip_floor)
    frac = float(np.mean(vals <= clip_floor))
    if frac > CLIP_FRACTION_LIMIT:
        raise UnboundedLogData(
            f"{100 * frac:.1f}% of log-modulus samples sit at the clip floor"
        )
    kc = BoundarySignal(k.grid, vals + 0j)
    phase = hardy.conjugate_function(kc)
    boundary = BoundarySignal(k.grid, np.exp(vals + 1j * phase.values.real))
    return OuterFn(log_modulus=kc, boundary=boundary)


def blaschke(a: complex, z) -> complex | np.ndarray:
    """Single Blaschke factor through ``a``, normalized positive at 0.

    ``blaschke(0, z) = z``; otherwise ``(|a|/a) * (a - z)/(1 - conj(a) z)``,
    which is unimodular on the circle.
    """
    a = complex(a)
    if abs(a) >= 1:
        raise ValueError("Blaschke zero must lie in the open disc")
    zs = np.asarray(z, dtype=complex)
    if a == 0:
        return zs if np.ndim(z) else complex(zs)
    out = (abs(a) / a) * (a - zs) / (1.0 - np.conj(a) * zs)
    return out if np.ndim(z) else complex(out)


def singular_inner(alpha: complex, z) -> complex | np.ndarray:
    """``exp((z + alpha)/(z - alpha))`` for unimodular ``alpha``.

    Defined on the disc and on the circle away from ``alpha``; the radial
    limit at ``alpha`` itself is 0, and evaluation exactly there raises.
    """
    alpha = complex(alpha)
    if abs(abs(alpha) - 1.0) > 1e-12:
        raise ValueError("singular point must be unimodular")
    zs = np.asarray(z, dtype=complex)
    if np.any(zs == alpha):
        raise SingularPoint("evaluation at the singular point itself")
    out = np.exp((zs + alpha) / (zs - alpha))
    return out if np.ndim(z) else complex(out)


def singular_inner_boundary(alpha: complex, grid: CircleGrid) -> BoundarySignal:
    """Boundary samples of ``singular_inner(alpha, .)``; the node at the
    singular point (if any) carries the radial-limit value 0."""
    alpha = complex(alpha)
    pts = grid.boundary_points()
    hit = np.abs(pts - alpha) < 1e-12
    vals = np.empty(grid.size, dtype=complex)
    if hit.any():
        vals[hit] = 0.0
    ok = ~hit
    vals[ok] = np.exp((pts[ok] + alpha) / (pts[ok] - alpha))
    return BoundarySignal(grid, vals)


@dataclass(frozen=True)
class FactorizationResult:
    inner: BoundarySignal
    outer: OuterFn
    #: max | |inner| - 1 | over nodes where the input was above the clip floor
    unimodular_residual: float


def _reject_zero(f: BoundarySignal) -> None:
    if float(np.max(np.abs(f.values))) == 0.0:
        raise ZeroFunction("input is identically zero")


def inner_outer(f: BoundarySignal) -> FactorizationResult:
    """Split ``f`` into a unimodular factor times the outer part of ``|f|``.

    The outer factor is normalized positive at the origin; the unimodular
    constant is absorbed into the inner factor. Nodes where ``|f|`` sits at
    the clip floor are excluded from the innerness residual (the inner value
    there is still reported, as input/outer).
    """
    _reject_zero(f)
    outer = synth_outer(clipped_log_modulus(f))
    inner_vals = f.values / outer.boundary.values
    inner = BoundarySignal(f.grid, inner_vals)
    trusted = np.abs(f.values) >= np.exp(CLIP_FLOOR)
    if trusted.any():
        residual = float(np.max(np.abs(np.abs(inner_vals[trusted]) - 1.0)))
    else:
        residual = float("inf")
    return FactorizationResult(inner=inner, outer=outer, unimodular_residual=residual)


def is_inner(f: BoundarySignal, tol: float = 1e-6) -> bool:
    """Unimodular boundary values (away from clip-floor nodes) within tol."""
    _reject_zero(f)
    mod = np.abs(f.values)
    trusted = mod >= np.exp(CLIP_FLOOR)
    return bool(np.max(np.abs(mod[trusted] - 1.0)) <= tol)


def is_outer(f: BoundarySignal, tol: float = 1e-2) -> bool:
    """Jensen-equality test: ``|a_0| = exp(mean log|f|)`` within relative tol.

    ``a_0`` is the constant analytic-projection coefficient (the leak gate is
    disabled here — only the mean is needed, and inner inputs legitimately
    carry broadband spectra).
    """
    _reject_zero(f)
    a0 = hardy.analytic_projection(f, leak_tol=1.0).coefficients[0]
    jensen = float(np.exp(np.mean(clipped_log_modulus(f).values.real)))
    return bool(abs(abs(a0) - jensen) <= tol * max(jensen, 1e-300))
