"""Built-in corpus of boundary functions.

Every entry carries the routes that make sense for it: an exact boundary
evaluator (closed form wherever one exists), an independent Taylor-coefficient
builder for the polynomial/series entries, and a raw log-modulus callable for
the functions that are *defined* through outer synthesis. Keeping the routes
separate is deliberate — the tests cross-check them against each other instead
of deriving one from the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import UnknownExample
from .factorization import singular_inner_boundary, synth_outer
from .grid import BoundarySignal, CircleGrid, signal_from_values
from .hardy import AnalyticRep


def _wrap_pm_pi(theta: np.ndarray) -> np.ndarray:
    """Map angles in [0, 2*pi) to the symmetric branch (-pi, pi]."""
    theta = np.asarray(theta, dtype=float)
    return np.where(theta <= np.pi, theta, theta - 2.0 * np.pi)


# ---------------------------------------------------------------------------
# log-modulus profiles for the synthesized entries
# ---------------------------------------------------------------------------

def banded_log_modulus(theta) -> np.ndarray:
    """Piecewise-constant profile with bands accumulating at angle 0.

    On 0 < |t| <= 1 the value is -floor(1/|t|), which drops without bound as
    t -> 0; thin bands just below angle pi take the values 1/n, leaving the
    modulus discontinuous there; everywhere else the value is 1.
    """
    tp = _wrap_pm_pi(theta)
    k = np.ones_like(tp)
    a = np.abs(tp)
    low = (a > 0.0) & (a <= 1.0)
    k[low] = -np.floor(1.0 / a[low])
    # The bands accumulate at t = 0, so the profile is below any floor almost
    # everywhere on a neighbourhood of 0; a sample taken exactly at 0 must
    # report that essential value, not the "elsewhere" constant.
    k[a == 0.0] = -1e9
    for n in range(1, 26):
        hi = np.pi - 2.0 ** -n
        lo = hi - 8.0 ** -n
        band = (tp >= lo) & (tp <= hi)
        k[band] = 1.0 / n
    return k


def ramp_log_modulus(theta) -> np.ndarray:
    """Continuous ramp -t on [0, pi], jumping to -(t^2 + 1) on (-pi, 0)."""
    tp = _wrap_pm_pi(theta)
    return np.where(tp < 0.0, -(tp * tp + 1.0), -tp)


# ---------------------------------------------------------------------------
# Taylor-coefficient builders
# ---------------------------------------------------------------------------

def _exp_of_series(g: np.ndarray) -> np.ndarray:
    """Taylor coefficients of exp(G) where G has coefficients ``g``.

    Standard power-series recurrence: f0 = exp(g0) and
    m*f_m = sum_{j=1..m} j * g_j * f_{m-j}.
    """
    n = g.size
    f = np.zeros(n, dtype=complex)
    f[0] = np.exp(g[0])
    for m in range(1, n):
        j = np.arange(1, m + 1)
        f[m] = np.sum(j * g[j] * f[m - j]) / m
    return f


def _poly(*coeffs) -> AnalyticRep:
    return AnalyticRep(np.asarray(coeffs, dtype=complex))


def _exp_z_taylor(terms: int = 48) -> AnalyticRep:
    coeffs = 1.0 / np.array([float(math.factorial(j)) for j in range(terms)])
    return AnalyticRep(coeffs.astype(complex))


def _blaschke_half_taylor(terms: int = 220) -> AnalyticRep:
    coeffs = np.empty(terms, dtype=complex)
    coeffs[0] = 0.5
    coeffs[1:] = -0.75 * 0.5 ** np.arange(terms - 1)
    return AnalyticRep(coeffs)


def _singular_one_taylor(terms: int = 320) -> AnalyticRep:
    g = np.full(terms, -2.0, dtype=complex)
    g[0] = -1.0
    return AnalyticRep(_exp_of_series(g))


def _singular_i_taylor(terms: int = 320) -> AnalyticRep:
    j = np.arange(terms)
    g = -2.0 * (-1j) ** j
    g[0] = -1.0
    return AnalyticRep(_exp_of_series(g))


def _one_minus_singular_i_taylor(terms: int = 320) -> AnalyticRep:
    s = _singular_i_taylor(terms).coefficients.copy()
    s = -s
    s[0] += 1.0
    return AnalyticRep(s)


def _conv(a: AnalyticRep, b: AnalyticRep) -> AnalyticRep:
    return AnalyticRep(np.convolve(a.coefficients, b.coefficients))


# ---------------------------------------------------------------------------
# boundary evaluators (closed forms)
# ---------------------------------------------------------------------------

def _eik(grid: CircleGrid) -> np.ndarray:
    return np.exp(1j * grid.nodes)


def _blaschke_half_boundary(grid: CircleGrid) -> BoundarySignal:
    z = _eik(grid)
    return signal_from_values(grid, (0.5 - z) / (1.0 - 0.5 * z))


def _two_point_boundary(grid: CircleGrid) -> BoundarySignal:
    z = _eik(grid)
    s = singular_inner_boundary(1j, grid).values
    return signal_from_values(grid, (1.0 - z) * (1.0 - s))


def _synthesized_boundary(profile) -> Callable[[CircleGrid], BoundarySignal]:
    def build(grid: CircleGrid) -> BoundarySignal:
        k = signal_from_values(grid, profile(grid.nodes).astype(complex))
        return synth_outer(k).boundary

    return build


def _offset_ramp_boundary(grid: CircleGrid) -> BoundarySignal:
    ramp = _synthesized_boundary(ramp_log_modulus)(grid)
    alpha = ramp.values[0]
    return signal_from_values(grid, alpha - ramp.values)


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """One named function: exact boundary route plus optional extras."""

    name: str
    kind: str  # "outer", "inner", or "mixed"
    summary: str
    boundary_fn: Callable[[CircleGrid], BoundarySignal] = field(repr=False)
    taylor_fn: Optional[Callable[[], AnalyticRep]] = field(default=None, repr=False)
    log_modulus_fn: Optional[Callable[[np.ndarray], np.ndarray]] = field(
        default=None, repr=False
    )

    def boundary(self, grid: CircleGrid) -> BoundarySignal:
        return self.boundary_fn(grid)

    @property
    def has_taylor(self) -> bool:
        return self.taylor_fn is not None

    def taylor(self) -> AnalyticRep:
        if self.taylor_fn is None:
            raise UnknownExample(
                f"{self.name!r} has no Taylor representation; it is defined "
                "through its boundary data"
            )
        return self.taylor_fn()


_ENTRIES: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    _ENTRIES[entry.name] = entry


_register(
    CatalogEntry(
        name="constant-one",
        kind="outer",
        summary="the constant function 1",
        boundary_fn=lambda grid: signal_from_values(
            grid, np.ones(grid.size, dtype=complex)
        ),
        taylor_fn=lambda: _poly(1.0),
    )
)

_register(
    CatalogEntry(
        name="one-minus-z",
        kind="outer",
        summary="1 - z; outer, single boundary zero at angle 0",
        boundary_fn=lambda grid: signal_from_values(grid, 1.0 - _eik(grid)),
        taylor_fn=lambda: _poly(1.0, -1.0),
    )
)

_register(
    CatalogEntry(
        name="one-plus-z",
        kind="outer",
        summary="1 + z; outer, single boundary zero at angle pi",
        boundary_fn=lambda grid: signal_from_values(grid, 1.0 + _eik(grid)),
        taylor_fn=lambda: _poly(1.0, 1.0),
    )
)

_register(
    CatalogEntry(
        name="two-plus-z",
        kind="outer",
        summary="2 + z; invertible, hence outer with no boundary zeros",
        boundary_fn=lambda grid: signal_from_values(grid, 2.0 + _eik(grid)),
        taylor_fn=lambda: _poly(2.0, 1.0),
    )
)

_register(
    CatalogEntry(
        name="one-minus-half-z",
        kind="outer",
        summary="1 - z/2; invertible, hence outer with no boundary zeros",
        boundary_fn=lambda grid: signal_from_values(grid, 1.0 - 0.5 * _eik(grid)),
        taylor_fn=lambda: _poly(1.0, -0.5),
    )
)

_register(
    CatalogEntry(
        name="one-minus-z-squared",
        kind="outer",
        summary="(1 - z)^2; outer with a second-order boundary zero",
        boundary_fn=lambda grid: signal_from_values(grid, (1.0 - _eik(grid)) ** 2),
        taylor_fn=lambda: _poly(1.0, -2.0, 1.0),
    )
)

_register(
    CatalogEntry(
        name="exp-z",
        kind="outer",
        summary="exp(z); invertible, hence outer",
        boundary_fn=lambda grid: signal_from_values(grid, np.exp(_eik(grid))),
        taylor_fn=_exp_z_taylor,
    )
)

_register(
    CatalogEntry(
        name="one-minus-z-times-exp",
        kind="outer",
        summary="(1 - z) exp(z); outer, boundary zero at angle 0",
        boundary_fn=lambda grid: signal_from_values(
            grid, (1.0 - _eik(grid)) * np.exp(_eik(grid))
        ),
        taylor_fn=lambda: _conv(_poly(1.0, -1.0), _exp_z_taylor()),
    )
)

_register(
    CatalogEntry(
        name="shift",
        kind="inner",
        summary="z; the shift, inner with a zero inside the disc",
        boundary_fn=lambda grid: signal_from_values(grid, _eik(grid)),
        taylor_fn=lambda: _poly(0.0, 1.0),
    )
)

_register(
    CatalogEntry(
        name="shift-squared",
        kind="inner",
        summary="z^2; inner with a double zero inside the disc",
        boundary_fn=lambda grid: signal_from_values(grid, _eik(grid) ** 2),
        taylor_fn=lambda: _poly(0.0, 0.0, 1.0),
    )
)

_register(
    CatalogEntry(
        name="shift-times-one-minus-z",
        kind="mixed",
        summary="z (1 - z); inner factor z times the outer factor 1 - z",
        boundary_fn=lambda grid: signal_from_values(
            grid, _eik(grid) * (1.0 - _eik(grid))
        ),
        taylor_fn=lambda: _poly(0.0, 1.0, -1.0),
    )
)

_register(
    CatalogEntry(
        name="shift-exp",
        kind="mixed",
        summary="z exp(z); inner factor z times an invertible outer factor",
        boundary_fn=lambda grid: signal_from_values(
            grid, _eik(grid) * np.exp(_eik(grid))
        ),
        taylor_fn=lambda: _conv(_poly(0.0, 1.0), _exp_z_taylor()),
    )
)

_register(
    CatalogEntry(
        name="blaschke-half",
        kind="inner",
        summary="Blaschke factor with zero at 1/2",
        boundary_fn=_blaschke_half_boundary,
        taylor_fn=_blaschke_half_taylor,
    )
)

_register(
    CatalogEntry(
        name="blaschke-half-times-one-minus-z",
        kind="mixed",
        summary="Blaschke factor at 1/2 times the outer function 1 - z",
        boundary_fn=lambda grid: signal_from_values(
            grid, _blaschke_half_boundary(grid).values * (1.0 - _eik(grid))
        ),
        taylor_fn=lambda: _conv(_poly(1.0, -1.0), _blaschke_half_taylor()),
    )
)

_register(
    CatalogEntry(
        name="singular-inner-1",
        kind="inner",
        summary="exp((z+1)/(z-1)); singular inner, mass at angle 0",
        boundary_fn=lambda grid: singular_inner_boundary(1.0 + 0.0j, grid),
        taylor_fn=_singular_one_taylor,
    )
)

_register(
    CatalogEntry(
        name="singular-inner-i",
        kind="inner",
        summary="exp((z+i)/(z-i)); singular inner, mass at angle pi/2",
        boundary_fn=lambda grid: singular_inner_boundary(1j, grid),
        taylor_fn=_singular_i_taylor,
    )
)

_register(
    CatalogEntry(
        name="one-minus-singular-i",
        kind="outer",
        summary="1 - exp((z+i)/(z-i)); outer since its real part is positive",
        boundary_fn=lambda grid: signal_from_values(
            grid, 1.0 - singular_inner_boundary(1j, grid).values
        ),
        taylor_fn=_one_minus_singular_i_taylor,
    )
)

_register(
    CatalogEntry(
        name="two-point-product",
        kind="outer",
        summary="(1 - z)(1 - exp((z+i)/(z-i))); essential zeros at 1 and -i",
        boundary_fn=_two_point_boundary,
        taylor_fn=lambda: _conv(_poly(1.0, -1.0), _one_minus_singular_i_taylor()),
    )
)

_register(
    CatalogEntry(
        name="banded-logmod",
        kind="outer",
        summary="outer function synthesized from the banded log-modulus profile",
        boundary_fn=_synthesized_boundary(banded_log_modulus),
        log_modulus_fn=banded_log_modulus,
    )
)

_register(
    CatalogEntry(
        name="ramp-logmod",
        kind="outer",
        summary="outer function synthesized from the ramp log-modulus profile",
        boundary_fn=_synthesized_boundary(ramp_log_modulus),
        log_modulus_fn=ramp_log_modulus,
    )
)

_register(
    CatalogEntry(
        name="offset-ramp",
        kind="mixed",
        summary="alpha - ramp where alpha is the ramp's unimodular value at angle 0",
        boundary_fn=_offset_ramp_boundary,
    )
)


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(_ENTRIES))


def get_example(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        known = ", ".join(catalog_names())
        raise UnknownExample(f"unknown example {name!r}; known names: {known}") from None


def example_boundary(name: str, grid: CircleGrid) -> BoundarySignal:
    return get_example(name).boundary(grid)


def oracle_corpus() -> tuple[str, ...]:
    """Names used for the outerness-vs-density cross-validation sweep."""
    return (
        "one-minus-z",
        "one-plus-z",
        "two-plus-z",
        "one-minus-half-z",
        "exp-z",
        "shift",
        "shift-squared",
        "shift-times-one-minus-z",
        "shift-exp",
        "blaschke-half",
        "blaschke-half-times-one-minus-z",
        "singular-inner-1",
    )
