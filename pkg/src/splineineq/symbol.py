"""The periodized squared B-spline symbol and the derivative-to-function
symbol ratio whose maximum over frequency yields the sharp inequality
constant."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ._series import power_tail, power_tail_bound
from .bspline import gram_autocorrelation

Array = npt.NDArray[np.float64]

__all__ = [
    "SymbolEval",
    "symbol_fourier",
    "symbol_lattice",
    "ratio_L",
    "argmax_ratio",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SymbolEval:
    """One lattice-sum evaluation with its truncation error budget."""

    degree: int
    omega: float
    value: float
    method: str
    tail_bound: float


def symbol_fourier(m: int, omega):
    """Periodized squared symbol via its finite cosine expansion.

    The symbol is the discrete-time Fourier transform of the B-spline
    autocorrelation sequence: a_0 + 2 sum_{j=1}^m a_j cos(j ω).  Exact up
    to rounding, 2π-periodic, even, positive, equal to 1 at ω = 0.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    w = np.atleast_1d(np.asarray(omega, dtype=np.float64))
    scalar = np.asarray(omega).ndim == 0
    a = gram_autocorrelation(m)
    out = np.full_like(w, a[0])
    for j in range(1, m + 1):
        out += 2.0 * a[j] * np.cos(j * w)
    return float(out[0]) if scalar else out


def symbol_lattice(m: int, omega: float, rtol: float = 1e-12) -> SymbolEval:
    """Periodized squared symbol as a sum over the frequency lattice.

    Sums |sinc-type factor|^(2m+2) over translates ω + 2πl.  Each term is
    formed as a single power of 2|sin(ω/2)| / |ω + 2πl| so that no
    intermediate overflows near lattice frequencies.  The two one-sided
    tails are estimated by Euler-Maclaurin with an enveloping remainder;
    the number of explicit terms doubles until the bound meets rtol.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    if rtol <= 0.0:
        raise ValueError("rtol must be positive")
    omega = float(omega)
    p = 2.0 * m + 2.0
    # Reduce to the principal period first: IEEE remainder is exact, and
    # it keeps every lattice denominator safely away from zero.
    r = math.remainder(omega, _TWO_PI)
    if r == 0.0:
        # At a lattice frequency every term but one vanishes and the
        # surviving limit is exactly 1.
        return SymbolEval(
            degree=m, omega=omega, value=1.0, method="lattice", tail_bound=0.0
        )
    s = 2.0 * abs(math.sin(0.5 * r))

    terms = 8
    while True:
        ls = np.arange(-terms, terms + 1, dtype=np.float64)
        vals = (s / np.abs(r + _TWO_PI * ls)) ** p
        partial = math.fsum(sorted(vals))
        first_up = r + _TWO_PI * (terms + 1)
        first_dn = -(r - _TWO_PI * (terms + 1))
        tail = s**p * (
            power_tail(first_up, _TWO_PI, p) + power_tail(first_dn, _TWO_PI, p)
        )
        bound = s**p * (
            power_tail_bound(first_up, _TWO_PI, p)
            + power_tail_bound(first_dn, _TWO_PI, p)
        )
        value = partial + tail
        if bound <= rtol * value or terms >= 1 << 22:
            return SymbolEval(
                degree=m, omega=omega, value=value, method="lattice", tail_bound=bound
            )
        terms *= 2


def ratio_L(m: int, omega):
    """Rayleigh-type ratio 4 sin²(ω/2) · symbol_{m-1}(ω) / symbol_m(ω).

    This is the squared first-derivative amplification of a unit-lattice
    degree-m spline at frequency ω.  Even, 2π-periodic, increasing on
    [0, π], maximal at ω = π.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    w = np.atleast_1d(np.asarray(omega, dtype=np.float64))
    scalar = np.asarray(omega).ndim == 0
    num = symbol_fourier(m - 1, w)
    den = symbol_fourier(m, w)
    out = 4.0 * np.sin(0.5 * w) ** 2 * num / den
    return float(out[0]) if scalar else out


def argmax_ratio(m: int, grid_points: int = 4096) -> tuple[float, float]:
    """Maximize ratio_L over one period; returns (omega, value).

    Scans a uniform grid on [0, 2π), then refines around the best grid
    point by golden-section search.  The refinement is only kept when it
    actually improves on the grid value; ties go to the smaller frequency.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    if grid_points < 4:
        raise ValueError("grid too coarse")
    grid = _TWO_PI * np.arange(grid_points) / grid_points
    vals = ratio_L(m, grid)
    i = int(np.argmax(vals))
    best_w = float(grid[i])
    best_v = float(vals[i])

    lo = float(grid[i - 1]) if i > 0 else float(grid[i]) - _TWO_PI / grid_points
    hi = (
        float(grid[i + 1])
        if i + 1 < grid_points
        else float(grid[i]) + _TWO_PI / grid_points
    )
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc = float(ratio_L(m, c))
    fd = float(ratio_L(m, d))
    for _ in range(80):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = float(ratio_L(m, c))
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = float(ratio_L(m, d))
        if b - a < 1e-14 * max(1.0, abs(b)):
            break
    w_ref = 0.5 * (a + b)
    v_ref = float(ratio_L(m, w_ref))
    if v_ref > best_v or (v_ref == best_v and w_ref < best_w):
        return w_ref, v_ref
    return best_w, best_v
