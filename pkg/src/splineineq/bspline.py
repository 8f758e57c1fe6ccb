"""Cardinal B-splines on integer knots: evaluation, derivatives, integer samples,
autocorrelations, and pointwise evaluation of B-spline series."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

Array = npt.NDArray[np.float64]

__all__ = [
    "BSplineBasis",
    "CardinalSpline",
    "eval_bspline",
    "eval_bspline_truncpow",
    "bspline_derivative",
    "integer_samples",
    "gram_autocorrelation",
    "spline_eval",
]


def _prepare(x) -> tuple[Array, bool]:
    arr = np.asarray(x, dtype=np.float64)
    return np.atleast_1d(arr).ravel(), arr.ndim == 0


def _basis_window(m: int, u: Array) -> tuple[npt.NDArray[np.int64], Array]:
    """Values of every possibly-nonzero integer shift of N_m at each u.

    Returns ``(j0, w)`` with ``w[:, i] = N_m(u - (j0 - m + i))`` for
    ``i = 0..m`` and ``j0 = floor(u)``.  Each degree step is a convex-like
    combination with nonnegative weights, so the triangle is stable for
    every degree the package exercises.
    """
    j0 = np.floor(u).astype(np.int64)
    t = u - j0  # in [0, 1)
    w = np.ones((u.shape[0], 1))
    for d in range(1, m + 1):
        wn = np.zeros((u.shape[0], d + 1))
        for i in range(d + 1):
            y = t + (d - i)  # u - g for the shift g = j0 - d + i
            if i >= 1:
                wn[:, i] += (y / d) * w[:, i - 1]
            if i <= d - 1:
                wn[:, i] += ((d + 1 - y) / d) * w[:, i]
        w = wn
    return j0, w


def eval_bspline(m: int, x):
    """Evaluate the degree-m cardinal B-spline N_m at x (scalar or array).

    N_m is supported on [0, m+1], nonnegative, integrates to 1, and its
    integer shifts form a partition of unity.  Evaluation uses the two-term
    degree recurrence; the alternating truncated-power form is available as
    a cross-check in :func:`eval_bspline_truncpow`.  Piecewise-constant
    pieces (m = 0) are taken right-continuous.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    u, scalar = _prepare(x)
    out = np.zeros_like(u)
    inside = (u >= 0.0) & (u < m + 1.0)
    if np.any(inside):
        j0, w = _basis_window(m, u[inside])
        # the shift g = 0 sits at column m - j0
        out[inside] = w[np.arange(j0.size), m - j0]
    return float(out[0]) if scalar else out


def eval_bspline_truncpow(m: int, x: float) -> float:
    """Degree-m cardinal B-spline via the alternating truncated-power sum.

    Test oracle only: the alternating binomial sum cancels catastrophically
    for large m, so the recurrence in :func:`eval_bspline` is authoritative.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    x = float(x)
    terms = []
    for k in range(m + 2):
        t = x - k
        if t < 0.0:
            break
        power = 1.0 if m == 0 else t**m
        terms.append((-1.0) ** k * math.comb(m + 1, k) * power)
    return math.fsum(terms) / math.factorial(m)


def bspline_derivative(m: int, x):
    """First derivative of N_m via N_m'(x) = N_{m-1}(x) - N_{m-1}(x-1).

    For m = 1 the derivative jumps at knots; the right-hand limit is
    returned there.  Rejects m = 0 (the derivative is not a function).
    """
    if m < 1:
        raise ValueError("degree too low: derivative needs m >= 1")
    u, scalar = _prepare(x)
    out = eval_bspline(m - 1, u) - eval_bspline(m - 1, u - 1.0)
    return float(out[0]) if scalar else out


@lru_cache(maxsize=None)
def _scaled_integer_samples(n: int) -> tuple[int, ...]:
    """n! * N_n(j) for j = 1..n, exact integers.

    At integer arguments the truncated-power sum is pure integer
    arithmetic, so there is no cancellation loss.
    """
    out = []
    for j in range(1, n + 1):
        s = 0
        for k in range(0, min(j, n + 2)):
            s += (-1) ** k * math.comb(n + 1, k) * (j - k) ** n
        out.append(s)
    return tuple(out)


def integer_samples(m: int) -> Array:
    """Interior integer samples [N_m(1), ..., N_m(m)]; empty for m = 0.

    Computed exactly as integers over m!, then rounded once to float.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    f = math.factorial(m)
    return np.array([t / f for t in _scaled_integer_samples(m)], dtype=np.float64)


@lru_cache(maxsize=None)
def _autocorr(m: int) -> tuple[float, ...]:
    # a_j = integral N_m(x) N_m(x+j) dx = N_{2m+1}(m+1+j): integer samples of
    # the doubled-degree B-spline, not quadrature.
    n = 2 * m + 1
    f = math.factorial(n)
    samples = _scaled_integer_samples(n)
    return tuple(samples[m + j] / f for j in range(m + 1))


def gram_autocorrelation(m: int) -> Array:
    """Autocorrelations a_j = ∫ N_m(x) N_m(x+j) dx for j = 0..m.

    a_{-j} = a_j by symmetry.  These are the Fourier coefficients of the
    periodized squared symbol and the entries of the banded Gram matrix
    used for exact L2 norms.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    return np.array(_autocorr(m), dtype=np.float64)


@dataclass(frozen=True)
class BSplineBasis:
    """The degree-m cardinal B-spline N_m, supported on [0, m+1]."""

    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be non-negative")

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, float(self.degree + 1))

    def __call__(self, x):
        return eval_bspline(self.degree, x)

    def derivative(self, x):
        return bspline_derivative(self.degree, x)

    def integer_samples(self) -> Array:
        return integer_samples(self.degree)

    def autocorrelation(self) -> Array:
        return gram_autocorrelation(self.degree)


@dataclass(frozen=True, eq=False)
class CardinalSpline:
    """Finite B-spline series on a uniform knot lattice of spacing Δ.

    Represents ``s(x) = sum_j coeffs[j] * N_m(x/Δ - (offset + j))``: a
    piecewise polynomial of degree ≤ m on each knot interval with m-1
    continuous derivatives, automatically in L2 because the coefficient
    support is finite.
    """

    degree: int
    knot_spacing: float
    coeffs: Array
    offset: int = 0

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if not (self.knot_spacing > 0.0):
            raise ValueError("knot spacing must be positive")
        c = np.asarray(self.coeffs, dtype=np.float64).ravel()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "knot_spacing", float(self.knot_spacing))
        object.__setattr__(self, "offset", int(self.offset))

    @property
    def support(self) -> tuple[float, float]:
        """Smallest closed interval outside which the spline vanishes."""
        lo = self.knot_spacing * self.offset
        hi = self.knot_spacing * (self.offset + len(self.coeffs) + self.degree)
        return (lo, hi)

    def __call__(self, x):
        return spline_eval(self, x)


def spline_eval(s: CardinalSpline, x):
    """Evaluate the spline at x; only the ≤ m+1 overlapping shifts are used."""
    u, scalar = _prepare(x)
    c = s.coeffs
    if c.size == 0:
        out = np.zeros_like(u)
        return float(out[0]) if scalar else out
    m = s.degree
    j0, w = _basis_window(m, u / s.knot_spacing)
    idx = j0[:, None] - m + np.arange(m + 1) - s.offset
    valid = (idx >= 0) & (idx < c.size)
    gathered = np.where(valid, c[np.clip(idx, 0, c.size - 1)], 0.0)
    out = np.einsum("ij,ij->i", w, gathered)
    return float(out[0]) if scalar else out
