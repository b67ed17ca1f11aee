"""Threshold constants for the second-quotient conditions.

``b(n)`` is the unique root in ``(1, inf)`` of ``1 - 2 * sum_{k<=n} x**(-k**2/2)``;
``b(INF)`` is the root of the infinite series version.  The degree-3 sharp
constant is ``sqrt(9 + 6*sqrt(3))``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

INF = math.inf

DEFAULT_TOL = 1e-12
BRACKET = (1.0 + 1e-9, 16.0)
SERIES_CUTOFF = 1e-18


def _check_order(n) -> None:
    if n is INF or n == INF:
        return
    if int(n) != n or n < 1:
        raise ValueError(f"order must be a positive integer or INF, got {n!r}")


def _terms(x: float, n):
    """Yield x**(-k**2/2) for k = 1..n (until negligible when n is INF)."""
    log_x = math.log(x)
    k = 1
    while n is INF or n == INF or k <= n:
        t = math.exp(-0.5 * k * k * log_x)
        if (n is INF or n == INF) and t < SERIES_CUTOFF:
            return
        yield k, t
        k += 1


def phi(x: float, n=INF) -> float:
    """Return 1 - 2*sum_{k=1..n} x**(-k**2/2) for x > 1."""
    if not x > 1.0:
        raise ValueError(f"phi is defined for x > 1 only, got x={x!r}")
    _check_order(n)
    return 1.0 - 2.0 * math.fsum(t for _, t in _terms(x, n))


def _dphi(x: float, n) -> float:
    # d/dx x**(-k^2/2) = -(k^2/2) x**(-k^2/2 - 1)
    return math.fsum(k * k * t for k, t in _terms(x, n)) / x


def solve_b(n=INF, tol: float = DEFAULT_TOL) -> float:
    """Root of ``phi(., n)`` on (1, inf), bisected to width ``tol`` then Newton-polished."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    _check_order(n)
    lo, hi = BRACKET
    # phi is increasing: negative near 1+, positive at 16
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if phi(mid, n) < 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(3):
        step = phi(x, n) / _dphi(x, n)
        if not math.isfinite(step) or abs(step) > tol:
            break
        x -= step
    return x


def cubic_sharp_constant() -> float:
    return math.sqrt(9.0 + 6.0 * math.sqrt(3.0))


def log_deficit(n: int, tol: float = DEFAULT_TOL) -> float:
    """Natural log of ``b(INF) - b(n)``, valid far below double resolution.

    Once the gap drops under ~1e-6 the float difference is useless, so the gap
    is taken from linearising ``phi(., n)`` at ``b(INF)``: there ``phi_n`` equals
    the omitted tail ``2*sum_{k>n} x**(-k**2/2)``, evaluated in log space.
    """
    _check_order(n)
    if n == INF:
        raise ValueError("deficit of b(INF) against itself is zero")
    b_inf = solve_b(INF, tol)
    gap = b_inf - solve_b(n, tol)
    if gap > 1e-6:
        return math.log(gap)
    log_x = math.log(b_inf)
    exps = [-0.5 * k * k * log_x for k in range(n + 1, n + 6)]
    top = exps[0]
    log_tail = math.log(2.0) + top + math.log(math.fsum(math.exp(e - top) for e in exps))
    return log_tail - math.log(_dphi(b_inf, n))


@dataclass
class ThresholdTable:
    """Memoized b-constants, safe to share between threads."""

    tol: float = DEFAULT_TOL
    by_even_degree: dict = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)
    _b_inf: float | None = field(default=None, repr=False)

    def b(self, n: int) -> float:
        """The constant for even degree 2n."""
        _check_order(n)
        if n == INF:
            return self.b_infinity
        with self._lock:
            val = self.by_even_degree.get(n)
            if val is None:
                val = self.by_even_degree[n] = solve_b(n, self.tol)
        return val

    def for_degree(self, degree: int) -> float:
        """b_{degree} for even degree, b_{degree+1} for odd degree."""
        return self.b((degree + 1) // 2)

    @property
    def b_infinity(self) -> float:
        with self._lock:
            if self._b_inf is None:
                self._b_inf = solve_b(INF, self.tol)
            return self._b_inf

    @property
    def cubic_constant(self) -> float:
        return cubic_sharp_constant()

    def upto(self, max_even_degree: int) -> dict:
        return {str(2 * n): self.b(n) for n in range(1, max_even_degree // 2 + 1)}

    def to_json(self, max_even_degree: int) -> dict:
        return {
            "b": self.upto(max_even_degree),
            "b_inf": self.b_infinity,
            "cubic": self.cubic_constant,
            "tol": self.tol,
        }


DEFAULT_TABLE = ThresholdTable()
