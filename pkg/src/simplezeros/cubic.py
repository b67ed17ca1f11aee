"""Degree-3 analysis: discriminant, multiple-root locus in quotient
coordinates, and the equal-modulus quartic with its two-quadratic split."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .constants import cubic_sharp_constant
from .polyseries import ComplexPoly, PolyInputError


def cubic_from_quotients(a: complex, b: complex) -> ComplexPoly:
    """1 + z + z^2/a + z^3/(a^2 b), so that q_2 = a and q_3 = b."""
    if a == 0 or b == 0:
        raise PolyInputError("a and b must be nonzero")
    return ComplexPoly((1.0, 1.0, 1.0 / a, 1.0 / (a * a * b)))


def discriminant3(p: ComplexPoly) -> complex:
    if p.degree != 3:
        raise PolyInputError(f"discriminant3 needs degree 3, got {p.degree}")
    delta, gamma, beta, alpha = p.coeffs
    return (
        -4 * beta**3 * delta
        + beta**2 * gamma**2
        - 4 * alpha * gamma**3
        + 18 * alpha * beta * gamma * delta
        - 27 * alpha**2 * delta**2
    )


def multiple_root_locus_residual(a: complex, b: complex) -> complex:
    """4ab^2 - a^2 b^2 + 4a^2 b - 18ab + 27, which equals -a^4 b^2 D(P_{3,a,b})."""
    return 4 * a * b * b - a * a * b * b + 4 * a * a * b - 18 * a * b + 27


def quartic(lam: float, x):
    """x^4 - 8 lam x^3 + 18 x^2 - 27."""
    return x**4 - 8 * lam * x**3 + 18 * x**2 - 27


@dataclass(frozen=True)
class QuarticFactorization:
    """x^4 - 8 lam x^3 + 18 x^2 - 27 = (x^2 + p1 x + r1)(x^2 + p2 x + r2)."""

    t: float
    quad1: tuple
    quad2: tuple

    @property
    def lam(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.t**3))

    def expanded(self) -> tuple:
        (p1, r1), (p2, r2) = self.quad1, self.quad2
        return (1.0, p1 + p2, r1 + r2 + p1 * p2, p1 * r2 + p2 * r1, r1 * r2)


def ferrari_factorization(lam: float) -> QuarticFactorization:
    """Split the quartic via the resolvent (w - 3)^3 = 216 (1 - lam^2).

    With t = cbrt(1 - lam^2) (real branch), w = 3 + 6t,
    alpha = 2 sqrt(1-t) (1+2t) and beta = 6 sqrt(1+t+t^2)::

        (x^2 - (4 lam + alpha) x + w + beta)(x^2 - (4 lam - alpha) x + w - beta)

    The 4/(1-t) factor met while completing the square cancels, so t = 1
    (lam = 0) needs no special case.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lambda must lie in [0, 1]")
    t = (1.0 - lam * lam) ** (1.0 / 3.0)
    s = math.sqrt(1.0 - t**3)  # equals lam; kept in t-form as derived
    w = 3.0 + 6.0 * t
    alpha = 2.0 * math.sqrt(1.0 - t) * (2.0 * t + 1.0)
    beta = 6.0 * math.sqrt(1.0 + t + t * t)
    return QuarticFactorization(t, (-(4.0 * s + alpha), w + beta), (-(4.0 * s - alpha), w - beta))


def _quadratic_roots(p: float, r: float) -> list:
    """Roots of x^2 + p x + r with real coefficients."""
    disc = p * p - 4.0 * r
    if disc >= 0:
        sq = math.sqrt(disc)
        # avoid cancellation: x1 = (-p - sign(p) sq)/2, x2 = r/x1
        big = -0.5 * (p + math.copysign(sq, p))
        if big == 0.0:
            return [0j, 0j]
        return [complex(big), complex(r / big)]
    sq = math.sqrt(-disc)
    return [complex(-0.5 * p, 0.5 * sq), complex(-0.5 * p, -0.5 * sq)]


def ferrari_roots(lam: float) -> list:
    f = ferrari_factorization(lam)
    return _quadratic_roots(*f.quad1) + _quadratic_roots(*f.quad2)


@dataclass
class ScanResult:
    sup_modulus: float
    argmax_lambda: float
    max_positive_real_root: float
    min_negative_real_root: float
    moduli: np.ndarray

    def to_json(self) -> dict:
        c = cubic_sharp_constant()
        return {
            "sup_modulus": self.sup_modulus,
            "argmax_lambda": self.argmax_lambda,
            "expected": c,
            "excess_over_expected": self.sup_modulus - c,
            "max_positive_real_root": self.max_positive_real_root,
            "min_negative_real_root": self.min_negative_real_root,
            "grid_points": int(self.moduli.size),
        }


def max_modulus_scan(grid_points: int = 10_000) -> ScanResult:
    """Largest root modulus of the quartic over a uniform lambda grid on [0, 1].

    Ties go to the lowest lambda.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    lams = np.linspace(0.0, 1.0, grid_points)
    best = np.empty(grid_points)
    max_pos, min_neg = -math.inf, math.inf
    for i, lam in enumerate(lams):
        roots = ferrari_roots(float(lam))
        best[i] = max(abs(r) for r in roots)
        for r in roots:
            if r.imag == 0.0:
                max_pos = max(max_pos, r.real) if r.real > 0 else max_pos
                min_neg = min(min_neg, r.real) if r.real < 0 else min_neg
    i = int(np.argmax(best))  # first occurrence
    return ScanResult(float(best[i]), float(lams[i]), max_pos, min_neg, best)


def modulus_equal_slice(x: complex, gamma: float) -> tuple:
    """Map a quartic root x at lam = cos(gamma/2) back to (a, b) with b = a e^{i gamma}.

    a = x e^{-i gamma/2}, so |a| = |b| = |x|.
    """
    a = complex(x) * cmath.exp(-0.5j * gamma)
    return a, a * cmath.exp(1j * gamma)
