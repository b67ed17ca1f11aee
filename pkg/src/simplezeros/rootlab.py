"""Numerical oracles: simultaneous root finding and argument-principle counts.

Everything here is independent of the certificates; it only sees
coefficients.  Polynomial values are computed term by term with the largest
term factored out, so coefficient spreads like ``10**(-k**2/2)`` do not
overflow before degree 64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .polyseries import ComplexPoly, quotients, radii

RESIDUAL_TOL = 1e-9
IM_TOL = 1e-8
MAX_SWEEPS = 500
GUARD = 1e-8
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
JITTER = 0.5 * (math.sqrt(2.0) - 1.0)

_EPS = np.finfo(float).eps


class ContourGuardError(ArithmeticError):
    """A zero sits too close to the counting circle."""


class WindingError(ArithmeticError):
    """Argument accumulation did not settle on an integer."""


def cluster_tol(z) -> float:
    return 1e-6 * (1.0 + abs(z))


def _scaled_terms(coeffs: np.ndarray, z: np.ndarray):
    """Terms a_k z^k / max_k|a_k z^k| as an (len(z), deg+1) array."""
    k = np.arange(coeffs.size)
    logmag = np.log(np.abs(coeffs))[None, :] + k[None, :] * np.log(np.abs(z))[:, None]
    logmag -= logmag.max(axis=1, keepdims=True)
    phase = np.angle(coeffs)[None, :] + k[None, :] * np.angle(z)[:, None]
    return np.exp(logmag) * np.exp(1j * phase)


def relative_residuals(p: ComplexPoly, z) -> np.ndarray:
    """|p(z)| / sum_k |a_k| |z|^k."""
    t = _scaled_terms(p.array(), np.atleast_1d(np.asarray(z, dtype=complex)))
    return np.abs(t.sum(axis=1)) / np.abs(t).sum(axis=1)


def newton_step(p: ComplexPoly, z) -> complex:
    """p(z) / p'(z) without overflow."""
    zz = np.atleast_1d(np.asarray(z, dtype=complex))
    t = _scaled_terms(p.array(), zz)
    return complex((zz * t.sum(axis=1) / (t * np.arange(p.degree + 1)).sum(axis=1))[0])


def initial_guesses(p: ComplexPoly) -> np.ndarray:
    """One start per annulus when the quotient radii increase, else one circle.

    The start for the k-th zero sits on |z| = |a_{k-1}/a_k|, which lies strictly
    between the (scaled) radii R_{k-1} and R_k whenever every |q| > 1.
    """
    a = p.array()
    n = p.degree
    angles = GOLDEN_ANGLE * np.arange(1, n + 1) + JITTER
    loga = np.log(np.abs(a))
    logq = 2.0 * loga[1:-1] - loga[:-2] - loga[2:]
    # every |q| > 1 already makes the radii increase
    if np.all(np.isfinite(loga)) and np.all(logq > 0.0):
        rho = np.exp(loga[:-1] - loga[1:])
    else:
        rho = np.full(n, 1.0 + np.max(np.abs(a[:-1] / a[-1])))
        angles = 2.0 * np.pi * np.arange(n) / n + JITTER
    return rho * np.exp(1j * angles)


@dataclass
class RootReport:
    roots: tuple
    residuals: tuple
    moduli_sorted: tuple
    min_modulus_gap: float
    min_pairwise_distance: float
    multiplicity_flags: tuple
    all_real: bool
    converged: bool
    sweeps: int
    poly: ComplexPoly = field(repr=False, default=None)

    def to_json(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "residuals": list(self.residuals),
            "moduli_sorted": list(self.moduli_sorted),
            "min_modulus_gap": self.min_modulus_gap,
            "min_pairwise_distance": self.min_pairwise_distance,
            "multiplicity_flags": list(self.multiplicity_flags),
            "all_real": self.all_real,
            "converged": self.converged,
            "sweeps": self.sweeps,
        }

    @property
    def simple(self) -> bool:
        return not any(self.multiplicity_flags)

    def count_inside(self, radius: float) -> int:
        return sum(1 for z in self.roots if abs(z) < radius)


def find_roots(
    p: ComplexPoly,
    tol: float = 1e-14,
    max_sweeps: int = MAX_SWEEPS,
    residual_tol: float = RESIDUAL_TOL,
    im_tol: float = IM_TOL,
) -> RootReport:
    """All zeros of ``p`` by Aberth-Ehrlich iteration, no deflation.

    A root stops moving once its correction is below ``tol * |z|`` or its
    relative residual reaches rounding level; multiple zeros therefore end
    as tight clusters rather than stalling the sweep.
    """
    a = p.array()
    n = p.degree
    k = np.arange(n + 1)
    z = initial_guesses(p)
    active = np.ones(n, dtype=bool)
    noise = 4.0 * (n + 1) * _EPS
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        idx = np.flatnonzero(active)
        zi = z[idx]
        t = _scaled_terms(a, zi)
        val = t.sum(axis=1)
        at_noise = np.abs(val) <= noise * np.abs(t).sum(axis=1)
        newton = zi * val / (t * k).sum(axis=1)
        diff = zi[:, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        inv = 1.0 / diff
        inv[np.arange(idx.size), idx] = 0.0
        corr = newton / (1.0 - newton * inv.sum(axis=1))
        corr[at_noise] = 0.0
        z[idx] = zi - corr
        done = at_noise | (np.abs(corr) <= tol * np.abs(zi))
        active[idx[done]] = False
        if not active.any():
            break

    order = np.lexsort((z.imag, np.abs(z)))
    z = z[order]
    res = relative_residuals(p, z)
    mods = np.abs(z)
    if n > 1:
        dist = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(dist, np.inf)
        min_pair = float(dist.min())
        flags = tuple(bool((dist[i] < cluster_tol(z[i])).any()) for i in range(n))
        min_gap = float(np.min(np.diff(mods)))
    else:
        min_pair, flags, min_gap = math.inf, (False,), math.inf
    converged = bool(np.all(res < residual_tol)) and np.all(np.isfinite(z))
    return RootReport(
        roots=tuple(complex(x) for x in z),
        residuals=tuple(float(r) for r in res),
        moduli_sorted=tuple(float(m) for m in mods),
        min_modulus_gap=min_gap,
        min_pairwise_distance=min_pair,
        multiplicity_flags=flags,
        all_real=bool(np.all(np.abs(z.imag) < im_tol)),
        converged=bool(converged),
        sweeps=sweeps,
        poly=p,
    )


def winding_count(p: ComplexPoly, R: float, samples: int | None = None, guard: float = GUARD) -> int:
    """Number of zeros of ``p`` in |z| < R via the argument principle."""
    if not R > 0:
        raise ValueError("radius must be positive")
    a = p.array()
    n0 = samples or max(256, 8 * p.degree)
    too_close = False
    for attempt in range(4):
        m = n0 * 4**attempt
        theta = 2.0 * np.pi * np.arange(m) / m
        # |z| = R on the whole circle, so the common scale factor is constant
        w = _scaled_terms(a, R * np.exp(1j * theta)).sum(axis=1)
        mag = np.abs(w)
        if mag.min() < guard * mag.max():
            too_close = True
            continue
        too_close = False
        steps = np.angle(np.roll(w, -1) / w)
        if np.max(np.abs(steps)) >= 0.5 * np.pi:
            continue
        total = steps.sum() / (2.0 * np.pi)
        count = round(total)
        if abs(total - count) > 1e-6:
            raise WindingError(f"winding accumulated to {total!r}, not an integer")
        return int(count)
    if too_close:
        raise ContourGuardError(f"min |p| on |z| = {R:g} below {guard:g} * max |p|")
    raise WindingError(f"argument steps stayed >= pi/2 on |z| = {R:g}")


PASS, FAIL, MISMATCH = "PASS", "FAIL", "MISMATCH"


@dataclass
class AnnulusVerification:
    circles: tuple
    counts: tuple
    expected: tuple
    root_counts: tuple
    verdict: str

    def to_json(self) -> dict:
        return {
            "circles": list(self.circles),
            "counts": list(self.counts),
            "expected": list(self.expected),
            "root_counts": list(self.root_counts),
            "verdict": self.verdict,
        }


def verify_annuli(p: ComplexPoly, report: RootReport | None = None) -> AnnulusVerification:
    """Check that exactly k zeros lie inside the k-th separating circle.

    Raises the winding errors; a disagreement between the winding counts and
    the root finder is reported as ``MISMATCH``.
    """
    circles = radii(quotients(p)).circles
    counts = tuple(winding_count(p, r) for r in circles)
    if report is None:
        report = find_roots(p)
    root_counts = tuple(report.count_inside(r) for r in circles)
    expected = tuple(range(1, len(circles) + 1))
    if counts != root_counts:
        verdict = MISMATCH
    elif counts == expected:
        verdict = PASS
    else:
        verdict = FAIL
    return AnnulusVerification(circles, counts, expected, root_counts, verdict)


def realness_check(report: RootReport, im_tol: float = IM_TOL, residual_tol: float = RESIDUAL_TOL) -> bool:
    """True when every root is real, allowing one real-line Newton polish.

    Clustered real zeros come back from the simultaneous iteration with
    imaginary parts near sqrt(eps); such a root is restarted at its real part
    and accepted if the polished point is still a zero.
    """
    if not report.converged:
        return False
    p = report.poly
    for z in report.roots:
        if abs(z.imag) < im_tol:
            continue
        if p is None:
            return False
        x = z.real
        for _ in range(60):
            step = newton_step(p, x).real
            if not math.isfinite(step):
                break
            x -= step
            if abs(step) <= 1e-15 * (1.0 + abs(x)):
                break
        if not math.isfinite(x):
            return False
        if relative_residuals(p, x)[0] >= residual_tol:
            return False
        if abs(x - z.real) > cluster_tol(z):
            return False
    return True
