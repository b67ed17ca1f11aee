"""Seeded random trials: sample quotient sequences around a threshold,
certify them, and check the verdict against the numerical oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import certifier
from .constants import DEFAULT_TABLE, ThresholdTable
from .polyseries import QuotientSeq, from_quotients
from .rootlab import (
    PASS,
    ContourGuardError,
    WindingError,
    find_roots,
    realness_check,
    verify_annuli,
)

REAL_THEOREMS = ("real", "hutchinson")


def threshold_for(theorem: str, degree: int, table: ThresholdTable = DEFAULT_TABLE) -> float:
    if theorem == "auto":
        theorem = "cubic" if degree == 3 else ("even" if degree % 2 == 0 else "odd")
    if theorem in ("even", "odd"):
        return table.for_degree(degree)
    if theorem == "uniform":
        return table.b_infinity
    if theorem == "cubic":
        return table.cubic_constant
    if theorem == "real":
        return table.cubic_constant if degree == 3 else table.for_degree(degree)
    if theorem == "hutchinson":
        return 4.0
    raise ValueError(f"unknown theorem {theorem!r}")


def sample_sequence(rng: np.random.Generator, degree: int, low: float, high: float, theorem: str) -> QuotientSeq:
    """|q_k| uniform in [low, high]; phases uniform, or signs for the real theorems."""
    mods = rng.uniform(low, high, size=degree - 1)
    anchors = rng.uniform(0.5, 2.0, size=2)
    if theorem == "hutchinson":
        return QuotientSeq(anchors[0], anchors[1], tuple(mods))
    if theorem == "real":
        signs = rng.choice([-1.0, 1.0], size=degree + 1)
        return QuotientSeq(signs[0] * anchors[0], signs[1] * anchors[1], tuple(signs[2:] * mods))
    ph = rng.uniform(0.0, 2.0 * math.pi, size=degree + 1)
    return QuotientSeq(
        anchors[0] * np.exp(1j * ph[0]),
        anchors[1] * np.exp(1j * ph[1]),
        tuple(mods * np.exp(1j * ph[2:])),
    )


@dataclass
class Trial:
    index: int
    degree: int
    verdict: str
    check: str  # PASS, FAIL, MISMATCH, ABSTAIN or NOCONVERGE
    min_modulus_gap: float
    simple: bool


@dataclass
class SweepSummary:
    theorem: str
    degrees: list
    margin_low: float
    margin_high: float
    seed: int
    trials: list = field(default_factory=list)

    def count(self, **match) -> int:
        return sum(1 for t in self.trials if all(getattr(t, k) == v for k, v in match.items()))

    @property
    def certified(self) -> int:
        return self.count(verdict="CERTIFIED")

    @property
    def min_certified_gap(self) -> float:
        gaps = [t.min_modulus_gap for t in self.trials if t.verdict == "CERTIFIED"]
        return min(gaps) if gaps else math.inf

    def certified_failures(self) -> list:
        return [t for t in self.trials if t.verdict == "CERTIFIED" and t.check in ("FAIL", "MISMATCH", "NOCONVERGE")]

    def to_json(self) -> dict:
        n = len(self.trials)
        return {
            "theorem": self.theorem,
            "degrees": self.degrees,
            "margin_low": self.margin_low,
            "margin_high": self.margin_high,
            "seed": self.seed,
            "trials": n,
            "verdicts": {
                v.value: self.count(verdict=v.value) for v in certifier.Verdict
            },
            "checks": {c: self.count(check=c) for c in ("PASS", "FAIL", "MISMATCH", "ABSTAIN", "NOCONVERGE")},
            "certified_verification_failures": len(self.certified_failures()),
            "min_modulus_gap_certified": None if not self.certified else self.min_certified_gap,
        }


def run_sweep(
    degrees,
    trials: int,
    margin_low: float,
    margin_high: float,
    seed: int = 0,
    theorem: str = "auto",
    table: ThresholdTable = DEFAULT_TABLE,
) -> SweepSummary:
    """Sample ``trials`` sequences with |q_k| in [threshold + low, threshold + high].

    Complex theorems are checked with the annulus counts (a guard failure is
    an abstention); the real ones with the realness oracle.  Trial order and
    every draw depend only on ``seed``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if margin_high < margin_low:
        raise ValueError("margin_high must be >= margin_low")
    degrees = [int(d) for d in np.atleast_1d(degrees)]
    if any(d < 2 for d in degrees):
        raise ValueError("degrees must be >= 2")
    rng = np.random.default_rng(seed)
    summary = SweepSummary(theorem, degrees, margin_low, margin_high, seed)
    for i in range(trials):
        deg = int(degrees[rng.integers(len(degrees))])
        th = threshold_for(theorem, deg, table)
        seq = sample_sequence(rng, deg, max(th + margin_low, 1e-3), th + margin_high, theorem)
        p = from_quotients(seq)
        cert = certifier.certify(p, theorem, table)
        report = find_roots(p)
        if not report.converged:
            check = "NOCONVERGE"
        elif theorem in REAL_THEOREMS:
            ok = realness_check(report)
            if theorem == "hutchinson":
                ok = ok and report.simple and all(z.real < 0 for z in report.roots)
            check = PASS if ok else "FAIL"
        else:
            try:
                check = verify_annuli(p, report).verdict
            except (ContourGuardError, WindingError):
                check = "ABSTAIN"
            if check == PASS and not report.simple:
                check = "FAIL"
        summary.trials.append(Trial(i, deg, cert.verdict.value, check, report.min_modulus_gap, report.simple))
    return summary
