"""Coefficient-only certificates for simple zeros and real zeros.

Each ``certify_*`` function compares the second-quotient moduli with one
threshold and reports per-index margins ``|q_k| - threshold``.  Comparisons use
plain IEEE semantics; near-zero margins are flagged so callers can apply their
own epsilon.  The conditions are sufficient only: a failed certificate never
means the polynomial has a multiple zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .constants import DEFAULT_TABLE, ThresholdTable, cubic_sharp_constant
from .polyseries import AnnulusPartition, ComplexPoly, QuotientSeq, quotients, radii

BOUNDARY_EPS = 1e-12


class Theorem(str, enum.Enum):
    EVEN_T1I = "EVEN_T1I"
    ODD_T1II = "ODD_T1II"
    TRUNCATED_ENTIRE_T1III = "TRUNCATED_ENTIRE_T1III"
    UNIFORM_COR1 = "UNIFORM_COR1"
    CUBIC_T3I = "CUBIC_T3I"
    REAL_EVEN_T4I = "REAL_EVEN_T4I"
    REAL_ODD_T4III = "REAL_ODD_T4III"
    REAL_CUBIC_T4V = "REAL_CUBIC_T4V"
    HUTCHINSON_A = "HUTCHINSON_A"


class Verdict(str, enum.Enum):
    CERTIFIED = "CERTIFIED"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    CONDITION_FAILS = "CONDITION_FAILS"


class Strictness(str, enum.Enum):
    STRICT = "STRICT"
    NON_STRICT = "NON_STRICT"


GUARANTEES = {
    Theorem.EVEN_T1I: "all zeros simple with pairwise distinct moduli; one zero per annulus",
    Theorem.ODD_T1II: "all zeros simple with pairwise distinct moduli; one zero per annulus",
    Theorem.UNIFORM_COR1: "all zeros simple with pairwise distinct moduli; one zero per annulus",
    Theorem.TRUNCATED_ENTIRE_T1III: (
        "all zeros of the entire function simple with pairwise distinct moduli "
        "(given the claimed tail); numerical checks cover the supplied truncation only"
    ),
    Theorem.CUBIC_T3I: "all zeros simple with pairwise distinct moduli",
    Theorem.REAL_EVEN_T4I: "all zeros real (multiplicity not excluded)",
    Theorem.REAL_ODD_T4III: "all zeros real (multiplicity not excluded)",
    Theorem.REAL_CUBIC_T4V: "all zeros real (multiplicity not excluded)",
    Theorem.HUTCHINSON_A: "all zeros real, simple and negative",
}

NOT_CERTIFIED_NOTE = (
    "condition is sufficient only; this verdict says nothing about multiple zeros"
)


@dataclass
class Certificate:
    theorem: Theorem
    verdict: Verdict
    threshold: float
    strictness: Strictness
    margins: list = field(default_factory=list)
    failing_indices: list = field(default_factory=list)
    radii: AnnulusPartition | None = None
    boundary_indices: list = field(default_factory=list)
    reason: str = ""

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    @property
    def message(self) -> str:
        if self.verdict is Verdict.CERTIFIED:
            return GUARANTEES[self.theorem]
        if self.verdict is Verdict.NOT_APPLICABLE:
            return f"not applicable: {self.reason}"
        return NOT_CERTIFIED_NOTE

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "verdict": self.verdict.value,
            "threshold": self.threshold,
            "strictness": self.strictness.value,
            "margins": [[k, m] for k, m in self.margins],
            "failing_indices": list(self.failing_indices),
            "boundary_indices": list(self.boundary_indices),
            "radii": self.radii.to_json() if self.radii else None,
            "message": self.message,
        }


def _seq(p) -> QuotientSeq:
    return p if isinstance(p, QuotientSeq) else quotients(p)


def _judge(theorem, seq: QuotientSeq, threshold: float, strictness: Strictness) -> Certificate:
    margins, failing, boundary = [], [], []
    for k, q in enumerate(seq.q, start=2):
        m = abs(q) - threshold
        margins.append((k, m))
        ok = m > 0 if strictness is Strictness.STRICT else m >= 0
        if not ok:
            failing.append(k)
        if abs(m) < BOUNDARY_EPS:
            boundary.append(k)
    verdict = Verdict.CONDITION_FAILS if failing else Verdict.CERTIFIED
    return Certificate(
        theorem=theorem,
        verdict=verdict,
        threshold=threshold,
        strictness=strictness,
        margins=margins,
        failing_indices=failing,
        radii=radii(seq) if verdict is Verdict.CERTIFIED else None,
        boundary_indices=boundary,
    )


def _not_applicable(theorem, threshold, strictness, reason) -> Certificate:
    return Certificate(theorem, Verdict.NOT_APPLICABLE, threshold, strictness, reason=reason)


def certify_even(p, table: ThresholdTable = DEFAULT_TABLE) -> Certificate:
    s = _seq(p)
    deg = s.degree
    if deg % 2:
        return _not_applicable(Theorem.EVEN_T1I, float("nan"), Strictness.STRICT, f"degree {deg} is odd")
    return _judge(Theorem.EVEN_T1I, s, table.b(deg // 2), Strictness.STRICT)


def certify_odd(p, table: ThresholdTable = DEFAULT_TABLE) -> Certificate:
    s = _seq(p)
    deg = s.degree
    if deg % 2 == 0:
        return _not_applicable(Theorem.ODD_T1II, float("nan"), Strictness.NON_STRICT, f"degree {deg} is even")
    return _judge(Theorem.ODD_T1II, s, table.b((deg + 1) // 2), Strictness.NON_STRICT)


def certify_uniform(p, table: ThresholdTable = DEFAULT_TABLE) -> Certificate:
    return _judge(Theorem.UNIFORM_COR1, _seq(p), table.b_infinity, Strictness.NON_STRICT)


def certify_truncated_entire(
    s: QuotientSeq, claimed_tail: bool = False, table: ThresholdTable = DEFAULT_TABLE
) -> Certificate:
    """Theorem-level certificate for an entire function known only by a prefix.

    A failing supplied quotient decides the matter; otherwise the verdict
    rests on the caller's claim that every unseen |q_k| >= b_inf.
    """
    s = _seq(s)
    cert = _judge(Theorem.TRUNCATED_ENTIRE_T1III, s, table.b_infinity, Strictness.NON_STRICT)
    if cert.verdict is Verdict.CERTIFIED and not claimed_tail:
        cert.verdict = Verdict.NOT_APPLICABLE
        cert.radii = None
        cert.reason = "a finite prefix says nothing about the unseen quotients; no tail claim given"
    return cert


def certify_cubic(p) -> Certificate:
    s = _seq(p)
    c = cubic_sharp_constant()
    if s.degree != 3:
        return _not_applicable(Theorem.CUBIC_T3I, c, Strictness.STRICT, f"degree {s.degree} is not 3")
    return _judge(Theorem.CUBIC_T3I, s, c, Strictness.STRICT)


def _all_real(s: QuotientSeq) -> bool:
    return s.a0.imag == 0 and s.a1.imag == 0 and all(q.imag == 0 for q in s.q)


def certify_real(p, table: ThresholdTable = DEFAULT_TABLE) -> Certificate:
    s = _seq(p)
    deg = s.degree
    if deg == 3:
        theorem, threshold = Theorem.REAL_CUBIC_T4V, table.cubic_constant
    elif deg % 2 == 0:
        theorem, threshold = Theorem.REAL_EVEN_T4I, table.b(deg // 2)
    else:
        theorem, threshold = Theorem.REAL_ODD_T4III, table.b((deg + 1) // 2)
    if not _all_real(s):
        return _not_applicable(theorem, threshold, Strictness.NON_STRICT, "some coefficient is nonreal")
    return _judge(theorem, s, threshold, Strictness.NON_STRICT)


def certify_hutchinson(p) -> Certificate:
    s = _seq(p)
    positive = _all_real(s) and s.a0.real > 0 and s.a1.real > 0 and all(q.real > 0 for q in s.q)
    if not positive:
        return _not_applicable(
            Theorem.HUTCHINSON_A, 4.0, Strictness.NON_STRICT, "coefficients must be positive reals"
        )
    # positive coefficients: q_n itself is real and positive, so |q_n| = q_n
    return _judge(Theorem.HUTCHINSON_A, s, 4.0, Strictness.NON_STRICT)


CERTIFIERS = {
    "even": certify_even,
    "odd": certify_odd,
    "uniform": certify_uniform,
    "cubic": certify_cubic,
    "real": certify_real,
    "hutchinson": certify_hutchinson,
}


def certify(p, theorem: str = "auto", table: ThresholdTable = DEFAULT_TABLE) -> Certificate:
    """Run one named certificate; ``auto`` picks the simple-zero one for the degree.

    ``auto`` means cubic for degree 3, even or odd otherwise.  The
    real-rootedness and Hutchinson certificates only run when named.
    """
    if theorem == "auto":
        deg = _seq(p).degree
        theorem = "cubic" if deg == 3 else ("even" if deg % 2 == 0 else "odd")
    try:
        fn = CERTIFIERS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}") from None
    return fn(p) if fn in (certify_cubic, certify_hutchinson) else fn(p, table)
