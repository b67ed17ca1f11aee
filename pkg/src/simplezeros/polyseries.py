"""Polynomials with nonzero coefficients and their second-quotient form."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

MAX_DEGREE = 64
COEFF_RANGE = (1e-300, 1e300)


class PolyInputError(ValueError):
    """Malformed or inadmissible polynomial data."""


class CoefficientRangeError(ArithmeticError):
    pass


def _as_complex(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise PolyInputError(f"expected [re, im] pair, got {value!r}")
        return complex(float(value[0]), float(value[1]))
    return complex(value)


@dataclass(frozen=True)
class ComplexPoly:
    """Dense polynomial a_0 + a_1 z + ... + a_w z^w with every a_k != 0."""

    coeffs: tuple
    max_degree: int = field(default=MAX_DEGREE, compare=False, repr=False)

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 3:
            raise PolyInputError(f"degree must be at least 2, got {len(coeffs) - 1}")
        if len(coeffs) - 1 > self.max_degree:
            raise PolyInputError(
                f"degree {len(coeffs) - 1} exceeds the cap {self.max_degree}"
            )
        for k, c in enumerate(coeffs):
            if c == 0:
                raise PolyInputError(f"zero coefficient at index {k}")
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise PolyInputError(f"non-finite coefficient at index {k}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0.0 for c in self.coeffs)

    @property
    def is_positive(self) -> bool:
        return all(c.imag == 0.0 and c.real > 0.0 for c in self.coeffs)

    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    def __call__(self, z):
        """Horner evaluation."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative_at(self, z) -> complex:
        acc = 0j
        n = self.degree
        for k in range(n, 0, -1):
            acc = acc * z + k * self.coeffs[k]
        return acc

    def times_linear(self, d: float) -> "ComplexPoly":
        """Return self(z) * (1 + z/d)."""
        a = self.coeffs
        out = [a[0]] + [a[k - 1] / d + a[k] for k in range(1, len(a))] + [a[-1] / d]
        return ComplexPoly(tuple(out), max_degree=max(self.max_degree, len(out) - 1))


@dataclass(frozen=True)
class QuotientSeq:
    """Anchors a0, a1 and second quotients q_2..q_w."""

    a0: complex
    a1: complex
    q: tuple

    def __post_init__(self):
        object.__setattr__(self, "a0", complex(self.a0))
        object.__setattr__(self, "a1", complex(self.a1))
        object.__setattr__(self, "q", tuple(complex(x) for x in self.q))
        if self.a0 == 0 or self.a1 == 0:
            raise PolyInputError("anchors a0, a1 must be nonzero")
        if not self.q:
            raise PolyInputError("need at least one quotient (degree >= 2)")
        for i, x in enumerate(self.q):
            if x == 0:
                raise PolyInputError(f"zero quotient q_{i + 2}")

    @property
    def degree(self) -> int:
        return len(self.q) + 1

    def moduli(self) -> list:
        return [abs(x) for x in self.q]


@dataclass(frozen=True)
class AnnulusPartition:
    """Radii R_1 < ... < R_{w-1} for the normalized polynomial.

    ``scale`` is |a0/a1|; the separating circles for the polynomial itself
    are ``scale * R_k`` (see :attr:`circles`).
    """

    radii: tuple
    scale: float = 1.0

    @property
    def circles(self) -> tuple:
        return tuple(self.scale * r for r in self.radii)

    @property
    def increasing(self) -> bool:
        return all(b > a for a, b in zip(self.radii, self.radii[1:]))

    def to_json(self) -> dict:
        return {"radii": list(self.radii), "scale": self.scale}


def quotients(p: ComplexPoly) -> QuotientSeq:
    a = p.coeffs
    q = tuple((a[n - 1] / a[n - 2]) * (a[n - 1] / a[n]) for n in range(2, len(a)))
    return QuotientSeq(a[0], a[1], q)


def quotient_moduli(p: ComplexPoly) -> list:
    return [abs(x) for x in quotients(p).q]


def from_quotients(s: QuotientSeq, max_degree: int = MAX_DEGREE) -> ComplexPoly:
    lo, hi = COEFF_RANGE
    coeffs = [s.a0, s.a1]
    for n, qn in enumerate(s.q, start=2):
        try:
            # ratio form: a_{n-1}^2 alone under/overflows long before a_n does
            an = (coeffs[-1] / coeffs[-2]) * (coeffs[-1] / qn)
        except (OverflowError, ZeroDivisionError):
            an = complex(math.inf)
        if not lo <= abs(an) <= hi:
            raise CoefficientRangeError(
                f"|a_{n}| = {abs(an):.3g} leaves [{lo:g}, {hi:g}]; rescale a0/a1 or lower the degree"
            )
        coeffs.append(an)
    return ComplexPoly(tuple(coeffs), max_degree=max_degree)


def normalize(p: ComplexPoly) -> ComplexPoly:
    """a0^{-1} p(a0/a1 z): same quotients, a0 = a1 = 1."""
    s = quotients(p)
    return from_quotients(QuotientSeq(1, 1, s.q), max_degree=p.max_degree)


def radii(s: QuotientSeq) -> AnnulusPartition:
    # logs[i] = log|q_{i+2}|; R_1 = sqrt|q_2|, R_k = |q_2..q_k| sqrt|q_{k+1}|
    logs = [math.log(abs(x)) for x in s.q]
    out = [math.exp(0.5 * logs[0])]
    acc = logs[0]  # log|q_2 ... q_k|
    for k in range(2, len(s.q) + 1):
        out.append(math.exp(acc + 0.5 * logs[k - 1]))
        acc += logs[k - 1]
    return AnnulusPartition(tuple(out), abs(s.a0 / s.a1))


def _pair(c: complex) -> list:
    return [c.real, c.imag]


def serialize_poly(p: ComplexPoly) -> str:
    return json.dumps({"coeffs": [_pair(c) for c in p.coeffs]})


def serialize_quotients(s: QuotientSeq) -> str:
    return json.dumps({"a0": _pair(s.a0), "a1": _pair(s.a1), "q": [_pair(x) for x in s.q]})


def _load(text):
    if isinstance(text, dict):
        return text
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolyInputError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise PolyInputError("expected a JSON object")
    return doc


def parse_poly(text, max_degree: int = MAX_DEGREE) -> ComplexPoly:
    """Parse ``{"coeffs": [[re, im], ...]}`` or the quotient form ``{"a0", "a1", "q"}``."""
    doc = _load(text)
    if "coeffs" in doc:
        raw = doc["coeffs"]
        if not isinstance(raw, list):
            raise PolyInputError('"coeffs" must be a list of [re, im] pairs')
        try:
            coeffs = tuple(_as_complex(c) for c in raw)
        except (TypeError, ValueError) as exc:
            raise PolyInputError(f"bad coefficient: {exc}") from None
        return ComplexPoly(coeffs, max_degree=max_degree)
    if {"a0", "a1", "q"} <= doc.keys():
        return from_quotients(parse_quotients(doc), max_degree=max_degree)
    raise PolyInputError('expected "coeffs" or "a0"/"a1"/"q" keys')


def parse_quotients(text) -> QuotientSeq:
    doc = _load(text)
    try:
        return QuotientSeq(
            _as_complex(doc["a0"]), _as_complex(doc["a1"]), tuple(_as_complex(x) for x in doc["q"])
        )
    except KeyError as exc:
        raise PolyInputError(f"missing key {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, PolyInputError):
            raise
        raise PolyInputError(f"bad quotient data: {exc}") from None
