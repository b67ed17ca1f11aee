"""Sharpness witnesses: polynomials at or just below the thresholds whose
zeros are multiple or nonreal."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import DEFAULT_TABLE, ThresholdTable, cubic_sharp_constant
from .polyseries import ComplexPoly, CoefficientRangeError, PolyInputError, quotient_moduli

FAMILIES = ("even", "odd", "entire", "real", "cubic")
MAX_DOUBLINGS = 60


class ExtremalSearchError(RuntimeError):
    pass


def extremal_even(n: int, c: float, scaled: bool = False) -> ComplexPoly:
    """sum_k c^{k(2n-k)/2} z^k - 2 c^{n^2/2} z^n.

    Palindromic, every |q_k| = c, and z = 1 is a double zero exactly when
    c = b(n).  With ``scaled`` the whole polynomial is divided by c^{n^2/2}
    (coefficients c^{-(n-k)^2/2}, middle one -1), which keeps values at z = 1
    on a unit scale for large n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not c > 1:
        raise ValueError("c must exceed 1")
    logc = math.log(c)
    top = 0.5 * n * n * logc
    if top > 690:
        # unscaled overflows, scaled underflows at the ends
        raise CoefficientRangeError(f"c^(n^2/2) = exp({top:.1f}) is out of double range")
    if scaled:
        half = [math.exp(-0.5 * (n - k) ** 2 * logc) for k in range(n)]
        mid = -1.0
    else:
        half = [math.exp(0.5 * k * (2 * n - k) * logc) for k in range(n)]
        mid = -math.exp(top)
    # mirror so a_k == a_{2n-k} bit for bit
    coeffs = half + [mid] + half[::-1]
    return ComplexPoly(tuple(coeffs), max_degree=max(64, 2 * n))


@dataclass
class OddWitness:
    poly: ComplexPoly
    d: float
    b_even: float
    b_next: float
    min_low_modulus: float  # min |q_k| over k <= 2n
    top_modulus: float  # |q_{2n+1}|

    @property
    def margin_vs_b_even(self) -> float:
        return self.min_low_modulus - self.b_even

    @property
    def margin_vs_b_next(self) -> float:
        return self.min_low_modulus - self.b_next


def extremal_odd(n: int, d: float = 1e4, table: ThresholdTable = DEFAULT_TABLE) -> OddWitness:
    """P_{2n, b(n)}(z) * (1 + z/d): degree 2n+1, double zero kept at z = 1."""
    if not d > 0:
        raise ValueError("d must be positive")
    base = extremal_even(n, table.b(n))
    try:
        q = base.times_linear(d)
    except PolyInputError as exc:
        raise PolyInputError(f"{exc} for d={d!r}; perturb d") from None
    mods = quotient_moduli(q)
    return OddWitness(q, d, table.b(n), table.b(n + 1), min(mods[:-1]), mods[-1])


def minimal_n0(eps: float, table: ThresholdTable = DEFAULT_TABLE, limit: int = 200) -> int:
    target = table.b_infinity - eps / 3.0
    for n in range(1, limit + 1):
        if table.b(n) > target:
            return n
    raise ExtremalSearchError(f"no b(n) > b_inf - eps/3 for n <= {limit}")


@dataclass
class EntireTruncation:
    poly: ComplexPoly
    n0: int
    eps: float
    d: list
    floors: list  # quotient floor required after each level

    @property
    def min_modulus(self) -> float:
        return min(quotient_moduli(self.poly))


def extremal_entire_truncation(
    n0: int, eps: float, levels: int, table: ThresholdTable = DEFAULT_TABLE
) -> EntireTruncation:
    """T_J = P_{2n0, b(n0)} * prod_{j<=J} (1 + z/d_j).

    Each d_j starts at max(2^j + 1, d_{j-1}) and doubles until every quotient
    modulus clears b_inf - eps/3 - sum_{l<=j} eps/2^{l+1}.  ``n0 = 0`` picks
    the smallest n0 with b(n0) > b_inf - eps/3.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if levels < 0:
        raise ValueError("levels must be >= 0")
    if n0 == 0:
        n0 = minimal_n0(eps, table)
    b_inf = table.b_infinity
    poly = extremal_even(n0, table.b(n0))
    floor = b_inf - eps / 3.0
    ds, floors = [], [floor]
    prev = 0.0
    for j in range(1, levels + 1):
        floor -= eps / 2.0 ** (j + 1)
        d = max(2.0**j + 1.0, prev)
        for _ in range(MAX_DOUBLINGS):
            try:
                cand = poly.times_linear(d)
                mods = quotient_moduli(cand)
            except PolyInputError:
                mods = None
            if mods is not None and min(mods) > floor:
                break
            d *= 2.0
        else:
            bad = None if mods is None else 2 + min(range(len(mods)), key=mods.__getitem__)
            raise ExtremalSearchError(
                f"level {j}: no d found after {MAX_DOUBLINGS} doublings (violated index {bad})"
            )
        poly, prev = cand, d
        ds.append(d)
        floors.append(floor)
    return EntireTruncation(poly, n0, eps, ds, floors)


def real_counterexample(n: int, delta: float, table: ThresholdTable = DEFAULT_TABLE) -> ComplexPoly:
    """P_{2n, b(n)}(x) + delta x^n: positive on [0, inf) yet with nonreal zeros.

    ``delta`` must stay below b(n)^{n^2/2} = |a_n| so the middle coefficient
    remains negative.
    """
    base = extremal_even(n, table.b(n))
    mid = abs(base.coeffs[n])
    if not 0 < delta < mid:
        raise ValueError(f"delta must lie in (0, {mid!r})")
    coeffs = list(base.coeffs)
    coeffs[n] = coeffs[n] + delta
    return ComplexPoly(tuple(coeffs), max_degree=base.max_degree)


def cubic_extremal() -> ComplexPoly:
    """1 + z + z^2/c - z^3/c^3 with c = sqrt(9 + 6 sqrt 3); q_2 = c, q_3 = -c."""
    c = cubic_sharp_constant()
    return ComplexPoly((1.0, 1.0, 1.0 / c, -1.0 / c**3))
