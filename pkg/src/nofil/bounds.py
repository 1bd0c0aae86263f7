"""Counting constraints on graph embeddings in Steiner triple systems.

An embedding of a graph G splits the points into played (p of them),
available (a = |V(G)|) and unplayable (u); e = |E(G)| and v = p + a + u.
Block-type counts follow from (p, a, u, e); requiring each count to be
non-negative, plus edge-colouring arguments, bounds u. All comparisons are
exact (see :mod:`nofil.surd`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .surd import Surd, sign_root, sign_two_roots

STS_RESIDUES = (1, 3)


@dataclass(frozen=True)
class EmbedParams:
    p: int
    a: int
    u: int
    e: int

    def __post_init__(self):
        if self.p < 0 or self.u < 0 or self.a < 1 or self.e < 0:
            raise ValueError(f"invalid sizes {self}")
        if self.e > comb(self.a, 2):
            raise ValueError(f"{self.e} edges exceed C({self.a}, 2)")

    @property
    def v(self) -> int:
        return self.p + self.a + self.u


def census_formulas(p: int, a: int, u: int, e: int) -> dict[str, Fraction]:
    """Predicted block counts of a graph endgame; negative values mean infeasible."""
    slack = u - p - a + 1
    return {
        "PPU": Fraction(comb(p, 2)),
        "PAA": Fraction(e),
        "PAU": Fraction(p * a - 2 * e),
        "PUU": Fraction(p * slack, 2) + e,
        "AAU": Fraction(comb(a, 2) - e),
        "AUU": Fraction(a * slack, 2) + 2 * e,
        "UUU": Fraction(u * u - u - (a + p) * slack, 6) - e,
    }


# -- bounds on u ------------------------------------------------------------------

# constraint names used in reports
COLOUR_G = "colour_G"                # played points properly colour E(G)
COLOUR_COMPLEMENT = "colour_coG"     # unplayable points colour E(complement)
COLOUR_K_P = "colour_K_p"            # unplayable points colour the pairs of P
AUU_NONNEG = "AUU>=0"
PUU_LOW = "PUU>=0:low"
PUU_HIGH = "PUU>=0:high"
PAU_NONNEG = "PAU>=0"
U_COVERED = "u<=C(p,2)"
UUU_NONNEG = "UUU>=0"
U_NONNEG = "u>=0"


@dataclass
class Bound:
    name: str
    side: str  # "lower" | "upper"
    value: Surd | None  # None: not evaluated
    note: str = ""


def puu_roots(a: int, e: int, v: int) -> tuple[Surd, Surd]:
    """Roots of 2u^2 + (2a-3v+1)u + (v-a)(v-1) - 2e."""
    centre = Fraction(3 * v - 2 * a - 1, 4)
    disc = (v - 2 * a + 1) ** 2 + 16 * e
    half = Surd(0, Fraction(1, 4), disc)
    return Surd(centre) - half, Surd(centre) + half


def auu_lower(a: int, e: int, v: int) -> Surd:
    return Surd(Fraction(a * (v - 1) - 4 * e, 2 * a))


def covered_upper(a: int, v: int) -> Surd | None:
    """u <= C(p,2) with p = v-a-u, as an upper bound on u; None if v < a."""
    rad = 8 * (v - a) + 1
    if rad < 0:
        return None
    return Surd(Fraction(2 * (v - a) + 1, 2), Fraction(-1, 2), rad)


def uuu_gap(e: int, v: int) -> tuple[Surd, Surd] | None:
    """Open interval u must avoid so that UUU >= 0, or None when no constraint."""
    if v * v - 4 * v > 24 * e:
        return None
    rad = 72 * e - 3 * v * v + 12 * v
    half = Surd(0, Fraction(1, 6), rad)
    centre = Surd(Fraction(v, 2))
    return centre - half, centre + half


@dataclass
class FeasibilityReport:
    a: int
    e: int
    v: int
    bounds: list[Bound]
    real_lower: Surd
    real_upper: Surd | None
    gap: tuple[Surd, Surd] | None
    u_lo: int
    u_hi: int
    feasible_u: list[int]
    exception_hits: list[str] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.feasible_u

    @property
    def real_empty(self) -> bool:
        lo, hi = self.real_lower, self.real_upper
        if hi is None or lo > hi:
            return True
        if self.gap is None:
            return False
        return not (lo <= self.gap[0] or hi >= self.gap[1])

    def binding(self) -> tuple[list[str], list[str]]:
        """Names of the lower and upper bounds that attain the real interval ends."""
        lows = [b.name for b in self.bounds if b.side == "lower" and b.value is not None
                and b.value == self.real_lower]
        highs = [b.name for b in self.bounds if b.side == "upper" and b.value is not None
                 and self.real_upper is not None and b.value == self.real_upper]
        return lows, highs

    def bound(self, name: str) -> Bound:
        return next(b for b in self.bounds if b.name == name)


def u_interval(a: int, e: int, v: int, chi: tuple[int, int] | None = None) -> FeasibilityReport:
    """Evaluate every bound on u for (a, e, v).

    ``chi`` is ``(chromatic index of G, chromatic index of its complement)``;
    without it the two colouring bounds are reported as not evaluated.
    """
    if a < 1:
        raise ValueError("a must be at least 1")
    bounds = [Bound(U_NONNEG, "lower", Surd(0))]
    if chi is not None:
        bounds.append(Bound(COLOUR_G, "upper", Surd(v - a - chi[0])))
        bounds.append(Bound(COLOUR_COMPLEMENT, "lower", Surd(chi[1])))
    else:
        bounds.append(Bound(COLOUR_G, "upper", None, "not evaluated"))
        bounds.append(Bound(COLOUR_COMPLEMENT, "lower", None, "not evaluated"))
    bounds.append(Bound(COLOUR_K_P, "lower", Surd(Fraction(v - a - 1, 2))))
    bounds.append(Bound(AUU_NONNEG, "lower", auu_lower(a, e, v)))
    low, high = puu_roots(a, e, v)
    bounds.append(Bound(PUU_LOW, "lower", low))
    bounds.append(Bound(PUU_HIGH, "upper", high))
    bounds.append(Bound(PAU_NONNEG, "upper", Surd(v - a) - Fraction(2 * e, a)))
    cov = covered_upper(a, v)
    bounds.append(Bound(U_COVERED, "upper", cov, "" if cov is not None else "v < a"))
    gap = uuu_gap(e, v)
    note = "inactive" if gap is None else f"u <= {float(gap[0]):.4f} or u >= {float(gap[1]):.4f}"
    bounds.append(Bound(UUU_NONNEG, "either", None, note))

    lows = [b.value for b in bounds if b.side == "lower" and b.value is not None]
    highs = [b.value for b in bounds if b.side == "upper" and b.value is not None]
    real_lower = max(lows)
    real_upper = None if cov is None else min(highs)
    if real_upper is None:
        u_lo, u_hi, feasible = real_lower.ceil(), -1, []
    else:
        u_lo, u_hi = real_lower.ceil(), real_upper.floor()
        feasible = [
            u for u in range(u_lo, u_hi + 1)
            if gap is None or not (gap[0] < u < gap[1])
        ]
    report = FeasibilityReport(a, e, v, bounds, real_lower, real_upper, gap, u_lo, u_hi, feasible)
    if (a, e, v) in set(enumerate_exceptions(False)):
        report.exception_hits.append("real")
    if (a, e, v) in set(enumerate_exceptions(True)):
        report.exception_hits.append("integral")
    return report


# -- bounds on v ------------------------------------------------------------------


def _edge_threshold(a: int) -> Surd:
    """(-a + sqrt(8a^3 - 7a^2)) / 4."""
    return Surd(Fraction(-a, 4), Fraction(1, 4), 8 * a ** 3 - 7 * a * a)


def _colouring_bound(a: int, e: int) -> Surd:
    return Surd(a - 1 + Fraction(4 * e, a))


def _sparse_bound(a: int, e: int) -> Surd | None:
    """2a + 2 - 4e/a + sqrt(8a + 1 - 32e/a); None when the radicand is negative."""
    rad = Fraction(8 * a + 1) - Fraction(32 * e, a)
    if rad < 0:
        return None
    return Surd(2 * a + 2 - Fraction(4 * e, a)) + Surd.sqrt(rad)


def closed_form_v_bounds(a: int, e: int) -> dict[str, Surd]:
    """The four lower bounds on v that survive pairing all u-bounds."""
    out = {
        "a-1+4e/a": _colouring_bound(a, e),
        "2a-1": Surd(2 * a - 1),
        "a+3": Surd(a + 3),
    }
    sparse = _sparse_bound(a, e)
    if sparse is not None:
        out["2a+2-4e/a+sqrt(8a+1-32e/a)"] = sparse
    return out


def v_formula(a: int, e: int) -> tuple[str, Surd]:
    """Region-wise lower bound on v for a graph with a vertices and e edges."""
    quarter = Fraction(a * a, 4)
    threshold = _edge_threshold(a)
    if a >= 4 and e >= quarter:
        return "a-1+4e/a", _colouring_bound(a, e)
    if a <= 4 and e >= a:
        return "a-1+4e/a", _colouring_bound(a, e)
    if a >= 4 and threshold <= e <= quarter:
        return "2a-1", Surd(2 * a - 1)
    if a >= 4 and e <= threshold:
        return "2a+2-4e/a+sqrt(8a+1-32e/a)", _sparse_bound(a, e)
    if a <= 4 and quarter <= e <= a:
        return "a+3", Surd(a + 3)
    return "2a+2-4e/a+sqrt(8a+1-32e/a)", _sparse_bound(a, e)


@dataclass
class AdmissibleV:
    a: int
    e: int
    case: str
    v_formula: Surd
    v_min: int
    skipped: list[tuple[int, str]]


def min_admissible_v(a: int, e: int, v_cap: int = 10_000) -> AdmissibleV:
    """Smallest v = 1, 3 mod 6 meeting the region bound with an integer u available."""
    if a < 1 or not 0 <= e <= comb(a, 2):
        raise ValueError(f"need a >= 1 and 0 <= e <= C(a,2), got a={a}, e={e}")
    case, formula = v_formula(a, e)
    skipped = []
    v = max(formula.ceil(), 1)
    while v <= v_cap:
        if v % 6 in STS_RESIDUES:
            report = u_interval(a, e, v)
            if not report.empty:
                return AdmissibleV(a, e, case, formula, v, skipped)
            reason = "exception" if "integral" in report.exception_hits else "u-interval empty"
            skipped.append((v, reason))
        v += 1
    raise ValueError(f"no admissible v up to {v_cap}")


def _scan_limit(a: int) -> int:
    return 4 * a + 2 + isqrt(8 * a + 1) + 2


def _floor_root(num: int, sign: int, rad: int, den: int) -> int:
    """floor((num + sign*sqrt(rad)) / den) for den > 0, in integers only."""
    s = isqrt(rad)
    if s * s == rad:
        return (num + sign * s) // den
    # the root lies strictly between s and s+1
    return (num + s) // den if sign > 0 else (num - s - 1) // den


def _real_exception(a: int, e: int, v: int) -> bool:
    # everything scaled by 4 (and by 4a for the AUU side) to stay in integers
    d1 = (v - 2 * a + 1) ** 2 + 16 * e
    d4 = 4 * (8 * (v - a) + 1)
    forbidden = sign_two_roots(2 * a - v - 3, -1, d1, 1, d4) > 0
    permitted = sign_root(a * (2 * v - 4 * a + 4) + 8 * e, -a, d4) >= 0
    return forbidden and permitted


def _integral_exception(a: int, e: int, v: int) -> bool:
    top = _floor_root(4 * (v - a) + 2, -1, 4 * (8 * (v - a) + 1), 4)
    low_root = -_floor_root(2 * a + 1 - 3 * v, 1, (v - 2 * a + 1) ** 2 + 16 * e, 4)
    auu = -((4 * e - a * (v - 1)) // (2 * a))
    return max(low_root, 0) > top and max(auu, 0) <= top


@lru_cache(maxsize=None)
def enumerate_exceptions(integral: bool = False) -> tuple[tuple[int, int, int], ...]:
    """Triples (a, e, v) ruled out only by the PUU lower root against u <= C(p,2).

    Scans a <= 26, all e, and v up to a margin past every finite range that
    can contain such triples. Real mode compares the bounds as real numbers;
    integral mode keeps v = 1, 3 mod 6 and compares ceilings with floors.
    """
    test = _integral_exception if integral else _real_exception
    out = []
    for a in range(1, 27):
        for e in range(comb(a, 2) + 1):
            start = max(b.ceil() for b in closed_form_v_bounds(a, e).values())
            for v in range(max(start, a), _scan_limit(a) + 1):
                if integral and v % 6 not in STS_RESIDUES:
                    continue
                if test(a, e, v):
                    out.append((a, e, v))
    return tuple(out)
