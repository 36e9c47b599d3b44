"""Log canonical models along ``K_alpha = 13 lambda - (2 - alpha) delta`` and
Zariski-decomposition obstructions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cones import (
    CurveClass,
    Verdict,
    classify_moriwaki,
    dual_curve,
    intersect,
)
from .config import Config
from .divisors import (
    DivisorClass,
    RatLike,
    as_rat,
    boundary_count,
    check_genus,
    k_alpha,
    make_divisor,
    proportional_to,
)

HYPERELLIPTIC_CAVEAT = (
    "below the threshold the hyperelliptic locus lies in the restricted base "
    "locus; whether the map is undefined along it is left open when that locus "
    "sits inside a divisorial component of the stable base locus (possible only "
    "for g >= 4)"
)


class Regime(str, enum.Enum):
    ISO = "IsoOverMg"
    CONTRACTS = "ContractsHyperelliptic"
    BMINUS = "HyperellipticInBminus"


class Obstruction(str, enum.Enum):
    NO_ZARISKI = "NoZariskiDecomposition"
    NONE = "NoObstruction"


def alpha_threshold(g: int) -> Fraction:
    """``(3g + 8) / (8g + 4)``: K_alpha is a strict M-divisor exactly above it."""
    check_genus(g)
    return Fraction(3 * g + 8, 8 * g + 4)


def cornalba_harris_class(g: int) -> DivisorClass:
    """``(8g + 4) lambda - g delta``."""
    check_genus(g)
    return make_divisor(g, 8 * g + 4, [g] * boundary_count(g))


def nef_threshold(nef_bound: Fraction) -> Fraction:
    """Smallest alpha with ``13 / (2 - alpha) >= nef_bound``."""
    return 2 - Fraction(13) / nef_bound


@dataclass(frozen=True)
class AlphaClassification:
    genus: int
    alpha: Fraction
    regime: Regime
    ample: bool | None
    nef: bool
    big: bool | None
    alpha_star: Fraction
    alpha_nef: Fraction
    alpha_psef: Fraction | None
    slope: Fraction
    moriwaki_verdict: Verdict
    cornalba_harris_factor: Fraction | None
    caveat: str | None


def classify_alpha(g: int, alpha: RatLike, config: Config | None = None) -> AlphaClassification:
    config = config or Config()
    alpha = as_rat(alpha)
    K = k_alpha(g, alpha)  # range check
    star = alpha_threshold(g)
    if alpha > star:
        regime = Regime.ISO
    elif alpha == star:
        regime = Regime.CONTRACTS
    else:
        regime = Regime.BMINUS

    ray_slope = 13 / (2 - alpha)
    alpha_nef = nef_threshold(config.nef_bound)
    nef = ray_slope >= config.nef_bound
    if alpha == 1:
        ample = True
    elif not nef:
        ample = False
    else:
        ample = None

    s_g, _ = config.slope(g)
    alpha_psef = None if s_g is None else 2 - 13 / s_g
    verdict = classify_moriwaki(K).verdict
    if verdict is Verdict.STRICT:
        big = True
    elif s_g is not None:
        big = ray_slope > s_g
    else:
        big = None

    factor = proportional_to(K, cornalba_harris_class(g)) if regime is Regime.CONTRACTS else None
    return AlphaClassification(
        genus=g,
        alpha=alpha,
        regime=regime,
        ample=ample,
        nef=nef,
        big=big,
        alpha_star=star,
        alpha_nef=alpha_nef,
        alpha_psef=alpha_psef,
        slope=ray_slope,
        moriwaki_verdict=verdict,
        cornalba_harris_factor=factor,
        caveat=HYPERELLIPTIC_CAVEAT if regime is Regime.BMINUS else None,
    )


@dataclass(frozen=True)
class ObstructionReport:
    subject: DivisorClass
    kappa_hypothesis: bool
    verdict: Obstruction
    moriwaki_verdict: Verdict
    witness_facet: str | None
    witness_curve: CurveClass | None
    pairing: Fraction | None
    narrative: str


def zariski_obstruction(D: DivisorClass, kappa_at_least_one: bool) -> ObstructionReport:
    """Rule out an R-CKM Zariski decomposition when D is not a strict M-divisor.

    ``kappa_at_least_one`` is the caller's assertion that the Iitaka
    dimension of D is at least one; it is echoed, never computed.
    """
    cls = classify_moriwaki(D)
    if not kappa_at_least_one or cls.verdict is Verdict.STRICT:
        if cls.verdict is Verdict.STRICT:
            text = "strict M-divisor: no obstruction to a Zariski decomposition"
        else:
            text = (
                "not a strict M-divisor, but Iitaka dimension >= 1 was not asserted: "
                "no conclusion"
            )
        return ObstructionReport(D, kappa_at_least_one, Obstruction.NONE, cls.verdict, None, None, None, text)

    facet = (cls.violated or cls.active)[0]
    curve = dual_curve(D.genus, facet)
    pairing = intersect(D, curve)
    text = (
        "Iitaka dimension >= 1 and not a strict M-divisor: D has no R-CKM Zariski "
        "decomposition. If D is the canonical class and is big, no sequence of "
        "divisorial contractions alone reaches a minimal model; a flip is required."
    )
    return ObstructionReport(
        D, kappa_at_least_one, Obstruction.NO_ZARISKI, cls.verdict, facet, curve, pairing, text
    )
