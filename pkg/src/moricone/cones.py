"""The Moriwaki cone: facets, dual curves, decomposition and plane sections.

A class ``a lambda - sum b_i delta_i`` is an M-divisor when

    a >= 0,   a >= (8g+4)/g * b_0,   a >= (2g+1)/(i(g-i)) * b_i  (1 <= i <= g//2)

and a *strict* M-divisor when all of these are strict.  Facet ids are
``NonnegA``, ``Delta0``, ..., ``Delta{g//2}`` in that order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .divisors import (
    DivisorClass,
    as_rat,
    boundary_count,
    check_genus,
    delta_class,
    delta_i_class,
    lambda_class,
    moriwaki_divisor,
)
from .errors import ConfigError, GenusMismatchError, NotMoriwakiError


class Verdict(str, enum.Enum):
    OUTSIDE = "Outside"
    BOUNDARY = "Boundary"
    STRICT = "StrictInterior"


class Prediction(str, enum.Enum):
    BMINUS_IN_BOUNDARY = "BminusInBoundary"
    BPLUS_IN_BOUNDARY = "BplusInBoundary"
    BPLUS_EQUALS_BOUNDARY = "BplusEqualsBoundary"
    BMINUS_MEETS_INTERIOR = "BminusMeetsInterior"


def facet_ids(g: int) -> list[str]:
    return ["NonnegA"] + [f"Delta{i}" for i in range(g // 2 + 1)]


def facet_bound(g: int, i: int) -> Fraction:
    """Multiplier ``r_i`` of the facet ``a >= r_i * b_i``."""
    if i == 0:
        return Fraction(8 * g + 4, g)
    return Fraction(2 * g + 1, i * (g - i))


@dataclass(frozen=True)
class MoriwakiClassification:
    verdict: Verdict
    violated: tuple[str, ...]
    active: tuple[str, ...]


@dataclass(frozen=True)
class CurveClass:
    genus: int
    lam: Fraction
    dels: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_rat(self.lam))
        object.__setattr__(self, "dels", tuple(as_rat(x) for x in self.dels))
        if len(self.dels) != boundary_count(self.genus):
            raise ValueError("curve class has the wrong number of boundary degrees")


@dataclass(frozen=True)
class BaseLocusPrediction:
    statement: Prediction
    justification: str


@dataclass(frozen=True)
class SectionRays:
    """Rays ``(a, b)`` standing for ``a lambda - b delta`` on the plane <lambda, delta>."""

    genus: int
    plane: tuple[DivisorClass, DivisorClass]
    nef: tuple[tuple[int, int], ...]
    mor: tuple[tuple[int, int], ...]
    psef: tuple[tuple[int, int], ...] | None
    slope_sg: Fraction | None
    nef_bound: Fraction


def _verdict(violated: list[str], active: list[str]) -> MoriwakiClassification:
    if violated:
        v = Verdict.OUTSIDE
    elif active:
        v = Verdict.BOUNDARY
    else:
        v = Verdict.STRICT
    return MoriwakiClassification(v, tuple(violated), tuple(active))


def classify_moriwaki(D: DivisorClass) -> MoriwakiClassification:
    """Evaluate every Moriwaki inequality exactly."""
    violated: list[str] = []
    active: list[str] = []
    sides = [(D.a, Fraction(0))] + [
        (D.a, facet_bound(D.genus, i) * b) for i, b in enumerate(D.b)
    ]
    for name, (lhs, rhs) in zip(facet_ids(D.genus), sides):
        if lhs < rhs:
            violated.append(name)
        elif lhs == rhs:
            active.append(name)
    return _verdict(violated, active)


def moriwaki_curve_classes(g: int) -> list[CurveClass]:
    """Curves ``C, C_0, ..., C_m`` spanning the dual of the Moriwaki cone.

    Only the dual cone is pinned down; each curve is scaled as the facet
    normal ``(i(g-i); 2g+1 in slot i)`` (``(g; 8g+4)`` for slot 0).
    """
    check_genus(g)
    n = boundary_count(g)
    curves = [CurveClass(g, 1, [0] * n)]
    for i in range(n):
        dels = [0] * n
        if i == 0:
            lam, dels[0] = g, 8 * g + 4
        else:
            lam, dels[i] = i * (g - i), 2 * g + 1
        curves.append(CurveClass(g, lam, dels))
    return curves


def intersect(D: DivisorClass, gamma: CurveClass) -> Fraction:
    if D.genus != gamma.genus:
        raise GenusMismatchError(f"genus mismatch: {D.genus} vs {gamma.genus}")
    return D.a * gamma.lam - sum((b * x for b, x in zip(D.b, gamma.dels)), Fraction(0))


def classify_by_pairing(D: DivisorClass) -> MoriwakiClassification:
    """Same trichotomy as :func:`classify_moriwaki`, read off curve pairings."""
    violated: list[str] = []
    active: list[str] = []
    for name, curve in zip(facet_ids(D.genus), moriwaki_curve_classes(D.genus)):
        p = intersect(D, curve)
        if p < 0:
            violated.append(name)
        elif p == 0:
            active.append(name)
    return _verdict(violated, active)


def dual_curve(g: int, facet: str) -> CurveClass:
    return moriwaki_curve_classes(g)[facet_ids(g).index(facet)]


def moriwaki_decompose(D: DivisorClass) -> tuple[Fraction, DivisorClass]:
    """Write an M-divisor as ``beta * M + E`` with E an effective boundary class."""
    if classify_moriwaki(D).verdict is Verdict.OUTSIDE:
        raise NotMoriwakiError(f"{D} violates a Moriwaki inequality")
    beta = D.a / (8 * D.genus + 4)
    E = D - beta * moriwaki_divisor(D.genus)
    assert E.a == 0 and all(x <= 0 for x in E.b)
    return beta, E


def is_satake_type(D: DivisorClass) -> bool:
    """``a > 0`` and every natural boundary coefficient nonnegative."""
    return D.a > 0 and all(x <= 0 for x in D.b)


def predict_base_locus(D: DivisorClass) -> BaseLocusPrediction:
    if is_satake_type(D):
        return BaseLocusPrediction(
            Prediction.BPLUS_EQUALS_BOUNDARY,
            "lambda plus an effective boundary class: big, and the augmented base "
            "locus is the exceptional locus of the Torelli map to the Satake "
            "compactification, i.e. the whole boundary",
        )
    verdict = classify_moriwaki(D).verdict
    if verdict is Verdict.STRICT:
        return BaseLocusPrediction(
            Prediction.BPLUS_IN_BOUNDARY,
            "strict M-divisor: augmented base locus contained in the boundary",
        )
    if verdict is Verdict.BOUNDARY:
        return BaseLocusPrediction(
            Prediction.BMINUS_IN_BOUNDARY,
            "M-divisor on a facet: restricted base locus contained in the boundary, "
            "augmented base locus meets the interior",
        )
    return BaseLocusPrediction(
        Prediction.BMINUS_MEETS_INTERIOR,
        "not an M-divisor: restricted base locus meets the interior",
    )


# Extremal rays


def facet_normals(g: int) -> list[tuple[Fraction, ...]]:
    """Inequalities ``n . (a, b_0, ..., b_m) >= 0`` in facet order."""
    n = boundary_count(g)
    rows = [tuple(Fraction(int(j == 0)) for j in range(n + 1))]
    for i in range(n):
        row = [Fraction(0)] * (n + 1)
        row[0] = Fraction(1)
        row[i + 1] = -facet_bound(g, i)
        rows.append(tuple(row))
    return rows


def _nullspace_vector(rows: Sequence[Sequence[Fraction]], dim: int) -> tuple[Fraction, ...] | None:
    """A spanning vector of the kernel when it is one-dimensional, else None."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(dim):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][col]
        mat[r] = [x / p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    if len(free) != 1:
        return None
    vec = [Fraction(0)] * dim
    vec[free[0]] = Fraction(1)
    for i, col in enumerate(pivots):
        vec[col] = -mat[i][free[0]]
    return tuple(vec)


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def extremal_rays_by_enumeration(g: int) -> list[tuple[int, ...]]:
    """Extremal rays of ``{x : N x >= 0}`` found by brute force over facet subsets.

    Each ray is the kernel of all facets but one, oriented into the cone and
    kept when it satisfies every inequality.  Returned as primitive integer
    vectors ``(a, b_0, ..., b_m)``.
    """
    normals = facet_normals(g)
    dim = len(normals[0])
    rays = []
    for skip in range(len(normals)):
        rows = [r for j, r in enumerate(normals) if j != skip]
        vec = _nullspace_vector(rows, dim)
        if vec is None:
            continue
        if sum(x * y for x, y in zip(normals[skip], vec)) < 0:
            vec = tuple(-x for x in vec)
        if all(sum(x * y for x, y in zip(n, vec)) >= 0 for n in normals):
            ray = _primitive(vec)
            if ray not in rays:
                rays.append(ray)
    return rays


def moriwaki_extremal_rays(g: int) -> list[DivisorClass]:
    """``delta_0, ..., delta_m`` and the Moriwaki divisor."""
    return [delta_i_class(g, i) for i in range(boundary_count(g))] + [moriwaki_divisor(g)]


# Sections by the plane <lambda, delta>


def _ray(x: Fraction) -> tuple[int, int]:
    return x.numerator, x.denominator


def cone_section(g: int, slope_sg: Fraction | None = None, nef_bound=11) -> SectionRays:
    """Boundary rays of the nef, Moriwaki and pseudoeffective sections.

    ``slope_sg`` is external data; ``None`` omits the pseudoeffective cone.
    The Moriwaki ray is where the tightest facet bound binds on the diagonal.
    """
    check_genus(g)
    nef_bound = as_rat(nef_bound)
    if nef_bound <= 0:
        raise ConfigError(f"nef bound must be positive, got {nef_bound}")
    if slope_sg is not None:
        slope_sg = as_rat(slope_sg)
        if slope_sg <= 0:
            raise ConfigError(f"slope must be positive, got {slope_sg}")
    binding = max(facet_bound(g, i) for i in range(boundary_count(g)))
    delta_ray = (0, -1)
    return SectionRays(
        genus=g,
        plane=(lambda_class(g), delta_class(g)),
        nef=((1, 0), _ray(nef_bound)),
        mor=(delta_ray, _ray(binding)),
        psef=None if slope_sg is None else (delta_ray, _ray(slope_sg)),
        slope_sg=slope_sg,
        nef_bound=nef_bound,
    )


def section_class(g: int, ray: tuple[int, int]) -> DivisorClass:
    """The divisor ``a lambda - b delta`` for a section ray ``(a, b)``."""
    a, b = ray
    return DivisorClass(g, Fraction(a), tuple(Fraction(b) for _ in range(boundary_count(g))))
