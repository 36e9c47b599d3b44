"""Divisor classes on the span of lambda, delta_0, ..., delta_{g//2}.

A class is stored as ``(a; b_0, ..., b_m)`` with ``m = g // 2`` and the
meaning ``a*lambda - sum(b_i * delta_i)``.  The stored ``b_i`` is therefore the
*negated* natural delta_i-coefficient; :meth:`DivisorClass.natural` undoes
the sign.  Every scalar is a :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import (
    AlphaRangeError,
    CoefficientCountError,
    GenusError,
    GenusMismatchError,
    MoriconeError,
    WitnessUnavailableError,
)
from .petri import f_hat, gamma, petri_f0, petri_f1, petri_f2, petri_lambda

RatLike = Union[int, Fraction, str]


def as_rat(x: RatLike) -> Fraction:
    """Coerce ``x`` to an exact rational.  Floats are refused."""
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (Fraction, int)) or isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {x!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def boundary_count(g: int) -> int:
    """Number of boundary classes delta_0..delta_{g//2}."""
    return g // 2 + 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_genus(g: int) -> None:
    if not isinstance(g, int) or isinstance(g, bool):
        raise TypeError("genus must be an integer")
    if g < 3:
        raise GenusError(f"genus must be at least 3, got {g}")


@dataclass(frozen=True)
class DivisorClass:
    genus: int
    a: Fraction
    b: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        check_genus(self.genus)
        object.__setattr__(self, "a", as_rat(self.a))
        b = tuple(as_rat(x) for x in self.b)
        if len(b) != boundary_count(self.genus):
            raise CoefficientCountError(
                f"genus {self.genus} needs {boundary_count(self.genus)} boundary "
                f"coefficients, got {len(b)}"
            )
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return self.genus // 2

    def natural(self) -> tuple[Fraction, tuple[Fraction, ...]]:
        """Coefficients ``(a, c_0, ..., c_m)`` of ``a*lambda + sum c_i*delta_i``."""
        return self.a, tuple(-x for x in self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and not any(self.b)

    def _same_genus(self, other: DivisorClass) -> None:
        if self.genus != other.genus:
            raise GenusMismatchError(
                f"genus mismatch: {self.genus} vs {other.genus}"
            )

    def __add__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._same_genus(other)
        return DivisorClass(
            self.genus, self.a + other.a, tuple(x + y for x, y in zip(self.b, other.b))
        )

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.genus, -self.a, tuple(-x for x in self.b))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, t: RatLike) -> DivisorClass:
        t = as_rat(t)
        return DivisorClass(self.genus, t * self.a, tuple(t * x for x in self.b))

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = ", ".join(str(x) for x in self.b)
        return f"({self.a}; {parts})"


@dataclass(frozen=True)
class BrillNoether:
    r: int
    s: int


@dataclass(frozen=True)
class PetriHat:
    d: int
    gammas: tuple[Fraction, ...] = field(default=())


@dataclass(frozen=True)
class WitnessClass:
    """An effective class used as the witness ``E`` of the bigness criterion."""

    base: DivisorClass
    kind: Union[BrillNoether, PetriHat]

    @property
    def alpha(self) -> Fraction:
        return self.base.a

    @property
    def beta(self) -> tuple[Fraction, ...]:
        return self.base.b

    @property
    def label(self) -> str:
        return "BrillNoether" if isinstance(self.kind, BrillNoether) else "PetriHat"


def make_divisor(g: int, a: RatLike, b: Sequence[RatLike]) -> DivisorClass:
    return DivisorClass(g, as_rat(a), tuple(as_rat(x) for x in b))


def zero_class(g: int) -> DivisorClass:
    return make_divisor(g, 0, [0] * boundary_count(g))


def lambda_class(g: int) -> DivisorClass:
    return make_divisor(g, 1, [0] * boundary_count(g))


def delta_class(g: int) -> DivisorClass:
    """The total boundary ``delta = sum delta_i`` (stored b_i = -1)."""
    return make_divisor(g, 0, [-1] * boundary_count(g))


def delta_i_class(g: int, i: int) -> DivisorClass:
    check_genus(g)
    if not 0 <= i <= g // 2:
        raise MoriconeError(f"delta_{i} does not exist in genus {g}", "index-out-of-range")
    b = [0] * boundary_count(g)
    b[i] = -1
    return make_divisor(g, 0, b)


def moriwaki_divisor(g: int) -> DivisorClass:
    """``(8g+4) lambda - g delta_0 - sum 4i(g-i) delta_i``."""
    check_genus(g)
    b = [g] + [4 * i * (g - i) for i in range(1, g // 2 + 1)]
    return make_divisor(g, 8 * g + 4, b)


def canonical_divisor(g: int) -> DivisorClass:
    check_genus(g)
    b = [2, 3] + [2] * (g // 2 - 1)
    return make_divisor(g, 13, b)


def k_alpha(g: int, alpha: RatLike) -> DivisorClass:
    """``13 lambda - (2 - alpha) delta`` for alpha in [0, 1]."""
    check_genus(g)
    alpha = as_rat(alpha)
    if not 0 <= alpha <= 1:
        raise AlphaRangeError(f"alpha must lie in [0, 1], got {alpha}")
    return make_divisor(g, 13, [2 - alpha] * boundary_count(g))


def brill_noether_factorization(g: int) -> tuple[int, int] | None:
    """Return ``(r, s)`` with ``(r+1)(s-1) = g+1``, smallest ``s >= 3``, or None."""
    n = g + 1
    for q in range(2, n // 2 + 1):
        if n % q == 0:
            return n // q - 1, q + 1
    return None


def brill_noether_class(g: int) -> WitnessClass:
    check_genus(g)
    rs = brill_noether_factorization(g)
    if rs is None:
        raise WitnessUnavailableError(
            f"g+1 = {g + 1} is prime: no Brill-Noether divisor", "g-plus-one-prime"
        )
    b = [Fraction(g + 1, 6)] + [i * (g - i) for i in range(1, g // 2 + 1)]
    return WitnessClass(make_divisor(g, g + 3, b), BrillNoether(*rs))


def petri_hat_class(g: int) -> WitnessClass:
    """Petri witness with the i >= 3 coefficients replaced by their lower bound.

    Only ``f_i >= f_hat_i`` is known (the correction term is ``gamma_i / c``
    with ``c > 0`` unknown), so the class returned here differs from the true
    Petri class by ``sum (gamma_i / c) delta_i``.  When every gamma_i is
    nonnegative that difference is an effective boundary class and the
    returned class is itself effective.
    """
    check_genus(g)
    if not is_prime(g + 1):
        raise WitnessUnavailableError(
            f"g+1 = {g + 1} is not prime: Petri witness not used", "g-plus-one-not-prime"
        )
    if g % 2:
        raise WitnessUnavailableError(f"genus {g} is odd", "g-odd")
    d = g // 2 + 1
    k = d - 1
    b = [petri_f0(d), petri_f1(d), petri_f2(d)] + [f_hat(d, i) for i in range(3, d)]
    gammas = tuple(gamma(k, i) for i in range(3, d))
    return WitnessClass(make_divisor(g, petri_lambda(d), b), PetriHat(d, gammas))


def linear_combination(terms: Iterable[tuple[RatLike, DivisorClass]]) -> DivisorClass:
    terms = list(terms)
    if not terms:
        raise MoriconeError("empty linear combination", "empty-list")
    g = terms[0][1].genus
    a = Fraction(0)
    b = [Fraction(0)] * boundary_count(g)
    for t, D in terms:
        if D.genus != g:
            raise GenusMismatchError(f"genus mismatch: {g} vs {D.genus}")
        t = as_rat(t)
        a += t * D.a
        for i, x in enumerate(D.b):
            b[i] += t * x
    return DivisorClass(g, a, tuple(b))


def slope(D: DivisorClass) -> Fraction:
    """``a / min_i b_i``; defined only when every b_i is positive."""
    low = min(D.b)
    if low <= 0:
        raise MoriconeError(
            "slope undefined: some boundary coefficient is not positive",
            "nonpositive-boundary-coefficient",
        )
    return D.a / low


def proportional_to(D1: DivisorClass, D2: DivisorClass) -> Fraction | None:
    """Return ``t > 0`` with ``D1 = t * D2``, or None."""
    if D1.genus != D2.genus:
        raise GenusMismatchError(f"genus mismatch: {D1.genus} vs {D2.genus}")
    if D2.is_zero():
        raise MoriconeError("cannot test proportionality to the zero class", "zero-class")
    coords1 = (D1.a,) + D1.b
    coords2 = (D2.a,) + D2.b
    pivot = next(j for j, x in enumerate(coords2) if x != 0)
    t = coords1[pivot] / coords2[pivot]
    if t <= 0:
        return None
    if all(x == t * y for x, y in zip(coords1, coords2)):
        return t
    return None
