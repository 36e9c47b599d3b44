"""Bigness certificates from an effective witness class.

Given ``D = a lambda - sum b_i delta_i`` with ``a > 0`` and an effective
``E = alpha lambda - sum beta_i delta_i`` with ``alpha > 0``, ``beta_i > 0``
and ``alpha b_i < a beta_i`` for every i, any ``v >= 0`` with
``b_i / beta_i <= v < a / alpha`` gives

    D = (a - v alpha) lambda + v E + sum (v beta_i - b_i) delta_i,

a positive multiple of the big class lambda plus effective classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .divisors import (
    DivisorClass,
    PetriHat,
    WitnessClass,
    brill_noether_class,
    brill_noether_factorization,
    lambda_class,
    linear_combination,
    moriwaki_divisor,
    petri_hat_class,
    check_genus,
)
from .errors import GenusMismatchError, InternalInconsistency, MoriconeError
from .petri import check_ecco1, gammas_by_chain

EFFECTIVITY_NOTE = (
    "effectivity of the Brill-Noether and Petri divisor classes is taken from "
    "the literature, not re-proved"
)


@dataclass(frozen=True)
class Condition:
    """One exact comparison ``lhs <relation> rhs``."""

    name: str
    lhs: Fraction
    relation: str
    rhs: Fraction

    @property
    def holds(self) -> bool:
        if self.relation == "<":
            return self.lhs < self.rhs
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == ">":
            return self.lhs > self.rhs
        if self.relation == ">=":
            return self.lhs >= self.rhs
        if self.relation == "==":
            return self.lhs == self.rhs
        raise ValueError(self.relation)


@dataclass(frozen=True)
class BignessCertificate:
    subject: DivisorClass
    witness: WitnessClass
    v: Fraction
    lambda_part: Fraction
    boundary_part: tuple[Fraction, ...]
    side_conditions: tuple[Condition, ...] = field(default=())

    def reconstruct(self) -> DivisorClass:
        g = self.subject.genus
        boundary = DivisorClass(g, Fraction(0), tuple(-c for c in self.boundary_part))
        return linear_combination(
            [(self.lambda_part, lambda_class(g)), (self.v, self.witness.base), (1, boundary)]
        )

    def verify(self) -> bool:
        """Re-check every invariant of the certificate from scratch."""
        return (
            self.lambda_part > 0
            and self.v >= 0
            and all(x >= 0 for x in self.boundary_part)
            and all(c.holds for c in self.side_conditions)
            and self.reconstruct() == self.subject
        )


@dataclass(frozen=True)
class FailureReport:
    subject: DivisorClass
    witness: WitnessClass
    failed: tuple[Condition, ...]


def criterion_conditions(D: DivisorClass, E: WitnessClass) -> list[Condition]:
    conds = [Condition("A", E.alpha, ">", Fraction(0))]
    conds += [Condition(f"B_{i}", beta, ">", Fraction(0)) for i, beta in enumerate(E.beta)]
    conds += [
        Condition(f"C_{i}", E.alpha * b, "<", D.a * beta)
        for i, (b, beta) in enumerate(zip(D.b, E.beta))
    ]
    return conds


def check_criterion(
    D: DivisorClass, E: WitnessClass
) -> Union[BignessCertificate, FailureReport]:
    if D.genus != E.base.genus:
        raise GenusMismatchError(f"genus mismatch: {D.genus} vs {E.base.genus}")
    if D.a <= 0:
        raise MoriconeError(f"criterion needs a > 0, got a = {D.a}", "nonpositive-lambda")
    conds = criterion_conditions(D, E)
    failed = tuple(c for c in conds if not c.holds)
    if failed:
        return FailureReport(D, E, failed)

    v = max([Fraction(0)] + [b / beta for b, beta in zip(D.b, E.beta)])
    upper = D.a / E.alpha
    conds.append(Condition("v_below_a_over_alpha", v, "<", upper))
    if v >= upper:
        # (C_i) forces every ratio below a / alpha, so this is unreachable
        return FailureReport(D, E, (conds[-1],))
    lambda_part = D.a - v * E.alpha
    boundary = tuple(v * beta - b for b, beta in zip(D.b, E.beta))
    return BignessCertificate(D, E, v, lambda_part, boundary, tuple(conds))


def construct_witness(g: int) -> WitnessClass:
    """Brill-Noether class when g+1 is composite, Petri lower-bound class otherwise."""
    check_genus(g)
    if brill_noether_factorization(g) is not None:
        return brill_noether_class(g)
    w = petri_hat_class(g)
    if any(x < 0 for x in w.kind.gammas):
        raise InternalInconsistency(f"negative gamma_i for g = {g}")
    return w


def petri_side_conditions(w: WitnessClass) -> list[Condition]:
    """gamma_i >= 0 (direct and telescoped, which must agree) and (ecco1) for a Petri witness."""
    kind = w.kind
    assert isinstance(kind, PetriHat)
    conds = [
        Condition(f"gamma_{i}_nonnegative", gm, ">=", Fraction(0))
        for i, gm in enumerate(kind.gammas, start=3)
    ]
    chain = gammas_by_chain(kind.d - 1)
    conds += [
        Condition(f"gamma_{i}_chain_agrees", gm, "==", chain[i])
        for i, gm in enumerate(kind.gammas, start=3)
    ]
    conds += [Condition(f"ecco1_{r.i}", r.lhs, ">", r.rhs) for r in check_ecco1(kind.d)]
    return conds


def certify_moriwaki_big(g: int) -> BignessCertificate:
    M = moriwaki_divisor(g)
    w = construct_witness(g)
    result = check_criterion(M, w)
    if isinstance(result, FailureReport):
        names = ", ".join(c.name for c in result.failed)
        raise InternalInconsistency(f"genus {g}: criterion failed on {names}")
    if isinstance(w.kind, PetriHat):
        extra = petri_side_conditions(w)
        result = BignessCertificate(
            result.subject,
            result.witness,
            result.v,
            result.lambda_part,
            result.boundary_part,
            result.side_conditions + tuple(extra),
        )
    if not result.verify():
        raise InternalInconsistency(f"genus {g}: certificate does not verify")
    return result
