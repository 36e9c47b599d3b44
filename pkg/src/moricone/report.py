"""JSON/CSV rendering of results.

Rationals are always written as exact ``"p/q"`` strings (``"28"`` for
integers).  Every computed number is wrapped as ``{"value", "provenance"}``
where provenance is one of ``formula`` (a closed-form named class),
``derived`` (computed here), ``config`` or ``input``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable

from . import __version__
from .bigness import BignessCertificate, Condition, FailureReport
from .cones import (
    BaseLocusPrediction,
    CurveClass,
    MoriwakiClassification,
    SectionRays,
)
from .divisors import DivisorClass, PetriHat, WitnessClass
from .lcm import AlphaClassification, ObstructionReport
from .petri import PetriAudit, PolynomialSuite

SCHEMA_VERSION = "1"

CURVE_SCALING_NOTE = (
    "curve classes are fixed only up to positive scale; each is normalised as "
    "the integer normal of its facet"
)


def rat(x) -> str:
    return str(Fraction(x))


def num(x, provenance: str) -> dict[str, str]:
    return {"value": rat(x), "provenance": provenance}


def divisor_json(D: DivisorClass, provenance: str) -> dict[str, Any]:
    return {
        "genus": D.genus,
        "a": num(D.a, provenance),
        "b": [num(x, provenance) for x in D.b],
        "zero": D.is_zero(),
    }


def curve_json(C: CurveClass) -> dict[str, Any]:
    return {
        "lambda_degree": num(C.lam, "derived"),
        "delta_degrees": [num(x, "derived") for x in C.dels],
    }


def classification_json(c: MoriwakiClassification) -> dict[str, Any]:
    return {
        "verdict": c.verdict.value,
        "violated_facets": list(c.violated),
        "active_facets": list(c.active),
    }


def prediction_json(p: BaseLocusPrediction) -> dict[str, Any]:
    return {"statement": p.statement.value, "justification": p.justification}


def condition_json(c: Condition) -> dict[str, Any]:
    return {
        "name": c.name,
        "lhs": num(c.lhs, "derived"),
        "relation": c.relation,
        "rhs": num(c.rhs, "derived"),
        "holds": c.holds,
    }


def witness_json(w: WitnessClass, full: bool = False) -> dict[str, Any]:
    out: dict[str, Any] = {"family": w.label, "class": divisor_json(w.base, "formula")}
    if isinstance(w.kind, PetriHat):
        out["d"] = w.kind.d
        out["gamma_count"] = len(w.kind.gammas)
        out["gammas_nonnegative"] = all(x >= 0 for x in w.kind.gammas)
        if full:
            out["gammas"] = [num(x, "derived") for x in w.kind.gammas]
    else:
        out["r"] = w.kind.r
        out["s"] = w.kind.s
    return out


def _summarise(conds: Iterable[Condition], full: bool) -> list[dict[str, Any]]:
    """Criterion conditions in full; long gamma/ecco1 families collapsed unless ``full``."""
    out = []
    groups: dict[str, list[Condition]] = {}
    for c in conds:
        family = c.name.split("_")[0]
        if not full and family in ("gamma", "ecco1"):
            key = family + ("_chain" if c.name.endswith("chain_agrees") else "")
            groups.setdefault(key, []).append(c)
        else:
            out.append(condition_json(c))
    for key in sorted(groups):
        items = groups[key]
        out.append(
            {
                "name": key + "_family",
                "count": len(items),
                "holds": all(c.holds for c in items),
            }
        )
    return out


def certificate_json(cert: BignessCertificate, full: bool = False) -> dict[str, Any]:
    return {
        "status": "certified",
        "subject": divisor_json(cert.subject, "formula"),
        "witness": witness_json(cert.witness, full),
        "v": num(cert.v, "derived"),
        "lambda_part": num(cert.lambda_part, "derived"),
        "boundary_part": [num(x, "derived") for x in cert.boundary_part],
        "side_conditions": _summarise(cert.side_conditions, full),
        "reconstruction_exact": cert.reconstruct() == cert.subject,
        "valid": cert.verify(),
    }


def failure_json(rep: FailureReport) -> dict[str, Any]:
    return {
        "status": "failed",
        "subject": divisor_json(rep.subject, "input"),
        "witness": witness_json(rep.witness),
        "failed_conditions": [condition_json(c) for c in rep.failed],
    }


def _rat_map(d: dict, provenance: str = "derived") -> dict[str, Any]:
    return {str(k): num(v, provenance) for k, v in sorted(d.items())}


def audit_json(a: PetriAudit, full: bool = False) -> dict[str, Any]:
    out: dict[str, Any] = {
        "d": a.d,
        "k": a.k,
        "vacuous": a.d == 3,
        "ok": a.ok,
        "verdicts": dict(sorted(a.verdicts.items())),
        "gamma_count": len(a.gamma),
        "ecco1_count": len(a.ecco1),
    }
    if a.gamma:
        out["gamma_3"] = num(a.gamma[3], "derived")
        out["gamma_min"] = num(min(a.gamma.values()), "derived")
    if a.ladder:
        out["ladder_kind"] = a.ladder_kind
        out["ladder_top"] = num(a.ladder[max(a.ladder)], "derived")
    if a.k2 is not None:
        out["k2_bracket"] = [num(x, "derived") for x in a.k2]
        out["k1_bracket"] = [num(x, "derived") for x in a.k1]
    if full:
        out["leading"] = num(a.leading, "derived")
        out["gamma"] = _rat_map(a.gamma)
        out["gamma_chain"] = _rat_map(a.gamma_chain)
        out["c"] = _rat_map(a.c)
        out["d_i"] = _rat_map(a.dd)
        out["v"] = _rat_map(a.v)
        out["n_kh"] = _rat_map(a.n_kh)
        out["c_kh"] = _rat_map(a.c_kh)
        out["ladder"] = _rat_map(a.ladder)
        out["ladder_s"] = _rat_map(a.ladder_s)
        out["ladder_t"] = _rat_map(a.ladder_t)
        out["ecco1"] = [
            {"i": r.i, "lhs": num(r.lhs, "derived"), "rhs": num(r.rhs, "derived"), "holds": r.holds}
            for r in a.ecco1
        ]
    return out


def suite_json(s: PolynomialSuite) -> dict[str, Any]:
    return {
        "bound": s.bound,
        "ok": s.ok,
        "checks": [
            {
                "inequality": c.name,
                "variable": c.variable,
                "range": [c.start, c.stop],
                "holds": c.holds,
                "min_value": num(c.min_value, "derived"),
                "argmin": c.argmin,
                "failure": c.failure,
            }
            for c in s.checks
        ],
        "reductions": dict(sorted(s.equivalences.items())),
    }


def _ray_json(ray: tuple[int, int]) -> list[str]:
    return [rat(ray[0]), rat(ray[1])]


def section_json(s: SectionRays, slope_provenance: str | None) -> dict[str, Any]:
    return {
        "coordinates": "(a, b) stands for a*lambda - b*delta",
        "nef": [_ray_json(r) for r in s.nef],
        "mor": [_ray_json(r) for r in s.mor],
        "psef": None if s.psef is None else [_ray_json(r) for r in s.psef],
        "nef_bound": num(s.nef_bound, "config"),
        "slope_sg": None if s.slope_sg is None else num(s.slope_sg, slope_provenance),
    }


def section_rows(s: SectionRays) -> list[tuple[str, int, int]]:
    rows = [("nef", *r) for r in s.nef] + [("mor", *r) for r in s.mor]
    if s.psef is not None:
        rows += [("psef", *r) for r in s.psef]
    return rows


def section_csv(s: SectionRays) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["cone", "ray_a", "ray_b"])
    for cone, a, b in section_rows(s):
        w.writerow([cone, rat(a), rat(b)])
    return buf.getvalue()


def _opt_num(x, provenance: str):
    return None if x is None else num(x, provenance)


def alpha_json(c: AlphaClassification) -> dict[str, Any]:
    return {
        "alpha": num(c.alpha, "input"),
        "regime": c.regime.value,
        "flags": {"ample": c.ample, "nef": c.nef, "big": c.big},
        "thresholds": {
            "alpha_star": num(c.alpha_star, "formula"),
            "alpha_nef": num(c.alpha_nef, "config"),
            "alpha_psef": _opt_num(c.alpha_psef, "config"),
        },
        "ray_slope": num(c.slope, "derived"),
        "moriwaki_verdict": c.moriwaki_verdict.value,
        "cornalba_harris_factor": _opt_num(c.cornalba_harris_factor, "derived"),
        "caveat": c.caveat,
    }


def obstruction_json(r: ObstructionReport) -> dict[str, Any]:
    return {
        "subject": divisor_json(r.subject, "input"),
        "kappa_at_least_one": r.kappa_hypothesis,
        "verdict": r.verdict.value,
        "moriwaki_verdict": r.moriwaki_verdict.value,
        "witness": None
        if r.witness_facet is None
        else {
            "facet": r.witness_facet,
            "curve": curve_json(r.witness_curve),
            "pairing": num(r.pairing, "derived"),
            "curve_scaling": CURVE_SCALING_NOTE,
        },
        "narrative": r.narrative,
    }


def envelope(
    command: str, inputs: dict[str, Any], outputs: Any, warnings: list[str] | None = None
) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "moricone", "version": __version__},
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "warnings": list(warnings or []),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
