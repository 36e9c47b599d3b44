"""Command-line front end.

Exit codes: 0 success, 1 certification or audit failure, 2 parse error,
3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

from . import __version__
from .bigness import (
    EFFECTIVITY_NOTE,
    FailureReport,
    certify_moriwaki_big,
    check_criterion,
    construct_witness,
)
from .cones import classify_moriwaki, cone_section, predict_base_locus
from .config import Config, load_config
from .divisors import (
    DivisorClass,
    as_rat,
    boundary_count,
    brill_noether_class,
    canonical_divisor,
    delta_class,
    delta_i_class,
    k_alpha,
    lambda_class,
    make_divisor,
    moriwaki_divisor,
    petri_hat_class,
)
from .errors import InternalInconsistency, MoriconeError
from .lcm import classify_alpha, zariski_obstruction
from .petri import audit_degree, polynomial_inequality_suite
from . import report
from .svg import section_svg

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

NAMED_CLASSES = "M, K, lambda, delta, delta_<i>, K_alpha:<p/q>, BN, PetriHat"


class ParseError(ValueError):
    pass


def parse_rat(text: str) -> Fraction:
    try:
        return as_rat(text)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def parse_class(g: int, tokens: Sequence[str]) -> tuple[DivisorClass, str | None]:
    """A named class or the coefficient list ``a b_0 ... b_m``."""
    if len(tokens) == 1:
        name = tokens[0]
        if name == "M":
            return moriwaki_divisor(g), name
        if name == "K":
            return canonical_divisor(g), name
        if name == "lambda":
            return lambda_class(g), name
        if name == "delta":
            return delta_class(g), name
        if name.startswith("delta_"):
            try:
                i = int(name[len("delta_"):])
            except ValueError as exc:
                raise ParseError(f"bad boundary index in {name!r}") from exc
            return delta_i_class(g, i), name
        if name.startswith("K_alpha:"):
            return k_alpha(g, parse_rat(name[len("K_alpha:"):])), name
        if name == "BN":
            return brill_noether_class(g).base, name
        if name == "PetriHat":
            return petri_hat_class(g).base, name
        try:
            as_rat(name)
        except (TypeError, ValueError):
            raise ParseError(f"unknown class {name!r}; expected one of {NAMED_CLASSES}")
    values = [parse_rat(t) for t in tokens]
    if len(values) != boundary_count(g) + 1:
        raise MoriconeError(
            f"genus {g} needs {boundary_count(g) + 1} numbers (a, b_0..b_{g // 2}), "
            f"got {len(values)}",
            "wrong-coefficient-count",
        )
    return make_divisor(g, values[0], values[1:]), None


def parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise ParseError(f"range must look like A..B, got {text!r}") from exc


def _class_inputs(g: int, tokens: Sequence[str], name: str | None) -> dict[str, Any]:
    return {"genus": g, "class": name if name is not None else list(tokens)}


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _map(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# subcommands


def cmd_classify(args: argparse.Namespace, config: Config) -> int:
    D, name = parse_class(args.genus, args.cls)
    cls = classify_moriwaki(D)
    outputs = {
        "class": report.divisor_json(D, "formula" if name else "input"),
        "classification": report.classification_json(cls),
        "prediction": report.prediction_json(predict_base_locus(D)),
    }
    _emit(args, report.dumps(report.envelope("classify", _class_inputs(args.genus, args.cls, name), outputs)))
    return EXIT_OK


def _certify_one(g: int) -> dict[str, Any]:
    try:
        cert = certify_moriwaki_big(g)
    except InternalInconsistency as exc:
        return {"genus": g, "status": "failed", "error": str(exc)}
    out = report.certificate_json(cert)
    out["genus"] = g
    return out


def cmd_certify_big(args: argparse.Namespace, config: Config) -> int:
    if args.range:
        genera = parse_range(args.range)
    elif args.genus is not None:
        genera = range(args.genus, args.genus + 1)
    else:
        raise ParseError("give -g G or --range A..B")
    for g in (genera.start, genera.stop - 1):
        if g < 3:
            raise MoriconeError(f"genus must be at least 3, got {g}", "genus-too-small")

    if args.divisor:
        if len(genera) != 1:
            raise ParseError("--divisor needs a single genus")
        g = genera[0]
        D, name = parse_class(g, args.divisor.replace(",", " ").split())
        witness = {
            "auto": construct_witness,
            "BN": brill_noether_class,
            "PetriHat": petri_hat_class,
        }[args.witness](g)
        result = check_criterion(D, witness)
        if isinstance(result, FailureReport):
            records = [dict(report.failure_json(result), genus=g)]
        else:
            records = [dict(report.certificate_json(result), genus=g)]
        inputs = {"genus": g, "divisor": name or args.divisor, "witness": args.witness}
    else:
        records = _map(_certify_one, genera, args.jobs)
        inputs = {"genera": [genera.start, genera.stop - 1], "subject": "M"}

    ok = all(r.get("status") == "certified" and r.get("valid") for r in records)
    outputs = {
        "count": len(records),
        "all_certified": ok,
        "effectivity": EFFECTIVITY_NOTE,
        "certificates": records,
    }
    _emit(args, report.dumps(report.envelope("certify-big", inputs, outputs)))
    return EXIT_OK if ok else EXIT_FAILED


def _audit_one(job: tuple[int, bool]) -> dict[str, Any]:
    d, full = job
    return report.audit_json(audit_degree(d), full)


def cmd_audit_petri(args: argparse.Namespace, config: Config) -> int:
    d_max = args.d_max if args.d_max is not None else config.d_max
    if d_max < 3:
        raise MoriconeError(f"--d-max must be at least 3, got {d_max}", "d-too-small")
    poly_max = args.poly_max if args.poly_max is not None else d_max
    records = _map(_audit_one, [(d, args.full) for d in range(3, d_max + 1)], args.jobs)
    suite = polynomial_inequality_suite(poly_max)
    ok = all(r["ok"] for r in records) and suite.ok
    outputs = {
        "all_verified": ok,
        "records": records,
        "polynomial_suite": report.suite_json(suite),
    }
    inputs = {"d_max": d_max, "poly_max": poly_max, "full": args.full}
    _emit(args, report.dumps(report.envelope("audit-petri", inputs, outputs)))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_section(args: argparse.Namespace, config: Config) -> int:
    g = args.genus
    if args.slope is not None:
        slope, prov = parse_rat(args.slope), "input"
    else:
        slope, prov = config.slope(g)
    nef_bound = parse_rat(args.nef_bound) if args.nef_bound is not None else config.nef_bound
    warnings = []
    if slope is None:
        warnings.append(f"slope s_g unknown for genus {g}: pseudoeffective rays omitted")
        print(f"moricone: warning: {warnings[-1]}", file=sys.stderr)
    section = cone_section(g, slope, nef_bound)

    if args.csv:
        artifact = report.section_csv(section)
    elif args.svg:
        artifact = section_svg(section)
    else:
        artifact = None
    outputs = report.section_json(section, prov if slope is not None else None)
    doc = report.dumps(report.envelope("section", {"genus": g}, outputs, warnings))
    if artifact is None:
        _emit(args, doc)
    elif args.out:
        Path(args.out).write_text(artifact, encoding="utf-8")
        sys.stdout.write(doc)
    else:
        sys.stdout.write(artifact)
    return EXIT_OK


def cmd_alpha(args: argparse.Namespace, config: Config) -> int:
    alpha = parse_rat(args.alpha)
    result = classify_alpha(args.genus, alpha, config)
    inputs = {"genus": args.genus, "alpha": report.rat(alpha)}
    _emit(args, report.dumps(report.envelope("alpha", inputs, report.alpha_json(result))))
    return EXIT_OK


def cmd_obstruction(args: argparse.Namespace, config: Config) -> int:
    D, name = parse_class(args.genus, args.cls)
    kappa = args.kappa
    warnings = []
    if kappa is None:
        # Iitaka dimension of the canonical class is known to be >= 1 from genus 22 on
        kappa = name == "K" and args.genus >= 22
        warnings.append(f"kappa >= 1 not given; assumed {str(kappa).lower()}")
    result = zariski_obstruction(D, kappa)
    inputs = dict(_class_inputs(args.genus, args.cls, name), kappa=args.kappa)
    _emit(args, report.dumps(report.envelope("obstruction", inputs, report.obstruction_json(result), warnings)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (default: ./moricone.json if present)")
    common.add_argument("--out", help="write the result to this file instead of stdout")

    p = argparse.ArgumentParser(prog="moricone", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"moricone {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="Moriwaki classification of a class")
    c.add_argument("-g", "--genus", type=int, required=True)
    c.add_argument("cls", nargs="+", metavar="CLASS", help=f"{NAMED_CLASSES} or a b_0 ... b_m")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("certify-big", parents=[common], help="bigness certificates")
    c.add_argument("-g", "--genus", type=int)
    c.add_argument("--range", help="inclusive genus range A..B")
    c.add_argument("--divisor", help="certify this class instead of M (name or 'a b_0 ...')")
    c.add_argument("--witness", choices=["auto", "BN", "PetriHat"], default="auto")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_certify_big)

    c = sub.add_parser("audit-petri", parents=[common], help="audit the Petri factorial inequalities")
    c.add_argument("--d-max", type=int)
    c.add_argument("--poly-max", type=int, help="bound for the polynomial suite (default: d-max)")
    c.add_argument("--full", action="store_true", help="include every intermediate value")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_audit_petri)

    c = sub.add_parser("section", parents=[common], help="cone sections on <lambda, delta>")
    c.add_argument("-g", "--genus", type=int, required=True)
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--svg", action="store_true")
    c.add_argument("--slope", help="override s_g")
    c.add_argument("--nef-bound", help="override the nef bound")
    c.set_defaults(func=cmd_section)

    c = sub.add_parser("alpha", parents=[common], help="log canonical model regime")
    c.add_argument("-g", "--genus", type=int, required=True)
    c.add_argument("alpha")
    c.set_defaults(func=cmd_alpha)

    c = sub.add_parser("obstruction", parents=[common], help="Zariski decomposition obstruction")
    c.add_argument("-g", "--genus", type=int, required=True)
    c.add_argument("cls", nargs="+", metavar="CLASS")
    c.add_argument("--kappa", action=argparse.BooleanOptionalAction, default=None,
                   help="assert (or deny) Iitaka dimension >= 1")
    c.set_defaults(func=cmd_obstruction)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except ParseError as exc:
        print(f"moricone: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MoriconeError as exc:
        print(f"moricone: domain error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalInconsistency as exc:
        print(f"moricone: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
