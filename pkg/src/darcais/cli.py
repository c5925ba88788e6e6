"""Command-line interface.

Every run embeds its full configuration (g, primes, bounds, seed, tool
version) in the output document, so identical invocations produce
byte-identical files.  Exit codes: 0 success (or proven), 1 inconclusive
(or a notable finding), 2 usage/domain error, 3 table exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, numfield, polymod, series
from .arith import ArithmeticFunction
from .certify import (
    CertifyConfig,
    certify as run_certify,
    certify_all_n,
    check_zmija_conditions,
    scan_grid,
)
from .errors import DomainError, TableExhaustedError
from .polynomial import format_poly

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_USAGE = 2
EXIT_RANGE = 3

_BUILTIN_G = {"sigma": ArithmeticFunction.sigma, "identity": ArithmeticFunction.identity,
              "id": ArithmeticFunction.identity}


def _load_g(spec: str) -> ArithmeticFunction:
    if spec in _BUILTIN_G:
        return _BUILTIN_G[spec]()
    if spec.startswith("table:"):
        return ArithmeticFunction.from_file(spec[len("table:"):])
    return ArithmeticFunction.from_file(spec)


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok)
    except ValueError:
        raise DomainError(f"malformed prime list {text!r}") from None


def _config_from_args(args) -> CertifyConfig:
    return CertifyConfig(
        primes=_parse_primes(args.primes),
        exact_eval_bound=args.exact_eval_bound,
        not_ramified_prime_bound=args.not_ramified_bound,
        seed=args.seed,
    )


def _run_header(args) -> dict:
    """Full run configuration, embedded in every output document."""
    return {
        "tool": "darcais",
        "version": __version__,
        "seed": args.seed,
        "config": {
            "g": args.g,
            "primes": list(_parse_primes(args.primes)),
            "oracle_bound": args.oracle_bound,
            "exact_eval_bound": args.exact_eval_bound,
            "not_ramified_prime_bound": args.not_ramified_bound,
            "seed": args.seed,
            "format": args.format,
        },
    }


def _emit(args, document: dict, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        payload = text if text.endswith("\n") else text + "\n"
    else:
        payload = json.dumps(document, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


_FLAG_DEFAULTS = {
    "g": "sigma",
    "primes": "2,3,5,7,11,13",
    "exact_eval_bound": 30,
    "not_ramified_bound": 50,
    "oracle_bound": series.DEFAULT_ORACLE_BOUND,
    "seed": 0,
    "format": "json",
    "out": None,
}


def _add_common(parser: argparse.ArgumentParser, defaults: dict) -> None:
    parser.add_argument("--g", default=defaults["g"],
                        help="arithmetic function: sigma | identity | table:FILE (default sigma)")
    parser.add_argument("--primes", default=defaults["primes"],
                        help="comma-separated primes for the obstruction search")
    parser.add_argument("--exact-eval-bound", type=int, default=defaults["exact_eval_bound"],
                        help="largest n for the exact-evaluation fallback")
    parser.add_argument("--not-ramified-bound", type=int, default=defaults["not_ramified_bound"],
                        help="prime search bound for the unramified criterion")
    parser.add_argument("--oracle-bound", type=int, default=defaults["oracle_bound"],
                        help="cap for the partition oracle")
    parser.add_argument("--seed", type=int, default=defaults["seed"],
                        help="seed recorded into factorizations/certificates")
    parser.add_argument("--format", choices=("json", "csv", "text"), default=defaults["format"])
    parser.add_argument("--out", default=defaults["out"],
                        help="write output to FILE instead of stdout")


def build_parser(flag_defaults: dict | None = None) -> argparse.ArgumentParser:
    defaults = dict(_FLAG_DEFAULTS)
    if flag_defaults:
        unknown = set(flag_defaults) - set(_FLAG_DEFAULTS)
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        defaults.update(flag_defaults)
    parser = argparse.ArgumentParser(
        prog="darcais",
        description="Exact computations with D'Arcais polynomials and non-root certificates.",
    )
    parser.add_argument("--version", action="version", version=f"darcais {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="print the n-th D'Arcais polynomial for g")
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("--mod", type=int, default=None, help="reduce modulo this prime")
    p_poly.add_argument("--factor", action="store_true", help="factor the mod-p polynomial")
    p_poly.add_argument("--rational", action="store_true",
                        help="print the rational polynomial (divide by n!)")
    p_poly.add_argument("--oracle", action="store_true",
                        help="compute via the partition oracle instead of the recursion")
    _add_common(p_poly, defaults)

    p_tau = sub.add_parser("tau", help="Ramanujan tau values / desk-scale zero scan")
    p_tau.add_argument("n", type=int, nargs="?", default=None)
    p_tau.add_argument("--max", type=int, default=None, help="scan tau(1..N) for zeros")
    _add_common(p_tau, defaults)

    p_cert = sub.add_parser("certify", help="produce a non-root certificate")
    p_cert.add_argument("--candidate", required=True,
                        help="cyc:m,a,b | quad:D,a,b | gauss:a,b")
    group = p_cert.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, default=None)
    group.add_argument("--all-n", action="store_true")
    _add_common(p_cert, defaults)

    p_scan = sub.add_parser("scan", help="certify a rectangle of shifted candidates")
    p_scan.add_argument("--kind", default="gauss", help="gauss | quad:D | cyc:m")
    p_scan.add_argument("--a-range", required=True, help="LO:HI inclusive")
    p_scan.add_argument("--b-range", required=True, help="LO:HI inclusive")
    p_scan.add_argument("--n-max", type=int, default=30)
    _add_common(p_scan, defaults)

    p_min = sub.add_parser("minpoly", help="minimal polynomial and index of a candidate")
    p_min.add_argument("--candidate", required=True)
    _add_common(p_min, defaults)

    p_split = sub.add_parser("split", help="Dedekind-Kummer splitting report")
    p_split.add_argument("--candidate", required=True)
    p_split.add_argument("--p", type=int, required=True)
    _add_common(p_split, defaults)

    p_zmija = sub.add_parser("zmija", help="audit the cyclotomic splitting conditions for g")
    _add_common(p_zmija, defaults)

    p_hur = sub.add_parser("hurwitz", help="Routh-Hurwitz check of P_n/X for n = 1..max")
    p_hur.add_argument("--max", type=int, default=30)
    _add_common(p_hur, defaults)

    return parser


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise DomainError(f"malformed range {text!r}; expected LO:HI") from None


def _cmd_poly(args, g) -> int:
    if args.n < 0:
        raise DomainError(f"n must be >= 0, got {args.n}")
    if args.factor and args.mod is None:
        raise DomainError("--factor requires --mod")
    if args.rational and args.mod is not None:
        raise DomainError("--rational cannot be combined with --mod")
    header = _run_header(args)
    if args.mod is not None:
        reduced = polymod.a_poly_mod(g, args.n, args.mod)
        if args.factor:
            fact = polymod.factor(reduced, seed=args.seed)
            doc = {**header, "n": args.n, "mod": args.mod,
                   "factorization": fact.to_json_dict()}
            text = " * ".join(
                f"({format_poly(p.coeffs)})" + (f"^{m}" if m > 1 else "")
                for p, m in fact.factors
            ) or "1"
            if fact.unit != 1:
                text = f"{fact.unit} * {text}"
            _emit(args, doc, f"{text} (mod {args.mod})")
        else:
            doc = {**header, "n": args.n, "mod": args.mod,
                   "poly": {"degree": reduced.degree, "coeffs": list(reduced.coeffs)}}
            _emit(args, doc, str(reduced))
        return EXIT_OK
    if args.oracle:
        poly = series.a_poly_oracle(g, args.n, max_n=args.oracle_bound)
    else:
        poly = series.a_poly(g, args.n)
    if args.rational:
        rat = series.p_poly(g, args.n)
        doc = {**header, "n": args.n, "poly": rat.to_json_dict()}
        _emit(args, doc, str(rat))
    else:
        doc = {**header, "n": args.n, "poly": poly.to_json_dict()}
        _emit(args, doc, str(poly))
    return EXIT_OK


def _cmd_tau(args, g) -> int:
    header = _run_header(args)
    if args.max is not None:
        values = series.tau_list(args.max)
        zeros = [i + 1 for i, v in enumerate(values) if v == 0]
        doc = {**header, "scanned_up_to": args.max, "zeros": zeros}
        text = "no zero found" if not zeros else f"zero at n = {zeros}"
        _emit(args, doc, f"tau(1..{args.max}): {text}")
        return EXIT_OK if not zeros else EXIT_INCONCLUSIVE
    if args.n is None:
        raise DomainError("tau needs an index or --max N")
    value = series.tau(args.n)
    _emit(args, {**header, "n": args.n, "tau": str(value)}, str(value))
    return EXIT_OK


def _cmd_certify(args, g) -> int:
    candidate = numfield.parse_candidate(args.candidate)
    config = _config_from_args(args)
    if args.all_n:
        cert = certify_all_n(g, candidate, config)
    else:
        cert = run_certify(g, candidate, args.n, config)
    doc = {**_run_header(args), "certificate": cert.to_json_dict()}
    text = (
        f"{cert.verdict} for {candidate.describe()} ({cert.scope.describe()})"
        f" via {cert.method}"
    )
    _emit(args, doc, text)
    return EXIT_OK if cert.proven else EXIT_INCONCLUSIVE


def _cmd_scan(args, g) -> int:
    config = _config_from_args(args)
    grid = scan_grid(
        g,
        args.kind,
        _parse_range(args.a_range),
        _parse_range(args.b_range),
        args.n_max,
        config,
    )
    doc = {**_run_header(args), "grid": grid.to_json_dict()}
    if args.format == "csv":
        header_line = json.dumps(_run_header(args), sort_keys=True)
        payload = f"# {header_line}\n{grid.to_csv()}"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)
        return EXIT_OK
    _emit(args, doc, grid.to_csv())
    return EXIT_OK


def _cmd_minpoly(args, g) -> int:
    candidate = numfield.parse_candidate(args.candidate)
    doc = {
        **_run_header(args),
        "candidate": candidate.to_json_dict(),
        "degree": candidate.degree,
        "min_poly": candidate.min_poly.to_json_dict(),
        "index": str(candidate.index),
    }
    _emit(args, doc, f"{candidate.describe()}: {candidate.min_poly}, index {candidate.index}")
    return EXIT_OK


def _cmd_split(args, g) -> int:
    candidate = numfield.parse_candidate(args.candidate)
    report = numfield.dedekind_kummer_split(candidate, args.p, seed=args.seed)
    doc = {**_run_header(args), "report": report.to_json_dict()}
    if report.applicable:
        shape = ", ".join(f"(e={e}, f={f})" for _, e, f in report.entries)
        text = f"p = {args.p} in Q({candidate.describe()}): {shape}" + (
            " [ramified]" if report.ramified else ""
        )
    else:
        text = f"p = {args.p} divides the index {candidate.index}; not applicable"
    _emit(args, doc, text)
    return EXIT_OK


def _cmd_zmija(args, g) -> int:
    report = check_zmija_conditions(g, seed=args.seed)
    doc = {**_run_header(args), "zmija": report.to_json_dict()}
    text = (
        f"mod 5: {'ok' if report.cond_mod5 else 'FAIL'}; "
        f"mod 7: {'ok' if report.cond_mod7 else 'FAIL'}; "
        f"mod 11: {'ok' if report.cond_mod11 else 'FAIL'}"
    )
    _emit(args, doc, text)
    return EXIT_OK if report.passed else EXIT_INCONCLUSIVE


def _cmd_hurwitz(args, g) -> int:
    results = []
    all_true = True
    for n in range(1, args.max + 1):
        ok = series.hurwitz_check(series.h_poly(g, n))
        results.append({"n": n, "hurwitz": ok})
        if not ok:
            all_true = False
    doc = {**_run_header(args), "max": args.max, "results": results,
           "all_hurwitz": all_true}
    text = (
        f"P_n/X Hurwitz for all n <= {args.max}"
        if all_true
        else "NOTABLE: non-Hurwitz instance found; see JSON output"
    )
    _emit(args, doc, text)
    return EXIT_OK if all_true else EXIT_INCONCLUSIVE


_COMMANDS = {
    "poly": _cmd_poly,
    "tau": _cmd_tau,
    "certify": _cmd_certify,
    "scan": _cmd_scan,
    "minpoly": _cmd_minpoly,
    "split": _cmd_split,
    "zmija": _cmd_zmija,
    "hurwitz": _cmd_hurwitz,
}


# JSON file with default values for the common flags (g, primes, seed, ...).
CONFIG_ENV_VAR = "DARCAIS_CONFIG"

def _env_config() -> dict | None:
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return None
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read config file {path!r}: {exc}") from None


def main(argv=None) -> int:
    try:
        parser = build_parser(_env_config())
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)
    try:
        g = _load_g(args.g)
        return _COMMANDS[args.command](args, g)
    except TableExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
