"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification
disagreement, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .characters import kronecker, kronecker_stretching_values
from .combinatorics import Partition, lr_coefficient, parse_partition
from .errors import ResourceCapExceeded, env_cap
from .hive import (HiveBoundary, SizeMismatch, hive_polytope, lr_nonvanishing,
                   lr_stretching_values, lr_via_hive)
from .plethysm import plethysm, plethysm_constant, plethysm_stretching_values
from .polyhedra import PolytopeError, RationalPolytope, UnboundedError, count_lattice_points
from .quasipoly import NotDetected, detect, is_positive, is_saturated
from .repmodules import SPECHT_CAP, WEYL_CAP, specht_span_dimension, weyl_span_dimension
from .satip import CONTRACT, CONTRACT_NOTE, decide_saturated_ip, find_integer_point
from .verify import CONVENTIONS, SUITES, read_corpus, run_suite

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps({"version": __version__, **payload}, indent=2))
    else:
        print(human)


def _plist(p) -> list:
    return list(p)


def cmd_lr(args) -> int:
    a, b, g = args.alpha, args.beta, args.gamma
    payload = {"alpha": _plist(a), "beta": _plist(b), "gamma": _plist(g), "method": args.method}
    code = EXIT_OK
    if args.method == "tableau":
        value = lr_coefficient(a, b, g)
    elif args.method == "hive":
        value = lr_via_hive(a, b, g)
    else:
        value = lr_coefficient(a, b, g)
        hive_value = lr_via_hive(a, b, g)
        payload["hive"] = hive_value
        payload["agree"] = value == hive_value
        if value != hive_value:
            code = EXIT_DISAGREE
    payload["value"] = value
    human = str(value)
    if args.method == "both":
        human += ", agree" if payload["agree"] else f", DISAGREE (hive gives {payload['hive']})"
    _emit(args, payload, human)
    return code


def cmd_decide(args) -> int:
    a, b, g = args.alpha, args.beta, args.gamma
    value = lr_nonvanishing(a, b, g)
    _emit(args, {"alpha": _plist(a), "beta": _plist(b), "gamma": _plist(g),
                 "nonvanishing": value,
                 "method": "LP feasibility of the hive polytope (exact by saturation)"},
          str(value).lower())
    return EXIT_OK


def cmd_hive_count(args) -> int:
    a, b, g = args.alpha, args.beta, args.gamma
    try:
        P = hive_polytope(HiveBoundary.of(a, b, g))
    except SizeMismatch:
        _emit(args, {"alpha": _plist(a), "beta": _plist(b), "gamma": _plist(g), "count": 0,
                     "polytope": None}, "0")
        return EXIT_OK
    count = count_lattice_points(P)
    payload = {"alpha": _plist(a), "beta": _plist(b), "gamma": _plist(g), "count": count,
               "dim": P.dim, "convention": CONVENTIONS["hive"]}
    if args.export:
        with open(args.export, "w") as fh:
            json.dump(P.to_json(), fh, indent=2)
        payload["exported"] = args.export
    _emit(args, payload, str(count))
    return EXIT_OK


def cmd_stretch(args) -> int:
    parts = args.partitions
    if len(parts) != 3:
        raise UsageError("stretch takes exactly three partitions")
    a, b, c = parts
    if args.kind == "lr":
        values = lr_stretching_values(a, b, c, args.kmax)
        convention = CONVENTIONS["lr_stretch"]
    elif args.kind == "kronecker":
        values = kronecker_stretching_values(a, b, c, args.kmax, cap=args.cap)
        convention = CONVENTIONS["kronecker_stretch"]
    else:
        values = plethysm_stretching_values(a, b, c, args.kmax, cap=args.cap)
        convention = CONVENTIONS["plethysm_stretch"]
    payload = {"kind": args.kind, "partitions": [_plist(p) for p in parts],
               "kmax": args.kmax, "values": values, "convention": convention}
    lines = [f"values: {values}"]
    if args.detect:
        try:
            period, degree, qp = detect(values, args.max_period, args.max_degree)
        except NotDetected:
            payload["fit"] = None
            payload["detection"] = "undetected within bounds"
            lines.append("fit: undetected within bounds")
        else:
            payload["fit"] = {"period": period, "degree": degree, **qp.to_json()}
            payload["positive"] = is_positive(qp)
            payload["saturated"] = is_saturated(qp)
            lines += [f"fit: {qp} (period {period}, degree {degree})",
                      f"positive: {str(payload['positive']).lower()}",
                      f"saturated: {str(payload['saturated']).lower()}"]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_kronecker(args) -> int:
    a, b, g = args.alpha, args.beta, args.gamma
    value = kronecker(a, b, g)
    _emit(args, {"n": a.size(), "alpha": _plist(a), "beta": _plist(b), "gamma": _plist(g),
                 "value": value, "method": "oracle (exponential)"}, str(value))
    return EXIT_OK


def cmd_plethysm(args) -> int:
    lam, mu, pi = args.lam, args.mu, args.pi
    payload = {"lambda": _plist(lam), "mu": _plist(mu), "method": "oracle (exponential)"}
    lines = []
    if pi is not None:
        value = plethysm_constant(lam, mu, pi, cap=args.cap)
        payload.update({"pi": _plist(pi), "value": value, "nonvanishing": value > 0})
        lines.append(str(value))
    if args.expand or pi is None:
        expansion = plethysm(lam, mu, cap=args.cap)
        payload["expansion"] = expansion.to_json()
        lines.append(" + ".join(f"{c}*s{list(p)}" for p, c in expansion.to_json()) or "0")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_satip(args) -> int:
    try:
        with open(args.polytope) as fh:
            P = RationalPolytope.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read polytope: {exc}") from None
    exists = decide_saturated_ip(P)
    witness = None
    if exists:
        try:
            found = find_integer_point(P)
        except UnboundedError:
            found = None
        witness = None if found is None else list(found)
    payload = {"integer_point_exists": exists, "witness": witness, "contract": CONTRACT,
               "note": CONTRACT_NOTE}
    if args.json:
        print(json.dumps({"version": __version__, **payload}, indent=2))
    else:
        print(json.dumps(payload))
    return EXIT_OK


def cmd_weyl_dim(args) -> int:
    size_cap = args.cap if args.cap is not None else env_cap(WEYL_CAP[0])
    value = weyl_span_dimension(args.lam, args.n, cap=(size_cap, WEYL_CAP[1]))
    _emit(args, {"lambda": _plist(args.lam), "n": args.n, "dimension": value}, str(value))
    return EXIT_OK


def cmd_specht_dim(args) -> int:
    cap = args.cap if args.cap is not None else env_cap(SPECHT_CAP)
    value = specht_span_dimension(args.lam, cap=cap)
    _emit(args, {"lambda": _plist(args.lam), "dimension": value}, str(value))
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    corpus = read_corpus(args.corpus) if args.corpus else None
    reports = [run_suite(s, args.max_size, args.jobs,
                         corpus if s in ("lr-oracle", "saturation", "satip") else None)
               for s in suites]
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps({"version": __version__, "reports": [r.to_json() for r in reports]},
                         indent=2))
    else:
        for r in reports:
            print(r.summary())
    if args.report:
        with open(args.report, "w") as fh:
            json.dump({"version": __version__, "reports": [r.to_json() for r in reports]},
                      fh, indent=2)
    return EXIT_OK if ok else EXIT_DISAGREE


def _add_globals(p, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=default(False),
                   help="machine-readable output")
    p.add_argument("--jobs", type=int, default=default(1), help="worker processes for verify")
    p.add_argument("--max-size", type=int, default=default(8), help="corpus size bound")
    p.add_argument("--cap", type=int, default=default(None),
                   help="resource bound for exponential oracles (env POSLAB_CAP)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="poslab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"poslab {__version__}")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    def triple(p, names=("alpha", "beta", "gamma")):
        for n in names:
            p.add_argument(n, type=_partition)

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient")
    triple(p)
    p.add_argument("--method", choices=("tableau", "hive", "both"), default="tableau")

    triple(add("decide", cmd_decide, "decide c > 0 by LP (no counting)"))

    p = add("hive-count", cmd_hive_count, "lattice points of the hive polytope")
    triple(p)
    p.add_argument("--export", metavar="FILE", help="write the hive polytope as JSON")

    p = add("stretch", cmd_stretch, "stretching values and quasi-polynomial fit")
    p.add_argument("kind", choices=("lr", "kronecker", "plethysm"))
    p.add_argument("partitions", nargs="+", type=_partition)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--detect", action="store_true", help="fit a quasi-polynomial")
    p.add_argument("--max-period", type=int, default=6)
    p.add_argument("--max-degree", type=int, default=8)

    triple(add("kronecker", cmd_kronecker, "Kronecker coefficient (character formula)"))

    p = add("plethysm", cmd_plethysm, "plethysm coefficient / expansion of s_lam[s_mu]")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("pi", type=_partition, nargs="?")
    p.add_argument("--expand", action="store_true", help="print the full Schur expansion")

    p = add("satip", cmd_satip, "saturated integer programming on a polytope JSON file")
    p.add_argument("polytope", metavar="FILE")

    p = add("weyl-dim", cmd_weyl_dim, "rank of the span of e_T")
    p.add_argument("lam", type=_partition)
    p.add_argument("n", type=int)

    p = add("specht-dim", cmd_specht_dim, "rank of the span of f_T")
    p.add_argument("lam", type=_partition)

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--corpus", metavar="FILE", help="JSON lines of LR triples")
    p.add_argument("--report", metavar="FILE", help="also write the JSON report here")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(f"poslab: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, PolytopeError) as exc:
        print(f"poslab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
