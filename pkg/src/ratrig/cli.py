"""Command line: ``ratrig {triangle,tripod,verify,example}``.

Everything is printed as JSON on stdout; diagnostics go to stderr.
Exit codes: 0 success, 1 a law check or pinned value failed, 2 usage or
configuration error, 3 degenerate geometric input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .affine_trig import VectorTriangle, analyze_triangle
from .canned import EXAMPLES, run_example
from .errors import ConfigError, DegenerateInput, FieldError
from .exactfield import FieldSpec
from .jsonio import dumps, form_in, vector_in
from .projective_trig import Tripod, analyze_tripod
from .sweep import DEFAULT_CAP, exhaustive_sweep, random_sweep

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{what} is not valid JSON: {exc}") from None


def _field(args) -> FieldSpec:
    return FieldSpec.parse(args.field or "rational")


def cmd_triangle(args) -> int:
    spec = _field(args)
    B = form_in(spec, args.form)
    v1 = vector_in(spec, _json_arg(args.v1, "--v1"))
    v2 = vector_in(spec, _json_arg(args.v2, "--v2"))
    if args.v3 is None:
        T = VectorTriangle.from_pair(v1, v2)
    else:
        T = VectorTriangle(v1, v2, vector_in(spec, _json_arg(args.v3, "--v3")))
    report = analyze_triangle(B, T)
    print(dumps(report.to_json()))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_tripod(args) -> int:
    spec = _field(args)
    B = form_in(spec, args.form)
    points = _json_arg(args.points, "--points")
    if not isinstance(points, list) or len(points) != 3:
        raise ConfigError("--points must be a JSON list of three vectors")
    T = Tripod(*(vector_in(spec, p) for p in points))
    report = analyze_tripod(B, T, strict=not args.allow_degenerate)
    print(dumps(report.to_json()))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    if args.exhaustive is not None:
        spec = FieldSpec.prime(args.exhaustive) if _is_int_prime(args.exhaustive) else None
        if spec is None:
            raise ConfigError(f"--exhaustive needs an odd prime, got {args.exhaustive}")
        if args.field is not None and FieldSpec.parse(args.field) != spec:
            raise ConfigError(f"--field {args.field} conflicts with --exhaustive {args.exhaustive}")
        B = form_in(spec, args.form)
        result = exhaustive_sweep(spec, B, cap=args.cap)
    else:
        if args.cases < 1:
            raise ConfigError("--cases must be at least 1")
        if args.seed < 0:
            raise ConfigError("--seed must be non-negative")
        spec = _field(args)
        B = form_in(spec, args.form)
        result = random_sweep(spec, B, args.seed, args.cases)
    print(dumps(result.to_json()))
    return EXIT_OK if result.failures == 0 else EXIT_CHECK_FAILED


def _is_int_prime(p: int) -> bool:
    try:
        FieldSpec.prime(p)
    except FieldError:
        return False
    return True


def cmd_example(args) -> int:
    doc, ok = run_example(args.name, args.Q)
    print(dumps(doc))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratrig",
        description="Exact rational trigonometry over the rationals and prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--field", default=None, help="'rational' (default) or 'prime:<p>'")
        p.add_argument(
            "--form",
            default="euclidean",
            help="'euclidean' (default), 'minkowski', or a JSON 3x3 symmetric matrix",
        )

    p = sub.add_parser("triangle", help="analyze a vector triangle")
    common(p)
    p.add_argument("--v1", required=True, help='JSON vector, e.g. \'["-1","3","-2"]\'')
    p.add_argument("--v2", required=True)
    p.add_argument("--v3", default=None, help="defaults to -(v1 + v2)")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("tripod", help="analyze a projective triangle")
    common(p)
    p.add_argument("--points", required=True, help="JSON list of three vectors")
    p.add_argument(
        "--allow-degenerate",
        action="store_true",
        help="report collinear tripods (quadrances and triple quad check) instead of failing",
    )
    p.set_defaults(func=cmd_tripod)

    p = sub.add_parser("verify", help="check the identity catalogue")
    common(p)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--exhaustive", type=int, default=None, metavar="P",
                   help="enumerate every argument tuple over F_P instead of sampling")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="largest domain enumerated per identity in exhaustive mode")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="replay a worked example")
    p.add_argument("name", help=", ".join(EXAMPLES))
    p.add_argument("--Q", default=None, help="edge quadrance for methane (default 1)")
    p.set_defaults(func=cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateInput as exc:
        print(f"ratrig: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ConfigError, FieldError) as exc:
        print(f"ratrig: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
