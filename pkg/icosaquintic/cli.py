"""Command line interface.

Subcommands ``solve``, ``invariant``, ``invert``, ``certify`` and ``bring``
print JSON on standard output. Exit codes: 0 success, 2 degenerate input,
3 convergence failure, 4 usage error.
"""
import argparse as _argparse
import json as _json
import logging as _logging
import sys as _sys
import typing as _typing

from . import bjseries as _bjseries
from . import certify as _certify
from . import icosa as _icosa
from . import invariantmap as _invariantmap
from . import inverter as _inverter
from . import quintic as _quintic
from .contracts import Method, SolveOptions, SolveRequest, to_json
from .errors import AmbiguousPreimage, DegenerateInput, InvalidInput, NoConvergence
from .solver import QuinticSolver

_logger = _logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DEGENERATE = 2
EXIT_CONVERGENCE = 3
EXIT_USAGE = 4


class UsageError(Exception):
    """Malformed arguments or input."""


class _Parser(_argparse.ArgumentParser):
    def error(self, message: str) -> _typing.NoReturn:
        self.print_usage(_sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_complex(text: str) -> complex:
    """Parse ``re,im``, ``re:im`` or a plain real number."""
    parts = text.replace(":", ",").split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise _argparse.ArgumentTypeError(f"Not a complex number: {text!r}")


def parse_coefficients(text: str) -> _typing.List[complex]:
    """Parse five comma-separated coefficients, each real or ``re:im``."""
    items = text.split(",")
    if len(items) != 5:
        raise _argparse.ArgumentTypeError(f"Expected 5 coefficients, got {len(items)}")
    return [parse_complex(item) for item in items]


def _add_solve(sub: _typing.Any) -> None:
    p = sub.add_parser("solve", help="Solve a monic quintic.")
    p.add_argument("--coeffs", type=parse_coefficients, help="a1,...,a5; complex as re:im")
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.ICOSAHEDRAL.value)
    p.add_argument("--tol", type=float, default=SolveOptions().tolerance)
    p.add_argument("--json", action="store_true", help="Read one request from standard input.")
    p.add_argument("--batch", action="store_true", help="Read JSON lines from standard input.")
    p.add_argument("--no-fallback", action="store_true", help="Never substitute the oracle.")
    p.set_defaults(handler=cmd_solve)


def _add_invariant(sub: _typing.Any) -> None:
    p = sub.add_parser("invariant", help="Icosahedral invariants of y⁵ + 5αy² + 5βy + γ.")
    p.add_argument("--alpha", type=parse_complex, required=True)
    p.add_argument("--beta", type=parse_complex, required=True)
    p.add_argument("--gamma", type=parse_complex, required=True)
    p.set_defaults(handler=cmd_invariant)


def _add_invert(sub: _typing.Any) -> None:
    p = sub.add_parser("invert", help="Solve I(z) = Z.")
    p.add_argument("--Z", dest="Z", type=parse_complex, required=True)
    p.set_defaults(handler=cmd_invert)


def _add_certify(sub: _typing.Any) -> None:
    p = sub.add_parser("certify", help="Run the exact identity certificates.")
    p.add_argument("names", nargs="*", help=f"Subset of: {', '.join(_certify.REGISTRY)}")
    p.add_argument("--json", action="store_true", help="Print JSON instead of a table.")
    p.set_defaults(handler=cmd_certify)


def _add_bring(sub: _typing.Any) -> None:
    p = sub.add_parser("bring", help="Series root of y⁵ − y + γ.")
    p.add_argument("--gamma", type=parse_complex, required=True)
    p.add_argument("--plus", action="store_true", help="Solve y⁵ + y + γ instead.")
    p.set_defaults(handler=cmd_bring)


def build_parser() -> _argparse.ArgumentParser:
    parser = _Parser(prog="icosaquintic", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    for add in (_add_solve, _add_invariant, _add_invert, _add_certify, _add_bring):
        add(sub)
    return parser


def _emit(obj: object) -> None:
    print(obj if isinstance(obj, str) else to_json(obj))


_REPORTED = (UsageError, InvalidInput, DegenerateInput, NoConvergence, AmbiguousPreimage)


def _error_code(exc: BaseException) -> int:
    if isinstance(exc, DegenerateInput):
        return EXIT_DEGENERATE
    if isinstance(exc, (NoConvergence, AmbiguousPreimage)):
        return EXIT_CONVERGENCE
    return EXIT_USAGE


def _read_request(text: str) -> SolveRequest:
    try:
        return SolveRequest.from_json(_json.loads(text))
    except (ValueError, TypeError, AttributeError) as exc:
        raise UsageError(f"Malformed request: {exc}") from exc


def cmd_solve(args: _argparse.Namespace) -> int:
    options = SolveOptions(tolerance=args.tol, allow_fallback=not args.no_fallback)
    solver = QuinticSolver(options)
    if args.batch:
        for line in _sys.stdin:
            if not line.strip():
                continue
            try:
                _emit(solver.solve(_read_request(line)).dumps())
            except _REPORTED as exc:
                _logger.error("Request failed: %s", exc)
                _emit({"error": str(exc), "exit_code": _error_code(exc)})
        return EXIT_OK
    if args.json:
        request = _read_request(_sys.stdin.read())
    elif args.coeffs is not None:
        request = SolveRequest(args.coeffs, args.method, args.tol)
    else:
        raise UsageError("solve needs --coeffs, --json or --batch")
    _emit(solver.solve(request).dumps())
    return EXIT_OK


def cmd_invariant(args: _argparse.Namespace) -> int:
    a, b, c = args.alpha, args.beta, args.gamma
    D = complex(_quintic.discriminant_value(a, b, c))
    nab = _quintic.nabla(D)
    z1, z2 = _invariantmap.icosahedral_invariants(a, b, c, nab)
    values = _invariantmap.resolvent_values(a, b, c)
    _emit(
        {
            "D": D,
            "nabla": nab,
            "f1f2": complex(values.f1f2),
            "h1h2": complex(values.h1h2),
            "t1t2": complex(values.t1t2),
            "p": complex(values.p),
            "q": complex(values.q),
            "Z1": complex(z1),
            "Z2": complex(z2),
        }
    )
    return EXIT_OK


def cmd_invert(args: _argparse.Namespace) -> int:
    Z = args.Z
    z = _inverter.invert_icosahedral(Z)
    _emit({"z": z, "I_of_z": _icosa.icos_value(z), "path": _inverter.inversion_path(Z)})
    return EXIT_OK


def cmd_certify(args: _argparse.Namespace) -> int:
    try:
        certificates = _certify.run_certificates(args.names or None)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _emit(certificates)
    else:
        _emit(_certify.format_table(certificates))
    return EXIT_OK if all(c.passed for c in certificates) else 1


def cmd_bring(args: _argparse.Namespace) -> int:
    gamma = args.gamma
    if args.plus:
        root = _bjseries.bring_jerrard_plus_root(gamma)
        res = abs(root**5 + root + gamma)
    else:
        root = _bjseries.bj_root_series(gamma)
        res = _bjseries.residual(root, gamma)
    _emit({"root": root, "residual": res})
    return EXIT_OK


def main(argv: _typing.Optional[_typing.Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _logging.basicConfig(
        stream=_sys.stderr,
        level=_logging.DEBUG if args.verbose else _logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except _REPORTED as exc:
        print(f"icosaquintic: error: {exc}", file=_sys.stderr)
        return _error_code(exc)


if __name__ == "__main__":
    _sys.exit(main())
