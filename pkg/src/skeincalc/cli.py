"""Command-line front end.

Exit codes: 0 success, 1 a verification failed (nonzero identity residual,
unbalanced certificate, aborted reduction), 2 usage or input error.  Results
go to stdout as compact JSON; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .eta import eta_elem
from .identities import IDENTITIES, OutOfRange, sweep
from .reduce_d2 import Certificate, InvalidParams, NonTermination, enumerate_basis, reduce_d2
from .reduce_s2 import generators, reduce_s2
from .relators import RelatorId, SurgeryParams, relator
from .skein import SkeinElement, TermLimitExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _reject_float(text):
    raise ValueError(f"non-integer number {text} in JSON input")


def _load_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except ValueError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None


def _load_element(path: str) -> SkeinElement:
    try:
        return SkeinElement.from_json(_load_json(path))
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write_json(path: str, obj) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump(obj) + "\n")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None


def _parse_range(text: str) -> tuple[str, tuple[int, int]]:
    try:
        key, span = text.split("=", 1)
        lo, hi = span.split(":", 1)
        return key.strip(), (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected key=lo:hi") from None


# -- commands ----------------------------------------------------------


def cmd_verify(args) -> int:
    names = list(IDENTITIES) if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in IDENTITIES:
        raise UsageError(f"--identity: unknown identity {args.identity!r}; known: all, {', '.join(IDENTITIES)}")
    ranges = dict(args.range or [])
    if len(names) > 1 and ranges:
        raise UsageError("--range applies to a single identity")
    reports = []
    for name in names:
        try:
            rep = sweep(name, ranges, jobs=args.jobs)
        except ValueError as exc:
            raise UsageError(f"--range: {exc}") from None
        reports.append(rep)
        status = "ok" if rep.ok else f"{len(rep.failures)} FAILED"
        print(f"{name}: {rep.checked} instances, {status}", file=sys.stderr)
    out = [r.to_json(with_residuals=args.residuals) for r in reports]
    print(_dump(out[0] if len(out) == 1 else out))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_relator(args) -> int:
    k = SurgeryParams.of(args.k)
    if args.family != 12 and k.k3 is None:
        raise UsageError(f"--k: family {args.family} needs three coefficients")
    print(_dump(relator(RelatorId(args.family, tuple(args.n), k)).to_json()))
    return EXIT_OK


def _reduce(args, fn) -> int:
    e = _load_element(args.input)
    result, cert = fn(e, args.k)
    elem = getattr(result, "elem", result)
    if args.cert:
        _write_json(args.cert, cert.to_json())
    print(_dump(elem.to_json()))
    print(f"{len(cert)} certificate steps", file=sys.stderr)
    return EXIT_OK


def cmd_reduce_d2(args) -> int:
    return _reduce(args, reduce_d2)


def cmd_reduce_s2(args) -> int:
    return _reduce(args, reduce_s2)


def cmd_basis(args) -> int:
    monos = enumerate_basis(args.k, args.n3_max)
    print(_dump({"count": len(monos), "monomials": [list(m) for m in monos]}))
    return EXIT_OK


def cmd_generators(args) -> int:
    monos = generators(args.k)
    print(_dump({"count": len(monos), "monomials": [list(m) for m in monos]}))
    return EXIT_OK


def cmd_eta(args) -> int:
    print(_dump(eta_elem(_load_element(args.input), args.k).to_json()))
    return EXIT_OK


def cmd_check_cert(args) -> int:
    source = _load_element(args.input)
    target = _load_element(args.output)
    try:
        cert = Certificate.from_json(_load_json(args.cert))
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"{args.cert}: {exc}") from None
    residual = cert.residual(source, target)
    ok = residual.is_zero()
    out = {"balanced": ok, "steps": len(cert)}
    if not ok:
        out["residual"] = residual.to_json()
    print(_dump(out))
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="skeincalc",
        description="Exact skein module computations for D^2(k1,k2) and S^2(k1,k2,k3).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep an identity over a parameter box")
    v.add_argument("--identity", required=True, help="identity name, or 'all'")
    v.add_argument("--range", nargs="+", type=_parse_range, metavar="KEY=LO:HI")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--residuals", action="store_true", help="include nonzero residuals in the report")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("relator", help="print one relator")
    r.add_argument("--family", type=int, choices=(12, 13, 23), required=True)
    r.add_argument("--n", type=int, nargs=3, required=True, metavar=("N1", "N2", "N3"))
    r.add_argument("--k", type=int, nargs="+", required=True, metavar="K")
    r.set_defaults(func=cmd_relator)

    for name, fn, nk in (("reduce-d2", cmd_reduce_d2, 2), ("reduce-s2", cmd_reduce_s2, 3)):
        c = sub.add_parser(name, help=f"certified reduction with {nk} surgery coefficients")
        c.add_argument("--k", type=int, nargs=nk, required=True, metavar="K")
        c.add_argument("--in", dest="input", required=True, help="element JSON file, or - for stdin")
        c.add_argument("--cert", help="write the certificate JSON here")
        c.set_defaults(func=fn)

    b = sub.add_parser("basis", help="free basis of the D^2 module up to a given n3")
    b.add_argument("--k", type=int, nargs=2, required=True, metavar="K")
    b.add_argument("--n3-max", type=int, required=True)
    b.set_defaults(func=cmd_basis)

    g = sub.add_parser("generators", help="generating box of the S^2 module")
    g.add_argument("--k", type=int, nargs=3, required=True, metavar="K")
    g.set_defaults(func=cmd_generators)

    e = sub.add_parser("eta", help="evaluate the root-of-unity homomorphism")
    e.add_argument("--k", type=int, nargs=3, required=True, metavar="K")
    e.add_argument("--in", dest="input", required=True)
    e.set_defaults(func=cmd_eta)

    cc = sub.add_parser("check-cert", help="re-verify a certificate against an input/output pair")
    cc.add_argument("--in", dest="input", required=True)
    cc.add_argument("--out", dest="output", required=True)
    cc.add_argument("--cert", required=True)
    cc.set_defaults(func=cmd_check_cert)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", None) is not None and args.command == "relator" and len(args.k) not in (2, 3):
        parser.error("--k takes two or three coefficients")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"skeincalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidParams, OutOfRange) as exc:
        print(f"skeincalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonTermination, TermLimitExceeded) as exc:
        print(f"skeincalc: aborted: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
