"""Command-line front end.

Element arguments are either literals (starting with ``[``) or paths to files
holding one literal each.  Exit status: 0 when the command ran (including
negative decisions), 2 for usage errors, 3 for malformed input or invariant
failures.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import congruence as cg
from . import lattice, witness
from .errors import IOLexError
from .literal import (
    parse,
    parse_bundle,
    parse_chain,
    parse_image,
    parse_indices,
    serialize,
    serialize_bundle,
    serialize_chain,
    serialize_image,
    serialize_indices,
)
from .product import d_set, green, product


class InputError(Exception):
    pass


def _text(arg: str) -> str:
    if arg.lstrip().startswith(("[", "{")):
        return arg
    try:
        return Path(arg).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {arg}: {exc.strerror}") from exc


class _Workspace:
    """Fixes ``n`` from ``--n`` or from the first element parsed."""

    def __init__(self, n=None):
        self.n = n

    def element(self, arg):
        x = parse(_text(arg), self.n)
        if self.n is None:
            self.n = x.n
        return x

    def indices(self, arg):
        return parse_indices(arg, self.n)


def _cmd_eval(ws, args, out, parser):
    a = ws.element(args.element)
    coords = [args.coord] if args.coord else range(1, a.n + 1)
    for i in coords:
        v = a[i].eval(args.k)
        out.write(f"{i}: {'undefined' if v is None else v}\n")


def _cmd_compose(ws, args, out, parser):
    out.write(serialize(product(*(ws.element(e) for e in args.elements))) + "\n")


def _cmd_invert(ws, args, out, parser):
    out.write(serialize(ws.element(args.element).inverse()) + "\n")


def _cmd_green(ws, args, out, parser):
    a, b = ws.element(args.a), ws.element(args.b)
    g = green(a, b)
    for name in ("R", "L", "H", "D"):
        out.write(f"{name}: {str(getattr(g, name)).lower()}\n")
    out.write(f"mediator: {serialize(g.mediator)}\n")


def _cmd_decide(ws, args, out, parser):
    a, b = ws.element(args.a), ws.element(args.b)
    if args.relation != "sigma" and args.I is None:
        parser.error(f"decide {args.relation} needs --I")
    if args.relation == "sigma":
        witness_ = cg.sigma_related(a, b)
    elif args.relation == "sigmaI":
        witness_ = cg.sigma_I_related(a, b, ws.indices(args.I))
    elif args.relation == "rhomin":
        witness_ = cg.rho_min_related(a, b, ws.indices(args.I))
    else:
        related = cg.pi_sharp_related(a, b, ws.indices(args.I))
        out.write("related\n" if related else "not related\n")
        return
    if witness_ is None:
        out.write("not related\n")
    else:
        out.write(f"related\nwitness {serialize(witness_)}\n")


def _cmd_quotient(ws, args, out, parser):
    out.write(serialize_image(cg.sigma_quotient(ws.element(args.element))) + "\n")


def _cmd_lift(ws, args, out, parser):
    out.write(serialize(cg.quotient_lift(parse_image(_text(args.image)))) + "\n")


def _cmd_witness(ws, args, out, parser):
    need = 1 if args.kind == "prop4" else 2
    if len(args.elements) != need:
        parser.error(f"witness {args.kind} takes {need} element(s)")
    xs = [ws.element(e) for e in args.elements]
    if args.kind == "lemma1":
        out.write(serialize_bundle(witness.lemma1_witness(*xs)))
    elif args.kind == "lemma2":
        out.write(serialize_bundle(witness.lemma2_witness(*xs)))
    elif args.kind == "prop4":
        out.write(serialize_bundle(witness.prop4_bundle(*xs)))
    else:
        out.write(serialize_chain(witness.transport_idempotent(*xs)))


def _cmd_classify(ws, args, out, parser):
    if not args.elements or len(args.elements) % 2:
        parser.error("classify takes a non-empty, even number of elements")
    xs = [ws.element(e) for e in args.elements]
    result = cg.classify_generated(list(zip(xs[::2], xs[1::2])))
    if not result.below_sigma:
        out.write(f"not below sigma (pair {result.offending + 1})\n")
        return
    out.write(f"congruence {serialize_indices(result.indices)}\n")
    for c in result.chains:
        status = witness.verify_chain(c, d_set(*c.seed))
        out.write(f"# chain {'verified' if status else 'FAILED'}\n")
        out.write(serialize_chain(c))


def _cmd_lattice(ws, args, out, parser):
    n = ws.n
    if args.action == "enum":
        if n is None:
            parser.error("lattice enum needs --n")
        for node in lattice.enumerate_lattice(n):
            covers = " ".join(serialize_indices(c) for c in node.covers)
            out.write(f"{serialize_indices(node.id)} -> {covers}\n".replace(" \n", "\n"))
        return
    if args.I is None or args.J is None:
        parser.error("lattice interval needs --I and --J")
    lower, upper = parse_indices(args.I), parse_indices(args.J)
    if n is None:
        n = max(upper | lower | {1})
    report = lattice.interval_report(lower, upper, args.samples, n, seed=args.seed)
    for line in report.lines():
        out.write(line + "\n")


def _cmd_verify(ws, args, out, parser):
    text = _text(args.file)
    first = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if first == "bundle":
        bundle = parse_bundle(text)
        bad = bundle.failures()
        out.write("verified\n" if not bad else "FAILED\n" + "".join(f"  {b}\n" for b in bad))
        return
    chain = parse_chain(text)
    ambient = parse_indices(args.ambient) if args.ambient is not None else None
    result = witness.verify_chain(chain, ambient)
    if result:
        out.write("verified\n")
    else:
        out.write(f"FAILED at pair {result.step}: {result.reason}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iolex", description=__doc__.split("\n")[0])
    p.add_argument("--n", type=int, default=None, help="number of coordinates")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=argparse.SUPPRESS, help="number of coordinates")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate an element at k in each coordinate")
    s.add_argument("element")
    s.add_argument("k", type=int)
    s.add_argument("--coord", type=int, default=None)

    s = sub.add_parser("compose", parents=[common], help="product, left to right")
    s.add_argument("elements", nargs="+")

    s = sub.add_parser("invert", parents=[common])
    s.add_argument("element")

    s = sub.add_parser("green", parents=[common], help="Green's relations and a D-mediator")
    s.add_argument("a")
    s.add_argument("b")

    s = sub.add_parser("decide", parents=[common], help="decide a congruence and print a witness")
    s.add_argument("relation", choices=["sigma", "sigmaI", "pisharp", "rhomin"])
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--I", default=None, help="index set such as {1,3}")

    s = sub.add_parser("quotient", parents=[common], help="image in Z^(2n)")
    s.add_argument("element")

    s = sub.add_parser("lift", parents=[common], help="canonical preimage of a quotient image")
    s.add_argument("image")

    s = sub.add_parser("witness", parents=[common], help="constructive witness bundles and chains")
    s.add_argument("kind", choices=["lemma1", "lemma2", "prop4", "prop5"])
    s.add_argument("elements", nargs="+")

    s = sub.add_parser("classify", parents=[common], help="classify the congruence generated by pairs a1 b1 a2 b2 ...")
    s.add_argument("elements", nargs="+")

    s = sub.add_parser("lattice", parents=[common], help="congruence lattice below sigma")
    s.add_argument("action", choices=["enum", "interval"])
    s.add_argument("--I", default=None)
    s.add_argument("--J", default=None)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("verify", parents=[common], help="re-verify a chain or bundle file")
    s.add_argument("file")
    s.add_argument("--ambient", default=None)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    ws = _Workspace(args.n)
    handlers = {
        "eval": _cmd_eval,
        "compose": _cmd_compose,
        "invert": _cmd_invert,
        "green": _cmd_green,
        "decide": _cmd_decide,
        "quotient": _cmd_quotient,
        "lift": _cmd_lift,
        "witness": _cmd_witness,
        "classify": _cmd_classify,
        "lattice": _cmd_lattice,
        "verify": _cmd_verify,
    }
    try:
        handlers[args.command](ws, args, out, parser)
    except (IOLexError, InputError) as exc:
        print(f"iolex: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
