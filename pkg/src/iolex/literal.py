"""Text literals for maps, elements, index sets, quotient images, chains and bundles.

Grammar (whitespace-insensitive)::

    element := "[" zmap ("," zmap)* "]"
    zmap    := "{d-:" int "," "d+:" int "," "lo:" int "," "win:[" (entry ("," entry)*)? "]}"
    entry   := int | "_"
    indices := "{" (int ("," int)*)? "}"
    image   := "[" "(" int "," int ")" ("," "(" int "," int ")")* "]"

Serialization is canonical and byte-exact: ``{d-:0, d+:2, lo:1, win:[]}``.
"""

from __future__ import annotations

import re
from typing import Optional

from . import zmap as zm
from .congruence import QuotientImage
from .errors import DimensionMismatch, LiteralSyntaxError
from .product import Element, index_set
from .witness import Chain, Step, WitnessBundle

_TOKEN = re.compile(r"\s*(d-:|d\+:|lo:|win:|-?\d+|[\[\]{}(),_])")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None:
            raise LiteralSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            found = "end of input" if self.peek() is None else repr(self.peek())
            raise LiteralSyntaxError(f"expected {tok!r}, found {found}", self.pos())
        self.i += 1

    def integer(self) -> int:
        tok = self.peek()
        if tok is None or not re.fullmatch(r"-?\d+", tok):
            raise LiteralSyntaxError(f"expected an integer, found {tok!r}", self.pos())
        self.i += 1
        return int(tok)

    def done(self) -> None:
        if self.peek() is not None:
            raise LiteralSyntaxError(f"trailing input {self.peek()!r}", self.pos())

    def zmap(self) -> zm.ZMap:
        self.expect("{")
        self.expect("d-:")
        d_neg = self.integer()
        self.expect(",")
        self.expect("d+:")
        d_pos = self.integer()
        self.expect(",")
        self.expect("lo:")
        lo = self.integer()
        self.expect(",")
        self.expect("win:")
        self.expect("[")
        window = []
        if self.peek() != "]":
            while True:
                if self.peek() == "_":
                    self.i += 1
                    window.append(None)
                else:
                    window.append(self.integer())
                if self.peek() != ",":
                    break
                self.i += 1
        self.expect("]")
        self.expect("}")
        return zm.normalize(d_neg, d_pos, lo, window)

    def element(self) -> Element:
        self.expect("[")
        coords = [self.zmap()]
        while self.peek() == ",":
            self.i += 1
            coords.append(self.zmap())
        self.expect("]")
        return Element(tuple(coords))

    def indices(self) -> frozenset:
        self.expect("{")
        out = []
        if self.peek() != "}":
            out.append(self.integer())
            while self.peek() == ",":
                self.i += 1
                out.append(self.integer())
        self.expect("}")
        return frozenset(out)

    def image(self) -> QuotientImage:
        self.expect("[")
        shifts = []
        while True:
            self.expect("(")
            a = self.integer()
            self.expect(",")
            b = self.integer()
            self.expect(")")
            shifts.append((a, b))
            if self.peek() != ",":
                break
            self.i += 1
        self.expect("]")
        return QuotientImage(tuple(shifts))


def parse_zmap(text: str) -> zm.ZMap:
    p = _Parser(text)
    out = p.zmap()
    p.done()
    return out


def parse(text: str, n: Optional[int] = None) -> Element:
    """Parse an element literal; ``n``, if given, is the required dimension."""
    p = _Parser(text)
    out = p.element()
    p.done()
    if n is not None and out.n != n:
        raise DimensionMismatch(f"expected {n} coordinates, got {out.n}")
    return out


def parse_indices(text: str, n: Optional[int] = None) -> frozenset:
    p = _Parser(text)
    out = p.indices()
    p.done()
    if n is not None:
        index_set(out, n)
    return out


def parse_image(text: str) -> QuotientImage:
    p = _Parser(text)
    out = p.image()
    p.done()
    return out


def serialize_zmap(a: zm.ZMap) -> str:
    win = ",".join("_" if v is None else str(v) for v in a.window)
    return f"{{d-:{a.d_neg}, d+:{a.d_pos}, lo:{a.lo}, win:[{win}]}}"


def serialize(a: Element) -> str:
    return "[" + ", ".join(serialize_zmap(c) for c in a.coords) + "]"


def serialize_indices(indices) -> str:
    return "{" + ",".join(str(i) for i in sorted(indices)) + "}"


def serialize_image(q: QuotientImage) -> str:
    return "[" + ", ".join(f"({a},{b})" for a, b in q.shifts) + "]"


# -- chains ------------------------------------------------------------------
#
#   chain n=<n>
#   seed <element> ; <element>
#   <k> <rule> <ref> [<ref>] [u=<element> v=<element>] => <element> ; <element>

def serialize_chain(chain: Chain) -> str:
    lines = [f"chain n={chain.seed[0].n}",
             f"seed {serialize(chain.seed[0])} ; {serialize(chain.seed[1])}"]
    for k, step in enumerate(chain.steps, 1):
        head = f"{k} {step.rule} " + " ".join(str(r) for r in step.refs)
        if step.rule == "mul":
            head += f" u={serialize(step.left)} v={serialize(step.right)}"
        lines.append(f"{head} => {serialize(step.pair[0])} ; {serialize(step.pair[1])}")
    return "\n".join(lines) + "\n"


def _pair(text: str, n: int) -> tuple:
    left, sep, right = text.partition(";")
    if not sep:
        raise LiteralSyntaxError("expected '<element> ; <element>'")
    return parse(left, n), parse(right, n)


def parse_chain(text: str) -> Chain:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not re.fullmatch(r"chain n=\d+", lines[0]):
        raise LiteralSyntaxError("chain must start with 'chain n=<n>'")
    n = int(lines[0].split("=")[1])
    if len(lines) < 2 or not lines[1].startswith("seed "):
        raise LiteralSyntaxError("missing seed line")
    seed = _pair(lines[1][5:], n)
    steps = []
    for k, line in enumerate(lines[2:], 1):
        head, sep, tail = line.partition("=>")
        if not sep:
            raise LiteralSyntaxError(f"step {k}: missing '=>'")
        pair = _pair(tail, n)
        m = re.fullmatch(r"(\d+)\s+(\w+)\s+([\d\s]+?)\s*(?:u=(.*?)\s+v=(.*))?", head.strip())
        if m is None or int(m.group(1)) != k:
            raise LiteralSyntaxError(f"step {k}: malformed header")
        refs = tuple(int(r) for r in m.group(3).split())
        left = parse(m.group(4), n) if m.group(4) else None
        right = parse(m.group(5), n) if m.group(5) else None
        steps.append(Step(m.group(2), refs, pair, left, right))
    return Chain(seed, tuple(steps))


# -- bundles -----------------------------------------------------------------
#
#   bundle <kind>
#   let <name> = <element>
#   eq <factor> <factor> ... = <name>
#   dset <name> <name> = <indices>

def serialize_bundle(bundle: WitnessBundle) -> str:
    lines = [f"bundle {bundle.kind}"]
    for name, value in bundle.elements.items():
        lines.append(f"let {name} = {serialize(value)}")
    for factors, result in bundle.equations:
        lines.append(f"eq {' '.join(factors)} = {result}")
    for left, right, indices in bundle.dsets:
        lines.append(f"dset {left} {right} = {serialize_indices(indices)}")
    return "\n".join(lines) + "\n"


def parse_bundle(text: str) -> WitnessBundle:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("bundle "):
        raise LiteralSyntaxError("bundle must start with 'bundle <kind>'")
    bundle = WitnessBundle(lines[0].split(None, 1)[1])
    for line in lines[1:]:
        word, _, rest = line.partition(" ")
        lhs, sep, rhs = rest.partition("=")
        if not sep:
            raise LiteralSyntaxError(f"malformed bundle line {line!r}")
        if word == "let":
            bundle.add(lhs.strip(), parse(rhs))
        elif word == "eq":
            bundle.eq(tuple(lhs.split()), rhs.strip())
        elif word == "dset":
            left, right = lhs.split()
            bundle.dsets.append((left, right, parse_indices(rhs)))
        else:
            raise LiteralSyntaxError(f"unknown bundle line {line!r}")
    return bundle
