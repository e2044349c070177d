"""A small expression language for problems, and its translation to cores.

Grammar (whitespace is ignored)::

    expr  := atom | and(expr, ...) | or(expr, ...)
           | vertpart(expr, expr, ...) | edgepart(expr, expr, ...)
           | graphpart(INT; expr, expr, ...)
    atom  := any | edgeless | atmost(INT) | tree | forest
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import base_cores, combinators
from .core import DynamicCore

ATOMS = ("any", "edgeless", "atmost", "tree", "forest")
COMBINATORS = ("and", "or", "vertpart", "edgepart", "graphpart")
PARTITIONS = ("vertpart", "edgepart", "graphpart")


class ProblemSyntaxError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


@dataclass(frozen=True)
class Problem:
    """A node of a problem expression.

    ``op`` is an atom name or a combinator name; ``p`` is the size bound of
    ``atmost`` or the transversal budget of ``graphpart``.
    """

    op: str
    args: tuple["Problem", ...] = ()
    p: int | None = None

    def __post_init__(self):
        if self.op not in ATOMS + COMBINATORS:
            raise ValueError(f"unknown operator {self.op!r}")
        if self.op in ("atmost", "graphpart") and (self.p is None or self.p < 0):
            raise ValueError(f"{self.op} needs a non-negative integer")
        minimum = 2 if self.op in PARTITIONS else 1 if self.op in COMBINATORS else 0
        if self.op in ATOMS and self.args:
            raise ValueError(f"{self.op} takes no sub-expressions")
        if len(self.args) < minimum:
            raise ValueError(f"{self.op} needs at least {minimum} arguments")

    @property
    def is_partition(self) -> bool:
        return self.op in PARTITIONS

    def __str__(self) -> str:
        if self.op == "atmost":
            return f"atmost({self.p})"
        if self.op in ATOMS:
            return self.op
        inner = ",".join(str(a) for a in self.args)
        if self.op == "graphpart":
            return f"graphpart({self.p}; {inner})"
        return f"{self.op}({inner})"


_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z]+)|(?P<int>-?\d+)|(?P<sym>[(),;]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ProblemSyntaxError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                                     len(text) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ProblemSyntaxError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> int:
        _, text, pos = self.take("int")
        value = int(text)
        if value < 0:
            raise ProblemSyntaxError(f"negative integer {value}", pos)
        return value

    def expr(self) -> Problem:
        _, name, pos = self.take("name")
        if name not in ATOMS + COMBINATORS:
            raise ProblemSyntaxError(f"unknown operator {name!r}", pos)
        if name in ("any", "edgeless", "tree", "forest"):
            return Problem(name)
        self.take("sym", "(")
        if name == "atmost":
            p = self.integer()
            self.take("sym", ")")
            return Problem(name, p=p)
        p = None
        if name == "graphpart":
            p = self.integer()
            self.take("sym", ";")
        args = [self.expr()]
        while self.peek()[:2] == ("sym", ","):
            self.i += 1
            args.append(self.expr())
        self.take("sym", ")")
        minimum = 2 if name in PARTITIONS else 1
        if len(args) < minimum:
            raise ProblemSyntaxError(f"{name} needs at least {minimum} arguments, got {len(args)}", pos)
        return Problem(name, tuple(args), p)


def parse_problem(text: str) -> Problem:
    parser = _Parser(text)
    expr = parser.expr()
    parser.take("end")
    return expr


def preset(spec: str) -> Problem:
    """Named problems: ``3col``, ``vc=<k>``, ``two-trees``, ``arb=<l>``."""
    name, _, arg = spec.partition("=")
    if name == "3col" and not arg:
        return parse_problem("vertpart(edgeless,edgeless,edgeless)")
    if name == "two-trees" and not arg:
        return parse_problem("vertpart(tree,tree)")
    if name in ("vc", "arb") and arg.isdigit():
        k = int(arg)
        if name == "vc":
            return parse_problem(f"vertpart(atmost({k}),edgeless)")
        if k >= 2:
            return parse_problem("edgepart(" + ",".join(["forest"] * k) + ")")
    raise ValueError(f"unknown preset {spec!r}")


def build_core(expr: Problem) -> DynamicCore:
    """Translate an expression into the core that solves it."""
    op = expr.op
    if op == "any":
        return base_cores.any_core()
    if op == "edgeless":
        return base_cores.edgeless_core()
    if op == "atmost":
        return base_cores.bounded_size_core(expr.p)
    if op == "tree":
        return base_cores.tree_core()
    if op == "forest":
        return base_cores.forest_core()
    inner = [build_core(a) for a in expr.args]
    if op == "and":
        return combinators.intersection_core(inner)
    if op == "or":
        return combinators.union_core(inner)
    if op == "vertpart":
        return combinators.vertpart_core(inner)
    if op == "edgepart":
        return combinators.edgepart_core(inner)
    return combinators.graphpart_core(expr.p, inner)
