"""Text forms for contexts and classes.

Contexts: ``gr:2,5``, ``pn:4``, ``multi:1,2``, ``bundle:m=1;a=1,2``.
Classes: sums and products of integers and atoms, e.g. ``s[2,1]*s[1]``,
``3h``, ``h1*h2^2``, ``2*xi - h``.  Atoms per kind:

* gr: ``s[2,1]``, ``sigma[2,1]``, ``sigma1``/``sigma2`` (special classes)
* pn: ``h``
* multi: ``h1`` .. ``hs``, ``segre``
* bundle: ``h``, ``xi``

``H`` always names the context's default hyperplane class.
"""

from __future__ import annotations

import re

from .cohomology import (
    DEFAULT_CEILING,
    CohomologyContext,
    Grassmannian,
    MultiProjective,
    ProjectiveSpace,
    RingElement,
    SplitProjectiveBundle,
)
from .partitions import Partition


class ParseError(ValueError):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


def parse_context(text: str, ceiling: int = DEFAULT_CEILING) -> CohomologyContext:
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise ParseError(f"context descriptor {text!r} lacks a ':'")
    kind = kind.lower()
    if kind == "gr":
        vals = _ints(body)
        if len(vals) != 2:
            raise ParseError(f"gr needs k,n; got {body!r}")
        return Grassmannian(*vals, ceiling=ceiling)
    if kind == "pn":
        vals = _ints(body)
        if len(vals) != 1:
            raise ParseError(f"pn needs one dimension; got {body!r}")
        return ProjectiveSpace(vals[0], ceiling=ceiling)
    if kind == "multi":
        return MultiProjective(_ints(body), ceiling=ceiling)
    if kind == "bundle":
        fields = {}
        for chunk in body.split(";"):
            key, eq, val = chunk.partition("=")
            if not eq:
                raise ParseError(f"bundle field {chunk!r} is not key=value")
            fields[key.strip()] = val
        if set(fields) != {"m", "a"}:
            raise ParseError("bundle needs exactly the fields m and a")
        m = _ints(fields["m"])
        if len(m) != 1:
            raise ParseError(f"bundle needs a single base dimension m, got {fields['m']!r}")
        return SplitProjectiveBundle(m[0], _ints(fields["a"]), ceiling=ceiling)
    raise ParseError(f"unknown context kind {kind!r}")


def context_descriptor(ctx: CohomologyContext) -> str:
    if isinstance(ctx, Grassmannian):
        return f"gr:{ctx.k},{ctx.n}"
    if isinstance(ctx, ProjectiveSpace):
        return f"pn:{ctx.n}"
    if isinstance(ctx, MultiProjective):
        return "multi:" + ",".join(map(str, ctx.dims))
    if isinstance(ctx, SplitProjectiveBundle):
        return f"bundle:m={ctx.m};a=" + ",".join(map(str, ctx.a))
    raise TypeError(ctx)


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<part>(?:s|sigma)\[[\d,\s]*\])|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {text[pos:]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def _atom(ctx: CohomologyContext, kind: str, tok: str) -> RingElement:
    if tok == "H":
        return ctx.hyperplane()
    if isinstance(ctx, Grassmannian):
        if kind == "part":
            lam = Partition.from_text(tok[tok.index("["):])
            if not ctx.box.fits(lam):
                return ctx.zero()
            return ctx.basis_element(lam)
        m = re.fullmatch(r"sigma(\d+)", tok)
        if m:
            p = int(m.group(1))
            return ctx.schubert(p) if p <= ctx.n - ctx.k else ctx.zero()
    elif isinstance(ctx, ProjectiveSpace):
        if tok == "h":
            return ctx.h(0)
    elif isinstance(ctx, MultiProjective):
        if tok == "segre":
            return ctx.hyperplane()
        m = re.fullmatch(r"h(\d+)", tok)
        if m and 1 <= int(m.group(1)) <= len(ctx.dims):
            return ctx.h(int(m.group(1)) - 1)
    elif isinstance(ctx, SplitProjectiveBundle):
        if tok == "h":
            return ctx.h()
        if tok == "xi":
            return ctx.xi()
    raise ParseError(f"{tok!r} is not a class of {ctx.name}")


def parse_class(ctx: CohomologyContext, text: str) -> RingElement:
    """Parse a class expression into a ring element of ctx."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        val = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = power()
        while True:
            nxt = peek()
            if nxt == ("op", "*"):
                take()
                val = val * power()
            elif nxt[0] in ("part", "name") or nxt == ("op", "("):
                # juxtaposition such as "3h"
                val = val * power()
            else:
                return val

    def power():
        base = factor()
        if peek() == ("op", "^"):
            take()
            kind, tok = take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer")
            return base ** int(tok)
        return base

    def factor():
        kind, tok = take()
        if kind is None:
            raise ParseError("unexpected end of expression")
        if kind == "int":
            return ctx.one() * int(tok)
        if kind in ("part", "name"):
            return _atom(ctx, kind, tok)
        if tok == "(":
            val = expr()
            if take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return val
        raise ParseError(f"unexpected {tok!r}")

    value = expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input near {tokens[pos][1]!r}")
    return value


def parse_hyperplane(ctx: CohomologyContext, text: str) -> RingElement:
    """H descriptors: ``sigma1``, ``3h``, ``segre``, ``xi`` or any class expression."""
    text = text.strip()
    if text.startswith("H="):
        text = text[2:]
    return parse_class(ctx, text)
