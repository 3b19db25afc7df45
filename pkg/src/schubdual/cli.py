"""Command line front end.

    schubdual mult <ctx> <expr>
    schubdual chern <ctx>
    schubdual dual <ctx> [k=<int>] [deg=<d1,...>] H=<class>
    schubdual reproduce <target> [--json|--md] [--out <path>]

Exit codes: 0 success, 2 invalid input, 3 degenerate embedding,
4 anchor regression.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import DEFAULT_CEILING, EmbeddingSpec
from .dual import DegenerateEmbeddingError, SectionSpec, dual_profile
from .parse import context_descriptor, parse_class, parse_context, parse_hyperplane
from .report import TARGETS, build, to_json, to_markdown

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_REGRESSION = 0, 2, 3, 4


class UsageError(ValueError):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubdual", description=__doc__.split("\n\n")[0])
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, help="maximum context dimension")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("mult", help="multiply classes in a context")
    m.add_argument("ctx")
    m.add_argument("expr", nargs="+")
    m.add_argument("--json", action="store_true")

    c = sub.add_parser("chern", help="tangent Chern classes of a context")
    c.add_argument("ctx")
    c.add_argument("--json", action="store_true")

    d = sub.add_parser("dual", help="delta sequence, defect and codegree")
    d.add_argument("ctx")
    d.add_argument("options", nargs="*", help="k=<int>, deg=<d1,...>, H=<class>")

    r = sub.add_parser("reproduce", help="regenerate a report")
    r.add_argument("target", choices=TARGETS + ("all",))
    fmt = r.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--md", dest="fmt", action="store_const", const="md")
    r.add_argument("--out")
    r.add_argument("--jobs", type=int, default=1)
    return p


def _dual_section(ctx, options: list[str]) -> SectionSpec:
    k, degs, H = 0, [], None
    for opt in options:
        key, eq, val = opt.partition("=")
        if not eq:
            raise UsageError(f"option {opt!r} must look like key=value")
        if key == "k":
            try:
                k = int(val)
            except ValueError as exc:
                raise UsageError(f"k must be an integer, got {val!r}") from exc
            if k < 0:
                raise UsageError("k must be nonnegative")
        elif key == "deg":
            try:
                degs = [int(x) for x in val.split(",") if x]
            except ValueError as exc:
                raise UsageError(f"deg must list integers, got {val!r}") from exc
        elif key == "H":
            H = parse_hyperplane(ctx, val)
        else:
            raise UsageError(f"unknown option {key!r}")
    spec = EmbeddingSpec(ctx, H if H is not None else ctx.hyperplane())
    return SectionSpec(spec, tuple([1] * k + degs))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "mult":
            ctx = parse_context(args.ctx, args.ceiling)
            value = parse_class(ctx, " ".join(args.expr))
            if args.json:
                print(json.dumps({"context": context_descriptor(ctx), "value": value.to_json()}))
            else:
                print(value.to_text())
            return EXIT_OK

        if args.command == "chern":
            ctx = parse_context(args.ctx, args.ceiling)
            pieces = ctx.tangent_chern()
            if args.json:
                print(json.dumps({"context": context_descriptor(ctx), "chern": [p.to_json() for p in pieces]}))
            else:
                for i, p in enumerate(pieces):
                    print(f"c_{i} = {p.to_text()}")
            return EXIT_OK

        if args.command == "dual":
            ctx = parse_context(args.ctx, args.ceiling)
            section = _dual_section(ctx, args.options)
            try:
                prof = dual_profile(section)
            except DegenerateEmbeddingError as exc:
                print(f"degenerate embedding: {exc}", file=sys.stderr)
                return EXIT_DEGENERATE
            if prof.defect:
                prof.annotations.append(
                    f"dual defective: the dual has codimension {prof.defect + 1}, codegree is its degree"
                )
            if len(prof.delta) > 1:
                prof.annotations.append("delta_j for j >= 1 use binomial weights C(i+1, j+1)")
            print(json.dumps(prof.to_json()))
            return EXIT_OK

        if args.command == "reproduce":
            targets = TARGETS if args.target == "all" else (args.target,)
            fmt = args.fmt or "md"
            chunks, regressions = [], []
            for t in targets:
                report, regs = build(t, jobs=args.jobs)
                regressions += regs
                chunks.append(to_json(report) if fmt == "json" else to_markdown(report))
            _emit("\n".join(chunks), args.out)
            if regressions:
                for r in regressions:
                    print(f"regression: {r}", file=sys.stderr)
                return EXIT_REGRESSION
            return EXIT_OK
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
