"""Command line: ``ospchar {enum-partitions,char,series,verify} ...``.

Every code path writes JSON. Exit codes: 0 ok, 1 a verification failed,
2 usage error, 3 internal error (e.g. an inexact Weyl division).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from collections import Counter
from typing import Callable, Sequence

from . import characters, verify
from .partitions import HookBound, RectBound, enumerate_Br, enumerate_in_hook_by_weight, enumerate_in_rect
from .weyl import WeylDivisionError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

IDENTITIES = ("theorem", "e28", "union", "case1", "case2", "case3", "caseD", "dimsdim", "conjecture")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def parse_ints(text: str) -> list[int]:
    """'3' -> [3]; '1,3' -> [1, 3]; '1..4' -> [1, 2, 3, 4]; mixtures allowed."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        try:
            if ".." in chunk:
                lo, hi = chunk.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(chunk))
        except ValueError:
            raise UsageError(f"cannot read integer list {text!r}") from None
    if not out:
        raise UsageError(f"empty integer list {text!r}")
    return out


def parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        return int(a), int(b)
    except ValueError:
        raise UsageError(f"expected AxB, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ospchar", description=__doc__.splitlines()[0])
    parser.add_argument("--output", help="write JSON here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enum_p = sub.add_parser("enum-partitions", help="enumerate partitions in a rectangle or hook")
    enum_p.add_argument("--rect", help="ROWSxCOLS rectangle")
    enum_p.add_argument("--hook", help="MxN hook; needs --weight")
    enum_p.add_argument("--weight", type=int)
    enum_p.add_argument("--max-part", type=int)
    enum_p.add_argument("--r", type=int, help="restrict a rectangle to B_r")

    for name, helptext in (("char", "build a character sum"), ("series", "t-(super)dimension series")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--family", required=True, choices=[f.value for f in characters.Family])
        for flag in ("m", "n", "k", "p", "r"):
            p.add_argument(f"--{flag}", type=int)
        p.add_argument("--degree", type=int, default=None)
        if name == "series":
            p.add_argument("--mode", choices=[m.value for m in characters.Mode], default="dim")

    ver = sub.add_parser("verify", help="run an identity check over a parameter grid")
    ver.add_argument("--identity", required=True, choices=IDENTITIES)
    for flag in ("m", "n", "k", "p", "r"):
        ver.add_argument(f"--{flag}", help="integer, list 1,2 or range 1..3")
    ver.add_argument("--mn", help="explicit (m,n) pairs, e.g. 2x1,1x2")
    ver.add_argument("--degree", default="8")
    ver.add_argument("--max-weight", default="6")
    ver.add_argument("--deterministic", action="store_true", help="omit timing fields")
    return parser


def _enum(args) -> tuple[str, int]:
    if bool(args.rect) == bool(args.hook):
        raise UsageError("give exactly one of --rect or --hook")
    if args.rect:
        rows, cols = parse_pair(args.rect)
        bound = RectBound(rows, cols)
        labels = enumerate_in_rect(bound) if args.r is None else enumerate_Br(bound, args.r)
    else:
        if args.weight is None:
            raise UsageError("--hook needs --weight")
        m, n = parse_pair(args.hook)
        labels = enumerate_in_hook_by_weight(HookBound(m, n), args.max_part, args.weight)
    return _dump([list(lam) for lam in labels]) + "\n", EXIT_OK


def _character(args):
    return characters.build(args.family, m=args.m, n=args.n, k=args.k, p=args.p, r=args.r, D=args.degree)


def _char(args) -> tuple[str, int]:
    return _dump(_character(args).to_json()) + "\n", EXIT_OK


def _series(args) -> tuple[str, int]:
    if args.degree is None:
        args.degree = 8
    cs = _character(args)
    return _dump(characters.t_series(cs, args.mode, args.degree).to_json()) + "\n", EXIT_OK


def _grid(args) -> list[Callable[[], verify.VerificationReport]]:
    """One thunk per grid instance, in input order."""

    def ints(name, default=None):
        raw = getattr(args, name.replace("-", "_"))
        if raw is None:
            if default is None:
                raise UsageError(f"identity {args.identity} needs --{name}")
            raw = default
        return parse_ints(str(raw))

    ident = args.identity
    jobs = []
    if ident == "theorem":
        for k, p in itertools.product(ints("k"), ints("p")):
            rs = ints("r") if args.r is not None else range(p + 1)
            jobs += [lambda k=k, p=p, r=r: verify.verify_theorem(k, p, r) for r in rs]
    elif ident in ("e28", "union"):
        fn = verify.verify_e28 if ident == "e28" else verify.verify_union_property
        jobs = [lambda k=k, p=p: fn(k, p) for k, p in itertools.product(ints("k"), ints("p"))]
    elif ident in ("case1", "case2", "case3", "caseD"):
        names = {"case1": ("n",), "case2": ("n", "k"), "case3": ("m", "k"), "caseD": ("n", "k")}[ident]
        axes = [ints(name) for name in names] + [ints("p"), ints("degree")]
        for combo in itertools.product(*axes):
            kw = dict(zip(names, combo[:-2]))
            jobs.append(lambda kw=kw, p=combo[-2], D=combo[-1]:
                        verify.verify_superdim_case(ident, p=p, D=D, **kw))
    elif ident == "dimsdim":
        pairs = _pairs(args, ints)
        jobs = [lambda m=m, n=n, w=w: verify.verify_dim_sdim_law(m, n, w)
                for (m, n), w in itertools.product(pairs, ints("max-weight"))]
    else:
        pairs = _pairs(args, ints)
        jobs = [lambda m=m, n=n, p=p, D=D: verify.verify_conjecture_evidence(m, n, p, D)
                for (m, n), p, D in itertools.product(pairs, ints("p"), ints("degree"))]
    if not jobs:
        raise UsageError("empty parameter grid")
    return jobs


def _pairs(args, ints) -> list[tuple[int, int]]:
    if args.mn:
        return [parse_pair(x) for x in args.mn.split(",")]
    return list(itertools.product(ints("m"), ints("n")))


def _verify(args, argv: Sequence[str]) -> tuple[str, int]:
    jobs = _grid(args)
    lines = []
    counts = Counter()
    for job in jobs:
        report = job()
        counts[report.status.value] += 1
        lines.append(_dump(report.to_json(timing=not args.deterministic)))
    summary = {
        "summary": {"instances": len(jobs), **{s.value: counts[s.value] for s in verify.Status}},
        "argv": list(argv),
    }
    lines.append(_dump(summary))
    return "\n".join(lines) + "\n", EXIT_FAIL if counts["fail"] else EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    output = None
    try:
        args = build_parser().parse_args(argv)
        output = args.output
        handler = {"enum-partitions": _enum, "char": _char, "series": _series}.get(args.command)
        text, code = handler(args) if handler else _verify(args, argv)
    except UsageError as exc:
        text, code = _dump({"error": str(exc), "kind": "usage"}) + "\n", EXIT_USAGE
    except WeylDivisionError as exc:
        text, code = _dump({"error": str(exc), "kind": "internal"}) + "\n", EXIT_INTERNAL
    except (ValueError, TypeError) as exc:
        text, code = _dump({"error": str(exc), "kind": "usage"}) + "\n", EXIT_USAGE
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())
