"""Batch command line front end.

    raylab alpha K | gamma K | reduce CODE | A CODE
    raylab isect X Y [--signed] | disjoint X Y
    raylab apply ELEM CODE | unicorn A B | fmap CODE
    raylab exp {axis,haction,gaction,formulas,slim,dichotomy,nonrev,oracle} [flags]

Global flags: --window M (default 16, env RAYLAB_WINDOW), --seed S, --csv PATH.
Exit codes: 0 all checks pass, 1 a check failed or a computation error, 2 usage.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass, field

from . import axes, mcg, tight, unicorn
from .codes import format_code, parse
from .errors import CodeSyntaxError, RaylabError
from .experiments import EXPERIMENTS
from .model import build_model


@dataclass
class Command:
    name: str
    args: dict = field(default_factory=dict)
    window: int = 16
    seed: int = 0
    csv: str | None = None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="raylab", description=__doc__)
    default_window = int(os.environ.get("RAYLAB_WINDOW", "16"))
    p.add_argument("--window", type=int, default=default_window)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", default=None)
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("alpha")
    sp.add_argument("k", type=int)
    sp = sub.add_parser("gamma")
    sp.add_argument("k", type=int)
    sp = sub.add_parser("reduce")
    sp.add_argument("code")
    sp = sub.add_parser("A")
    sp.add_argument("code")
    sp = sub.add_parser("isect")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("--signed", action="store_true")
    sp = sub.add_parser("disjoint")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = sub.add_parser("apply")
    sp.add_argument("element")
    sp.add_argument("code")
    sp = sub.add_parser("unicorn")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = sub.add_parser("fmap")
    sp.add_argument("code")
    sp = sub.add_parser("exp")
    sp.add_argument("name", choices=sorted(EXPERIMENTS))
    sp.add_argument("--kmax", type=int, default=None)
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--imax", type=int, default=None)
    sp.add_argument("--maxlen", type=int, default=None)
    return p


def parse_args(argv) -> Command:
    ns = _build_parser().parse_args(argv)
    if ns.cmd in ("alpha", "gamma") and ns.k < 0:
        raise UsageError("k must be nonnegative")
    args = {k: v for k, v in vars(ns).items()
            if k not in ("window", "seed", "csv", "cmd") and v is not None}
    return Command(ns.cmd, args, ns.window, ns.seed, ns.csv)


_ELEMENT_RE = re.compile(r"^([a-z0-9]+)(?:\^(-?\d+))?$")


def parse_element(text: str) -> mcg.MappingClassWord:
    """`h2*h1` style products of named elements with integer powers."""
    word = mcg.MappingClassWord(())
    for factor in text.split("*"):
        m = _ELEMENT_RE.match(factor.strip())
        if not m:
            raise UsageError(f"bad element syntax: {factor!r}")
        base = mcg.named(m.group(1))
        power = int(m.group(2)) if m.group(2) else 1
        if power < 0:
            base, power = mcg.invert(base), -power
        for _ in range(power):
            word = mcg.compose(word, base)
    return word


def run(cmd: Command) -> int:
    model = build_model(cmd.window)
    name = cmd.name
    if name == "exp":
        fn = EXPERIMENTS[cmd.args["name"]]
        kwargs = {k: v for k, v in cmd.args.items() if k != "name"}
        if "nmax" in kwargs and cmd.args["name"] != "gaction":
            kwargs.pop("nmax")
        report = fn(model, seed=cmd.seed, **kwargs)
        print(report.table())
        if cmd.csv:
            report.write_csv(cmd.csv)
        return 0 if report.passed else 1
    if name == "alpha":
        print(format_code(axes.alpha(model, cmd.args["k"])))
    elif name == "gamma":
        print(format_code(axes.gamma(model, cmd.args["k"])))
    elif name == "reduce":
        print(format_code(parse(cmd.args["code"], model)))
    elif name == "A":
        print(axes.a_value(parse(cmd.args["code"], model)))
    elif name == "isect":
        x = parse(cmd.args["x"], model)
        y = parse(cmd.args["y"], model)
        if cmd.args.get("signed"):
            p, n = tight.signed_intersections(model, x, y)
            print(f"{p} {n}")
        else:
            print(tight.geometric_intersection(model, x, y))
    elif name == "disjoint":
        x = parse(cmd.args["x"], model)
        y = parse(cmd.args["y"], model)
        print("true" if tight.are_disjoint(model, x, y) else "false")
    elif name == "apply":
        element = parse_element(cmd.args["element"])
        code = parse(cmd.args["code"], model)
        print(format_code(mcg.apply(element, code, model)))
    elif name == "unicorn":
        a = parse(cmd.args["a"], model)
        b = parse(cmd.args["b"], model)
        for v in unicorn.unicorn_path(model, a, b).vertices:
            print(format_code(v))
    elif name == "fmap":
        print(format_code(unicorn.f_map(model, parse(cmd.args["code"], model))))
    else:  # pragma: no cover
        raise UsageError(f"unknown command {name}")
    return 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_args(argv)
    except (UsageError, CodeSyntaxError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(cmd)
    except (UsageError, CodeSyntaxError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RaylabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
