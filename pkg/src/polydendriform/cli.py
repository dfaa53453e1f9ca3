"""Command-line front end with JSON input and output.

Exit codes: 0 on success, 1 on a domain error or a failed check, 2 on
malformed input.  Errors are printed as ``{"error": {"type", "message"}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .clans import SEMISTRICT, STRICT, Gamma, Mode, make_team, parse_universe
from .constructs import Construct, count_by_nodes, enumerate_constructs, parse_construct
from .encodings import (
    associahedron_decode,
    associahedron_encode,
    hypercube_decode,
    hypercube_encode,
    permutohedron_decode,
    permutohedron_encode,
)
from .qalgebra import LinearConstruct
from .shuffle import Delegation, shuffle, shuffle_nonrecursive, trio
from .suites import SUITES, run_suite


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


class Labels:
    """Maps user vertex labels to integers and back.

    Integer labels map to themselves; any other labels are numbered in the
    order given, which also fixes their order.
    """

    def __init__(self, labels: Sequence):
        self.names = list(labels)
        if len(set(self.names)) != len(self.names):
            raise MalformedInput("repeated vertex label")
        self.numeric = all(isinstance(x, int) for x in self.names)
        if self.numeric:
            self.to_id = {x: x for x in self.names}
        else:
            self.to_id = {x: i + 1 for i, x in enumerate(self.names)}
        self.to_name = {v: k for k, v in self.to_id.items()}

    @classmethod
    def parse(cls, spec: str) -> Labels:
        spec = spec.strip()
        if ".." in spec:
            lo, _, hi = spec.partition("..")
            try:
                return cls(list(range(int(lo), int(hi) + 1)))
            except ValueError:
                raise MalformedInput(f"bad interval {spec!r}") from None
        items = [s.strip() for s in spec.strip("[]").split(",") if s.strip()]
        if not items:
            raise MalformedInput("empty carrier")
        try:
            return cls([int(s) for s in items])
        except ValueError:
            return cls(items)

    def ids(self) -> list[int]:
        return [self.to_id[x] for x in self.names]

    def name(self, v):
        return self.to_name.get(v, v)

    def construct_json(self, c: Construct) -> dict:
        return {
            "decoration": [self.name(v) for v in c.decoration],
            "children": [self.construct_json(k) for k in c.children],
        }

    def notation(self, c: Construct) -> str:
        if self.numeric:
            return c.notation()
        names = [str(self.name(v)) for v in c.decoration]
        label = "".join(names) if all(len(n) == 1 for n in names) else "{" + ",".join(names) + "}"
        if not c.children:
            return label
        return label + "(" + ",".join(self.notation(k) for k in c.children) + ")"

    def linear_json(self, lc: LinearConstruct) -> list:
        return [
            {"construct": self.construct_json(c), "notation": self.notation(c), "coeff": p.to_json()}
            for c, p in lc.items()
        ]


def _read_json(stream):
    text = stream.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None


def _construct_from(obj) -> Construct:
    if isinstance(obj, str):
        return parse_construct(obj)
    if isinstance(obj, dict) and "decoration" in obj:
        return Construct.from_json(obj)
    raise MalformedInput(f"cannot read a construct from {obj!r}")


def _delegation(payload) -> Delegation:
    if not isinstance(payload, dict) or "universe" not in payload or "parts" not in payload:
        raise MalformedInput('a delegation needs "universe" and "parts"')
    universe = _universe(payload["universe"])
    parts = [_construct_from(p) for p in payload["parts"]]
    whole = payload.get("whole") or sorted(set().union(*(c.carrier for c in parts)))
    mode = payload.get("mode") or ("strict" if isinstance(universe, Gamma) else "semistrict")
    try:
        mode = Mode(mode)
    except ValueError:
        raise MalformedInput(f"unknown mode {mode!r}") from None
    team = make_team(
        universe,
        [c.carrier for c in parts],
        whole,
        mode,
        tags=payload.get("tags"),
        whole_tag=payload.get("whole_tag"),
        ordered=payload.get("ordered"),
    )
    return Delegation(team, tuple(parts))


def _universe(tag: str):
    try:
        return parse_universe(tag)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def _q_label(mode, at_q):
    if at_q is not None:
        return at_q
    return "symbolic" if mode is STRICT else -1


# -- commands ---------------------------------------------------------------

def cmd_enumerate(args, stdin):
    universe = _universe(args.universe)
    labels = Labels.parse(args.carrier)
    h = universe.member(labels.ids(), args.tag)
    if h is None:
        raise LookupError(f"the carrier has no member in {universe.name}")
    cs = [c for c in enumerate_constructs(h) if args.max_nodes is None or c.n_nodes <= args.max_nodes]
    return {
        "universe": universe.name,
        "carrier": labels.names,
        "count": len(cs),
        "constructs": [labels.construct_json(c) for c in cs],
        "notation": [labels.notation(c) for c in cs],
    }


def cmd_counts(args, stdin):
    universe = _universe(args.universe)
    labels = Labels.parse(args.carrier)
    h = universe.member(labels.ids(), args.tag)
    if h is None:
        raise LookupError(f"the carrier has no member in {universe.name}")
    by_nodes = count_by_nodes(h)
    return {"by_nodes": by_nodes, "total": sum(by_nodes)}


def cmd_product(args, stdin):
    d = _delegation(_read_json(stdin))
    q = args.at_q if args.at_q is not None else "auto"
    result = shuffle_nonrecursive(d, q=q) if args.nonrecursive else shuffle(d, q=q)
    labels = Labels(sorted(d.team.whole.carrier))
    return {
        "mode": d.team.mode.value,
        "q": _q_label(d.team.mode, args.at_q),
        "n_terms": len(result),
        "product": labels.linear_json(result),
    }


def cmd_trio(args, stdin):
    d = _delegation(_read_json(stdin))
    q = args.at_q if args.at_q is not None else "auto"
    prec, dot, succ = trio(d, q=q)
    labels = Labels(sorted(d.team.whole.carrier))
    return {
        "mode": d.team.mode.value,
        "q": _q_label(d.team.mode, args.at_q),
        "prec": labels.linear_json(prec),
        "dot": labels.linear_json(dot),
        "succ": labels.linear_json(succ),
    }


def cmd_check(args, stdin):
    universe = _universe(args.universe)
    report = run_suite(args.suite, universe, args.max_carrier, args.seed)
    out = report.to_json()
    out["seed"] = args.seed
    out["max_carrier"] = args.max_carrier
    return out, (0 if report.passed else 1)


def _input_text(args, stdin, name):
    value = getattr(args, name)
    if value is None:
        value = stdin.read().strip()
    if not value:
        raise MalformedInput(f"missing --{name}")
    return value


def cmd_encode(args, stdin):
    labels = Labels.parse(args.carrier)
    c = _construct_from(_input_text(args, stdin, "construct"))
    if sorted(c.carrier) != sorted(labels.ids()):
        raise ValueError("the construct does not live on the carrier")
    if args.format == "packed":
        word = list(permutohedron_encode(c))
    elif args.format == "cubeword":
        word = hypercube_encode(c)
    else:
        word = associahedron_encode(c)
    return {"format": args.format, "carrier": labels.names, "word": word}


def cmd_decode(args, stdin):
    labels = Labels.parse(args.carrier)
    text = _input_text(args, stdin, "word")
    if args.format == "packed":
        try:
            word = [int(x) for x in text.strip("[]()").split(",")]
        except ValueError:
            raise MalformedInput(f"bad packed word {text!r}") from None
        c = permutohedron_decode(word, labels.ids())
    elif args.format == "cubeword":
        c = hypercube_decode(text.replace("•", ".").replace("−", "-"), labels.ids())
    else:
        try:
            tree = json.loads(text)
        except json.JSONDecodeError:
            raise MalformedInput(f"bad tree {text!r}") from None
        c = associahedron_decode(_tuplify(tree), labels.ids())
    return {
        "format": args.format,
        "construct": labels.construct_json(c),
        "notation": labels.notation(c),
    }


def _tuplify(tree):
    if not isinstance(tree, list):
        raise MalformedInput("trees are nested JSON lists")
    return tuple(_tuplify(t) for t in tree)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polydendriform", description="Shuffle products on faces of hypergraph polytopes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def universe_args(sp):
        sp.add_argument("--universe", required=True, help="gamma:K, gamma:inf, frieze, simplex, hypercube, erosohedron")
        sp.add_argument("--carrier", required=True, help="interval 1..5 or a comma-separated list")
        sp.add_argument("--tag", default=None, help="member tag, e.g. eroso or simplex")

    sp = sub.add_parser("enumerate", help="list the constructs of a member")
    universe_args(sp)
    sp.add_argument("--max-nodes", type=int, default=None)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("counts", help="constructs counted by number of nodes")
    universe_args(sp)
    sp.set_defaults(func=cmd_counts)

    for name, func in (("product", cmd_product), ("trio", cmd_trio)):
        sp = sub.add_parser(name, help=f"{name} of a delegation read as JSON on stdin")
        sp.add_argument("--at-q", type=int, default=None, help="evaluate q at this integer")
        if name == "product":
            sp.add_argument("--nonrecursive", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("check", help="run an equation-checking suite")
    sp.add_argument("--suite", required=True, choices=SUITES)
    sp.add_argument("--universe", required=True)
    sp.add_argument("--max-carrier", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_check)

    for name, func, field in (("encode", cmd_encode, "construct"), ("decode", cmd_decode, "word")):
        sp = sub.add_parser(name, help=f"{name} between constructs and classical words or trees")
        sp.add_argument("--format", required=True, choices=("packed", "cubeword", "schroeder"))
        sp.add_argument("--carrier", required=True)
        sp.add_argument(f"--{field}", default=None, help="read from stdin when omitted")
        sp.set_defaults(func=func)
    return p


def _emit(stream, obj) -> None:
    stream.write(json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n")


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args, stdin)
    except MalformedInput as exc:
        _emit(stdout, {"error": {"type": "MalformedInput", "message": str(exc)}})
        return 2
    except (ValueError, LookupError, TypeError) as exc:
        _emit(stdout, {"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    _emit(stdout, result)
    return code


if __name__ == "__main__":
    sys.exit(main())
